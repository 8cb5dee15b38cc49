#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace knotlab::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; `in` backs the `-` file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for the input digest in reports.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace knotlab::cli
