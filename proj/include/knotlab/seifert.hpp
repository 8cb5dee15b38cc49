#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotlab/diagram.hpp"

namespace knotlab {

struct SeifertDecomposition {
  int circle_count = 0;
  std::map<int, int> circle_membership;  // edge label -> circle index
  /// One edge per crossing (in crossing order) joining the two circles it touches.
  std::vector<std::pair<int, int>> seifert_graph;
  int genus = 0;

  bool graph_connected() const;
};

/// Oriented smoothing at every crossing. Throws DomainError on invalid input.
SeifertDecomposition seifert_circles(const PlanarDiagram& pd);

enum class CertificateMethod { Alternating, SpanEquality, None };

std::string to_string(CertificateMethod m);

/// Whether the Seifert surface of this particular diagram is certified
/// least genus (hence incompressible).
struct IncompressibilityCertificate {
  CertificateMethod method = CertificateMethod::None;
  int seifert_genus = 0;
  int span_half = 0;
  bool alternating = false;
  bool span_equality = false;  // seifert_genus == span_half

  bool certified() const { return method != CertificateMethod::None; }
};

IncompressibilityCertificate incompressibility_certificate(const PlanarDiagram& pd);

}  // namespace knotlab
