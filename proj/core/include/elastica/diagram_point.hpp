#ifndef ELASTICA_DIAGRAM_POINT_HPP
#define ELASTICA_DIAGRAM_POINT_HPP

#include <string>

namespace elastica {

// Normalized invariant pair of a convex body:
//   x = 4 pi A / P^2   (isoperimetric ratio, <= 1),
//   y = E P / (2 pi^2) (normalized elastic energy, >= 1),
// with x*y >= 1 for every convex body and equality exactly for disks.
struct DiagramPoint {
  double x = 1.0;
  double y = 1.0;
  std::string source;  // "solved mu=...", "family(n=...,a=...)", "reference"
};

}  // namespace elastica

#endif  // ELASTICA_DIAGRAM_POINT_HPP
