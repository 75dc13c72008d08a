#ifndef ELASTICA_TOOLS_RENDER_HPP
#define ELASTICA_TOOLS_RENDER_HPP

#include <string>
#include <vector>

#include "elastica/diagram.hpp"
#include "elastica/diagram_point.hpp"
#include "elastica/shooting.hpp"

namespace elastica::tools {

// "s,theta,k,x,y" per grid node, 17 significant digits, no timestamps.
std::string shape_csv(const OptimalShape& shape);

// SweepTable columns: mu,mode,k_M,lambda,s1,L,A,E,objective,x,y,residual_norm.
std::string diagram_csv(const SweepTable& table);

// Closed boundary as one SVG path, straight segments overlaid in red.
std::string shape_svg(const OptimalShape& shape);

// Solved boundary locus, interior family curves and the two reference
// hyperbolas x*y = 1 and x*y = rho^2/pi^2.
std::string diagram_svg(const SweepTable& table,
                        const std::vector<DiagramPoint>& families);

bool write_file(const std::string& path, const std::string& contents);

}  // namespace elastica::tools

#endif  // ELASTICA_TOOLS_RENDER_HPP
