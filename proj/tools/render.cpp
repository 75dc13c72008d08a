#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "elastica/special_functions.hpp"

namespace elastica::tools {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// short fixed form for coordinates inside SVG paths
std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

struct ViewBox {
  double x0, y0, w, h;
};

std::string svg_open(const ViewBox& vb) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         coord(vb.x0) + " " + coord(vb.y0) + " " + coord(vb.w) + " " +
         coord(vb.h) + "\">\n";
}

std::string path_from_points(const std::vector<std::array<double, 2>>& pts,
                             bool close, const std::string& style) {
  std::string d = "M " + coord(pts[0][0]) + " " + coord(pts[0][1]);
  for (std::size_t i = 1; i < pts.size(); ++i)
    d += " L " + coord(pts[i][0]) + " " + coord(pts[i][1]);
  if (close) d += " Z";
  return "  <path d=\"" + d + "\" " + style + "/>\n";
}

}  // namespace

std::string shape_csv(const OptimalShape& shape) {
  std::string out = "s,theta,k,x,y\n";
  const std::size_t n = shape.tf.grid.size();
  out.reserve(n * 64);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = shape.tf.grid[i];
    const double k =
        boundary_curvature(shape.params, shape.mode, shape.s1, shape.q, s);
    out += num(s) + "," + num(shape.tf.theta[i]) + "," + num(k) + "," +
           num(shape.poly.vertices[i][0]) + "," +
           num(shape.poly.vertices[i][1]) + "\n";
  }
  return out;
}

std::string diagram_csv(const SweepTable& table) {
  std::string out = "mu,mode,k_M,lambda,s1,L,A,E,objective,x,y,residual_norm\n";
  for (const auto& r : table.rows) {
    out += num(r.mu) + ",";
    out += (r.converged ? to_string(r.mode) : "failed");
    out += "," + num(r.k_max) + "," + num(r.lambda) + "," + num(r.s1) + "," +
           num(r.segment_length) + "," + num(r.area) + "," + num(r.energy) +
           "," + num(r.objective) + "," + num(r.x) + "," + num(r.y) + "," +
           num(r.residual_norm) + "\n";
  }
  return out;
}

std::string shape_svg(const OptimalShape& shape) {
  // SVG y grows downward; flip the second coordinate.
  const auto& verts = shape.poly.vertices;
  std::vector<std::array<double, 2>> pts;
  const std::size_t stride = std::max<std::size_t>(1, verts.size() / 2048);
  for (std::size_t i = 0; i + 1 < verts.size(); i += stride)
    pts.push_back({verts[i][0], -verts[i][1]});

  double x_min = pts[0][0], x_max = pts[0][0];
  double y_min = pts[0][1], y_max = pts[0][1];
  for (const auto& p : pts) {
    x_min = std::min(x_min, p[0]);
    x_max = std::max(x_max, p[0]);
    y_min = std::min(y_min, p[1]);
    y_max = std::max(y_max, p[1]);
  }
  const double margin = 0.05 * std::max(x_max - x_min, y_max - y_min);
  const ViewBox vb{x_min - margin, y_min - margin,
                   (x_max - x_min) + 2 * margin, (y_max - y_min) + 2 * margin};

  std::string svg = svg_open(vb);
  svg += path_from_points(
      pts, true,
      "fill=\"#eef2f7\" stroke=\"#205080\" stroke-width=\"" +
          coord(0.01 * vb.w) + "\"");

  // overlay the straight segments
  if (shape.segment_count() > 0) {
    const double tile = kPi / shape.q;
    const double h = shape.tf.perimeter / (shape.tf.grid.size() - 1);
    for (int t = 0; t < 2 * shape.q; ++t) {
      const double a = t * tile + *shape.s1;
      const double b = a + *shape.segment_length;
      const auto ia = static_cast<std::size_t>(std::ceil(a / h));
      const auto ib = std::min(verts.size() - 1,
                               static_cast<std::size_t>(std::floor(b / h)));
      if (ib <= ia) continue;
      std::vector<std::array<double, 2>> seg{{verts[ia][0], -verts[ia][1]},
                                             {verts[ib][0], -verts[ib][1]}};
      svg += path_from_points(
          seg, false,
          "fill=\"none\" stroke=\"#c03030\" stroke-width=\"" +
              coord(0.015 * vb.w) + "\"");
    }
  }
  svg += "</svg>\n";
  return svg;
}

std::string diagram_svg(const SweepTable& table,
                        const std::vector<DiagramPoint>& families) {
  double y_max = 1.0;
  for (const auto& r : table.rows)
    if (r.converged) y_max = std::max(y_max, r.y);
  for (const auto& p : families) y_max = std::max(y_max, p.y);
  y_max = std::min(y_max * 1.05, 50.0);

  // diagram coordinates: x in [0, 1.05], y in [1, y_max], y flipped
  const double sx = 600.0, sy = 400.0;
  auto px = [&](double x) { return x / 1.05 * sx; };
  auto py = [&](double y) { return sy - (y - 0.95) / (y_max - 0.95) * sy; };

  std::string svg = svg_open({0, 0, sx, sy});

  auto sampled_hyperbola = [&](double c, const std::string& color,
                               const std::string& dash) {
    std::vector<std::array<double, 2>> pts;
    for (int i = 0; i <= 400; ++i) {
      const double x = c / y_max + (1.05 - c / y_max) * i / 400.0;
      const double y = c / x;
      if (y > y_max || x <= 0.0) continue;
      pts.push_back({px(x), py(y)});
    }
    if (pts.size() > 1)
      svg += path_from_points(pts, false,
                              "fill=\"none\" stroke=\"" + color +
                                  "\" stroke-width=\"1\"" + dash);
  };
  sampled_hyperbola(1.0, "#888888", " stroke-dasharray=\"4 3\"");
  const double rho = rho_constant();
  sampled_hyperbola(rho * rho / (kPi * kPi), "#2a9d50",
                    " stroke-dasharray=\"7 3\"");

  // interior family curves, grouped by their n
  std::map<std::string, std::vector<std::array<double, 2>>> curves;
  for (const auto& p : families) {
    const auto cut = p.source.find(",a=");
    const std::string key =
        (cut == std::string::npos) ? p.source : p.source.substr(0, cut);
    if (p.y <= y_max) curves[key].push_back({px(p.x), py(p.y)});
  }
  for (const auto& [key, pts] : curves)
    if (pts.size() > 1)
      svg += path_from_points(pts, false,
                              "fill=\"none\" stroke=\"#8060c0\" "
                              "stroke-width=\"1\"");

  // solved lower boundary locus
  std::vector<std::array<double, 2>> locus;
  for (const auto& r : table.rows)
    if (r.converged && r.y <= y_max) locus.push_back({px(r.x), py(r.y)});
  if (locus.size() > 1)
    svg += path_from_points(
        locus, false, "fill=\"none\" stroke=\"#205080\" stroke-width=\"2\"");
  for (const auto& p : locus)
    svg += "  <circle cx=\"" + coord(p[0]) + "\" cy=\"" + coord(p[1]) +
           "\" r=\"2\" fill=\"#205080\"/>\n";

  svg += "</svg>\n";
  return svg;
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << contents;
  return static_cast<bool>(out);
}

}  // namespace elastica::tools
