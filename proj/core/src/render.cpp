#include "ppt/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ppt/errors.hpp"

namespace ppt {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string render_svg(const PointSet& ps, const EmbeddedGraph& g, const RenderOptions& options) {
  if (g.vertex_count() != ps.size()) throw PreconditionError("render_svg: graph does not match point set");
  std::vector<double> xs, ys;
  for (const Point& p : ps) {
    xs.push_back(p.x.get_d());
    ys.push_back(p.y.get_d());
  }
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  double w = *xmax - *xmin, h = *ymax - *ymin;
  if (w == 0) w = 1;
  if (h == 0) h = 1;
  const double left = *xmin - 0.1 * w, top = *ymax + 0.1 * h;
  const double scale = options.width / (1.2 * w);
  const double height = 1.2 * h * scale;
  auto sx = [&](std::size_t i) { return num((xs[i] - left) * scale); };
  auto sy = [&](std::size_t i) { return num((top - ys[i]) * scale); };
  const double radius = std::max(3.0, options.width / 100.0);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(options.width) << ' ' << num(height) << "\">\n";
  for (const auto& region : options.shaded) {
    if (region.size() < 3) continue;
    std::vector<Point> pts;
    for (std::size_t i : region) pts.push_back(ps[i]);
    const PointSet sub(std::move(pts));
    out << "  <polygon fill=\"#d0d0d0\" stroke=\"none\" points=\"";
    bool first = true;
    for (std::size_t k : convex_hull(sub)) {
      out << (first ? "" : " ") << sx(region[k]) << ',' << sy(region[k]);
      first = false;
    }
    out << "\"/>\n";
  }
  for (const Edge& e : g.edges())
    out << "  <line x1=\"" << sx(e.i) << "\" y1=\"" << sy(e.i) << "\" x2=\"" << sx(e.j) << "\" y2=\"" << sy(e.j)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out << "  <circle cx=\"" << sx(i) << "\" cy=\"" << sy(i) << "\" r=\"" << num(radius)
        << "\" fill=\"white\" stroke=\"black\"/>\n";
    if (options.labels)
      out << "  <text x=\"" << num((xs[i] - left) * scale + 1.5 * radius) << "\" y=\"" << num((top - ys[i]) * scale - 1.5 * radius)
          << "\" font-size=\"" << num(3 * radius) << "\" font-family=\"sans-serif\">" << i << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ppt
