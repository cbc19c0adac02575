#ifndef PPT_RENDER_HPP
#define PPT_RENDER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ppt/graph.hpp"

namespace ppt {

struct RenderOptions {
  /// Vertex sets drawn as shaded convex regions (rigid components).
  std::vector<std::vector<std::size_t>> shaded;
  double width = 400.0;
  bool labels = true;
};

/// Deterministic SVG of the graph: shaded regions, then edges, then labelled
/// disks. The viewport is the bounding box padded by 10% with y pointing up.
/// Coordinates are converted to doubles only here.
std::string render_svg(const PointSet& ps, const EmbeddedGraph& g, const RenderOptions& options = {});

}  // namespace ppt

#endif  // PPT_RENDER_HPP
