#ifndef BOXKIT_RENDER_HPP
#define BOXKIT_RENDER_HPP

// Deterministic SVG drawings of 1- and 2-box representations.

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "boxkit/error.hpp"
#include "boxkit/geometry.hpp"
#include "boxkit/graph.hpp"

namespace boxkit {

struct RenderOptions {
  int unit = 40;  // pixels per coordinate step
  int margin = 20;
};

namespace detail {

inline const char* palette(Vertex v) {
  static constexpr std::array<const char*, 10> colors{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[static_cast<std::size_t>(v) % colors.size()];
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace detail

/// Renders `rep` as SVG. Rectangles for d = 2, stacked bars for d = 1.
/// A point-like side still gets a visible width of one unit fraction.
inline std::string render_svg(const Graph& g, const BoxRepresentation& rep, const RenderOptions& opts = {}) {
  if (rep.dim() > 2 || rep.dim() < 1) throw Error(ErrorCode::unsupported, "rendering supports d ≤ 2");
  if (rep.size() != g.n())
    throw Error(ErrorCode::invalid_argument, "representation does not match the graph's vertex count");
  if (opts.unit <= 0 || opts.margin < 0) throw Error(ErrorCode::invalid_argument, "unit must be positive");

  Coord lo[2] = {0, 0}, hi[2] = {0, 0};
  for (int i = 0; i < rep.dim(); ++i) {
    for (Vertex v = 0; v < rep.size(); ++v) {
      lo[i] = v == 0 ? rep[v][i].lo : std::min(lo[i], rep[v][i].lo);
      hi[i] = v == 0 ? rep[v][i].hi : std::max(hi[i], rep[v][i].hi);
    }
  }
  const int u = opts.unit, m = opts.margin;
  const double pad = u / 8.0;  // keeps degenerate sides visible
  auto px = [&](Coord x, int i) { return m + static_cast<double>(x - lo[i]) * u; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  const double width = 2.0 * m + static_cast<double>(hi[0] - lo[0]) * u + 2 * pad;
  const double height =
      rep.dim() == 2 ? 2.0 * m + static_cast<double>(hi[1] - lo[1]) * u + 2 * pad : 2.0 * m + rep.size() * (u / 2.0);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (Vertex v = 0; v < rep.size(); ++v) {
    const Box& b = rep[v];
    const std::string name = detail::xml_escape(g.display_name(v));
    const double x = px(b[0].lo, 0), w = static_cast<double>(b[0].hi - b[0].lo) * u + 2 * pad;
    double y, h;
    if (rep.dim() == 2) {
      // SVG y grows downward; flip so the second coordinate grows upward.
      y = m + static_cast<double>(hi[1] - b[1].hi) * u;
      h = static_cast<double>(b[1].hi - b[1].lo) * u + 2 * pad;
    } else {
      y = m + v * (u / 2.0);
      h = u / 3.0;
    }
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h << "\" fill=\""
       << detail::palette(v) << "\" fill-opacity=\"0.25\" stroke=\"" << detail::palette(v) << "\"/>\n";
    os << "<text x=\"" << x + 2 << "\" y=\"" << y + std::min(h, 12.0) << "\" font-size=\"10\" font-family=\"monospace\">"
       << name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace boxkit

#endif  // BOXKIT_RENDER_HPP
