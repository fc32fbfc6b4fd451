#include "arcmatch/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arcmatch {
namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 20;

void write_arc(std::ostringstream& out, const Edge& e, int baseline) {
  const int radius = kUnit * (e.right - e.left) / 2;
  out << "    <path data-edge=\"" << e.left << '-' << e.right << "\" d=\"M " << kUnit * e.left << ' ' << baseline
      << " A " << radius << ' ' << radius << " 0 0 1 " << kUnit * e.right << ' ' << baseline << "\"/>\n";
}

}  // namespace

std::string render_svg(const Matching& m, std::span<const Edge> highlight) {
  if (m.empty()) throw Error(ErrorCode::EmptyMatching, "nothing to render");
  std::set<Edge> marked;
  for (const auto& e : highlight) {
    if (!m.has_edge(e)) {
      throw Error(ErrorCode::UnknownEdge,
                  "highlighted edge " + std::to_string(e.left) + "-" + std::to_string(e.right) +
                      " is not in the matching",
                  e.left);
    }
    marked.insert(e);
  }

  int max_radius = 0;
  for (const auto& e : m.edges()) max_radius = std::max(max_radius, kUnit * (e.right - e.left) / 2);
  const int width = kUnit * (m.vertex_count() + 1);
  const int baseline = max_radius + kMargin;
  const int height = baseline + 2 * kMargin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <line x1=\"" << kUnit / 2 << "\" y1=\"" << baseline << "\" x2=\"" << width - kUnit / 2 << "\" y2=\""
      << baseline << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  out << "  <g class=\"arcs\" fill=\"none\" stroke=\"#333333\" stroke-width=\"2\">\n";
  for (const auto& e : m.edges()) {
    if (!marked.contains(e)) write_arc(out, e, baseline);
  }
  out << "  </g>\n";
  if (!marked.empty()) {
    out << "  <g class=\"highlight\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\">\n";
    for (const auto& e : marked) write_arc(out, e, baseline);
    out << "  </g>\n";
  }
  out << "  <g class=\"vertices\" fill=\"#000000\" font-family=\"sans-serif\" font-size=\"12\" "
         "text-anchor=\"middle\">\n";
  for (Vertex v = 1; v <= m.vertex_count(); ++v) {
    out << "    <circle cx=\"" << kUnit * v << "\" cy=\"" << baseline << "\" r=\"4\"/>\n";
    out << "    <text x=\"" << kUnit * v << "\" y=\"" << baseline + kMargin << "\">" << v << "</text>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace arcmatch
