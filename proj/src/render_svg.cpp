#include "pamcpp/render_svg.hpp"

#include <array>
#include <sstream>

namespace pamcpp {

namespace {

constexpr int kCellPx = 12;

constexpr std::array<const char*, 8> kZoneColors{
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
    "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

constexpr std::array<const char*, 8> kRobotColors{
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
    "#ff7f00", "#a65628", "#f781bf", "#17becf"};

double cx(int x) { return (x + 0.5) * kCellPx; }
double cy(int y) { return (y + 0.5) * kCellPx; }

void polyline(std::ostream& out, const std::vector<Cell>& cells, std::size_t begin,
              std::size_t end, const char* color, const char* cls, bool dashed) {
  out << "  <polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"2\"";
  if (dashed) out << " stroke-dasharray=\"5,4\"";
  out << " points=\"";
  for (std::size_t t = begin; t < end; ++t) {
    if (t > begin) out << ' ';
    out << cx(cells[t].x) << ',' << cy(cells[t].y);
  }
  out << "\"/>\n";
}

}  // namespace

std::string render_svg(const Instance& instance, const FullPlan* plan) {
  const GridMap& map = instance.map;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << map.width * kCellPx
      << "\" height=\"" << map.height * kCellPx << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int y = 0; y < map.height; ++y)
    for (int x = 0; x < map.width; ++x)
      if (map.obstacle[map.index(x, y)])
        out << "  <rect x=\"" << x * kCellPx << "\" y=\"" << y * kCellPx
            << "\" width=\"" << kCellPx << "\" height=\"" << kCellPx
            << "\" fill=\"black\"/>\n";

  for (std::size_t j = 0; j < instance.zones.size(); ++j) {
    const Zone& zone = instance.zones[j];
    const char* color = kZoneColors[j % kZoneColors.size()];
    out << "  <g class=\"zone\">\n";
    double sx = 0.0, sy = 0.0;
    for (Cell c : zone.cells) {
      out << "    <rect x=\"" << c.x * kCellPx << "\" y=\"" << c.y * kCellPx
          << "\" width=\"" << kCellPx << "\" height=\"" << kCellPx << "\" fill=\""
          << color << "\" fill-opacity=\"0.8\"/>\n";
      sx += cx(c.x);
      sy += cy(c.y);
    }
    out << "    <text x=\"" << sx / zone.cells.size() << "\" y=\""
        << sy / zone.cells.size()
        << "\" font-size=\"9\" text-anchor=\"middle\">w=" << zone.weight
        << "</text>\n";
    out << "  </g>\n";
  }

  if (plan) {
    for (std::size_t i = 0; i < plan->paths.size(); ++i) {
      const auto& cells = plan->paths[i].cells;
      const char* color = kRobotColors[i % kRobotColors.size()];
      std::size_t boundary = static_cast<std::size_t>(plan->phase_boundary[i]);
      polyline(out, cells, 0, std::min(boundary, cells.size()), color, "robot-path", false);
      if (boundary < cells.size())
        polyline(out, cells, boundary - 1, cells.size(), color, "robot-path-residual", true);
    }
  }

  for (std::size_t i = 0; i < instance.robots.size(); ++i)
    out << "  <circle cx=\"" << cx(instance.robots[i].x) << "\" cy=\""
        << cy(instance.robots[i].y) << "\" r=\"3.5\" fill=\""
        << kRobotColors[i % kRobotColors.size()] << "\" stroke=\"black\"/>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace pamcpp
