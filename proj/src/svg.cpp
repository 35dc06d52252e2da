#include "maxangle/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace maxangle {

namespace {

struct Frame {
  double min_x, max_y, scale;
  double px(double x) const { return (x - min_x) * scale; }
  double py(double y) const { return (max_y - y) * scale; }  // SVG y grows downward
};

void appendf(std::string& out, const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  out += buf;
}

void append_poly(std::string& out, const PointSet& s, std::span<const int> order,
                 const Frame& f, const char* style) {
  out += "  <polygon points=\"";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vec2 p = to_vec(s.points[order[i]]);
    appendf(out, i ? " %.3f,%.3f" : "%.3f,%.3f", f.px(p.x), f.py(p.y));
  }
  out += "\" ";
  out += style;
  out += "/>\n";
}

}  // namespace

std::string render_svg(const PointSet& s, const CandidateSet& cs, const TheoremReport* rep,
                       const std::string& label) {
  const Circle& c = cs.circle;
  const double margin = 0.12 * c.radius;
  const double world = 2.0 * (c.radius + margin);
  const double side = 640.0;
  const Frame f{c.center.x - c.radius - margin, c.center.y + c.radius + margin, side / world};

  std::string out;
  appendf(out,
          "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
          "viewBox=\"0 0 %.0f %.0f\">\n",
          side, side, side, side);
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  appendf(out,
          "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" stroke=\"#999\" "
          "stroke-width=\"1\"/>\n",
          f.px(c.center.x), f.py(c.center.y), c.radius * f.scale);

  // Arc cut ticks on the circle.
  for (const ArcInterval& arc : cs.arcs) {
    const double a = arc.start_angle;
    const double r0 = c.radius * 0.985, r1 = c.radius * 1.015;
    appendf(out,
            "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#ccc\" "
            "stroke-width=\"0.8\"/>\n",
            f.px(c.center.x + r0 * std::cos(a)), f.py(c.center.y + r0 * std::sin(a)),
            f.px(c.center.x + r1 * std::cos(a)), f.py(c.center.y + r1 * std::sin(a)));
  }

  append_poly(out, s, s.hull, f,
              "fill=\"none\" stroke=\"#bbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
  append_poly(out, s, cs.best_poly().order, f, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");

  // Phi wedge of the pot's maximal pea: two dashed rays from its vertex.
  if (rep && !rep->records.empty()) {
    const PotRecord* top = &rep->records.front();
    for (const PotRecord& r : rep->records)
      if (r.phi_measure > top->phi_measure) top = &r;
    const PeaFan fan = pea_fan(s, top->phi_vertex);
    const Vec2 v = to_vec(s.points[top->phi_vertex]);
    const double len = 0.6 * c.radius;
    const int k = fan.wedge_count();
    for (const double a : {fan.ray_angles[top->phi_wedge],
                           fan.ray_angles[(top->phi_wedge + 1) % k]}) {
      appendf(out,
              "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#d33\" "
              "stroke-width=\"1.2\" stroke-dasharray=\"6 4\"/>\n",
              f.px(v.x), f.py(v.y), f.px(v.x + len * std::cos(a)),
              f.py(v.y + len * std::sin(a)));
    }
  }

  for (int i = 0; i < s.n(); ++i) {
    const Vec2 p = to_vec(s.points[i]);
    const bool internal = s.is_internal(i);
    appendf(out,
            "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"%s\" stroke=\"black\" "
            "stroke-width=\"1.2\"/>\n",
            f.px(p.x), f.py(p.y), internal ? "white" : "black");
  }

  if (!label.empty()) {
    out += "  <text x=\"12\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">";
    out += label;
    out += "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const std::string& svg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write SVG file: " + path);
  out << svg;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace maxangle
