#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "delisle/error.hpp"
#include "delisle/graticule.hpp"

namespace delisle {

namespace {

std::string num(double v) {
  auto s = fmt::format("{:.6f}", v);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string path_data(const std::vector<Vertex>& vertices) {
  std::string d;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) d += ' ';
    d += fmt::format("{}{} {}", i == 0 ? 'M' : 'L', num(vertices[i].plane.x),
                     num(-vertices[i].plane.y));
  }
  return d;
}

}  // namespace

std::string write_svg(const Graticule& g, const SvgStyle& style) {
  if (g.empty()) throw Error(ErrorKind::empty_geometry, "graticule has no lines to draw");

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  auto extend = [&](const std::vector<Vertex>& vs) {
    for (const auto& v : vs) {
      min_x = std::min(min_x, v.plane.x);
      max_x = std::max(max_x, v.plane.x);
      min_y = std::min(min_y, -v.plane.y);
      max_y = std::max(max_y, -v.plane.y);
    }
  };
  for (const auto& p : g.parallels) extend(p.vertices);
  for (const auto& m : g.meridians) extend(m.vertices);

  const double width = std::max(max_x - min_x, 1e-9);
  const double height = std::max(max_y - min_y, 1e-9);
  const double mx = 0.02 * width, my = 0.02 * height;
  const double vb_w = width + 2 * mx, vb_h = height + 2 * my;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- Equidistant conic graticule. Plane y is negated so north is up; "
         "units are map units (delta per meridian degree), apex at the origin. -->\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"{} {} {} {}\">\n",
      num(style.width_px), num(style.width_px * vb_h / vb_w), num(min_x - mx), num(min_y - my),
      num(vb_w), num(vb_h));
  out += fmt::format("<g fill=\"none\" stroke=\"{}\" stroke-width=\"{}\">\n",
                     escape_xml(style.stroke), num(style.stroke_width));
  for (const auto& p : g.parallels)
    out += fmt::format("<path class=\"parallel\" d=\"{}\"/>\n", path_data(p.vertices));
  for (const auto& m : g.meridians)
    out += fmt::format("<path class=\"meridian\" d=\"{}\"/>\n", path_data(m.vertices));
  out += "</g>\n";
  out += fmt::format("<g font-family=\"serif\" font-size=\"{}\" fill=\"{}\">\n",
                     num(style.font_size), escape_xml(style.label_fill));
  for (const auto& l : g.labels)
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", num(l.anchor.x), num(-l.anchor.y),
                       escape_xml(l.text));
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace delisle
