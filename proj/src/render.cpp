#include "gaussweb/render.hpp"

#include <cstdio>

namespace gaussweb {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

}  // namespace

std::string render_svg(const Web& web) {
  const double r = web.radius > 0 ? web.radius : 1.0;
  auto px = [&](Complex z) { return fixed(500.0 + 450.0 * z.real() / r); };
  auto py = [&](Complex z) { return fixed(500.0 - 450.0 * z.imag() / r); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  out += "<style>.re{stroke:#c0392b;fill:none;stroke-width:2}.im{stroke:#2471a3;fill:none;stroke-width:2}"
         ".root{fill:#000}.critical{fill:#fff;stroke:#000;stroke-width:1.5}.label{font:14px sans-serif}</style>\n";
  out += "<circle cx=\"500\" cy=\"500\" r=\"450\" fill=\"none\" stroke=\"#999\"/>\n";
  for (const TracedCurve& c : web.curves) {
    out += "<polyline class=\"";
    out += c.color == Color::Re ? "re" : "im";
    out += "\" points=\"";
    for (std::size_t i = 0; i < c.polyline.size(); ++i) {
      if (i) out += ' ';
      out += px(c.polyline[i]) + "," + py(c.polyline[i]);
    }
    out += "\"/>\n";
  }
  for (const WebNode& n : web.nodes) {
    out += "<circle class=\"";
    out += n.kind == NodeKind::Root ? "root" : "critical";
    out += "\" cx=\"" + px(n.position) + "\" cy=\"" + py(n.position) + "\" r=\"5\"/>\n";
  }
  for (const Leaf& l : web.leaves) {
    const Complex at = l.point * (1.06 * r / std::abs(l.point));
    out += "<text class=\"label\" x=\"" + px(at) + "\" y=\"" + py(at) + "\" text-anchor=\"middle\">";
    out += std::to_string(l.index) + (l.color == Color::Re ? "R" : "I") + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gaussweb
