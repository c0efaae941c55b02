#include "polypack/svg.hpp"

#include <cstdio>
#include <sstream>

namespace polypack {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

const char* fill_for(int shift) {
  switch (shift) {
    case 0: return "#9ecae1";
    case 1: return "#3182bd";
    case 3: return "#a1d99b";
    case 7: return "#31a354";
    case 15: return "#fdae6b";
    case 31: return "#e6550d";
    default: return "#d9d9d9";
  }
}

std::string points(const Polygon& p, double scale) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += num(p.at(i).x.get_d() * scale) + "," + num(p.at(i).y.get_d() * scale);
  }
  return out;
}

}  // namespace

std::vector<int> shifts_of(const PackingCertificate& cert, const CanonicalFrame& frame) {
  std::vector<int> out;
  for (std::size_t i = 0; i < cert.placements.size(); ++i) {
    int x = static_cast<int>(i) % frame.width, y = static_cast<int>(i) / frame.width;
    Scalar off = cert.placements[i].ty - frame.base(x, y).y;
    Scalar k = off / frame.params.delta;
    out.push_back(frame.phase == 5 && k.get_den() == 1 && k.get_num().fits_sint_p()
                      ? static_cast<int>(k.get_num().get_si())
                      : 0);
  }
  return out;
}

std::string render_svg(const GadgetPolygons& g, const PackingCertificate& cert, const std::vector<int>& shifts,
                       double pixels_per_unit) {
  Box b = bounding_box(g.big);
  for (const Placement& p : cert.placements) {
    Box s = bounding_box(transform(g.small, p));
    b.min_x = std::min(b.min_x, s.min_x);
    b.min_y = std::min(b.min_y, s.min_y);
    b.max_x = std::max(b.max_x, s.max_x);
    b.max_y = std::max(b.max_y, s.max_y);
  }
  const double sc = pixels_per_unit;
  const double margin = 0.05 * sc;
  double x0 = b.min_x.get_d() * sc - margin, y0 = b.min_y.get_d() * sc - margin;
  double w = Scalar(b.max_x - b.min_x).get_d() * sc + 2 * margin;
  double h = Scalar(b.max_y - b.min_y).get_d() * sc + 2 * margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << " " << num(y0) << " " << num(w)
     << " " << num(h) << "\" width=\"" << num(w) << "\" height=\"" << num(h) << "\">\n";
  os << "<g id=\"copies\" stroke=\"#252525\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < cert.placements.size(); ++i) {
    int shift = i < shifts.size() ? shifts[i] : 0;
    os << "<polygon data-copy=\"" << i << "\" data-shift=\"" << shift << "\" fill=\"" << fill_for(shift)
       << "\" points=\"" << points(transform(g.small, cert.placements[i]), sc) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<polygon id=\"big\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" points=\""
     << points(g.big, sc) << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace polypack
