#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mchroma/verify.hpp"

namespace mchroma::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  Viewport vp;
  double scale;
  double px(double x) const { return (x - vp.x0) * scale; }
  double py(double y) const { return (vp.y1 - y) * scale; }  // y up
  std::string pt(Vec2 v) const { return num(px(v.x)) + "," + num(py(v.y)); }
};

std::string path(const Frame& f, const std::vector<Vec2>& vs) {
  std::string d = "M";
  for (std::size_t k = 0; k < vs.size(); ++k) d += (k ? " L" : "") + f.pt(vs[k]);
  return d + " Z";
}

bool box_hits(const Viewport& vp, Vec2 c, double r) {
  return c.x + r >= vp.x0 && c.x - r <= vp.x1 && c.y + r >= vp.y0 && c.y - r <= vp.y1;
}

// Lattice points whose r-disk meets the viewport, in (i, j) order.
std::vector<LatticePoint> points_near(const Lattice2& lat, const Viewport& vp, double r) {
  double lo_i = INFINITY, hi_i = -INFINITY, lo_j = INFINITY, hi_j = -INFINITY;
  for (Vec2 corner : {Vec2{vp.x0 - r, vp.y0 - r}, Vec2{vp.x1 + r, vp.y0 - r}, Vec2{vp.x0 - r, vp.y1 + r},
                      Vec2{vp.x1 + r, vp.y1 + r}}) {
    const Vec2 c = lat.coords(corner);
    lo_i = std::min(lo_i, c.x);
    hi_i = std::max(hi_i, c.x);
    lo_j = std::min(lo_j, c.y);
    hi_j = std::max(hi_j, c.y);
  }
  std::vector<LatticePoint> out;
  for (auto i = static_cast<long>(std::floor(lo_i)); i <= static_cast<long>(std::ceil(hi_i)); ++i) {
    for (auto j = static_cast<long>(std::floor(lo_j)); j <= static_cast<long>(std::ceil(hi_j)); ++j) {
      const Vec2 v = lat.point(static_cast<double>(i), static_cast<double>(j));
      if (box_hits(vp, v, r)) out.push_back(LatticePoint{i, j, v});
    }
  }
  return out;
}

std::vector<Vec2> shifted(const std::vector<Vec2>& vs, Vec2 t) {
  std::vector<Vec2> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v + t);
  return out;
}

}  // namespace

std::string render_svg(const ColoringScheme& scheme, const RenderOptions& opt) {
  const Viewport& vp = opt.viewport;
  if (!(std::isfinite(vp.x0) && std::isfinite(vp.y0) && std::isfinite(vp.x1) && std::isfinite(vp.y1)) ||
      !(vp.x1 > vp.x0 && vp.y1 > vp.y0)) {
    throw std::invalid_argument("viewport must be finite with x0 < x1 and y0 < y1");
  }
  if (!(std::isfinite(opt.scale) && opt.scale > 0.0)) throw std::invalid_argument("scale must be positive");
  const Frame f{vp, opt.scale};
  const double w = (vp.x1 - vp.x0) * opt.scale;
  const double h = (vp.y1 - vp.y0) * opt.scale;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\""
     << num(h) << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
     << "<title>" << scheme.id() << "</title>\n"
     << "<g id=\"tiles\" stroke=\"black\" stroke-width=\"0.5\">\n";

  const auto hex = scheme.hexagon().polygon().vertices();
  double hex_r = 0.0;
  for (const auto& a : hex) hex_r = std::max(hex_r, length(a));
  for (const auto& lp : points_near(scheme.tiling(), vp, hex_r)) {
    const TileCell cell{lp.i, lp.j, lp.v};
    const int color = ColoringScheme::color_of_cell(cell);
    os << "<path class=\"tile c" << color << "\" fill=\"" << opt.palette[static_cast<std::size_t>(color)]
       << "\" d=\"" << path(f, shifted(hex, lp.v)) << "\"/>\n";
  }
  os << "</g>\n";

  if (opt.sums) {
    const ConvexPolygon sum = sum_polygon(scheme);
    os << "<g id=\"sums\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (const auto& lp : points_near(scheme.colors(), vp, sum.circumradius())) {
      os << "<path d=\"" << path(f, shifted(sum.vertices(), lp.v)) << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (opt.lines) {
    const double reach = std::hypot(vp.x1 - vp.x0, vp.y1 - vp.y0) + std::hypot(vp.x0, vp.y0) +
                         std::hypot(vp.x1, vp.y1);
    os << "<g id=\"lines\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6 3\">\n";
    for (const auto& r : regression_lines(scheme)) {
      const Vec2 base = r.line.normal * r.line.offset;
      const Vec2 d = perp(r.line.normal);
      os << "<line class=\"" << r.name << "\" x1=\"" << num(f.px(base.x - d.x * reach)) << "\" y1=\""
         << num(f.py(base.y - d.y * reach)) << "\" x2=\"" << num(f.px(base.x + d.x * reach)) << "\" y2=\""
         << num(f.py(base.y + d.y * reach)) << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (opt.lattice) {
    os << "<g id=\"lattice\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (const auto& lp : points_near(scheme.colors(), vp, 0.0)) {
      os << "<circle cx=\"" << num(f.px(lp.v.x)) << "\" cy=\"" << num(f.py(lp.v.y)) << "\" r=\"3\"/>\n";
    }
    const Vec2 o{0.0, 0.0};
    for (const auto& [name, v] : {std::pair{"v1", scheme.colors().b1()}, std::pair{"v2", scheme.colors().b2()}}) {
      os << "<line class=\"" << name << "\" x1=\"" << num(f.px(o.x)) << "\" y1=\"" << num(f.py(o.y))
         << "\" x2=\"" << num(f.px(v.x)) << "\" y2=\"" << num(f.py(v.y)) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mchroma::cli
