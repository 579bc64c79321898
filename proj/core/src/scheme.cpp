#include "mchroma/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mchroma {

namespace {

int arc_edges(int n) { return n / 2 - 1; }

std::size_t idx(int k, int n) { return static_cast<std::size_t>(((k % n) + n) % n); }

}  // namespace

const char* to_string(HexagonKind k) {
  switch (k) {
    case HexagonKind::boundary_midpoint:
      return "boundary_midpoint";
    case HexagonKind::vertex_index:
      return "vertex_index";
    case HexagonKind::side_split:
      return "side_split";
  }
  return "?";
}

HexagonKind hexagon_kind_from_string(const std::string& s) {
  if (s == "boundary_midpoint") return HexagonKind::boundary_midpoint;
  if (s == "vertex_index") return HexagonKind::vertex_index;
  if (s == "side_split") return HexagonKind::side_split;
  throw SchemeError("unknown hexagon kind '" + s + "'");
}

HexagonChoice HexagonChoice::midpoint() { return HexagonChoice{}; }

HexagonChoice HexagonChoice::vertex(int i) {
  HexagonChoice c;
  c.kind = HexagonKind::vertex_index;
  c.index = i;
  return c;
}

HexagonChoice HexagonChoice::split(int side, double ratio) {
  HexagonChoice c;
  c.kind = HexagonKind::side_split;
  c.index = side;
  c.ratio = ratio;
  return c;
}

HexagonChoice HexagonChoice::at_arc(int n, double t) {
  const double pos = t * arc_edges(n);
  const double k = std::floor(pos);
  const double frac = pos - k;
  if (frac < 1e-12) return vertex(static_cast<int>(k));
  if (frac > 1.0 - 1e-12) return vertex(static_cast<int>(k) + 1);
  return split(static_cast<int>(k), frac);
}

double HexagonChoice::arc_position(int n) const {
  const int m = arc_edges(n);
  switch (kind) {
    case HexagonKind::boundary_midpoint:
      return 0.5;
    case HexagonKind::vertex_index:
      return static_cast<double>(index) / m;
    case HexagonKind::side_split:
      return (index + ratio) / m;
  }
  return 0.5;
}

bool HexagonChoice::same_placement(const HexagonChoice& o) const {
  if (kind != o.kind || shared_side != o.shared_side) return false;
  switch (kind) {
    case HexagonKind::boundary_midpoint:
      return true;
    case HexagonKind::vertex_index:
      return index == o.index;
    case HexagonKind::side_split:
      return index == o.index && ratio == o.ratio;
  }
  return false;
}

std::string HexagonChoice::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == HexagonKind::vertex_index) os << '(' << index << ')';
  if (kind == HexagonKind::side_split) os << '(' << index << ',' << ratio << ')';
  if (shared_side != 0) os << "@side" << shared_side;
  return os.str();
}

HalfOpenHexagon::HalfOpenHexagon(std::array<Vec2, 6> a, ConvexPolygon poly)
    : a_(a), polygon_(std::move(poly)) {
  for (std::size_t k = 0; k < 6; ++k) {
    const Vec2 e = a_[(k + 1) % 6] - a_[k];
    // Clockwise cycle: the interior is to the right of each edge.
    inward_[k] = normalized(Vec2{e.y, -e.x});
    offset_[k] = dot(inward_[k], a_[k]);
  }
}

HalfOpenHexagon HalfOpenHexagon::from_extra_point(const ConvexPolygon& half_ball, int shared_side,
                                                  Vec2 a1) {
  const int n = static_cast<int>(half_ball.size());
  if (n < 6 || n % 2 != 0) throw SchemeError("half ball must have an even vertex count >= 6");
  if (!a1.finite()) throw SchemeError("extra point is not finite");
  const int m = arc_edges(n);
  auto v = [&](int k) { return half_ball[idx(k, n)]; };

  // Locate a1 on the arc V[s] -> V[s + m] (A2 -> A6), counterclockwise.
  std::optional<double> pos;
  for (int rel = 0; rel < m && !pos; ++rel) {
    const Vec2 p = v(shared_side + rel);
    const Vec2 q = v(shared_side + rel + 1);
    if (point_segment_distance(a1, p, q) <= kEpsGeom) {
      pos = rel + std::clamp(dot(a1 - p, q - p) / dot(q - p, q - p), 0.0, 1.0);
    }
  }
  if (!pos) {
    for (int k = 0; k < n; ++k) {
      if (point_segment_distance(a1, v(k), v(k + 1)) <= kEpsGeom) {
        throw SchemeError("extra point lies on the boundary of C/2 but outside the arc between the shared sides");
      }
    }
    throw SchemeError("extra point is not on the boundary of C/2");
  }
  if (*pos <= kEpsGeom || *pos >= m - kEpsGeom) {
    throw SchemeError("extra point coincides with an endpoint of a shared side (degenerate hexagon)");
  }

  const Vec2 a2 = v(shared_side);
  const Vec2 a3 = v(shared_side - 1);
  const std::array<Vec2, 6> a{a1, a2, a3, -a1, -a2, -a3};
  try {
    auto poly = ConvexPolygon::from_vertices({a[0], a[5], a[4], a[3], a[2], a[1]});
    return HalfOpenHexagon(a, std::move(poly));
  } catch (const GeometryError& e) {
    throw SchemeError(std::string("hexagon is degenerate: ") + e.what());
  }
}

HalfOpenHexagon::Region HalfOpenHexagon::classify(Vec2 p) const {
  std::array<int, 6> near{};
  int n_near = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    const double d = dot(inward_[k], p) - offset_[k];
    if (d < -kEpsGeom) return Region::outside;
    if (d <= kEpsGeom) near[static_cast<std::size_t>(n_near++)] = static_cast<int>(k);
  }
  if (n_near == 0) return Region::interior;
  auto kept = [](bool k) { return k ? Region::kept_boundary : Region::removed_boundary; };
  if (n_near == 1) return kept(edge_kept(near[0]));
  if (n_near == 2) {
    // Adjacent edges k, k+1 meet at vertex k+1 (edges 5 and 0 meet at A1).
    const int lo = near[0];
    const int hi = near[1];
    if (hi == lo + 1) return kept(vertex_kept(hi));
    if (lo == 0 && hi == 5) return kept(vertex_kept(0));
  }
  throw SchemeError("hexagon too small for the boundary tolerance");
}

HalfOpenHexagon build_hexagon(const ConvexPolygon& half_ball, const HexagonChoice& choice) {
  const int n = static_cast<int>(half_ball.size());
  if (n < 6 || n % 2 != 0) throw SchemeError("half ball must have an even vertex count >= 6");
  const int m = arc_edges(n);
  double pos = 0.0;
  switch (choice.kind) {
    case HexagonKind::boundary_midpoint:
      pos = 0.5 * m;
      break;
    case HexagonKind::vertex_index:
      if (choice.index < 1 || choice.index > m - 1) {
        throw SchemeError("vertex_index must lie in [1, " + std::to_string(m - 1) + "] for n = " +
                          std::to_string(n));
      }
      pos = choice.index;
      break;
    case HexagonKind::side_split:
      if (choice.index < 0 || choice.index > m - 1) {
        throw SchemeError("side_split side must lie in [0, " + std::to_string(m - 1) + "] for n = " +
                          std::to_string(n));
      }
      if (!(choice.ratio > 0.0 && choice.ratio < 1.0)) {
        throw SchemeError("side_split ratio must lie in (0, 1)");
      }
      pos = choice.index + choice.ratio;
      break;
  }
  const int k = std::min(static_cast<int>(std::floor(pos)), m - 1);
  const Vec2 p = half_ball[idx(choice.shared_side + k, n)];
  const Vec2 q = half_ball[idx(choice.shared_side + k + 1, n)];
  const Vec2 a1 = (pos == k) ? p : lerp(p, q, pos - k);
  return HalfOpenHexagon::from_extra_point(half_ball, choice.shared_side, a1);
}

CellError::CellError(Vec2 p, int c)
    : std::runtime_error("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") claimed by " +
                         std::to_string(c) + " half-open tiles (expected exactly 1)"),
      point(p),
      claims(c) {}

bool is_supported_n(int n) { return n >= 8 && n <= 22 && n % 2 == 0; }

HexagonChoice default_choice(int n) {
  HexagonChoice c;
  switch (n) {
    case 8:
    case 10:
    case 12:
      c = HexagonChoice::midpoint();
      c.provenance = "published";
      break;
    case 14:
    case 16:
      c = HexagonChoice::vertex(2);
      c.provenance = "search-certified";
      break;
    case 18:
      // No vertex of C/2 clears the v1 neighbor strictly (vertex 2 touches it);
      // this is the best arc position from the search, rounded.
      c = HexagonChoice::split(2, 0.16);
      c.provenance = "search-certified";
      break;
    case 20:
      c = HexagonChoice::split(2, 0.5);
      c.provenance = "search-certified";
      break;
    case 22:
      c = HexagonChoice::split(2, 0.68);
      c.provenance = "published";
      break;
    default:
      c = HexagonChoice::midpoint();
      c.provenance = "experimental-default";
      break;
  }
  return c;
}

ColoringScheme::ColoringScheme(int n, HexagonChoice choice, PolygonalNorm norm, ConvexPolygon half_ball,
                               HalfOpenHexagon hexagon)
    : n_(n),
      choice_(std::move(choice)),
      norm_(std::move(norm)),
      half_ball_(std::move(half_ball)),
      hexagon_(std::move(hexagon)),
      tiling_(hexagon_.a(1) + hexagon_.a(6), hexagon_.a(2) + hexagon_.a(3)),
      colors_(tiling_.b1() * 3.0, tiling_.b2() * 2.0) {
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 3; ++i) {
      coset_reps_[static_cast<std::size_t>(3 * j + i)] = tiling_.point(i, j);
    }
  }
  double r = 0.0;
  for (const auto& a : hexagon_.vertices()) r = std::max(r, length(a));
  search_halfwidth_ = tiling_.inverse_row_norms() * (r + kEpsGeom);
}

ColoringScheme ColoringScheme::build(int n, std::optional<HexagonChoice> choice, BuildOptions options) {
  if (!is_supported_n(n)) {
    if (!options.allow_experimental) {
      throw SchemeError("unsupported polygon size n = " + std::to_string(n) +
                        " (supported: even n in 8..22)");
    }
    if (n < 6 || n % 2 != 0) {
      throw SchemeError("experimental n must be even and >= 6, got " + std::to_string(n));
    }
  }
  HexagonChoice c = choice ? *choice : default_choice(n);
  auto norm = PolygonalNorm::regular(n, kBallCircumradius);
  std::vector<Vec2> half;
  half.reserve(static_cast<std::size_t>(n));
  for (const auto& v : norm.ball().vertices()) half.push_back(v * 0.5);
  auto half_ball = ConvexPolygon::from_vertices(std::move(half));
  auto hex = build_hexagon(half_ball, c);
  return ColoringScheme(n, std::move(c), std::move(norm), std::move(half_ball), std::move(hex));
}

std::string ColoringScheme::id() const { return "n" + std::to_string(n_) + "-" + choice_.describe(); }

TileCell ColoringScheme::cell_of(Vec2 p) const {
  if (!p.finite()) throw CellError(p, 0);
  const Vec2 c = tiling_.coords(p);
  const auto i_lo = static_cast<long>(std::ceil(c.x - search_halfwidth_.x));
  const auto i_hi = static_cast<long>(std::floor(c.x + search_halfwidth_.x));
  const auto j_lo = static_cast<long>(std::ceil(c.y - search_halfwidth_.y));
  const auto j_hi = static_cast<long>(std::floor(c.y + search_halfwidth_.y));
  TileCell found;
  int claims = 0;
  for (long i = i_lo; i <= i_hi; ++i) {
    for (long j = j_lo; j <= j_hi; ++j) {
      const Vec2 center = tiling_.point(static_cast<double>(i), static_cast<double>(j));
      if (hexagon_.contains(p - center)) {
        found = TileCell{i, j, center};
        ++claims;
      }
    }
  }
  if (claims != 1) throw CellError(p, claims);
  return found;
}

int ColoringScheme::color_of_cell(const TileCell& c) {
  const long i = ((c.i % 3) + 3) % 3;
  const long j = ((c.j % 2) + 2) % 2;
  return static_cast<int>(3 * j + i);
}

}  // namespace mchroma
