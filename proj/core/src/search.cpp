#include "mchroma/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "mchroma/verify.hpp"

namespace mchroma {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool feasible(double c) { return c > kEpsSep; }

std::vector<double> evaluate(int n, const Parameterization& param, const std::vector<double>& ts,
                             unsigned threads) {
  std::vector<double> out(ts.size());
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(ts.size())));
  auto work = [&](unsigned w) {
    for (std::size_t k = w; k < ts.size(); k += threads) out[k] = clearance(n, param.choice_at(n, ts[k]));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return out;
}

// bad is infeasible, good is feasible; returns the boundary to kBisectTol.
double bisect(int n, const Parameterization& param, double bad, double good) {
  while (std::abs(good - bad) > kBisectTol) {
    const double mid = 0.5 * (bad + good);
    if (feasible(clearance(n, param.choice_at(n, mid)))) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

ClearanceSample golden_max(int n, const Parameterization& param, double lo, double hi) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double t) { return clearance(n, param.choice_at(n, t)); };
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? ClearanceSample{x1, f1} : ClearanceSample{x2, f2};
}

}  // namespace

const char* to_string(ScanKind k) { return k == ScanKind::arc ? "arc" : "ratio"; }

ScanKind scan_kind_from_string(const std::string& s) {
  if (s == "arc") return ScanKind::arc;
  if (s == "ratio") return ScanKind::ratio;
  throw std::invalid_argument("unknown parameterization '" + s + "' (expected arc or ratio)");
}

HexagonChoice Parameterization::choice_at(int n, double t) const {
  HexagonChoice c = kind == ScanKind::arc ? HexagonChoice::at_arc(n, t) : HexagonChoice::split(side, t);
  c.shared_side = shared_side;
  c.provenance = "scan";
  return c;
}

std::string Parameterization::describe() const {
  std::ostringstream os;
  if (kind == ScanKind::arc) {
    os << "arc position of A1 between A2 and A6";
  } else {
    os << "split ratio on side " << side;
  }
  os << ", shared side " << shared_side;
  return os.str();
}

double clearance(int n, const HexagonChoice& choice) {
  try {
    const auto scheme = ColoringScheme::build(n, choice, BuildOptions{.allow_experimental = true});
    const double reach = 2.0 * sum_polygon(scheme).circumradius();
    // Twice the packing radius, so the nearest non-flat neighbor is always seen.
    return packing_certificate(scheme, 2.0 * reach).min_nonflat_margin();
  } catch (const std::invalid_argument&) {
    return kNegInf;
  }
}

FeasibilityReport scan(int n, const Parameterization& param, int grid_size, unsigned threads) {
  if (grid_size < 3) throw std::invalid_argument("scan: grid_size must be >= 3");
  FeasibilityReport rep;
  rep.n = n;
  rep.param = param;
  rep.grid_size = grid_size;
  std::vector<double> ts(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) ts[static_cast<std::size_t>(k)] = (k + 1.0) / (grid_size + 1.0);
  const auto cs = evaluate(n, param, ts, threads);
  for (std::size_t k = 0; k < ts.size(); ++k) rep.samples.push_back({ts[k], cs[k]});

  // Feasible runs; t = 0 and t = 1 are degenerate and count as infeasible.
  std::size_t k = 0;
  while (k < ts.size()) {
    if (!feasible(cs[k])) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    while (k < ts.size() && feasible(cs[k])) ++k;
    const double bad_lo = start == 0 ? 0.0 : ts[start - 1];
    const double bad_hi = k == ts.size() ? 1.0 : ts[k];
    rep.intervals.push_back({bisect(n, param, bad_lo, ts[start]), bisect(n, param, bad_hi, ts[k - 1])});
  }

  const auto best_it = std::max_element(cs.begin(), cs.end());
  const auto b = static_cast<std::size_t>(best_it - cs.begin());
  rep.best = {ts[b], cs[b]};
  if (std::isfinite(cs[b])) {
    const double lo = b == 0 ? 0.5 * ts[0] : ts[b - 1];
    const double hi = b + 1 == ts.size() ? 0.5 * (1.0 + ts[b]) : ts[b + 1];
    const auto refined = golden_max(n, param, lo, hi);
    if (refined.clearance > rep.best.clearance) rep.best = refined;
  }
  if (feasible(rep.best.clearance)) {
    for (const auto& iv : rep.intervals) {
      if (iv.contains(rep.best.t)) rep.feasible_interval = iv;
    }
  }
  return rep;
}

std::vector<CertifiedDefault> certify_defaults(unsigned threads) {
  std::vector<CertifiedDefault> out;
  for (const int n : {14, 16, 18, 20}) {
    CertifiedDefault cd;
    cd.n = n;
    const int m = n / 2 - 1;
    if (n == 20) {
      for (int j = 0; j < m; ++j) cd.candidates.push_back({HexagonChoice::split(j, 0.5), 0.0});
    } else {
      for (int i = 1; i < m; ++i) cd.candidates.push_back({HexagonChoice::vertex(i), 0.0});
    }
    for (auto& c : cd.candidates) c.clearance = clearance(n, c.choice);
    const auto best = std::max_element(cd.candidates.begin(), cd.candidates.end(),
                                       [](const auto& a, const auto& b) { return a.clearance < b.clearance; });
    if (feasible(best->clearance)) {
      cd.choice = best->choice;
      cd.clearance = best->clearance;
    } else {
      cd.fell_back = true;
      const auto rep = scan(n, Parameterization::arc(), kDefaultGrid, threads);
      // Round the optimum to a two-decimal split ratio when that stays feasible.
      HexagonChoice exact = HexagonChoice::at_arc(n, rep.best.t);
      HexagonChoice rounded = exact;
      if (rounded.kind == HexagonKind::side_split) rounded.ratio = std::round(rounded.ratio * 100.0) / 100.0;
      const double cr = rounded.ratio > 0.0 && rounded.ratio < 1.0 ? clearance(n, rounded) : kNegInf;
      if (feasible(cr)) {
        cd.choice = rounded;
        cd.clearance = cr;
      } else {
        cd.choice = exact;
        cd.clearance = rep.best.clearance;
      }
    }
    cd.choice.provenance = "search-certified";
    const auto scheme = ColoringScheme::build(n, cd.choice);
    if (!packing_certificate(scheme).pass) {
      throw SearchError("no certified hexagon for n = " + std::to_string(n) + " (best clearance " +
                        std::to_string(cd.clearance) + ")");
    }
    out.push_back(std::move(cd));
  }
  return out;
}

}  // namespace mchroma
