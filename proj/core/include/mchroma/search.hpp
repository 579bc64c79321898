#pragma once

// One-parameter feasibility search over hexagon placements: how much room
// the packing of L' + (C/2 + H) leaves as the extra vertex A1 moves.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mchroma/scheme.hpp"

namespace mchroma {

/// Default grid for scan().
inline constexpr int kDefaultGrid = 512;
/// Bisection tolerance for feasibility interval endpoints, in t.
inline constexpr double kBisectTol = 1e-6;

enum class ScanKind {
  arc,    ///< t = arc position of A1 between A2 and A6
  ratio,  ///< t = split ratio on one fixed side
};
const char* to_string(ScanKind k);
ScanKind scan_kind_from_string(const std::string& s);

struct Parameterization {
  ScanKind kind = ScanKind::arc;
  int side = 2;  ///< ratio scans only
  int shared_side = 0;

  static Parameterization arc() { return {}; }
  static Parameterization ratio(int side) { return {ScanKind::ratio, side, 0}; }

  HexagonChoice choice_at(int n, double t) const;
  std::string describe() const;
};

/// Minimum separation margin between C/2 + H and its translates by
/// non-flat vectors of L' (flat neighbors legitimately touch and are
/// skipped). Negative when some pair overlaps; -infinity when the choice
/// does not produce a valid hexagon.
double clearance(int n, const HexagonChoice& choice);

struct ClearanceSample {
  double t = 0.0;
  double clearance = 0.0;
};

struct FeasibleInterval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double t) const { return lo <= t && t <= hi; }
};

struct FeasibilityReport {
  int n = 0;
  Parameterization param;
  int grid_size = 0;
  std::vector<ClearanceSample> samples;
  /// Every maximal run of t with clearance > kEpsSep, endpoints bisected.
  std::vector<FeasibleInterval> intervals;
  /// The interval containing `best`, if best is feasible.
  std::optional<FeasibleInterval> feasible_interval;
  ClearanceSample best;
};

/// Evaluates clearance at t_k = (k + 1) / (grid_size + 1), brackets and
/// bisects every feasibility change, and refines the best cell by
/// golden-section search. Results do not depend on `threads`.
FeasibilityReport scan(int n, const Parameterization& param, int grid_size = kDefaultGrid,
                       unsigned threads = 1);

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CandidateScore {
  HexagonChoice choice;
  double clearance = 0.0;
};

struct CertifiedDefault {
  int n = 0;
  HexagonChoice choice;
  double clearance = 0.0;
  /// Every vertex (n = 14, 16, 18) or side bisector (n = 20) tried.
  std::vector<CandidateScore> candidates;
  /// True when no candidate cleared kEpsSep and the arc-scan optimum was used.
  bool fell_back = false;
};

/// Search-certified hexagons for n = 14, 16, 18, 20, in that order. Throws
/// SearchError if a returned choice fails packing_certificate.
std::vector<CertifiedDefault> certify_defaults(unsigned threads = 1);

}  // namespace mchroma
