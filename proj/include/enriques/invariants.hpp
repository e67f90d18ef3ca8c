#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "enriques/chamber.hpp"

namespace enriques {

/// Bound on the l0-coefficient of enumerated classes.
class EnumerationBound {
 public:
  explicit EnumerationBound(long c_max);
  long c_max() const noexcept { return c_max_; }

 private:
  long c_max_;
};

/// Integral class c l0 - sum d_i l_i of Q_S (so sum d_i = 3c).
struct QsClass {
  long c = 0;
  std::array<long, 10> d{};

  long square() const;
  LatticeVector vector() const;
  /// (l0 - sum b_i l_i) . F = c - sum b_i d_i.
  Rational pair_with(const ChamberPoint& p) const;
};

/// Every class of Q_S with 1 <= c <= c_max and square in [min_square, max_square]
/// (max_square < 0 means unbounded). Depth-first over d1..d10 with the
/// Cauchy-Schwarz cut (remaining sum)^2 <= (remaining slots) * (remaining square
/// budget). Ordered by c ascending, then d lexicographically descending.
std::vector<QsClass> enumerate_qs_classes(EnumerationBound bound, long min_square, long max_square);

/// Isotropic classes F = c l0 - sum d_i l_i, 1 <= c <= c_max, in canonical order.
std::vector<LatticeVector> isotropic_enumerate(EnumerationBound bound);

/// Closed form of the Phi-invariant on the closed chamber: b10.
Rational phi_closed_form(const ChamberPoint& p);

struct PhiResult {
  Rational value;
  LatticeVector argmin;
  /// Bound used; the minimum is verified over classes with c <= c_max only.
  long verified_up_to = 0;
  /// True when the tail bound (b.F >= c * mu(b) for F^2 >= 0) rules out any
  /// better class beyond the bound.
  bool certified = false;
};

/// min |b.F| over isotropic F with c <= c_max; throws infeasible_bound for c_max < 3.
PhiResult phi_bruteforce(const ChamberPoint& p, EnumerationBound bound);

enum class NefModel {
  forward_cone,  // F in the closed forward cone (unnodal surface)
  chamber_dual,  // (v_i, F) >= 0 at every extreme point of the chamber
};
const char* to_string(NefModel m);
NefModel parse_nef_model(std::string_view name);

struct CapacityResult {
  Rational value;
  LatticeVector argmin;
  bool certified = false;
};

/// min b.F over nef classes F of Q_S with F^2 >= 2k and 1 <= c <= c_max.
CapacityResult alg_capacity(const ChamberPoint& p, long k, EnumerationBound bound, NefModel model);

/// Lower bound mu(b) with b.F >= c * mu(b) for every F in Q_S with F^2 >= 0 and
/// c > 0, returned as the pair (1/10, t) with mu = 1/10 - sqrt(t).
struct TailBound {
  Rational t;
  /// Exact test of value <= (c_max + 1) * mu.
  bool covers(const Rational& value, long c_max) const;
};
TailBound tail_bound(const ChamberPoint& p);

/// 1 - sum b_i^2: the square of the symplectic radius.
Rational symp_radius_squared(const ChamberPoint& p);

struct KahlerBounds {
  Rational lower;  // Phi
  Rational upper;  // 2 Phi
};
KahlerBounds kahler_bounds(const ChamberPoint& p);

struct WitnessReport {
  Rational s_squared;
  Rational upper_squared;
  Rational margin;  // s_squared - upper_squared
  bool verdict = false;
};

/// Non-Kahler test: 1 - sum b_i^2 > (2 b10)^2, exactly.
WitnessReport non_kahler_witness(const ChamberPoint& p);

struct CapacityEntry {
  long k = 0;
  CapacityResult result;
};

struct InvariantReport {
  ChamberPoint point;
  Rational phi;
  std::vector<CapacityEntry> c_alg;
  Rational s_squared;
  Rational kahler_lower;
  Rational kahler_upper;
  bool non_kahler = false;
};

InvariantReport invariant_report(const ChamberPoint& p, const std::vector<long>& ks, EnumerationBound bound,
                                 NefModel model);

// ---------------------------------------------------------------------------
// Region sampling

struct RegionSample {
  ChamberPoint point;
  WitnessReport report;
};

struct RegionSummary {
  std::size_t count = 0;
  std::size_t witnesses = 0;
  Rational witness_fraction;
};

/// Deterministic sampling of points of the open chamber with denominator
/// `denom`: a seeded random convex combination of a random subset of the ten
/// vertices is rounded to the 1/denom grid, sorted nonincreasing, corrected to
/// sum 3 and kept only if it lies in the chamber. Throws infeasible_bound when
/// no grid point is hit within a bounded number of retries.
RegionSummary sample_region(std::size_t n, std::uint64_t seed, long denom,
                            const std::function<void(const RegionSample&)>& sink);

std::vector<RegionSample> sample_region(std::size_t n, std::uint64_t seed, long denom);

}  // namespace enriques
