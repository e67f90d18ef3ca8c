#include "enriques/invariants.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "enriques/error.hpp"

namespace enriques {

EnumerationBound::EnumerationBound(long c_max) : c_max_(c_max) {
  if (c_max < 1) throw Error(ErrorKind::invalid_input, "enumeration bound c_max must be >= 1");
}

long QsClass::square() const {
  long s = c * c;
  for (long x : d) s -= x * x;
  return s;
}

LatticeVector QsClass::vector() const {
  std::vector<Rational> coeffs(11);
  coeffs[0] = c;
  for (std::size_t i = 0; i < 10; ++i) coeffs[i + 1] = -d[i];
  return LatticeVector(Basis::L, std::move(coeffs));
}

Rational QsClass::pair_with(const ChamberPoint& p) const {
  Rational v = c;
  for (std::size_t i = 0; i < 10; ++i)
    if (d[i] != 0) v -= p.b[i] * d[i];
  return v;
}

namespace {

struct ClassSearch {
  long c;
  long max_sum_of_squares;  // sum d_i^2 <= c^2 - min_square
  long min_sum_of_squares;  // sum d_i^2 >= c^2 - max_square
  std::array<long, 10> d{};
  std::vector<QsClass>* out;

  void run(std::size_t slot, long remaining_sum, long squares_used) {
    const long budget = max_sum_of_squares - squares_used;
    const long slots = static_cast<long>(10 - slot);
    if (slot == 10) {
      if (remaining_sum == 0 && squares_used >= min_sum_of_squares) out->push_back({c, d});
      return;
    }
    if (remaining_sum * remaining_sum > slots * budget) return;
    const long reach = static_cast<long>(std::sqrt(static_cast<double>(budget))) + 1;
    for (long x = reach; x >= -reach; --x) {
      if (x * x > budget) continue;
      d[slot] = x;
      run(slot + 1, remaining_sum - x, squares_used + x * x);
    }
    d[slot] = 0;
  }
};

}  // namespace

std::vector<QsClass> enumerate_qs_classes(EnumerationBound bound, long min_square, long max_square) {
  std::vector<QsClass> out;
  for (long c = 1; c <= bound.c_max(); ++c) {
    const long hi = c * c - min_square;
    if (hi < 0) continue;
    const long lo = max_square < 0 ? 0 : c * c - max_square;
    ClassSearch search{c, hi, lo, {}, &out};
    search.run(0, 3 * c, 0);
  }
  return out;
}

std::vector<LatticeVector> isotropic_enumerate(EnumerationBound bound) {
  std::vector<LatticeVector> out;
  for (const auto& f : enumerate_qs_classes(bound, 0, 0)) out.push_back(f.vector());
  return out;
}

Rational phi_closed_form(const ChamberPoint& p) {
  if (!in_chamber(p, Region::closed))
    throw Error(ErrorKind::invalid_input, "phi: point " + p.str() + " is not in the closed chamber");
  return p.b[9];
}

bool TailBound::covers(const Rational& value, long c_max) const {
  // value <= (c_max + 1)(1/10 - sqrt(t))  <=>  sqrt(t) <= m with m = 1/10 - value/(c_max+1).
  const Rational m = Rational(1, 10) - value / (c_max + 1);
  return m >= 0 && t <= m * m;
}

TailBound tail_bound(const ChamberPoint& p) {
  Rational sum_sq = 0;
  for (const auto& x : p.b) sum_sq += x * x;
  return {(sum_sq - Rational(9, 10)) / 10};
}

namespace {

// Enumerations are reused across points; keyed by (c_max, min_square, max_square).
std::shared_ptr<const std::vector<QsClass>> cached_classes(EnumerationBound bound, long min_square, long max_square) {
  static std::mutex mu;
  static std::map<std::tuple<long, long, long>, std::shared_ptr<const std::vector<QsClass>>> cache;
  const auto key = std::make_tuple(bound.c_max(), min_square, max_square);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto list = std::make_shared<const std::vector<QsClass>>(enumerate_qs_classes(bound, min_square, max_square));
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(list)).first->second;
}

// p scaled to integers: (b, F) = (c D - sum N_i d_i) / D.
struct ScaledPoint {
  Integer den;
  std::array<Integer, 10> num;

  explicit ScaledPoint(const ChamberPoint& p) : den(common_denominator(p.b)) {
    for (std::size_t i = 0; i < 10; ++i) num[i] = p.b[i] * den;
  }

  Integer pair(const QsClass& f) const {
    Integer v = den * f.c;
    for (std::size_t i = 0; i < 10; ++i)
      if (f.d[i] != 0) v -= num[i] * f.d[i];
    return v;
  }
};

}  // namespace

PhiResult phi_bruteforce(const ChamberPoint& p, EnumerationBound bound) {
  if (!in_chamber(p, Region::closed))
    throw Error(ErrorKind::invalid_input, "phi: point " + p.str() + " is not in the closed chamber");
  const auto list = cached_classes(bound, 0, 0);
  const auto& candidates = *list;
  if (candidates.empty())
    throw Error(ErrorKind::infeasible_bound,
                "phi: no isotropic class with l0-coefficient <= " + std::to_string(bound.c_max()) + " (need >= 3)");
  const ScaledPoint sp(p);
  const QsClass* best = nullptr;
  Integer best_scaled;
  for (const auto& f : candidates) {
    Integer v = abs(sp.pair(f));
    if (!best || v < best_scaled) {
      best = &f;
      best_scaled = v;
    }
  }
  Rational best_value(best_scaled, sp.den);
  best_value.canonicalize();
  const bool certified = tail_bound(p).covers(best_value, bound.c_max());
  return {best_value, best->vector(), bound.c_max(), certified};
}

const char* to_string(NefModel m) { return m == NefModel::forward_cone ? "forward" : "chamber"; }

NefModel parse_nef_model(std::string_view name) {
  if (name == "forward" || name == "forward_cone") return NefModel::forward_cone;
  if (name == "chamber" || name == "chamber_dual") return NefModel::chamber_dual;
  throw Error(ErrorKind::invalid_input, "unknown nef model '" + std::string(name) + "'");
}

namespace {

bool nef_in_model(const QsClass& f, NefModel model) {
  // Enumerated classes have c >= 1 and F^2 >= 0, which is the forward closure
  // condition; the full test is kept since it is cheap next to the search.
  if (model == NefModel::forward_cone) return f.c > 0 && f.square() >= 0;
  static const std::vector<ScaledPoint> ext = [] {
    std::vector<ScaledPoint> v;
    for (const auto& e : extreme_points()) v.emplace_back(e);
    return v;
  }();
  for (const auto& v : ext)
    if (v.pair(f) < 0) return false;
  return true;
}

}  // namespace

CapacityResult alg_capacity(const ChamberPoint& p, long k, EnumerationBound bound, NefModel model) {
  if (k < 0) throw Error(ErrorKind::invalid_input, "capacity index k must be >= 0");
  if (!in_chamber(p, Region::closed))
    throw Error(ErrorKind::invalid_input, "capacity: point " + p.str() + " is not in the closed chamber");
  const QsClass* best_class = nullptr;
  Integer best_scaled;
  const auto list = cached_classes(bound, 2 * k, -1);
  const ScaledPoint sp(p);
  for (const auto& f : *list) {
    if (!nef_in_model(f, model)) continue;
    Integer v = sp.pair(f);
    if (!best_class || v < best_scaled) {
      best_class = &f;
      best_scaled = v;
    }
  }
  if (!best_class)
    throw Error(ErrorKind::infeasible_bound, "capacity: no nef class with F^2 >= " + std::to_string(2 * k) +
                                                 " and l0-coefficient <= " + std::to_string(bound.c_max()));
  Rational best(best_scaled, sp.den);
  best.canonicalize();
  return {best, best_class->vector(), tail_bound(p).covers(best, bound.c_max())};
}

Rational symp_radius_squared(const ChamberPoint& p) {
  Rational s = 1;
  for (const auto& x : p.b) s -= x * x;
  return s;
}

KahlerBounds kahler_bounds(const ChamberPoint& p) {
  const Rational phi = phi_closed_form(p);
  return {phi, 2 * phi};
}

WitnessReport non_kahler_witness(const ChamberPoint& p) {
  WitnessReport r;
  r.s_squared = symp_radius_squared(p);
  r.upper_squared = 4 * p.b[9] * p.b[9];
  r.margin = r.s_squared - r.upper_squared;
  r.verdict = r.margin > 0;
  return r;
}

InvariantReport invariant_report(const ChamberPoint& p, const std::vector<long>& ks, EnumerationBound bound,
                                 NefModel model) {
  InvariantReport r;
  r.point = p;
  r.phi = phi_closed_form(p);
  for (long k : ks) r.c_alg.push_back({k, alg_capacity(p, k, bound, model)});
  const auto kb = kahler_bounds(p);
  r.kahler_lower = kb.lower;
  r.kahler_upper = kb.upper;
  r.s_squared = symp_radius_squared(p);
  r.non_kahler = r.s_squared > r.kahler_upper * r.kahler_upper;
  return r;
}

// ---------------------------------------------------------------------------
// Region sampling

namespace {

constexpr std::size_t kMaxConsecutiveRejections = 10000;

ChamberPoint draw_grid_point(std::mt19937_64& rng, long denom) {
  const auto& vs = extreme_points();
  std::array<Integer, 10> weight;
  Integer total = 0;
  while (total == 0) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const std::uint64_t bits = rng();
      weight[j] = (bits & 1) ? Integer(static_cast<unsigned long>((bits >> 44) + 1)) : Integer(0);
      total += weight[j];
    }
  }
  std::array<long, 10> m{};
  long sum = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    Rational b = 0;
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (weight[j] != 0) b += Rational(weight[j]) * vs[j].b[i];
    b /= Rational(total);
    // Round to the nearest multiple of 1/denom.
    Rational scaled = b * denom + Rational(1, 2);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    m[i] = fl.get_si();
    sum += m[i];
  }
  m[9] += 3 * denom - sum;
  std::sort(m.begin(), m.end(), std::greater<>());
  ChamberPoint p;
  for (std::size_t i = 0; i < 10; ++i) {
    p.b[i] = Rational(m[i], denom);
    p.b[i].canonicalize();
  }
  return p;
}

}  // namespace

RegionSummary sample_region(std::size_t n, std::uint64_t seed, long denom,
                            const std::function<void(const RegionSample&)>& sink) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "sample_region: n must be >= 1");
  if (denom < 1) throw Error(ErrorKind::invalid_input, "sample_region: denom must be >= 1");
  std::mt19937_64 rng(seed);
  RegionSummary summary;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rejections = 0;
    ChamberPoint p = draw_grid_point(rng, denom);
    while (!in_chamber(p, Region::open)) {
      if (++rejections >= kMaxConsecutiveRejections)
        throw Error(ErrorKind::infeasible_bound, "sample_region: denominator " + std::to_string(denom) +
                                                     " did not hit the chamber in " +
                                                     std::to_string(kMaxConsecutiveRejections) + " draws");
      p = draw_grid_point(rng, denom);
    }
    RegionSample s{p, non_kahler_witness(p)};
    ++summary.count;
    if (s.report.verdict) ++summary.witnesses;
    sink(s);
  }
  summary.witness_fraction = Rational(static_cast<long>(summary.witnesses), static_cast<long>(summary.count));
  summary.witness_fraction.canonicalize();
  return summary;
}

std::vector<RegionSample> sample_region(std::size_t n, std::uint64_t seed, long denom) {
  std::vector<RegionSample> out;
  out.reserve(n);
  sample_region(n, seed, denom, [&](const RegionSample& s) { out.push_back(s); });
  return out;
}

}  // namespace enriques
