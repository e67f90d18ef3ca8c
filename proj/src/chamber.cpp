#include "enriques/chamber.hpp"

#include <algorithm>
#include <sstream>

#include "enriques/error.hpp"

namespace enriques {

ChamberPoint ChamberPoint::from(std::span<const Rational> coords) {
  if (coords.size() != 10)
    throw Error(ErrorKind::invalid_input, "a chamber point has 10 coordinates, got " + std::to_string(coords.size()));
  ChamberPoint p;
  std::copy(coords.begin(), coords.end(), p.b.begin());
  return p;
}

ChamberPoint ChamberPoint::parse(std::string_view text) { return from(parse_rational_list(text)); }

std::string ChamberPoint::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < 10; ++i) os << (i ? "," : "") << b[i].get_str();
  os << ")";
  return os.str();
}

namespace {

bool cone_inequalities(const Rational& a, std::span<const Rational> b) {
  Rational sum = 0;
  for (const auto& x : b) sum += x;
  if (sum != 3 * a) return false;
  if (b[0] + b[1] + b[2] > a) return false;
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (b[i] < b[i + 1]) return false;
  return true;
}

}  // namespace

bool in_chamber(const ChamberPoint& p, Region region) {
  if (!cone_inequalities(1, p.b)) return false;
  return region == Region::open ? p.b[9] > 0 : p.b[9] >= 0;
}

std::optional<Rational> in_chamber_cone(std::span<const Rational> a_then_b) {
  if (a_then_b.size() != 11) throw Error(ErrorKind::invalid_input, "chamber cone membership needs (a, b1..b10)");
  if (!cone_inequalities(a_then_b[0], a_then_b.subspan(1))) return std::nullopt;
  return a_then_b[0];
}

std::optional<Rational> in_chamber_cone(const LatticeVector& v_l) {
  if (v_l.basis() != Basis::L) throw Error(ErrorKind::basis_mismatch, "chamber cone membership expects basis L");
  std::vector<Rational> ab(11);
  ab[0] = v_l[0];
  for (std::size_t i = 1; i < 11; ++i) ab[i] = -v_l[i];
  return in_chamber_cone(ab);
}

const std::array<ChamberPoint, 9>& vertices() {
  static const std::array<ChamberPoint, 9> v = [] {
    auto make = [](long den, std::array<long, 10> num) {
      ChamberPoint p;
      for (std::size_t i = 0; i < 10; ++i) p.b[i] = Rational(num[i], den);
      for (auto& x : p.b) x.canonicalize();
      return p;
    };
    return std::array<ChamberPoint, 9>{
        make(7, {3, 2, 2, 2, 2, 2, 2, 2, 2, 2}),  make(14, {5, 5, 4, 4, 4, 4, 4, 4, 4, 4}),
        make(21, {7, 7, 7, 6, 6, 6, 6, 6, 6, 6}), make(18, {6, 6, 6, 6, 5, 5, 5, 5, 5, 5}),
        make(15, {5, 5, 5, 5, 5, 4, 4, 4, 4, 4}), make(12, {4, 4, 4, 4, 4, 4, 3, 3, 3, 3}),
        make(9, {3, 3, 3, 3, 3, 3, 3, 2, 2, 2}),  make(6, {2, 2, 2, 2, 2, 2, 2, 2, 1, 1}),
        make(3, {1, 1, 1, 1, 1, 1, 1, 1, 1, 0})};
  }();
  return v;
}

std::vector<ChamberPoint> enumerate_vertices_oracle() {
  // Facets as rows of (coefficients, rhs) for "row . b >= rhs" made tight.
  struct Facet {
    std::array<long, 10> coeff{};
    long rhs = 0;
  };
  std::vector<Facet> facets;
  {
    Facet top;  // 1 - b1 - b2 - b3 >= 0  <=>  -b1-b2-b3 >= -1
    top.coeff[0] = top.coeff[1] = top.coeff[2] = -1;
    top.rhs = -1;
    facets.push_back(top);
  }
  for (std::size_t i = 0; i < 9; ++i) {
    Facet f;
    f.coeff[i] = 1;
    f.coeff[i + 1] = -1;
    facets.push_back(f);
  }
  {
    Facet last;
    last.coeff[9] = 1;
    facets.push_back(last);
  }

  std::vector<ChamberPoint> found;
  const std::size_t n = facets.size();
  for (std::size_t skip1 = 0; skip1 < n; ++skip1)
    for (std::size_t skip2 = skip1 + 1; skip2 < n; ++skip2) {
      linalg::Matrix a;
      std::vector<Rational> rhs;
      a.emplace_back(10, Rational(1));
      rhs.emplace_back(3);
      for (std::size_t f = 0; f < n; ++f) {
        if (f == skip1 || f == skip2) continue;
        a.emplace_back(facets[f].coeff.begin(), facets[f].coeff.end());
        rhs.emplace_back(facets[f].rhs);
      }
      auto sol = linalg::solve(std::move(a), std::move(rhs));
      if (!sol) continue;
      bool feasible = true;
      for (const auto& f : facets) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < 10; ++i) lhs += f.coeff[i] * (*sol)[i];
        if (lhs < f.rhs) feasible = false;
      }
      if (!feasible) continue;
      ChamberPoint p = ChamberPoint::from(*sol);
      if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
    }

  std::sort(found.begin(), found.end(), [](const ChamberPoint& x, const ChamberPoint& y) {
    if (x.b[9] != y.b[9]) return x.b[9] > y.b[9];
    return std::lexicographical_compare(y.b.begin(), y.b.end(), x.b.begin(), x.b.end());
  });
  return found;
}

const std::vector<ChamberPoint>& extreme_points() {
  static const std::vector<ChamberPoint> pts = [] {
    std::vector<ChamberPoint> all(vertices().begin(), vertices().end());
    ChamberPoint equal;
    equal.b.fill(Rational(3, 10));
    all.push_back(equal);
    return all;
  }();
  return pts;
}

// ---------------------------------------------------------------------------
// Reduction

LatticeVector ReductionTrace::replay(const LatticeVector& input_l) const {
  LatticeVector v = sign_flip ? -input_l : input_l;
  for (const auto& root : word) v = reflect(v, root);
  return v * (1 / scale);
}

LatticeVector ReductionTrace::unwind(const LatticeVector& output_l) const {
  LatticeVector v = output_l * scale;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(v, *it);
  return sign_flip ? -v : v;
}

std::size_t ReductionTrace::cremona_moves() const {
  return static_cast<std::size_t>(
      std::count_if(word.begin(), word.end(), [](const ReflectionDescriptor& d) { return d.root()[0] != 0; }));
}

namespace {

LatticeVector transposition_root(std::size_t i, std::size_t j) { return classes::l(i) - classes::l(j); }

LatticeVector cremona_root(std::size_t i, std::size_t j, std::size_t k) {
  return classes::l(0) - classes::l(i) - classes::l(j) - classes::l(k);
}

}  // namespace

Reduction reduce(const LatticeVector& input, bool normalize) {
  LatticeVector v = input;
  if (v.basis() == Basis::E) v = psi(v);
  if (v.basis() != Basis::L) throw Error(ErrorKind::basis_mismatch, "reduce expects a vector in basis L or E");
  v = v.free_part();
  if (pairing(v, classes::k()) != 0)
    throw Error(ErrorKind::invalid_input, "reduce: vector is not orthogonal to k, so it is not in Q_S");
  if (v.is_zero()) throw Error(ErrorKind::invalid_input, "reduce: zero vector");
  if (square(v) < 0) throw Error(ErrorKind::invalid_input, "reduce: vector has negative square");

  const Integer denom = common_denominator(v.coeffs());
  // Working copy: a = w[0], b_i = -w[i].
  std::array<Integer, 11> w;
  for (std::size_t i = 0; i < 11; ++i) w[i] = Integer(v[i] * denom);

  ReductionTrace trace;
  if (w[0] < 0) {
    trace.sign_flip = true;
    for (auto& x : w) x = -x;
  }

  auto b = [&](std::size_t i) -> Integer { return -w[i]; };
  while (true) {
    // Stable descending sort of b1..b10 by adjacent transpositions.
    for (std::size_t i = 2; i <= 10; ++i)
      for (std::size_t j = i; j > 1 && b(j - 1) < b(j); --j) {
        std::swap(w[j - 1], w[j]);
        trace.word.emplace_back(transposition_root(j - 1, j));
      }
    const Integer top = b(1) + b(2) + b(3);
    if (w[0] >= top) break;
    // Cremona move: (a, b1, b2, b3) -> (2a - s, a - b2 - b3, a - b1 - b3, a - b1 - b2).
    const Integer delta = w[0] - top;  // (alpha, v) for alpha = l0 - l1 - l2 - l3
    w[0] += delta;
    for (std::size_t i = 1; i <= 3; ++i) w[i] -= delta;
    trace.word.emplace_back(cremona_root(1, 2, 3));
    if (w[0] <= 0)
      throw Error(ErrorKind::invariant_failure, "reduce: l0-coefficient left the forward cone");
  }

  std::vector<Rational> out(11);
  for (std::size_t i = 0; i < 11; ++i) {
    out[i] = Rational(w[i], denom);
    out[i].canonicalize();
  }
  const Rational a = out[0];
  ChamberPoint point;
  for (std::size_t i = 0; i < 10; ++i) point.b[i] = -out[i + 1] / a;
  if (normalize) {
    trace.scale = a;
    for (auto& x : out) x /= a;
  }
  return {LatticeVector(Basis::L, std::move(out)), point, std::move(trace)};
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::F_dominates: return "F_dominates";
    case Dominance::G_dominates: return "G_dominates";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
  }
  return "?";
}

Dominance compare_on_chamber(const LatticeVector& F, const LatticeVector& G) {
  auto to_l = [](const LatticeVector& x) { return x.basis() == Basis::E ? psi(x) : x; };
  const LatticeVector f = to_l(F), g = to_l(G);
  bool f_ge = true, g_ge = true;
  for (const auto& vertex : extreme_points()) {
    const LatticeVector vc = vertex.class_vector();
    const Rational pf = pairing(vc, f), pg = pairing(vc, g);
    if (pf < pg) f_ge = false;
    if (pg < pf) g_ge = false;
  }
  if (f_ge && g_ge) return Dominance::equal;
  if (f_ge) return Dominance::F_dominates;
  if (g_ge) return Dominance::G_dominates;
  return Dominance::incomparable;
}

}  // namespace enriques
