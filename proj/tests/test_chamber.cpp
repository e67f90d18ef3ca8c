#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "enriques/chamber.hpp"
#include "enriques/error.hpp"
#include "oracles.hpp"

using namespace enriques;

namespace {

std::vector<Rational> replay_oracle(const LatticeVector& input, const ReductionTrace& t) {
  std::vector<Rational> v = oracle::coeffs(input.basis() == Basis::E ? psi(input) : input);
  if (t.sign_flip)
    for (auto& x : v) x = -x;
  for (const auto& r : t.word) v = oracle::reflect(v, oracle::coeffs(r.root()));
  for (auto& x : v) x /= t.scale;
  return v;
}

bool in_cone_oracle(const std::vector<Rational>& v) {
  // a l0 - sum b_i l_i: sum b = 3a, b1+b2+b3 <= a, nonincreasing b.
  Rational sum = 0;
  for (int i = 1; i < 11; ++i) sum += -v[i];
  if (sum != 3 * v[0]) return false;
  if (-v[1] - v[2] - v[3] > v[0]) return false;
  for (int i = 1; i < 10; ++i)
    if (-v[i] < -v[i + 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("membership examples") {
  const auto vs = oracle::listed_vertices();
  CHECK(in_chamber(vs[0], Region::open));
  CHECK(in_chamber(vs[8], Region::closed));
  CHECK(!in_chamber(vs[8], Region::open));
  CHECK(in_chamber(oracle::witness_point(), Region::open));
  CHECK(in_chamber(oracle::equal_point(), Region::open));
  ChamberPoint unsorted = oracle::witness_point();
  std::swap(unsorted.b[0], unsorted.b[9]);
  CHECK(!in_chamber(unsorted, Region::closed));

  std::vector<Rational> cone{2, Rational(6, 7), Rational(4, 7)};
  for (int i = 0; i < 8; ++i) cone.push_back(Rational(4, 7));
  auto a = in_chamber_cone(cone);
  REQUIRE(a.has_value());
  CHECK(*a == 2);
  cone[1] = 2;
  CHECK(!in_chamber_cone(cone).has_value());
}

TEST_CASE("only V9 of the closure is missing from the open chamber") {
  for (const auto& p : oracle::random_points(200, 3)) {
    CHECK(in_chamber(p, Region::open) == oracle::in_delta(p, true));
    CHECK(in_chamber(p, Region::closed));
  }
  const auto vs = oracle::listed_vertices();
  for (std::size_t i = 0; i < 8; ++i) CHECK(in_chamber(vs[i], Region::open));
}

TEST_CASE("vertices() is the printed list") {
  const auto vs = oracle::listed_vertices();
  REQUIRE(vertices().size() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK(vertices()[i] == vs[i]);
  for (const auto& v : vertices()) {
    CHECK(in_chamber(v, Region::closed));
    CHECK(oracle::tight_rank(v) == 10);
  }
}

TEST_CASE("vertex enumeration oracle") {
  const auto found = enumerate_vertices_oracle();
  for (const auto& v : found) {
    Rational s = 0;
    for (const auto& x : v.b) s += x;
    CHECK(s == 3);
    CHECK(oracle::in_delta(v, false));
    CHECK(oracle::tight_rank(v) == 10);
  }
  for (const auto& v : oracle::listed_vertices())
    CHECK(std::find(found.begin(), found.end(), v) != found.end());
  // The equal point is tight on all nine ordering facets, so it is a vertex too;
  // every listed vertex has b1+b2+b3 = 1, while it has 9/10.
  CHECK(oracle::tight_rank(oracle::equal_point()) == 10);
  CHECK(std::find(found.begin(), found.end(), oracle::equal_point()) != found.end());
  CHECK(found.size() == 10);
  for (const auto& v : oracle::listed_vertices()) CHECK(v.b[0] + v.b[1] + v.b[2] == 1);

  const auto& ext = extreme_points();
  CHECK(ext.size() == found.size());
  for (const auto& v : found) CHECK(std::find(ext.begin(), ext.end(), v) != ext.end());
}

TEST_CASE("reduce: fixed point") {
  LatticeVector v(Basis::L, {7, -3, -2, -2, -2, -2, -2, -2, -2, -2, -2});
  const auto r = reduce(v);
  CHECK(r.trace.word.empty());
  CHECK(!r.trace.sign_flip);
  CHECK(r.trace.scale == 7);
  CHECK(r.point == oracle::listed_vertices()[0]);
}

TEST_CASE("reduce: known reflections are undone") {
  // 12 x witness class: 12 l0 - 4(l1..l8) - 3 l9 - l10.
  LatticeVector base(Basis::L, {12, -4, -4, -4, -4, -4, -4, -4, -4, -3, -1});
  {
    // Both of these roots are orthogonal to the base class, so the word fixes it.
    const ReflectionDescriptor c(classes::l(0) - classes::l(1) - classes::l(2) - classes::l(4));
    const ReflectionDescriptor t(classes::l(1) - classes::l(5));
    const LatticeVector v = reflect(reflect(base, t), c);
    CHECK(v == base);
    CHECK(reduce(v, false).output == base);
  }
  const ReflectionDescriptor c(classes::l(0) - classes::l(1) - classes::l(2) - classes::l(3));
  const ReflectionDescriptor t(classes::l(1) - classes::l(10));
  const LatticeVector v = reflect(reflect(reflect(base, t), c), t);
  REQUIRE(!(v == base));
  CHECK(v[0] > base[0]);
  const auto r = reduce(v, false);
  CHECK(r.output == base);
  CHECK(oracle::coeffs(r.output) == replay_oracle(v, r.trace));
  CHECK(r.trace.cremona_moves() >= 1);
  CHECK(r.trace.unwind(r.output) == v);
  CHECK(r.point == oracle::witness_point());
}

TEST_CASE("reduce: sign flip") {
  LatticeVector v(Basis::L, {12, -4, -4, -4, -4, -4, -4, -4, -4, -3, -1});
  const LatticeVector w = reflect(v, ReflectionDescriptor(classes::l(0) - classes::l(2) - classes::l(3) - classes::l(9)));
  const auto pos = reduce(w), neg = reduce(-w);
  CHECK(neg.trace.sign_flip);
  CHECK(!pos.trace.sign_flip);
  CHECK(neg.point == pos.point);
  CHECK(neg.output == pos.output);
}

TEST_CASE("reduce: E input and rational input") {
  const auto r = reduce(classes::s1() + classes::s2());
  CHECK(oracle::in_delta(r.point, true));
  CHECK(r.trace.replay(psi(classes::s1() + classes::s2())) == r.output);

  std::vector<Rational> half{Rational(7, 2), Rational(-3, 2)};
  for (int i = 0; i < 9; ++i) half.push_back(-1);
  const auto h = reduce(LatticeVector(Basis::L, half));
  CHECK(h.point == oracle::listed_vertices()[0]);
  CHECK(h.trace.scale == Rational(7, 2));
}

TEST_CASE("reduce: errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::degenerate;
  };
  CHECK(kind_of([] { reduce(classes::l(0)); }) == ErrorKind::invalid_input);  // not orthogonal to k
  CHECK(kind_of([] { reduce(LatticeVector::zero(Basis::L)); }) == ErrorKind::invalid_input);
  CHECK(kind_of([] { reduce(psi(classes::r(1))); }) == ErrorKind::invalid_input);  // negative square
  CHECK_THROWS_AS(reduce(LatticeVector::zero(Basis::K3)), Error);
}

TEST_CASE("reduce: boundary mode") {
  const auto r = reduce(psi(classes::s1()), false);
  CHECK(r.output == psi(classes::s1()));
  CHECK(r.point == oracle::listed_vertices()[8]);
  // Another isotropic class lands on the same boundary ray.
  LatticeVector iso(Basis::L, {6, -3, -2, -2, -2, -2, -2, -2, -1, -1, -1});
  REQUIRE(square(iso) == 0);
  const auto r2 = reduce(iso, false);
  CHECK(r2.output == psi(classes::s1()));
}

TEST_CASE("reduce: properties on random forward classes") {
  const auto vs = oracle::random_forward_vectors(300, 99, 2000);
  for (const auto& v : vs) {
    const auto r = reduce(v);
    CHECK(oracle::coeffs(r.output) == replay_oracle(v, r.trace));
    CHECK(r.output[0] == 1);
    CHECK(in_cone_oracle(oracle::coeffs(r.output)));
    CHECK(square(r.output) * r.trace.scale * r.trace.scale == square(v));
    if (square(v) > 0) CHECK(r.point.b[9] > 0);
    CHECK(reduce(r.output).trace.word.empty());
    for (const auto& root : r.trace.word) CHECK(pairing(root.root(), classes::k()) == 0);

    const auto raw = reduce(v, false);
    CHECK(square(raw.output) == square(v));
    CHECK(raw.trace.scale == 1);
    CHECK(raw.point == r.point);
  }
}

TEST_CASE("compare_on_chamber") {
  CHECK(compare_on_chamber(classes::s2(), classes::s1()) == Dominance::F_dominates);
  CHECK(compare_on_chamber(classes::s1(), classes::s1()) == Dominance::equal);
  CHECK(compare_on_chamber(2 * classes::s1(), classes::s1()) == Dominance::F_dominates);
  CHECK(compare_on_chamber(classes::s1(), classes::s2()) == Dominance::G_dominates);
  // b1+b2+b3 >= b8+b9+b10 on the whole chamber.
  const LatticeVector a = classes::l(0) - classes::l(1) - classes::l(2) - classes::l(3);
  const LatticeVector b = classes::l(0) - classes::l(8) - classes::l(9) - classes::l(10);
  CHECK(compare_on_chamber(a, b) == Dominance::G_dominates);
  // The pairing difference at the equal point decides this one: listed vertices alone
  // would call it a tie.
  const LatticeVector c = classes::l(1) + classes::l(2) + classes::l(3) - classes::l(0);
  CHECK(compare_on_chamber(c, LatticeVector::zero(Basis::L)) == Dominance::G_dominates);
}
