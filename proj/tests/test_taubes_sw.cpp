#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "enriques/error.hpp"
#include "enriques/taubes_sw.hpp"
#include "oracles.hpp"

using namespace enriques;

namespace {

const LatticeVector kZero = LatticeVector::zero(Basis::E);

// Truth table written out from the three nonvanishing statements.
struct Expected {
  bool gr, gr_prime, sw;
};

Expected expected(const BlowupClass& c) {
  const LatticeVector bf = c.B.free_part();
  const Rational sq = square(bf);
  // Forward reference s1 + s2, pairing computed through L to stay independent of basis E.
  const Rational ref = pairing(psi(bf), psi(classes::s1() + classes::s2()));
  const bool fwd = bf.is_zero() || (sq >= 0 && ref > 0);
  if (!c.l) return {fwd, fwd, fwd};
  const long l = *c.l;
  const bool dim = sq >= l * l - l;
  return {dim && l <= 1 && fwd, fwd && (dim || l >= 2), fwd && (dim || l >= 2)};
}

}  // namespace

TEST_CASE("dimension") {
  CHECK(gt_dimension(BlowupClass::on_blowup(kZero, 0)) == 0);
  CHECK(gt_dimension(BlowupClass::on_blowup(kZero, 1)) == 0);
  CHECK(gt_dimension(BlowupClass::on_s(classes::s1())) == 0);
  CHECK(gt_dimension(BlowupClass::on_s(classes::s1() + classes::s2())) == 1);
  CHECK(gt_dimension(BlowupClass::on_blowup(classes::s1() + classes::s2(), -1)) == 0);
  CHECK(gt_dimension(BlowupClass::on_blowup(kZero, 2)) == -1);
}

TEST_CASE("forward closure") {
  CHECK(forward_closure_member(classes::s1()));
  CHECK(!forward_closure_member(-classes::s1()));
  CHECK(forward_closure_member(classes::canonical()));
  CHECK(forward_closure_member(kZero));
  CHECK(!forward_closure_member(classes::r(2)));
  CHECK(forward_closure_member(classes::s1() + classes::s2() + classes::r(0)));  // square 0, forward
}

TEST_CASE("worked classifications") {
  auto e = classify(BlowupClass::on_blowup(kZero, 1));
  CHECK(e.gr_nonzero);
  CHECK(e.gr_prime_nonzero);
  CHECK(e.sw_nonzero);

  auto two = classify(BlowupClass::on_blowup(kZero, 2));
  CHECK(!two.gr_nonzero);
  CHECK(two.gr_prime_nonzero);
  CHECK(two.sw_nonzero);

  auto neg = classify(BlowupClass::on_blowup(-classes::s1(), 0));
  CHECK(!neg.gr_nonzero);
  CHECK(!neg.gr_prime_nonzero);
  CHECK(!neg.sw_nonzero);

  auto on_s = classify(BlowupClass::on_s(kZero));
  CHECK(on_s.gr_nonzero);
  auto k = classify(BlowupClass::on_s(classes::canonical()));
  CHECK(k.gr_nonzero);
}

TEST_CASE("connected representatives") {
  CHECK(connected_rep_exists(BlowupClass::on_blowup(classes::s1() + classes::s2(), 0)));
  CHECK(!connected_rep_exists(BlowupClass::on_blowup(classes::s1(), 1)));
  CHECK(!connected_rep_exists(BlowupClass::on_blowup(classes::canonical(), -1)));
  CHECK(connected_rep_exists(BlowupClass::on_s(classes::s1())));
  try {
    connected_rep_exists(BlowupClass::on_blowup(kZero, 0));
    FAIL("zero class accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::degenerate);
  }
  CHECK_THROWS_AS(connected_rep_exists(BlowupClass::on_s(kZero)), Error);
}

TEST_CASE("sweep: truth table, implications, connected representative implies gr") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> u(-3, 3);
  std::size_t nonzero = 0;
  for (int t = 0; t < 5000; ++t) {
    std::vector<Rational> c(10);
    for (auto& x : c) x = u(rng);
    // Push a share of samples toward the forward cone so both outcomes occur.
    if (t % 2) c[8] += 6, c[9] += 6;
    const LatticeVector B(Basis::E, c, rng() % 2);
    for (long l = -3; l <= 3; ++l) {
      const BlowupClass cls = BlowupClass::on_blowup(B, l);
      const auto r = classify(cls);
      const auto want = expected(cls);
      CHECK(r.gr_nonzero == want.gr);
      CHECK(r.gr_prime_nonzero == want.gr_prime);
      CHECK(r.sw_nonzero == want.sw);
      if (r.gr_nonzero) CHECK(r.gr_prime_nonzero);
      if (r.gr_prime_nonzero) CHECK(r.sw_nonzero);
      if (!cls.is_zero() && connected_rep_exists(cls)) CHECK(r.gr_nonzero);
      nonzero += r.gr_nonzero;
    }
    const auto s = classify(BlowupClass::on_s(B));
    CHECK(s.gr_nonzero == expected(BlowupClass::on_s(B)).gr);
  }
  CHECK(nonzero > 0);
}

TEST_CASE("flipping l is not a symmetry") {
  const auto plus = classify(BlowupClass::on_blowup(kZero, 1));
  const auto minus = classify(BlowupClass::on_blowup(kZero, -1));
  CHECK(plus.gr_nonzero != minus.gr_nonzero);
  CHECK(gt_dimension(BlowupClass::on_blowup(kZero, 1)) != gt_dimension(BlowupClass::on_blowup(kZero, -1)));
}

TEST_CASE("symplectic cone") {
  const LatticeVector b = oracle::witness_point().class_vector();
  const LatticeVector pe = psi(kZero, 1);
  const LatticeVector a = b - Rational(1, 5) * pe;
  CHECK(square(a) == Rational(1, 24) - Rational(1, 25));
  CHECK(symplectic_cone_member(a));
  CHECK(!symplectic_cone_member(b));  // (b, e) = 0
  CHECK(!symplectic_cone_member(b - Rational(1, 4) * pe));  // 1/24 - 1/16 < 0
  CHECK(!symplectic_cone_member(-a));
  const LatticeVector eq = oracle::equal_point().class_vector() - Rational(2, 5) * pe;
  CHECK(square(eq) < 0);
  CHECK(!symplectic_cone_member(eq));
}
