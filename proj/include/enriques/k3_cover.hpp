#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "enriques/invariants.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

/// Block view of a K3-basis vector: x, y in the two -E8 summands, z1, z2, z3 in the U summands.
struct K3Blocks {
  std::array<Rational, 8> x;
  std::array<Rational, 8> y;
  std::array<Rational, 2> z1;
  std::array<Rational, 2> z2;
  std::array<Rational, 2> z3;

  LatticeVector vector() const;
  static K3Blocks of(const LatticeVector& v);
};

/// (x, y, z1, z2, z3) -> (y, x, -z1, z3, z2).
LatticeVector iota_star(const LatticeVector& v);

struct Sublattice {
  std::vector<LatticeVector> basis;
  std::size_t rank = 0;
  linalg::IntMatrix gram;
};

/// Q_T^+ = { x + x + 0 + z + z }.
const Sublattice& invariant_sublattice();
/// Q_T^- = { x + (-x) + z1 + z2 + (-z2) }.
const Sublattice& anti_invariant_sublattice();

/// Structural membership in Q_T^- (y = -x, z3 = -z2). Also asserts iota* v = -v.
bool in_anti_invariant(const LatticeVector& v);
bool in_invariant(const LatticeVector& v);

/// pi^*: x + z in -E8 + U goes to x + x + 0 + z + z. Torsion is dropped.
LatticeVector pullback(const LatticeVector& v_e);

/// Real and imaginary parts of a period [Omega] = p + i q, both in Q_T^-.
class PeriodCandidate {
 public:
  PeriodCandidate(LatticeVector p, LatticeVector q);
  const LatticeVector& p() const noexcept { return p_; }
  const LatticeVector& q() const noexcept { return q_; }

 private:
  LatticeVector p_;
  LatticeVector q_;
};

struct PeriodCheck {
  bool isotropic = false;        // p^2 = q^2 and (p,q) = 0
  bool positive = false;         // p^2 + q^2 > 0
  bool d0_up_to_bound = false;   // no (-2)-root of Q_T^- with height <= bound orthogonal to p and q
  long bound = 0;
  std::optional<LatticeVector> violating_root;
};

/// Lattice-level period domain checks. The root search covers l in Q_T^- with
/// l^2 = -2 and max |coefficient| <= bound; a reported root is sign-normalized
/// (first nonzero coordinate positive) and is the one of smallest height, ties
/// broken by the lexicographically greatest coordinate tuple.
PeriodCheck period_point_check(const PeriodCandidate& pc, EnumerationBound bound);

}  // namespace enriques
