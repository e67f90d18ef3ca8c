#pragma once

#include <optional>

#include "enriques/lattice.hpp"

namespace enriques {

/// A class B + l e. With `l` empty the class lives on S itself; otherwise on
/// the one-point blowup, with the orientation convention omega~ . e > 0.
struct BlowupClass {
  LatticeVector B;  // basis E; torsion bit meaningful
  std::optional<long> l;

  static BlowupClass on_s(LatticeVector b) { return {std::move(b), std::nullopt}; }
  static BlowupClass on_blowup(LatticeVector b, long l) { return {std::move(b), l}; }

  bool on_blowup_surface() const { return l.has_value(); }
  long l_or_zero() const { return l.value_or(0); }
  bool is_zero() const { return B.is_zero() && !B.torsion() && l_or_zero() == 0; }
};

/// Gromov-Taubes dimension: B^2 / 2 on S (c1 torsion), (B^2 - l^2 + l) / 2 on the blowup.
Rational gt_dimension(const BlowupClass& c);

/// B_f = 0, or B_f^2 >= 0 and (B_f, s1 + s2) > 0.
bool forward_closure_member(const LatticeVector& b_e);

struct NonvanishingReport {
  bool gr_nonzero = false;
  bool gr_prime_nonzero = false;
  bool sw_nonzero = false;
};

NonvanishingReport classify(const BlowupClass& c);

/// Whether B + l e is represented by a connected embedded symplectic surface:
/// B^2 >= l^2 - l, l <= 0 and B_f in the closed forward cone. The zero class is
/// rejected with ErrorKind::degenerate.
bool connected_rep_exists(const BlowupClass& c);

/// a in the forward cone of the blowup (basis L) with (a, psi(e)) != 0.
bool symplectic_cone_member(const LatticeVector& a_l);

}  // namespace enriques
