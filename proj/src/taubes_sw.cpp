#include "enriques/taubes_sw.hpp"

#include "enriques/error.hpp"

namespace enriques {

namespace {

void require_e(const LatticeVector& v) {
  if (v.basis() != Basis::E) throw Error(ErrorKind::basis_mismatch, "class B must be given in basis E");
}

}  // namespace

Rational gt_dimension(const BlowupClass& c) {
  require_e(c.B);
  const Rational b2 = square(c.B);
  if (!c.on_blowup_surface()) return b2 / 2;
  const long l = *c.l;
  return (b2 - l * l + l) / 2;
}

bool forward_closure_member(const LatticeVector& b_e) {
  require_e(b_e);
  return in_forward_closure(b_e.free_part());
}

NonvanishingReport classify(const BlowupClass& c) {
  require_e(c.B);
  const bool forward = forward_closure_member(c.B);
  if (!c.on_blowup_surface()) return {forward, forward, forward};
  const long l = *c.l;
  const bool dim_ok = square(c.B) >= l * l - l;
  NonvanishingReport r;
  r.gr_nonzero = dim_ok && l <= 1 && forward;
  r.gr_prime_nonzero = forward && (dim_ok || l >= 2);
  r.sw_nonzero = r.gr_prime_nonzero;
  return r;
}

bool connected_rep_exists(const BlowupClass& c) {
  require_e(c.B);
  if (c.is_zero()) throw Error(ErrorKind::degenerate, "the zero class has no embedded representative");
  const long l = c.l_or_zero();
  return square(c.B) >= l * l - l && l <= 0 && forward_closure_member(c.B);
}

bool symplectic_cone_member(const LatticeVector& a_l) {
  if (a_l.basis() != Basis::L) throw Error(ErrorKind::basis_mismatch, "symplectic cone test expects basis L");
  const LatticeVector e = psi(LatticeVector::zero(Basis::E), 1);
  return forward_cone_membership(a_l) == ConeMembership::interior && pairing(a_l, e) != 0;
}

}  // namespace enriques
