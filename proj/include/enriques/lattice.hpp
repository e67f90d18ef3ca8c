#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "enriques/linalg.hpp"
#include "enriques/rational.hpp"

namespace enriques {

/// Coordinate systems.
///  L  : I_{1,10} with orthogonal basis l0..l10 (l0^2 = 1, li^2 = -1).
///  E  : Enriques lattice -E8 + U with basis r0..r7, s1, s2.
///  K3 : covering lattice 2(-E8) + 3U, blocks x(8) y(8) z1(2) z2(2) z3(2).
enum class Basis { L, E, K3 };

const char* to_string(Basis b);
Basis parse_basis(std::string_view name);
std::size_t basis_rank(Basis b);

/// Exact rational coordinate vector tagged with its lattice. The torsion bit
/// stands for the Z/2 summand of H^2(S;Z) and never enters a pairing.
class LatticeVector {
 public:
  LatticeVector(Basis basis, std::vector<Rational> coeffs, bool torsion = false);
  LatticeVector(Basis basis, std::initializer_list<long> coeffs, bool torsion = false);

  static LatticeVector zero(Basis basis);
  static LatticeVector unit(Basis basis, std::size_t index);

  Basis basis() const noexcept { return basis_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool torsion() const noexcept { return torsion_; }

  LatticeVector with_torsion(bool t) const;
  /// Coefficient part only (the class modulo torsion).
  LatticeVector free_part() const { return with_torsion(false); }

  bool is_zero() const;
  bool is_integral() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const Rational& s);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Rational& s, LatticeVector v) { return v *= s; }
  friend LatticeVector operator*(LatticeVector v, const Rational& s) { return v *= s; }
  LatticeVector operator-() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.basis_ == b.basis_ && a.torsion_ == b.torsion_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  Basis basis_;
  std::vector<Rational> coeffs_;
  bool torsion_ = false;
};

struct QuadraticLattice {
  std::string name;
  std::size_t rank = 0;
  linalg::IntMatrix gram;
};

/// Built-in lattice for a basis. The E Gram matrix is derived through psi.
const QuadraticLattice& lattice(Basis basis);

/// v^T G w in the shared basis; torsion ignored. Throws basis_mismatch.
Rational pairing(const LatticeVector& v, const LatticeVector& w);
inline Rational square(const LatticeVector& v) { return pairing(v, v); }

/// Gram matrix of r0..r7,s1,s2 obtained by pushing each basis vector through
/// psi and pairing in I_{1,10}.
linalg::IntMatrix gram_of_enriques_basis();

/// The same Gram matrix written down from the E8 Dynkin diagram (chain
/// r1-r2-...-r7 with r0 attached to r3, square -2) and the hyperbolic plane.
/// Kept independent of psi so the two can be checked against each other.
linalg::IntMatrix dynkin_enriques_gram();

/// The -E8 block (r0..r7) of the Enriques Gram matrix.
linalg::IntMatrix minus_e8_gram();

// Named classes.
namespace classes {
LatticeVector l(std::size_t i);           // l0..l10
LatticeVector r(std::size_t i);           // r0..r7 in basis E
LatticeVector s1();                       // basis E
LatticeVector s2();                       // basis E
LatticeVector k();                        // -3l0 + l1 + ... + l10
LatticeVector canonical();                // K: pure torsion class in basis E
LatticeVector r8_in_l();                  // l8 - l9
LatticeVector r9_in_l();                  // l9 - l10
/// l0 - sum b_i l_i for a 10-tuple b (scaled by a: a l0 - sum b_i l_i).
LatticeVector chamber_class(std::span<const Rational> b, const Rational& a = 1);
}  // namespace classes

/// 11x11 integer matrix of psi: columns are the images of r0..r7, s1, s2, e.
const linalg::IntMatrix& psi_matrix();

/// psi: (-1)_e + (-E8 + U) -> I_{1,10}. The E vector's torsion bit is dropped.
LatticeVector psi(const LatticeVector& v_e, const Rational& e_multiplicity = 0);

struct EnriquesDecomposition {
  LatticeVector enriques;  // basis E
  Rational e_multiplicity;
};

/// Exact inverse of psi.
EnriquesDecomposition psi_inv(const LatticeVector& v_l);

/// Root of a reflection; self-pairing must be -2 or -1.
class ReflectionDescriptor {
 public:
  explicit ReflectionDescriptor(LatticeVector root);
  const LatticeVector& root() const noexcept { return root_; }
  const Rational& root_square() const noexcept { return square_; }

 private:
  LatticeVector root_;
  Rational square_;
};

/// beta - 2 (alpha,beta)/(alpha,alpha) alpha.
LatticeVector reflect(const LatticeVector& beta, const ReflectionDescriptor& alpha);

enum class ConeMembership { interior, boundary, outside };
const char* to_string(ConeMembership m);

/// Reference vector of the forward cone: l0 in L, s1+s2 in E.
LatticeVector forward_reference(Basis basis);

/// Forward (positive) cone test for L or E vectors.
ConeMembership forward_cone_membership(const LatticeVector& v);

/// True iff v = 0 or v lies in the closed forward cone (v^2 >= 0, (v,ref) > 0).
bool in_forward_closure(const LatticeVector& v);

}  // namespace enriques
