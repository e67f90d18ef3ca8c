#include "enriques/lattice.hpp"

#include <sstream>

#include "enriques/error.hpp"

namespace enriques {

const char* to_string(Basis b) {
  switch (b) {
    case Basis::L: return "L";
    case Basis::E: return "E";
    case Basis::K3: return "K3";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "L") return Basis::L;
  if (name == "E") return Basis::E;
  if (name == "K3") return Basis::K3;
  throw Error(ErrorKind::invalid_input, "unknown basis '" + std::string(name) + "'");
}

std::size_t basis_rank(Basis b) {
  switch (b) {
    case Basis::L: return 11;
    case Basis::E: return 10;
    case Basis::K3: return 22;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(Basis basis, std::vector<Rational> coeffs, bool torsion)
    : basis_(basis), coeffs_(std::move(coeffs)), torsion_(torsion) {
  if (coeffs_.size() != basis_rank(basis_))
    throw Error(ErrorKind::invalid_input, std::string("basis ") + to_string(basis_) + " expects " +
                                              std::to_string(basis_rank(basis_)) + " coefficients, got " +
                                              std::to_string(coeffs_.size()));
}

LatticeVector::LatticeVector(Basis basis, std::initializer_list<long> coeffs, bool torsion)
    : LatticeVector(basis, std::vector<Rational>(coeffs.begin(), coeffs.end()), torsion) {}

LatticeVector LatticeVector::zero(Basis basis) {
  return LatticeVector(basis, std::vector<Rational>(basis_rank(basis), 0));
}

LatticeVector LatticeVector::unit(Basis basis, std::size_t index) {
  std::vector<Rational> c(basis_rank(basis), 0);
  c.at(index) = 1;
  return LatticeVector(basis, std::move(c));
}

LatticeVector LatticeVector::with_torsion(bool t) const {
  LatticeVector out = *this;
  out.torsion_ = t;
  return out;
}

bool LatticeVector::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool LatticeVector::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

static void require_same_basis(const LatticeVector& a, const LatticeVector& b) {
  if (a.basis() != b.basis())
    throw Error(ErrorKind::basis_mismatch,
                std::string("basis mismatch: ") + to_string(a.basis()) + " vs " + to_string(b.basis()));
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_basis(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  torsion_ = torsion_ != o.torsion_;
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_basis(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  torsion_ = torsion_ != o.torsion_;
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << to_string(basis_) << "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
  os << ")";
  if (torsion_) os << "+K";
  return os.str();
}

// ---------------------------------------------------------------------------
// psi and the built-in Gram matrices

namespace {

linalg::IntMatrix make_psi_matrix() {
  linalg::IntMatrix m(11, std::vector<long>(11, 0));
  auto set_column = [&](std::size_t col, const std::vector<long>& image) {
    for (std::size_t row = 0; row < 11; ++row) m[row][col] = image[row];
  };
  set_column(0, {1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0});  // r0 -> l0-l1-l2-l3
  for (std::size_t i = 1; i <= 7; ++i) {                 // ri -> li - l(i+1)
    std::vector<long> img(11, 0);
    img[i] = 1;
    img[i + 1] = -1;
    set_column(i, img);
  }
  set_column(8, {3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0});   // s1
  set_column(9, {3, -1, -1, -1, -1, -1, -1, -1, -1, 0, -1});   // s2
  set_column(10, {3, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1}); // e -> -k
  return m;
}

linalg::IntMatrix l_gram() {
  linalg::IntMatrix g(11, std::vector<long>(11, 0));
  g[0][0] = 1;
  for (std::size_t i = 1; i < 11; ++i) g[i][i] = -1;
  return g;
}

linalg::IntMatrix k3_gram() {
  linalg::IntMatrix g(22, std::vector<long>(22, 0));
  const auto e8 = minus_e8_gram();
  for (std::size_t block = 0; block < 2; ++block)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) g[8 * block + i][8 * block + j] = e8[i][j];
  for (std::size_t u = 0; u < 3; ++u) {
    const std::size_t o = 16 + 2 * u;
    g[o][o + 1] = g[o + 1][o] = 1;
  }
  return g;
}

Rational pairing_with_gram(const linalg::IntMatrix& g, std::span<const Rational> v, std::span<const Rational> w) {
  Rational total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (g[i][j] != 0 && w[j] != 0) row += g[i][j] * w[j];
    total += v[i] * row;
  }
  return total;
}

}  // namespace

const linalg::IntMatrix& psi_matrix() {
  static const linalg::IntMatrix m = make_psi_matrix();
  return m;
}

linalg::IntMatrix gram_of_enriques_basis() {
  const auto& m = psi_matrix();
  linalg::IntMatrix g(10, std::vector<long>(10, 0));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      long v = m[0][i] * m[0][j];
      for (std::size_t row = 1; row < 11; ++row) v -= m[row][i] * m[row][j];
      g[i][j] = v;
    }
  return g;
}

linalg::IntMatrix dynkin_enriques_gram() {
  linalg::IntMatrix g(10, std::vector<long>(10, 0));
  for (std::size_t i = 0; i < 8; ++i) g[i][i] = -2;
  auto edge = [&](std::size_t a, std::size_t b) { g[a][b] = g[b][a] = 1; };
  for (std::size_t i = 1; i < 7; ++i) edge(i, i + 1);
  edge(0, 3);
  edge(8, 9);
  return g;
}

linalg::IntMatrix minus_e8_gram() {
  const auto g = gram_of_enriques_basis();
  linalg::IntMatrix e8(8, std::vector<long>(8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) e8[i][j] = g[i][j];
  return e8;
}

const QuadraticLattice& lattice(Basis basis) {
  static const QuadraticLattice l{"I_{1,10}", 11, l_gram()};
  static const QuadraticLattice e{"-E8+U", 10, gram_of_enriques_basis()};
  static const QuadraticLattice k3{"2(-E8)+3U", 22, k3_gram()};
  switch (basis) {
    case Basis::L: return l;
    case Basis::E: return e;
    case Basis::K3: return k3;
  }
  return l;
}

Rational pairing(const LatticeVector& v, const LatticeVector& w) {
  require_same_basis(v, w);
  if (v.basis() == Basis::L) {
    Rational total = v[0] * w[0];
    for (std::size_t i = 1; i < 11; ++i) total -= v[i] * w[i];
    return total;
  }
  return pairing_with_gram(lattice(v.basis()).gram, v.coeffs(), w.coeffs());
}

LatticeVector psi(const LatticeVector& v_e, const Rational& e_multiplicity) {
  if (v_e.basis() != Basis::E)
    throw Error(ErrorKind::basis_mismatch, "psi expects a vector in basis E");
  const auto& m = psi_matrix();
  std::vector<Rational> out(11, 0);
  for (std::size_t row = 0; row < 11; ++row) {
    for (std::size_t col = 0; col < 10; ++col)
      if (m[row][col] != 0) out[row] += m[row][col] * v_e[col];
    out[row] += m[row][10] * e_multiplicity;
  }
  return LatticeVector(Basis::L, std::move(out));
}

EnriquesDecomposition psi_inv(const LatticeVector& v_l) {
  if (v_l.basis() != Basis::L)
    throw Error(ErrorKind::basis_mismatch, "psi_inv expects a vector in basis L");
  static const linalg::Matrix inv = *linalg::inverse(linalg::to_rational(psi_matrix()));
  std::vector<Rational> out(11, 0);
  for (std::size_t row = 0; row < 11; ++row)
    for (std::size_t col = 0; col < 11; ++col)
      if (inv[row][col] != 0) out[row] += inv[row][col] * v_l[col];
  Rational e = out.back();
  out.pop_back();
  return {LatticeVector(Basis::E, std::move(out)), e};
}

// ---------------------------------------------------------------------------
// Named classes

namespace classes {

LatticeVector l(std::size_t i) { return LatticeVector::unit(Basis::L, i); }
LatticeVector r(std::size_t i) {
  if (i > 7) throw Error(ErrorKind::invalid_input, "r_i in basis E exists for i <= 7; use r8_in_l/r9_in_l");
  return LatticeVector::unit(Basis::E, i);
}
LatticeVector s1() { return LatticeVector::unit(Basis::E, 8); }
LatticeVector s2() { return LatticeVector::unit(Basis::E, 9); }
LatticeVector k() { return LatticeVector(Basis::L, {-3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}); }
LatticeVector canonical() { return LatticeVector::zero(Basis::E).with_torsion(true); }
LatticeVector r8_in_l() { return l(8) - l(9); }
LatticeVector r9_in_l() { return l(9) - l(10); }

LatticeVector chamber_class(std::span<const Rational> b, const Rational& a) {
  if (b.size() != 10) throw Error(ErrorKind::invalid_input, "chamber class needs 10 coordinates");
  std::vector<Rational> c(11);
  c[0] = a;
  for (std::size_t i = 0; i < 10; ++i) c[i + 1] = -b[i];
  return LatticeVector(Basis::L, std::move(c));
}

}  // namespace classes

// ---------------------------------------------------------------------------
// Reflections and cones

ReflectionDescriptor::ReflectionDescriptor(LatticeVector root) : root_(std::move(root)), square_(square(root_)) {
  if (square_ != -2 && square_ != -1)
    throw Error(ErrorKind::invalid_input, "reflection root must have square -2 or -1, got " + square_.get_str());
}

LatticeVector reflect(const LatticeVector& beta, const ReflectionDescriptor& alpha) {
  Rational factor = 2 * pairing(alpha.root(), beta) / alpha.root_square();
  return beta - factor * alpha.root().with_torsion(false);
}

const char* to_string(ConeMembership m) {
  switch (m) {
    case ConeMembership::interior: return "interior";
    case ConeMembership::boundary: return "boundary";
    case ConeMembership::outside: return "outside";
  }
  return "?";
}

LatticeVector forward_reference(Basis basis) {
  switch (basis) {
    case Basis::L: return classes::l(0);
    case Basis::E: return classes::s1() + classes::s2();
    case Basis::K3: break;
  }
  throw Error(ErrorKind::invalid_input, "the forward cone is defined for bases L and E only");
}

ConeMembership forward_cone_membership(const LatticeVector& v) {
  const LatticeVector ref = forward_reference(v.basis());
  const Rational sq = square(v);
  const Rational dir = pairing(v, ref);
  if (sq > 0 && dir > 0) return ConeMembership::interior;
  if (sq == 0 && dir > 0 && !v.is_zero()) return ConeMembership::boundary;
  return ConeMembership::outside;
}

bool in_forward_closure(const LatticeVector& v) {
  return v.is_zero() || forward_cone_membership(v) != ConeMembership::outside;
}

}  // namespace enriques
