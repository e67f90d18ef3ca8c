#include "enriques/k3_cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

#include "enriques/error.hpp"

namespace enriques {

namespace {

constexpr std::size_t kX = 0, kY = 8, kZ1 = 16, kZ2 = 18, kZ3 = 20;

void require_k3(const LatticeVector& v, const char* what) {
  if (v.basis() != Basis::K3) throw Error(ErrorKind::basis_mismatch, std::string(what) + " expects a K3 vector");
}

Sublattice make_sublattice(std::vector<LatticeVector> basis) {
  Sublattice s;
  linalg::Matrix rows;
  for (const auto& b : basis) rows.emplace_back(b.coeffs().begin(), b.coeffs().end());
  s.rank = linalg::rank(rows);
  s.gram.assign(basis.size(), std::vector<long>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) s.gram[i][j] = pairing(basis[i], basis[j]).get_num().get_si();
  s.basis = std::move(basis);
  return s;
}

}  // namespace

LatticeVector K3Blocks::vector() const {
  std::vector<Rational> c(22);
  std::copy(x.begin(), x.end(), c.begin() + kX);
  std::copy(y.begin(), y.end(), c.begin() + kY);
  std::copy(z1.begin(), z1.end(), c.begin() + kZ1);
  std::copy(z2.begin(), z2.end(), c.begin() + kZ2);
  std::copy(z3.begin(), z3.end(), c.begin() + kZ3);
  return LatticeVector(Basis::K3, std::move(c));
}

K3Blocks K3Blocks::of(const LatticeVector& v) {
  require_k3(v, "K3Blocks::of");
  K3Blocks b;
  auto c = v.coeffs();
  std::copy(c.begin() + kX, c.begin() + kX + 8, b.x.begin());
  std::copy(c.begin() + kY, c.begin() + kY + 8, b.y.begin());
  std::copy(c.begin() + kZ1, c.begin() + kZ1 + 2, b.z1.begin());
  std::copy(c.begin() + kZ2, c.begin() + kZ2 + 2, b.z2.begin());
  std::copy(c.begin() + kZ3, c.begin() + kZ3 + 2, b.z3.begin());
  return b;
}

LatticeVector iota_star(const LatticeVector& v) {
  const K3Blocks in = K3Blocks::of(v);
  K3Blocks out;
  out.x = in.y;
  out.y = in.x;
  out.z1 = {-in.z1[0], -in.z1[1]};
  out.z2 = in.z3;
  out.z3 = in.z2;
  return out.vector();
}

const Sublattice& invariant_sublattice() {
  static const Sublattice s = [] {
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < 8; ++i)
      basis.push_back(LatticeVector::unit(Basis::K3, kX + i) + LatticeVector::unit(Basis::K3, kY + i));
    for (std::size_t j = 0; j < 2; ++j)
      basis.push_back(LatticeVector::unit(Basis::K3, kZ2 + j) + LatticeVector::unit(Basis::K3, kZ3 + j));
    return make_sublattice(std::move(basis));
  }();
  return s;
}

const Sublattice& anti_invariant_sublattice() {
  static const Sublattice s = [] {
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < 8; ++i)
      basis.push_back(LatticeVector::unit(Basis::K3, kX + i) - LatticeVector::unit(Basis::K3, kY + i));
    for (std::size_t j = 0; j < 2; ++j) basis.push_back(LatticeVector::unit(Basis::K3, kZ1 + j));
    for (std::size_t j = 0; j < 2; ++j)
      basis.push_back(LatticeVector::unit(Basis::K3, kZ2 + j) - LatticeVector::unit(Basis::K3, kZ3 + j));
    return make_sublattice(std::move(basis));
  }();
  return s;
}

bool in_anti_invariant(const LatticeVector& v) {
  const K3Blocks b = K3Blocks::of(v);
  bool structural = b.z3[0] == -b.z2[0] && b.z3[1] == -b.z2[1];
  for (std::size_t i = 0; i < 8 && structural; ++i) structural = b.y[i] == -b.x[i];
  if (structural != (iota_star(v) == -v))
    throw Error(ErrorKind::invariant_failure, "anti-invariant description disagrees with iota*");
  return structural;
}

bool in_invariant(const LatticeVector& v) {
  const K3Blocks b = K3Blocks::of(v);
  bool structural = b.z1[0] == 0 && b.z1[1] == 0 && b.z3 == b.z2 && b.y == b.x;
  if (structural != (iota_star(v) == v))
    throw Error(ErrorKind::invariant_failure, "invariant description disagrees with iota*");
  return structural;
}

LatticeVector pullback(const LatticeVector& v_e) {
  if (v_e.basis() != Basis::E) throw Error(ErrorKind::basis_mismatch, "pullback expects a vector in basis E");
  K3Blocks b;
  for (std::size_t i = 0; i < 8; ++i) b.x[i] = b.y[i] = v_e[i];
  b.z1 = {0, 0};
  b.z2 = b.z3 = {v_e[8], v_e[9]};
  return b.vector();
}

PeriodCandidate::PeriodCandidate(LatticeVector p, LatticeVector q) : p_(std::move(p)), q_(std::move(q)) {
  require_k3(p_, "PeriodCandidate");
  require_k3(q_, "PeriodCandidate");
  if (!in_anti_invariant(p_) || !in_anti_invariant(q_))
    throw Error(ErrorKind::invalid_input, "period candidate parts must lie in the anti-invariant lattice");
}

// ---------------------------------------------------------------------------
// Root search

namespace {

using Wide = __int128;

// Integer linear functional l -> (l, w) on the 12 parameters (x[8], z1[2], z2[2])
// of l = x + (-x) + z1 + z2 + (-z2).
std::array<Wide, 12> functional(const LatticeVector& w_scaled) {
  const auto& sub = anti_invariant_sublattice();
  std::array<Wide, 12> out{};
  for (std::size_t i = 0; i < 12; ++i) out[i] = to_int64(pairing(sub.basis[i], w_scaled).get_num());
  return out;
}

LatticeVector scaled_integral(const LatticeVector& v) {
  return v * Rational(common_denominator(v.coeffs()));
}

struct Root {
  long height;
  std::array<long, 12> params;
};

LatticeVector root_vector(const std::array<long, 12>& params) {
  const auto& sub = anti_invariant_sublattice();
  LatticeVector l = LatticeVector::zero(Basis::K3);
  for (std::size_t i = 0; i < 12; ++i)
    if (params[i] != 0) l += Rational(params[i]) * sub.basis[i];
  return l;
}

}  // namespace

PeriodCheck period_point_check(const PeriodCandidate& pc, EnumerationBound bound) {
  PeriodCheck r;
  r.bound = bound.c_max();
  const Rational pp = square(pc.p()), qq = square(pc.q()), pq = pairing(pc.p(), pc.q());
  r.isotropic = pp == qq && pq == 0;
  r.positive = pp + qq > 0;

  const long C = bound.c_max();
  const auto fp = functional(scaled_integral(pc.p()));
  const auto fq = functional(scaled_integral(pc.q()));
  const auto e8 = minus_e8_gram();

  // x-part: key (x^T G x, phi_p(x), phi_q(x)) -> x vectors. Norms below the
  // most negative one reachable by the z-part are skipped.
  const long min_norm = -1 - 3 * C * C;
  std::map<std::tuple<long, Wide, Wide>, std::vector<std::array<long, 8>>> by_key;
  std::array<long, 8> x{};
  x.fill(-C);
  while (true) {
    long norm = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < 8; ++j) norm += x[i] * e8[i][j] * x[j];
    }
    if (norm >= min_norm) {
      Wide vp = 0, vq = 0;
      for (std::size_t i = 0; i < 8; ++i) {
        vp += fp[i] * x[i];
        vq += fq[i] * x[i];
      }
      by_key[{norm, vp, vq}].push_back(x);
    }
    std::size_t i = 0;
    while (i < 8 && x[i] == C) x[i++] = -C;
    if (i == 8) break;
    ++x[i];
  }

  std::optional<Root> best;
  auto better = [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.params > b.params;
  };
  std::array<long, 4> z;
  for (z[0] = -C; z[0] <= C; ++z[0])
    for (z[1] = -C; z[1] <= C; ++z[1])
      for (z[2] = -C; z[2] <= C; ++z[2])
        for (z[3] = -C; z[3] <= C; ++z[3]) {
          // l^2 = 2 x^T G x + 2 z1_a z1_b + 4 z2_a z2_b = -2.
          const long need = -1 - z[0] * z[1] - 2 * z[2] * z[3];
          if (need > 0 || need % 2 != 0) continue;
          Wide zp = 0, zq = 0;
          for (std::size_t j = 0; j < 4; ++j) {
            zp += fp[8 + j] * z[j];
            zq += fq[8 + j] * z[j];
          }
          auto it = by_key.find({need, -zp, -zq});
          if (it == by_key.end()) continue;
          for (const auto& xs : it->second) {
            Root root;
            std::copy(xs.begin(), xs.end(), root.params.begin());
            std::copy(z.begin(), z.end(), root.params.begin() + 8);
            // Sign-normalize: first nonzero K3 coordinate is an x entry, else z1, else z2.
            auto first = std::find_if(root.params.begin(), root.params.end(), [](long v) { return v != 0; });
            if (first != root.params.end() && *first < 0)
              for (auto& v : root.params) v = -v;
            root.height = 0;
            for (long v : root.params) root.height = std::max(root.height, std::labs(v));
            if (!best || better(root, *best)) best = root;
          }
        }

  r.d0_up_to_bound = !best.has_value();
  if (best) r.violating_root = root_vector(best->params);
  return r;
}

}  // namespace enriques
