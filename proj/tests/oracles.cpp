#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

ChamberPoint point(long den, std::array<long, 10> num) {
  ChamberPoint p;
  for (std::size_t i = 0; i < 10; ++i) {
    p.b[i] = Rational(num[i], den);
    p.b[i].canonicalize();
  }
  return p;
}

std::size_t rank_of(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<ChamberPoint> listed_vertices() {
  return {point(7, {3, 2, 2, 2, 2, 2, 2, 2, 2, 2}),  point(14, {5, 5, 4, 4, 4, 4, 4, 4, 4, 4}),
          point(21, {7, 7, 7, 6, 6, 6, 6, 6, 6, 6}), point(18, {6, 6, 6, 6, 5, 5, 5, 5, 5, 5}),
          point(15, {5, 5, 5, 5, 5, 4, 4, 4, 4, 4}), point(12, {4, 4, 4, 4, 4, 4, 3, 3, 3, 3}),
          point(9, {3, 3, 3, 3, 3, 3, 3, 2, 2, 2}),  point(6, {2, 2, 2, 2, 2, 2, 2, 2, 1, 1}),
          point(3, {1, 1, 1, 1, 1, 1, 1, 1, 1, 0})};
}

ChamberPoint equal_point() { return point(10, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}); }

ChamberPoint witness_point() { return point(12, {4, 4, 4, 4, 4, 4, 4, 4, 3, 1}); }

Rational dot_l(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = a[0] * b[0];
  for (std::size_t i = 1; i < 11; ++i) s -= a[i] * b[i];
  return s;
}

std::vector<Rational> coeffs(const LatticeVector& v) { return {v.coeffs().begin(), v.coeffs().end()}; }

std::array<std::vector<long>, 11> psi_images() {
  std::array<std::vector<long>, 11> im;
  for (auto& v : im) v.assign(11, 0);
  im[0] = {1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0};
  for (int i = 1; i <= 7; ++i) {
    im[i][i] = 1;
    im[i][i + 1] = -1;
  }
  im[8] = {3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0};
  im[9] = {3, -1, -1, -1, -1, -1, -1, -1, -1, 0, -1};
  im[10] = {3, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1};
  return im;
}

std::vector<std::vector<long>> dynkin_gram() {
  std::vector<std::vector<long>> g(10, std::vector<long>(10, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = -2;
  auto edge = [&](int a, int b) { g[a][b] = g[b][a] = 1; };
  for (int i = 1; i < 7; ++i) edge(i, i + 1);
  edge(0, 3);
  g[8][9] = g[9][8] = 1;
  return g;
}

bool in_delta(const ChamberPoint& p, bool open) {
  Rational sum = 0;
  for (const auto& x : p.b) sum += x;
  if (sum != 3) return false;
  if (p.b[0] + p.b[1] + p.b[2] > 1) return false;
  for (int i = 0; i < 9; ++i)
    if (p.b[i] < p.b[i + 1]) return false;
  return open ? p.b[9] > 0 : p.b[9] >= 0;
}

int tight_rank(const ChamberPoint& p) {
  std::vector<std::vector<Rational>> rows;
  rows.emplace_back(10, Rational(1));
  if (p.b[0] + p.b[1] + p.b[2] == 1) {
    std::vector<Rational> r(10, 0);
    r[0] = r[1] = r[2] = 1;
    rows.push_back(r);
  }
  for (int i = 0; i < 9; ++i)
    if (p.b[i] == p.b[i + 1]) {
      std::vector<Rational> r(10, 0);
      r[i] = 1;
      r[i + 1] = -1;
      rows.push_back(r);
    }
  if (p.b[9] == 0) {
    std::vector<Rational> r(10, 0);
    r[9] = 1;
    rows.push_back(r);
  }
  return static_cast<int>(rank_of(rows));
}

std::vector<SortedClass> sorted_classes(long c_max, long min_square, long max_square) {
  std::vector<SortedClass> out;
  for (long c = 1; c <= c_max; ++c) {
    const long sq_hi = c * c - min_square;
    const long sq_lo = c * c - max_square;
    if (sq_hi < 0) continue;
    std::array<long, 10> d{};
    // Each |d_i| <= sqrt(sq_hi); choose nonincreasing entries.
    long lim = 0;
    while ((lim + 1) * (lim + 1) <= sq_hi) ++lim;
    std::function<void(int, long, long, long)> rec = [&](int i, long prev, long sum, long sq) {
      if (i == 10) {
        if (sum == 3 * c && sq >= sq_lo && sq <= sq_hi) out.push_back({c, d});
        return;
      }
      for (long v = std::min(prev, lim); v >= -lim; --v) {
        if (sq + v * v > sq_hi) continue;
        // The remaining 9-i entries are all <= v.
        if (sum + v * (10 - i) < 3 * c) break;
        d[i] = v;
        rec(i + 1, v, sum + v, sq + v * v);
      }
    };
    rec(0, lim, 0, 0);
  }
  return out;
}

namespace {

Rational sorted_pairing(const ChamberPoint& p, const SortedClass& f) {
  Rational s = f.c;
  for (int i = 0; i < 10; ++i) s -= p.b[i] * f.d[i];
  return s;
}

}  // namespace

Rational phi(const ChamberPoint& p, long c_max) {
  const auto fs = sorted_classes(c_max, 0, 0);
  Rational best = -1;
  for (const auto& f : fs) {
    const Rational v = sorted_pairing(p, f);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

Rational capacity_forward(const ChamberPoint& p, long k, long c_max) {
  const auto fs = sorted_classes(c_max, 2 * k, c_max * c_max);
  Rational best = -1;
  for (const auto& f : fs) {
    const Rational v = sorted_pairing(p, f);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

std::vector<ChamberPoint> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> w(0, 9);
  auto pts = listed_vertices();
  pts.push_back(equal_point());
  std::vector<ChamberPoint> out;
  while (out.size() < n) {
    std::array<long, 10> weight{};
    long total = 0;
    for (auto& x : weight) total += (x = w(rng));
    if (total == 0) continue;
    ChamberPoint p;
    for (int i = 0; i < 10; ++i) {
      Rational s = 0;
      for (int j = 0; j < 10; ++j) s += weight[j] * pts[j].b[i];
      p.b[i] = s / total;
    }
    if (p.b[9] == 0) continue;
    out.push_back(p);
  }
  return out;
}

std::vector<Rational> reflect(const std::vector<Rational>& v, const std::vector<Rational>& root) {
  const Rational f = 2 * dot_l(v, root) / dot_l(root, root);
  std::vector<Rational> out(v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f * root[i];
  return out;
}

std::vector<std::vector<long>> k3_gram() {
  std::vector<std::vector<long>> g(22, std::vector<long>(22, 0));
  const auto d = dynkin_gram();
  for (int blk = 0; blk < 2; ++blk)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) g[8 * blk + i][8 * blk + j] = d[i][j];
  for (int u = 16; u < 22; u += 2) g[u][u + 1] = g[u + 1][u] = 1;
  return g;
}

long k3_dot(const std::vector<long>& a, const std::vector<long>& b) {
  static const auto g = k3_gram();
  long s = 0;
  for (int i = 0; i < 22; ++i)
    for (int j = 0; j < 22; ++j) s += a[i] * g[i][j] * b[j];
  return s;
}

std::vector<std::vector<long>> iota_matrix() {
  std::vector<std::vector<long>> m(22, std::vector<long>(22, 0));
  for (int i = 0; i < 8; ++i) {
    m[8 + i][i] = 1;  // x_i -> y_i
    m[i][8 + i] = 1;
  }
  m[16][16] = m[17][17] = -1;
  m[20][18] = m[21][19] = 1;
  m[18][20] = m[19][21] = 1;
  return m;
}

std::vector<std::vector<long>> pullback_matrix() {
  std::vector<std::vector<long>> m(22, std::vector<long>(10, 0));
  for (int i = 0; i < 8; ++i) m[i][i] = m[8 + i][i] = 1;
  m[18][8] = m[20][8] = 1;
  m[19][9] = m[21][9] = 1;
  return m;
}

}  // namespace oracle

namespace oracle {

namespace {

using Vec = std::vector<long>;

long dot(const Vec& a, const Vec& b) {
  long s = a[0] * b[0];
  for (int i = 1; i < 11; ++i) s -= a[i] * b[i];
  return s;
}

Vec reflect_int(const Vec& v, const Vec& r) {
  // Roots used here all have square -2 or -1 with 2(v,r)/(r,r) integral.
  const long rr = dot(r, r);
  const long f = 2 * dot(v, r) / rr;
  Vec out(v);
  for (int i = 0; i < 11; ++i) out[i] -= f * r[i];
  return out;
}

}  // namespace

std::vector<LatticeVector> random_forward_vectors(std::size_t n, std::uint64_t seed, long a_max) {
  std::mt19937_64 rng(seed);
  std::vector<LatticeVector> out;
  const auto im = psi_images();
  auto accept = [&](Vec v) {
    if (std::abs(v[0]) > a_max || v[0] == 0) return false;
    long kdot = -3 * v[0];
    for (int i = 1; i < 11; ++i) kdot -= v[i];  // (v, k) with k = -3l0 + sum l_i
    if (kdot != 0) return false;
    if (dot(v, v) < 0 || v[0] < 0) return false;
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) return false;
    if (rng() % 4 == 0)
      for (auto& x : v) x = -x;
    out.emplace_back(enriques::Basis::L, std::vector<Rational>(v.begin(), v.end()));
    return true;
  };

  while (out.size() < n) {
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0) {
      // a l0 - sum b_i l_i with b_i near 3a/10.
      const long a = 10 + static_cast<long>(rng() % static_cast<std::uint64_t>(a_max - 10));
      Vec v(11, 0);
      v[0] = a;
      long rest = 3 * a;
      const long spread = std::max<long>(1, a / 20);
      for (int i = 1; i < 10; ++i) {
        const long b = 3 * a / 10 + static_cast<long>(rng() % static_cast<std::uint64_t>(2 * spread + 1)) - spread;
        v[i] = -b;
        rest -= b;
      }
      v[10] = -rest;
      accept(v);
    } else if (kind == 1) {
      // A chamber class pushed around by a random word of roots.
      auto pts = listed_vertices();
      pts.push_back(equal_point());
      std::uniform_int_distribution<int> w(0, 6);
      std::array<long, 10> weight{};
      long total = 0;
      for (auto& x : weight) total += (x = w(rng));
      if (total == 0) continue;
      std::vector<Rational> b(10, 0);
      for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) b[i] += weight[j] * pts[j].b[i];
      mpz_class lcm = 1;
      for (auto& x : b) {
        x.canonicalize();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
      }
      mpz_class a = total * lcm;
      if (a > a_max / 4) continue;
      Vec v(11);
      v[0] = a.get_si();
      for (int i = 0; i < 10; ++i) {
        Rational s = b[i] * lcm;
        v[i + 1] = -s.get_num().get_si();
      }
      const int steps = 1 + static_cast<int>(rng() % 12);
      for (int s = 0; s < steps; ++s) {
        Vec r(11, 0);
        if (rng() % 2) {
          int i = 1 + static_cast<int>(rng() % 10), j = 1 + static_cast<int>(rng() % 10);
          if (i == j) continue;
          r[i] = 1;
          r[j] = -1;
        } else {
          int idx[3];
          idx[0] = 1 + static_cast<int>(rng() % 10);
          do idx[1] = 1 + static_cast<int>(rng() % 10); while (idx[1] == idx[0]);
          do idx[2] = 1 + static_cast<int>(rng() % 10); while (idx[2] == idx[0] || idx[2] == idx[1]);
          r[0] = 1;
          for (int t : idx) r[t] = -1;
        }
        Vec next = reflect_int(v, r);
        if (std::abs(next[0]) > a_max) break;
        v = next;
      }
      accept(v);
    } else {
      // psi of n1 s1 + n2 s2 + small root combination, plus m e (m = 0 keeps k-orthogonality).
      std::uniform_int_distribution<long> big(1, 300), small(-4, 4);
      std::vector<long> e(10);
      for (int i = 0; i < 8; ++i) e[i] = small(rng);
      e[8] = big(rng);
      e[9] = rng() % 5 == 0 ? 0 : big(rng);
      Vec v(11, 0);
      for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 11; ++j) v[j] += e[i] * im[i][j];
      accept(v);
    }
  }
  return out;
}

}  // namespace oracle
