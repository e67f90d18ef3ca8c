#include "enriques/linalg.hpp"

#include <utility>

namespace enriques::linalg {

Matrix to_rational(const IntMatrix& m) {
  Matrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (long v : m[i]) out[i].emplace_back(v);
  }
  return out;
}

Matrix identity(std::size_t n) {
  Matrix out(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix out(n, std::vector<Rational>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix out(a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[i][c] -= f * m[r][c];
    }
    ++r;
  }
  return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

Inertia inertia(Matrix m) {
  const std::size_t n = m.size();
  Inertia result;
  std::size_t k = 0;
  while (k < n) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][pivot] == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: if some off-diagonal entry survives, add row/column j
      // to row/column i so the (i,i) entry becomes 2 m[i][j] != 0.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (m[i][j] != 0) {
            for (std::size_t c = 0; c < n; ++c) m[i][c] += m[j][c];
            for (std::size_t r = 0; r < n; ++r) m[r][i] += m[r][j];
            pivot = i;
            found = true;
          }
      if (!found) {
        result.zero += n - k;
        break;
      }
    }
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      for (auto& row : m) std::swap(row[pivot], row[k]);
    }
    const Rational p = m[k][k];
    (p > 0 ? result.positive : result.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      Rational f = m[r][k] / p;
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
      for (std::size_t c = k; c < n; ++c) m[c][r] = m[r][c];
    }
    ++k;
  }
  return result;
}

bool is_symmetric(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return false;
  }
  return true;
}

}  // namespace enriques::linalg
