#include "knotband/smith.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <utility>

namespace knotband {

using boost::multiprecision::cpp_rational;

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 0; k < n; ++k) id[k][k] = 1;
  return id;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix out(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

namespace {

struct SnfWork {
  IntMatrix d, u, v;
  std::size_t rows, cols;

  void swap_rows(std::size_t a, std::size_t b) {
    std::swap(d[a], d[b]);
    std::swap(u[a], u[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (auto& row : d) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < cols; ++j) d[dst][j] += k * d[src][j];
    for (std::size_t j = 0; j < rows; ++j) u[dst][j] += k * u[src][j];
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < rows; ++i) d[i][dst] += k * d[i][src];
    for (std::size_t i = 0; i < cols; ++i) v[i][dst] += k * v[i][src];
  }
  void negate_row(std::size_t r) {
    for (auto& x : d[r]) x = -x;
    for (auto& x : u[r]) x = -x;
  }
};

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfWork w;
  w.rows = m.size();
  w.cols = w.rows == 0 ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != w.cols) throw std::invalid_argument("ragged matrix");
  w.d = m;
  w.u = identity_matrix(w.rows);
  w.v = identity_matrix(w.cols);

  const std::size_t diag = std::min(w.rows, w.cols);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      BigInt best;
      for (std::size_t i = t; i < w.rows; ++i)
        for (std::size_t j = t; j < w.cols; ++j) {
          if (w.d[i][j] == 0) continue;
          BigInt mag = abs(w.d[i][j]);
          if (!found || mag < best) {
            best = mag;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      if (pi != t) w.swap_rows(pi, t);
      if (pj != t) w.swap_cols(pj, t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < w.rows; ++i) {
        if (w.d[i][t] == 0) continue;
        w.add_row(i, t, -floor_div(w.d[i][t], w.d[t][t]));
        if (w.d[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < w.cols; ++j) {
        if (w.d[t][j] == 0) continue;
        w.add_col(j, t, -floor_div(w.d[t][j], w.d[t][t]));
        if (w.d[t][j] != 0) dirty = true;
      }
      if (dirty) continue;  // a smaller remainder now exists; re-pivot

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < w.rows && divides; ++i)
        for (std::size_t j = t + 1; j < w.cols; ++j)
          if (w.d[i][j] % w.d[t][t] != 0) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.d[t][t] < 0) w.negate_row(t);
  }

  SnfResult out;
  for (std::size_t t = 0; t < diag; ++t) out.factors.push_back(w.d[t][t]);
  out.left = std::move(w.u);
  out.right = std::move(w.v);
  out.diagonal = std::move(w.d);

  if (matmul(matmul(out.left, m), out.right) != out.diagonal)
    throw std::logic_error("Smith normal form check U*M*V == D failed");
  for (std::size_t t = 0; t + 1 < diag; ++t) {
    const BigInt& a = out.factors[t];
    const BigInt& b = out.factors[t + 1];
    if (a == 0 ? b != 0 : b % a != 0) throw std::logic_error("Smith normal form divisibility chain broken");
  }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int symmetric_signature(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("signature of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw std::invalid_argument("signature of non-symmetric matrix");
      a[i][j] = cpp_rational(m[i][j]);
    }
  }
  // Congruence transforms keep the matrix symmetric; each step splits off one diagonal entry.
  int sig = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // All remaining diagonal entries vanish; combine two indices with a_ij != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // remaining block is zero
      // row/col pi += row/col pj  =>  a[pi][pi] becomes 2 a[pi][pj]
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      p = pi;
    }
    const cpp_rational pivot = a[p][p];
    sig += pivot > 0 ? 1 : -1;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      const cpp_rational f = a[i][p] / pivot;
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
      for (std::size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
    }
  }
  return sig;
}


std::vector<Rational> solve(const IntMatrix& m, const std::vector<BigInt>& b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("solve: non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n] = Rational(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("solve: singular matrix");
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace knotband
