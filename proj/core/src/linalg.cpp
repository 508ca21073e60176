#include "numsys/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "numsys/errors.hpp"

namespace numsys {

std::vector<Integer> characteristic_polynomial(const IntMatrix& m) {
  require(m.rows == m.cols, errc::invalid_argument, "characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows;
  // Faddeev-LeVerrier: A_1 = M, c_k = -tr(A_k)/k, A_(k+1) = M (A_k + c_k I).
  IntMatrix a = m;
  std::vector<Integer> c(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += a.at(i, i);
    require(trace % Integer(k) == 0, errc::invalid_argument, "inexact division in trace step");
    c[k - 1] = -trace / Integer(k);
    if (k == n) break;
    IntMatrix b = a;
    for (std::size_t i = 0; i < n; ++i) b.at(i, i) += c[k - 1];
    IntMatrix next(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer sum = 0;
        for (std::size_t t = 0; t < n; ++t) sum += m.at(i, t) * b.at(t, j);
        next.at(i, j) = std::move(sum);
      }
    }
    a = std::move(next);
  }
  return c;
}

Integer determinant(const IntMatrix& m) {
  require(m.rows == m.cols, errc::invalid_argument, "determinant needs a square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix w = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && w.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // exact by Bareiss
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

std::optional<std::vector<Rational>> solve_rational(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  require(rows == b.size(), errc::invalid_argument, "system shape mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();

  // Gauss-Jordan on the augmented matrix.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    require(a[i].size() == cols, errc::invalid_argument, "ragged system");
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = m[row][col];
    for (std::size_t j = col; j <= cols; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (std::size_t j = col; j <= cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;  // inconsistent row
  }

  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

std::vector<Rational> minimal_recurrence(const std::vector<Integer>& seq, std::size_t max_order) {
  for (std::size_t r = 1; r <= max_order; ++r) {
    if (seq.size() < 2 * r) break;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t n = 0; n + r < seq.size(); ++n) {
      std::vector<Rational> row(r);
      for (std::size_t i = 0; i < r; ++i) row[i] = Rational(seq[n + r - 1 - i]);
      a.push_back(std::move(row));
      b.emplace_back(seq[n + r]);
    }
    if (auto d = solve_rational(a, b)) return *d;
  }
  fail(errc::invalid_argument, "no linear recurrence within the order bound");
}

namespace {

// Divisors of |v| including negatives; v != 0.
std::vector<Integer> signed_divisors(const Integer& v) {
  Integer n = abs(v);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::size_t cnt = out.size();
  for (std::size_t i = 0; i < cnt; ++i) out.push_back(-out[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Integer eval_monic(const std::vector<Integer>& coeffs, const Integer& x) {
  Integer acc = 1;
  for (const Integer& c : coeffs) acc = acc * x + c;
  return acc;
}

// Divides a monic polynomial by a monic polynomial; returns the quotient if
// the remainder vanishes.
std::optional<std::vector<Integer>> divide_monic(const std::vector<Integer>& num,
                                                 const std::vector<Integer>& den) {
  std::size_t n = num.size(), d = den.size();
  if (d > n) return std::nullopt;
  // Work with full coefficient lists (leading 1 made explicit).
  std::vector<Integer> full(n + 1);
  full[0] = 1;
  for (std::size_t i = 0; i < n; ++i) full[i + 1] = num[i];
  std::vector<Integer> dfull(d + 1);
  dfull[0] = 1;
  for (std::size_t i = 0; i < d; ++i) dfull[i + 1] = den[i];

  std::vector<Integer> q(n - d + 1, 0);
  for (std::size_t i = 0; i + d <= n; ++i) {
    Integer lead = full[i];
    q[i] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) full[i + j] -= lead * dfull[j];
  }
  for (std::size_t i = n - d + 1; i <= n; ++i) {
    if (full[i] != 0) return std::nullopt;
  }
  std::vector<Integer> out(q.begin() + 1, q.end());
  return out;  // monic quotient tail (q[0] == 1)
}

// Kronecker search for a monic factor of degree deg.
bool has_monic_factor_of_degree(const std::vector<Integer>& coeffs, std::size_t deg) {
  // Evaluation points 0..deg; every factor value must divide the value there.
  std::vector<Integer> points(deg + 1);
  std::vector<std::vector<Integer>> candidates(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) {
    points[i] = Integer(static_cast<long>(i));
    Integer v = eval_monic(coeffs, points[i]);
    if (v == 0) return true;  // integer root
    candidates[i] = signed_divisors(v);
  }

  std::vector<std::size_t> pick(deg + 1, 0);
  for (;;) {
    // Lagrange interpolation through (points[i], candidates[i][pick[i]]).
    std::vector<Rational> poly(deg + 1, Rational(0));  // poly[j] multiplies x^j
    for (std::size_t i = 0; i <= deg; ++i) {
      std::vector<Rational> basis = {Rational(1)};
      Rational denom(1);
      for (std::size_t j = 0; j <= deg; ++j) {
        if (j == i) continue;
        // multiply basis by (x - points[j])
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t t = 0; t < basis.size(); ++t) {
          next[t + 1] += basis[t];
          next[t] -= basis[t] * Rational(points[j]);
        }
        basis = std::move(next);
        denom *= Rational(points[i] - points[j]);
      }
      Rational scale = Rational(candidates[i][pick[i]]) / denom;
      for (std::size_t t = 0; t < basis.size(); ++t) poly[t] += basis[t] * scale;
    }

    // Monic integer candidate?
    bool ok = poly[deg] == 1;
    std::vector<Integer> cand(deg);
    for (std::size_t t = 0; ok && t < deg; ++t) {
      Rational c = poly[deg - 1 - t];
      c.canonicalize();
      if (c.get_den() != 1) {
        ok = false;
      } else {
        cand[t] = c.get_num();
      }
    }
    if (ok && divide_monic(coeffs, cand)) return true;

    // next divisor tuple
    std::size_t i = 0;
    while (i <= deg) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i > deg) break;
  }
  return false;
}

}  // namespace

bool is_irreducible_monic(const std::vector<Integer>& coeffs) {
  const std::size_t n = coeffs.size();
  if (n <= 1) return true;
  // A monic factor of degree <= n/2 exists iff the polynomial is reducible.
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    if (has_monic_factor_of_degree(coeffs, deg)) return false;
  }
  return true;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<Integer>& coeffs,
                                                   double* residual_bound) {
  const std::size_t n = coeffs.size();
  std::vector<std::complex<double>> roots(n);
  if (n == 0) {
    if (residual_bound) *residual_bound = 0.0;
    return roots;
  }
  std::vector<double> c(n);
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = coeffs[i].get_d();
    max_abs = std::max(max_abs, std::abs(c[i]));
  }
  double radius = 1.0 + max_abs;  // Cauchy bound

  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 1.0;
    for (double ci : c) acc = acc * x + ci;
    return acc;
  };

  // Durand-Kerner from non-real staggered start points.
  for (std::size_t i = 0; i < n; ++i) {
    double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n) + 0.4;
    roots[i] = std::polar(radius * 0.7 + 0.1 * static_cast<double>(i), angle);
  }
  double worst = 0.0;
  for (int iter = 0; iter < 2000; ++iter) {
    worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> denom = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      std::complex<double> delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-14 * std::max(1.0, radius)) break;
  }
  if (residual_bound) *residual_bound = worst * static_cast<double>(n);
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return std::abs(x) > std::abs(y);
  });
  return roots;
}

}  // namespace numsys
