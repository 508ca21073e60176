#include "numsys/positional.hpp"

#include <algorithm>
#include <cmath>

#include "numsys/errors.hpp"
#include "numsys/linalg.hpp"

namespace numsys {

DigitWord DigitWord::over(std::vector<std::int64_t> digits, std::set<std::int64_t> alphabet) {
  DigitWord w;
  w.digits = std::move(digits);
  w.alphabet = std::move(alphabet);
  for (std::int64_t d : w.digits) {
    require(w.alphabet.count(d) > 0, errc::invalid_argument,
            "digit outside the declared alphabet");
  }
  return w;
}

DigitWord DigitWord::of(std::vector<std::int64_t> digits) {
  DigitWord w;
  w.alphabet.insert(digits.begin(), digits.end());
  w.digits = std::move(digits);
  return w;
}

const Integer& PositionalSystem::term(std::size_t n) const {
  require(n < terms_.size(), errc::horizon_exceeded,
          "index " + std::to_string(n) + " beyond the materialized horizon");
  return terms_[n];
}

PositionalSystem make_positional(const std::vector<Integer>& recurrence,
                                 const std::vector<Integer>& initial, std::size_t horizon) {
  require(!recurrence.empty(), errc::invalid_argument, "recurrence must have positive order");
  require(recurrence.back() != 0, errc::zero_trailing_coefficient,
          "trailing recurrence coefficient must be nonzero");
  require(initial.size() == recurrence.size(), errc::invalid_argument,
          "need exactly one initial term per recurrence coefficient");
  require(initial.front() == 1, errc::invalid_argument, "the sequence must start at 1");

  const std::size_t m = recurrence.size();
  PositionalSystem ps;
  ps.recurrence_ = recurrence;
  ps.terms_ = initial;
  ps.terms_.reserve(std::max(horizon, m));
  while (ps.terms_.size() < std::max(horizon, m + 1)) {
    Integer next = 0;
    for (std::size_t i = 0; i < m; ++i) {
      next += recurrence[i] * ps.terms_[ps.terms_.size() - 1 - i];
    }
    ps.terms_.push_back(std::move(next));
  }

  Rational max_ratio(0);
  for (std::size_t n = 0; n + 1 < ps.terms_.size(); ++n) {
    require(ps.terms_[n + 1] > ps.terms_[n], errc::not_increasing,
            "sequence is not strictly increasing at index " + std::to_string(n + 1));
    Rational ratio(ps.terms_[n + 1], ps.terms_[n]);
    ratio.canonicalize();
    max_ratio = std::max(max_ratio, ratio);
  }
  // Q = ceil(max ratio) - 1, computed exactly; Q < max ratio holds because
  // the sequence is strictly increasing (ratios exceed 1).
  Integer q = floor_div(max_ratio.get_num() + max_ratio.get_den() - 1, max_ratio.get_den()) - 1;
  require(fits_int64(q), errc::invalid_argument, "digit bound out of range");
  ps.q_bound_ = to_int64(q);
  return ps;
}

Integer pi_value(const PositionalSystem& ps, const DigitWord& x) {
  require(x.digits.size() <= ps.horizon(), errc::horizon_exceeded,
          "digit word longer than the materialized sequence");
  Integer total = 0;
  const std::size_t n = x.digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    total += Integer(static_cast<long>(x.digits[i])) * ps.term(n - 1 - i);
  }
  return total;
}

DigitWord rho_greedy(const PositionalSystem& ps, const Integer& x) {
  require(x >= 0, errc::invalid_argument, "value must be non-negative");
  DigitWord out;
  for (std::int64_t d = 0; d <= ps.canonical_digit_bound(); ++d) out.alphabet.insert(d);
  if (x == 0) return out;

  // Greedy needs U_(top+1) materialized to bound the leading digit.
  require(x < ps.term(ps.horizon() - 1), errc::horizon_exceeded,
          "value beyond the materialized horizon");
  std::size_t top = ps.horizon() - 1;
  while (ps.term(top) > x) --top;

  Integer rest = x;
  for (std::size_t i = top + 1; i-- > 0;) {
    Integer digit = floor_div(rest, ps.term(i));
    rest -= digit * ps.term(i);
    out.digits.push_back(to_int64(digit));
  }
  return out;
}

DigitWord normalize(const PositionalSystem& ps, const DigitWord& x) {
  Integer v = pi_value(ps, x);
  require(v >= 0, errc::negative_value, "cannot normalize a negative value");
  return rho_greedy(ps, v);
}

PisotReport pisot_check(const std::vector<Integer>& recurrence) {
  require(!recurrence.empty(), errc::invalid_argument, "recurrence must have positive order");
  // Characteristic polynomial x^m - d_1 x^(m-1) - ... - d_m.
  std::vector<Integer> coeffs(recurrence.size());
  for (std::size_t i = 0; i < recurrence.size(); ++i) coeffs[i] = -recurrence[i];

  PisotReport report;
  report.irreducible = is_irreducible_monic(coeffs);

  double residual = 0.0;
  report.roots = polynomial_roots(coeffs, &residual);
  const double tol = 1e-9;
  double certify = std::max(residual, 1e-12);

  std::size_t outside = 0;
  bool boundary = false;
  double dominant = 0.0;
  bool dominant_real = true;
  for (const auto& root : report.roots) {
    double mod = std::abs(root);
    if (std::abs(mod - 1.0) < tol + certify) boundary = true;
    if (mod > 1.0) {
      ++outside;
      if (mod > dominant) {
        dominant = mod;
        dominant_real = std::abs(root.imag()) <= certify * 10 + 1e-9;
      }
    }
  }
  report.dominant_root = dominant;

  if (boundary) {
    report.verdict = PisotReport::Verdict::inconclusive;
  } else if (outside == 1 && dominant_real && report.irreducible) {
    report.verdict = PisotReport::Verdict::pisot;
  } else {
    report.verdict = PisotReport::Verdict::not_pisot;
  }
  return report;
}

}  // namespace numsys
