#include "numsys/numeration.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "numsys/lang.hpp"
#include "numsys/series.hpp"

namespace numsys {

NumerationSystem make_system(const OrderedDfa& dfa) {
  OrderedDfa minimal = minimize(dfa);
  require(!is_language_empty(minimal), errc::empty_language, "the language is empty");
  require(accepts_infinite_language(minimal), errc::finite_language,
          "a numeration system needs an infinite language");
  NumerationSystem ns;
  ns.dfa_ = std::make_shared<const OrderedDfa>(std::move(minimal));
  ns.counts_ = std::make_shared<CountTable>(ns.dfa_);
  return ns;
}

Integer value_from_state(const NumerationSystem& ns, State from, const Word& w) {
  const OrderedDfa& dfa = ns.dfa();
  require(from < dfa.num_states, errc::invalid_argument, "state out of range");
  for (Letter a : w) {
    require(a < dfa.alphabet.size(), errc::unknown_letter, "letter index out of range");
  }
  require(dfa.is_final(dfa.run(from, w)), errc::not_in_language,
          "word is not accepted from this state");

  // Peel letters off the front: the rank of sw from q is the rank of w from
  // q.s plus the words of q's language that are shorter, plus same-length
  // words through strictly smaller letters.
  CountTable& counts = ns.counts();
  Integer acc = 0;
  State q = from;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter sigma = w[i];
    std::ptrdiff_t remaining = static_cast<std::ptrdiff_t>(w.size() - i - 1);
    State next = dfa.step(q, sigma);
    acc += counts.cumulative(q, remaining);
    acc -= counts.cumulative(next, remaining - 1);
    for (Letter smaller = 0; smaller < sigma; ++smaller) {
      acc += counts.count(dfa.step(q, smaller), static_cast<std::size_t>(remaining));
    }
    q = next;
  }
  return acc;
}

Integer value(const NumerationSystem& ns, const Word& w) {
  return value_from_state(ns, ns.dfa().initial, w);
}

std::size_t representation_length(const NumerationSystem& ns, const Integer& x) {
  require(x >= 0, errc::invalid_argument, "rank must be non-negative");
  CountTable& counts = ns.counts();
  const State s = ns.dfa().initial;
  std::size_t n = 0;
  while (counts.cumulative(s, static_cast<std::ptrdiff_t>(n)) <= x) ++n;
  return n;
}

Word representation(const NumerationSystem& ns, const Integer& x) {
  const OrderedDfa& dfa = ns.dfa();
  CountTable& counts = ns.counts();
  const std::size_t n = representation_length(ns, x);

  Integer j = x - counts.cumulative(dfa.initial, static_cast<std::ptrdiff_t>(n) - 1);
  Word out;
  out.reserve(n);
  State q = dfa.initial;
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t remaining = n - pos - 1;
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      const Integer& through = counts.count(dfa.step(q, a), remaining);
      if (j < through) {
        out.push_back(a);
        q = dfa.step(q, a);
        break;
      }
      j -= through;
    }
  }
  return out;
}

namespace {

std::uint64_t reduce_entry(const Integer& v, const Integer& q) {
  Integer r = mod_canonical(v, q);
  return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

}  // namespace

OrderedDfa progression_automaton(const NumerationSystem& ns, const Integer& p, const Integer& q) {
  require(q != 0, errc::invalid_modulus, "modulus must be at least 1");
  require(q >= 1, errc::invalid_modulus, "modulus must be at least 1");
  require(p >= 0, errc::invalid_argument, "progression offset must be non-negative");
  require(q <= Integer(1) << 31, errc::invalid_argument, "modulus too large");

  const OrderedDfa& dfa = ns.dfa();
  const std::size_t sigma = dfa.alphabet.size();
  const std::uint64_t qv = static_cast<std::uint64_t>(mpz_get_ui(q.get_mpz_t()));
  const std::uint64_t target = reduce_entry(p, q);

  // Row-functional automaton of the value series reduced mod q: a state is
  // the pair (automaton state, lambda * mu(prefix) mod q).
  LinearRepresentation rep = build_series_representation(ns);
  const std::size_t dim = rep.dim;
  std::vector<std::vector<std::uint64_t>> mu(sigma, std::vector<std::uint64_t>(dim * dim));
  for (std::size_t a = 0; a < sigma; ++a) {
    for (std::size_t i = 0; i < dim * dim; ++i) mu[a][i] = reduce_entry(rep.mu[a][i], q);
  }
  std::vector<std::uint64_t> gamma(dim);
  for (std::size_t i = 0; i < dim; ++i) gamma[i] = reduce_entry(rep.gamma[i], q);

  using VecState = std::pair<State, std::vector<std::uint64_t>>;
  std::map<VecState, State> index;
  std::vector<VecState> states;
  auto intern = [&](State k, std::vector<std::uint64_t> vec) {
    VecState key{k, std::move(vec)};
    auto [it, inserted] = index.emplace(std::move(key), static_cast<State>(states.size()));
    if (inserted) states.push_back(it->first);
    require(states.size() < 500'000, errc::invalid_argument,
            "modular value automaton exceeds the state bound");
    return it->second;
  };

  std::vector<std::uint64_t> start(dim);
  for (std::size_t i = 0; i < dim; ++i) start[i] = reduce_entry(rep.lambda[i], q);
  intern(dfa.initial, std::move(start));

  std::vector<State> delta;
  for (std::size_t i = 0; i < states.size(); ++i) {
    VecState current = states[i];  // copy: `states` grows below
    for (Letter a = 0; a < sigma; ++a) {
      std::vector<std::uint64_t> next(dim, 0);
      const std::vector<std::uint64_t>& mat = mu[a];
      for (std::size_t r = 0; r < dim; ++r) {
        std::uint64_t coeff = current.second[r];
        if (coeff == 0) continue;
        for (std::size_t cidx = 0; cidx < dim; ++cidx) {
          next[cidx] = (next[cidx] + coeff * mat[r * dim + cidx]) % qv;
        }
      }
      delta.push_back(intern(dfa.step(current.first, a), std::move(next)));
    }
  }

  OrderedDfa modular;
  modular.alphabet = dfa.alphabet;
  modular.num_states = static_cast<State>(states.size());
  modular.initial = 0;
  modular.transitions = std::move(delta);
  modular.final_states.assign(modular.num_states, false);
  for (State i = 0; i < modular.num_states; ++i) {
    const auto& [k, vec] = states[i];
    std::uint64_t dot = 0;
    for (std::size_t r = 0; r < dim; ++r) dot = (dot + vec[r] * gamma[r]) % qv;
    modular.final_states[i] = dfa.is_final(k) && dot == target;
  }

  // Ranks below p that happen to share p's residue class must be excluded.
  OrderedDfa result = modular;
  bool have_exceptions = false;
  OrderedDfa exceptions;
  for (Integer v = mod_canonical(p, q); v < p; v += q) {
    Word w = representation(ns, v);
    OrderedDfa one = lang::word(dfa.alphabet, dfa.alphabet.format(w));
    exceptions = have_exceptions ? lang::union_(exceptions, one) : one;
    have_exceptions = true;
  }
  if (have_exceptions) result = product_difference(result, exceptions);

  return minimize(result);
}

APDetection eventual_ap_detect(const std::vector<std::int64_t>& samples,
                               const APDetectParams& params) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    require(samples[i] > samples[i - 1], errc::not_strictly_increasing,
            "samples must be strictly increasing");
  }

  APDetection out;
  if (samples.size() < 3) return out;  // inconclusive

  const std::int64_t y_min = samples.front(), y_max = samples.back();
  require(y_max - y_min <= 50'000'000, errc::invalid_argument, "sample range too wide");
  std::vector<bool> member(static_cast<std::size_t>(y_max - y_min + 1), false);
  for (std::int64_t y : samples) member[static_cast<std::size_t>(y - y_min)] = true;
  auto in_image = [&](std::int64_t y) { return member[static_cast<std::size_t>(y - y_min)]; };

  bool all_refuted_with_margin = true;
  const std::int64_t span = params.margin_periods + 1;  // periods covered by [y_max-3G, y_max]

  for (std::int64_t gamma = 1; gamma <= params.gamma_max; ++gamma) {
    const std::int64_t top = y_max - gamma;
    const std::int64_t margin_floor = y_max - span * gamma;
    if (margin_floor < y_min) {
      all_refuted_with_margin = false;  // window too small to refute this period
      continue;
    }

    // Last membership violation when comparing y with y + gamma.
    std::int64_t first_clean = y_min;
    for (std::int64_t y = top; y >= y_min; --y) {
      if (in_image(y) != in_image(y + gamma)) {
        first_clean = y + 1;
        break;
      }
    }

    if (first_clean > margin_floor) continue;  // refuted, with margin

    // Success candidate: find the image threshold and the domain step.
    std::int64_t y0 = first_clean;
    while (y0 <= top && !in_image(y0)) ++y0;
    if (y0 > top || !in_image(y0 + gamma)) {
      all_refuted_with_margin = false;
      continue;
    }
    std::size_t x0 = static_cast<std::size_t>(
        std::lower_bound(samples.begin(), samples.end(), y0) - samples.begin());
    std::size_t xk = static_cast<std::size_t>(
        std::lower_bound(samples.begin(), samples.end(), y0 + gamma) - samples.begin());
    std::int64_t k = static_cast<std::int64_t>(xk - x0);

    bool verified = k > 0;
    for (std::size_t x = x0; verified && x + static_cast<std::size_t>(k) < samples.size(); ++x) {
      verified = samples[x + static_cast<std::size_t>(k)] == samples[x] + gamma;
    }
    if (verified) {
      out.verdict = APDetection::Verdict::eventually_ap;
      out.y0 = y0;
      out.gamma = gamma;
      out.k = k;
      out.x0 = static_cast<std::int64_t>(x0);
      return out;
    }
    all_refuted_with_margin = false;  // clean window but no global progression
  }

  out.verdict = all_refuted_with_margin ? APDetection::Verdict::not_ap_on_window
                                        : APDetection::Verdict::inconclusive;
  return out;
}

}  // namespace numsys
