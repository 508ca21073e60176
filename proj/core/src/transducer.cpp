#include "numsys/transducer.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "numsys/growth.hpp"
#include "numsys/linalg.hpp"

namespace numsys {

namespace {

// All words of length exactly `len` accepted from `from`.
std::vector<Word> words_of_length(const OrderedDfa& dfa, State from, std::size_t len) {
  std::vector<Word> out;
  Word current;
  std::function<void(State, std::size_t)> walk = [&](State q, std::size_t remaining) {
    if (remaining == 0) {
      if (dfa.is_final(q)) out.push_back(current);
      return;
    }
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      current.push_back(a);
      walk(dfa.step(q, a), remaining - 1);
      current.pop_back();
    }
  };
  walk(from, len);
  return out;
}

}  // namespace

std::vector<std::vector<std::vector<Integer>>> beta_counts(const OrderedDfa& dfa) {
  const std::size_t sigma = dfa.alphabet.size();
  std::vector<std::vector<std::vector<Integer>>> beta(
      sigma, std::vector<std::vector<Integer>>(dfa.num_states,
                                               std::vector<Integer>(dfa.num_states, 0)));
  for (Letter a = 0; a < sigma; ++a) {
    for (State q = 0; q < dfa.num_states; ++q) {
      beta[a][q][dfa.initial] += 1;  // the extra unit on the initial-state column
      for (Letter smaller = 0; smaller < a; ++smaller) {
        beta[a][q][dfa.step(q, smaller)] += 1;
      }
    }
  }
  return beta;
}

std::vector<std::vector<std::vector<Integer>>> lambda_table(const NumerationSystem& ns,
                                                            const Decomposition& dec) {
  const OrderedDfa& dfa = ns.dfa();
  const std::size_t sigma = dfa.alphabet.size();
  auto beta = beta_counts(dfa);
  std::vector<std::vector<std::vector<Integer>>> lambda(
      sigma, std::vector<std::vector<Integer>>(dfa.num_states, std::vector<Integer>(dec.k, 0)));
  for (Letter a = 0; a < sigma; ++a) {
    for (State q = 0; q < dfa.num_states; ++q) {
      for (std::size_t j = 0; j < dec.k; ++j) {
        Integer sum = 0;
        for (State p = 0; p < dfa.num_states; ++p) sum += beta[a][q][p] * dec.e[p][j];
        lambda[a][q][j] = std::move(sum);
      }
    }
  }
  return lambda;
}

Decomposition solve_decomposition(const NumerationSystem& ns) {
  const OrderedDfa& dfa = ns.dfa();
  CountTable& counts = ns.counts();
  const std::size_t m = common_recurrence(dfa).size();

  std::vector<State> finals;
  for (State q = 0; q < dfa.num_states; ++q) {
    if (dfa.is_final(q)) finals.push_back(q);
  }

  bool saw_consistent_anchor = false;
  std::string last_positional_failure;

  for (std::size_t k = 1; k <= m; ++k) {
    for (State f : finals) {
      // m equations per state pin the coefficients: both sides satisfy the
      // common order-m recurrence, so agreement on n = 0..m-1 extends to all n.
      std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(k));
      for (std::size_t n = 0; n < m; ++n) {
        for (std::size_t i = 0; i < k; ++i) rows[n][i] = Rational(counts.count(f, n + i));
      }

      bool consistent = true;
      std::vector<std::vector<Rational>> c(dfa.num_states);
      for (State p = 0; p < dfa.num_states && consistent; ++p) {
        std::vector<Rational> rhs(m);
        for (std::size_t n = 0; n < m; ++n) rhs[n] = Rational(counts.count(p, n + k - 1));
        auto solution = solve_rational(rows, rhs);
        if (!solution) {
          consistent = false;
        } else {
          c[p] = std::move(*solution);
        }
      }
      if (!consistent) continue;
      saw_consistent_anchor = true;

      Integer alpha = 1;
      for (State p = 0; p < dfa.num_states; ++p) {
        for (const Rational& v : c[p]) alpha = lcm(alpha, Integer(v.get_den()));
      }

      Decomposition dec;
      dec.alpha = alpha;
      dec.k = k;
      dec.anchor_state = f;
      dec.e.assign(dfa.num_states, std::vector<Integer>(k, 0));
      for (State p = 0; p < dfa.num_states; ++p) {
        for (std::size_t i = 0; i < k; ++i) {
          Rational scaled = c[p][i] * Rational(alpha);
          scaled.canonicalize();
          dec.e[p][i] = scaled.get_num();
        }
      }
      // Sink states count nothing, so their coefficients must vanish.
      std::vector<bool> coreach = dfa.coreachable();
      for (State p = 0; p < dfa.num_states; ++p) {
        if (coreach[p]) continue;
        for (const Integer& v : dec.e[p]) {
          if (v != 0) throw std::logic_error("sink state received nonzero coefficients");
        }
      }

      // The anchor sequence as a positional system: shortest recurrence of
      // u(f, .), which must have a nonzero trailing coefficient.
      std::vector<Integer> seq(2 * m + 6);
      for (std::size_t n = 0; n < seq.size(); ++n) seq[n] = counts.count(f, n);
      std::vector<Rational> d = minimal_recurrence(seq, m);
      std::vector<Integer> d_int(d.size());
      bool integral = true;
      for (std::size_t i = 0; i < d.size(); ++i) {
        Rational v = d[i];
        v.canonicalize();
        integral = integral && v.get_den() == 1;
        d_int[i] = v.get_num();
      }
      if (!integral || d_int.empty() || d_int.back() == 0) {
        last_positional_failure = "anchor sequence needs a transient prefix";
        continue;
      }
      try {
        std::vector<Integer> initial(seq.begin(), seq.begin() + static_cast<long>(d_int.size()));
        dec.positional = make_positional(d_int, initial);
      } catch (const error& e) {
        last_positional_failure = e.what();
        continue;
      }

      IntMatrix hankel(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) hankel.at(i, j) = counts.count(f, i + j);
      }
      dec.hankel_det = determinant(hankel);

      DecompositionVerification check = verify_decomposition(ns, dec);
      if (!check.ok) throw std::logic_error("decomposition failed its own verification");
      return dec;
    }
  }

  if (saw_consistent_anchor) {
    fail(errc::not_positional,
         "every anchor with an exact decomposition yields a non-positional sequence (" +
             last_positional_failure + ")");
  }
  fail(errc::no_suitable_anchor,
       "no final state's counts express every state's counts: every anchor window "
       "matrix is singular with an inconsistent system");
}

DecompositionVerification verify_decomposition(const NumerationSystem& ns,
                                               const Decomposition& dec,
                                               std::size_t extra_horizon) {
  const OrderedDfa& dfa = ns.dfa();
  CountTable& counts = ns.counts();
  const std::size_t order = common_recurrence(dfa).size();
  const std::size_t upto = order + dec.k + extra_horizon;

  DecompositionVerification out;
  out.checked_upto = upto;
  out.justification =
      "both sides satisfy the shared order-" + std::to_string(order) +
      " count recurrence, so agreement on n = 0.." + std::to_string(order - 1) +
      " extends to every n; checked through n = " + std::to_string(upto);

  for (std::size_t n = 0; n <= upto; ++n) {
    for (State p = 0; p < dfa.num_states; ++p) {
      Integer lhs = dec.alpha * counts.count(p, n + dec.k - 1);
      Integer rhs = 0;
      for (std::size_t i = 0; i < dec.k; ++i) rhs += dec.e[p][i] * dec.positional.term(n + i);
      if (lhs != rhs) {
        out.ok = false;
        out.first_failure_n = n;
        out.first_failure_state = p;
        return out;
      }
    }
  }
  return out;
}

DigitTransducer build_transducer(const NumerationSystem& ns, const Decomposition& dec,
                                 const TransducerOptions& options) {
  const OrderedDfa& dfa = ns.dfa();
  CountTable& counts = ns.counts();
  const std::size_t sigma = dfa.alphabet.size();
  const std::size_t k = dec.k;
  auto lambda = lambda_table(ns, dec);

  auto lambda64 = [&](Letter a, State q, std::size_t j) {
    const Integer& v = lambda[a][q][j];
    require(fits_int64(v), errc::invalid_argument, "digit weight out of range");
    return to_int64(v);
  };

  DigitTransducer t;
  t.k = k;
  t.alpha = dec.alpha;

  std::vector<bool> live = dfa.live_states();

  // Closure over (state, remainder tuple) pairs along live prefixes.
  using Key = std::pair<State, std::vector<std::int64_t>>;
  std::map<Key, std::uint32_t> index;
  auto intern = [&](State q, std::vector<std::int64_t> tuple) {
    Key key{q, std::move(tuple)};
    auto [it, inserted] = index.emplace(std::move(key), static_cast<std::uint32_t>(index.size()));
    if (inserted) {
      t.state_component.push_back(it->first.first);
      t.remainder_component.push_back(it->first.second);
      for (std::int64_t r : it->first.second) t.remainder_values.insert(r);
      require(index.size() <= options.max_states, errc::remainder_closure_overflow,
              "remainder closure exceeded " + std::to_string(options.max_states) + " states");
    }
    return it->second;
  };

  t.start = intern(dfa.initial, std::vector<std::int64_t>(k - 1, 0));
  for (std::uint32_t i = 0; i < t.state_component.size(); ++i) {
    State p = t.state_component[i];
    std::vector<std::int64_t> tuple = t.remainder_component[i];  // copy: vectors grow below
    for (Letter a = 0; a < sigma; ++a) {
      State pn = dfa.step(p, a);
      if (!live[pn]) continue;  // prefixes of accepted words stay live
      std::int64_t out = lambda64(a, p, k - 1) + (k >= 2 ? tuple[0] : 0);
      std::vector<std::int64_t> next(k >= 2 ? k - 1 : 0);
      for (std::size_t j = 0; j + 1 < k; ++j) {
        // new gamma_(k-2-j) = lambda_(k-2-j) + old gamma_(k-3-j); last gets lambda_0
        std::int64_t carry = (j + 2 < k) ? tuple[j + 1] : 0;
        next[j] = lambda64(a, p, k - 2 - j) + carry;
      }
      std::uint32_t to = intern(pn, std::move(next));
      t.transitions.push_back({i, a, out, to});
      t.output_alphabet.insert(out);
    }
  }

  // Tail edges flush the carried remainders over the last k-1 letters; the
  // closing constant depends on the automaton state and the suffix.
  if (k >= 2) {
    for (std::uint32_t i = 0; i < t.state_component.size(); ++i) {
      State p = t.state_component[i];
      const std::vector<std::int64_t>& tuple = t.remainder_component[i];
      for (const Word& suffix : words_of_length(dfa, p, k - 1)) {
        Integer c = dec.alpha * (value_from_state(ns, p, suffix) +
                                 counts.cumulative(dfa.initial, static_cast<std::ptrdiff_t>(k) - 2) -
                                 counts.cumulative(p, static_cast<std::ptrdiff_t>(k) - 2));
        require(fits_int64(c), errc::invalid_argument, "closing constant out of range");
        DigitTransducer::TailEdge edge;
        edge.from = i;
        edge.suffix = suffix;
        edge.outputs.assign(tuple.begin(), tuple.end());
        edge.outputs.back() += to_int64(c);
        for (std::int64_t d : edge.outputs) t.output_alphabet.insert(d);
        t.tail_edges.push_back(std::move(edge));
      }
    }
  }

  // Words shorter than k get a precomputed digit word of the same length,
  // searched over B and widened only when B cannot express the value.
  std::set<std::int64_t> search_alphabet = t.output_alphabet;
  for (std::size_t len = 0; len < k; ++len) {
    for (const Word& w : words_of_length(dfa, dfa.initial, len)) {
      Integer target = dec.alpha * value(ns, w);
      std::optional<std::vector<std::int64_t>> found;
      for (int widen = 0; !found && widen <= 64; ++widen) {
        std::set<std::int64_t> digits = search_alphabet;
        std::int64_t lo = digits.empty() ? 0 : *digits.begin();
        std::int64_t hi = digits.empty() ? 0 : *digits.rbegin();
        for (int d = 0; d < widen; ++d) {
          digits.insert(lo - d - 1);
          digits.insert(hi + d + 1);
        }
        std::vector<std::int64_t> digit_list(digits.begin(), digits.end());
        std::vector<std::int64_t> attempt(len);
        std::function<bool(std::size_t, Integer)> search = [&](std::size_t pos,
                                                               Integer rest) -> bool {
          if (pos == len) return rest == 0;
          for (std::int64_t d : digit_list) {
            attempt[pos] = d;
            if (search(pos + 1, rest - Integer(static_cast<long>(d)) *
                                           dec.positional.term(len - 1 - pos))) {
              return true;
            }
          }
          return false;
        };
        if (search(0, target)) {
          found = attempt;
          if (widen > 0) t.widened_output_alphabet = true;
        }
      }
      require(found.has_value(), errc::invalid_argument,
              "no digit word of matching length for a short word");
      for (std::int64_t d : *found) t.output_alphabet.insert(d);
      t.short_words.emplace(w, std::move(*found));
    }
  }

  return t;
}

DigitWord apply_transducer(const NumerationSystem& ns, const DigitTransducer& t, const Word& w) {
  const OrderedDfa& dfa = ns.dfa();
  require(dfa.accepts(w), errc::not_in_language, "word is not in the language");

  if (w.size() < t.k) {
    return DigitWord::over(t.short_words.at(w), t.output_alphabet);
  }

  std::vector<std::int64_t> digits;
  digits.reserve(w.size());
  std::uint32_t state = t.start;
  const std::size_t main_letters = w.size() - (t.k - 1);
  for (std::size_t i = 0; i < main_letters; ++i) {
    const DigitTransducer::MainTransition* step = nullptr;
    for (const auto& tr : t.transitions) {
      if (tr.from == state && tr.input == w[i]) {
        step = &tr;
        break;
      }
    }
    require(step != nullptr, errc::not_in_language, "no transition for an accepted prefix");
    digits.push_back(step->output);
    state = step->to;
  }
  if (t.k >= 2) {
    Word suffix(w.begin() + static_cast<long>(main_letters), w.end());
    const DigitTransducer::TailEdge* edge = nullptr;
    for (const auto& e : t.tail_edges) {
      if (e.from == state && e.suffix == suffix) {
        edge = &e;
        break;
      }
    }
    require(edge != nullptr, errc::not_in_language, "no tail edge for an accepted suffix");
    digits.insert(digits.end(), edge->outputs.begin(), edge->outputs.end());
  }
  return DigitWord::over(std::move(digits), t.output_alphabet);
}

DigitWord convert_representation(const NumerationSystem& ns, const Decomposition& dec,
                                 const DigitTransducer& t, const Word& w) {
  DigitWord raw = apply_transducer(ns, t, w);
  return rho_greedy(dec.positional, pi_value(dec.positional, raw));
}

}  // namespace numsys
