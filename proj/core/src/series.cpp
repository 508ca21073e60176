#include "numsys/series.hpp"

#include <map>
#include <utility>

namespace numsys {

std::string SeriesGenerators::name(std::size_t index) const {
  auto pair_name = [&](const char* tag, std::size_t base) {
    std::size_t off = index - base;
    return std::string(tag) + "[" + std::to_string(off / l_states) + "," +
           std::to_string(off % l_states) + "]";
  };
  if (index < x_states) return "T[" + std::to_string(index) + "]";
  if (index < x_states + x_states * l_states) return pair_name("U", x_states);
  if (index < x_states + 2 * x_states * l_states) {
    return pair_name("U'", x_states + x_states * l_states);
  }
  if (index < x_states + 3 * x_states * l_states) {
    return pair_name("V", x_states + 2 * x_states * l_states);
  }
  std::size_t off = index - (x_states + 3 * x_states * l_states);
  return "W[" + std::to_string(off / letters) + "," + std::to_string(off % letters) + "]";
}

namespace {

// Shared construction. The generator basis is indexed by states k of the
// support automaton X (series T over X-words) and pairs (l, m) of an X-state
// with a system-automaton state m carrying the count weights u(m, |w|) and
// v(m, |w|-1). With X equal to the system automaton and h the identity this
// is the plain quotient-relation construction; the pair indexing is what the
// relations need when a junk transition of X sits next to a live one.
LinearRepresentation build(const NumerationSystem& ns, const OrderedDfa& x,
                           const StateMorphism& h) {
  const OrderedDfa& l_dfa = ns.dfa();
  CountTable& counts = ns.counts();
  const std::size_t sigma = l_dfa.alphabet.size();

  SeriesGenerators gen;
  gen.x_states = x.num_states;
  gen.l_states = l_dfa.num_states;
  gen.letters = sigma;
  const std::size_t dim = gen.dim();

  LinearRepresentation rep;
  rep.alphabet = l_dfa.alphabet;
  rep.dim = dim;
  rep.lambda.assign(dim, 0);
  rep.gamma.assign(dim, 0);
  rep.mu.assign(sigma, std::vector<Integer>(dim * dim, 0));
  rep.generators = gen;

  std::vector<bool> live = x.live_states();

  // Rows of mu(a): coefficients of the left quotient of each generator.
  for (Letter a = 0; a < sigma; ++a) {
    std::vector<Integer>& m = rep.mu[a];
    auto add = [&](std::size_t row, std::size_t col, long amount) {
      m[row * dim + col] += amount;
    };

    for (State k = 0; k < x.num_states; ++k) {
      State kn = x.step(k, a);
      // T row: T[k.a] plus the same-length smaller-letter counts, plus the
      // single-letter closing series W. Junk X-states carry zero series, so
      // their rows stay correct with any column choice; live rows use the
      // morphism image for the count weights.
      add(gen.t(k), gen.t(kn), 1);
      if (live[k]) {
        State hk = h(k);
        for (Letter smaller = 0; smaller < a; ++smaller) {
          add(gen.t(k), gen.u(kn, l_dfa.step(hk, smaller)), 1);
        }
      }
      add(gen.t(k), gen.w(k, a), 1);

      for (State ml = 0; ml < l_dfa.num_states; ++ml) {
        // U and U' rows: shift the count index one level down across all
        // letters of the weight automaton.
        for (Letter any = 0; any < sigma; ++any) {
          add(gen.u(k, ml), gen.up(kn, l_dfa.step(ml, any)), 1);
          add(gen.up(k, ml), gen.up(kn, l_dfa.step(ml, any)), 1);
        }
        // V row: v(m, |w|) = v(m, |w|-1) + u(m, |w|).
        add(gen.v(k, ml), gen.v(kn, ml), 1);
        add(gen.v(k, ml), gen.up(kn, ml), 1);
      }
      // W rows vanish under every quotient.
    }
  }

  // gamma: the empty-word coefficient of each generator.
  for (State k = 0; k < x.num_states; ++k) {
    if (x.final_states[k]) {
      for (State ml = 0; ml < l_dfa.num_states; ++ml) {
        rep.gamma[gen.up(k, ml)] = counts.count(ml, 0);
      }
    }
    if (!live[k]) continue;
    State hk = h(k);
    for (Letter a = 0; a < sigma; ++a) {
      if (x.final_states[x.step(k, a)]) {
        Word single{a};
        rep.gamma[gen.w(k, a)] =
            value_from_state(ns, hk, single) - counts.cumulative(hk, 0);
      }
    }
  }

  rep.lambda[gen.t(x.initial)] = 1;
  rep.lambda[gen.v(x.initial, h(x.initial))] = 1;
  return rep;
}

}  // namespace

LinearRepresentation build_series_representation(const NumerationSystem& ns) {
  const OrderedDfa& dfa = ns.dfa();
  StateMorphism identity;
  identity.map.resize(dfa.num_states);
  for (State q = 0; q < dfa.num_states; ++q) identity.map[q] = q;
  return build(ns, dfa, identity);
}

LinearRepresentation build_subset_series(const NumerationSystem& ns, const OrderedDfa& dfaX) {
  validate(dfaX);
  require(dfaX.alphabet == ns.alphabet(), errc::invalid_argument,
          "support automaton must share the system alphabet");
  const OrderedDfa& l_dfa = ns.dfa();
  require(is_sublanguage(dfaX, l_dfa), errc::not_a_sublanguage,
          "support language is not contained in the system language");

  // A state of the sublanguage automaton does not determine the state the
  // system automaton reaches on the same prefix (two prefixes can merge in
  // one and split in the other), so the generators run over the reachable
  // pairs of the product, where the second projection is a morphism for free.
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State x, State m) {
    auto [it, inserted] = index.emplace(std::make_pair(x, m), static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(x, m);
    return it->second;
  };
  intern(dfaX.initial, l_dfa.initial);

  const std::size_t sigma = l_dfa.alphabet.size();
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, m] = pairs[i];
    for (Letter a = 0; a < sigma; ++a) delta.push_back(intern(dfaX.step(x, a), l_dfa.step(m, a)));
  }

  OrderedDfa support;
  support.alphabet = l_dfa.alphabet;
  support.num_states = static_cast<State>(pairs.size());
  support.initial = 0;
  support.transitions = std::move(delta);
  support.final_states.assign(support.num_states, false);
  StateMorphism projection;
  projection.map.resize(support.num_states);
  for (State i = 0; i < support.num_states; ++i) {
    support.final_states[i] = dfaX.final_states[pairs[i].first];
    projection.map[i] = pairs[i].second;
  }
  return build(ns, support, projection);
}

Integer evaluate(const LinearRepresentation& rep, const Word& w) {
  for (Letter a : w) {
    require(a < rep.alphabet.size(), errc::unknown_letter, "letter index out of range");
  }
  std::vector<Integer> row = rep.lambda;
  std::vector<Integer> next(rep.dim);
  for (Letter a : w) {
    const std::vector<Integer>& m = rep.mu[a];
    for (std::size_t j = 0; j < rep.dim; ++j) next[j] = 0;
    for (std::size_t i = 0; i < rep.dim; ++i) {
      if (row[i] == 0) continue;
      for (std::size_t j = 0; j < rep.dim; ++j) {
        if (m[i * rep.dim + j] != 0) next[j] += row[i] * m[i * rep.dim + j];
      }
    }
    row.swap(next);
    if (rep.modulus) {
      for (std::size_t j = 0; j < rep.dim; ++j) row[j] = mod_canonical(row[j], *rep.modulus);
    }
  }
  Integer out = 0;
  for (std::size_t i = 0; i < rep.dim; ++i) out += row[i] * rep.gamma[i];
  if (rep.modulus) out = mod_canonical(out, *rep.modulus);
  return out;
}

LinearRepresentation reduce_mod(const LinearRepresentation& rep, const Integer& q) {
  require(q >= 2, errc::invalid_modulus, "modulus must be at least 2");
  LinearRepresentation out = rep;
  out.modulus = q;
  for (Integer& v : out.lambda) v = mod_canonical(v, q);
  for (Integer& v : out.gamma) v = mod_canonical(v, q);
  for (auto& m : out.mu) {
    for (Integer& v : m) v = mod_canonical(v, q);
  }
  return out;
}

}  // namespace numsys
