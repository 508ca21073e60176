#include "numsys/io.hpp"

#include <fstream>

namespace numsys {

Json dfa_to_json(const OrderedDfa& dfa) {
  Json j;
  j["alphabet"] = dfa.alphabet.labels();
  j["states"] = dfa.num_states;
  j["initial"] = dfa.initial;
  Json finals = Json::array();
  for (State q = 0; q < dfa.num_states; ++q) {
    if (dfa.final_states[q]) finals.push_back(q);
  }
  j["finals"] = std::move(finals);
  Json delta = Json::array();
  for (State q = 0; q < dfa.num_states; ++q) {
    Json row = Json::array();
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) row.push_back(dfa.step(q, a));
    delta.push_back(std::move(row));
  }
  j["delta"] = std::move(delta);
  return j;
}

OrderedDfa dfa_from_json(const Json& j) {
  require(j.is_object(), errc::invalid_argument, "automaton document must be an object");
  require(j.contains("alphabet") && j.contains("states") && j.contains("initial") &&
              j.contains("finals") && j.contains("delta"),
          errc::invalid_argument, "automaton document misses a required field");

  OrderedDfa dfa;
  dfa.alphabet = OrderedAlphabet(j.at("alphabet").get<std::vector<std::string>>());
  dfa.num_states = j.at("states").get<State>();
  dfa.initial = j.at("initial").get<State>();
  dfa.final_states.assign(dfa.num_states, false);
  for (const auto& f : j.at("finals")) {
    State q = f.get<State>();
    require(q < dfa.num_states, errc::invalid_argument, "final state out of range");
    dfa.final_states[q] = true;
  }
  const auto& delta = j.at("delta");
  require(delta.is_array() && delta.size() == dfa.num_states, errc::invalid_argument,
          "delta must list one row per state");
  for (const auto& row : delta) {
    require(row.is_array() && row.size() == dfa.alphabet.size(), errc::invalid_argument,
            "delta rows must list one target per letter");
    for (const auto& target : row) dfa.transitions.push_back(target.get<State>());
  }
  validate(dfa);
  return dfa;
}

namespace {

Json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return to_int64(v);
  return to_string(v);
}

Json integer_vector_to_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(integer_to_json(v));
  return out;
}

}  // namespace

Json representation_to_json(const LinearRepresentation& rep) {
  Json j;
  j["dim"] = rep.dim;
  if (rep.modulus) {
    j["ring"] = Json{{"type", "integers_mod"}, {"modulus", integer_to_json(*rep.modulus)}};
  } else {
    j["ring"] = Json{{"type", "integers"}};
  }
  j["lambda"] = integer_vector_to_json(rep.lambda);
  j["gamma"] = integer_vector_to_json(rep.gamma);
  Json mu;
  for (Letter a = 0; a < rep.alphabet.size(); ++a) {
    mu[rep.alphabet.label(a)] = integer_vector_to_json(rep.mu[a]);
  }
  j["mu"] = std::move(mu);
  if (rep.generators) {
    Json names = Json::array();
    for (std::size_t i = 0; i < rep.dim; ++i) names.push_back(rep.generators->name(i));
    j["generators"] = std::move(names);
  }
  return j;
}

Json positional_to_json(const PositionalSystem& ps) {
  Json j;
  j["recurrence"] = integer_vector_to_json(ps.recurrence());
  std::vector<Integer> initial(ps.terms().begin(),
                               ps.terms().begin() + static_cast<long>(ps.recurrence().size()));
  j["initial"] = integer_vector_to_json(initial);
  j["horizon"] = ps.horizon();
  j["canonical_digit_bound"] = ps.canonical_digit_bound();
  return j;
}

PositionalSystem positional_from_json(const Json& j) {
  require(j.is_object() && j.contains("recurrence") && j.contains("initial"),
          errc::invalid_argument, "positional descriptor needs recurrence and initial");
  auto to_integers = [](const Json& arr) {
    std::vector<Integer> out;
    for (const auto& v : arr) {
      if (v.is_string()) {
        out.emplace_back(v.get<std::string>());
      } else {
        out.emplace_back(static_cast<long>(v.get<std::int64_t>()));
      }
    }
    return out;
  };
  std::size_t horizon = j.value("horizon", PositionalSystem::kDefaultHorizon);
  return make_positional(to_integers(j.at("recurrence")), to_integers(j.at("initial")), horizon);
}

Json transducer_to_json(const OrderedDfa& dfa, const DigitTransducer& t) {
  Json j;
  j["k"] = t.k;
  j["alpha"] = integer_to_json(t.alpha);
  Json states = Json::array();
  for (std::size_t i = 0; i < t.num_states(); ++i) {
    states.push_back(Json{{"automaton_state", t.state_component[i]},
                          {"remainders", t.remainder_component[i]}});
  }
  j["states"] = std::move(states);
  j["start"] = t.start;
  Json transitions = Json::array();
  for (const auto& tr : t.transitions) {
    transitions.push_back(Json::array(
        {tr.from, dfa.alphabet.label(tr.input), tr.output, tr.to}));
  }
  j["transitions"] = std::move(transitions);
  Json tails = Json::array();
  for (const auto& e : t.tail_edges) {
    tails.push_back(Json::array({e.from, dfa.alphabet.format(e.suffix), e.outputs}));
  }
  j["tail_edges"] = std::move(tails);
  Json shorts = Json::array();
  for (const auto& [w, digits] : t.short_words) {
    shorts.push_back(Json::array({dfa.alphabet.format(w), digits}));
  }
  j["short_words"] = std::move(shorts);
  j["B"] = t.output_alphabet;
  j["T"] = t.remainder_values;
  j["widened_output_alphabet"] = t.widened_output_alphabet;
  return j;
}

Json report_to_json(const ExperimentReport& report) {
  Json j;
  j["name"] = report.name;
  Json params;
  for (const auto& [k, v] : report.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["columns"] = report.columns;
  j["rows"] = report.rows;
  Json verdicts;
  for (const auto& [k, v] : report.verdicts) verdicts[k] = v;
  j["verdicts"] = std::move(verdicts);
  j["oracles"] = report.oracle_notes;
  j["anomalous"] = report.anomalous;
  return j;
}

OrderedDfa load_dfa_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::invalid_argument, "cannot open " + path);
  Json j = Json::parse(in);
  return dfa_from_json(j);
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  require(out.good(), errc::invalid_argument, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace numsys
