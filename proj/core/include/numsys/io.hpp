#pragma once

#include <json.hpp>

#include "numsys/dfa.hpp"
#include "numsys/experiments.hpp"
#include "numsys/positional.hpp"
#include "numsys/series.hpp"
#include "numsys/transducer.hpp"

namespace numsys {

using Json = nlohmann::ordered_json;

// Automaton text format:
//   {"alphabet": ["a","b"], "states": N, "initial": i, "finals": [..],
//    "delta": [[state per letter] per state]}
// Loading validates totality and ranges; save/load round-trips losslessly.
Json dfa_to_json(const OrderedDfa& dfa);
OrderedDfa dfa_from_json(const Json& j);

// Representation dump: dim, ring, lambda, gamma, mu per letter (row major).
Json representation_to_json(const LinearRepresentation& rep);

// Positional system descriptor: {"recurrence": [...], "initial": [...],
// "horizon": N}.
Json positional_to_json(const PositionalSystem& ps);
PositionalSystem positional_from_json(const Json& j);

// Transducer dump: states, start, main transitions, tail edges, alphabets
// B and T.
Json transducer_to_json(const OrderedDfa& dfa, const DigitTransducer& t);

Json report_to_json(const ExperimentReport& report);

OrderedDfa load_dfa_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace numsys
