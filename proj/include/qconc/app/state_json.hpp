#pragma once

// JSON schema for states accepted by the command-line tool:
//
//   {"pure":     {"amps": [[re, im] x 4]}}
//   {"coherent": {"alpha": [re, im], "beta": [...], "alpha_p": [...],
//                 "beta_p": [...], "theta": r, "phi": r}}
//   {"mixture":  {"p": [p1, p2, p3], "components": [state, state, state]}}
//   {"density":  {"rows": [[[re, im] x 4] x 4]}}
//
// Mixture components are themselves "pure" or "coherent" states. Complex
// numbers may also be given as a bare real number.

#include <array>
#include <optional>
#include <variant>

#include <json.hpp>

#include "qconc/rank3.hpp"
#include "qconc/states.hpp"

namespace qconc::app {

struct PureInput {
  PureTwoQubit state;
};

struct CoherentInput {
  CoherentPairSpec spec;
};

struct MixtureInput {
  TripleMixture mixture;
};

struct DensityInput {
  DensityMatrix4 rho;
};

using StateInput = std::variant<PureInput, CoherentInput, MixtureInput, DensityInput>;

/// Throws InputError (or one of its subclasses) on any schema violation.
StateInput parse_state(const nlohmann::json& j);

nlohmann::json complex_to_json(Complex z);
nlohmann::json amplitudes_to_json(const Amplitudes& v);

}  // namespace qconc::app
