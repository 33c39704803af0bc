#include "qconc/app/state_json.hpp"

#include <algorithm>
#include <string>

#include "qconc/error.hpp"

namespace qconc::app {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

double parse_real(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  return j.get<double>();
}

Complex parse_complex(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(std::string(what) + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Amplitudes parse_amplitudes(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("amps: expected four complex amplitudes");
  Amplitudes v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = parse_complex(j[i], "amps");
  return v;
}

CoherentPairSpec parse_coherent(const json& c) {
  return CoherentPairSpec(parse_complex(field(c, "alpha"), "alpha"), parse_complex(field(c, "beta"), "beta"),
                          parse_complex(field(c, "alpha_p"), "alpha_p"), parse_complex(field(c, "beta_p"), "beta_p"),
                          parse_real(field(c, "theta"), "theta"), parse_real(field(c, "phi"), "phi"));
}

bool has_single_key(const json& j, const char* key) { return j.is_object() && j.size() == 1 && j.contains(key); }

MixtureInput parse_mixture(const json& m) {
  const json& p = field(m, "p");
  const json& comps = field(m, "components");
  if (!p.is_array() || p.size() != 3) throw InputError("mixture.p: expected three probabilities");
  if (!comps.is_array() || comps.size() != 3) throw InputError("mixture.components: expected three states");
  const std::array<double, 3> probs{parse_real(p[0], "p"), parse_real(p[1], "p"), parse_real(p[2], "p")};

  const bool all_coherent = std::all_of(comps.begin(), comps.end(), [](const json& c) {
    return has_single_key(c, "coherent");
  });
  if (all_coherent) {
    return {TripleMixture(probs, std::array<CoherentPairSpec, 3>{parse_coherent(comps[0].at("coherent")),
                                                                 parse_coherent(comps[1].at("coherent")),
                                                                 parse_coherent(comps[2].at("coherent"))})};
  }
  std::array<std::optional<PureTwoQubit>, 3> states;
  for (std::size_t i = 0; i < 3; ++i) {
    const json& c = comps[i];
    if (has_single_key(c, "pure")) {
      states[i].emplace(parse_amplitudes(field(c.at("pure"), "amps")));
    } else if (has_single_key(c, "coherent")) {
      states[i].emplace(entangled_coherent_pure(parse_coherent(c.at("coherent"))));
    } else {
      throw InputError("mixture component must be a \"pure\" or \"coherent\" state");
    }
  }
  return {TripleMixture(probs, {*states[0], *states[1], *states[2]})};
}

DensityInput parse_density(const json& d) {
  const json& rows = field(d, "rows");
  if (!rows.is_array() || rows.size() != 4) throw InputError("density.rows: expected four rows");
  CMatrix4 m;
  for (std::size_t r = 0; r < 4; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4) throw InputError("density.rows: expected four entries per row");
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = parse_complex(rows[r][c], "density entry");
  }
  return {DensityMatrix4(m)};
}

}  // namespace

StateInput parse_state(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw InputError("state must be an object with exactly one of pure, coherent, mixture, density");
  }
  if (j.contains("pure")) return PureInput{PureTwoQubit(parse_amplitudes(field(j.at("pure"), "amps")))};
  if (j.contains("coherent")) return CoherentInput{parse_coherent(j.at("coherent"))};
  if (j.contains("mixture")) return parse_mixture(j.at("mixture"));
  if (j.contains("density")) return parse_density(j.at("density"));
  throw InputError("unknown state kind \"" + j.begin().key() + "\"");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json amplitudes_to_json(const Amplitudes& v) {
  json out = json::array();
  for (Complex z : v) out.push_back(complex_to_json(z));
  return out;
}

}  // namespace qconc::app
