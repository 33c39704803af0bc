#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "qconc/app/commands.hpp"
#include "qconc/error.hpp"
#include "qconc/measures.hpp"

namespace qconc::app {

namespace {

using nlohmann::json;

json lambdas_json(const WoottersSpectrum& s) { return json(std::vector<double>(s.lambdas.begin(), s.lambdas.end())); }

json wootters_json(const DensityMatrix4& rho) {
  const WoottersResult w = wootters_concurrence(rho);
  return {{"concurrence", w.concurrence},
          {"c_squared", w.concurrence * w.concurrence},
          {"eof", entanglement_of_formation(w.concurrence)},
          {"lambdas", lambdas_json(w.spectrum)}};
}

json oracle_json(const DensityMatrix4& rho, const RoofConfig& cfg, double wootters) {
  const RoofResult r = convex_roof_concurrence(rho, cfg);
  return {{"concurrence", r.c_estimate},
          {"c_squared", r.c_estimate * r.c_estimate},
          {"converged", r.converged},
          {"iterations", r.iterations_used},
          {"components", r.best_decomposition.weights.size()},
          {"below_wootters", r.c_estimate < wootters - 1e-6}};
}

double distance_to_maximally_mixed(const DensityMatrix4& rho) {
  return max_abs_diff(rho.matrix(), Complex{0.25} * CMatrix4::identity());
}

// The violation flags must agree with the recorded values at kBoundTolerance.
void check_flags(const Rank3Result& r) {
  const bool ok = r.negative == (r.c_squared < -kBoundTolerance) &&
                  r.lower_violation == (r.c_squared < r.lower_bound - kBoundTolerance) &&
                  r.upper_violation == (r.c_squared > r.upper_bound + kBoundTolerance);
  if (!ok) throw InvariantViolation("rank-3 report flags disagree with the recorded values");
}

json rank3_json(const TripleMixture& mix) {
  const Rank3Result r = concurrence_squared_rank3(mix);
  check_flags(r);
  json out = {{"c_squared", r.c_squared},
              {"lower_bound", r.lower_bound},
              {"upper_bound", r.upper_bound},
              {"case", std::string(to_string(r.case_label))},
              {"diagonal_term", r.diagonal_term},
              {"pair_terms", json(std::vector<double>(r.pair_terms.begin(), r.pair_terms.end()))},
              {"flags",
               {{"orthogonal", r.orthogonal},
                {"negative", r.negative},
                {"lower_violation", r.lower_violation},
                {"upper_violation", r.upper_violation}}}};
  try {
    out["quartet_c_squared"] = concurrence_squared_rank3_quartet(mix);
  } catch (const ZeroState&) {
    out["quartet_c_squared"] = nullptr;  // a superposition cancels
  }
  try {
    out["case_d_c_squared"] = case_d_concurrence(mix);
  } catch (const PreconditionFailed&) {
  }
  return out;
}

json coherent_echo(const CoherentPairSpec& s) {
  return {{"alpha", complex_to_json(s.alpha())},     {"beta", complex_to_json(s.beta())},
          {"alpha_p", complex_to_json(s.alpha_p())}, {"beta_p", complex_to_json(s.beta_p())},
          {"theta", s.theta()},                      {"phi", s.phi()}};
}

json pure_block(const PureTwoQubit& psi) {
  const MeasureValue m = measure_pure(psi);
  return {{"amps", amplitudes_to_json(psi.amplitudes())},
          {"concurrence", m.concurrence},
          {"complex_concurrence", complex_to_json(complex_concurrence_pure(psi))},
          {"eof", m.eof},
          {"wootters", wootters_json(DensityMatrix4(psi.projector()))}};
}

json report(const PureInput& in, const MeasureOptions&) {
  json out = pure_block(in.state);
  out["kind"] = "pure";
  return out;
}

json report(const CoherentInput& in, const MeasureOptions&) {
  const PureTwoQubit psi = entangled_coherent_pure(in.spec);
  json out = pure_block(psi);
  out["kind"] = "coherent";
  out["input"] = coherent_echo(in.spec);
  out["amplitude_concurrence"] = amplitude_concurrence(in.spec);
  out["lambda"] = complex_to_json(in.spec.lambda_coef());
  out["gamma"] = complex_to_json(in.spec.gamma_coef());
  out["n_norm"] = in.spec.n_norm();
  return out;
}

json mixture_core(const TripleMixture& mix, const DensityMatrix4& rho, const MeasureOptions& opts) {
  json out;
  out["rank3"] = rank3_json(mix);
  json w = wootters_json(rho);
  const double wc = w["concurrence"].get<double>();
  out["wootters"] = std::move(w);
  if (opts.run_oracle) out["oracle"] = oracle_json(rho, opts.roof, wc);
  out["rank3_minus_wootters"] = out["rank3"]["c_squared"].get<double>() - wc * wc;
  out["distance_to_maximally_mixed"] = distance_to_maximally_mixed(rho);
  return out;
}

json report(const MixtureInput& in, const MeasureOptions& opts) {
  const TripleMixture& mix = in.mixture;
  json out = mixture_core(mix, mix.density(), opts);
  out["kind"] = "mixture";
  out["p"] = mix.p();
  json comps = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json c = {{"amps", amplitudes_to_json(mix.components()[i].amplitudes())},
              {"concurrence", mix.component_concurrence(i)}};
    if (mix.coherent_specs()) c["coherent"] = coherent_echo((*mix.coherent_specs())[i]);
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);
  out["orthogonal"] = mix.orthogonal();
  out["max_overlap"] = mix.max_overlap();
  return out;
}

json report(const DensityInput& in, const MeasureOptions& opts) {
  const DensityMatrix4& rho = in.rho;
  const Decomposition spec = eigendecompose_density(rho);
  const std::size_t rank = spec.weights.size();

  json out;
  if (rank <= 3) {
    // The spectral ensemble is an orthogonal rank-<=3 mixture; pad with
    // zero-weight product states.
    std::array<double, 3> p{};
    std::array<PureTwoQubit, 3> comps{make_pure(1, 0, 0, 0), make_pure(1, 0, 0, 0), make_pure(1, 0, 0, 0)};
    for (std::size_t i = 0; i < rank; ++i) {
      p[i] = spec.weights[i];
      comps[i] = spec.states[i];
    }
    out = mixture_core(TripleMixture(p, comps), rho, opts);
  } else {
    json w = wootters_json(rho);
    const double wc = w["concurrence"].get<double>();
    out["wootters"] = std::move(w);
    if (opts.run_oracle) out["oracle"] = oracle_json(rho, opts.roof, wc);
    out["distance_to_maximally_mixed"] = distance_to_maximally_mixed(rho);
  }
  out["kind"] = "density";
  out["rank"] = rank;
  out["spectrum"] = spec.weights;
  return out;
}

}  // namespace

json measure_report(const StateInput& state, const MeasureOptions& opts) {
  return std::visit([&](const auto& in) { return report(in, opts); }, state);
}

int cmd_measure(std::istream& in, std::ostream& out, std::ostream& err, const MeasureOptions& opts) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitInputError;
  }
  try {
    const json rep = measure_report(parse_state(doc), opts);
    out << rep.dump(2) << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariantFailure;
  }
  if (!out) {
    err << "error: failed writing the report\n";
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace qconc::app
