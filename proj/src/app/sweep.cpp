#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "qconc/app/commands.hpp"
#include "qconc/app/format.hpp"
#include "qconc/error.hpp"

namespace qconc::app {

namespace {

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw InputError(std::string(what) + ": cannot parse \"" + std::string(text) + "\"");
  }
  return v;
}

}  // namespace

GridRange parse_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos) throw InputError("range: expected lo:hi:n, got \"" + text + "\"");
  const std::string_view view(text);
  GridRange r;
  r.lo = parse_double(view.substr(0, first), "range lo");
  r.hi = parse_double(view.substr(first + 1, second - first - 1), "range hi");
  const std::string_view count = view.substr(second + 1);
  const auto res = std::from_chars(count.data(), count.data() + count.size(), r.n);
  if (res.ec != std::errc{} || res.ptr != count.data() + count.size()) {
    throw InputError("range n: cannot parse \"" + std::string(count) + "\"");
  }
  if (r.n < 2) throw InputError("range: n must be at least 2");
  if (!(r.lo < r.hi)) throw InputError("range: lo must be below hi");
  return r;
}

double parse_probability(const std::string& text) {
  const auto slash = text.find('/');
  double p = 0.0;
  if (slash == std::string::npos) {
    p = parse_double(text, "p");
  } else {
    const double num = parse_double(std::string_view(text).substr(0, slash), "p numerator");
    const double den = parse_double(std::string_view(text).substr(slash + 1), "p denominator");
    if (den == 0.0) throw InputError("p: zero denominator");
    p = num / den;
  }
  if (p < 0.0 || p > 1.0) throw InputError("p must lie in [0, 1]");
  return p;
}

std::string sweep_csv(const SweepSpec& spec) {
  std::ostringstream os;
  if (spec.mode == SweepMode::kAlphaSurface) {
    if (spec.p < 0.0 || spec.p > 1.0) throw InputError("p must lie in [0, 1]");
    os << "alpha,alpha_p,x,c_squared\n";
    for (int i = 0; i < spec.range.n; ++i) {
      const double a = spec.range.at(i);
      for (int k = 0; k < spec.range.n; ++k) {
        const double ap = spec.range.at(k);
        os << format_sig9(a) << ',' << format_sig9(ap) << ',' << format_sig9(symmetric_ratio(a, ap)) << ','
           << format_sig9(reduced_symmetric_concurrence(spec.p, a, ap)) << '\n';
      }
    }
  } else {
    if (spec.range.lo < 0.0) throw InputError("X range must be nonnegative");
    if (spec.p_range.lo < 0.0 || spec.p_range.hi > 1.0) throw InputError("p range must lie in [0, 1]");
    os << "p,x,c_squared\n";
    for (int i = 0; i < spec.p_range.n; ++i) {
      const double p = spec.p_range.at(i);
      for (int k = 0; k < spec.range.n; ++k) {
        const double x = spec.range.at(k);
        const double c = p / (1.0 + 2.0 * x);
        os << format_sig9(p) << ',' << format_sig9(x) << ',' << format_sig9(c * c) << '\n';
      }
    }
  }
  return os.str();
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::string csv;
  try {
    csv = sweep_csv(spec);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (out_path.empty() || out_path == "-") {
    out << csv;
    return out ? kExitOk : kExitIoError;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << csv;
  f.close();
  if (!f) {
    err << "error: cannot write " << out_path << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace qconc::app
