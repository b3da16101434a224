#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string_view>

#include "skewlab/cli.hpp"

namespace skewlab::cli {

namespace {

double parse_real(std::string_view text, const std::string& what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw ParameterError(what + ": cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

double get(const MechanismSpec& spec, const std::string& name) {
  return spec.params.at(name);
}

}  // namespace

const std::map<std::string, std::vector<std::string>>& known_families() {
  static const std::map<std::string, std::vector<std::string>> families{
      {"azzalini", {"alpha"}},
      {"skewsym-custom", {"lambda"}},
      {"orderstats", {"psi1", "psi2"}},
      {"marshall-olkin", {"gamma"}},
      {"twopiece-eps", {"gamma"}},
      {"twopiece-isf", {"gamma"}},
      {"twopiece-ab", {"a", "b"}},
      {"normal", {}},
  };
  return families;
}

void add_param(MechanismSpec& spec, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ParameterError("--param expects name=value, got '" + assignment + "'");
  }
  const std::string name = assignment.substr(0, eq);
  spec.params[name] = parse_real(std::string_view(assignment).substr(eq + 1), "--param " + name);
}

MechanismPtr make_mechanism(const MechanismSpec& spec, const Tolerance& tol) {
  const auto& families = known_families();
  const auto it = families.find(spec.family);
  if (it == families.end()) {
    std::string names;
    for (const auto& [name, params] : families) names += (names.empty() ? "" : ", ") + name;
    throw ParameterError("unknown family '" + spec.family + "' (expected one of " + names + ")");
  }
  const auto& expected = it->second;
  for (const auto& name : expected) {
    if (!spec.params.count(name)) {
      throw ParameterError(spec.family + ": missing parameter '" + name + "'");
    }
  }
  for (const auto& [name, value] : spec.params) {
    if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
      throw ParameterError(spec.family + ": unexpected parameter '" + name + "'");
    }
    if (!std::isfinite(value)) {
      throw ParameterError(spec.family + ": parameter '" + name + "' must be finite");
    }
  }

  const std::string& f = spec.family;
  if (f == "azzalini") return make_azzalini(get(spec, "alpha"), tol);
  if (f == "skewsym-custom") {
    return std::make_shared<SkewSymmetric>(logistic_pi(get(spec, "lambda")), tol);
  }
  if (f == "orderstats") {
    return std::make_shared<OrderStatistics>(get(spec, "psi1"), get(spec, "psi2"), tol);
  }
  if (f == "marshall-olkin") return std::make_shared<MarshallOlkin>(get(spec, "gamma"));
  if (f == "twopiece-eps") return TwoPiece::epsilon_skew(get(spec, "gamma"));
  if (f == "twopiece-isf") return TwoPiece::inverse_scale(get(spec, "gamma"));
  if (f == "twopiece-ab") return std::make_shared<TwoPiece>(get(spec, "a"), get(spec, "b"));
  return std::make_shared<IdentityMechanism>();
}

Tolerance tolerance_from_env() {
  Tolerance tol;
  if (const char* raw = std::getenv("SKEWLAB_TOL"); raw != nullptr && *raw != '\0') {
    tol.abs_tol = parse_real(raw, "SKEWLAB_TOL");
    if (!(tol.abs_tol > 0.0) || !std::isfinite(tol.abs_tol)) {
      throw ParameterError("SKEWLAB_TOL must be a positive number");
    }
  }
  return tol;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw ParameterError("--grid expects lo:hi:n, got '" + text + "'");
  }
  const double lo = parse_real(std::string_view(text).substr(0, first), "--grid lo");
  const double hi =
      parse_real(std::string_view(text).substr(first + 1, second - first - 1), "--grid hi");
  const double count = parse_real(std::string_view(text).substr(second + 1), "--grid n");
  if (!(count >= 2.0) || count != std::floor(count) || count > 1e8) {
    throw ParameterError("--grid: n must be an integer >= 2");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw ParameterError("--grid: need finite lo < hi");
  }
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto stop = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_real(std::string_view(text).substr(start, stop - start), "list entry"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace skewlab::cli
