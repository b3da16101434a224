#include "commands.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <random>

#include "skewlab/divisibility.hpp"
#include "skewlab/kernels.hpp"
#include "skewlab/montecarlo.hpp"

namespace skewlab::cli {

namespace {

std::vector<double> eval_inputs(const Options& opt) {
  if (opt.grid.empty() == opt.points.empty()) {
    throw ParameterError("eval: give exactly one of --grid lo:hi:n or --points list");
  }
  return opt.grid.empty() ? parse_list(opt.points) : parse_grid(opt.grid);
}

Json params_json(const MechanismSpec& spec) {
  Json obj = Json::object();
  for (const auto& [name, value] : spec.params) obj[name] = real_json(value);
  return obj;
}

bool parse_sample_line(const std::string& line, double& value) {
  std::size_t a = 0;
  std::size_t b = line.size();
  while (a < b && (line[a] == ' ' || line[a] == '\t')) ++a;
  while (b > a && (line[b - 1] == ' ' || line[b - 1] == '\t' || line[b - 1] == '\r')) --b;
  if (a == b) return false;
  if (line[a] == '+') ++a;
  const auto [end, ec] = std::from_chars(line.data() + a, line.data() + b, value);
  return ec == std::errc{} && end == line.data() + b;
}

}  // namespace

int cmd_eval(const Options& opt, std::ostream& out, std::ostream&) {
  const MechanismPtr mech = make_mechanism(opt.spec, opt.tol);
  const std::vector<double> xs = eval_inputs(opt);
  const SkewedDistribution dist(mech);
  const std::string& what = opt.what;
  const bool unit_input = what == "quantile" || what == "p";
  for (const double x : xs) {
    if (!std::isfinite(x)) throw DomainError("eval: inputs must be finite");
    if (unit_input && !(x > 0.0 && x < 1.0)) {
      throw DomainError("eval: --what " + what + " needs inputs inside (0,1)");
    }
  }

  std::vector<double> values(xs.size());
  using kernels::Quantity;
  if (what == "pdf") {
    kernels::evaluate(dist, Quantity::Pdf, xs, values);
  } else if (what == "logpdf") {
    kernels::evaluate(dist, Quantity::LogPdf, xs, values);
  } else if (what == "cdf") {
    kernels::evaluate(dist, Quantity::Cdf, xs, values);
  } else if (what == "logcdf") {
    kernels::evaluate(dist, Quantity::LogCdf, xs, values);
  } else if (what == "logsf") {
    kernels::evaluate(dist, Quantity::LogSf, xs, values);
  } else if (what == "sf") {
    for (std::size_t i = 0; i < xs.size(); ++i) values[i] = dist.sf(xs[i]);
  } else if (what == "quantile") {
    kernels::evaluate(dist, Quantity::Quantile, xs, values);
  } else if (what == "p") {
    for (std::size_t i = 0; i < xs.size(); ++i) values[i] = mech->p(xs[i]);
  } else {
    throw ParameterError("eval: unknown --what '" + what + "'");
  }

  Table table({"x", "value"});
  for (std::size_t i = 0; i < xs.size(); ++i) table.add({xs[i], values[i]});
  table.write(out, opt.format);
  return kExitOk;
}

int cmd_sample(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1) throw ParameterError("sample: --n must be at least 1");
  const MechanismPtr mech = make_mechanism(opt.spec, opt.tol);
  std::uint64_t seed = 0;
  if (opt.seed) {
    seed = *opt.seed;
  } else {
    std::random_device entropy;
    seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
    err << "sample: no --seed given, drawing fresh entropy (seed " << seed << ")\n";
  }
  RngState rng(seed);
  std::vector<double> draws;
  if (opt.method == "inversion") {
    draws = sample_skewed(SkewedDistribution(mech), rng, opt.n);
  } else if (opt.method == "flip") {
    const auto* ss = dynamic_cast<const SkewSymmetric*>(mech.get());
    if (ss == nullptr) {
      throw ParameterError("sample: --method flip needs a skew-symmetric family");
    }
    draws = sample_flip(ss->skewing_function(), rng, opt.n);
  } else {
    throw ParameterError("sample: unknown --method '" + opt.method + "'");
  }

  if (opt.format == Format::Json) {
    Json arr = Json::array();
    for (const double v : draws) arr.push_back(real_json(v));
    out << arr.dump() << '\n';
  } else {
    out << "y\n";
    for (const double v : draws) out << format_real(v) << '\n';
  }
  return kExitOk;
}

int cmd_tail(const Options& opt, std::ostream& out, std::ostream&) {
  const std::vector<double> ys = !opt.ys
                                     ? std::vector<double>(std::begin(kDefaultTailGrid),
                                                           std::end(kDefaultTailGrid))
                                     : parse_list(*opt.ys);
  const SkewedDistribution dist(make_mechanism(opt.spec, opt.tol));
  const TailReport report = steutel_statistic(dist, ys);
  Table table({"y", "log_tail", "statistic"});
  for (const auto& row : report.rows) table.add({row.y, row.log_tail.value(), row.statistic});
  table.write(out, opt.format);
  return kExitOk;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.format != Format::Json) throw ParameterError("check: output is JSON only");
  const MechanismPtr mech = make_mechanism(opt.spec, opt.tol);
  const DivisibilityVerdict v = divisibility_verdict(*mech);

  Json trace = Json::array();
  for (const auto& entry : v.boundedness.refinement_trace) {
    trace.push_back({{"grid_size", entry.grid_size}, {"sup", real_json(entry.sup)}});
  }
  Json tail = Json::array();
  for (const auto& row : v.tail.rows) {
    tail.push_back({{"y", row.y},
                    {"log_tail", real_json(row.log_tail.value())},
                    {"statistic", real_json(row.statistic)},
                    {"flagged", row.flagged}});
  }
  const auto optional_json = [](const std::optional<double>& x) {
    return x ? real_json(*x) : Json(nullptr);
  };

  Json doc = Json::object();
  doc["family"] = opt.spec.family;
  doc["params"] = params_json(opt.spec);
  doc["mechanism"] = mech->describe();
  doc["verdict"] = to_string(v.verdict);
  doc["rule"] = v.rule;
  doc["bound"] = optional_json(v.bound);
  doc["note"] = v.note;
  doc["evidence"] = {{"classification", to_string(v.boundedness.classification)},
                     {"sup_estimate", real_json(v.boundedness.sup_estimate)},
                     {"analytic_bound", optional_json(v.boundedness.analytic_bound)},
                     {"sup_trace", trace},
                     {"tail_rows", tail}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_ks(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const SkewedDistribution dist(make_mechanism(opt.spec, opt.tol));
  std::vector<double> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    double v = 0.0;
    if (parse_sample_line(line, v)) {
      samples.push_back(v);
    } else if (line_no > 1 && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw DomainError("ks: line " + std::to_string(line_no) + " is not a number");
    }
  }
  if (samples.empty()) throw DomainError("ks: no samples read");
  if (samples.size() < 10000) {
    err << "ks: warning, n = " << samples.size()
        << " is below 1e4, where the asymptotic critical value is loose\n";
  }
  const KsResult r = ks_test(samples, [&dist](double y) { return dist.cdf(y); });
  Table table({"statistic", "n", "critical_1pct", "pass"});
  table.add({r.statistic, static_cast<std::uint64_t>(r.n), r.critical_1pct, r.passed()});
  table.write(out, opt.format);
  return r.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace skewlab::cli
