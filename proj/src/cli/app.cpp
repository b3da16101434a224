#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace skewlab::cli {

namespace {

const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}};

void add_spec_options(CLI::App& sub, Options& opt) {
  sub.add_option("--family", opt.spec.family, "mechanism family")->required();
  sub.add_option("--param", opt.raw_params, "family parameter as name=value (repeatable)")
      ->take_all();
}

void add_output_options(CLI::App& sub, Options& opt, std::string& out_path) {
  sub.add_option("--format", opt.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  sub.add_option("--out", out_path, "write results here instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string out_path;

  CLI::App app{"Skewed-normal constructions and non-divisibility diagnostics", "skewlab"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate pdf, cdf, quantile or p on a grid");
  add_spec_options(*eval, opt);
  eval->add_option("--what", opt.what, "pdf|logpdf|cdf|sf|logcdf|logsf|quantile|p");
  eval->add_option("--grid", opt.grid, "lo:hi:n evenly spaced inputs");
  eval->add_option("--points", opt.points, "comma-separated inputs");
  add_output_options(*eval, opt, out_path);

  auto* sample = app.add_subcommand("sample", "draw samples");
  add_spec_options(*sample, opt);
  sample->add_option("--n", opt.n, "number of draws")->required();
  sample->add_option("--seed", opt.seed, "64-bit seed; omitted means fresh entropy");
  sample->add_option("--method", opt.method, "inversion or flip (skew-symmetric only)");
  add_output_options(*sample, opt, out_path);

  auto* tail = app.add_subcommand("tail", "tail masses and the Steutel statistic");
  add_spec_options(*tail, opt);
  tail->add_option("--ys", opt.ys, "comma-separated increasing y > 1");
  add_output_options(*tail, opt, out_path);

  auto* check = app.add_subcommand("check", "divisibility verdict as JSON");
  add_spec_options(*check, opt);
  check->add_option("--out", out_path, "write results here instead of standard output");

  auto* verify = app.add_subcommand("verify", "run the shipped verification suites");
  verify->add_option("suite", opt.suite, "thm1|thm2|roundtrip|all");
  verify->add_option("--ys", opt.ys, "comma-separated y grid");
  verify->add_option("--gamma", opt.gammas, "epsilon-skew gammas for thm2 (repeatable)")
      ->take_all();
  add_output_options(*verify, opt, out_path);

  auto* ks = app.add_subcommand("ks", "Kolmogorov-Smirnov test of samples against a spec");
  add_spec_options(*ks, opt);
  ks->add_option("--in", opt.input, "newline-delimited samples, '-' for standard input");
  add_output_options(*ks, opt, out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& p : opt.raw_params) add_param(opt.spec, p);
    opt.tol = tolerance_from_env();
    if (check->parsed()) opt.format = Format::Json;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty() && out_path != "-") {
      file.open(out_path);
      if (!file) throw ParameterError("cannot open --out file '" + out_path + "'");
      sink = &file;
    }

    int code = kExitOk;
    if (eval->parsed()) code = cmd_eval(opt, *sink, err);
    if (sample->parsed()) code = cmd_sample(opt, *sink, err);
    if (tail->parsed()) code = cmd_tail(opt, *sink, err);
    if (check->parsed()) code = cmd_check(opt, *sink, err);
    if (verify->parsed()) code = cmd_verify(opt, *sink, err);
    if (ks->parsed()) {
      if (opt.input == "-") {
        code = cmd_ks(opt, std::cin, *sink, err);
      } else {
        std::ifstream in(opt.input);
        if (!in) throw ParameterError("cannot open --in file '" + opt.input + "'");
        code = cmd_ks(opt, in, *sink, err);
      }
    }
    sink->flush();
    if (!*sink) throw std::runtime_error("failed writing output");
    return code;
  } catch (const std::exception& e) {
    err << "skewlab: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace skewlab::cli
