#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/cli.hpp"
#include "table.hpp"

namespace skewlab::cli {

struct Options {
  MechanismSpec spec;
  std::vector<std::string> raw_params;
  std::string what = "pdf";
  std::string grid;
  std::string points;
  std::optional<std::string> ys;
  std::string method = "inversion";
  std::string suite = "all";
  std::string input = "-";
  std::vector<double> gammas;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> seed;
  Format format = Format::Csv;
  Tolerance tol;
};

/// Each returns the exit code; results go to `out`, diagnostics to `err`.
int cmd_eval(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_sample(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_tail(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_check(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_ks(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace skewlab::cli
