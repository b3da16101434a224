#include <cmath>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "skewlab/catalog.hpp"
#include "skewlab/divisibility.hpp"

namespace skewlab::cli {

namespace {

constexpr double kRoundTripTol = 1e-7;

struct SuiteRun {
  std::string name;
  std::size_t rows = 0;
  std::size_t failures = 0;
};

std::string with_y(const std::string& id, double y) {
  return id + " y=" + format_real(y);
}

class Recorder {
 public:
  Recorder(Table& table, std::ostream& err) : table_(table), err_(err) {}

  void row(SuiteRun& run, const std::string& case_id, double lhs, double rhs, bool pass) {
    table_.add({run.name, case_id, lhs, rhs, pass});
    ++run.rows;
    if (!pass) {
      ++run.failures;
      err_ << "FAIL " << run.name << ' ' << case_id << ": lhs " << format_real(lhs)
           << " rhs " << format_real(rhs) << '\n';
    }
  }

 private:
  Table& table_;
  std::ostream& err_;
};

void run_thm1(SuiteRun& run, Recorder& rec, const std::vector<double>& ys) {
  for (const auto& inst : shipped_instances()) {
    const auto bound = certified_bound(*inst.mechanism, estimate_sup_p(*inst.mechanism));
    if (!bound) continue;
    for (const auto& r : verify_theorem1_bound(*inst.mechanism, *bound, ys)) {
      rec.row(run, with_y(inst.id, r.y), r.lhs, r.rhs, r.pass);
    }
  }
}

void run_thm2(SuiteRun& run, Recorder& rec, const std::vector<double>& ys,
              const std::vector<double>& gammas) {
  for (const double gamma : gammas) {
    const std::string id = "gamma=" + format_real(gamma);
    for (const auto& r : verify_theorem2_chain(gamma, ys)) {
      rec.row(run, with_y(id, r.y) + " tail<middle", r.log_tail, r.log_middle, r.first_pass);
      rec.row(run, with_y(id, r.y) + " middle<right", r.log_middle, r.log_right,
              r.second_pass);
    }
  }
}

void run_roundtrip(SuiteRun& run, Recorder& rec) {
  for (const auto& inst : shipped_instances()) {
    const auto dist = std::make_shared<SkewedDistribution>(inst.mechanism);
    const MechanismPtr extracted = extract_mechanism(dist, StandardNormal{});
    const SkewedDistribution recomposed(extracted);
    double p_err = 0.0;
    double pdf_err = 0.0;
    for (int i = 1; i <= 99; ++i) {
      const double x = i / 100.0;
      p_err = std::max(p_err, std::abs(extracted->p(x) - inst.mechanism->p(x)));
      const double y = numcore::normal_quantile(x);
      pdf_err = std::max(pdf_err, std::abs(recomposed.pdf(y) - dist->pdf(y)));
    }
    rec.row(run, inst.id + " extract-p", p_err, kRoundTripTol, p_err <= kRoundTripTol);
    rec.row(run, inst.id + " recompose-pdf", pdf_err, kRoundTripTol,
            pdf_err <= kRoundTripTol);
  }
}

}  // namespace

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string& suite = opt.suite;
  if (suite != "thm1" && suite != "thm2" && suite != "roundtrip" && suite != "all") {
    throw ParameterError("verify: suite must be thm1, thm2, roundtrip or all");
  }
  const std::vector<double> ys =
      !opt.ys
          ? std::vector<double>(std::begin(kDefaultTailGrid), std::end(kDefaultTailGrid))
          : parse_list(*opt.ys);
  std::vector<double> gammas = opt.gammas;
  if (gammas.empty()) {
    for (const double g : kChainGammas) {
      gammas.push_back(g);
      gammas.push_back(-g);
    }
  }

  Table table({"suite", "case_id", "lhs", "rhs", "pass"});
  Recorder rec(table, err);
  std::vector<SuiteRun> runs;
  if (suite == "thm1" || suite == "all") {
    runs.push_back({"thm1"});
    run_thm1(runs.back(), rec, ys);
  }
  if (suite == "thm2" || suite == "all") {
    runs.push_back({"thm2"});
    run_thm2(runs.back(), rec, ys, gammas);
  }
  if (suite == "roundtrip" || suite == "all") {
    runs.push_back({"roundtrip"});
    run_roundtrip(runs.back(), rec);
  }
  table.write(out, opt.format);

  std::size_t failures = 0;
  err << "suite      rows  failures\n";
  for (const auto& r : runs) {
    std::ostringstream line;
    line.width(10);
    line << std::left << r.name << ' ';
    line.width(5);
    line << std::right << r.rows << ' ';
    line.width(9);
    line << r.failures;
    err << line.str() << '\n';
    failures += r.failures;
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace skewlab::cli
