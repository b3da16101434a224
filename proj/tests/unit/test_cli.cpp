#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "skewlab/cli.hpp"
#include "table.hpp"

using namespace skewlab;
using namespace skewlab::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Runs the installed binary through the shell; returns exit code and stdout.
Result shell(const std::string& command) {
  const std::string full = std::string(SKEWLAB_TOOL_PATH) + " " + command + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, "", ""};
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Spec, KnownFamiliesAndParams) {
  const auto& fams = known_families();
  for (const char* f : {"azzalini", "skewsym-custom", "orderstats", "marshall-olkin",
                        "twopiece-eps", "twopiece-isf", "twopiece-ab"}) {
    EXPECT_EQ(fams.count(f), 1u) << f;
  }
  MechanismSpec spec{"marshall-olkin", {}};
  add_param(spec, "gamma=2");
  EXPECT_EQ(spec.params.at("gamma"), 2.0);
  EXPECT_NEAR(make_mechanism(spec)->p(1.0 - 1e-12), 2.0, 1e-9);
  EXPECT_THROW(add_param(spec, "gamma"), ParameterError);
  EXPECT_THROW(add_param(spec, "gamma=two"), ParameterError);
  EXPECT_THROW(add_param(spec, "=2"), ParameterError);

  EXPECT_THROW(make_mechanism({"nope", {}}), ParameterError);
  EXPECT_THROW(make_mechanism({"azzalini", {}}), ParameterError);
  EXPECT_THROW(make_mechanism({"azzalini", {{"alpha", 1.0}, {"beta", 1.0}}}), ParameterError);
  EXPECT_THROW(make_mechanism({"orderstats", {{"psi1", -1.0}, {"psi2", 1.0}}}),
               ParameterError);
  EXPECT_THROW(make_mechanism({"twopiece-eps", {{"gamma", 1.0}}}), ParameterError);
  EXPECT_TRUE(make_mechanism({"twopiece-ab", {{"a", 2.0}, {"b", 2.0}}})->is_identity());
  EXPECT_TRUE(make_mechanism({"normal", {}})->is_identity());
}

TEST(Spec, GridsAndLists) {
  EXPECT_EQ(parse_grid("0:1:3"), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(parse_grid("-2:2:5").front(), -2.0);
  EXPECT_EQ(parse_grid("-2:2:5").back(), 2.0);
  EXPECT_THROW(parse_grid("0:1:1"), ParameterError);
  EXPECT_THROW(parse_grid("0:1"), ParameterError);
  EXPECT_THROW(parse_grid("a:1:3"), ParameterError);
  EXPECT_EQ(parse_list("1.5,2,30"), (std::vector<double>{1.5, 2.0, 30.0}));
  EXPECT_THROW(parse_list(""), ParameterError);
  EXPECT_THROW(parse_list("1,,2"), ParameterError);
}

TEST(Spec, ToleranceFromEnv) {
  EXPECT_EQ(tolerance_from_env().abs_tol, Tolerance{}.abs_tol);
  {
    ScopedEnv env("SKEWLAB_TOL", "1e-6");
    EXPECT_EQ(tolerance_from_env().abs_tol, 1e-6);
  }
  {
    ScopedEnv env("SKEWLAB_TOL", "-1");
    EXPECT_THROW(tolerance_from_env(), ParameterError);
  }
}

TEST(Table, CsvQuotingAndNumbers) {
  Table t({"name", "value", "ok"});
  t.add({std::string("a,b"), 0.1, true});
  t.add({std::string("say \"hi\""), std::numeric_limits<double>::infinity(), false});
  std::ostringstream os;
  t.write(os, Format::Csv);
  EXPECT_EQ(os.str(), "name,value,ok\n\"a,b\",0.1,true\n\"say \"\"hi\"\"\",inf,false\n");
  const json j = t.to_json();
  EXPECT_EQ(j[0]["name"], "a,b");
  EXPECT_EQ(j[0]["value"], 0.1);
  EXPECT_TRUE(j[1]["value"].is_null());
  EXPECT_EQ(format_real(1.0 / 3.0), "0.3333333333333333");
}

TEST(Eval, MarshallOlkinCdfAtZero) {
  const auto r = invoke({"eval", "--family", "marshall-olkin", "--param", "gamma=2", "--what",
                         "cdf", "--points", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "x,value");
  EXPECT_EQ(ls[1].rfind("0,0.33333333333333", 0), 0u) << ls[1];
}

TEST(Eval, OrderStatisticsOneOneIsNormal) {
  const auto r = invoke({"eval", "--family", "orderstats", "--param", "psi1=1", "--param",
                         "psi2=1", "--what", "pdf", "--grid", "-4:4:17", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 17u);
  for (const auto& row : j) {
    const double x = row["x"];
    EXPECT_NEAR(row["value"].get<double>(), numcore::normal_pdf(x), 1e-15);
  }
}

TEST(Eval, TwoPieceCdf) {
  const auto r = invoke({"eval", "--family", "twopiece-eps", "--param", "gamma=-0.5",
                         "--what", "cdf", "--points", "1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(json::parse(r.out)[0]["value"].get<double>(), 0.6212611936796156, 1e-15);
}

TEST(Eval, EveryQuantity) {
  for (const char* what : {"pdf", "logpdf", "cdf", "logcdf", "logsf", "sf"}) {
    const auto r = invoke({"eval", "--family", "azzalini", "--param", "alpha=2", "--what",
                           what, "--grid", "-3:3:7"});
    EXPECT_EQ(r.code, kExitOk) << what << r.err;
    EXPECT_EQ(lines(r.out).size(), 8u);
  }
  const auto q = invoke({"eval", "--family", "marshall-olkin", "--param", "gamma=2", "--what",
                         "quantile", "--points", "0.3333333333333333", "--format", "json"});
  ASSERT_EQ(q.code, kExitOk) << q.err;
  EXPECT_NEAR(json::parse(q.out)[0]["value"].get<double>(), 0.0, 1e-12);
  const auto p = invoke({"eval", "--family", "marshall-olkin", "--param", "gamma=2", "--what",
                         "p", "--points", "0.5", "--format", "json"});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  EXPECT_NEAR(json::parse(p.out)[0]["value"].get<double>(), 2.0 / 2.25, 1e-15);
}

TEST(Eval, UsageErrors) {
  const std::vector<std::vector<std::string>> bad = {
      {"eval", "--family", "nope", "--points", "0"},
      {"eval", "--family", "azzalini", "--points", "0"},
      {"eval", "--family", "azzalini", "--param", "alpha=1", "--what", "quantile", "--points",
       "1.5"},
      {"eval", "--family", "azzalini", "--param", "alpha=1", "--what", "p", "--grid", "0:1:3"},
      {"eval", "--family", "azzalini", "--param", "alpha=1"},
      {"eval", "--family", "azzalini", "--param", "alpha=1", "--grid", "0:1:3", "--points",
       "1"},
      {"eval", "--family", "azzalini", "--param", "alpha=1", "--grid", "0:1:1"},
      {"eval", "--family", "azzalini", "--param", "alpha=1", "--what", "mean", "--points", "1"},
      {"eval", "--family", "azzalini", "--param", "alpha=1", "--points", "1", "--format",
       "xml"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : bad) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "(none)" : args[0]);
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Sample, SeededOutputIsReproducible) {
  const std::vector<std::string> args = {"sample", "--family", "orderstats", "--param",
                                         "psi1=1",  "--param",  "psi2=1",     "--n",
                                         "5",       "--seed",   "1"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto ls = lines(a.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0], "y");
  const auto j = invoke({"sample", "--family", "azzalini", "--param", "alpha=1", "--n", "4",
                         "--seed", "3", "--method", "flip", "--format", "json"});
  ASSERT_EQ(j.code, kExitOk) << j.err;
  EXPECT_EQ(json::parse(j.out).size(), 4u);
}

TEST(Sample, UnseededReportsSeed) {
  const auto r = invoke({"sample", "--family", "marshall-olkin", "--param", "gamma=2", "--n",
                         "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("seed"), std::string::npos);
  EXPECT_EQ(lines(r.out).size(), 4u);
}

TEST(Sample, Errors) {
  EXPECT_EQ(invoke({"sample", "--family", "marshall-olkin", "--param", "gamma=2", "--n", "0",
                    "--seed", "1"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"sample", "--family", "marshall-olkin", "--param", "gamma=2", "--n", "5",
                    "--seed", "1", "--method", "flip"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"sample", "--family", "marshall-olkin", "--param", "gamma=2", "--n", "5",
                    "--method", "magic"})
                .code,
            kExitUsage);
}

TEST(Tail, NormalAtTen) {
  const auto r = invoke({"tail", "--family", "normal", "--ys", "10", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j[0]["statistic"].get<double>(), 2.282, 1e-3);
  EXPECT_NEAR(j[0]["log_tail"].get<double>(), -52.538137969952523, 1e-12);
  const auto csv = invoke({"tail", "--family", "normal", "--ys", "10"});
  EXPECT_EQ(lines(csv.out)[0], "y,log_tail,statistic");
}

TEST(Tail, AzzaliniStatisticShape) {
  // On the default grid T dips before it climbs (as for the normal law
  // itself); from y = 5 on it is strictly increasing.
  const auto r = invoke({"tail", "--family", "azzalini", "--param", "alpha=1", "--format",
                         "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 9u);
  EXPECT_GT(j[0]["statistic"].get<double>(), j[1]["statistic"].get<double>());
  for (std::size_t i = 4; i < j.size(); ++i) {
    EXPECT_GT(j[i]["statistic"].get<double>(), j[i - 1]["statistic"].get<double>());
  }
}

TEST(Tail, Errors) {
  EXPECT_EQ(invoke({"tail", "--family", "normal", "--ys", ""}).code, kExitUsage);
  EXPECT_EQ(invoke({"tail", "--family", "normal", "--ys", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"tail", "--family", "normal", "--ys", "0.5,2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"tail", "--family", "normal", "--ys", "3,2"}).code, kExitUsage);
}

TEST(Check, Verdicts) {
  const auto az = invoke({"check", "--family", "azzalini", "--param", "alpha=2"});
  ASSERT_EQ(az.code, kExitOk) << az.err;
  const json a = json::parse(az.out);
  EXPECT_EQ(a["verdict"], "NOT_ID");
  EXPECT_EQ(a["rule"], "theorem-1");
  EXPECT_EQ(a["bound"], 2.0);
  EXPECT_TRUE(a["evidence"]["sup_trace"].is_array());
  EXPECT_EQ(a["evidence"]["tail_rows"].size(), 9u);

  const json tp = json::parse(invoke({"check", "--family", "twopiece-eps", "--param",
                                      "gamma=0"}).out);
  EXPECT_EQ(tp["verdict"], "NORMAL_ESCAPE");

  const json os = json::parse(invoke({"check", "--family", "orderstats", "--param",
                                      "psi1=0.5", "--param", "psi2=2"}).out);
  EXPECT_EQ(os["verdict"], "INCONCLUSIVE");
  EXPECT_TRUE(os["bound"].is_null());

  const json t2 = json::parse(invoke({"check", "--family", "twopiece-eps", "--param",
                                      "gamma=0.3"}).out);
  EXPECT_EQ(t2["rule"], "theorem-2");

  EXPECT_EQ(invoke({"check", "--family", "orderstats", "--param", "psi1=0"}).code,
            kExitUsage);
}

TEST(Verify, Suites) {
  const auto thm2 = invoke({"verify", "thm2", "--gamma", "-0.5"});
  ASSERT_EQ(thm2.code, kExitOk) << thm2.err;
  const auto ls = lines(thm2.out);
  EXPECT_EQ(ls[0], "suite,case_id,lhs,rhs,pass");
  EXPECT_EQ(ls.size(), 1u + 2u * 9u);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    EXPECT_EQ(ls[i].substr(ls[i].size() - 4), "true") << ls[i];
  }
  for (const char* suite : {"thm1", "roundtrip", "all"}) {
    const auto r = invoke({"verify", suite});
    EXPECT_EQ(r.code, kExitOk) << suite << r.err;
  }
  const auto j = invoke({"verify", "thm1", "--format", "json"});
  for (const auto& row : json::parse(j.out)) EXPECT_TRUE(row["pass"].get<bool>());
  EXPECT_EQ(invoke({"verify", "bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "thm2", "--gamma", "0"}).code, kExitUsage);
}

TEST(Ks, AgainstSpec) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto sample_path = dir / "skewlab_ks_samples.csv";
  const auto s = invoke({"sample", "--family", "marshall-olkin", "--param", "gamma=2", "--n",
                         "20000", "--seed", "5", "--out", sample_path.string()});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_TRUE(s.out.empty());
  const auto good = invoke({"ks", "--family", "marshall-olkin", "--param", "gamma=2", "--in",
                            sample_path.string(), "--format", "json"});
  ASSERT_EQ(good.code, kExitOk) << good.err;
  const json g = json::parse(good.out);
  EXPECT_EQ(g[0]["n"], 20000);
  EXPECT_TRUE(g[0]["pass"].get<bool>());
  const auto bad = invoke({"ks", "--family", "marshall-olkin", "--param", "gamma=0.25", "--in",
                           sample_path.string()});
  EXPECT_EQ(bad.code, kExitVerifyFailed);
  std::filesystem::remove(sample_path);
}

TEST(Binary, ExitCodesAndPipes) {
  const auto ok = shell("eval --family marshall-olkin --param gamma=2 --what cdf --points 0");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("x,value\n0,0.33333333333333", 0), 0u) << ok.out;
  EXPECT_EQ(shell("eval --family nope --points 0").code, 2);
  EXPECT_EQ(shell("--help").code, 0);

  const auto a = shell("sample --family normal --n 5 --seed 1");
  const auto b = shell("sample --family normal --n 5 --seed 1");
  EXPECT_EQ(a.out, b.out);

  const std::string tool = SKEWLAB_TOOL_PATH;
  const auto piped = shell("sample --family marshall-olkin --param gamma=2 --n 100000 --seed 9 | " +
                           tool + " ks --family marshall-olkin --param gamma=2");
  EXPECT_EQ(piped.code, 0) << piped.out;
}

TEST(Binary, ToleranceEnvironment) {
  const auto r = shell("eval --family azzalini --param alpha=1 --what quantile --points 0.3 "
                       "--format json");
  ASSERT_EQ(r.code, 0);
  const double tight = json::parse(r.out)[0]["value"];
  ScopedEnv env("SKEWLAB_TOL", "1e-3");
  const auto loose = shell("eval --family azzalini --param alpha=1 --what quantile "
                           "--points 0.3 --format json");
  ASSERT_EQ(loose.code, 0);
  EXPECT_NEAR(json::parse(loose.out)[0]["value"].get<double>(), tight, 1e-2);
  ScopedEnv broken("SKEWLAB_TOL", "zero");
  EXPECT_EQ(shell("eval --family normal --points 0").code, 2);
}
