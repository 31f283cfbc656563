#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/quadrature.hpp"
#include "sbkd/cli.hpp"
#include "sbkd/io.hpp"

using namespace sbkd;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sbkd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "sbkd_test_cli_io";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

Sample parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_sample(in);
}

// a x^a (1 - x^a)^(b - 1) / B(1 + 1/a, b), written out independently.
double ref_pdf(double a, double b, double x) {
  return a * std::pow(x, a) * std::pow(1.0 - std::pow(x, a), b - 1.0) / oracle::beta_integral(1.0 + 1.0 / a, b);
}

}  // namespace

TEST_CASE("read_sample accepts header and blank lines") {
  const Sample s = parse("x\n0.25\n\n  0.5 \r\n0.75\n\n");
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 0.25);
  CHECK(s[1] == 0.5);
  CHECK(s[2] == 0.75);
  CHECK(parse("0.1\n0.2").size() == 2);
}

TEST_CASE("read_sample names the offending line") {
  try {
    parse("x\n0.2\n\n1.5\n0.3\n");
    FAIL("expected DataError");
  } catch (const io::DataError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  try {
    parse("0.2\nabc\n");
    FAIL("expected DataError");
  } catch (const io::DataError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("0\n"), io::DataError);
  CHECK_THROWS_AS(parse("1\n"), io::DataError);
  CHECK_THROWS_AS(parse("0.5\nx\n"), io::DataError);
  CHECK_THROWS_AS(parse("x\n\n"), io::DataError);
  CHECK_THROWS_AS(parse("nan\n"), io::DataError);
  CHECK_THROWS_AS(io::read_sample_file((scratch_dir() / "missing.csv").string()), io::DataError);
}

TEST_CASE("number formats round-trip") {
  for (double v : {0.1, 1.0 / 3.0, 2.5e-300, 0.9999999999999999, 123456.789}) {
    CHECK(std::stod(io::format_shortest(v)) == v);
    CHECK(std::stod(io::format_17(v)) == v);
  }
  CHECK(io::format_shortest(0.1) == "0.1");
  CHECK(io::format_17(0.1) == "0.10000000000000001");
  CHECK(io::format_shortest(INFINITY) == "inf");
  CHECK(io::format_shortest(-INFINITY) == "-inf");
  CHECK(io::format_shortest(NAN) == "nan");
}

TEST_CASE("written samples read back exactly") {
  SeededGenerator g(3);
  const Sample s = SizeBiasedKumaraswamy(SbkdParams(0.7, 2.2)).sample(200, g);
  std::ostringstream out;
  io::write_sample(out, s.values());
  const Sample back = parse(out.str());
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(back[i] == s[i]);
}

TEST_CASE("fit report JSON reproduces the information criteria") {
  SeededGenerator g(8);
  const Sample s = SizeBiasedKumaraswamy(SbkdParams(2, 3)).sample(100, g);
  for (Model m : {Model::SBKD, Model::Kum, Model::BetaI}) {
    for (Method meth : {Method::MLE, Method::MQE}) {
      const FitReport r = fit_model(m, meth, s);
      const auto j = io::Json::parse(io::to_json(r).dump(2));
      const double ll = j.at("loglik").get<double>();
      CHECK(ll == r.loglik);
      CHECK(j.at("aic").get<double>() == aic(ll, 2));
      CHECK(j.at("bic").get<double>() == bic(ll, 2, s.size()));
      CHECK(j.at("estimate1").get<double>() == r.estimate1);
      CHECK(j.at("converged").get<bool>() == r.converged);
      CHECK(j.at("model").get<std::string>() == to_string(m));
    }
  }
  std::vector<std::string> keys;
  const auto blank = io::to_json(FitReport{});
  for (const auto& [k, v] : blank.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"model", "method", "estimate1", "estimate2", "loglik", "aic", "bic",
                                         "std_errors", "converged", "iterations"});
}

TEST_CASE("study config parsing") {
  const auto j = io::Json::parse(R"({"true_params": [{"a": 1, "b": 1}, {"a": 3, "b": 2}],
                                      "sample_sizes": [100, 1000], "replications": 3, "seed": 5,
                                      "models": ["sbkd", "beta"], "method": "mqe", "probs": [0.25, 0.75]})");
  const auto cfgs = io::parse_study_config(j);
  REQUIRE(cfgs.size() == 2);
  CHECK(cfgs[1].true_params == SbkdParams(3, 2));
  CHECK(cfgs[0].sample_sizes == std::vector<std::size_t>{100, 1000});
  CHECK(cfgs[0].replications == 3);
  CHECK(cfgs[0].seed == 5);
  CHECK(cfgs[0].models == std::vector<Model>{Model::SBKD, Model::BetaI});
  CHECK(cfgs[0].method == Method::MQE);
  CHECK(cfgs[0].options.grid.probs()[0] == 0.25);

  const auto single = io::parse_study_config(io::Json::parse(R"({"true_params": {"a": 2, "b": 3}, "sample_sizes": [10]})"));
  REQUIRE(single.size() == 1);
  CHECK(single[0].seed == cli::kDefaultSeed);

  for (const char* bad : {R"([])", R"({"sample_sizes": [10]})", R"({"true_params": {"a": 1, "b": 1}})",
                          R"({"true_params": {"a": 1, "b": 1}, "sample_sizes": []})",
                          R"({"true_params": {"a": 1, "b": 1}, "sample_sizes": [100, 10]})",
                          R"({"true_params": {"a": -1, "b": 1}, "sample_sizes": [10]})",
                          R"({"true_params": [], "sample_sizes": [10]})",
                          R"({"true_params": {"a": 1, "b": 1}, "sample_sizes": "10"})",
                          R"({"true_params": {"a": 1, "b": 1}, "sample_sizes": [10], "models": ["gamma"]})",
                          R"({"true_params": {"a": 1, "b": 1}, "sample_sizes": [10], "replications": 0})",
                          R"({"true_params": {"a": 1, "b": 1}, "sample_sizes": [10], "probs": [0.5]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(io::parse_study_config(io::Json::parse(bad)), io::ConfigError);
  }
}

TEST_CASE("fit diagnostics files") {
  SeededGenerator g(4);
  const Sample s = SizeBiasedKumaraswamy(SbkdParams(2, 3)).sample(64, g);
  std::ostringstream hist;
  io::write_fit_histogram(hist, s);
  std::istringstream lines(hist.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "bin_lo,bin_hi,count,density");
  int bins = 0;
  long total = 0;
  while (std::getline(lines, line)) {
    ++bins;
    std::istringstream row(line);
    std::string cell;
    for (int c = 0; c < 3; ++c) std::getline(row, cell, ',');
    total += std::stol(cell);
  }
  CHECK(bins == 7);
  CHECK(total == 64);

  std::ostringstream qq;
  io::write_fit_qq(qq, Model::SBKD, {2, 3}, s);
  const std::string qtext = qq.str();
  CHECK(qtext.rfind("p,empirical,theoretical\n", 0) == 0);
  CHECK(std::count(qtext.begin(), qtext.end(), '\n') == 65);

  std::ostringstream dens;
  io::write_fit_density(dens, Model::Kum, {2, 3}, 9);
  const std::string dtext = dens.str();
  CHECK(std::count(dtext.begin(), dtext.end(), '\n') == 10);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"sample", "--a", "1", "--b", "1"}).code == 2);
  CHECK(run_cli({"sample", "--a", "-1", "--b", "1", "--n", "3"}).code == 2);
  CHECK(run_cli({"sample", "--a", "1", "--b", "1", "--n", "0"}).code == 2);
  CHECK(run_cli({"describe", "--a", "x", "--b", "1"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"fit", "--in", "/nonexistent/file.csv"}).code == 1);
  CHECK(run_cli({"fit", "--in", "x.csv", "--model", "gamma"}).code == 2);
  CHECK(run_cli({"fit", "--in", "x.csv", "--method", "moments"}).code == 2);
  CHECK(run_cli({"study", "--mode", "table2", "--config", "c.json"}).code == 2);
  CHECK(run_cli({"study", "--mode", "table1", "--config", "/nonexistent/c.json"}).code == 1);
  CHECK(run_cli({"sample", "--a", "1", "--b", "1", "--n", "3", "--out", "/nonexistent/dir/s.csv"}).code == 1);
}

TEST_CASE("cli sample is deterministic and inside the unit interval") {
  const auto first = run_cli({"sample", "--a", "1", "--b", "1", "--n", "3", "--seed", "7"});
  const auto second = run_cli({"sample", "--a", "1", "--b", "1", "--n", "3", "--seed", "7"});
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(parse(first.out).size() == 3);
  CHECK(run_cli({"sample", "--a", "1", "--b", "1", "--n", "3", "--seed", "8"}).out != first.out);

  const fs::path file = scratch_dir() / "sample.csv";
  CHECK(run_cli({"sample", "--a", "1", "--b", "1", "--n", "3", "--seed", "7", "--out", file.string()}).code == 0);
  CHECK(slurp(file) == first.out);
  CHECK(run_cli({"sample", "--a", "1", "--b", "1", "--n", "3"}).out ==
        run_cli({"sample", "--a", "1", "--b", "1", "--n", "3", "--seed", std::to_string(cli::kDefaultSeed)}).out);
}

TEST_CASE("cli sample mean matches the analytic mean") {
  const auto r = run_cli({"sample", "--a", "3", "--b", "2", "--n", "100000", "--seed", "42"});
  REQUIRE(r.code == 0);
  const Sample s = parse(r.out);
  REQUIRE(s.size() == 100000);
  const auto stats = SizeBiasedKumaraswamy(SbkdParams(3, 2)).summary();
  const double se = std::sqrt(stats.variance / 100000.0);
  CHECK(std::fabs(s.mean() - stats.mean) <= 4.0 * se);
}

TEST_CASE("cli describe") {
  auto sym = run_cli({"describe", "--a", "1", "--b", "2"});
  REQUIRE(sym.code == 0);
  auto j = io::Json::parse(sym.out);
  CHECK(std::fabs(j.at("skewness").get<double>()) <= 1e-8);
  CHECK(j.at("shape").get<std::string>() == "Symmetric");

  j = io::Json::parse(run_cli({"describe", "--a", "1", "--b", "1"}).out);
  CHECK(std::fabs(j.at("harmonic_mean").get<double>() - 0.5) <= 1e-12);
  CHECK(j.at("shape").get<std::string>() == "RightTriangular");

  const double a = 0.65;
  const double b = 1.6;
  j = io::Json::parse(run_cli({"describe", "--a", "0.65", "--b", "1.6"}).out);
  auto pdf = [&](double x) { return ref_pdf(a, b, x); };
  const double m1 = oracle::expect_sbkd(pdf, [](double x) { return x; }, a, b);
  const double m2 = oracle::expect_sbkd(pdf, [](double x) { return x * x; }, a, b);
  const double inv = oracle::expect_sbkd(pdf, [](double x) { return 1.0 / x; }, a, b);
  CHECK(std::fabs(j.at("mean").get<double>() - m1) <= 1e-8);
  CHECK(std::fabs(j.at("variance").get<double>() - (m2 - m1 * m1)) <= 1e-8);
  CHECK(std::fabs(j.at("harmonic_mean").get<double>() - 1.0 / inv) <= 1e-8);
  const double med = j.at("median").get<double>();
  CHECK(std::fabs(oracle::tanh_sinh_plain(pdf, 0.0, med) - 0.5) <= 1e-8);
  CHECK(std::fabs(j.at("mode").get<double>() - std::pow(b, -1.0 / a)) <= 1e-12);

  const fs::path curve = scratch_dir() / "curve.csv";
  REQUIRE(run_cli({"describe", "--a", "2", "--b", "3", "--curve", curve.string(), "--points", "5"}).code == 0);
  const std::string text = slurp(curve);
  CHECK(text.rfind("x,pdf,cdf\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("cli fit") {
  const fs::path data = scratch_dir() / "fit_input.csv";
  REQUIRE(run_cli({"sample", "--a", "2", "--b", "3", "--n", "2000", "--seed", "17", "--out", data.string()}).code == 0);

  const auto r = run_cli({"fit", "--in", data.string()});
  REQUIRE(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j.at("converged").get<bool>());
  CHECK(std::fabs(j.at("estimate1").get<double>() - 2.0) <= 0.4);
  CHECK(std::fabs(j.at("estimate2").get<double>() - 3.0) <= 0.6);
  CHECK(r.out == run_cli({"fit", "--in", data.string()}).out);

  const auto q = io::Json::parse(
      run_cli({"fit", "--in", data.string(), "--model", "kum", "--method", "mqe", "--probs", "0.25,0.75"}).out);
  CHECK(q.at("model").get<std::string>() == "Kum");
  CHECK(q.at("method").get<std::string>() == "MQE");
  CHECK(run_cli({"fit", "--in", data.string(), "--probs", "0.5"}).code == 2);

  const std::string prefix = (scratch_dir() / "diag").string();
  REQUIRE(run_cli({"fit", "--in", data.string(), "--diagnostics", prefix}).code == 0);
  for (const char* suffix : {"_hist.csv", "_density.csv", "_qq.csv"}) CHECK(fs::exists(prefix + suffix));

  const fs::path bad = scratch_dir() / "bad.csv";
  write_text(bad, "x\n0.2\n0.4\n1.5\n");
  const auto e = run_cli({"fit", "--in", bad.string()});
  CHECK(e.code == 1);
  CHECK(e.err.find("line 4") != std::string::npos);

  const fs::path one = scratch_dir() / "one.csv";
  write_text(one, "0.3\n");
  CHECK(run_cli({"fit", "--in", one.string()}).code == 1);
}

TEST_CASE("cli study") {
  const fs::path table = scratch_dir() / "table1.json";
  write_text(table, R"({"true_params": [{"a": 1, "b": 1}, {"a": 2.3, "b": 0.75}, {"a": 3, "b": 2}, {"a": 0.65, "b": 1.6}],
                       "sample_sizes": [200], "replications": 2, "seed": 1})");
  const auto t = run_cli({"study", "--mode", "table1", "--config", table.string()});
  REQUIRE(t.code == 0);
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 13);
  CHECK(t.out.rfind("true_a,true_b,model,method,est1,est2,loglik,aic,bic\n", 0) == 0);
  CHECK(t.out == run_cli({"study", "--mode", "table1", "--config", table.string()}).out);

  const fs::path se = scratch_dir() / "se.json";
  write_text(se, R"({"true_params": {"a": 3, "b": 2}, "sample_sizes": [100, 1000, 10000], "replications": 10,
                     "models": ["sbkd"]})");
  const auto c = run_cli({"study", "--mode", "se-curve", "--config", se.string()});
  REQUIRE(c.code == 0);
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,se_a,se_b");
  std::vector<double> sa;
  std::vector<double> sb;
  while (std::getline(lines, line)) {
    std::istringstream row(line);
    std::string n, x, y;
    std::getline(row, n, ',');
    std::getline(row, x, ',');
    std::getline(row, y, ',');
    sa.push_back(std::stod(x));
    sb.push_back(std::stod(y));
  }
  REQUIRE(sa.size() == 3);
  CHECK(sa[1] < sa[0]);
  CHECK(sa[2] < sa[1]);
  CHECK(sb[1] < sb[0]);
  CHECK(sb[2] < sb[1]);

  CHECK(run_cli({"study", "--mode", "se-curve", "--config", table.string()}).code == 2);
  const fs::path empty = scratch_dir() / "empty.json";
  write_text(empty, R"({"true_params": {"a": 3, "b": 2}, "sample_sizes": []})");
  CHECK(run_cli({"study", "--mode", "table1", "--config", empty.string()}).code == 2);
  const fs::path broken = scratch_dir() / "broken.json";
  write_text(broken, "{ not json");
  CHECK(run_cli({"study", "--mode", "table1", "--config", broken.string()}).code == 2);
}
