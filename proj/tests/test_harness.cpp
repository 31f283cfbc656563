#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sbkd/harness.hpp"
#include "sbkd/random.hpp"

using namespace sbkd;

namespace {

SimulationConfig small_config() {
  SimulationConfig cfg;
  cfg.true_params = SbkdParams(3, 2);
  cfg.sample_sizes = {50, 200};
  cfg.replications = 4;
  cfg.seed = 99;
  return cfg;
}

bool same_report(const FitReport& x, const FitReport& y) {
  return x.model == y.model && x.method == y.method && x.estimate1 == y.estimate1 && x.estimate2 == y.estimate2 &&
         x.loglik == y.loglik && x.aic == y.aic && x.bic == y.bic && x.converged == y.converged &&
         x.iterations == y.iterations && x.std_errors == y.std_errors;
}

}  // namespace

TEST_CASE("config validation") {
  SimulationConfig cfg = small_config();
  CHECK_NOTHROW(cfg.validate());

  auto broken = cfg;
  broken.sample_sizes.clear();
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = cfg;
  broken.sample_sizes = {200, 50};
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken.sample_sizes = {50, 50};
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = cfg;
  broken.replications = 0;
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = cfg;
  broken.models.clear();
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  CHECK_THROWS_AS(run_simulation_study(broken), std::invalid_argument);
}

TEST_CASE("replication seeds follow the splitting rule") {
  const SimulationConfig cfg = small_config();
  for (int r = 0; r < 5; ++r) CHECK(replication_seed(cfg, r) == mix64(cfg.seed + static_cast<std::uint64_t>(r)));
  CHECK(replication_seed(cfg, 0) != replication_seed(cfg, 1));
}

TEST_CASE("study is deterministic and independent of thread count") {
  SimulationConfig cfg = small_config();
  cfg.threads = 1;
  const auto one = run_simulation_study(cfg);
  cfg.threads = 4;
  const auto four = run_simulation_study(cfg);
  const auto again = run_simulation_study(cfg);

  REQUIRE(one.fits.size() == 2 * 4 * 3);
  REQUIRE(four.fits.size() == one.fits.size());
  for (std::size_t i = 0; i < one.fits.size(); ++i) {
    CHECK(one.fits[i].n == four.fits[i].n);
    CHECK(one.fits[i].replication == four.fits[i].replication);
    CHECK(same_report(one.fits[i].report, four.fits[i].report));
    CHECK(same_report(four.fits[i].report, again.fits[i].report));
  }
  REQUIRE(one.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(one.rows[i].estimate1 == four.rows[i].estimate1);
    CHECK(one.rows[i].loglik == four.rows[i].loglik);
  }
}

TEST_CASE("adding replications leaves earlier ones untouched") {
  SimulationConfig cfg = small_config();
  const auto base = run_simulation_study(cfg);
  cfg.replications = 6;
  const auto more = run_simulation_study(cfg);
  for (const auto& f : base.fits) {
    bool found = false;
    for (const auto& g : more.fits) {
      if (g.n == f.n && g.replication == f.replication && g.report.model == f.report.model) {
        CHECK(same_report(f.report, g.report));
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("study rows and information criteria") {
  const SimulationConfig cfg = small_config();
  const auto res = run_simulation_study(cfg);
  REQUIRE(res.rows.size() == 3);
  CHECK(res.rows[0].model == Model::SBKD);
  CHECK(res.rows[1].model == Model::Kum);
  CHECK(res.rows[2].model == Model::BetaI);
  for (const auto& row : res.rows) {
    CHECK(row.n == 200);
    CHECK(row.replications == 4);
    CHECK(row.true_params == cfg.true_params);
  }
  for (const auto& f : res.fits) {
    CHECK(f.report.aic == aic(f.report.loglik, kNumParams));
    CHECK(f.report.bic == bic(f.report.loglik, kNumParams, f.n));
  }
  REQUIRE(res.se_curve.size() == 2);
  CHECK(res.se_curve[0].n == 50);
  CHECK(res.se_curve[1].n == 200);
}

TEST_CASE("SBKD fits best in most replications at the truth (3, 2)") {
  // The three families differ by ~1e-4 nats per observation here.
  SimulationConfig cfg;
  cfg.true_params = SbkdParams(3, 2);
  cfg.sample_sizes = {20000};
  cfg.replications = 20;
  cfg.seed = 2024;
  const auto res = run_simulation_study(cfg);
  int wins = 0;
  for (std::size_t i = 0; i < res.fits.size(); i += 3) {
    const double s = res.fits[i].report.loglik;
    if (s >= res.fits[i + 1].report.loglik && s >= res.fits[i + 2].report.loglik) ++wins;
  }
  CHECK(wins > 10);
}

TEST_CASE("estimates approach the truth (1, 1)") {
  SimulationConfig cfg;
  cfg.true_params = SbkdParams(1, 1);
  cfg.sample_sizes = {5000};
  cfg.replications = 5;
  cfg.models = {Model::SBKD};
  const auto res = run_simulation_study(cfg);
  REQUIRE(res.rows.size() == 1);
  CHECK(res.rows[0].converged == 5);
  CHECK(std::fabs(res.rows[0].estimate1 - 1.0) < 0.1);
  CHECK(std::fabs(res.rows[0].estimate2 - 1.0) < 0.1);
}

TEST_CASE("standard errors shrink like one over root n") {
  SimulationConfig cfg;
  cfg.true_params = SbkdParams(3, 2);
  cfg.sample_sizes = {100, 1000, 10000};
  cfg.replications = 20;
  const auto curve = run_se_experiment(cfg);
  REQUIRE(curve.size() == 3);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].se_a < curve[i - 1].se_a);
    CHECK(curve[i].se_b < curve[i - 1].se_b);
  }
  const double ra = curve[2].se_a / curve[0].se_a;
  const double rb = curve[2].se_b / curve[0].se_b;
  CHECK(ra >= 0.05);
  CHECK(ra <= 0.2);
  CHECK(rb >= 0.05);
  CHECK(rb <= 0.2);
  for (const auto& p : curve) CHECK(p.used == 20);
}

TEST_CASE("single replication, single size gives one point") {
  SimulationConfig cfg;
  cfg.true_params = SbkdParams(2, 3);
  cfg.sample_sizes = {300};
  const auto curve = run_se_experiment(cfg);
  REQUIRE(curve.size() == 1);
  CHECK(curve[0].n == 300);
  CHECK(curve[0].used == 1);
  CHECK(curve[0].se_a > 0.0);
}

TEST_CASE("real-data study layout") {
  SeededGenerator g(5);
  const Sample s = SizeBiasedKumaraswamy(SbkdParams(2, 3)).sample(200, g);
  const auto reports = run_real_data_study(s, {Method::MQE, Method::MLE}, {Model::BetaI, Model::SBKD, Model::Kum});
  REQUIRE(reports.size() == 6);
  const Model order[] = {Model::SBKD, Model::Kum, Model::BetaI};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(reports[i].method == (i < 3 ? Method::MLE : Method::MQE));
    CHECK(reports[i].model == order[i % 3]);
    CHECK(reports[i].converged);
  }
}

TEST_CASE("SBKD wins on its own samples") {
  const SizeBiasedKumaraswamy truth(SbkdParams(2, 3));
  int wins = 0;
  for (std::uint64_t r = 0; r < 20; ++r) {
    SeededGenerator g(derive_seed(2024, r));
    const Sample s = truth.sample(20000, g);
    const auto reports = run_real_data_study(s, {Method::MLE}, {Model::SBKD, Model::Kum, Model::BetaI});
    if (reports[0].loglik > reports[1].loglik && reports[0].loglik > reports[2].loglik) ++wins;
  }
  CHECK(wins >= 15);
}
