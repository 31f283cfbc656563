#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sbkd/distributions.hpp"
#include "sbkd/estimation.hpp"

namespace sbkd {

struct SimulationConfig {
  SbkdParams true_params{1.0, 1.0};
  std::vector<std::size_t> sample_sizes;
  int replications = 1;
  std::uint64_t seed = 20240601;
  std::vector<Model> models{Model::SBKD, Model::Kum, Model::BetaI};
  Method method = Method::MLE;
  FitOptions options;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws std::invalid_argument on empty or non-increasing sample sizes,
  /// replications < 1, or an empty model list.
  void validate() const;
};

/// One fitted replication.
struct ReplicationFit {
  std::size_t n;
  int replication;
  FitReport report;
};

/// Replication-averaged fit of one model at the largest sample size.
struct StudyRow {
  SbkdParams true_params;
  Model model;
  Method method;
  double estimate1;
  double estimate2;
  double loglik;
  double aic;
  double bic;
  std::size_t n;
  int converged;  // replications whose fit converged; averages use only these when any did
  int replications;
};

/// Mean SBKD standard errors at one sample size.
struct SePoint {
  std::size_t n;
  double se_a;
  double se_b;
  int used;  // replications with a positive-definite information matrix
};

struct SimulationStudyResult {
  std::vector<StudyRow> rows;
  std::vector<SePoint> se_curve;
  std::vector<ReplicationFit> fits;  // ordered by (n, replication, model)
};

/// Replication r draws its samples from SeededGenerator(derive_seed(seed, r)).
/// Samples for the different sizes therefore share a prefix, and adding
/// replications leaves earlier ones untouched.
std::uint64_t replication_seed(const SimulationConfig& cfg, int replication);

/// Generates, fits and aggregates. Fit failures surface as converged = false
/// rows; the study itself never aborts on them.
SimulationStudyResult run_simulation_study(const SimulationConfig& cfg);

/// SBKD-only fits at each sample size; mean SE(a), SE(b) per size.
std::vector<SePoint> run_se_experiment(const SimulationConfig& cfg);

/// Fits every (model, method) pair. Reports are ordered method-major
/// (MLE before MQE), then SBKD, Kum, BetaI.
std::vector<FitReport> run_real_data_study(const Sample& s, const std::vector<Method>& methods,
                                           const std::vector<Model>& models, const FitOptions& options = {});

}  // namespace sbkd
