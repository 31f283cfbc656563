#include "sbkd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "sbkd/random.hpp"

namespace sbkd {

namespace {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Results are
// written by index, so the outcome does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

FitReport safe_fit(Model model, Method method, const Sample& s, const FitOptions& options) {
  try {
    return fit_model(model, method, s, options);
  } catch (const std::exception&) {
    FitReport r;
    r.model = model;
    r.method = method;
    r.n = s.size();
    r.loglik = -std::numeric_limits<double>::infinity();
    r.aic = aic(r.loglik, kNumParams);
    r.bic = bic(r.loglik, kNumParams, s.size());
    return r;
  }
}

std::vector<std::vector<FitReport>> fit_replications(const SimulationConfig& cfg, const std::vector<Model>& models) {
  const std::size_t sizes = cfg.sample_sizes.size();
  const std::size_t reps = static_cast<std::size_t>(cfg.replications);
  std::vector<std::vector<FitReport>> out(sizes * reps);
  const SizeBiasedKumaraswamy dist(cfg.true_params);
  parallel_for(out.size(), cfg.threads, [&](std::size_t idx) {
    const std::size_t si = idx / reps;
    const int rep = static_cast<int>(idx % reps);
    SeededGenerator gen(replication_seed(cfg, rep));
    const Sample s = dist.sample(cfg.sample_sizes[si], gen);
    auto& slot = out[idx];
    for (Model m : models) slot.push_back(safe_fit(m, cfg.method, s, cfg.options));
  });
  return out;
}

SePoint mean_standard_errors(std::size_t n, const std::vector<const FitReport*>& fits) {
  SePoint p{n, 0.0, 0.0, 0};
  for (const FitReport* r : fits) {
    if (!r->std_errors) continue;
    p.se_a += (*r->std_errors)[0];
    p.se_b += (*r->std_errors)[1];
    ++p.used;
  }
  if (p.used > 0) {
    p.se_a /= p.used;
    p.se_b /= p.used;
  } else {
    p.se_a = p.se_b = std::numeric_limits<double>::quiet_NaN();
  }
  return p;
}

}  // namespace

void SimulationConfig::validate() const {
  if (sample_sizes.empty()) throw std::invalid_argument("SimulationConfig: sample_sizes must not be empty");
  for (std::size_t i = 0; i < sample_sizes.size(); ++i) {
    if (sample_sizes[i] < 2) throw std::invalid_argument("SimulationConfig: sample sizes must be at least 2");
    if (i > 0 && sample_sizes[i] <= sample_sizes[i - 1])
      throw std::invalid_argument("SimulationConfig: sample_sizes must be strictly increasing");
  }
  if (replications < 1) throw std::invalid_argument("SimulationConfig: replications must be >= 1");
  if (models.empty()) throw std::invalid_argument("SimulationConfig: models must not be empty");
}

std::uint64_t replication_seed(const SimulationConfig& cfg, int replication) {
  return derive_seed(cfg.seed, static_cast<std::uint64_t>(replication));
}

SimulationStudyResult run_simulation_study(const SimulationConfig& cfg) {
  cfg.validate();
  const auto grid = fit_replications(cfg, cfg.models);
  const std::size_t reps = static_cast<std::size_t>(cfg.replications);

  SimulationStudyResult result;
  for (std::size_t si = 0; si < cfg.sample_sizes.size(); ++si)
    for (std::size_t r = 0; r < reps; ++r)
      for (const FitReport& rep : grid[si * reps + r])
        result.fits.push_back({cfg.sample_sizes[si], static_cast<int>(r), rep});

  const std::size_t last = cfg.sample_sizes.size() - 1;
  for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
    StudyRow row{cfg.true_params, cfg.models[mi], cfg.method, 0, 0, 0, 0, 0, cfg.sample_sizes[last], 0,
                 cfg.replications};
    for (std::size_t r = 0; r < reps; ++r)
      if (grid[last * reps + r][mi].converged) ++row.converged;
    int used = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      const FitReport& f = grid[last * reps + r][mi];
      if (row.converged > 0 && !f.converged) continue;
      row.estimate1 += f.estimate1;
      row.estimate2 += f.estimate2;
      row.loglik += f.loglik;
      row.aic += f.aic;
      row.bic += f.bic;
      ++used;
    }
    row.estimate1 /= used;
    row.estimate2 /= used;
    row.loglik /= used;
    row.aic /= used;
    row.bic /= used;
    result.rows.push_back(row);
  }

  const auto sbkd = std::find(cfg.models.begin(), cfg.models.end(), Model::SBKD);
  if (sbkd != cfg.models.end()) {
    const std::size_t mi = static_cast<std::size_t>(sbkd - cfg.models.begin());
    for (std::size_t si = 0; si < cfg.sample_sizes.size(); ++si) {
      std::vector<const FitReport*> fits;
      for (std::size_t r = 0; r < reps; ++r) fits.push_back(&grid[si * reps + r][mi]);
      result.se_curve.push_back(mean_standard_errors(cfg.sample_sizes[si], fits));
    }
  }
  return result;
}

std::vector<SePoint> run_se_experiment(const SimulationConfig& cfg) {
  cfg.validate();
  SimulationConfig mle = cfg;
  mle.method = Method::MLE;
  const auto grid = fit_replications(mle, {Model::SBKD});
  const std::size_t reps = static_cast<std::size_t>(cfg.replications);
  std::vector<SePoint> curve;
  for (std::size_t si = 0; si < cfg.sample_sizes.size(); ++si) {
    std::vector<const FitReport*> fits;
    for (std::size_t r = 0; r < reps; ++r) fits.push_back(&grid[si * reps + r][0]);
    curve.push_back(mean_standard_errors(cfg.sample_sizes[si], fits));
  }
  return curve;
}

std::vector<FitReport> run_real_data_study(const Sample& s, const std::vector<Method>& methods,
                                           const std::vector<Model>& models, const FitOptions& options) {
  std::vector<Method> ms(methods);
  std::vector<Model> ds(models);
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  std::vector<FitReport> out;
  for (Method method : ms)
    for (Model model : ds) out.push_back(safe_fit(model, method, s, options));
  return out;
}

}  // namespace sbkd
