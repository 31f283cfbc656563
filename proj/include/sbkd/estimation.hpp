#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbkd/distributions.hpp"
#include "sbkd/sample.hpp"

namespace sbkd {

enum class Model { SBKD, Kum, BetaI };
enum class Method { MLE, MQE };

std::string_view to_string(Model m);
std::string_view to_string(Method m);
/// Accepts the canonical names and the CLI spellings (sbkd, kum, beta, ...),
/// case-insensitively.
std::optional<Model> parse_model(std::string_view s);
std::optional<Method> parse_method(std::string_view s);

/// Two shape parameters in the density's own order: (a, b) for SBKD and
/// Kumaraswamy, (alpha, beta) for Beta-I.
using Theta = std::array<double, 2>;

inline constexpr int kNumParams = 2;

struct FitReport {
  Model model = Model::SBKD;
  Method method = Method::MLE;
  double estimate1 = 0.0;
  double estimate2 = 0.0;
  double loglik = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  std::optional<std::array<double, 2>> std_errors;
  bool converged = false;
  int iterations = 0;
  std::size_t n = 0;  // sample size behind bic; not serialized
};

struct OptimizerConfig {
  std::optional<Theta> initial;
  double grad_tol = 1e-6;
  double step_tol = 1e-12;
  int max_iter = 200;

  void validate() const;
};

/// Probabilities at which theoretical and sample quantiles are matched.
class QuantileGrid {
 public:
  /// Strictly increasing, inside (0, 1), at least two points.
  explicit QuantileGrid(std::vector<double> probs);
  /// {1/3, 2/3}
  static QuantileGrid standard();

  std::span<const double> probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

struct FitOptions {
  OptimizerConfig optimizer;
  QuantileGrid grid = QuantileGrid::standard();
};

double aic(double loglik, int k);
double bic(double loglik, int k, std::size_t n);

// SBKD likelihood -----------------------------------------------------------

/// n ln a + a sum ln x + (b - 1) sum ln(1 - x^a) - n ln B(1 + 1/a, b).
/// -inf if some 1 - x^a underflows to zero.
double log_likelihood(const SbkdParams& params, const Sample& s);

/// Analytic (d/da, d/db) of log_likelihood. The a-component carries
/// -(b - 1) sum x^a ln x / (1 - x^a) from differentiating ln(1 - x^a).
std::array<double, 2> score(const SbkdParams& params, const Sample& s);

// Model-generic helpers -----------------------------------------------------

double log_likelihood(Model model, const Theta& theta, const Sample& s);
std::array<double, 2> score(Model model, const Theta& theta, const Sample& s);
double model_quantile(Model model, const Theta& theta, double p);
double model_pdf(Model model, const Theta& theta, double x);
double model_cdf(Model model, const Theta& theta, double x);

/// Sum of squared differences between model and type-7 sample quantiles.
/// `sorted` must be ascending.
double mqe_objective(Model model, const Theta& theta, std::span<const double> sorted, const QuantileGrid& grid);

/// Square roots of the diagonal of the inverse observed information, or
/// nullopt when the information matrix is not positive definite.
std::optional<std::array<double, 2>> standard_errors(Model model, const Theta& theta, const Sample& s);

// Fitting -------------------------------------------------------------------

/// Maximum likelihood for any of the three models.
FitReport mle_fit(Model model, const Sample& s, const OptimizerConfig& cfg = {});
/// Matching-quantile estimation for any of the three models.
FitReport mqe_fit(Model model, const Sample& s, const QuantileGrid& grid = QuantileGrid::standard(),
                  const OptimizerConfig& cfg = {});

inline FitReport mle_fit(const Sample& s, const OptimizerConfig& cfg = {}) { return mle_fit(Model::SBKD, s, cfg); }
inline FitReport mqe_fit(const Sample& s, const QuantileGrid& grid = QuantileGrid::standard(),
                         const OptimizerConfig& cfg = {}) {
  return mqe_fit(Model::SBKD, s, grid, cfg);
}

FitReport fit_model(Model model, Method method, const Sample& s, const FitOptions& options = {});

}  // namespace sbkd
