#include "sbkd/estimation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "sbkd/specfun.hpp"

namespace sbkd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLowerBound = 1e-6;
constexpr double kUpperBound = 1e6;

using Mat2 = std::array<std::array<double, 2>, 2>;

bool in_bounds(const Theta& t) {
  return t[0] >= kLowerBound && t[0] <= kUpperBound && t[1] >= kLowerBound && t[1] <= kUpperBound;
}

Theta exp_theta(const Theta& u) { return {std::exp(u[0]), std::exp(u[1])}; }
Theta log_theta(const Theta& t) { return {std::log(t[0]), std::log(t[1])}; }

double max_abs(const std::array<double, 2>& v) { return std::max(std::fabs(v[0]), std::fabs(v[1])); }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Solves m d = rhs for a 2x2 system; false when singular.
bool solve2(const Mat2& m, const std::array<double, 2>& rhs, std::array<double, 2>& d) {
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (!(std::fabs(det) > 0.0) || !std::isfinite(det)) return false;
  d[0] = (m[1][1] * rhs[0] - m[0][1] * rhs[1]) / det;
  d[1] = (m[0][0] * rhs[1] - m[1][0] * rhs[0]) / det;
  return std::isfinite(d[0]) && std::isfinite(d[1]);
}

// Eigenvalues of a symmetric 2x2, ascending.
std::array<double, 2> sym_eigen(const Mat2& m) {
  const double tr = m[0][0] + m[1][1];
  const double diff = m[0][0] - m[1][1];
  const double disc = std::sqrt(diff * diff + 4.0 * m[0][1] * m[0][1]);
  return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

struct LogSums {
  double sum_log_x = 0.0;
  double sum_log_1mx = 0.0;
};

LogSums log_sums(const Sample& s) {
  LogSums out;
  for (double x : s.values()) {
    out.sum_log_x += std::log(x);
    out.sum_log_1mx += std::log1p(-x);
  }
  return out;
}

// sum ln(1 - x^a) and sum x^a ln x / (1 - x^a).
std::pair<double, double> power_sums(const Sample& s, double a) {
  double s1 = 0.0;
  double s2 = 0.0;
  for (double x : s.values()) {
    const double lx = std::log(x);
    const double xa = std::exp(a * lx);
    const double om = -std::expm1(a * lx);
    s1 += std::log(om);
    s2 += xa * lx / om;
  }
  return {s1, s2};
}

double sbkd_loglik(double a, double b, const Sample& s) {
  const double n = static_cast<double>(s.size());
  const auto [sum_log_om, unused] = power_sums(s, a);
  (void)unused;
  double sum_log_x = 0.0;
  for (double x : s.values()) sum_log_x += std::log(x);
  const double tail = (b == 1.0) ? 0.0 : (b - 1.0) * sum_log_om;
  if (std::isnan(tail)) return -kInf;
  const double ll = n * std::log(a) + a * sum_log_x + tail - n * specfun::log_beta(1.0 + 1.0 / a, b);
  return std::isnan(ll) ? -kInf : ll;
}

std::array<double, 2> sbkd_score(double a, double b, const Sample& s) {
  const double n = static_cast<double>(s.size());
  const auto [sum_log_om, sum_ratio] = power_sums(s, a);
  double sum_log_x = 0.0;
  for (double x : s.values()) sum_log_x += std::log(x);
  const double alpha = 1.0 + 1.0 / a;
  const double psi_ab = specfun::digamma(alpha + b);
  const double da = n / a + sum_log_x - (b - 1.0) * sum_ratio + n / (a * a) * (specfun::digamma(alpha) - psi_ab);
  const double db = sum_log_om - n * (specfun::digamma(b) - psi_ab);
  return {da, db};
}

double kum_loglik(double a, double b, const Sample& s) {
  const double n = static_cast<double>(s.size());
  const auto [sum_log_om, unused] = power_sums(s, a);
  (void)unused;
  double sum_log_x = 0.0;
  for (double x : s.values()) sum_log_x += std::log(x);
  const double tail = (b == 1.0) ? 0.0 : (b - 1.0) * sum_log_om;
  const double ll = n * (std::log(a) + std::log(b)) + (a - 1.0) * sum_log_x + tail;
  return std::isnan(ll) ? -kInf : ll;
}

std::array<double, 2> kum_score(double a, double b, const Sample& s) {
  const double n = static_cast<double>(s.size());
  const auto [sum_log_om, sum_ratio] = power_sums(s, a);
  double sum_log_x = 0.0;
  for (double x : s.values()) sum_log_x += std::log(x);
  return {n / a + sum_log_x - (b - 1.0) * sum_ratio, n / b + sum_log_om};
}

double beta_loglik(double alpha, double beta, const Sample& s) {
  const double n = static_cast<double>(s.size());
  const LogSums ls = log_sums(s);
  return (alpha - 1.0) * ls.sum_log_x + (beta - 1.0) * ls.sum_log_1mx - n * specfun::log_beta(alpha, beta);
}

std::array<double, 2> beta_score(double alpha, double beta, const Sample& s) {
  const double n = static_cast<double>(s.size());
  const LogSums ls = log_sums(s);
  const double psi_ab = specfun::digamma(alpha + beta);
  return {ls.sum_log_x - n * (specfun::digamma(alpha) - psi_ab), ls.sum_log_1mx - n * (specfun::digamma(beta) - psi_ab)};
}

// Beta moment matching, mapped onto each model's parameters.
std::optional<Theta> moment_start(Model model, const Sample& s) {
  const double m = s.mean();
  const double v = s.variance();
  if (!(v > 0.0)) return std::nullopt;
  const double c = m * (1.0 - m) / v - 1.0;
  if (!(c > 0.0)) return std::nullopt;
  double p = std::clamp(m * c, 1e-3, 1e3);
  const double q = std::clamp((1.0 - m) * c, 1e-3, 1e3);
  // SBKD(1, b) is Beta(2, b): the first Beta shape sits one above a.
  if (model == Model::SBKD) p = std::clamp(p - 1.0, 0.05, 1e3);
  return Theta{p, q};
}

std::vector<Theta> candidate_starts(Model model, const Sample& s, const OptimizerConfig& cfg) {
  if (cfg.initial) return {*cfg.initial};
  std::vector<Theta> out;
  if (auto mom = moment_start(model, s)) out.push_back(*mom);
  out.push_back({1.0, 1.0});
  return out;
}

bool degenerate(const Sample& s) {
  const auto v = s.values();
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

void require_fit_sample(const Sample& s) {
  if (s.size() < 2) throw std::invalid_argument("fit: at least two observations are required");
}

void fill_criteria(FitReport& r, const Sample& s) {
  r.n = s.size();
  r.aic = aic(r.loglik, kNumParams);
  r.bic = bic(r.loglik, kNumParams, s.size());
}

// Central-difference Jacobian of a vector field of two variables.
Mat2 jacobian(const std::function<std::array<double, 2>(const Theta&)>& field, const Theta& at,
              const std::array<double, 2>& steps) {
  Mat2 j{};
  for (int c = 0; c < 2; ++c) {
    Theta hi = at;
    Theta lo = at;
    hi[c] += steps[c];
    lo[c] -= steps[c];
    const auto fh = field(hi);
    const auto fl = field(lo);
    for (int r = 0; r < 2; ++r) j[r][c] = (fh[r] - fl[r]) / (2.0 * steps[c]);
  }
  const double off = 0.5 * (j[0][1] + j[1][0]);
  j[0][1] = j[1][0] = off;
  return j;
}

// ---------------------------------------------------------------------------
// Maximum likelihood: damped Newton in (ln p1, ln p2) with analytic gradient
// and a finite-difference Hessian of that gradient.
// ---------------------------------------------------------------------------

struct NewtonResult {
  Theta theta;
  int iterations = 0;
  bool stationary = false;
  bool hit_bound = false;
};

NewtonResult maximize_loglik(Model model, const Sample& s, Theta start, const OptimizerConfig& cfg) {
  auto f = [&](const Theta& u) {
    const Theta t = exp_theta(u);
    if (!in_bounds(t)) return -kInf;
    return log_likelihood(model, t, s);
  };
  auto grad_u = [&](const Theta& u) {
    const Theta t = exp_theta(u);
    const auto g = score(model, t, s);
    return std::array<double, 2>{g[0] * t[0], g[1] * t[1]};
  };

  NewtonResult res;
  Theta u = log_theta(start);
  double fu = f(u);
  for (int it = 0; it < cfg.max_iter; ++it) {
    const Theta t = exp_theta(u);
    if (max_abs(score(model, t, s)) <= cfg.grad_tol) {
      res.stationary = true;
      break;
    }
    res.iterations = it + 1;
    const auto g = grad_u(u);
    const Mat2 h = jacobian(grad_u, u, {1e-5, 1e-5});
    Mat2 neg{{{-h[0][0], -h[0][1]}, {-h[1][0], -h[1][1]}}};
    const auto eig = sym_eigen(neg);
    const double scale = std::max(1.0, std::fabs(eig[1]));
    double shift = eig[0] > 1e-10 * scale ? 0.0 : -eig[0] + 1e-3 * scale;

    bool accepted = false;
    double taken = 0.0;
    for (int attempt = 0; attempt < 8 && !accepted; ++attempt) {
      Mat2 m = neg;
      m[0][0] += shift;
      m[1][1] += shift;
      std::array<double, 2> d{};
      if (!solve2(m, g, d)) {
        shift = (shift == 0.0 ? 1e-3 * scale : shift * 10.0);
        continue;
      }
      const double cap = max_abs(d);
      if (cap > 2.0) {
        d[0] *= 2.0 / cap;
        d[1] *= 2.0 / cap;
      }
      const double slope = g[0] * d[0] + g[1] * d[1];
      double step = 1.0;
      for (int ls = 0; ls < 40; ++ls, step *= 0.5) {
        const Theta trial{u[0] + step * d[0], u[1] + step * d[1]};
        const double ft = f(trial);
        if (!std::isfinite(ft)) continue;
        const bool armijo = ft >= fu + 1e-4 * step * slope;
        const bool flat_full_step = step == 1.0 && shift == 0.0 && ft >= fu - 1e-13 * std::max(1.0, std::fabs(fu));
        if (armijo || flat_full_step) {
          u = trial;
          fu = ft;
          taken = step * max_abs(d);
          accepted = true;
          break;
        }
      }
      shift = (shift == 0.0 ? 1e-3 * scale : shift * 10.0);
    }
    if (!accepted) break;
    const Theta now = exp_theta(u);
    if (!in_bounds(now)) {
      res.hit_bound = true;
      break;
    }
    if (taken < cfg.step_tol) break;
  }
  res.theta = exp_theta(u);
  if (!in_bounds(res.theta)) {
    res.hit_bound = true;
    res.theta = {std::clamp(res.theta[0], kLowerBound, kUpperBound), std::clamp(res.theta[1], kLowerBound, kUpperBound)};
  }
  if (!res.stationary && !res.hit_bound) res.stationary = max_abs(score(model, res.theta, s)) <= cfg.grad_tol;
  return res;
}

// ---------------------------------------------------------------------------
// Matching quantiles: Levenberg-Marquardt on the quantile residuals in
// (ln p1, ln p2) with a central-difference Jacobian.
// ---------------------------------------------------------------------------

struct LmResult {
  Theta theta;
  int iterations = 0;
  bool stationary = false;
  bool hit_bound = false;
};

std::vector<double> quantile_residuals(Model model, const Theta& theta, std::span<const double> targets,
                                       const QuantileGrid& grid) {
  std::vector<double> r(targets.size());
  const auto probs = grid.probs();
  for (std::size_t k = 0; k < r.size(); ++k) {
    try {
      r[k] = model_quantile(model, theta, probs[k]) - targets[k];
    } catch (const specfun::IterationFailure&) {
      r[k] = kInf;
    }
  }
  return r;
}

double sum_sq(const std::vector<double>& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::isnan(s) ? kInf : s;
}

LmResult minimize_quantile_gap(Model model, std::span<const double> targets, const QuantileGrid& grid, Theta start,
                               const OptimizerConfig& cfg) {
  constexpr double h = 1e-6;
  const double lo_u = std::log(kLowerBound);
  const double hi_u = std::log(kUpperBound);
  const std::size_t k = targets.size();
  auto project = [&](Theta u) {
    for (double& v : u) v = std::clamp(v, lo_u, hi_u);
    return u;
  };
  auto to_theta = [&](const Theta& u) {
    Theta t{};
    for (int c = 0; c < 2; ++c)
      t[c] = u[c] <= lo_u ? kLowerBound : u[c] >= hi_u ? kUpperBound : std::clamp(std::exp(u[c]), kLowerBound, kUpperBound);
    return t;
  };
  auto residuals = [&](const Theta& u) { return quantile_residuals(model, to_theta(u), targets, grid); };

  LmResult res;
  Theta u = project(log_theta(start));
  auto r = residuals(u);
  double obj = sum_sq(r);
  double lambda = 1e-3;
  std::vector<std::array<double, 2>> jac(k);

  // One-sided at the edges of the box.
  auto build_jacobian = [&](const Theta& at) {
    for (int c = 0; c < 2; ++c) {
      Theta up = at;
      Theta down = at;
      up[c] = std::min(at[c] + h, hi_u);
      down[c] = std::max(at[c] - h, lo_u);
      const auto ru = residuals(up);
      const auto rd = residuals(down);
      for (std::size_t i = 0; i < k; ++i) jac[i][c] = (ru[i] - rd[i]) / (up[c] - down[c]);
    }
  };

  std::array<bool, 2> pinned{};
  auto update_pinned = [&](const std::array<double, 2>& g) {
    for (int c = 0; c < 2; ++c) pinned[c] = (u[c] <= lo_u && g[c] > 0.0) || (u[c] >= hi_u && g[c] < 0.0);
  };

  for (int it = 0; it < cfg.max_iter && obj > 0.0; ++it) {
    res.iterations = it + 1;
    build_jacobian(u);
    Mat2 a{};
    std::array<double, 2> g{};
    for (std::size_t i = 0; i < k; ++i) {
      for (int p = 0; p < 2; ++p) {
        g[p] += jac[i][p] * r[i];
        for (int q = 0; q < 2; ++q) a[p][q] += jac[i][p] * jac[i][q];
      }
    }
    update_pinned(g);
    if (pinned[0] && pinned[1]) break;
    for (int c = 0; c < 2; ++c) {
      if (!pinned[c]) continue;
      g[c] = 0.0;
      a[c][0] = a[0][c] = a[c][1] = a[1][c] = 0.0;
      a[c][c] = 1.0;
    }
    bool accepted = false;
    double taken = 0.0;
    while (lambda < 1e12) {
      Mat2 m = a;
      m[0][0] += lambda * std::max(a[0][0], 1e-12);
      m[1][1] += lambda * std::max(a[1][1], 1e-12);
      std::array<double, 2> d{};
      if (solve2(m, {-g[0], -g[1]}, d)) {
        const double cap = max_abs(d);
        if (cap > 2.0) {
          d[0] *= 2.0 / cap;
          d[1] *= 2.0 / cap;
        }
        const Theta trial = project({u[0] + d[0], u[1] + d[1]});
        auto rt = residuals(trial);
        const double ot = sum_sq(rt);
        if (ot < obj) {
          taken = std::max(std::fabs(trial[0] - u[0]), std::fabs(trial[1] - u[1]));
          u = trial;
          r = std::move(rt);
          obj = ot;
          lambda = std::max(lambda * 0.1, 1e-15);
          accepted = true;
          break;
        }
      }
      lambda *= 10.0;
    }
    if (!accepted || taken < cfg.step_tol) break;
  }

  res.theta = to_theta(u);
  res.hit_bound = u[0] <= lo_u || u[0] >= hi_u || u[1] <= lo_u || u[1] >= hi_u;
  if (res.hit_bound) return res;
  // Stationarity of the objective in natural parameters: 2 J_theta^T r.
  build_jacobian(u);
  std::array<double, 2> grad{};
  for (std::size_t i = 0; i < k; ++i)
    for (int p = 0; p < 2; ++p) grad[p] += 2.0 * jac[i][p] / res.theta[p] * r[i];
  res.stationary = std::isfinite(obj) && max_abs(grad) <= cfg.grad_tol;
  return res;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Model m) {
  switch (m) {
    case Model::SBKD: return "SBKD";
    case Model::Kum: return "Kum";
    case Model::BetaI: return "BetaI";
  }
  return "?";
}

std::string_view to_string(Method m) { return m == Method::MLE ? "MLE" : "MQE"; }

std::optional<Model> parse_model(std::string_view s) {
  const std::string l = lower(s);
  if (l == "sbkd") return Model::SBKD;
  if (l == "kum" || l == "kumaraswamy") return Model::Kum;
  if (l == "beta" || l == "betai") return Model::BetaI;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
  const std::string l = lower(s);
  if (l == "mle") return Method::MLE;
  if (l == "mqe") return Method::MQE;
  return std::nullopt;
}

void OptimizerConfig::validate() const {
  if (!(grad_tol > 0.0) || !(step_tol > 0.0) || max_iter < 1)
    throw std::invalid_argument("OptimizerConfig: tolerances must be positive and max_iter >= 1");
  if (initial && !((*initial)[0] > 0.0 && (*initial)[1] > 0.0))
    throw std::invalid_argument("OptimizerConfig: initial parameters must be positive");
}

QuantileGrid::QuantileGrid(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < static_cast<std::size_t>(kNumParams))
    throw std::invalid_argument("QuantileGrid: need at least two probabilities");
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] > 0.0 && probs_[i] < 1.0)) throw std::invalid_argument("QuantileGrid: probabilities must lie in (0, 1)");
    if (i > 0 && !(probs_[i] > probs_[i - 1])) throw std::invalid_argument("QuantileGrid: probabilities must be strictly increasing");
  }
}

QuantileGrid QuantileGrid::standard() { return QuantileGrid({1.0 / 3.0, 2.0 / 3.0}); }

double aic(double loglik, int k) { return 2.0 * k - 2.0 * loglik; }

double bic(double loglik, int k, std::size_t n) { return k * std::log(static_cast<double>(n)) - 2.0 * loglik; }

double log_likelihood(const SbkdParams& params, const Sample& s) { return sbkd_loglik(params.a(), params.b(), s); }

std::array<double, 2> score(const SbkdParams& params, const Sample& s) { return sbkd_score(params.a(), params.b(), s); }

double log_likelihood(Model model, const Theta& theta, const Sample& s) {
  switch (model) {
    case Model::SBKD: return sbkd_loglik(theta[0], theta[1], s);
    case Model::Kum: return kum_loglik(theta[0], theta[1], s);
    case Model::BetaI: return beta_loglik(theta[0], theta[1], s);
  }
  return -kInf;
}

std::array<double, 2> score(Model model, const Theta& theta, const Sample& s) {
  switch (model) {
    case Model::SBKD: return sbkd_score(theta[0], theta[1], s);
    case Model::Kum: return kum_score(theta[0], theta[1], s);
    case Model::BetaI: return beta_score(theta[0], theta[1], s);
  }
  return {0.0, 0.0};
}

double model_quantile(Model model, const Theta& theta, double p) {
  switch (model) {
    case Model::SBKD: return SizeBiasedKumaraswamy(SbkdParams(theta[0], theta[1])).quantile(p);
    case Model::Kum: return Kumaraswamy(KumParams(theta[0], theta[1])).quantile(p);
    case Model::BetaI: return BetaI(BetaIParams(theta[0], theta[1])).quantile(p);
  }
  return 0.0;
}

double model_pdf(Model model, const Theta& theta, double x) {
  switch (model) {
    case Model::SBKD: return SizeBiasedKumaraswamy(SbkdParams(theta[0], theta[1])).pdf(x);
    case Model::Kum: return Kumaraswamy(KumParams(theta[0], theta[1])).pdf(x);
    case Model::BetaI: return BetaI(BetaIParams(theta[0], theta[1])).pdf(x);
  }
  return 0.0;
}

double model_cdf(Model model, const Theta& theta, double x) {
  switch (model) {
    case Model::SBKD: return SizeBiasedKumaraswamy(SbkdParams(theta[0], theta[1])).cdf(x);
    case Model::Kum: return Kumaraswamy(KumParams(theta[0], theta[1])).cdf(x);
    case Model::BetaI: return BetaI(BetaIParams(theta[0], theta[1])).cdf(x);
  }
  return 0.0;
}

double mqe_objective(Model model, const Theta& theta, std::span<const double> sorted, const QuantileGrid& grid) {
  std::vector<double> targets;
  for (double p : grid.probs()) targets.push_back(empirical_quantile(sorted, p));
  return sum_sq(quantile_residuals(model, theta, targets, grid));
}

std::optional<std::array<double, 2>> standard_errors(Model model, const Theta& theta, const Sample& s) {
  std::array<double, 2> steps{};
  for (int i = 0; i < 2; ++i) steps[i] = std::min(1e-5 * std::max(1.0, std::fabs(theta[i])), 0.5 * theta[i]);
  const Mat2 h = jacobian([&](const Theta& t) { return score(model, t, s); }, theta, steps);
  // Observed information = -H.
  const double i00 = -h[0][0];
  const double i11 = -h[1][1];
  const double i01 = -h[0][1];
  const double det = i00 * i11 - i01 * i01;
  if (!(i00 > 0.0 && i11 > 0.0 && det > 0.0) || !std::isfinite(det)) return std::nullopt;
  return std::array<double, 2>{std::sqrt(i11 / det), std::sqrt(i00 / det)};
}

FitReport mle_fit(Model model, const Sample& s, const OptimizerConfig& cfg) {
  cfg.validate();
  require_fit_sample(s);
  FitReport report;
  report.model = model;
  report.method = Method::MLE;

  const auto starts = candidate_starts(model, s, cfg);
  Theta start = starts.front();
  double best = -kInf;
  for (const Theta& t : starts) {
    const double ll = log_likelihood(model, t, s);
    if (ll > best) {
      best = ll;
      start = t;
    }
  }

  if (degenerate(s)) {
    report.estimate1 = start[0];
    report.estimate2 = start[1];
    report.loglik = log_likelihood(model, start, s);
    fill_criteria(report, s);
    return report;
  }

  const NewtonResult nr = maximize_loglik(model, s, start, cfg);
  report.estimate1 = nr.theta[0];
  report.estimate2 = nr.theta[1];
  report.loglik = log_likelihood(model, nr.theta, s);
  report.iterations = nr.iterations;
  report.converged = nr.stationary && !nr.hit_bound;
  if (report.converged) report.std_errors = standard_errors(model, nr.theta, s);
  fill_criteria(report, s);
  return report;
}

FitReport mqe_fit(Model model, const Sample& s, const QuantileGrid& grid, const OptimizerConfig& cfg) {
  cfg.validate();
  require_fit_sample(s);
  FitReport report;
  report.model = model;
  report.method = Method::MQE;

  const auto sorted = s.sorted();
  std::vector<double> targets;
  for (double p : grid.probs()) targets.push_back(empirical_quantile(std::span<const double>(sorted), p));

  const auto starts = candidate_starts(model, s, cfg);
  Theta start = starts.front();
  double best = kInf;
  for (const Theta& t : starts) {
    const double obj = sum_sq(quantile_residuals(model, t, targets, grid));
    if (obj < best) {
      best = obj;
      start = t;
    }
  }

  if (degenerate(s)) {
    report.estimate1 = start[0];
    report.estimate2 = start[1];
    report.loglik = log_likelihood(model, start, s);
    fill_criteria(report, s);
    return report;
  }

  const LmResult lm = minimize_quantile_gap(model, targets, grid, start, cfg);
  report.estimate1 = lm.theta[0];
  report.estimate2 = lm.theta[1];
  report.loglik = log_likelihood(model, lm.theta, s);
  report.iterations = lm.iterations;
  report.converged = lm.stationary && !lm.hit_bound;
  fill_criteria(report, s);
  return report;
}

FitReport fit_model(Model model, Method method, const Sample& s, const FitOptions& options) {
  if (method == Method::MLE) return mle_fit(model, s, options.optimizer);
  return mqe_fit(model, s, options.grid, options.optimizer);
}

}  // namespace sbkd
