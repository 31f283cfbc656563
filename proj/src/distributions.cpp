#include "sbkd/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sbkd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_shape(double v, const char* type, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << type << ": " << name << " must be positive and finite (got " << v << ")";
    throw std::invalid_argument(os.str());
  }
}

void check_prob(double p, const char* fn) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << fn << ": probability must lie in [0, 1] (got " << p << ")";
    throw std::domain_error(os.str());
  }
}

// 1 - x^a without cancellation near x = 1.
double one_minus_pow(double x, double a) { return -std::expm1(a * std::log(x)); }

}  // namespace

SbkdParams::SbkdParams(double a, double b) : a_(a), b_(b) {
  check_shape(a, "SbkdParams", "a");
  check_shape(b, "SbkdParams", "b");
}

KumParams::KumParams(double a, double b) : a_(a), b_(b) {
  check_shape(a, "KumParams", "a");
  check_shape(b, "KumParams", "b");
}

BetaIParams::BetaIParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  check_shape(alpha, "BetaIParams", "alpha");
  check_shape(beta, "BetaIParams", "beta");
}

std::string_view to_string(ShapeCategory c) {
  switch (c) {
    case ShapeCategory::Symmetric: return "Symmetric";
    case ShapeCategory::RightTriangular: return "RightTriangular";
    case ShapeCategory::JShapedNegativeSkew: return "JShapedNegativeSkew";
    case ShapeCategory::IncreasingDensity: return "IncreasingDensity";
    case ShapeCategory::UnimodalSkewed: return "UnimodalSkewed";
    case ShapeCategory::ReverseJPositiveSkew: return "ReverseJPositiveSkew";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// SizeBiasedKumaraswamy
// ---------------------------------------------------------------------------

SizeBiasedKumaraswamy::SizeBiasedKumaraswamy(SbkdParams params)
    : params_(params), alpha_(1.0 + 1.0 / params.a()), log_norm_(specfun::log_beta(alpha_, params.b())) {}

double SizeBiasedKumaraswamy::log_pdf(double x) const {
  const double a = params_.a();
  const double b = params_.b();
  if (!(x > 0.0 && x < 1.0)) {
    if (x == 1.0) return std::log(pdf(x));
    return -kInf;
  }
  return std::log(a) + a * std::log(x) + (b - 1.0) * std::log(one_minus_pow(x, a)) - log_norm_;
}

double SizeBiasedKumaraswamy::pdf(double x) const {
  if (x == 1.0) {
    const double b = params_.b();
    if (b < 1.0) return kInf;
    if (b > 1.0) return 0.0;
    return params_.a() + 1.0;
  }
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  return std::exp(log_pdf(x));
}

double SizeBiasedKumaraswamy::cdf(double x) const {
  if (!(x > 0.0)) return 0.0;
  if (x >= 1.0) return 1.0;
  const double la = params_.a() * std::log(x);
  const double z = std::exp(la);
  if (z <= 0.5) return specfun::reg_inc_beta(z, alpha_, params_.b());
  return 1.0 - specfun::reg_inc_beta(-std::expm1(la), params_.b(), alpha_);
}

double SizeBiasedKumaraswamy::survival(double t) const {
  if (!(t > 0.0)) return 1.0;
  if (t >= 1.0) return 0.0;
  const double la = params_.a() * std::log(t);
  const double z = std::exp(la);
  if (z <= 0.5) return 1.0 - specfun::reg_inc_beta(z, alpha_, params_.b());
  return specfun::reg_inc_beta(-std::expm1(la), params_.b(), alpha_);
}

double SizeBiasedKumaraswamy::hazard(double t) const {
  const double s = survival(t);
  if (s <= 0.0) return kInf;
  return pdf(t) / s;
}

double SizeBiasedKumaraswamy::quantile(double prob) const {
  check_prob(prob, "SizeBiasedKumaraswamy::quantile");
  if (prob == 0.0) return 0.0;
  if (prob == 1.0) return 1.0;
  const double inv_a = 1.0 / params_.a();
  const auto root = specfun::inv_reg_inc_beta_pair(prob, alpha_, params_.b());
  if (root.w <= 0.5) return std::pow(root.w, inv_a);
  return std::exp(std::log1p(-root.one_minus_w) * inv_a);
}

double SizeBiasedKumaraswamy::raw_moment(int r) const {
  if (r < 0) throw std::domain_error("raw_moment: order must be non-negative");
  if (r == 0) return 1.0;
  return std::exp(specfun::log_beta(1.0 + (r + 1.0) / params_.a(), params_.b()) - log_norm_);
}

double SizeBiasedKumaraswamy::central_moment(int r) const {
  if (r < 0) throw std::domain_error("central_moment: order must be non-negative");
  const double mu = raw_moment(1);
  double sum = 0.0;
  double binom = 1.0;
  double mu_k = 1.0;
  for (int k = 0; k <= r; ++k) {
    const double term = binom * mu_k * raw_moment(r - k);
    sum += (k % 2 == 0) ? term : -term;
    binom = binom * (r - k) / (k + 1);
    mu_k *= mu;
  }
  return sum;
}

SummaryStats SizeBiasedKumaraswamy::summary() const {
  SummaryStats s{};
  s.mean = raw_moment(1);
  s.variance = central_moment(2);
  s.median = quantile(0.5);
  s.skewness = 3.0 * (s.mean - s.median) / std::sqrt(s.variance);
  s.kurtosis = central_moment(4) / (s.variance * s.variance);
  s.harmonic_mean = params_.b() * std::exp(log_norm_);
  return s;
}

double SizeBiasedKumaraswamy::mgf(double t, const specfun::Tolerance& tol) const {
  tol.validate();
  if (t == 0.0) return 1.0;
  // term_i = t^i / i! * E[X^i]. For t << 0 the alternating series loses
  // digits to cancellation.
  const double log_abs_t = std::log(std::fabs(t));
  double sum = 1.0;
  for (int i = 1; i <= tol.max_iter; ++i) {
    const double log_term = i * log_abs_t - specfun::log_gamma(i + 1.0) +
                            specfun::log_beta(1.0 + (i + 1.0) / params_.a(), params_.b()) - log_norm_;
    const double mag = std::exp(log_term);
    sum += (t < 0.0 && i % 2 == 1) ? -mag : mag;
    if (i > std::fabs(t) && mag < tol.abs_tol * std::fabs(sum)) return sum;
  }
  std::ostringstream os;
  os << "mgf: series did not converge in " << tol.max_iter << " terms (t=" << t << ")";
  throw specfun::IterationFailure(os.str());
}

double SizeBiasedKumaraswamy::cgf(double t, const specfun::Tolerance& tol) const { return std::log(mgf(t, tol)); }

ShapeClass SizeBiasedKumaraswamy::shape() const { return classify_shape(params_); }

Sample SizeBiasedKumaraswamy::sample(std::size_t n, SeededGenerator& gen) const {
  if (n == 0) throw std::invalid_argument("sample: n must be at least 1");
  constexpr double lo = std::numeric_limits<double>::min();
  const double hi = std::nextafter(1.0, 0.0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::clamp(quantile(gen.uniform_open()), lo, hi));
  return Sample(std::move(out));
}

std::vector<CurvePoint> SizeBiasedKumaraswamy::density_curve(std::size_t points) const {
  if (points == 0) throw std::invalid_argument("density_curve: points must be positive");
  std::vector<CurvePoint> curve;
  curve.reserve(points);
  for (std::size_t i = 1; i <= points; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(points + 1);
    curve.push_back({x, pdf(x), cdf(x)});
  }
  return curve;
}

ShapeClass classify_shape(const SbkdParams& p) {
  const double a = p.a();
  const double b = p.b();
  if (a == 1.0 && b == 2.0) return {ShapeCategory::Symmetric, 0.5};
  if (a == 1.0 && b == 1.0) return {ShapeCategory::RightTriangular, std::nullopt};
  if (b < 1.0) return {ShapeCategory::JShapedNegativeSkew, std::nullopt};
  if (b == 1.0) return {ShapeCategory::IncreasingDensity, std::nullopt};
  // d/dx ln f = 0  <=>  x^a = 1/b.
  return {ShapeCategory::UnimodalSkewed, std::pow(b, -1.0 / a)};
}

// ---------------------------------------------------------------------------
// Kumaraswamy
// ---------------------------------------------------------------------------

double Kumaraswamy::log_pdf(double x) const {
  if (!(x > 0.0 && x < 1.0)) return -kInf;
  const double a = params_.a();
  const double b = params_.b();
  return std::log(a) + std::log(b) + (a - 1.0) * std::log(x) + (b - 1.0) * std::log(one_minus_pow(x, a));
}

double Kumaraswamy::pdf(double x) const {
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  return std::exp(log_pdf(x));
}

double Kumaraswamy::cdf(double x) const {
  if (!(x > 0.0)) return 0.0;
  if (x >= 1.0) return 1.0;
  return -std::expm1(params_.b() * std::log(one_minus_pow(x, params_.a())));
}

double Kumaraswamy::quantile(double prob) const {
  check_prob(prob, "Kumaraswamy::quantile");
  if (prob == 0.0) return 0.0;
  if (prob == 1.0) return 1.0;
  const double xa = -std::expm1(std::log1p(-prob) / params_.b());
  return std::exp(std::log(xa) / params_.a());
}

double Kumaraswamy::mean() const {
  return params_.b() * std::exp(specfun::log_beta(1.0 + 1.0 / params_.a(), params_.b()));
}

// ---------------------------------------------------------------------------
// BetaI
// ---------------------------------------------------------------------------

BetaI::BetaI(BetaIParams params) : params_(params), log_norm_(specfun::log_beta(params.alpha(), params.beta())) {}

double BetaI::log_pdf(double x) const {
  if (!(x > 0.0 && x < 1.0)) return -kInf;
  return (params_.alpha() - 1.0) * std::log(x) + (params_.beta() - 1.0) * std::log1p(-x) - log_norm_;
}

double BetaI::pdf(double x) const {
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  return std::exp(log_pdf(x));
}

double BetaI::cdf(double x) const {
  if (!(x > 0.0)) return 0.0;
  if (x >= 1.0) return 1.0;
  return specfun::reg_inc_beta(x, params_.alpha(), params_.beta());
}

double BetaI::quantile(double prob) const {
  check_prob(prob, "BetaI::quantile");
  return specfun::inv_reg_inc_beta(prob, params_.alpha(), params_.beta());
}

}  // namespace sbkd
