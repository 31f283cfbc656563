#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sbkd/random.hpp"
#include "sbkd/sample.hpp"
#include "sbkd/specfun.hpp"

namespace sbkd {

/// Shape parameters (a, b) of the size-biased Kumaraswamy law,
/// f(x) = a x^a (1 - x^a)^(b-1) / B(1 + 1/a, b) on (0, 1).
class SbkdParams {
 public:
  /// Throws std::invalid_argument unless both are positive and finite.
  SbkdParams(double a, double b);
  double a() const { return a_; }
  double b() const { return b_; }
  bool operator==(const SbkdParams&) const = default;

 private:
  double a_;
  double b_;
};

class KumParams {
 public:
  KumParams(double a, double b);
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double a_;
  double b_;
};

class BetaIParams {
 public:
  BetaIParams(double alpha, double beta);
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

enum class ShapeCategory {
  Symmetric,
  RightTriangular,
  JShapedNegativeSkew,
  IncreasingDensity,
  UnimodalSkewed,
  // Kept for completeness of the qualitative taxonomy. The analytic
  // stationary point x^a = 1/b shows every b > 1 density is unimodal, so
  // classify_shape never returns this.
  ReverseJPositiveSkew,
};

std::string_view to_string(ShapeCategory c);

struct ShapeClass {
  ShapeCategory category;
  std::optional<double> mode;  // set for Symmetric and UnimodalSkewed
};

struct SummaryStats {
  double mean;
  double variance;
  double median;
  double skewness;  // Pearson's second coefficient, 3 (mean - median) / sd
  double kurtosis;  // mu_4 / mu_2^2
  double harmonic_mean;
};

struct CurvePoint {
  double x;
  double pdf;
  double cdf;
};

/// Series controls for the moment generating function.
inline constexpr specfun::Tolerance kMgfTolerance{1e-14, 500};

/// The size-biased Kumaraswamy distribution. Immutable; every member is a
/// pure function of the parameters.
class SizeBiasedKumaraswamy {
 public:
  explicit SizeBiasedKumaraswamy(SbkdParams params);

  const SbkdParams& params() const { return params_; }

  /// 0 outside (0, 1). At x = 1 the analytic limit: +inf for b < 1,
  /// a + 1 for b = 1, 0 for b > 1.
  double pdf(double x) const;
  /// -inf outside (0, 1).
  double log_pdf(double x) const;
  double cdf(double x) const;
  double survival(double t) const;
  /// pdf / survival; +inf once survival underflows to zero.
  double hazard(double t) const;
  /// Inverse cdf. Throws specfun::IterationFailure from the inverse beta
  /// solve on pathological parameters.
  double quantile(double prob) const;

  double raw_moment(int r) const;
  /// Binomial expansion of E[(X - mu)^r] over raw moments.
  double central_moment(int r) const;
  SummaryStats summary() const;

  double mgf(double t, const specfun::Tolerance& tol = kMgfTolerance) const;
  double cgf(double t, const specfun::Tolerance& tol = kMgfTolerance) const;

  ShapeClass shape() const;

  /// Inverse-transform draws; every value lies strictly inside (0, 1).
  Sample sample(std::size_t n, SeededGenerator& gen) const;

  /// pdf and cdf at x_i = i / (points + 1), i = 1..points. Throws
  /// std::invalid_argument for points == 0.
  std::vector<CurvePoint> density_curve(std::size_t points) const;

 private:
  SbkdParams params_;
  double alpha_;     // 1 + 1/a
  double log_norm_;  // ln B(1 + 1/a, b)
};

/// Shape classification from parameters alone.
ShapeClass classify_shape(const SbkdParams& p);

class Kumaraswamy {
 public:
  explicit Kumaraswamy(KumParams params) : params_(params) {}
  const KumParams& params() const { return params_; }
  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double quantile(double prob) const;
  double mean() const;

 private:
  KumParams params_;
};

class BetaI {
 public:
  explicit BetaI(BetaIParams params);
  const BetaIParams& params() const { return params_; }
  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double quantile(double prob) const;
  double mean() const { return params_.alpha() / (params_.alpha() + params_.beta()); }

 private:
  BetaIParams params_;
  double log_norm_;
};

}  // namespace sbkd
