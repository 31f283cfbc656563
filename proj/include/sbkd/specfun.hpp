#pragma once

#include <stdexcept>
#include <string>

namespace sbkd::specfun {

/// Convergence controls for the iterative kernels.
struct Tolerance {
  double abs_tol = 1e-12;
  int max_iter = 300;

  /// Throws std::invalid_argument unless abs_tol > 0 and max_iter >= 1.
  void validate() const;
};

/// Raised when an iterative kernel exhausts max_iter without meeting its
/// tolerance.
class IterationFailure : public std::runtime_error {
 public:
  explicit IterationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// ln Gamma(z) for z > 0.
double log_gamma(double z);

/// ln B(alpha, beta). Uses Stirling corrections when an argument is large so
/// the result keeps full relative accuracy for arguments up to ~1e3 and
/// beyond.
double log_beta(double alpha, double beta);

/// Regularized incomplete beta I_x(alpha, beta), evaluated by a modified
/// Lentz continued fraction with the usual switch to the reflected form
/// when x > (alpha + 1) / (alpha + beta + 2).
double reg_inc_beta(double x, double alpha, double beta, const Tolerance& tol = {});

/// Inverse of reg_inc_beta in x. Safeguarded Newton iteration in log scale
/// on whichever side of 1/2 the root lies, so roots near 0 and near 1 keep
/// their relative precision.
///
/// The result satisfies |I_w - p| <= 1e-10 unless the root sits between
/// two adjacent doubles, in which case the closer of the two is returned.
double inv_reg_inc_beta(double p, double alpha, double beta, const Tolerance& tol = {});

/// The root of inv_reg_inc_beta as the pair (w, 1 - w), each component
/// accurate to full relative precision.
struct BetaRoot {
  double w;
  double one_minus_w;
};
BetaRoot inv_reg_inc_beta_pair(double p, double alpha, double beta, const Tolerance& tol = {});

/// psi(z) = d/dz ln Gamma(z) for z > 0.
double digamma(double z);

}  // namespace sbkd::specfun
