#ifndef DECAYPOIS_MODELS_HPP
#define DECAYPOIS_MODELS_HPP

#include <Eigen/Core>

#include "decaypois/core.hpp"

namespace decaypois {

class LagExceedsIndexError : public Error {
 public:
  using Error::Error;
};

// Sampled expected-count curve: means[i] is the model mean at offsets[i].
struct MeanCurve {
  std::vector<int> offsets;
  Eigen::VectorXd means;
};

/// Power-law decay mean gamma / (alpha*|t_offset| + 1)^beta.
double power_decay_mean(const IndepParams& params, int t_offset);

/// Multiplicative decay applied to the lagged count in the AR recursion:
/// (((m - lag)*alpha + 1) / (m*alpha + 1))^beta, lag in {1, 2}, m >= lag.
double ar_decay_factor(double alpha, double beta, int m, int lag);

/// Conditional AR(2) mean at step m >= 2 given the two previous counts:
/// s*y_prev1*factor(m,1) + (1-s)*y_prev2*factor(m,2).
double ar2_conditional_mean(const Ar2Params& params, double y_prev1,
                            double y_prev2, int m);

/// First-step conditional mean y_t0 / (alpha + 1)^beta (independent of s).
double ar1_first_step_mean(const Ar2Params& params, double y_t0);

/// Conditional mean of the unifying model at step m >= 2.  Each lag term
/// geometrically blends the decayed event-day count against the realized
/// lagged count with weight u (lag one) or v (lag two); w mixes the terms.
double unified_conditional_mean(const UnifiedParams& params, double y_t0,
                                double y_prev1, double y_prev2, int m);

/// Power-law decay mean evaluated at every offset of the window.
MeanCurve fitted_curve_independence(const IndepParams& params,
                                    const Window& window);

}  // namespace decaypois

#endif  // DECAYPOIS_MODELS_HPP
