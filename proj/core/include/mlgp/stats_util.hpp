#pragma once

#include <cstddef>

namespace mlgp {

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// survival function of a chi-squared distribution with dof degrees of freedom
double chi2_sf(double x, double dof);

double normal_cdf(double z);

/// Kolmogorov distribution survival function, asymptotic series
double kolmogorov_sf(double lambda);

/// CDF of Gamma(shape, rate)
double gamma_cdf(double x, double shape, double rate);

/// quantile of Gamma(shape, rate) by bisection
double gamma_quantile(double p, double shape, double rate);

} // namespace mlgp
