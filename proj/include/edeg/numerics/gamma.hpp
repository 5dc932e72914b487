#pragma once

namespace edeg::numerics {

/// ln Γ(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Γ(x+a)/Γ(x+b), evaluated as exp of a log-gamma difference.
double gamma_ratio(double x, double a, double b);

/// ln Γ(x+a) − ln Γ(x+b).
double log_gamma_ratio(double x, double a, double b);

}  // namespace edeg::numerics
