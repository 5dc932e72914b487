#pragma once

#include "edeg/numerics/exact.hpp"

namespace edeg::complex_degree {

using numerics::ExactInteger;

/// Degree of the complex Grassmannian of k-planes in CP^n under the Plücker
/// embedding:
///   Γ(1)⋯Γ(k+1) / (Γ(n−k+1)⋯Γ(n+1)) · (k+1)(n−k) · Γ((k+1)(n−k)),
/// evaluated with integer factorials only. Requires 0 <= k < n.
ExactInteger delta_complex(int k, int n);

/// ln of the leading-order asymptote a_k^C (b_k^C)^n n^{−k(k+2)/2}.
double log_delta_complex_asymptotic(int k, int n);
double delta_complex_asymptotic(int k, int n);

/// ln a_k^C = ln(Γ(1)⋯Γ(k+1)) − (k/2) ln 2π − (k(k+1) − 1/2) ln(k+1).
double log_a_complex(int k);
/// b_k^C = (k+1)^{k+1}.
double b_complex(int k);

}  // namespace edeg::complex_degree
