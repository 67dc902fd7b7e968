#pragma once

#include <span>
#include <vector>

namespace secnoma::poly {

/// Evaluates c[0] x^n + c[1] x^(n-1) + ... + c[n] by Horner's rule.
double evaluate(std::span<const double> coeffs, double x);

/// Real roots of the polynomial with coefficients in descending powers.
///
/// Coefficients are scaled by their largest magnitude, leading terms that are
/// negligible after scaling are dropped (the degree drops with them), and the
/// remaining roots come from the eigenvalues of the companion matrix. An
/// eigenvalue counts as real when |imag| < 1e-9 (1 + |real|). Each accepted
/// root is then polished with two Newton steps on the full polynomial.
/// Roots are returned in ascending order. An all-zero polynomial has no roots.
std::vector<double> real_roots(std::span<const double> coeffs);

}  // namespace secnoma::poly
