#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace nnlif {

using Complex = std::complex<double>;

/// Scaled complementary error function erfcx(x) = e^{x^2} erfc(x),
/// valid for all real x without overflow for x >= 0.
double erfcx(double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// g(x) = e^{x^2/2} * Phi(x), the combination appearing in the reordered
/// stationary-state integrals. Stays finite for arbitrarily negative x;
/// overflows (returns +inf) only when e^{x^2/2} itself overflows.
double exp_half_square_cdf(double x);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Supported n: 8, 16, 40.
struct GaussLegendre {
    std::span<const double> nodes;
    std::span<const double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Integrate f over [a, b] with composite 40-point Gauss-Legendre,
/// doubling the panel count until two levels agree to rel_tol (or
/// max_panels is hit). Intended for smooth integrands.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, int max_panels = 256);

/// Solve the tridiagonal system (lower, diag, upper) x = rhs in place.
/// `scratch` must have the same size as rhs. Throws std::runtime_error
/// if a pivot vanishes.
void solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                       std::span<const double> upper, std::span<double> rhs,
                       std::span<double> scratch);

/// Least-squares straight line y ~ a + b x.
struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double rms_residual = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// int_0^a e^{-z t} t^{-1/2} dt for complex z, a > 0.
/// Series for small |z a|, analytic continuation via erf otherwise.
Complex integral_exp_invsqrt(Complex z, double a);

/// int_0^a e^{-z t} t^{+1/2} dt (needed for dN_hat/dxi of singular traces).
Complex integral_exp_sqrt(Complex z, double a);

}  // namespace nnlif
