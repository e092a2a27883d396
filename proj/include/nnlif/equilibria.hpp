#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nnlif/grid.hpp"

namespace nnlif {

/// Model parameters of the mean-field integrate-and-fire equation.
struct ModelParams {
    double b = 0.0;    ///< connectivity (dimensionless; <0 inhibitory, >0 excitatory)
    double V_R = 1.0;  ///< reset potential
    double V_F = 2.0;  ///< firing threshold
    void validate() const {
        if (!(V_R < V_F)) throw std::invalid_argument("ModelParams: requires V_R < V_F");
    }
};

/// Thrown when a quadrature produces a non-finite value (extreme bN).
struct EvaluationFailure : std::runtime_error {
    EvaluationFailure(const std::string& what, double n_arg)
        : std::runtime_error(what), N(n_arg) {}
    double N;
};

enum class Branch { unique, lower, higher, critical };

std::string to_string(Branch b);

/// One equilibrium of the nonlinear equation.
struct SteadyState {
    ModelParams params;
    double N_inf = 0.0;    ///< stationary firing rate, root of N I(N) = 1
    double residual = 0.0; ///< |N_inf I(N_inf) - 1|
    double slope_S = 0.0;  ///< d/dN (1/I) at N_inf
    Branch branch = Branch::unique;
};

/// I(N): the stationary-state normalization integral, evaluated through the
/// reordered 1-D form sqrt(2 pi) int_{V_R}^{V_F} e^{x^2/2} Phi(x) dx with
/// x = w - bN. Throws EvaluationFailure on overflow.
double eval_I(double N, const ModelParams& params);

/// I'(N) through the analogous reordered form. Exactly 0 when b = 0.
double eval_dIdN(double N, const ModelParams& params);

/// Slope d/dN (1/I) at a root N_inf, i.e. -I'(N_inf) N_inf^2.
double slope_at_root(double N_inf, const ModelParams& params);

struct ScanOptions {
    double N_max = 20.0;
    int points_per_octave = 48;
    double root_tol = 1e-12;         ///< bisection/Newton stop on |G|
    double critical_slope_tol = 1e-6; ///< |G'(N)| below this tags the root critical
};

struct EquilibriaResult {
    std::vector<SteadyState> states;  ///< sorted by N_inf ascending
    std::vector<std::string> warnings;
};

/// All roots of G(N) = N I(N) - 1 on (0, N_max], branch-tagged.
/// An empty list is a valid result (b > b_e).
EquilibriaResult find_equilibria(const ModelParams& params, const ScanOptions& opts = {});

/// slope_S of a SteadyState (quadrature route, no PDE solve).
double slope_S(const SteadyState& state);

/// p_inf(v) at a single point, via the combined-exponent quadrature
/// (never evaluates e^{w^2/2} on its own).
double steady_profile_at(double v, double N_inf, const ModelParams& params);

/// One-sided derivative of p_inf: analytic closed form,
/// -(v - bN) p_inf(v) - N_inf * [v > V_R]. At v = V_R exactly, the
/// two one-sided values are averaged.
double steady_profile_derivative_at(double v, double N_inf, const ModelParams& params);

/// Sampled p_inf on a grid (value at the V_F node is exactly 0).
/// Throws std::runtime_error("grid-too-short ...") if p_inf(V_min) > 1e-12.
std::vector<double> steady_profile(double N_inf, const ModelParams& params, const Grid& grid);

}  // namespace nnlif
