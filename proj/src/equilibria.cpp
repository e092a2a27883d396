#include "nnlif/equilibria.hpp"

#include <algorithm>
#include <cmath>

#include "nnlif/math.hpp"

namespace nnlif {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310005024;
}

std::string to_string(Branch b) {
    switch (b) {
        case Branch::unique: return "unique";
        case Branch::lower: return "lower";
        case Branch::higher: return "higher";
        case Branch::critical: return "critical";
    }
    return "?";
}

Grid make_grid(double V_R, double V_F, double drift_center, double dv_target, double margin) {
    const double vmin = std::min(V_R, drift_center) - margin;
    const int M = std::max(8, static_cast<int>(std::lround((V_F - vmin) / dv_target)));
    return Grid(vmin, V_F, M);
}

double eval_I(double N, const ModelParams& params) {
    params.validate();
    if (N < 0) throw std::invalid_argument("eval_I: N must be >= 0");
    const double shift = params.b * N;
    const double value = kSqrt2Pi * integrate(
        [shift](double w) { return exp_half_square_cdf(w - shift); },
        params.V_R, params.V_F, 1e-12);
    if (!std::isfinite(value)) throw EvaluationFailure("eval_I: non-finite result", N);
    return value;
}

double eval_dIdN(double N, const ModelParams& params) {
    params.validate();
    if (N < 0) throw std::invalid_argument("eval_dIdN: N must be >= 0");
    if (params.b == 0.0) return 0.0;
    const double shift = params.b * N;
    // I'(N) = -b int_{V_R}^{V_F} [1 + sqrt(2 pi) x g(x)] dy,  x = y - bN.
    // The bracket decays like 1/x^2 as x -> -inf and grows like the
    // integrand of I as x -> +inf.
    const double value = -params.b * integrate(
        [shift](double y) {
            const double x = y - shift;
            return 1.0 + kSqrt2Pi * x * exp_half_square_cdf(x);
        },
        params.V_R, params.V_F, 1e-12);
    if (!std::isfinite(value)) throw EvaluationFailure("eval_dIdN: non-finite result", N);
    return value;
}

double slope_at_root(double N_inf, const ModelParams& params) {
    return -eval_dIdN(N_inf, params) * N_inf * N_inf;
}

double slope_S(const SteadyState& state) { return slope_at_root(state.N_inf, state.params); }

namespace {

// G(N) = N I(N) - 1 with overflow treated as "strongly positive":
// I(N) only overflows when it is genuinely enormous.
double residual_G(double N, const ModelParams& params) {
    try {
        return N * eval_I(N, params) - 1.0;
    } catch (const EvaluationFailure&) {
        return std::numeric_limits<double>::infinity();
    }
}

double polish_root(double lo, double hi, double g_lo, const ModelParams& params, double tol) {
    // Bisection to a decent bracket, then Newton.
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = residual_G(mid, params);
        if ((gm <= 0) == (g_lo <= 0)) {
            lo = mid;
            g_lo = gm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-9 * (1.0 + hi)) break;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        const double g = residual_G(x, params);
        if (std::abs(g) <= tol) return x;
        const double dg = eval_I(x, params) + x * eval_dIdN(x, params);
        double step = g / dg;
        double nx = x - step;
        if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);  // stay bracketed
        if (residual_G(nx, params) * g_lo <= 0) hi = nx; else lo = nx;
        x = nx;
    }
    return x;
}

}  // namespace

EquilibriaResult find_equilibria(const ModelParams& params, const ScanOptions& opts) {
    params.validate();
    if (!(opts.N_max > 0)) throw std::invalid_argument("find_equilibria: N_max must be > 0");
    EquilibriaResult result;

    // Log-spaced scan refined uniformly per octave.
    const double N_lo = 1e-4;
    std::vector<double> scan;
    for (double left = N_lo; left < opts.N_max; left *= 2.0) {
        const double right = std::min(left * 2.0, opts.N_max);
        for (int i = 0; i < opts.points_per_octave; ++i)
            scan.push_back(left + (right - left) * i / opts.points_per_octave);
    }
    scan.push_back(opts.N_max);

    std::vector<double> g(scan.size());
    for (size_t i = 0; i < scan.size(); ++i) g[i] = residual_G(scan[i], params);

    std::vector<double> roots;
    for (size_t i = 0; i + 1 < scan.size(); ++i) {
        if (g[i] == 0.0) {
            roots.push_back(scan[i]);
            continue;
        }
        if (g[i] * g[i + 1] < 0.0) {
            // Check scan resolution: a second sign change hiding in this cell
            // would show as a non-monotone G at the midpoint.
            const double mid = 0.5 * (scan[i] + scan[i + 1]);
            const double gm = residual_G(mid, params);
            if (g[i] * gm > 0.0 && gm * g[i + 1] > 0.0)
                result.warnings.push_back("scan-resolution: possible double sign change near N=" +
                                          std::to_string(mid));
            roots.push_back(polish_root(scan[i], scan[i + 1], g[i], params, opts.root_tol));
        }
    }
    std::sort(roots.begin(), roots.end());

    for (size_t i = 0; i < roots.size(); ++i) {
        SteadyState st;
        st.params = params;
        st.N_inf = roots[i];
        st.residual = std::abs(residual_G(roots[i], params));
        st.slope_S = slope_at_root(roots[i], params);
        const double dG = eval_I(roots[i], params) + roots[i] * eval_dIdN(roots[i], params);
        if (std::abs(dG) < opts.critical_slope_tol)
            st.branch = Branch::critical;
        else if (roots.size() == 1)
            st.branch = Branch::unique;
        else
            st.branch = (i == 0) ? Branch::lower : Branch::higher;
        result.states.push_back(st);
    }
    return result;
}

double steady_profile_at(double v, double N_inf, const ModelParams& params) {
    const double a = params.b * N_inf;
    const double lo = std::max(v, params.V_R);
    if (lo >= params.V_F) return 0.0;
    const double xv = v - a;
    // N int e^{(s^2 - xv^2)/2} ds over s in [lo-a, VF-a]: the combined
    // exponent stays moderate wherever p_inf itself does.
    return N_inf * integrate(
        [xv, a](double w) {
            const double s = w - a;
            return std::exp(0.5 * (s * s - xv * xv));
        },
        lo, params.V_F, 1e-12);
}

double steady_profile_derivative_at(double v, double N_inf, const ModelParams& params) {
    const double a = params.b * N_inf;
    const double p = steady_profile_at(v, N_inf, params);
    double indicator;
    if (std::abs(v - params.V_R) < 1e-12)
        indicator = 0.5;  // average of the one-sided limits at the kink
    else
        indicator = (v > params.V_R) ? 1.0 : 0.0;
    return -(v - a) * p - N_inf * indicator;
}

std::vector<double> steady_profile(double N_inf, const ModelParams& params, const Grid& grid) {
    if (!(N_inf > 0)) throw std::invalid_argument("steady_profile: N_inf must be > 0");
    const double at_min = steady_profile_at(grid.V_min, N_inf, params);
    if (at_min > 1e-12)
        throw std::runtime_error("grid-too-short: p_inf(V_min) = " + std::to_string(at_min) +
                                 " > 1e-12, truncation leaks mass");
    std::vector<double> p(grid.M + 1);
    for (int j = 0; j < grid.M; ++j) p[j] = steady_profile_at(grid.node(j), N_inf, params);
    p[grid.M] = 0.0;
    return p;
}

}  // namespace nnlif
