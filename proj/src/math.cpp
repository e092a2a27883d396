#include "nnlif/math.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace nnlif {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Asymptotic expansion of erfcx for large positive arguments:
// erfcx(x) ~ 1/(x sqrt(pi)) * (1 - 1/(2x^2) + 3/(4x^4) - ...).
double erfcx_asymptotic(double x) {
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 10; ++k) {
        term *= -(2 * k - 1) * inv2x2;
        sum += term;
        if (std::abs(term) < 1e-17) break;
    }
    return sum / (x * kSqrtPi);
}

}  // namespace

double erfcx(double x) {
    if (x >= 26.0) return erfcx_asymptotic(x);
    if (x >= 0.0) return std::exp(x * x) * std::erfc(x);
    // Negative arguments: erfcx(x) = 2 e^{x^2} - erfcx(-x); overflows for x << 0.
    return 2.0 * std::exp(x * x) - erfcx(-x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440); }

double exp_half_square_cdf(double x) {
    if (x <= 0.0) return 0.5 * erfcx(-x * 0.70710678118654752440);
    // Phi(x) in [1/2, 1]: no cancellation; overflow only if x^2/2 > 709.
    return std::exp(0.5 * x * x) * normal_cdf(x);
}

namespace {

struct GLTable {
    std::vector<double> nodes, weights;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
GLTable build_gl(int n) {
    GLTable t;
    t.nodes.resize(n);
    t.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        t.nodes[i] = -x;
        t.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        t.weights[i] = w;
        t.weights[n - 1 - i] = w;
    }
    return t;
}

const GLTable& gl_table(int n) {
    static std::mutex mu;
    static GLTable t8, t16, t40;
    std::lock_guard<std::mutex> lock(mu);
    GLTable* t = nullptr;
    switch (n) {
        case 8: t = &t8; break;
        case 16: t = &t16; break;
        case 40: t = &t40; break;
        default: throw std::invalid_argument("gauss_legendre: unsupported order");
    }
    if (t->nodes.empty()) *t = build_gl(n);
    return *t;
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
    const GLTable& t = gl_table(n);
    return {std::span<const double>(t.nodes), std::span<const double>(t.weights)};
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_panels) {
    if (a == b) return 0.0;
    auto rule = gauss_legendre(40);
    auto level = [&](int panels) {
        double sum = 0.0;
        const double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = a + (p + 0.5) * h;
            const double half = 0.5 * h;
            double s = 0.0;
            for (size_t i = 0; i < rule.nodes.size(); ++i)
                s += rule.weights[i] * f(mid + half * rule.nodes[i]);
            sum += s * half;
        }
        return sum;
    };
    double prev = level(1);
    for (int panels = 2; panels <= max_panels; panels *= 2) {
        double cur = level(panels);
        double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
        if (std::abs(cur - prev) <= rel_tol * scale) return cur;
        prev = cur;
    }
    return prev;
}

void solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                       std::span<const double> upper, std::span<double> rhs,
                       std::span<double> scratch) {
    const size_t n = rhs.size();
    if (n == 0) return;
    double piv = diag[0];
    if (piv == 0.0) throw std::runtime_error("tridiagonal solve: zero pivot");
    rhs[0] /= piv;
    for (size_t i = 1; i < n; ++i) {
        scratch[i] = upper[i - 1] / piv;
        piv = diag[i] - lower[i - 1] * scratch[i];
        if (piv == 0.0) throw std::runtime_error("tridiagonal solve: zero pivot");
        rhs[i] = (rhs[i] - lower[i - 1] * rhs[i - 1]) / piv;
    }
    for (size_t i = n - 1; i-- > 0;) rhs[i] -= scratch[i + 1] * rhs[i + 1];
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit fit;
    const double det = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

namespace {

// 2 int_0^{sqrt(a)} g(tau) e^{-z tau^2} dtau with g = 1 or tau^2.
Complex gauss_half_line(Complex z, double a, bool quadratic) {
    auto rule = gauss_legendre(40);
    const double end = std::sqrt(a);
    Complex total = 0.0;
    const int panels = 4 + static_cast<int>(std::abs(z) * a / 6.0);
    const double h = end / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        const double half = 0.5 * h;
        Complex s = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double tau = mid + half * rule.nodes[i];
            const double g = quadratic ? tau * tau : 1.0;
            s += rule.weights[i] * g * std::exp(-z * tau * tau);
        }
        total += s * half;
    }
    return 2.0 * total;
}

}  // namespace

Complex integral_exp_invsqrt(Complex z, double a) { return gauss_half_line(z, a, false); }

Complex integral_exp_sqrt(Complex z, double a) { return gauss_half_line(z, a, true); }

}  // namespace nnlif
