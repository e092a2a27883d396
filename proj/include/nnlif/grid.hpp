#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nnlif {

/// Uniform voltage mesh on [V_min, V_F]. Nodes v_j = V_min + j dv for
/// j = 0..M; the last node is V_F and carries the Dirichlet value 0.
/// The M entries 0..M-1 are the solver unknowns.
struct Grid {
    double V_min = 0.0;
    double V_F = 0.0;
    int M = 0;  ///< interior node count

    Grid() = default;
    Grid(double vmin, double vf, int m) : V_min(vmin), V_F(vf), M(m) {
        if (!(vmin < vf) || m < 8) throw std::invalid_argument("Grid: bad bounds or M < 8");
    }

    double dv() const { return (V_F - V_min) / M; }
    double node(int j) const { return V_min + j * dv(); }
    std::vector<double> nodes() const {
        std::vector<double> v(M + 1);
        for (int j = 0; j <= M; ++j) v[j] = node(j);
        return v;
    }
    /// Index of the cell whose node is nearest to x.
    int cell_of(double x) const {
        int j = static_cast<int>(std::lround((x - V_min) / dv()));
        if (j < 0 || j >= M) throw std::invalid_argument("Grid: point outside interior");
        return j;
    }
};

/// Grid builder used throughout: V_min = min(V_R, bN_ref) - margin.
/// The margin default keeps both the truncated tail mass below 1e-8 and
/// the endpoint value of p_inf below 1e-12.
Grid make_grid(double V_R, double V_F, double drift_center, double dv_target,
               double margin = 8.0);

}  // namespace nnlif
