#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qdomain/analytic_function.hpp"
#include "qdomain/interval.hpp"

namespace qd {

// open: endpoints excluded (Dirichlet-eliminated unknowns)
// closed: endpoints included, trapezoid weights
// periodic: endpoint identified, uniform weights
enum class GridTopology { open, closed, periodic };

struct Grid {
    ExtendedInterval interval{0.0, 1.0};
    int n = 0;
    GridTopology topology = GridTopology::open;
    double spacing = 0.0;
    std::vector<double> points;

    static Grid make(const ExtendedInterval& iv, int n, GridTopology topology);

    double weight(int j) const {
        if (topology == GridTopology::closed && (j == 0 || j == n - 1)) return 0.5 * spacing;
        return spacing;
    }
};

struct WaveFunction {
    Grid grid;
    Eigen::VectorXcd values;

    static WaveFunction sample(const Grid& g, const AnalyticFunction& f);
    static WaveFunction zero(const Grid& g);

    double norm() const;
    WaveFunction& normalize();
};

std::complex<double> inner(const WaveFunction& a, const WaveFunction& b);

}  // namespace qd
