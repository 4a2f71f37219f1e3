#include "qdomain/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace qd {

Grid Grid::make(const ExtendedInterval& iv, int n, GridTopology topology) {
    if (!iv.finite()) throw std::invalid_argument("Grid: interval must be finite (truncate first)");
    if (n < 4) throw std::invalid_argument("Grid: need at least 4 points");
    Grid g;
    g.interval = iv;
    g.n = n;
    g.topology = topology;
    const double len = iv.length();
    g.points.resize(static_cast<std::size_t>(n));
    switch (topology) {
        case GridTopology::open:
            g.spacing = len / (n + 1);
            for (int j = 0; j < n; ++j) g.points[static_cast<std::size_t>(j)] = iv.lower + (j + 1) * g.spacing;
            break;
        case GridTopology::closed:
            g.spacing = len / (n - 1);
            for (int j = 0; j < n; ++j) g.points[static_cast<std::size_t>(j)] = iv.lower + j * g.spacing;
            break;
        case GridTopology::periodic:
            g.spacing = len / n;
            for (int j = 0; j < n; ++j) g.points[static_cast<std::size_t>(j)] = iv.lower + j * g.spacing;
            break;
    }
    return g;
}

WaveFunction WaveFunction::sample(const Grid& g, const AnalyticFunction& f) {
    WaveFunction w;
    w.grid = g;
    w.values.resize(g.n);
    for (int j = 0; j < g.n; ++j) w.values(j) = f.value(g.points[static_cast<std::size_t>(j)]);
    return w;
}

WaveFunction WaveFunction::zero(const Grid& g) {
    WaveFunction w;
    w.grid = g;
    w.values = Eigen::VectorXcd::Zero(g.n);
    return w;
}

double WaveFunction::norm() const { return std::sqrt(std::abs(inner(*this, *this).real())); }

WaveFunction& WaveFunction::normalize() {
    const double n = norm();
    if (n > 0) values /= n;
    return *this;
}

std::complex<double> inner(const WaveFunction& a, const WaveFunction& b) {
    if (a.grid.n != b.grid.n) throw std::invalid_argument("inner: grid mismatch");
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < a.grid.n; ++j)
        acc += std::conj(a.values(j)) * b.values(j) * a.grid.weight(j);
    return acc;
}

}  // namespace qd
