#include "qdomain/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qd {

const GaussRule& gauss_legendre(int order) {
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");

    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(order - 1 - i)] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

int default_quadrature_order() {
    if (const char* env = std::getenv("QDOMAIN_QUAD_ORDER")) {
        const int v = std::atoi(env);
        if (v >= 2 && v <= 128) return v;
    }
    return 16;
}

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, const QuadratureOptions& opt) {
    const GaussRule& rule = gauss_legendre(opt.order);
    const double h = (b - a) / opt.panels;
    std::complex<double> total{0.0, 0.0};
    for (int p = 0; p < opt.panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            acc += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
        total += acc * (0.5 * h);
    }
    return total;
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureOptions& opt) {
    return integrate([&](double x) { return std::complex<double>(f(x), 0.0); }, a, b, opt).real();
}

std::complex<double> integrate_poly_oscillatory(const Polynomial& p, double k, double a, double b) {
    if (std::abs(k) < 0.5) {
        // Exact antiderivative route; no oscillation to exploit.
        const Polynomial anti = p.antiderivative();
        if (k == 0.0) return anti.eval(b) - anti.eval(a);
        auto f = [&](double x) { return p.eval(x) * std::exp(std::complex<double>(0.0, k * x)); };
        return integrate(f, a, b, {64, 24});
    }
    // int p e^{ikx} = e^{ikx} sum_j (-1)^j p^{(j)} / (ik)^{j+1}, evaluated a..b.
    const std::complex<double> ik(0.0, k);
    std::complex<double> upper{0.0, 0.0}, lower{0.0, 0.0};
    Polynomial dp = p;
    std::complex<double> denom = ik;
    double sign = 1.0;
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        upper += sign * dp.eval(b) / denom;
        lower += sign * dp.eval(a) / denom;
        dp = dp.derivative();
        denom *= ik;
        sign = -sign;
    }
    const std::complex<double> eb = std::exp(ik * b), ea = std::exp(ik * a);
    return eb * upper - ea * lower;
}

std::vector<double> dyadic_shell_masses(const std::function<std::complex<double>(double)>& f,
                                        double start, int direction, double width0, int count,
                                        int order, double factor) {
    std::vector<double> masses;
    masses.reserve(static_cast<std::size_t>(count));
    double w = width0;
    double pos = start;
    for (int s = 0; s < count; ++s) {
        const double next = pos + direction * w;
        const double lo = std::min(pos, next), hi = std::max(pos, next);
        masses.push_back(
            integrate_real([&](double x) { return std::norm(f(x)); }, lo, hi, {4, order}));
        pos = next;
        w *= factor;
    }
    return masses;
}

TailClass classify_shell_masses(const std::vector<double>& masses, double lo, double hi,
                                int needed) {
    int conv = 0, div = 0;
    // Shells with negligible absolute mass count as converged outright.
    double peak = 0.0;
    for (double m : masses) peak = std::max(peak, m);
    if (peak <= 0.0) return TailClass::convergent;
    for (std::size_t k = 1; k < masses.size(); ++k) {
        if (masses[k] <= 1e-300 || masses[k] <= 1e-18 * peak) {
            ++conv;
            div = 0;
        } else {
            const double ratio = masses[k] / std::max(masses[k - 1], 1e-300);
            if (ratio <= lo) {
                ++conv;
                div = 0;
            } else if (ratio >= hi) {
                ++div;
                conv = 0;
            } else {
                conv = 0;
                div = 0;
            }
        }
        if (conv >= needed) return TailClass::convergent;
        if (div >= needed) return TailClass::divergent;
    }
    return TailClass::inconclusive;
}

std::string to_string(TailClass c) {
    switch (c) {
        case TailClass::convergent: return "convergent";
        case TailClass::divergent: return "divergent";
        case TailClass::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace qd
