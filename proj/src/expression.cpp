#include "qdomain/expression.hpp"

#include <sstream>

#include "qdomain/rational.hpp"

namespace qd {

std::string to_string(const RationalComplex& z) {
    std::ostringstream os;
    if (z.is_zero()) return "0";
    const bool has_re = z.re != 0;
    const bool has_im = z.im != 0;
    if (has_re) os << z.re.get_str();
    if (has_im) {
        if (has_re) os << (z.im > 0 ? "+" : "-") << (z.im > 0 ? z.im : Rational(-z.im)).get_str();
        else os << z.im.get_str();
        os << "i";
    }
    return os.str();
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = qd::to_string(coeffs_[k]);
        if (k == 0) {
            os << c;
        } else {
            if (c == "1") {
            } else if (c == "-1") {
                os << "-";
            } else {
                os << "(" << c << ")*";
            }
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string DifferentialExpression::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        const Polynomial& c = coefficient(k);
        if (c.is_zero() && !(k == 0 && first)) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        if (k == 1) os << " d/dx";
        else if (k > 1) os << " d^" << k << "/dx^" << k;
    }
    return os.str();
}

namespace ops {

namespace {
// hbar/i = -i*hbar, exact.
RationalComplex hbar_over_i(double hbar) {
    return RationalComplex(Rational(0), -rational_from_double(hbar));
}
}  // namespace

DifferentialExpression momentum(double hbar) {
    std::vector<Polynomial> c(2);
    c[1] = Polynomial(hbar_over_i(hbar));
    return DifferentialExpression(std::move(c), hbar);
}

DifferentialExpression position() { return multiplication(Polynomial::monomial(RationalComplex(1L), 1)); }

DifferentialExpression multiplication(Polynomial p) {
    std::vector<Polynomial> c(1);
    c[0] = std::move(p);
    return DifferentialExpression(std::move(c));
}

DifferentialExpression kinetic(double hbar, double mass) {
    const Rational h = rational_from_double(hbar);
    const Rational m = rational_from_double(mass);
    std::vector<Polynomial> c(3);
    c[2] = Polynomial(RationalComplex(-h * h / (2 * m)));
    return DifferentialExpression(std::move(c), hbar, mass);
}

DifferentialExpression kinetic_squared(double hbar, double mass) {
    const Rational h = rational_from_double(hbar);
    const Rational m = rational_from_double(mass);
    std::vector<Polynomial> c(5);
    c[4] = Polynomial(RationalComplex(h * h * h * h / (4 * m * m)));
    return DifferentialExpression(std::move(c), hbar, mass);
}

DifferentialExpression symmetric_pq_power(int n, double hbar) {
    if (n < 1) throw std::invalid_argument("symmetric_pq_power: n must be >= 1");
    const RationalComplex gamma = hbar_over_i(hbar);
    std::vector<Polynomial> c(2);
    c[1] = Polynomial::monomial(gamma * RationalComplex(2L), static_cast<std::size_t>(n));
    c[0] = Polynomial::monomial(gamma * RationalComplex(static_cast<long>(n)),
                                static_cast<std::size_t>(n - 1));
    return DifferentialExpression(std::move(c), hbar);
}

}  // namespace ops

}  // namespace qd
