#include "qdomain/specfile.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qd {

namespace {

using Cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

struct Token {
    enum Kind { number, ident, sym, end } kind = end;
    std::string text;
    Rational value;  // for numbers, exact
    int line = 0, col = 0;
};

class Lexer {
  public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept_sym(const char* sym) {
        if (tok_.kind == Token::sym && tok_.text == sym) {
            advance();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, tok_.col, msg); }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size() || s_[pos_] == '#') {
            tok_.kind = Token::end;
            return;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            tok_.kind = Token::number;
            tok_.text = s_.substr(start, pos_ - start);
            tok_.value = exact_decimal(tok_.text, tok_.line, tok_.col);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::ident;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        tok_.kind = Token::sym;
        tok_.text = std::string(1, c);
        ++pos_;
    }

    static Rational exact_decimal(const std::string& text, int line, int col) {
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(text, 10);
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty()) throw ParseError(line, col, "malformed number '" + text + "'");
        Rational denom(1);
        for (std::size_t k = 0; k + dot + 1 < text.size(); ++k) denom *= 10;
        return Rational(digits, 10) / denom;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
    Token tok_;
};

// ---------------------------------------------------------------------------
// polynomial / scalar expression parser
// ---------------------------------------------------------------------------

struct EvalContext {
    double hbar = 1.0;
    double mass = 1.0;
    const SpecParams* params = nullptr;
    bool allow_x = true;      // coefficient mode
    bool allow_exp = false;   // boundary scalar mode
};

Polynomial parse_expr(Lexer& lex, const EvalContext& ctx);

Polynomial parse_atom(Lexer& lex, const EvalContext& ctx) {
    const Token t = lex.peek();
    if (t.kind == Token::number) {
        lex.take();
        return Polynomial(RationalComplex(t.value));
    }
    if (t.kind == Token::ident) {
        if (t.text == "x") {
            if (!ctx.allow_x) lex.fail("'x' is not allowed in this context");
            lex.take();
            return Polynomial::monomial(RationalComplex(1L), 1);
        }
        if (t.text == "i") {
            lex.take();
            return Polynomial(RationalComplex::i());
        }
        if (t.text == "pi") {
            lex.take();
            return Polynomial(RationalComplex(rational_from_double(M_PI)));
        }
        if (t.text == "hbar") {
            lex.take();
            return Polynomial(RationalComplex(rational_from_double(ctx.hbar)));
        }
        if (t.text == "mass" || t.text == "m") {
            lex.take();
            return Polynomial(RationalComplex(rational_from_double(ctx.mass)));
        }
        if (t.text == "exp") {
            if (!ctx.allow_exp) lex.fail("'exp' is only allowed in boundary lines");
            lex.take();
            if (!lex.accept_sym("(")) lex.fail("expected '(' after exp");
            const Polynomial arg = parse_expr(lex, ctx);
            if (!lex.accept_sym(")")) lex.fail("expected ')' closing exp");
            if (!arg.is_constant()) lex.fail("exp() needs a constant argument");
            const Cplx v = std::exp(arg.coefficient(0).to_complex());
            // boundary scalars live in floating point; store the exact dyadics
            return Polynomial(RationalComplex(rational_from_double(v.real()),
                                              rational_from_double(v.imag())));
        }
        if (ctx.params) {
            const auto it = ctx.params->find(t.text);
            if (it != ctx.params->end()) {
                lex.take();
                return Polynomial(RationalComplex(rational_from_double(it->second)));
            }
        }
        lex.fail("unknown symbol '" + t.text + "'");
    }
    if (t.kind == Token::sym && t.text == "(") {
        lex.take();
        Polynomial inner = parse_expr(lex, ctx);
        if (!lex.accept_sym(")")) lex.fail("expected ')'");
        return inner;
    }
    lex.fail("expected a number, symbol or '('");
}

Polynomial parse_power(Lexer& lex, const EvalContext& ctx) {
    Polynomial base = parse_atom(lex, ctx);
    if (lex.peek().kind == Token::sym && lex.peek().text == "^") {
        lex.take();
        const Token e = lex.peek();
        if (e.kind != Token::number || e.text.find('.') != std::string::npos)
            lex.fail("exponent must be a non-negative integer");
        lex.take();
        const long n = std::stol(e.text);
        Polynomial out = Polynomial::one();
        for (long k = 0; k < n; ++k) out = out * base;
        return out;
    }
    return base;
}

Polynomial parse_unary(Lexer& lex, const EvalContext& ctx) {
    bool neg = false;
    while (lex.peek().kind == Token::sym && (lex.peek().text == "-" || lex.peek().text == "+")) {
        if (lex.take().text == "-") neg = !neg;
    }
    Polynomial p = parse_power(lex, ctx);
    return neg ? -p : p;
}

Polynomial parse_term(Lexer& lex, const EvalContext& ctx) {
    Polynomial acc = parse_unary(lex, ctx);
    while (lex.peek().kind == Token::sym &&
           (lex.peek().text == "*" || lex.peek().text == "/")) {
        const bool mul = lex.take().text == "*";
        const Polynomial rhs = parse_unary(lex, ctx);
        if (mul) {
            acc = acc * rhs;
        } else {
            if (!rhs.is_constant()) lex.fail("division only by constants");
            const RationalComplex c = rhs.coefficient(0);
            if (c.is_zero()) lex.fail("division by zero");
            acc = c.inverse() * acc;
        }
    }
    return acc;
}

Polynomial parse_expr(Lexer& lex, const EvalContext& ctx) {
    Polynomial acc = parse_term(lex, ctx);
    while (lex.peek().kind == Token::sym &&
           (lex.peek().text == "+" || lex.peek().text == "-")) {
        const bool add = lex.take().text == "+";
        const Polynomial rhs = parse_term(lex, ctx);
        acc = add ? acc + rhs : acc - rhs;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// boundary lines
// ---------------------------------------------------------------------------

struct JetRef {
    bool upper = false;
    int deriv = 0;
};

std::optional<JetRef> try_parse_jet_ref(Lexer& lex, const ExtendedInterval& iv, int line) {
    if (lex.peek().kind != Token::ident || lex.peek().text != "f") return std::nullopt;
    lex.take();
    int deriv = 0;
    while (lex.peek().kind == Token::sym && lex.peek().text == "'") {
        lex.take();
        ++deriv;
    }
    if (deriv >= kJetPerEnd)
        throw ParseError(line, lex.peek().col,
                         "jet order exceeds 3: boundary forms stop at f'''");
    if (!lex.accept_sym("(")) lex.fail("expected '(' after f");
    JetRef ref;
    ref.deriv = deriv;
    const Token e = lex.peek();
    if (e.kind == Token::ident && (e.text == "a" || e.text == "b")) {
        lex.take();
        ref.upper = e.text == "b";
    } else {
        EvalContext ctx;
        ctx.allow_x = false;
        const Polynomial v = parse_expr(lex, ctx);
        if (!v.is_constant()) lex.fail("endpoint reference must be a constant");
        const double val = v.coefficient(0).to_complex().real();
        if (std::abs(val - iv.lower) < 1e-12 && iv.lower_finite()) {
            ref.upper = false;
        } else if (std::abs(val - iv.upper) < 1e-12 && iv.upper_finite()) {
            ref.upper = true;
        } else {
            throw ParseError(line, e.col,
                             "endpoint value does not match a finite interval endpoint; boundary "
                             "functionals are only defined at finite endpoints");
        }
    }
    if (!lex.accept_sym(")")) lex.fail("expected ')' after endpoint");
    return ref;
}

// linear form over the jet entries: constant + sum of coefficients * jets
struct LinVal {
    Cplx constant{0.0, 0.0};
    JetRow jets = JetRow::Zero();

    bool pure_scalar() const { return jets.norm() == 0.0; }
};

LinVal parse_lin_expr(Lexer& lex, const ExtendedInterval& iv, const EvalContext& ctx, int line);

LinVal parse_lin_atom(Lexer& lex, const ExtendedInterval& iv, const EvalContext& ctx, int line) {
    if (const auto ref = try_parse_jet_ref(lex, iv, line)) {
        LinVal v;
        v.jets(jet_index(ref->upper, ref->deriv)) = Cplx(1.0, 0.0);
        return v;
    }
    if (lex.peek().kind == Token::sym && lex.peek().text == "(") {
        lex.take();
        LinVal inner = parse_lin_expr(lex, iv, ctx, line);
        if (!lex.accept_sym(")")) lex.fail("expected ')'");
        return inner;
    }
    const Polynomial p = parse_atom(lex, ctx);
    if (!p.is_constant()) lex.fail("boundary expressions must not contain x");
    LinVal v;
    v.constant = p.coefficient(0).to_complex();
    return v;
}

LinVal parse_lin_power(Lexer& lex, const ExtendedInterval& iv, const EvalContext& ctx, int line) {
    LinVal base = parse_lin_atom(lex, iv, ctx, line);
    if (lex.peek().kind == Token::sym && lex.peek().text == "^") {
        lex.take();
        const Token e = lex.peek();
        if (e.kind != Token::number || e.text.find('.') != std::string::npos)
            lex.fail("exponent must be a non-negative integer");
        if (!base.pure_scalar()) lex.fail("jet entries cannot be raised to powers");
        lex.take();
        const long n = std::stol(e.text);
        LinVal out;
        out.constant = Cplx(1.0, 0.0);
        for (long k = 0; k < n; ++k) out.constant *= base.constant;
        return out;
    }
    return base;
}

LinVal parse_lin_unary(Lexer& lex, const ExtendedInterval& iv, const EvalContext& ctx, int line) {
    bool neg = false;
    while (lex.peek().kind == Token::sym && (lex.peek().text == "-" || lex.peek().text == "+")) {
        if (lex.take().text == "-") neg = !neg;
    }
    LinVal v = parse_lin_power(lex, iv, ctx, line);
    if (neg) {
        v.constant = -v.constant;
        v.jets = -v.jets;
    }
    return v;
}

LinVal parse_lin_term(Lexer& lex, const ExtendedInterval& iv, const EvalContext& ctx, int line) {
    LinVal acc = parse_lin_unary(lex, iv, ctx, line);
    while (lex.peek().kind == Token::sym &&
           (lex.peek().text == "*" || lex.peek().text == "/")) {
        const bool mul = lex.take().text == "*";
        LinVal rhs = parse_lin_unary(lex, iv, ctx, line);
        if (!acc.pure_scalar() && !rhs.pure_scalar())
            lex.fail("products of jet entries are not linear boundary conditions");
        if (!mul) {
            if (!rhs.pure_scalar()) lex.fail("cannot divide by a jet entry");
            if (std::abs(rhs.constant) == 0.0) lex.fail("division by zero");
            acc.constant /= rhs.constant;
            acc.jets /= rhs.constant;
        } else if (acc.pure_scalar()) {
            rhs.jets *= acc.constant;
            rhs.constant *= acc.constant;
            acc = rhs;
        } else {
            acc.jets *= rhs.constant;
            acc.constant *= rhs.constant;
        }
    }
    return acc;
}

LinVal parse_lin_expr(Lexer& lex, const ExtendedInterval& iv, const EvalContext& ctx, int line) {
    LinVal acc = parse_lin_term(lex, iv, ctx, line);
    while (lex.peek().kind == Token::sym &&
           (lex.peek().text == "+" || lex.peek().text == "-")) {
        const bool add = lex.take().text == "+";
        const LinVal rhs = parse_lin_term(lex, iv, ctx, line);
        acc.constant += add ? rhs.constant : -rhs.constant;
        acc.jets += add ? rhs.jets : -rhs.jets;
    }
    return acc;
}

BoundaryFunctional parse_boundary_line(const std::string& text, int line,
                                       const ExtendedInterval& iv, const EvalContext& base_ctx) {
    Lexer lex(text, line);
    EvalContext ctx = base_ctx;
    ctx.allow_x = false;
    ctx.allow_exp = true;

    const LinVal lhs = parse_lin_expr(lex, iv, ctx, line);
    if (!lex.accept_sym("=")) lex.fail("expected '=' in boundary line");
    const LinVal rhs = parse_lin_expr(lex, iv, ctx, line);
    if (lex.peek().kind != Token::end) lex.fail("trailing input in boundary line");

    BoundaryFunctional row;
    row.row = lhs.jets - rhs.jets;
    row.label = text;
    if (row.row.norm() == 0.0)
        throw ParseError(line, 1, "boundary line does not constrain any jet entry");
    if (std::abs(lhs.constant - rhs.constant) > 0.0)
        throw ParseError(line, 1,
                         "inhomogeneous boundary values are not supported; move all jet entries "
                         "to one side and constants must cancel");
    return row;
}

// ---------------------------------------------------------------------------
// document structure
// ---------------------------------------------------------------------------

struct RawLine {
    int number = 0;
    std::string text;
};

double parse_endpoint(const std::string& text, int line) {
    std::string t = text;
    for (auto& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
    if (t == "-inf") return -std::numeric_limits<double>::infinity();
    Lexer lex(text, line);
    EvalContext ctx;
    ctx.allow_x = false;
    const Polynomial v = parse_expr(lex, ctx);
    if (lex.peek().kind != Token::end || !v.is_constant())
        throw ParseError(line, 1, "malformed interval endpoint '" + text + "'");
    return v.coefficient(0).to_complex().real();
}

}  // namespace

OperatorSpec parse_spec_text(const std::string& text, const SpecParams& overrides) {
    std::map<std::string, std::vector<RawLine>> sections;
    {
        std::istringstream in(text);
        std::string line;
        std::string current;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::string trimmed = line;
            while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
                trimmed.erase(trimmed.begin());
            while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
                trimmed.pop_back();
            if (trimmed.empty()) continue;
            if (trimmed.front() == '[') {
                if (trimmed.back() != ']') throw ParseError(number, 1, "malformed section header");
                current = trimmed.substr(1, trimmed.size() - 2);
                if (current != "expression" && current != "interval" && current != "boundary" &&
                    current != "params")
                    throw ParseError(number, 1, "unknown section [" + current + "]");
                continue;
            }
            if (current.empty())
                throw ParseError(number, 1, "content before the first section header");
            sections[current].push_back({number, trimmed});
        }
    }

    auto key_value = [](const RawLine& rl) -> std::pair<std::string, std::string> {
        const auto eq = rl.text.find('=');
        if (eq == std::string::npos) throw ParseError(rl.number, 1, "expected key = value");
        std::string key = rl.text.substr(0, eq), val = rl.text.substr(eq + 1);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        while (!val.empty() && std::isspace(static_cast<unsigned char>(val.front())))
            val.erase(val.begin());
        return {key, val};
    };

    // params first (they feed everything else)
    SpecParams params;
    std::string label = "operator";
    bool rapid_decay = false;
    std::optional<double> truncation;
    for (const auto& rl : sections["params"]) {
        const auto [key, val] = key_value(rl);
        if (key == "label") {
            label = val;
        } else if (key == "decay") {
            rapid_decay = (val == "rapid" || val == "true" || val == "1");
        } else {
            try {
                params[key] = std::stod(val);
            } catch (...) {
                throw ParseError(rl.number, 1, "parameter '" + key + "' is not a number");
            }
        }
    }
    for (const auto& [k, v] : overrides) params[k] = v;
    if (params.count("truncation")) truncation = params["truncation"];

    EvalContext ctx;
    ctx.params = &params;
    if (params.count("hbar")) ctx.hbar = params["hbar"];
    if (params.count("mass")) ctx.mass = params["mass"];
    if (ctx.hbar <= 0 || ctx.mass <= 0)
        throw ParseError(1, 1, "hbar and mass must be positive");

    // interval
    if (!sections.count("interval")) throw ParseError(1, 1, "missing [interval] section");
    std::optional<double> lower, upper;
    for (const auto& rl : sections["interval"]) {
        const auto [key, val] = key_value(rl);
        if (key == "lower") lower = parse_endpoint(val, rl.number);
        else if (key == "upper") upper = parse_endpoint(val, rl.number);
        else throw ParseError(rl.number, 1, "unknown interval key '" + key + "'");
    }
    if (!lower || !upper) throw ParseError(1, 1, "interval needs both lower and upper");
    if (!(*lower < *upper)) throw ParseError(1, 1, "interval lower bound must be below the upper");
    const ExtendedInterval interval(*lower, *upper);

    // expression
    if (!sections.count("expression")) throw ParseError(1, 1, "missing [expression] section");
    std::optional<int> declared_order;
    std::vector<Polynomial> coeffs(kMaxExpressionOrder + 1);
    int max_k = 0;
    for (const auto& rl : sections["expression"]) {
        const auto [key, val] = key_value(rl);
        if (key == "order") {
            declared_order = std::stoi(val);
            if (*declared_order < 0 || *declared_order > kMaxExpressionOrder)
                throw ParseError(rl.number, 1, "order must lie in 0..4");
            continue;
        }
        if (key.size() >= 2 && key[0] == 'c') {
            const int k = std::stoi(key.substr(1));
            if (k < 0 || k > kMaxExpressionOrder)
                throw ParseError(rl.number, 1, "coefficient index out of range 0..4");
            Lexer lex(val, rl.number);
            coeffs[static_cast<std::size_t>(k)] = parse_expr(lex, ctx);
            if (lex.peek().kind != Token::end)
                throw ParseError(rl.number, lex.peek().col, "trailing input in coefficient");
            max_k = std::max(max_k, k);
            continue;
        }
        throw ParseError(rl.number, 1, "unknown expression key '" + key + "'");
    }
    if (declared_order && *declared_order != max_k) {
        // trailing zero coefficients are fine; a declared order above the
        // highest provided nonzero coefficient is not
        if (*declared_order < max_k ||
            coeffs[static_cast<std::size_t>(*declared_order)].is_zero())
            throw ParseError(1, 1, "declared order disagrees with the provided coefficients");
    }
    coeffs.resize(static_cast<std::size_t>(max_k) + 1);
    if (coeffs.back().is_zero() && max_k > 0)
        throw ParseError(1, 1, "leading coefficient must not vanish identically");
    DifferentialExpression expr(std::move(coeffs), ctx.hbar, ctx.mass);

    // boundary
    BoundarySystem domain;
    for (const auto& rl : sections["boundary"]) {
        BoundaryFunctional row = parse_boundary_line(rl.text, rl.number, interval, ctx);
        // semantic check: rows may only touch jets of finite endpoints
        BoundarySystem single({row});
        if (!single.respects(interval))
            throw ParseError(rl.number, 1,
                             "boundary functional references an infinite endpoint; membership "
                             "at infinity is decided by decay, drop the reference or make the "
                             "endpoint finite");
        domain.add(std::move(row));
    }

    OperatorSpec spec(label, std::move(expr), interval, std::move(domain));
    spec.rapid_decay_domain = rapid_decay;
    spec.truncation = truncation;
    return spec;
}

OperatorSpec parse_spec_file(const std::string& path, const SpecParams& overrides) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), overrides);
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.get_num().get_str();
    if (r.get_den() != 1) os << "/" << r.get_den().get_str();
    return os.str();
}

std::string coefficient_str(const RationalComplex& c) {
    std::ostringstream os;
    const bool has_re = c.re != 0, has_im = c.im != 0;
    if (!has_re && !has_im) return "0";
    if (has_re) os << "(" << rational_str(c.re) << ")";
    if (has_im) {
        if (has_re) os << " + ";
        os << "(" << rational_str(c.im) << ")*i";
    }
    if (has_re && has_im) return "(" + os.str() + ")";
    return os.str();
}

std::string poly_spec_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.coefficients().size(); k-- > 0;) {
        const RationalComplex& c = p.coefficients()[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coefficient_str(c);
        if (k >= 1) os << "*x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::string endpoint_str(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string emit_canonical(const OperatorSpec& spec) {
    std::ostringstream os;
    os.precision(17);
    os << "[expression]\n";
    os << "order = " << spec.expression.order() << "\n";
    for (int k = spec.expression.order(); k >= 0; --k)
        os << "c" << k << " = " << poly_spec_string(spec.expression.coefficient(k)) << "\n";
    os << "\n[interval]\n";
    os << "lower = " << endpoint_str(spec.interval.lower) << "\n";
    os << "upper = " << endpoint_str(spec.interval.upper) << "\n";
    if (!spec.domain.empty()) {
        os << "\n[boundary]\n";
        for (const auto& row : spec.domain.rows()) {
            // elementary rows only: a single jet entry pinned to zero, or two
            // entries linked by a phase
            std::vector<int> support;
            for (int j = 0; j < kJetDim; ++j)
                if (std::abs(row.row(j)) > 1e-13) support.push_back(j);
            auto jet_name = [](int j) {
                std::string s = "f";
                for (int q = 0; q < j % kJetPerEnd; ++q) s += "'";
                s += (j < kJetPerEnd) ? "(a)" : "(b)";
                return s;
            };
            if (support.size() == 1) {
                os << jet_name(support[0]) << " = 0\n";
            } else if (support.size() == 2) {
                const Cplx c0 = row.row(support[0]), c1 = row.row(support[1]);
                const Cplx ratio = -c1 / c0;
                os << jet_name(support[0]) << " = ";
                if (std::abs(ratio - Cplx(1.0, 0.0)) < 1e-15) {
                    os << jet_name(support[1]) << "\n";
                } else {
                    os << "(" << ratio.real() << " + (" << ratio.imag() << ")*i)*"
                       << jet_name(support[1]) << "\n";
                }
            } else {
                throw std::invalid_argument(
                    "emit_canonical: boundary row is not an elementary value or link condition");
            }
        }
    }
    os << "\n[params]\n";
    os << "label = " << spec.label << "\n";
    os << "hbar = " << spec.expression.hbar() << "\n";
    os << "mass = " << spec.expression.mass() << "\n";
    if (spec.truncation) os << "truncation = " << *spec.truncation << "\n";
    if (spec.rapid_decay_domain) os << "decay = rapid\n";
    return os.str();
}

}  // namespace qd
