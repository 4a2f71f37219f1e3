#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qdomain/operator_spec.hpp"

namespace qd {

// Parse failure with the position that produced it.
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                             msg),
          line(l),
          column(c) {}
};

// Named parameters available to boundary lines (alpha, theta, ...) and
// overrides for hbar / mass.
using SpecParams = std::map<std::string, double>;

// Operator spec text format:
//
//   [expression]
//   order = 1
//   c1 = hbar/i          # polynomial strings: integers, x, ^, *, +, -, /,
//   c0 = 0               # scalar symbols hbar, mass, i, pi
//   [interval]
//   lower = 0            # "inf" / "-inf" accepted
//   upper = 1
//   [boundary]           # jet functionals at the endpoints (a = lower, b = upper)
//   f(a) = 0
//   f(0) = exp(i*alpha)*f(1)
//   f''(a) = 0
//   [params]             # optional: label, hbar, mass, alpha, truncation, decay
//   label = momentum_box
//
OperatorSpec parse_spec_text(const std::string& text, const SpecParams& overrides = {});
OperatorSpec parse_spec_file(const std::string& path, const SpecParams& overrides = {});

// Canonical emission; parsing it back yields an equal spec.
std::string emit_canonical(const OperatorSpec& spec);

}  // namespace qd
