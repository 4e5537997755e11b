#pragma once

#include "hball/cvec.hpp"

#include <string>
#include <string_view>

namespace hball {

/// Shortest decimal text that parses back to the same double.
std::string format_real(double v);

/// `a+bi` / `a-bi` with shortest round-trip components.
std::string format_complex(Complex z);

/// `(z1, z2, ...)`.
std::string format_vector(const CVec& v);

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, with decimal or exponent
/// literals. Throws std::invalid_argument on malformed text.
Complex parse_complex(std::string_view text);

/// Parses a parenthesized comma list of complex literals, or a bare complex
/// literal (a 1-vector). `eK` (1-based) denotes the K-th basis vector of
/// dimension `dim_hint`.
CVec parse_vector(std::string_view text, std::size_t dim_hint = 0);

}  // namespace hball
