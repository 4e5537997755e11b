#pragma once

// Text forms accepted on the command line.
//
//   generator := name [":" key "=" value {"," key "=" value}] ["@" dim]
//   name      := example1 | example2 | example3 | example4 | example5 | zero | scaled
//   key       := chi (example1) | c (scaled)
//   dim       := "m=" k   (Hilbert factor: total dimension 1 + k; example2/3)
//              | "n=" k   (total dimension)
//
// e.g. `example1:chi=2`, `example2@m=3`, `zero@n=2`, `scaled:c=0.5@n=3`.

#include "hball/generators.hpp"
#include "hball/suites.hpp"

#include <string>
#include <string_view>

namespace hball {

/// Throws UsageError on unknown names, keys, or malformed values.
BuiltinSpec parse_generator_spec(std::string_view text);

/// Canonical text form; parse_generator_spec(generator_spec_text(s)) == s.
std::string generator_spec_text(const BuiltinSpec& spec);

/// Boundary point of the given dimension: a vector literal, `eK`, or a bare
/// complex number for dim 1. Throws UsageError.
BoundaryPoint parse_boundary_point(std::string_view text, std::size_t dim);

/// Ball point of the given dimension. Throws UsageError.
BallPoint parse_ball_point(std::string_view text, std::size_t dim);

}  // namespace hball
