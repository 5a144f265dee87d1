#pragma once

// Exact signed integer arithmetic for the effectiveness decision.
//
// Every value is carried in a 128-bit signed integer and every operation
// that could leave that range throws std::overflow_error instead of
// wrapping. Inputs accepted by the CLI (|p|,|q|,|r|,n,m <= 1e6) keep all
// intermediates far inside the range.

#include <cstdint>
#include <optional>
#include <string>

namespace uhopf::numth {

__extension__ typedef __int128 Int;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int checked_abs(Int a);

/// Nonnegative greatest common divisor; gcd(0, 0) == 0.
Int gcd(Int a, Int b);

/// Floor-style residue in [0, modulus). Throws std::invalid_argument if
/// modulus < 1.
Int mod_floor(Int a, Int modulus);

/// True iff modulus divides (a - b). Throws std::invalid_argument if
/// modulus < 1.
bool congruent(Int a, Int b, Int modulus);

/// True iff divisor divides value; divisor must be nonzero.
bool divides(Int divisor, Int value);

struct ExtGcd {
    Int g;  // nonnegative
    Int x;  // a*x + b*y == g
    Int y;
};

ExtGcd ext_gcd(Int a, Int b);

/// Solution set {x0 + j*step : j in Z} of a*x == b (mod modulus), with
/// 0 <= x0 < step.
struct LinearCongruenceSolution {
    Int x0;
    Int step;
};

/// Empty when gcd(a, modulus) does not divide b. Throws
/// std::invalid_argument if modulus < 1.
std::optional<LinearCongruenceSolution> solve_linear_congruence(Int a, Int b, Int modulus);

/// Narrow to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(Int v);

std::string to_string(Int v);

}  // namespace uhopf::numth
