#include "uhopf/numth.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace uhopf::numth {

Int checked_add(Int a, Int b)
{
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("numth: addition overflow");
    return out;
}

Int checked_sub(Int a, Int b)
{
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("numth: subtraction overflow");
    return out;
}

Int checked_mul(Int a, Int b)
{
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("numth: multiplication overflow");
    return out;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

Int gcd(Int a, Int b)
{
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int mod_floor(Int a, Int modulus)
{
    if (modulus < 1) throw std::invalid_argument("numth: modulus must be >= 1");
    Int r = a % modulus;
    return r < 0 ? r + modulus : r;
}

bool congruent(Int a, Int b, Int modulus)
{
    if (modulus < 1) throw std::invalid_argument("numth: modulus must be >= 1");
    // Reduce first so a - b cannot overflow.
    return mod_floor(a, modulus) == mod_floor(b, modulus);
}

bool divides(Int divisor, Int value)
{
    if (divisor == 0) throw std::invalid_argument("numth: zero divisor");
    return value % divisor == 0;
}

ExtGcd ext_gcd(Int a, Int b)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
    return {old_r, old_s, old_t};
}

std::optional<LinearCongruenceSolution> solve_linear_congruence(Int a, Int b, Int modulus)
{
    if (modulus < 1) throw std::invalid_argument("numth: modulus must be >= 1");
    a = mod_floor(a, modulus);
    b = mod_floor(b, modulus);
    const ExtGcd e = ext_gcd(a, modulus);
    // a == 0 reduces to b == 0 (mod modulus); ext_gcd gives g == modulus.
    if (b % e.g != 0) return std::nullopt;
    const Int step = modulus / e.g;
    // x0 = (b/g) * x mod step; reduce factors first to stay in range.
    const Int x = mod_floor(e.x, step);
    const Int x0 = mod_floor(checked_mul(mod_floor(b / e.g, step), x), step);
    return LinearCongruenceSolution{x0, step};
}

std::int64_t to_int64(Int v)
{
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("numth: value does not fit in int64");
    return static_cast<std::int64_t>(v);
}

std::string to_string(Int v)
{
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string digits;
    // Work on the negative side so the most negative value is representable.
    Int u = neg ? v : -v;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace uhopf::numth
