#include "uhopf/effectiveness.hpp"

#include <numbers>
#include <stdexcept>

namespace uhopf {

using numth::Int;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Coefficients {
    Int modulus;     // |r| m
    Int kind_coef;   // eps*m + n(pm+q)
    Int shift_coef;  // pm + q
    Int rhs_unit;    // n r (kind side) ; multiply by K
};

Coefficients coefficients(const EffectivenessParams& ep)
{
    const Int pm_q = numth::checked_add(numth::checked_mul(ep.p, ep.m), ep.q);
    return {
        numth::checked_mul(numth::checked_abs(ep.r), ep.m),
        numth::checked_add(static_cast<Int>(epsilon(ep.kind)) * ep.m, numth::checked_mul(ep.n, pm_q)),
        pm_q,
        numth::checked_mul(ep.n, ep.r),
    };
}

bool kind_holds(const Coefficients& c, Int ell, Int K)
{
    return numth::congruent(numth::checked_mul(ell, c.kind_coef), numth::checked_mul(c.rhs_unit, K), c.modulus);
}

bool nontrivial_holds(const Coefficients& c, Int ell, Int K, Int r)
{
    return !numth::congruent(numth::checked_mul(ell, c.shift_coef), numth::checked_mul(K, r), c.modulus);
}

}  // namespace

void EffectivenessParams::validate() const
{
    if (n < 2) throw std::invalid_argument("effectiveness: n must be >= 2");
    if (m < 1) throw std::invalid_argument("effectiveness: m must be >= 1");
    if (r == 0) throw std::invalid_argument("effectiveness: r must be nonzero");
}

EffectivenessParams EffectivenessParams::from_spec(const ActionSpec& spec)
{
    return {spec.kind(), spec.n(), spec.m(), spec.p(), spec.q(), spec.r()};
}

bool kind_condition(const EffectivenessParams& ep, Int ell, Int K)
{
    ep.validate();
    return kind_holds(coefficients(ep), ell, K);
}

bool nontrivial_condition(const EffectivenessParams& ep, Int ell, Int K)
{
    ep.validate();
    return nontrivial_holds(coefficients(ep), ell, K, ep.r);
}

std::optional<Witness> find_witness(const EffectivenessParams& ep)
{
    ep.validate();
    const Coefficients c = coefficients(ep);
    std::optional<Witness> best;
    for (Int K = 0; K < ep.m; ++K) {
        const auto sol = numth::solve_linear_congruence(c.kind_coef, numth::checked_mul(c.rhs_unit, K), c.modulus);
        if (!sol) continue;
        // Along l = x0 + j*step the nontrivial residue moves by step*(pm+q).
        Int ell = sol->x0;
        if (!nontrivial_holds(c, ell, K, ep.r)) {
            if (numth::congruent(numth::checked_mul(sol->step, c.shift_coef), 0, c.modulus)) continue;
            ell = numth::checked_add(ell, sol->step);
            if (ell >= c.modulus) continue;
        }
        if (!best || ell < best->ell) best = Witness{numth::to_int64(ell), numth::to_int64(K)};
        if (best->ell == 0) break;
    }
    return best;
}

std::optional<Witness> find_witness_in_window(const EffectivenessParams& ep, Int ell_min, Int ell_max)
{
    ep.validate();
    const Coefficients c = coefficients(ep);
    for (Int ell = ell_min; ell <= ell_max; ++ell)
        for (Int K = 0; K < ep.m; ++K)
            if (kind_holds(c, ell, K) && nontrivial_holds(c, ell, K, ep.r))
                return Witness{numth::to_int64(ell), numth::to_int64(K)};
    return std::nullopt;
}

EffectivenessVerdict is_effective(const EffectivenessParams& ep)
{
    EffectivenessVerdict v;
    v.witness = find_witness(ep);
    v.effective = !v.witness.has_value();
    if (v.witness) v.kernel_element = kernel_witness_element(ep, v.witness->ell, v.witness->K);
    return v;
}

EffectivenessVerdict is_effective(const ActionSpec& spec) { return is_effective(EffectivenessParams::from_spec(spec)); }

bool is_effective_corollary(std::int64_t n, std::int64_t p, std::int64_t r, ActionKind kind)
{
    if (r == 0) throw std::invalid_argument("is_effective_corollary: r must be nonzero");
    const Int coef = numth::checked_add(epsilon(kind), numth::checked_mul(p, n));
    const Int abs_r = numth::checked_abs(r);
    for (Int ell = 0; ell < abs_r; ++ell) {
        if (numth::divides(r, numth::checked_mul(ell, coef)) && !numth::divides(r, numth::checked_mul(ell, p)))
            return false;
    }
    return true;
}

KernelElement kernel_witness_element(const EffectivenessParams& ep, std::int64_t ell, std::int64_t K)
{
    ep.validate();
    if (K < 0 || K >= ep.m) throw std::invalid_argument("kernel_witness_element: K must lie in [0, m)");
    const Coefficients c = coefficients(ep);
    if (!kind_holds(c, ell, K))
        throw std::invalid_argument("kernel_witness_element: (ell, K) violates the kind congruence");

    // Type1: k = n L - l sigma / r + n K / m; Type2 enters through conj(B),
    // which flips the sign: k = l sigma / r - n K / m + n L.
    const Int rm = numth::checked_mul(ep.r, ep.m);
    Int k_num = numth::checked_sub(numth::checked_mul(c.rhs_unit, K), numth::checked_mul(ell, c.kind_coef));
    if (ep.kind == ActionKind::Type2) k_num = numth::checked_neg(k_num);
    if (!numth::divides(rm, k_num)) throw std::invalid_argument("kernel_witness_element: k is not integral");

    KernelElement e;
    e.k = numth::to_int64(numth::mod_floor(k_num / rm, ep.n));
    e.t = kTwoPi * static_cast<double>(ell) / (static_cast<double>(ep.n) * static_cast<double>(ep.r));
    e.scalar = std::polar(1.0, e.t + kTwoPi * static_cast<double>(e.k) / static_cast<double>(ep.n));
    return e;
}

KernelElement kernel_witness_element(const ActionSpec& spec, std::int64_t ell, std::int64_t K)
{
    return kernel_witness_element(EffectivenessParams::from_spec(spec), ell, K);
}

}  // namespace uhopf
