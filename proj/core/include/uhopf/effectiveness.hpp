#pragma once

// Exact effectiveness decision.
//
// A kernel element of the action is a scalar e^{i(t + 2 pi k/n)} I with
// t = 2 pi l / (n r). Clearing the denominators r*m, it exists and is
// nontrivial iff for some l in Z, K in [0, m):
//
//   kind part   l * (eps*m + n(pm+q)) == n K r        (mod |r| m)
//   nontrivial  l * (pm+q)           != K r           (mod |r| m)
//
// with eps = +1 (Type1) or -1 (Type2). Both sides are periodic in l with
// period |r| m, so l in [0, |r| m) is a complete search window.

#include <cstdint>
#include <optional>

#include "uhopf/action.hpp"
#include "uhopf/numth.hpp"

namespace uhopf {

/// The integer data that decides effectiveness (d and C play no role).
struct EffectivenessParams {
    ActionKind kind = ActionKind::Type1;
    std::int64_t n = 2;
    std::int64_t m = 1;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 1;

    /// Throws std::invalid_argument unless n >= 2, m >= 1, r != 0.
    void validate() const;
    static EffectivenessParams from_spec(const ActionSpec& spec);

    friend auto operator<=>(const EffectivenessParams&, const EffectivenessParams&) = default;
};

struct Witness {
    std::int64_t ell = 0;
    std::int64_t K = 0;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct KernelElement {
    double t = 0.0;
    std::int64_t k = 0;
    Complex scalar{1.0, 0.0};  // e^{i(t + 2 pi k/n)}

    CMatrix matrix(int n) const { return scalar * identity(n); }
};

struct EffectivenessVerdict {
    bool effective = true;
    std::optional<Witness> witness;
    std::optional<KernelElement> kernel_element;
};

/// The kind-specific congruence: (a) for Type1, (c) for Type2.
bool kind_condition(const EffectivenessParams& ep, numth::Int ell, numth::Int K);
/// Condition (b): the scalar is not the identity.
bool nontrivial_condition(const EffectivenessParams& ep, numth::Int ell, numth::Int K);

/// Lexicographically smallest (l, K) in [0, |r| m) x [0, m) satisfying both
/// conditions, found by solving the kind congruence in l for each K.
std::optional<Witness> find_witness(const EffectivenessParams& ep);

/// Direct enumeration of l in [ell_min, ell_max], K in [0, m); first hit in
/// lexicographic order.
std::optional<Witness> find_witness_in_window(const EffectivenessParams& ep, numth::Int ell_min, numth::Int ell_max);

EffectivenessVerdict is_effective(const EffectivenessParams& ep);
EffectivenessVerdict is_effective(const ActionSpec& spec);

/// m == 1 criterion: no l with r | l(eps + pn) and r does not divide l p.
/// Throws std::invalid_argument for r == 0.
bool is_effective_corollary(std::int64_t n, std::int64_t p, std::int64_t r, ActionKind kind);

/// Scalar kernel element for a witness. Throws std::invalid_argument if
/// (ell, K) violates the kind congruence or K is outside [0, m).
KernelElement kernel_witness_element(const EffectivenessParams& ep, std::int64_t ell, std::int64_t K);
KernelElement kernel_witness_element(const ActionSpec& spec, std::int64_t ell, std::int64_t K);

}  // namespace uhopf
