#pragma once

// The two families of U_n actions on M_d^n / Z_m.
//
//   Type1:  A{[z]} = {[ e^{i sigma t} d^{n r t / 2pi} C B C^{-1} z ]}
//   Type2:  A{[z]} = {[ e^{i sigma t} d^{n r t / 2pi} C conj(B) C^{-1} z ]}
//
// with A = e^{it} B, B in SU_n, sigma = eps + (p + q/m) n, eps = +1 for
// Type1 and -1 for Type2, and d^mu = |d|^mu e^{i mu arg d}, arg in [0, 2pi).
//
// Representatives returned here are raw vectors; compose with
// canonicalize() for a fundamental-domain form.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "uhopf/cmatrix.hpp"
#include "uhopf/hopf.hpp"

namespace uhopf {

enum class ActionKind { Type1, Type2 };

std::string_view to_string(ActionKind kind) noexcept;
/// Accepts "type1" / "type2"; throws std::invalid_argument otherwise.
ActionKind parse_action_kind(std::string_view text);
inline int epsilon(ActionKind kind) noexcept { return kind == ActionKind::Type1 ? 1 : -1; }

/// sigma = numerator / denominator, reduced; denominator divides m.
struct PhaseExponent {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;
};

class ActionSpec {
public:
    /// Throws std::invalid_argument when r == 0, C has the wrong shape or is
    /// ill-conditioned (estimate >= 1e8), or params are invalid. An empty C
    /// means the identity.
    static ActionSpec make(ActionKind kind, std::int64_t p, std::int64_t q, std::int64_t r, HopfParams params,
                           std::optional<CMatrix> C = std::nullopt);

    ActionKind kind() const noexcept { return kind_; }
    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t r() const noexcept { return r_; }
    const HopfParams& params() const noexcept { return params_; }
    int n() const noexcept { return params_.n; }
    int m() const noexcept { return params_.m; }
    const CMatrix& C() const noexcept { return C_; }
    const CMatrix& C_inverse() const noexcept { return C_inv_; }
    bool C_is_identity() const noexcept { return C_is_identity_; }
    const PhaseExponent& sigma() const noexcept { return sigma_; }

    /// Same spec with p replaced.
    ActionSpec with_p(std::int64_t p) const;

private:
    ActionSpec() = default;

    ActionKind kind_ = ActionKind::Type1;
    std::int64_t p_ = 0;
    std::int64_t q_ = 0;
    std::int64_t r_ = 1;
    HopfParams params_;
    CMatrix C_;
    CMatrix C_inv_;
    bool C_is_identity_ = true;
    PhaseExponent sigma_;
};

/// Principal power |d|^mu e^{i mu arg d}, arg in [0, 2pi). Throws
/// std::invalid_argument for d == 0.
Complex d_pow(Complex d, double mu);

/// Signature of a branch of d^mu; lets checks swap in alternative branches.
using PowerFn = std::function<Complex(Complex, double)>;

/// Action formula for an explicit decomposition (t, B), not necessarily
/// the canonical one.
CVector evaluate_action(const ActionSpec& spec, double t, const CMatrix& su_part, const CVector& z,
                        const PowerFn& power = d_pow);

/// Throws std::invalid_argument on dimension mismatch, mismatched params or
/// non-unitary A.
OrbitPoint act(const ActionSpec& spec, const CMatrix& A, const OrbitPoint& z);

/// e^{lambda t} B z with lambda = i + n (ln|d| + i arg d) / (2 pi), the
/// principal solution of e^{2 pi (lambda - i)/n} = d.
Complex example_lambda(const HopfParams& params);
CVector evaluate_example_action(const HopfParams& params, double t, const CMatrix& su_part, const CVector& z);
OrbitPoint example_action(const HopfParams& params, const CMatrix& A, const OrbitPoint& z);

/// Type1 spec (p, q, r, C) = (0, 0, 1, I) reproducing example_action.
/// Throws std::invalid_argument unless params.m == 1.
ActionSpec match_example_to_type1(const HopfParams& params);

/// J with J B J^{-1} = conj(B) for every B in SU_2.
CMatrix su2_conjugator();

/// For n == 2, the Type1 spec whose raw action equals the given Type2
/// spec: (p - 1, q, r, C J). Throws std::invalid_argument unless the input
/// is Type2 with n == 2.
ActionSpec dimtwo_type1_equivalent(const ActionSpec& type2);

/// Unit-determinant unitary B with B x = y; requires ||x|| == ||y|| up to
/// rounding and x.size() >= 2.
CMatrix su_map_between(const CVector& x, const CVector& y);

/// Some A in U_n with act(spec, A, z) deck-equal to w.
CMatrix solve_transport(const ActionSpec& spec, const OrbitPoint& z, const OrbitPoint& w);

}  // namespace uhopf
