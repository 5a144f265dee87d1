#include "uhopf/action.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "uhopf/numth.hpp"

namespace uhopf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxCondition = 1e8;
constexpr double kIdentityExact = 0.0;

void require_dims(const ActionSpec& spec, const CMatrix& A, const OrbitPoint& z)
{
    if (A.rows() != spec.n() || A.cols() != spec.n()) throw std::invalid_argument("act: matrix dimension must equal n");
    if (!(z.params() == spec.params())) throw std::invalid_argument("act: point belongs to a different quotient");
}

}  // namespace

std::string_view to_string(ActionKind kind) noexcept { return kind == ActionKind::Type1 ? "type1" : "type2"; }

ActionKind parse_action_kind(std::string_view text)
{
    if (text == "type1") return ActionKind::Type1;
    if (text == "type2") return ActionKind::Type2;
    throw std::invalid_argument("unknown action kind '" + std::string(text) + "' (expected type1 or type2)");
}

ActionSpec ActionSpec::make(ActionKind kind, std::int64_t p, std::int64_t q, std::int64_t r, HopfParams params,
                            std::optional<CMatrix> C)
{
    params.validate();
    if (r == 0) throw std::invalid_argument("ActionSpec: r must be nonzero");

    ActionSpec spec;
    spec.kind_ = kind;
    spec.p_ = p;
    spec.q_ = q;
    spec.r_ = r;
    spec.params_ = params;

    const int n = params.n;
    if (C) {
        if (C->rows() != n || C->cols() != n) throw std::invalid_argument("ActionSpec: C must be n x n");
        if (!C->allFinite()) throw std::invalid_argument("ActionSpec: C has non-finite entries");
        if (!(condition_estimate(*C) < kMaxCondition)) throw std::invalid_argument("ActionSpec: C is ill-conditioned");
        spec.C_ = *C;
        spec.C_inv_ = inverse(*C);
        spec.C_is_identity_ = max_abs(*C - identity(n)) == kIdentityExact;
    } else {
        spec.C_ = identity(n);
        spec.C_inv_ = identity(n);
        spec.C_is_identity_ = true;
    }

    using numth::Int;
    // sigma * m = eps*m + n*(p*m + q)
    const Int pm_q = numth::checked_add(numth::checked_mul(p, params.m), q);
    const Int num = numth::checked_add(epsilon(kind) * static_cast<Int>(params.m), numth::checked_mul(n, pm_q));
    const Int g = numth::gcd(num, params.m);
    spec.sigma_ = {numth::to_int64(num / g), numth::to_int64(params.m / g)};
    return spec;
}

ActionSpec ActionSpec::with_p(std::int64_t p) const
{
    return make(kind_, p, q_, r_, params_, C_is_identity_ ? std::nullopt : std::optional<CMatrix>(C_));
}

Complex d_pow(Complex d, double mu)
{
    if (d == Complex(0.0, 0.0)) throw std::invalid_argument("d_pow: d must be nonzero");
    return std::polar(std::pow(std::abs(d), mu), mu * principal_arg(d));
}

CVector evaluate_action(const ActionSpec& spec, double t, const CMatrix& su_part, const CVector& z,
                        const PowerFn& power)
{
    const double n = spec.n();
    const double mu = n * static_cast<double>(spec.r()) * t / kTwoPi;
    const Complex scalar = std::polar(1.0, spec.sigma().value() * t) * power(spec.params().d, mu);
    const CMatrix& b = spec.kind() == ActionKind::Type1 ? su_part : CMatrix(su_part.conjugate());
    if (spec.C_is_identity()) return scalar * (b * z);
    return scalar * (spec.C() * (b * (spec.C_inverse() * z)));
}

OrbitPoint act(const ActionSpec& spec, const CMatrix& A, const OrbitPoint& z)
{
    require_dims(spec, A, z);
    const UnitaryElement u = su_decompose(A);
    return OrbitPoint(spec.params(), evaluate_action(spec, u.t, u.su_part, z.rep()));
}

Complex example_lambda(const HopfParams& params)
{
    const double n = params.n;
    return Complex(0.0, 1.0) + n * Complex(params.log_abs_d(), principal_arg(params.d)) / kTwoPi;
}

CVector evaluate_example_action(const HopfParams& params, double t, const CMatrix& su_part, const CVector& z)
{
    return std::exp(example_lambda(params) * t) * (su_part * z);
}

OrbitPoint example_action(const HopfParams& params, const CMatrix& A, const OrbitPoint& z)
{
    if (A.rows() != params.n || A.cols() != params.n) throw std::invalid_argument("example_action: matrix dimension must equal n");
    if (!(z.params() == params)) throw std::invalid_argument("example_action: point belongs to a different quotient");
    const UnitaryElement u = su_decompose(A);
    return OrbitPoint(params, evaluate_example_action(params, u.t, u.su_part, z.rep()));
}

ActionSpec match_example_to_type1(const HopfParams& params)
{
    if (params.m != 1) throw std::invalid_argument("match_example_to_type1: requires m == 1");
    // e^{lambda t} = e^{it} e^{n t (ln|d| + i arg d)/2pi} = e^{it} d^{n t/2pi}
    return ActionSpec::make(ActionKind::Type1, 0, 0, 1, params);
}

CMatrix su2_conjugator()
{
    CMatrix j(2, 2);
    j << Complex(0, 0), Complex(1, 0), Complex(-1, 0), Complex(0, 0);
    return j;
}

ActionSpec dimtwo_type1_equivalent(const ActionSpec& type2)
{
    if (type2.kind() != ActionKind::Type2 || type2.n() != 2)
        throw std::invalid_argument("dimtwo_type1_equivalent: requires a Type2 spec with n == 2");
    // sigma_2(p) = -1 + 2(p + q/m) = 1 + 2((p - 1) + q/m) = sigma_1(p - 1)
    return ActionSpec::make(ActionKind::Type1, numth::to_int64(numth::checked_sub(type2.p(), 1)), type2.q(), type2.r(),
                            type2.params(), CMatrix(type2.C() * su2_conjugator()));
}

CMatrix su_map_between(const CVector& x, const CVector& y)
{
    const Eigen::Index n = x.size();
    if (y.size() != n || n < 2) throw std::invalid_argument("su_map_between: vectors must share a length >= 2");
    const double xn = x.stableNorm();
    const double yn = y.stableNorm();
    if (!(xn > 0.0) || !(yn > 0.0)) throw std::invalid_argument("su_map_between: zero vector");
    const CVector xu = x / xn;
    const CVector yu = y / yn;

    // Rotate y so that <x, y'> is real and nonnegative; then the Householder
    // reflection along x - y' sends x to y'.
    const Complex overlap = xu.dot(yu);
    const double alpha = std::abs(overlap) > 0.0 ? -std::arg(overlap) : 0.0;
    const CVector y_rot = std::polar(1.0, alpha) * yu;
    const CVector w = xu - y_rot;
    CMatrix u = CMatrix::Identity(n, n);
    const double wn2 = w.squaredNorm();
    if (wn2 > 1e-28) u -= (2.0 / wn2) * (w * w.adjoint());
    u *= std::polar(1.0, -alpha);

    // Fix the determinant with a phase on a direction orthogonal to y.
    Eigen::Index pick = 0;
    for (Eigen::Index i = 1; i < n; ++i)
        if (std::abs(yu(i)) < std::abs(yu(pick))) pick = i;
    CVector f = CVector::Zero(n);
    f(pick) = 1.0;
    f -= yu * yu.dot(f);
    f.normalize();
    const double beta = -std::arg(det(u));
    const CMatrix fix = CMatrix::Identity(n, n) + (std::polar(1.0, beta) - 1.0) * (f * f.adjoint());
    return fix * u;
}

CMatrix solve_transport(const ActionSpec& spec, const OrbitPoint& z, const OrbitPoint& w)
{
    if (!(z.params() == spec.params()) || !(w.params() == spec.params()))
        throw std::invalid_argument("solve_transport: points belong to a different quotient");
    const double n = spec.n();
    const double r = static_cast<double>(spec.r());
    CVector u = spec.C_inverse() * z.rep();
    CVector v = spec.C_inverse() * w.rep();

    // |d|^{n r t / 2pi} = |v| / |u|, deck shift j = 0.
    const double t = kTwoPi * std::log(v.stableNorm() / u.stableNorm()) / (n * r * spec.params().log_abs_d());
    const Complex scalar = std::polar(1.0, spec.sigma().value() * t) * d_pow(spec.params().d, n * r * t / kTwoPi);
    CVector target = v / scalar;
    if (spec.kind() == ActionKind::Type2) {
        u = u.conjugate();
        target = target.conjugate();
    }
    return std::polar(1.0, t) * su_map_between(u, target);
}

}  // namespace uhopf
