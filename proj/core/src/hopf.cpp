#include "uhopf/hopf.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uhopf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitModulusMargin = 1e-9;
constexpr double kZeroNorm = 1e-300;
constexpr double kModulusTieRel = 1e-12;

Complex root_of_unity(std::int64_t K, std::int64_t m)
{
    return std::polar(1.0, kTwoPi * static_cast<double>(K % m) / static_cast<double>(m));
}

std::int64_t nearest_power(const HopfParams& params, double norm_ratio)
{
    const double s = std::log(norm_ratio) / params.log_abs_d();
    return static_cast<std::int64_t>(std::llround(s));
}

}  // namespace

HopfParams HopfParams::make(Complex d, int n, int m)
{
    HopfParams p{d, n, m};
    p.validate();
    return p;
}

void HopfParams::validate() const
{
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) throw std::invalid_argument("HopfParams: d must be finite");
    if (d == Complex(0.0, 0.0)) throw std::invalid_argument("HopfParams: d must be nonzero");
    if (!(std::abs(std::abs(d) - 1.0) > kUnitModulusMargin))
        throw std::invalid_argument("HopfParams: |d| must differ from 1");
    if (n < 2) throw std::invalid_argument("HopfParams: n must be >= 2");
    if (m < 1) throw std::invalid_argument("HopfParams: m must be >= 1");
}

OrbitPoint::OrbitPoint(HopfParams params, CVector rep) : params_(params), rep_(std::move(rep))
{
    params_.validate();
    if (rep_.size() != params_.n) throw std::invalid_argument("OrbitPoint: vector length must equal n");
    if (!rep_.allFinite()) throw std::invalid_argument("OrbitPoint: non-finite entries");
    if (!(rep_.stableNorm() > kZeroNorm)) throw std::invalid_argument("OrbitPoint: zero vector");
}

Complex d_int_pow(Complex d, std::int64_t ell)
{
    const auto e = static_cast<double>(ell);
    return std::polar(std::pow(std::abs(d), e), e * principal_arg(d));
}

CVector deck_transform(const HopfParams& params, std::int64_t ell, std::int64_t K, const CVector& v)
{
    std::int64_t k = K % params.m;
    if (k < 0) k += params.m;
    return (d_int_pow(params.d, ell) * root_of_unity(k, params.m)) * v;
}

double orbit_distance(const OrbitPoint& x, const OrbitPoint& y)
{
    if (!(x.params() == y.params())) throw std::invalid_argument("orbit_distance: mismatched HopfParams");
    const HopfParams& params = x.params();
    const double xn = x.norm();
    const std::int64_t center = nearest_power(params, xn / y.norm());
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t ell = center - 1; ell <= center + 1; ++ell) {
        const CVector scaled = d_int_pow(params.d, ell) * y.rep();
        for (std::int64_t K = 0; K < params.m; ++K) {
            const double dist = (x.rep() - root_of_unity(K, params.m) * scaled).stableNorm() / xn;
            if (dist < best) best = dist;
        }
    }
    return best;
}

bool deck_equal(const OrbitPoint& z, const OrbitPoint& w, double tol)
{
    if (!(z.params() == w.params())) throw std::invalid_argument("deck_equal: mismatched HopfParams");
    return orbit_distance(w, z) <= tol;
}

OrbitPoint canonicalize(const OrbitPoint& z)
{
    const HopfParams& params = z.params();
    const double s = std::log(z.norm()) / params.log_abs_d();
    const auto shift = static_cast<std::int64_t>(std::floor(s));
    CVector v = d_int_pow(params.d, -shift) * z.rep();

    double max_mod = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) max_mod = std::max(max_mod, std::abs(v(i)));
    Eigen::Index lead = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) >= max_mod * (1.0 - kModulusTieRel)) {
            lead = i;
            break;
        }
    }

    std::int64_t best_K = 0;
    double best_arg = std::numeric_limits<double>::infinity();
    for (std::int64_t K = 0; K < params.m; ++K) {
        const double a = principal_arg(root_of_unity(K, params.m) * v(lead));
        if (a < best_arg) {
            best_arg = a;
            best_K = K;
        }
    }
    return OrbitPoint(params, root_of_unity(best_K, params.m) * v);
}

}  // namespace uhopf
