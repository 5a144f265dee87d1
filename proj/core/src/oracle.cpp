#include "uhopf/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uhopf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

OrbitPoint act_with(const ActionSpec& spec, const CMatrix& A, const OrbitPoint& z, const OracleHooks& hooks)
{
    const UnitaryElement u = su_decompose(A);
    return OrbitPoint(spec.params(), evaluate_action(spec, u.t, u.su_part, z.rep(), hooks.power));
}

double relative_gap(const CVector& a, const CVector& b) { return (a - b).norm() / a.norm(); }

CheckResult make_check(std::string name, std::int64_t trials, double max_residual, double tol)
{
    return {std::move(name), trials, max_residual, tol, max_residual < tol};
}

void require_trials(std::int64_t trials)
{
    if (trials < 1) throw std::invalid_argument("oracle: trials must be >= 1");
}

OrbitPoint point_with_norm(const HopfParams& params, CounterRng& rng, double norm)
{
    CVector v(params.n);
    for (int i = 0; i < params.n; ++i) v(i) = rng.complex_gaussian();
    return OrbitPoint(params, (norm / v.norm()) * v);
}

// Independent of principal_arg(): atan2 shifted into [0, 2 pi).
Complex reference_power(Complex d, double mu)
{
    double a = std::atan2(d.imag(), d.real());
    if (a < 0.0) a = std::fmod(a + kTwoPi, kTwoPi);
    return std::exp(mu * Complex(std::log(std::abs(d)), a));
}

}  // namespace

bool VerificationReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

OrbitPoint random_point(const HopfParams& params, CounterRng& rng)
{
    const double s = -2.0 + 4.0 * rng.uniform();
    return point_with_norm(params, rng, std::pow(std::abs(params.d), s));
}

std::vector<KernelScanEntry> numeric_kernel_scan(const ActionSpec& spec, int z_samples, double tol, std::uint64_t seed,
                                                 const OracleHooks& hooks)
{
    if (z_samples < 1) throw std::invalid_argument("numeric_kernel_scan: z_samples must be >= 1");
    const std::int64_t n = spec.n();
    const std::int64_t r = spec.r();
    const std::int64_t abs_r = r < 0 ? -r : r;
    const std::int64_t ell_count = abs_r * spec.m();

    CounterRng rng(seed);
    std::vector<OrbitPoint> samples;
    samples.reserve(static_cast<std::size_t>(z_samples));
    for (int i = 0; i < z_samples; ++i) samples.push_back(random_point(spec.params(), rng));

    std::vector<KernelScanEntry> out;
    const std::int64_t period = n * abs_r;
    for (std::int64_t ell = 0; ell < ell_count; ++ell) {
        for (std::int64_t k = 0; k < n; ++k) {
            const double theta =
                kTwoPi * (static_cast<double>(ell) / static_cast<double>(n * r) + static_cast<double>(k) / n);
            const CMatrix A = std::polar(1.0, theta) * identity(static_cast<int>(n));
            double worst = 0.0;
            for (const OrbitPoint& z : samples) {
                worst = std::max(worst, orbit_distance(act_with(spec, A, z, hooks), z));
                if (!(worst < tol) && !(ell == 0 && k == 0)) break;
            }
            std::int64_t phase = (ell + k * r) % period;
            if (phase < 0) phase += period;
            if (worst < tol || (ell == 0 && k == 0)) out.push_back({ell, k, worst, phase == 0});
        }
    }
    return out;
}

bool scan_only_identity(const std::vector<KernelScanEntry>& scan)
{
    return std::all_of(scan.begin(), scan.end(), [](const KernelScanEntry& e) { return e.is_identity; });
}

double kernel_triviality_residual(const ActionSpec& spec, const KernelElement& element, int z_samples,
                                  std::uint64_t seed, const OracleHooks& hooks)
{
    CounterRng rng(seed);
    const CMatrix A = element.matrix(spec.n());
    double worst = 0.0;
    for (int i = 0; i < z_samples; ++i) {
        const OrbitPoint z = random_point(spec.params(), rng);
        worst = std::max(worst, orbit_distance(act_with(spec, A, z, hooks), z));
    }
    return worst;
}

CheckResult verify_group_law(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                             const OracleHooks& hooks)
{
    require_trials(trials);
    double worst = 0.0;
    for (std::int64_t i = 0; i < trials; ++i) {
        CounterRng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const CMatrix a1 = random_unitary(spec.n(), rng);
        const CMatrix a2 = random_unitary(spec.n(), rng);
        const OrbitPoint z = random_point(spec.params(), rng);
        const OrbitPoint lhs = act_with(spec, a1 * a2, z, hooks);
        const OrbitPoint rhs = act_with(spec, a1, act_with(spec, a2, z, hooks), hooks);
        worst = std::max(worst, orbit_distance(lhs, rhs));
    }
    return make_check("group_law", trials, worst, tol);
}

CheckResult verify_well_definedness(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                                    const OracleHooks& hooks)
{
    require_trials(trials);
    const int n = spec.n();
    double worst = 0.0;
    for (std::int64_t i = 0; i < trials; ++i) {
        CounterRng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const UnitaryElement u = su_decompose(random_unitary(n, rng));
        const OrbitPoint z = random_point(spec.params(), rng);
        const OrbitPoint base(spec.params(), evaluate_action(spec, u.t, u.su_part, z.rep(), hooks.power));
        for (int k = 0; k < n; ++k) {
            for (int ell = -2; ell <= 2; ++ell) {
                // A = e^{i(t + 2 pi k/n + 2 pi l)} (e^{-2 pi i k/n} B)
                const double t = u.t + kTwoPi * k / n + kTwoPi * ell;
                const CMatrix b = std::polar(1.0, -kTwoPi * k / n) * u.su_part;
                const OrbitPoint shifted(spec.params(), evaluate_action(spec, t, b, z.rep(), hooks.power));
                worst = std::max(worst, orbit_distance(base, shifted));
            }
        }
    }
    return make_check("well_definedness", trials, worst, tol);
}

namespace {

CheckResult transport_check(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                            const OracleHooks& hooks, bool ill_scaled)
{
    require_trials(trials);
    double worst = 0.0;
    for (std::int64_t i = 0; i < trials; ++i) {
        CounterRng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const OrbitPoint z = random_point(spec.params(), rng);
        double ratio;
        if (ill_scaled)
            ratio = (i % 2 == 0) ? 1e6 : 1e-6;
        else
            ratio = std::pow(10.0, -3.0 + 6.0 * rng.uniform());
        const OrbitPoint w = point_with_norm(spec.params(), rng, ratio * z.norm());
        const CMatrix A = solve_transport(spec, z, w);
        worst = std::max(worst, orbit_distance(act_with(spec, A, z, hooks), w));
    }
    return make_check(ill_scaled ? "transitivity_ill_scaled" : "transitivity", trials, worst, tol);
}

}  // namespace

CheckResult verify_transitivity(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                                const OracleHooks& hooks)
{
    return transport_check(spec, trials, seed, tol, hooks, false);
}

CheckResult verify_transitivity_ill_scaled(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                                           const OracleHooks& hooks)
{
    return transport_check(spec, trials, seed, tol, hooks, true);
}

CheckResult verify_kernel_agreement(const ActionSpec& spec, int z_samples, std::uint64_t seed, double tol,
                                    const OracleHooks& hooks)
{
    const EffectivenessVerdict verdict = is_effective(spec);
    const auto scan = numeric_kernel_scan(spec, z_samples, tol, seed, hooks);
    bool agree = scan_only_identity(scan) == verdict.effective;
    double residual = 0.0;
    if (verdict.effective) {
        for (const auto& e : scan) residual = std::max(residual, e.residual);
    } else {
        const KernelElement& el = *verdict.kernel_element;
        const bool listed = std::any_of(scan.begin(), scan.end(), [&](const KernelScanEntry& e) {
            return e.ell == verdict.witness->ell && e.k == el.k;
        });
        residual = kernel_triviality_residual(spec, el, z_samples, derive_seed(seed, 1), hooks);
        agree = agree && listed;
    }
    CheckResult c = make_check("kernel_agreement", static_cast<std::int64_t>(spec.m()) * spec.n() *
                                                       (spec.r() < 0 ? -spec.r() : spec.r()),
                               residual, tol);
    c.pass = c.pass && agree;
    return c;
}

CheckResult verify_power_branch(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                                const OracleHooks& hooks)
{
    require_trials(trials);
    double worst = 0.0;

    // Convention probe: the power in use must be the [0, 2 pi) branch, on
    // the spec's d and on bases from every quadrant.
    const std::array<Complex, 5> bases{spec.params().d, Complex(3.0, 1.0), Complex(-0.5, 0.25), Complex(-2.0, -1.0),
                                       Complex(0.25, -3.0)};
    CounterRng probe_rng(derive_seed(seed, 0xfeed));
    for (const Complex base : bases) {
        for (int j = 0; j < 8; ++j) {
            const double mu = -3.0 + 6.0 * probe_rng.uniform();
            const Complex ref = reference_power(base, mu);
            worst = std::max(worst, std::abs(hooks.power(base, mu) - ref) / std::abs(ref));
        }
    }

    for (std::int64_t i = 0; i < trials; ++i) {
        CounterRng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const UnitaryElement u = su_decompose(random_unitary(spec.n(), rng));
        const OrbitPoint z = random_point(spec.params(), rng);
        const CVector standard = evaluate_action(spec, u.t, u.su_part, z.rep(), hooks.power);
        for (int L = -2; L <= 2; ++L) {
            const PowerFn alt = [&hooks, L](Complex d, double mu) {
                return hooks.power(d, mu) * std::polar(1.0, kTwoPi * mu * L);
            };
            const ActionSpec shifted = spec.with_p(spec.p() - static_cast<std::int64_t>(L) * spec.r());
            worst = std::max(worst, relative_gap(standard, evaluate_action(shifted, u.t, u.su_part, z.rep(), alt)));
        }
    }
    return make_check("power_branch", trials, worst, tol);
}

CheckResult verify_dimtwo(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                          const OracleHooks& hooks)
{
    require_trials(trials);
    if (spec.n() != 2) throw std::invalid_argument("verify_dimtwo: requires n == 2");
    // Pair each spec with its partner of the other kind.
    const ActionSpec type2 = spec.kind() == ActionKind::Type2
                                 ? spec
                                 : ActionSpec::make(ActionKind::Type2, spec.p() + 1, spec.q(), spec.r(), spec.params(),
                                                    CMatrix(spec.C() * inverse(su2_conjugator())));
    const ActionSpec type1 = dimtwo_type1_equivalent(type2);
    double worst = 0.0;
    for (std::int64_t i = 0; i < trials; ++i) {
        CounterRng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const UnitaryElement u = su_decompose(random_unitary(2, rng));
        const OrbitPoint z = random_point(spec.params(), rng);
        const CVector a = evaluate_action(type2, u.t, u.su_part, z.rep(), hooks.power);
        const CVector b = evaluate_action(type1, u.t, u.su_part, z.rep(), hooks.power);
        worst = std::max(worst, relative_gap(a, b));
    }
    return make_check("dimtwo", trials, worst, tol);
}

VerificationReport verify_all(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, const Tolerances& tol,
                              const OracleHooks& hooks)
{
    VerificationReport report{spec, {}, seed, tol};
    report.checks.push_back(verify_group_law(spec, trials, derive_seed(seed, 1), tol.decomposition, hooks));
    report.checks.push_back(verify_well_definedness(spec, trials, derive_seed(seed, 2), tol.decomposition, hooks));
    report.checks.push_back(verify_transitivity(spec, trials, derive_seed(seed, 3), tol.decomposition, hooks));
    report.checks.push_back(verify_transitivity_ill_scaled(spec, std::max<std::int64_t>(2, trials / 10),
                                                           derive_seed(seed, 4), tol.ill_scaled, hooks));
    report.checks.push_back(verify_kernel_agreement(spec, 10, derive_seed(seed, 5), tol.kernel, hooks));
    report.checks.push_back(
        verify_power_branch(spec, std::max<std::int64_t>(1, trials / 10), derive_seed(seed, 6), tol.power_branch, hooks));
    if (spec.n() == 2)
        report.checks.push_back(verify_dimtwo(spec, trials, derive_seed(seed, 7), tol.identity, hooks));
    return report;
}

}  // namespace uhopf
