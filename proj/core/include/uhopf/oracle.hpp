#pragma once

// Floating-point verification of the action formulas and of the exact
// effectiveness decision. Everything here re-derives its conclusion from
// the action formula itself, never from the congruences.

#include <cstdint>
#include <string>
#include <vector>

#include "uhopf/action.hpp"
#include "uhopf/effectiveness.hpp"

namespace uhopf {

struct CheckResult {
    std::string name;
    std::int64_t trials = 0;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct Tolerances {
    double decomposition = 1e-8;  // anything routed through su_decompose or deck search
    double ill_scaled = 1e-7;     // transport with |w|/|z| = 1e6
    double kernel = 1e-9;         // kernel scan triviality
    double identity = 1e-10;      // algebraic identities on raw vectors
    double power_branch = 1e-12;  // branch-shift identity on raw vectors
};

/// Swappable internals, used to run the suite against deliberately
/// broken pieces.
struct OracleHooks {
    PowerFn power = d_pow;
};

struct VerificationReport {
    ActionSpec spec;
    std::vector<CheckResult> checks;
    std::uint64_t seed = 0;
    Tolerances tol;

    bool pass() const;
};

/// Random point with Gaussian direction and modulus |d|^s, s uniform in
/// [-2, 2].
OrbitPoint random_point(const HopfParams& params, CounterRng& rng);

struct KernelScanEntry {
    std::int64_t ell = 0;
    std::int64_t k = 0;
    double residual = 0.0;
    bool is_identity = false;  // e^{i(2 pi l/(n r) + 2 pi k/n)} == 1 exactly
};

/// Lattice l in [0, |r| m), k in [0, n) of central scalars; returns those
/// whose max orbit distance over z_samples points is below tol. (0, 0) is
/// always reported.
std::vector<KernelScanEntry> numeric_kernel_scan(const ActionSpec& spec, int z_samples, double tol, std::uint64_t seed,
                                                 const OracleHooks& hooks = {});

/// True iff every entry is an identity scalar.
bool scan_only_identity(const std::vector<KernelScanEntry>& scan);

/// max orbit distance of act(e^{i theta} I, z) from z for a kernel element.
double kernel_triviality_residual(const ActionSpec& spec, const KernelElement& element, int z_samples,
                                  std::uint64_t seed, const OracleHooks& hooks = {});

CheckResult verify_group_law(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                             const OracleHooks& hooks = {});
CheckResult verify_well_definedness(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                                    const OracleHooks& hooks = {});
/// Pairs with |w|/|z| log-uniform in [1e-3, 1e3].
CheckResult verify_transitivity(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                                const OracleHooks& hooks = {});
/// Pairs with |w|/|z| = 1e6 and 1e-6.
CheckResult verify_transitivity_ill_scaled(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                                           const OracleHooks& hooks = {});
/// Exact verdict vs numeric scan, plus triviality of the exact witness.
CheckResult verify_kernel_agreement(const ActionSpec& spec, int z_samples, std::uint64_t seed, double tol,
                                    const OracleHooks& hooks = {});
/// Convention probe of the power branch plus the identity
/// alt_L(p - L r) == standard(p) for L in [-2, 2].
CheckResult verify_power_branch(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                                const OracleHooks& hooks = {});
/// n == 2 only: Type2(p, q, r, C) == Type1(p - 1, q, r, C J) as raw vectors.
CheckResult verify_dimtwo(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed, double tol,
                          const OracleHooks& hooks = {});

/// Runs every check above (dimtwo only for n == 2).
VerificationReport verify_all(const ActionSpec& spec, std::int64_t trials, std::uint64_t seed,
                              const Tolerances& tol = {}, const OracleHooks& hooks = {});

}  // namespace uhopf
