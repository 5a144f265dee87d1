#pragma once

// Oracles that stay independent of the library's congruence and
// decomposition routes.

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

#include "desk_grid.hpp"
#include "uhopf/uhopf.hpp"

namespace uhopf::testing {

// Rational-arithmetic oracle for the effectiveness conditions, evaluated in
// their original fractional form (no cleared denominators, no period bound
// assumed beyond the window given).
using Q = boost::rational<std::int64_t>;

inline bool is_integer(const Q& x) { return x.denominator() == 1; }

inline bool oracle_kind_condition(const EffectivenessParams& ep, std::int64_t ell, std::int64_t K)
{
    const Q shift = Q(ep.p) + Q(ep.q, ep.m);
    const Q coef = Q(epsilon(ep.kind)) + shift * Q(ep.n);
    return is_integer(Q(ell, ep.r) * coef - Q(ep.n * K, ep.m));
}

inline bool oracle_nontrivial(const EffectivenessParams& ep, std::int64_t ell, std::int64_t K)
{
    const Q shift = Q(ep.p) + Q(ep.q, ep.m);
    return !is_integer(Q(ell, ep.r) * shift - Q(K, ep.m));
}

struct OracleWitness {
    std::int64_t ell;
    std::int64_t K;
};

inline std::optional<OracleWitness> oracle_witness(const EffectivenessParams& ep, std::int64_t ell_lo,
                                                   std::int64_t ell_hi)
{
    for (std::int64_t ell = ell_lo; ell <= ell_hi; ++ell)
        for (std::int64_t K = 0; K < ep.m; ++K)
            if (oracle_kind_condition(ep, ell, K) && oracle_nontrivial(ep, ell, K)) return OracleWitness{ell, K};
    return std::nullopt;
}

inline std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

inline CVector random_vector(int n, CounterRng& rng)
{
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
    return v;
}

}  // namespace uhopf::testing
