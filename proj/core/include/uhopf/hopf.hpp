#pragma once

// The quotient M_d^n / Z_m as a set with decidable equality.
//
// A point is any nonzero vector of C^n; two vectors name the same point
// when they differ by an element d^l * e^{2 pi i K/m} of the deck group.

#include <cstdint>

#include "uhopf/cmatrix.hpp"

namespace uhopf {

struct HopfParams {
    Complex d{2.0, 0.0};
    int n = 2;
    int m = 1;

    /// Throws std::invalid_argument unless d is finite, ||d| - 1| > 1e-9,
    /// n >= 2 and m >= 1.
    static HopfParams make(Complex d, int n, int m);
    void validate() const;

    double log_abs_d() const { return std::log(std::abs(d)); }

    friend bool operator==(const HopfParams&, const HopfParams&) = default;
};

class OrbitPoint {
public:
    /// Throws std::invalid_argument on wrong length, non-finite entries or
    /// a (numerically) zero vector.
    OrbitPoint(HopfParams params, CVector rep);

    const HopfParams& params() const noexcept { return params_; }
    const CVector& rep() const noexcept { return rep_; }
    double norm() const { return rep_.stableNorm(); }

private:
    HopfParams params_;
    CVector rep_;
};

/// d^ell for integer ell (branch independent).
Complex d_int_pow(Complex d, std::int64_t ell);

/// d^ell * e^{2 pi i K / m} * v.
CVector deck_transform(const HopfParams& params, std::int64_t ell, std::int64_t K, const CVector& v);

/// min over deck elements g near the modulus-compatible power of
/// ||x - g y|| / ||x||. Throws std::invalid_argument on mismatched params.
double orbit_distance(const OrbitPoint& x, const OrbitPoint& y);

/// True iff some g = d^l e^{2 pi i K/m} gives ||w - g z|| <= tol * ||w||.
bool deck_equal(const OrbitPoint& z, const OrbitPoint& w, double tol);

/// Fundamental-domain representative: modulus exponent ln|z|/ln|d| in
/// [0, 1), then the Z_m rotation that minimises the principal argument of
/// the first largest-modulus coordinate.
OrbitPoint canonicalize(const OrbitPoint& z);

}  // namespace uhopf
