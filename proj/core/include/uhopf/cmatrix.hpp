#pragma once

// Small dense complex linear algebra on top of Eigen storage.
//
// Dimensions here are tiny (n <= ~8), so det/inverse use plain
// partial-pivot elimination; Haar sampling uses Householder QR.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>

#include "uhopf/rng.hpp"

namespace uhopf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Principal argument in [0, 2*pi).
double principal_arg(Complex z) noexcept;

CMatrix identity(int n);

/// Throws std::invalid_argument on dimension mismatch.
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CVector matvec(const CMatrix& a, const CVector& v);

/// Partial-pivot elimination. Throws SingularMatrixError if a pivot falls
/// below 1e-13 * max|m_ij|.
CMatrix inverse(const CMatrix& m);

/// Partial-pivot elimination; 0 for singular input.
Complex det(const CMatrix& m);

/// Entrywise complex conjugate (not the adjoint).
CMatrix conj(const CMatrix& m);

double max_abs(const CMatrix& m);

/// max |(M* M - I)_ij|.
double unitarity_residual(const CMatrix& m);

/// 1-norm condition number; +inf when singular.
double condition_estimate(const CMatrix& m);

bool all_finite(const CMatrix& m);
bool all_finite(const CVector& v);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// diagonal of R phase-fixed to be positive.
CMatrix random_unitary(int n, CounterRng& rng);
CMatrix random_unitary(int n, std::uint64_t seed);

/// random_unitary scaled by an n-th root of its inverse determinant.
CMatrix random_su(int n, CounterRng& rng);
CMatrix random_su(int n, std::uint64_t seed);

/// U * diag(1 ... 2) * V with U, V Haar; condition number <= 2.
CMatrix random_well_conditioned(int n, std::uint64_t seed);

/// Nearest unitary (polar factor) of a full-rank matrix.
CMatrix project_to_unitary(const CMatrix& m);

/// A = e^{it} * B with B in SU_n. The branch is fixed by
/// t = principal_arg(det A) / n, so t lies in [0, 2*pi/n).
struct UnitaryElement {
    CMatrix matrix;
    double t = 0.0;
    CMatrix su_part;

    CMatrix recombine() const;
};

/// Throws std::invalid_argument when the input is not square or its
/// unitarity residual exceeds 1e-10.
UnitaryElement su_decompose(const CMatrix& a);

}  // namespace uhopf
