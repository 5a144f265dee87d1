#include "uhopf/cmatrix.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace uhopf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPivotRelTol = 1e-13;
constexpr double kUnitaryTol = 1e-10;

void require_square(const CMatrix& m, const char* what)
{
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument(std::string(what) + ": matrix must be square and nonempty");
}

double one_norm(const CMatrix& m)
{
    double best = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) best = std::max(best, m.col(j).cwiseAbs().sum());
    return best;
}

}  // namespace

double principal_arg(Complex z) noexcept
{
    double a = std::arg(z);
    if (a < 0.0) a += kTwoPi;
    // arg slightly below zero can round up to exactly 2*pi.
    if (a >= kTwoPi) a = 0.0;
    return a;
}

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

CMatrix matmul(const CMatrix& a, const CMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    return a * b;
}

CVector matvec(const CMatrix& a, const CVector& v)
{
    if (a.cols() != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
    return a * v;
}

CMatrix inverse(const CMatrix& m)
{
    require_square(m, "inverse");
    const Eigen::Index n = m.rows();
    const double scale = max_abs(m);
    if (!(scale > 0.0) || !std::isfinite(scale)) throw SingularMatrixError("inverse: zero or non-finite matrix");

    CMatrix work = m;
    CMatrix inv = CMatrix::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        for (Eigen::Index row = col + 1; row < n; ++row)
            if (std::abs(work(row, col)) > std::abs(work(pivot, col))) pivot = row;
        if (std::abs(work(pivot, col)) < kPivotRelTol * scale) throw SingularMatrixError("inverse: singular matrix");
        if (pivot != col) {
            work.row(pivot).swap(work.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        const Complex p = work(col, col);
        work.row(col) /= p;
        inv.row(col) /= p;
        for (Eigen::Index row = 0; row < n; ++row) {
            if (row == col) continue;
            const Complex f = work(row, col);
            if (f == Complex(0.0, 0.0)) continue;
            work.row(row) -= f * work.row(col);
            inv.row(row) -= f * inv.row(col);
        }
    }
    return inv;
}

Complex det(const CMatrix& m)
{
    require_square(m, "det");
    const Eigen::Index n = m.rows();
    CMatrix work = m;
    Complex result(1.0, 0.0);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        for (Eigen::Index row = col + 1; row < n; ++row)
            if (std::abs(work(row, col)) > std::abs(work(pivot, col))) pivot = row;
        if (work(pivot, col) == Complex(0.0, 0.0)) return {0.0, 0.0};
        if (pivot != col) {
            work.row(pivot).swap(work.row(col));
            result = -result;
        }
        const Complex p = work(col, col);
        result *= p;
        for (Eigen::Index row = col + 1; row < n; ++row) {
            const Complex f = work(row, col) / p;
            if (f == Complex(0.0, 0.0)) continue;
            work.row(row).tail(n - col) -= f * work.row(col).tail(n - col);
        }
    }
    return result;
}

CMatrix conj(const CMatrix& m) { return m.conjugate(); }

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_residual(const CMatrix& m)
{
    require_square(m, "unitarity_residual");
    return max_abs(m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols()));
}

double condition_estimate(const CMatrix& m)
{
    require_square(m, "condition_estimate");
    try {
        return one_norm(m) * one_norm(inverse(m));
    } catch (const SingularMatrixError&) {
        return std::numeric_limits<double>::infinity();
    }
}

bool all_finite(const CMatrix& m) { return m.allFinite(); }
bool all_finite(const CVector& v) { return v.allFinite(); }

CMatrix random_unitary(int n, CounterRng& rng)
{
    if (n < 1) throw std::invalid_argument("random_unitary: n must be >= 1");
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        if (a > 0.0) q.col(j) *= d / a;
    }
    return q;
}

CMatrix random_unitary(int n, std::uint64_t seed)
{
    CounterRng rng(seed);
    return random_unitary(n, rng);
}

CMatrix random_su(int n, CounterRng& rng)
{
    CMatrix u = random_unitary(n, rng);
    const double phase = std::arg(det(u));
    u *= std::polar(1.0, -phase / n);
    return u;
}

CMatrix random_su(int n, std::uint64_t seed)
{
    CounterRng rng(seed);
    return random_su(n, rng);
}

CMatrix random_well_conditioned(int n, std::uint64_t seed)
{
    CounterRng rng(seed);
    const CMatrix u = random_unitary(n, rng);
    const CMatrix v = random_unitary(n, rng);
    Eigen::VectorXcd s(n);
    for (int i = 0; i < n; ++i) s(i) = n == 1 ? 1.0 : 1.0 + static_cast<double>(i) / (n - 1);
    return u * s.asDiagonal() * v;
}

CMatrix project_to_unitary(const CMatrix& m)
{
    require_square(m, "project_to_unitary");
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues().minCoeff() <= kPivotRelTol * svd.singularValues().maxCoeff())
        throw SingularMatrixError("project_to_unitary: rank-deficient matrix");
    return svd.matrixU() * svd.matrixV().adjoint();
}

CMatrix UnitaryElement::recombine() const { return std::polar(1.0, t) * su_part; }

UnitaryElement su_decompose(const CMatrix& a)
{
    require_square(a, "su_decompose");
    if (!a.allFinite()) throw std::invalid_argument("su_decompose: non-finite entries");
    const double res = unitarity_residual(a);
    if (!(res <= kUnitaryTol)) throw std::invalid_argument("su_decompose: matrix is not unitary");
    const auto n = static_cast<double>(a.rows());
    UnitaryElement out;
    out.matrix = a;
    out.t = principal_arg(det(a)) / n;
    out.su_part = std::polar(1.0, -out.t) * a;
    return out;
}

}  // namespace uhopf
