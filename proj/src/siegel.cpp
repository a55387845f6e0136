#include "hyperu/siegel.hpp"

#include <cmath>

#include "hyperu/error.hpp"
#include "hyperu/gb_group.hpp"

namespace hyperu {

SiegelPoint::SiegelPoint(const ComplexMatrix &omega, double symmetry_tol)
{
    require(omega.rows() == omega.cols() && omega.rows() > 0, ErrorCode::invalid_argument,
            "Siegel point needs a non-empty square matrix");
    check_genus(static_cast<int>(omega.rows()));
    require(omega.allFinite(), ErrorCode::invalid_argument, "Siegel point has non-finite entries");
    const double scale = std::max(1.0, omega.cwiseAbs().maxCoeff());
    require((omega - omega.transpose()).cwiseAbs().maxCoeff() <= symmetry_tol * scale,
            ErrorCode::invalid_argument, "period matrix is not symmetric");
    omega_ = (omega + omega.transpose()) / 2.0;

    const RealMatrix y = omega_.imag();
    Eigen::LLT<RealMatrix> llt(y);
    require(llt.info() == Eigen::Success, ErrorCode::invalid_argument,
            "imaginary part is not positive definite");
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(y, Eigen::EigenvaluesOnly);
    lambda_min_ = eig.eigenvalues().minCoeff();
    require(lambda_min_ > 0, ErrorCode::invalid_argument, "imaginary part is not positive definite");
}

namespace {

RealMatrix to_real(const IntMatrix &m)
{
    RealMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            r(i, k) = m(i, k).get_d();
    return r;
}

} // namespace

SiegelPoint act_on_siegel(const SymplecticMatrix &gamma, const SiegelPoint &omega)
{
    require_same_genus(gamma.genus(), omega.genus());
    const ComplexMatrix &w = omega.matrix();
    const ComplexMatrix num = to_real(gamma.a()).cast<std::complex<double>>() * w
                              + to_real(gamma.b()).cast<std::complex<double>>();
    const ComplexMatrix den = to_real(gamma.c()).cast<std::complex<double>>() * w
                              + to_real(gamma.d()).cast<std::complex<double>>();

    Eigen::JacobiSVD<ComplexMatrix> svd(den);
    const auto &sv = svd.singularValues();
    const double smin = sv.minCoeff();
    require(smin > 0 && sv.maxCoeff() / smin <= kConditionLimit, ErrorCode::numerical_degeneracy,
            "C*Omega + D is numerically singular");

    // X = num * den^{-1}  <=>  den^T X^T = num^T
    const ComplexMatrix x = den.transpose().partialPivLu().solve(num.transpose()).transpose();
    // Re-validated rather than trusted; drift scales with the conditioning.
    const double tol = std::max(kSymmetryTolerance, 1e-15 * sv.maxCoeff() / smin);
    return SiegelPoint(x, tol);
}

SiegelPoint scaled_identity_point(int g, double scale)
{
    return SiegelPoint(ComplexMatrix::Identity(g, g) * std::complex<double>(0.0, scale));
}

} // namespace hyperu
