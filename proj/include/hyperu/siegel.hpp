#pragma once

#include <complex>

#include <Eigen/Dense>

#include "hyperu/symplectic.hpp"

namespace hyperu {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kConditionLimit = 1e12;

/// A point of the Siegel upper half-space: symmetric, with positive-definite
/// imaginary part. The input is symmetrized on construction.
class SiegelPoint {
public:
    explicit SiegelPoint(const ComplexMatrix &omega, double symmetry_tol = kSymmetryTolerance);

    int genus() const { return static_cast<int>(omega_.rows()); }
    const ComplexMatrix &matrix() const { return omega_; }
    RealMatrix imag() const { return omega_.imag(); }
    /// Smallest eigenvalue of Im(omega).
    double lambda_min() const { return lambda_min_; }

private:
    ComplexMatrix omega_;
    double lambda_min_;
};

/// (A Omega + B)(C Omega + D)^{-1}. Throws numerical_degeneracy when the
/// condition number of C Omega + D exceeds kConditionLimit.
SiegelPoint act_on_siegel(const SymplecticMatrix &gamma, const SiegelPoint &omega);

/// Diagonal point i * scale * 1_g.
SiegelPoint scaled_identity_point(int g, double scale = 1.0);

} // namespace hyperu
