#pragma once

// Riemann theta function theta(z, Omega) = sum_n exp(pi i n^T Omega n + 2 pi i n^T z),
// its values at two-torsion points, and the hyperelliptic vanishing check.

#include <complex>
#include <vector>

#include "hyperu/error.hpp"
#include "hyperu/eta.hpp"
#include "hyperu/siegel.hpp"

namespace hyperu {

using Complex = std::complex<double>;
using IntVector = std::vector<long>;

struct ThetaConfig {
    /// Target absolute truncation error.
    double tol = 1e-12;
    /// Cap on the sup-norm radius of the summation box.
    int max_radius = 60;
    /// |theta| < vanish_rel * table scale counts as zero.
    double vanish_rel = 1e-8;

    void validate() const;
};

class TruncationError : public Error {
public:
    TruncationError(Complex previous, Complex last, int radius);

    Complex previous() const { return previous_; }
    Complex last() const { return last_; }
    int radius() const { return radius_; }

private:
    Complex previous_;
    Complex last_;
    int radius_;
};

/// Sum over the box |n|_inf <= radius in lexicographic n-order.
Complex theta_partial_sum(const ComplexVector &z, const SiegelPoint &omega, int radius);

/// Initial radius from the Gaussian tail bound.
int theta_radius_estimate(const ComplexVector &z, const SiegelPoint &omega, const ThetaConfig &cfg);

struct ThetaValue {
    Complex value;
    /// Outer radius of the accepted verification step.
    int radius;
};

/// Evaluates at the estimated radius R and accepts once the shell between R
/// and R+2 contributes at most cfg.tol; otherwise R grows until max_radius.
ThetaValue theta_checked(const ComplexVector &z, const SiegelPoint &omega, const ThetaConfig &cfg = {});
Complex theta(const ComplexVector &z, const SiegelPoint &omega, const ThetaConfig &cfg = {});

/// |theta(z + k2 + Omega k1) - exp(-i pi k1^T Omega k1 - 2 pi i k1^T z) theta(z)|
/// divided by max(1, |theta(z)|, |predicted value|).
double quasi_period_residual(const ComplexVector &z, const SiegelPoint &omega, const IntVector &k1,
                             const IntVector &k2, const ThetaConfig &cfg = {});

/// Omega xi_1 + xi_2: the point with coordinates xi in the lattice basis
/// (columns of Omega, then the standard basis).
ComplexVector two_torsion_point(const SiegelPoint &omega, const Characteristic &xi);

inline constexpr int kMaxTableGenus = 6;
inline constexpr int kMaxCriterionGenus = 4;

struct TwoTorsionTable {
    SiegelPoint omega;
    /// Indexed by Characteristic::code().
    std::vector<Complex> values;
    double scale = 0;
    double vanish_rel = 1e-8;

    const Complex &value(const Characteristic &xi) const { return values.at(xi.code()); }
    bool vanishes(const Characteristic &xi) const { return std::abs(value(xi)) < vanish_rel * scale; }
};

TwoTorsionTable two_torsion_table(const SiegelPoint &omega, const ThetaConfig &cfg = {});

/// Characteristics whose table value vanishes, in code order.
std::vector<Characteristic> vanishing_pattern(const TwoTorsionTable &table);

struct CriterionFailure {
    GBClass cls;
    std::pair<int, int> sizes;
    double magnitude;
};

struct CriterionReport {
    bool holds = false;
    std::vector<CriterionFailure> failures;
    int vanishing = 0;
    int classes = 0;
};

/// Compares theta(eta(S)) == 0 with "#(S o U) != g+1" for every class S.
CriterionReport check_vanishing_criterion(const SiegelPoint &omega, const EtaMap &eta,
                                          const ThetaConfig &cfg = {});
/// Same check against an explicit U-set and a precomputed table.
CriterionReport check_vanishing_criterion(const TwoTorsionTable &table, const EtaMap &eta, const USet &u);

} // namespace hyperu
