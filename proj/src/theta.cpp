#include "hyperu/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyperu {

void ThetaConfig::validate() const
{
    require(tol > 0, ErrorCode::invalid_argument, "tol must be positive");
    require(max_radius >= 1, ErrorCode::invalid_argument, "max_radius must be at least 1");
    require(vanish_rel > 0 && vanish_rel < 1, ErrorCode::invalid_argument, "vanish_rel must lie in (0, 1)");
}

TruncationError::TruncationError(Complex previous, Complex last, int radius)
    : Error(ErrorCode::truncation_failure,
            "theta series not converged at radius cap " + std::to_string(radius)),
      previous_(previous), last_(last), radius_(radius)
{
}

namespace {

constexpr double kPi = std::numbers::pi;

struct BoxSums {
    Complex inner{0.0, 0.0};
    Complex shell{0.0, 0.0};
};

// Sums over |n|_inf <= outer, splitting off the terms with |n|_inf <= inner.
BoxSums box_sums(const ComplexVector &z, const ComplexMatrix &w, int inner, int outer)
{
    const auto g = static_cast<int>(z.size());
    std::vector<int> n(g, -outer);
    BoxSums sums;
    const Complex i_pi(0.0, kPi);
    while (true) {
        Complex quad(0.0, 0.0), lin(0.0, 0.0);
        int sup = 0;
        for (int r = 0; r < g; ++r) {
            sup = std::max(sup, std::abs(n[r]));
            Complex row(0.0, 0.0);
            for (int c = 0; c < g; ++c)
                row += w(r, c) * double(n[c]);
            quad += double(n[r]) * row;
            lin += double(n[r]) * z(r);
        }
        const Complex term = std::exp(i_pi * (quad + 2.0 * lin));
        (sup <= inner ? sums.inner : sums.shell) += term;

        int k = g - 1;
        while (k >= 0 && n[k] == outer)
            n[k--] = -outer;
        if (k < 0)
            break;
        ++n[k];
    }
    return sums;
}

void check_vector(const ComplexVector &z, const SiegelPoint &omega)
{
    require(z.size() == omega.genus(), ErrorCode::genus_mismatch, "z has the wrong dimension");
    require(z.allFinite(), ErrorCode::invalid_argument, "z has non-finite entries");
}

} // namespace

Complex theta_partial_sum(const ComplexVector &z, const SiegelPoint &omega, int radius)
{
    check_vector(z, omega);
    require(radius >= 0, ErrorCode::invalid_argument, "radius must be non-negative");
    return box_sums(z, omega.matrix(), radius, radius).inner;
}

int theta_radius_estimate(const ComplexVector &z, const SiegelPoint &omega, const ThetaConfig &cfg)
{
    check_vector(z, omega);
    cfg.validate();
    const RealMatrix y = omega.imag();
    const Eigen::VectorXd centre = y.llt().solve(z.imag());
    const double g = omega.genus();
    const double tail = std::sqrt((std::log(1.0 / cfg.tol) + g * std::log(3.0)) / (kPi * omega.lambda_min()));
    const double r = std::ceil(centre.cwiseAbs().maxCoeff() + tail) + 2.0;
    return r > 1e6 ? 1000000 : static_cast<int>(r);
}

ThetaValue theta_checked(const ComplexVector &z, const SiegelPoint &omega, const ThetaConfig &cfg)
{
    int inner = std::max(0, std::min(theta_radius_estimate(z, omega, cfg), cfg.max_radius - 2));
    while (true) {
        const int outer = std::min(inner + 2, cfg.max_radius);
        const BoxSums s = box_sums(z, omega.matrix(), inner, outer);
        const Complex total = s.inner + s.shell;
        if (std::abs(s.shell) <= cfg.tol)
            return {total, outer};
        if (outer >= cfg.max_radius)
            throw TruncationError(s.inner, total, outer);
        inner = outer;
    }
}

Complex theta(const ComplexVector &z, const SiegelPoint &omega, const ThetaConfig &cfg)
{
    return theta_checked(z, omega, cfg).value;
}

double quasi_period_residual(const ComplexVector &z, const SiegelPoint &omega, const IntVector &k1,
                             const IntVector &k2, const ThetaConfig &cfg)
{
    const auto g = omega.genus();
    require(static_cast<int>(k1.size()) == g && static_cast<int>(k2.size()) == g, ErrorCode::genus_mismatch,
            "lattice vectors have the wrong dimension");
    Eigen::VectorXd a(g), b(g);
    for (int i = 0; i < g; ++i) {
        a(i) = double(k1[i]);
        b(i) = double(k2[i]);
    }
    const ComplexMatrix &w = omega.matrix();
    const ComplexVector shifted = z + b.cast<Complex>() + w * a.cast<Complex>();
    const Complex ka = a.cast<Complex>().dot(w * a.cast<Complex>());
    const Complex kz = a.cast<Complex>().dot(z);
    const Complex factor = std::exp(Complex(0.0, -kPi) * ka + Complex(0.0, -2.0 * kPi) * kz);

    const Complex base = theta(z, omega, cfg);
    const Complex lhs = theta(shifted, omega, cfg);
    const Complex predicted = factor * base;
    const double scale = std::max({1.0, std::abs(base), std::abs(predicted)});
    return std::abs(lhs - predicted) / scale;
}

ComplexVector two_torsion_point(const SiegelPoint &omega, const Characteristic &xi)
{
    require_same_genus(omega.genus(), xi.genus());
    const int g = omega.genus();
    ComplexVector x1(g), x2(g);
    for (int i = 0; i < g; ++i) {
        x1(i) = xi.top_bit(i) ? 0.5 : 0.0;
        x2(i) = xi.bottom_bit(i) ? 0.5 : 0.0;
    }
    return omega.matrix() * x1 + x2;
}

TwoTorsionTable two_torsion_table(const SiegelPoint &omega, const ThetaConfig &cfg)
{
    check_genus(omega.genus(), kMaxTableGenus);
    cfg.validate();
    TwoTorsionTable table{omega, {}, 0.0, cfg.vanish_rel};
    for (const auto &xi : enumerate_characteristics(omega.genus())) {
        table.values.push_back(theta(two_torsion_point(omega, xi), omega, cfg));
        table.scale = std::max(table.scale, std::abs(table.values.back()));
    }
    require(table.scale > 0, ErrorCode::numerical_degeneracy, "theta vanishes at every two-torsion point");
    return table;
}

std::vector<Characteristic> vanishing_pattern(const TwoTorsionTable &table)
{
    std::vector<Characteristic> out;
    for (const auto &xi : enumerate_characteristics(table.omega.genus()))
        if (table.vanishes(xi))
            out.push_back(xi);
    return out;
}

CriterionReport check_vanishing_criterion(const TwoTorsionTable &table, const EtaMap &eta, const USet &u)
{
    const int g = eta.genus();
    require_same_genus(g, table.omega.genus());
    require_same_genus(g, u.genus());
    CriterionReport report;
    for (const auto &cls : enumerate_gb(g)) {
        const Characteristic xi = eta_of_class(eta, cls);
        const int k = symmetric_difference_size(cls.rep(), u);
        const std::pair<int, int> sizes{k, 2 * g + 2 - k};
        const bool predicted = sizes.first != g + 1 && sizes.second != g + 1;
        const bool observed = table.vanishes(xi);
        ++report.classes;
        if (observed)
            ++report.vanishing;
        if (predicted != observed)
            report.failures.push_back({cls, sizes, std::abs(table.value(xi))});
    }
    report.holds = report.failures.empty();
    return report;
}

CriterionReport check_vanishing_criterion(const SiegelPoint &omega, const EtaMap &eta, const ThetaConfig &cfg)
{
    check_genus(eta.genus(), kMaxCriterionGenus);
    require_same_genus(omega.genus(), eta.genus());
    const USet u = u_set(eta);
    return check_vanishing_criterion(two_torsion_table(omega, cfg), eta, u);
}

} // namespace hyperu
