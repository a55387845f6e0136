// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "hyperu/counting.hpp"
#include "hyperu/eta.hpp"
#include "hyperu/theta.hpp"
#include "sampling.hpp"

using namespace hyperu;
using namespace hyperu::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void expect(bool cond, const std::string &what)
    {
        if (!cond && pass) {
            pass = false;
            note.str("");
            note << "first failure: " << what;
        }
    }
};

mpz_class pow2(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

bool preserves_all_parities(const SymplecticMatrix &gamma)
{
    for (const auto &x : enumerate_characteristics(gamma.genus()))
        if (parity(act_on_characteristic(gamma, x)) != parity(x))
            return false;
    return true;
}

bool well_formed(const USet &u)
{
    return u.contains(Label::infinity()) && u.size() % 4 == (u.genus() + 1) % 4;
}

ComplexVector vec(std::initializer_list<Complex> xs)
{
    ComplexVector v(xs.size());
    int i = 0;
    for (auto x : xs)
        v(i++) = x;
    return v;
}

void counting_identity(Outcome &o)
{
    o.expect(s_count({3, 1, 4}) == 3, "S(3,1,4) = 3");
    for (int g = 1; g <= 32; ++g) {
        const mpz_class closed = pow2(g - 1) * (pow2(g) + 1);
        o.expect(s_count({2L * g + 1, g, 4}) == closed, "s_count at g=" + std::to_string(g));
        o.expect(u_count_closed(g) == closed, "u_count_closed at g=" + std::to_string(g));
    }
    if (o.pass)
        o.note << "g = 1..32 exact";
}

void group_order_identity(Outcome &o)
{
    for (int g = 1; g <= 16; ++g)
        o.expect(order_formulas(g).quotient == u_count_closed(g), "quotient at g=" + std::to_string(g));
    const auto e1 = enumerate_parity_group(1);
    const auto e2 = enumerate_parity_group(2);
    o.expect(e1.group_order == 6 && e1.parity_preserving_order == 2, "exhaustive g=1 is (6,2)");
    o.expect(e2.group_order == 720 && e2.parity_preserving_order == 72, "exhaustive g=2 is (720,72)");
    for (int g = 1; g <= 2; ++g) {
        const auto e = g == 1 ? e1 : e2;
        const auto f = order_formulas(g);
        o.expect(e.group_order == f.sp_f2 && e.parity_preserving_order == f.o_plus,
                 "enumeration matches formulas at g=" + std::to_string(g));
    }
    if (o.pass)
        o.note << "g = 1..16; exhaustive (" << e1.group_order.get_str() << "," << e1.parity_preserving_order.get_str()
               << ") and (" << e2.group_order.get_str() << "," << e2.parity_preserving_order.get_str() << ")";
}

void orbit_matches_admissible(Outcome &o)
{
    const std::size_t expected[] = {0, 3, 10, 36};
    for (int g = 1; g <= 3; ++g) {
        const auto orbit = u_orbit(g).sets;
        const auto admissible = enumerate_admissible_u(g);
        const std::set<USet> a(orbit.begin(), orbit.end()), b(admissible.begin(), admissible.end());
        o.expect(a.size() == orbit.size(), "orbit has no duplicates at g=" + std::to_string(g));
        o.expect(a == b, "orbit equals admissible sets at g=" + std::to_string(g));
        o.expect(a.size() == expected[g], "orbit size at g=" + std::to_string(g));
        o.note << (g > 1 ? ", " : "") << "g=" << g << ": " << a.size();
    }
}

void gamma12_equivalence(Outcome &o)
{
    for (int g = 1; g <= 2; ++g) {
        std::size_t n = 0;
        for (const auto &[m, lift] : integer_lifts(g)) {
            const bool p = preserves_all_parities(lift);
            o.expect(is_gamma12(lift) == p && is_gamma12_mod2(m) == p,
                     "diagonal test vs parity preservation at g=" + std::to_string(g));
            ++n;
        }
        o.note << "g=" << g << ": " << n << " elements, ";
    }
    Rng rng(20240601);
    int in_group = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto gamma = random_word(3, rng);
        const bool p = preserves_all_parities(gamma);
        o.expect(is_gamma12(gamma) == p, "random word at g=3");
        in_group += p;
    }
    if (o.pass)
        o.note << "g=3: 1000 words (" << in_group << " in the subgroup)";
}

void u_invariance(Outcome &o)
{
    Rng rng(20240602);
    for (int g = 1; g <= 3; ++g) {
        const auto eta = base_eta(g);
        const auto u = u_set(eta);
        for (int i = 0; i < 200; ++i) {
            const auto gamma = random_gamma12_word(g, rng);
            o.expect(is_gamma12(gamma), "sampled word lies in the subgroup");
            o.expect(u_set(transform_eta(gamma, eta)) == u, "invariance at g=" + std::to_string(g));
        }
    }
    const SymplecticMatrix t(IntMatrix::from_rows({{1, 1}, {0, 1}}));
    o.expect(!is_gamma12(t), "T is outside the subgroup");
    o.expect(u_set(transform_eta(t, base_eta(1))) != u_set(base_eta(1)), "T changes the U-set");
    if (o.pass)
        o.note << "200 words per genus g = 1..3; T moves " << to_string(u_set(base_eta(1))) << " to "
               << to_string(u_set(transform_eta(t, base_eta(1))));
}

void cardinality_congruence(Outcome &o)
{
    Rng rng(20240603);
    std::size_t checked = 0;
    for (int g = 1; g <= 4; ++g) {
        const auto eta = base_eta(g);
        o.expect(well_formed(u_set(eta)), "base U at g=" + std::to_string(g));
        const auto orbit = u_orbit(g);
        for (const auto &u : orbit.sets) {
            o.expect(well_formed(u), "orbit U at g=" + std::to_string(g));
            ++checked;
        }
        o.expect(mpz_class(static_cast<unsigned long>(orbit.sets.size())) == order_formulas(g).quotient,
                 "orbit size at g=" + std::to_string(g));
        for (int i = 0; i < 50; ++i) {
            o.expect(well_formed(u_set(transform_eta(random_word(g, rng), eta))),
                     "transformed U at g=" + std::to_string(g));
            o.expect(well_formed(u_set(transform_eta(random_sp_f2(g, rng), eta))),
                     "transformed U at g=" + std::to_string(g));
            checked += 2;
        }
    }
    // The USet constructor enforces the same congruence at runtime.
    bool rejected = false;
    try {
        USet(2, infinity_bit(2) | 1);
    } catch (const Error &) {
        rejected = true;
    }
    o.expect(rejected, "malformed U-set is rejected at construction");
    if (o.pass)
        o.note << checked << " U-sets, full orbits for g = 1..4";
}

void theta_analytics(Outcome &o)
{
    Rng rng(20240604);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const int g = 1 + k % 3;
        const auto omega = random_omega(g, rng);
        const auto z = random_z(g, rng);
        const double r =
            quasi_period_residual(z, omega, random_lattice_vector(g, rng), random_lattice_vector(g, rng));
        worst = std::max(worst, r);
    }
    o.expect(worst <= 1e-9, "quasi-periodicity residual");
    const auto i = tau_point(Complex(0, 1));
    const Complex t0 = theta(vec({0}), i);
    const Complex t1 = theta(vec({Complex(0.5, 0.5)}), i);
    o.expect(std::abs(t0 - 1.086434811213308) <= 1e-10, "theta(0, i)");
    o.expect(std::abs(t1) <= 1e-10, "theta((1+i)/2, i)");
    char buf[160];
    std::snprintf(buf, sizeof buf, "max residual %.2e; theta(0,i) = %.15f; |theta((1+i)/2,i)| = %.2e", worst,
                  t0.real(), std::abs(t1));
    o.note << buf;
}

void vanishing_criterion(Outcome &o)
{
    const auto eta1 = base_eta(1);
    for (Complex tau : {Complex(0, 1), Complex(0.3, 0.9), Complex(-0.4, 1.7)}) {
        const auto r = check_vanishing_criterion(tau_point(tau), eta1);
        o.expect(r.holds && r.vanishing == 1 && r.classes == 4, "g=1 criterion");
    }
    const auto eta2 = base_eta(2);
    std::vector<SiegelPoint> points{generic_genus2_omega()};
    Rng rng(20240605);
    for (int k = 0; k < 10; ++k)
        points.push_back(random_generic_omega(2, rng));
    for (const auto &omega : points) {
        const auto r = check_vanishing_criterion(omega, eta2);
        o.expect(r.holds && r.vanishing == 6 && r.classes == 16, "g=2 criterion");
    }
    const auto split = two_torsion_table(scaled_identity_point(2));
    int failed = 0;
    const auto all_u = enumerate_admissible_u(2);
    for (const auto &u : all_u) {
        const auto r = check_vanishing_criterion(split, eta2, u);
        o.expect(r.vanishing == 7, "negative control has 7 vanishing values");
        failed += !r.holds;
    }
    o.expect(failed == static_cast<int>(all_u.size()), "negative control fails for every U");
    if (o.pass)
        o.note << "3 tau at g=1 (1/4), " << points.size() << " matrices at g=2 (6/16); i*1 fails " << failed << "/"
               << all_u.size() << " (7/16)";
}

void parity_structure(Outcome &o)
{
    const int expected[] = {0, 1, 6, 28};
    for (int g = 1; g <= 3; ++g) {
        int odd = 0;
        for (std::uint32_t a = 0; a < (1u << g); ++a)
            for (std::uint32_t b = 0; b < (1u << g); ++b)
                odd += __builtin_popcount(a & b) % 2;
        o.expect(odd == expected[g], "brute-force odd count at g=" + std::to_string(g));
        o.expect(static_cast<int>(enumerate_by_parity(g).odds.size()) == odd,
                 "enumerated odd count at g=" + std::to_string(g));
        const auto all = enumerate_characteristics(g);
        for (const auto &x : all)
            for (const auto &y : all)
                o.expect(parity(x + y) == parity(x) * parity(y) * (pairing(x, y) ? -1 : 1),
                         "cocycle identity at g=" + std::to_string(g));
    }
    if (o.pass)
        o.note << "odd counts (1, 6, 28); cocycle exhaustive for g <= 3";
}

} // namespace

int main()
{
    const std::pair<const char *, std::function<void(Outcome &)>> criteria[] = {
        {"counting identity", counting_identity},
        {"group-order identity", group_order_identity},
        {"orbit equals admissible U-sets", orbit_matches_admissible},
        {"Gamma_{1,2} equivalence", gamma12_equivalence},
        {"U-invariance", u_invariance},
        {"cardinality congruence", cardinality_congruence},
        {"theta analytics", theta_analytics},
        {"vanishing criterion", vanishing_criterion},
        {"parity structure", parity_structure},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, fn] : criteria) {
        ++index;
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception &e) {
            o.pass = false;
            o.note.str("");
            o.note << "exception: " << e.what();
        }
        failures += !o.pass;
        std::printf("criterion %d %-32s %s  %s\n", index, name, o.pass ? "PASS" : "FAIL", o.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
