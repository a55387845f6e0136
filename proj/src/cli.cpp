#include "hyperu/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hyperu/counting.hpp"
#include "hyperu/json_io.hpp"

namespace hyperu::cli {

namespace {

struct Options {
    std::optional<int> genus;
    std::optional<long> n, d, m;
    std::string matrix;
    std::string omega;
    std::string z;
    std::string characteristic;
    std::string u;
    bool base_eta_target = false;
    int samples = 20;
    std::uint64_t seed = 1;
    double tol = 1e-12;
    double vanish_rel = 1e-8;
    int max_radius = 60;
    std::string format = "json";
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

int need_genus(const Options &o)
{
    if (!o.genus)
        throw UsageError("--genus is required");
    return *o.genus;
}

ThetaConfig theta_config(const Options &o)
{
    ThetaConfig cfg{o.tol, o.max_radius, o.vanish_rel};
    cfg.validate();
    return cfg;
}

SiegelPoint load_omega(const Options &o)
{
    if (o.omega.empty())
        throw UsageError("--omega <file.json> is required");
    std::ifstream in(o.omega);
    if (!in)
        throw Error(ErrorCode::invalid_argument, "cannot read " + o.omega);
    std::stringstream buf;
    buf << in.rdbuf();
    return decode_siegel(parse_json(buf.str()));
}

SymplecticMatrix load_matrix(const Options &o)
{
    if (o.matrix.empty())
        throw UsageError("--matrix is required");
    return SymplecticMatrix(decode_int_matrix(parse_json(o.matrix)));
}

Json cmd_count(const Options &o)
{
    if (o.genus) {
        const int g = *o.genus;
        const mpz_class closed = u_count_closed(g);
        const mpz_class direct = s_count({2L * g + 1, g, 4});
        return Json{{"genus", g}, {"closed_form", encode(closed)}, {"direct_sum", encode(direct)},
                    {"agree", closed == direct}};
    }
    if (!o.n || !o.d || !o.m)
        throw UsageError("count needs --n, --d and --m, or --genus");
    return Json{{"n", *o.n}, {"d", *o.d}, {"m", *o.m}, {"s_count", encode(s_count({*o.n, *o.d, *o.m}))}};
}

Json encode_sets(const std::vector<USet> &sets)
{
    Json arr = Json::array();
    for (const auto &u : sets)
        arr.push_back(encode(u));
    return arr;
}

Json cmd_enumerate_u(const Options &o)
{
    const int g = need_genus(o);
    const auto sets = enumerate_admissible_u(g);
    return Json{{"genus", g}, {"count", sets.size()}, {"u_sets", encode_sets(sets)}};
}

Json cmd_orbit(const Options &o)
{
    const int g = need_genus(o);
    auto sets = u_orbit(g).sets;
    std::sort(sets.begin(), sets.end());
    return Json{{"genus", g}, {"size", sets.size()}, {"u_sets", encode_sets(sets)}};
}

Json cmd_verify_main(const Options &o, bool &passed)
{
    const int g = need_genus(o);
    auto orbit = u_orbit(g).sets;
    std::sort(orbit.begin(), orbit.end());
    const auto admissible = enumerate_admissible_u(g);
    const mpz_class quotient = order_formulas(g).quotient;
    const mpz_class closed = u_count_closed(g);

    const EtaMap base = base_eta(g);
    const USet u0 = u_set(base);
    Rng rng(o.seed);
    int invariant = 0;
    for (int i = 0; i < o.samples; ++i)
        if (u_set(transform_eta(random_gamma12_word(g, rng), base)) == u0)
            ++invariant;

    passed = orbit == admissible && quotient == closed && mpz_class(orbit.size()) == quotient
             && invariant == o.samples;
    return Json{{"genus", g},
                {"result", passed ? "PASS" : "FAIL"},
                {"orbit_size", orbit.size()},
                {"admissible", admissible.size()},
                {"quotient", encode(quotient)},
                {"closed_form", encode(closed)},
                {"seed", o.seed},
                {"invariance_samples", o.samples},
                {"invariance_held", invariant}};
}

Json cmd_classify(const Options &o)
{
    if (o.matrix.empty())
        throw UsageError("--matrix is required");
    const IntMatrix m = decode_int_matrix(parse_json(o.matrix));
    if (!is_symplectic(m))
        return Json{{"symplectic", false}, {"gamma12", false}, {"gamma2", false}};
    const SymplecticMatrix gamma(m);
    return Json{{"symplectic", true}, {"gamma12", is_gamma12(gamma)}, {"gamma2", is_gamma2(gamma)}};
}

Json cmd_act(const Options &o)
{
    const SymplecticMatrix gamma = load_matrix(o);
    Json result{{"matrix", encode(gamma.matrix())}};
    bool any = false;
    if (!o.omega.empty()) {
        result["omega"] = encode(act_on_siegel(gamma, load_omega(o)));
        any = true;
    }
    if (!o.characteristic.empty()) {
        const Characteristic xi = parse_characteristic(o.characteristic);
        const Characteristic image = act_on_characteristic(gamma, xi);
        result["characteristic"] = encode(image);
        result["text"] = to_string(image);
        any = true;
    }
    if (o.base_eta_target) {
        const EtaMap eta = transform_eta(gamma, base_eta(gamma.genus()));
        result["eta"] = encode(eta);
        result["u_set"] = encode(u_set(eta));
        any = true;
    }
    if (!any)
        throw UsageError("act needs --omega, --characteristic or --base-eta");
    return result;
}

Json cmd_eta(const Options &o)
{
    const int g = need_genus(o);
    EtaMap eta = base_eta(g);
    if (!o.matrix.empty()) {
        const SymplecticMatrix gamma = load_matrix(o);
        require_same_genus(g, gamma.genus());
        eta = transform_eta(gamma, eta);
    }
    const USet u = u_set(eta);
    return Json{{"genus", g},
                {"eta", encode(eta)},
                {"report", encode(validate_eta(eta))},
                {"u_set", encode(u)},
                {"t_set", encode(t_set(u))}};
}

Json cmd_theta_eval(const Options &o)
{
    const SiegelPoint omega = load_omega(o);
    ComplexVector z = ComplexVector::Zero(omega.genus());
    if (!o.z.empty())
        z = decode_complex_vector(parse_json(o.z));
    const ThetaValue v = theta_checked(z, omega, theta_config(o));
    return Json{{"value", encode(v.value)}, {"abs", std::abs(v.value)}, {"radius", v.radius}};
}

Json cmd_criterion(const Options &o, bool &passed)
{
    const SiegelPoint omega = load_omega(o);
    const int g = o.genus.value_or(omega.genus());
    require_same_genus(g, omega.genus());
    check_genus(g, kMaxCriterionGenus);
    const EtaMap eta = base_eta(g);
    const USet u = o.u.empty() ? u_set(eta) : decode_u_set(g, parse_json(o.u));
    const TwoTorsionTable table = two_torsion_table(omega, theta_config(o));
    const CriterionReport report = check_vanishing_criterion(table, eta, u);
    passed = report.holds;
    Json j = encode(report);
    j["u_set"] = encode(u);
    return j;
}

Json cmd_orders(const Options &o)
{
    const OrderFormulas f = order_formulas(need_genus(o));
    return Json{{"sp_f2", encode(f.sp_f2)}, {"o_plus", encode(f.o_plus)}, {"quotient", encode(f.quotient)}};
}

void write_error(std::ostream &err, const std::string &code, const std::string &detail)
{
    err << Json{{"error", code}, {"detail", detail}}.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Theta characteristics, Gamma_{1,2} and U-sets of marked hyperelliptic curves", "hyperu"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Seed for every pseudo-random choice");
    app.add_option("--tol", o.tol, "Absolute truncation tolerance for theta");
    app.add_option("--vanish-rel", o.vanish_rel, "Relative vanishing threshold");
    app.add_option("--max-radius", o.max_radius, "Cap on the theta summation radius");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto genus = [&](CLI::App *sub) { sub->add_option("--genus,-g", o.genus, "Genus")->check(CLI::PositiveNumber); };
    auto omega = [&](CLI::App *sub) { sub->add_option("--omega", o.omega, "Path to a Siegel point (JSON)"); };

    std::vector<std::pair<CLI::App *, std::function<Json(bool &)>>> handlers;
    auto plain = [&](CLI::App *sub, std::function<Json(const Options &)> fn) {
        handlers.emplace_back(sub, [fn, &o](bool &) { return fn(o); });
    };

    auto *count = app.add_subcommand("count", "Binomial sums S(n,d,m), or the U-set count for a genus");
    count->add_option("--n", o.n);
    count->add_option("--d", o.d);
    count->add_option("--m", o.m);
    genus(count);
    plain(count, cmd_count);

    auto *enumerate = app.add_subcommand("enumerate-u", "All admissible U-sets");
    genus(enumerate);
    plain(enumerate, cmd_enumerate_u);

    auto *orbit = app.add_subcommand("orbit", "U-sets reached from the base eta-map");
    genus(orbit);
    plain(orbit, cmd_orbit);

    auto *verify = app.add_subcommand("verify-main", "Check that the orbit equals the admissible U-sets");
    genus(verify);
    verify->add_option("--samples", o.samples, "Random Gamma_{1,2} words for the invariance check")
        ->check(CLI::NonNegativeNumber);
    handlers.emplace_back(verify, [&o](bool &passed) { return cmd_verify_main(o, passed); });

    auto *classify = app.add_subcommand("classify", "Symplectic / Gamma_{1,2} / Gamma(2) membership");
    classify->add_option("--matrix", o.matrix, "Row-major JSON integer matrix");
    plain(classify, cmd_classify);

    auto *act = app.add_subcommand("act", "Apply a symplectic matrix");
    act->add_option("--matrix", o.matrix, "Row-major JSON integer matrix");
    omega(act);
    act->add_option("--characteristic", o.characteristic, "Characteristic as \"[a1 .. ag | b1 .. bg]\"");
    act->add_flag("--base-eta", o.base_eta_target, "Transform the base eta-map");
    plain(act, cmd_act);

    auto *eta = app.add_subcommand("eta", "Base eta-map (optionally transformed), with its U-set");
    genus(eta);
    eta->add_option("--matrix", o.matrix, "Row-major JSON integer matrix");
    plain(eta, cmd_eta);

    auto *orders = app.add_subcommand("orders", "Orders of Sp_2g(F_2), O+_2g(F_2) and their quotient");
    genus(orders);
    plain(orders, cmd_orders);

    // "theta-eval" and "theta eval" are the same command, likewise for table
    // and criterion.
    auto *theta_group = app.add_subcommand("theta", "Theta function commands");
    theta_group->require_subcommand(1);
    theta_group->fallthrough();
    auto table_fn = [&o](bool &) -> Json {
        const TwoTorsionTable table = two_torsion_table(load_omega(o), theta_config(o));
        if (o.format == "csv")
            return Json(table_csv(table));
        return encode(table);
    };
    for (CLI::App *parent : {&app, theta_group}) {
        const bool nested = parent == theta_group;
        auto *ev = parent->add_subcommand(nested ? "eval" : "theta-eval", "Evaluate theta(z, Omega)");
        omega(ev);
        ev->add_option("--z", o.z, "JSON list of complex entries; defaults to 0");
        plain(ev, cmd_theta_eval);

        auto *tb = parent->add_subcommand(nested ? "table" : "theta-table", "Theta at all two-torsion points");
        omega(tb);
        handlers.emplace_back(tb, table_fn);

        auto *cr = parent->add_subcommand("criterion", "Vanishing criterion against the base eta-map");
        omega(cr);
        genus(cr);
        cr->add_option("--u", o.u, "Explicit U-set, e.g. '[1,2,\"inf\"]'");
        handlers.emplace_back(cr, [&o](bool &passed) { return cmd_criterion(o, passed); });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (auto &[sub, fn] : handlers) {
            if (!sub->parsed())
                continue;
            bool passed = true;
            const Json result = fn(passed);
            if (result.is_string())
                out << result.get<std::string>();
            else
                out << result.dump() << '\n';
            return passed ? kExitOk : kExitVerificationFailed;
        }
        write_error(err, "usage", "no command given");
        return kExitUsage;
    } catch (const UsageError &e) {
        write_error(err, "usage", e.what());
        return kExitUsage;
    } catch (const Error &e) {
        write_error(err, to_string(e.code()), e.what());
        return kExitUsage;
    } catch (const std::exception &e) {
        write_error(err, "internal", e.what());
        return kExitUsage;
    }
}

} // namespace hyperu::cli
