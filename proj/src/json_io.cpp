#include "hyperu/json_io.hpp"

#include <limits>
#include <sstream>

namespace hyperu {

namespace {

[[noreturn]] void bad(const std::string &what)
{
    throw Error(ErrorCode::invalid_argument, "malformed JSON: " + what);
}

const Json &array_field(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        bad(std::string("expected array field '") + key + "'");
    return j.at(key);
}

std::uint32_t decode_bits(const Json &arr, int g)
{
    if (static_cast<int>(arr.size()) != g)
        bad("bit array length differs from genus");
    std::uint32_t out = 0;
    for (int i = 0; i < g; ++i) {
        if (!arr[i].is_number_integer() || (arr[i] != 0 && arr[i] != 1))
            bad("bits must be 0 or 1");
        out |= std::uint32_t(arr[i].get<int>()) << i;
    }
    return out;
}

Json encode_labels(const std::vector<Label> &labels)
{
    Json arr = Json::array();
    for (Label l : labels)
        arr.push_back(encode(l));
    return arr;
}

std::vector<Label> decode_labels(const Json &j)
{
    if (!j.is_array())
        bad("label list must be an array");
    std::vector<Label> out;
    for (const auto &x : j)
        out.push_back(decode_label(x));
    return out;
}

} // namespace

Json encode(Label label)
{
    return label.is_infinity() ? Json("inf") : Json(label.value());
}

Json encode(const BranchSet &set) { return Json{{"g", set.genus()}, {"labels", encode_labels(set.labels())}}; }

Json encode(const GBClass &cls) { return encode(cls.rep()); }

Json encode(const Characteristic &xi)
{
    Json top = Json::array(), bottom = Json::array();
    for (int i = 0; i < xi.genus(); ++i) {
        top.push_back(int(xi.top_bit(i)));
        bottom.push_back(int(xi.bottom_bit(i)));
    }
    return Json{{"top", top}, {"bottom", bottom}};
}

Json encode(const EtaMap &eta)
{
    Json arr = Json::array();
    for (const auto &xi : eta.images())
        arr.push_back(encode(xi));
    return arr;
}

Json encode(const USet &u) { return encode_labels(u.members()); }

Json encode(const mpz_class &n)
{
    if (mpz_fits_slong_p(n.get_mpz_t()))
        return Json(n.get_si());
    if (n > 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        unsigned long long v = 0;
        mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
        return Json(v);
    }
    return Json(n.get_str());
}

Json encode(const IntMatrix &m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(encode(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json encode(const SpF2Matrix &m)
{
    Json rows = Json::array();
    for (int r = 0; r < 2 * m.genus(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2 * m.genus(); ++c)
            row.push_back(int(m.entry(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json encode(const Complex &c) { return Json::array({c.real(), c.imag()}); }

Json encode(const SiegelPoint &omega)
{
    const auto &w = omega.matrix();
    Json rows = Json::array();
    for (int r = 0; r < w.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < w.cols(); ++c)
            row.push_back(encode(w(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json encode(const EtaReport &report)
{
    return Json{{"zero_sum", report.zero_sum}, {"spans", report.spans}, {"azygetic", report.azygetic},
                {"valid", report.valid()}};
}

Json encode(const CriterionReport &report)
{
    Json failures = Json::array();
    for (const auto &f : report.failures)
        failures.push_back(Json{{"class", encode(f.cls)},
                                {"sizes", Json::array({f.sizes.first, f.sizes.second})},
                                {"magnitude", f.magnitude}});
    return Json{{"holds", report.holds},
                {"classes", report.classes},
                {"vanishing", report.vanishing},
                {"failures", failures}};
}

Json encode(const TwoTorsionTable &table)
{
    Json values = Json::array();
    for (const auto &xi : enumerate_characteristics(table.omega.genus())) {
        const Complex &v = table.value(xi);
        values.push_back(Json{{"characteristic", encode(xi)},
                              {"value", encode(v)},
                              {"abs", std::abs(v)},
                              {"vanishes", table.vanishes(xi)}});
    }
    return Json{{"omega", encode(table.omega)},
                {"scale", table.scale},
                {"vanish_rel", table.vanish_rel},
                {"values", values}};
}

Label decode_label(const Json &j)
{
    if (j.is_string() && j.get<std::string>() == "inf")
        return Label::infinity();
    if (j.is_number_integer() && j.get<long>() >= 1 && j.get<long>() <= 63)
        return Label::finite(j.get<int>());
    bad("label must be a positive integer or \"inf\"");
}

BranchSet decode_branch_set(const Json &j)
{
    if (!j.is_object() || !j.contains("g") || !j.at("g").is_number_integer())
        bad("branch set needs integer field 'g'");
    const int g = j.at("g").get<int>();
    return BranchSet::from_labels(g, decode_labels(array_field(j, "labels")));
}

GBClass decode_class(const Json &j) { return GBClass(decode_branch_set(j)); }

Characteristic decode_characteristic(const Json &j)
{
    const Json &top = array_field(j, "top");
    const Json &bottom = array_field(j, "bottom");
    const int g = static_cast<int>(top.size());
    if (g == 0)
        bad("characteristic needs at least one coordinate");
    return Characteristic(g, decode_bits(top, g), decode_bits(bottom, g));
}

EtaMap decode_eta(const Json &j)
{
    if (!j.is_array() || j.empty())
        bad("eta-map must be a non-empty array");
    std::vector<Characteristic> images;
    for (const auto &x : j)
        images.push_back(decode_characteristic(x));
    const int g = images.front().genus();
    return EtaMap(g, std::move(images));
}

USet decode_u_set(int g, const Json &j) { return USet::from_labels(g, decode_labels(j)); }

mpz_class decode_integer(const Json &j)
{
    if (j.is_number_unsigned())
        return mpz_class(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class n;
        if (n.set_str(j.get<std::string>(), 10) != 0)
            bad("integer string is not decimal");
        return n;
    }
    bad("expected an integer");
}

IntMatrix decode_int_matrix(const Json &j)
{
    if (!j.is_array() || j.empty())
        bad("matrix must be a non-empty array of rows");
    const std::size_t nc = j.front().is_array() ? j.front().size() : 0;
    IntMatrix m(j.size(), nc);
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != nc)
            bad("matrix rows must be arrays of equal length");
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = decode_integer(j[r][c]);
    }
    return m;
}

namespace {

Complex decode_complex(const Json &x)
{
    if (x.is_number())
        return {x.get<double>(), 0.0};
    if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number())
        return {x[0].get<double>(), x[1].get<double>()};
    bad("complex entries are numbers or [re, im] pairs");
}

} // namespace

SiegelPoint decode_siegel(const Json &j)
{
    if (!j.is_array() || j.empty())
        bad("Siegel point must be a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    ComplexMatrix w(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != n)
            bad("Siegel point must be square");
        for (Eigen::Index c = 0; c < n; ++c)
            w(r, c) = decode_complex(j[r][c]);
    }
    return SiegelPoint(w);
}

ComplexVector decode_complex_vector(const Json &j)
{
    if (!j.is_array() || j.empty())
        bad("vector must be a non-empty array");
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = decode_complex(j[i]);
    return v;
}

Json parse_json(const std::string &text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        bad(e.what());
    }
}

std::string table_csv(const TwoTorsionTable &table)
{
    std::ostringstream out;
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "code,top,bottom,re,im,abs,vanishes\n";
    for (const auto &xi : enumerate_characteristics(table.omega.genus())) {
        std::string top, bottom;
        for (int i = 0; i < xi.genus(); ++i) {
            top += char('0' + xi.top_bit(i));
            bottom += char('0' + xi.bottom_bit(i));
        }
        const Complex &v = table.value(xi);
        out << xi.code() << ',' << top << ',' << bottom << ',' << v.real() << ',' << v.imag() << ','
            << std::abs(v) << ',' << (table.vanishes(xi) ? 1 : 0) << '\n';
    }
    return out.str();
}

} // namespace hyperu
