#include "doctest.h"

#include "hyperu/error.hpp"
#include "hyperu/json_io.hpp"

using namespace hyperu;

TEST_CASE("labels and sets")
{
    CHECK(encode(Label::infinity()) == Json("inf"));
    CHECK(encode(Label::finite(3)) == Json(3));
    CHECK(decode_label(Json("inf")) == Label::infinity());
    CHECK(decode_label(Json(2)) == Label::finite(2));
    CHECK_THROWS_AS(decode_label(Json(0)), Error);
    CHECK_THROWS_AS(decode_label(Json("x")), Error);

    const auto u = u_set(base_eta(2));
    CHECK(encode(u).dump() == R"([3,4,"inf"])");
    CHECK(decode_u_set(2, encode(u)) == u);
    CHECK_THROWS_AS(decode_u_set(2, parse_json("[1,2]")), Error);

    for (const auto &c : enumerate_gb(2)) {
        CHECK(decode_class(encode(c)) == c);
        CHECK(decode_branch_set(encode(c.rep())) == c.rep());
    }
    CHECK(encode(canonical_class(1, std::vector{Label::finite(3), Label::infinity()})).dump() ==
          R"({"g":1,"labels":[1,2]})");
}

TEST_CASE("characteristics and eta-maps")
{
    const Characteristic x(2, 0b01, 0b11);
    CHECK(encode(x).dump() == R"({"top":[1,0],"bottom":[1,1]})");
    for (const auto &y : enumerate_characteristics(2))
        CHECK(decode_characteristic(encode(y)) == y);
    CHECK_THROWS_AS(decode_characteristic(parse_json(R"({"top":[1,0],"bottom":[1]})")), Error);
    CHECK_THROWS_AS(decode_characteristic(parse_json(R"({"top":[2],"bottom":[1]})")), Error);
    for (int g = 1; g <= 3; ++g)
        CHECK(decode_eta(encode(base_eta(g))) == base_eta(g));
}

TEST_CASE("integers and matrices")
{
    CHECK(encode(mpz_class(-5)) == Json(-5));
    CHECK(encode(mpz_class("18446744073709551615")).dump() == "18446744073709551615");
    CHECK(encode(mpz_class("18446744073709551616")) == Json("18446744073709551616"));
    CHECK(encode(mpz_class("-9223372036854775809")) == Json("-9223372036854775809"));
    for (const char *s : {"0", "-7", "18446744073709551615", "18446744073709551616", "-123456789012345678901234"})
        CHECK(decode_integer(encode(mpz_class(s))) == mpz_class(s));
    CHECK_THROWS_AS(decode_integer(Json(1.5)), Error);
    CHECK_THROWS_AS(decode_integer(Json("12a")), Error);

    const auto m = IntMatrix::from_rows({{1, -2}, {3, 4}});
    CHECK(encode(m).dump() == "[[1,-2],[3,4]]");
    CHECK(decode_int_matrix(encode(m)) == m);
    CHECK_THROWS_AS(decode_int_matrix(parse_json("[[1,2],[3]]")), Error);
    CHECK(encode(reduce_mod2(SymplecticMatrix::j(1))).dump() == "[[0,1],[1,0]]");
}

TEST_CASE("Siegel points and complex vectors")
{
    const auto p = decode_siegel(parse_json("[[[0.8,1.2],[0.3,0.1]],[[0.3,0.1],[-0.4,1.5]]]"));
    CHECK(p.matrix()(0, 1) == Complex(0.3, 0.1));
    CHECK(decode_siegel(encode(p)).matrix() == p.matrix());
    CHECK_THROWS_AS(decode_siegel(parse_json("[[2]]")), Error);
    CHECK_THROWS_AS(decode_siegel(parse_json("[[[0,1],[0,0]]]")), Error);
    const auto z = decode_complex_vector(parse_json("[[0.5,0.5], 1]"));
    CHECK(z(0) == Complex(0.5, 0.5));
    CHECK(z(1) == Complex(1, 0));
}

TEST_CASE("reports and tables")
{
    const auto r = validate_eta(base_eta(1));
    CHECK(encode(r).dump() == R"({"zero_sum":true,"spans":true,"azygetic":true,"valid":true})");
    ComplexMatrix w(1, 1);
    w(0, 0) = Complex(0, 1);
    const auto table = two_torsion_table(SiegelPoint(w));
    const Json j = encode(table);
    CHECK(j.contains("values"));
    CHECK(j.at("values").size() == 4);
    const std::string csv = table_csv(table);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    const auto c = encode(check_vanishing_criterion(SiegelPoint(w), base_eta(1)));
    CHECK(c.at("holds") == true);
}

TEST_CASE("parse errors")
{
    try {
        parse_json("[1,");
        FAIL("expected a parse error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::invalid_argument);
    }
}
