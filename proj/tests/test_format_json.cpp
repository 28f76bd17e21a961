#include <doctest.h>

#include <random>

#include "catwords/catalan.hpp"
#include "catwords/cfrac.hpp"
#include "catwords/errors.hpp"
#include "catwords/format.hpp"
#include "catwords/json_io.hpp"
#include "support/parse_poly.hpp"

using namespace catwords;
using catwords::testing::parse_poly;

TEST_CASE("render_polynomial")
{
    CHECK(render_polynomial(Polynomial()) == "0");
    CHECK(render_polynomial(Polynomial(-7)) == "-7");
    CHECK(render_polynomial(rational_form(2).denominator) == "1-zVC-z");
    CHECK(render_polynomial(rational_form(4).denominator) == "1-zVC-3z+2z^2VC+z^2");
    CHECK(render_polynomial(rational_form(10).denominator) ==
          "1-zVC-9z+8z^2VC+28z^2-21z^3VC-35z^3+20z^4VC+15z^4-5z^5VC-z^5");
    CHECK(render_polynomial(parse_poly("122+9V+V^2")) == "122+9V+V^2");
    CHECK(render_polynomial(parse_poly("v_1v_2v_3+v_1v_2^2+2v_1^2v_2+v_1^3")) == "v1v2v3+v1v2^2+2v1^2v2+v1^3");
    CHECK(render_polynomial(parse_poly("-z^2v_1v_3")) == "-z^2v1v3");
}

TEST_CASE("render_series")
{
    CHECK(render_series(letter_gf_series(5, 5)) == "1 + z + 2 z^2 + 5 z^3 + 14 z^4 + (41+V) z^5");
    CHECK(render_series(letter_gf_series(1, 2)) == "1 + V z + (V+V^2) z^2");
    CHECK(render_series(letter_gf_series(3, 0)) == "1");
    CHECK(render_series(Series::zero(3)) == "0");
    CHECK(render_series(Series({0, -1, 0, -3})) == "-z - 3 z^3");
    CHECK(render_series(Series({Polynomial(1) + symbols::V(), 2})) == "1+V + 2 z");
}

TEST_CASE("histogram text forms")
{
    const Histogram h{5, 5, {{0, 41}, {1, 1}}};
    CHECK(histogram_csv(h) == "k,count\n0,41\n1,1\n");
    CHECK(render_histogram(h) == "{0:41,1:1}");
}

TEST_CASE("polynomial JSON layout")
{
    const Json j = to_json(parse_poly("1-2zVC+z^2v_3"));
    CHECK(j.dump() == R"([{"coeff":"1","monomial":{}},{"coeff":"-2","monomial":{"z":1,"C":1,"V":1}},)"
                      R"({"coeff":"1","monomial":{"z":2,"v3":1}}])");
    CHECK(to_json(Polynomial()).dump() == "[]");
}

TEST_CASE("series and letter GF JSON layout")
{
    CHECK(to_json(Series({1, 2})).dump() ==
          R"({"order":1,"coeffs":[[{"coeff":"1","monomial":{}}],[{"coeff":"2","monomial":{}}]]})");
    const Json gf = to_json(rational_form(1));
    CHECK(gf["letter"] == 1);
    CHECK(gf["numerator"].dump() == R"([{"coeff":"1","monomial":{}}])");
    CHECK(to_json(Histogram{5, 5, {{0, 41}, {1, 1}}}).dump() ==
          R"({"letter":5,"length":5,"counts":{"0":41,"1":1}})");
}

TEST_CASE("JSON round trips")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> letter(1, 10);
    for (int trial = 0; trial < 20; ++trial) {
        const auto gf = rational_form(static_cast<unsigned>(letter(rng)));
        const LetterGF back = letter_gf_from_json(to_json(gf));
        CHECK(back.letter == gf.letter);
        CHECK(back.numerator == gf.numerator);
        CHECK(back.denominator == gf.denominator);
    }
    const Series s = gf_full(4, TailMode::Catalan, 6);
    CHECK(series_from_json(to_json(s)) == s);

    // Big coefficients survive as decimal strings.
    const Series big = catalan_series(40);
    CHECK(series_from_json(to_json(big)) == big);

    // Text level: parse then dump is the identity.
    const std::string text = to_json(letter_gf_series(5, 10)).dump(2);
    CHECK(Json::parse(text).dump(2) == text);
}

TEST_CASE("malformed JSON is rejected")
{
    CHECK_THROWS_AS(polynomial_from_json(Json::object()), InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"coeff":1,"monomial":{}}])")), InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"coeff":"x","monomial":{}}])")), InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"coeff":"1","monomial":{"w":1}}])")),
                    InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"coeff":"1","monomial":{"z":0}}])")),
                    InvalidArgument);
    CHECK_THROWS_AS(series_from_json(Json::parse(R"({"order":2,"coeffs":[[]]})")), InvalidArgument);
    CHECK_THROWS_AS(series_from_json(Json::parse(R"({"order":0,"coeffs":[[{"coeff":"1","monomial":{"z":1}}]]})")),
                    InvalidArgument);
}
