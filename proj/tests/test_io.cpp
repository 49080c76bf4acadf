#include <doctest.h>

#include "boolspectra/io.hpp"
#include "helpers.hpp"

using namespace boolspectra;
using testutil::from_anf;
using testutil::from_bits;

TEST_CASE("truth table hex: pinned values") {
    CHECK(emit_truth_table_hex(from_bits(2, {1, 0, 0, 0})) == "8");
    CHECK(parse_truth_table_hex("8") == from_bits(2, {1, 0, 0, 0}));

    BooleanFunction f = parse_truth_table_hex("0001");
    CHECK(f.n() == 4);
    for (std::uint32_t x = 0; x < 16; ++x) CHECK(f.get(x) == (x == 15));

    CHECK_THROWS_AS(parse_truth_table_hex("abc"), BadLength);  // 3 digits
    CHECK_THROWS_AS(parse_truth_table_hex("0g"), BadDigit);
}

TEST_CASE("truth table hex: fixture round trip") {
    std::string text = testutil::slurp(testutil::fixture_path("example1.tt.hex"));
    BooleanFunction f = parse_truth_table_hex(text);
    CHECK(f == from_anf(6, "1 + x1x6 + x2x3x6 + x4x5 + x4x6"));
    CHECK(emit_truth_table_hex(f) + "\n" == text);

    // the pinned spectrum fixture matches the transform of the function
    auto parsed = parse_spectrum_csv(testutil::slurp(testutil::fixture_path("example1.spec.csv")));
    CHECK(parsed.parseval_ok);
    CHECK(parsed.spectrum == wht(f));
}

TEST_CASE("spectrum csv: emit and parse") {
    WalshSpectrum w;
    w.n = 2;
    w.values = {4, 0, 0, 0};
    std::string text = emit_spectrum_csv(w);
    CHECK(text == "omega,value\n0,4\n1,0\n2,0\n3,0\n");
    auto parsed = parse_spectrum_csv(text);
    CHECK(parsed.spectrum == w);
    CHECK(parsed.parseval_ok);

    // Parseval failure parses with the flag down
    auto warned = parse_spectrum_csv("omega,value\n0,2\n1,0\n2,0\n3,0\n");
    CHECK_FALSE(warned.parseval_ok);

    CHECK_THROWS_AS(parse_spectrum_csv("omega,value\n0,1.5\n1,0\n2,0\n3,0\n"), BadRow);
    CHECK_THROWS_AS(parse_spectrum_csv("omega,value\n0,4\n0,0\n2,0\n3,0\n"), BadRow);
    CHECK_THROWS_AS(parse_spectrum_csv(""), BadRow);
}

TEST_CASE("property: emitter/parser round trips") {
    std::mt19937_64 rng(0x5eed5001);
    for (int round = 0; round < 50; ++round) {
        int n = 2 + int(rng() % 9);
        BooleanFunction f = testutil::random_function(n, rng);
        CHECK(parse_truth_table_hex(emit_truth_table_hex(f)) == f);
        WalshSpectrum w = wht(f);
        CHECK(parse_spectrum_csv(emit_spectrum_csv(w)).spectrum == w);
    }
}

TEST_CASE("spectrum json round trip") {
    std::mt19937_64 rng(0x5eed5002);
    BooleanFunction f = testutil::random_function(5, rng);
    WalshSpectrum w = wht(f);
    nlohmann::json j = spectrum_to_json(w);
    CHECK(j.is_array());
    CHECK(spectrum_from_json(j) == w);
    CHECK_THROWS_AS(spectrum_from_json(nlohmann::json::array({1, 2, 3})), BadLength);
}

TEST_CASE("anf text round trip") {
    AnfPolynomial p = parse_anf(6, "1 + x1*x6 + x2 x3 x6 + x4x5 + x4x6");
    CHECK(p.monomials == std::set<std::uint32_t>{0, monomial(6, {1, 6}),
                                                 monomial(6, {2, 3, 6}),
                                                 monomial(6, {4, 5}),
                                                 monomial(6, {4, 6})});
    CHECK(parse_anf(6, emit_anf(p)) == p);
    CHECK(emit_anf(AnfPolynomial{3, {}}) == "0");
    CHECK(parse_anf(3, "0").monomials.empty());
    // repeated terms cancel
    CHECK(parse_anf(2, "x1 + x1").monomials.empty());
    CHECK_THROWS_AS(parse_anf(2, "x3"), BadRow);
}

TEST_CASE("support and dual json round trips") {
    OrderedSupport s = OrderedSupport::from_points(4, {3, 5, 6, 0});
    OrderedSupport back = support_from_json(support_to_json(s));
    CHECK(back == s);

    DualFunction d{OrderedSupport::from_points(3, {2, 3, 4, 5}), from_bits(2, {0, 0, 0, 1})};
    DualFunction dback = dual_from_json(dual_to_json(d));
    CHECK(dback.support == d.support);
    CHECK(dback.g == d.g);
}

TEST_CASE("gmm spec json round trip") {
    GmmSpec spec = gmm_default_maps(6, 2, 1, 2, 1);
    GmmSpec back = gmm_spec_from_json(gmm_spec_to_json(spec));
    CHECK(back.n == spec.n);
    CHECK(back.e0 == spec.e0);
    CHECK(back.phi0 == spec.phi0);
    CHECK(back.phi1 == spec.phi1);
    CHECK(build_gmm(back).f == build_gmm(spec).f);
}

TEST_CASE("fixture loader tags kinds by extension") {
    Fixture fx = load_fixture(testutil::fixture_path("example1.tt.hex"));
    CHECK(fx.kind == "truth-table");
    CHECK_FALSE(fx.payload.empty());
    CHECK_THROWS_AS(load_fixture(testutil::fixture_path("missing.tt.hex")), ParseError);
}
