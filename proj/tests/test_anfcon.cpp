#include <doctest.h>

#include "boolspectra/anfcon.hpp"
#include "boolspectra/decomp.hpp"
#include "instances.hpp"

using namespace boolspectra;
using testutil::from_anf;
using testutil::from_bits;

namespace {

// four pairwise disjoint-spectra semi-bent functions on F2^4, one per coset
// {c} x F2^2 of the low block
std::array<BooleanFunction, 4> disjoint_semibent4() {
    std::array<BooleanFunction, 4> out{BooleanFunction(4), BooleanFunction(4),
                                       BooleanFunction(4), BooleanFunction(4)};
    for (std::uint32_t c = 0; c < 4; ++c) {
        std::vector<std::uint32_t> pts;
        for (std::uint32_t z = 0; z < 4; ++z) pts.push_back((c << 2) | z);
        out[c] = construct_plateaued(OrderedSupport::from_points(4, pts),
                                     from_bits(2, {0, 0, 0, 1}));
    }
    return out;
}

std::array<BooleanFunction, 4> pinned_bent_quadruple() {
    BooleanFunction a1 = from_anf(4, "x1x3 + x2x4");
    return {a1, a1 ^ from_anf(4, "x1"), a1 ^ from_anf(4, "x2"),
            a1 ^ from_anf(4, "1 + x1 + x2")};
}

}  // namespace

TEST_CASE("fixed forms match their pinned tables and recipes") {
    CHECK(form_c1() == testutil::load_table("form_c1.tt.hex"));
    CHECK(form_c3() == testutil::load_table("form_c3.tt.hex"));
    CHECK(form_c4() == testutil::load_table("form_c4.tt.hex"));

    Classification c1 = classify(wht(form_c1()));
    CHECK(c1.is_plateaued(3));
    CHECK(ordered_support(wht(form_c1()), 16).points_sorted() ==
          std::vector<std::uint32_t>{16, 21, 26, 31});
    CHECK(dual(wht(form_c1())).g == from_bits(2, {0, 0, 0, 1}));

    // regenerate both 5-variable forms from their support/dual recipes
    OrderedSupport s1 = OrderedSupport::from_points(5, {16, 21, 26, 31});
    CHECK(construct_plateaued(s1, from_bits(2, {0, 0, 0, 1})) == form_c1());
    OrderedSupport s4 = OrderedSupport::from_points(5, {17, 21, 26, 30});
    CHECK(construct_plateaued(s4, from_bits(2, {0, 0, 0, 1})) == form_c4());

    Classification c3 = classify(wht(form_c3()));
    CHECK(c3.is_plateaued(2));
    Classification c4 = classify(wht(form_c4()));
    CHECK(c4.is_plateaued(3));
}

TEST_CASE("cf_wht: identity coordinates reproduce the form spectrum") {
    BooleanFunction f = from_anf(4, "x1x2 + x3x4 + x2");
    std::vector<BooleanFunction> coords;
    for (int v = 1; v <= 4; ++v) coords.push_back(projection(4, v));
    CompositeForm cf(f, coords);
    WalshSpectrum w = wht(f);
    for (std::uint32_t u = 0; u < 16; ++u) CHECK(cf_wht(cf, u) == w.values[u]);
}

TEST_CASE("cf_wht: equals the direct transform on random composites") {
    std::mt19937_64 rng(0x5eed3001);
    for (int round = 0; round < 20; ++round) {
        int n = 3 + int(rng() % 3);  // 3..5
        int k = 2 + int(rng() % 3);  // 2..4
        BooleanFunction form = testutil::random_function(k, rng);
        std::vector<BooleanFunction> coords;
        for (int i = 0; i < k; ++i) coords.push_back(testutil::random_function(n, rng));
        CompositeForm cf(form, coords);
        WalshSpectrum direct = wht(cf_truth_table(cf));
        for (std::uint32_t u = 0; u < (1u << n); ++u)
            CHECK(cf_wht(cf, u) == direct.values[u]);
    }
}

TEST_CASE("split_wht: the five-variable form over (a, h1, h2, y1, y2)") {
    BooleanFunction a = from_anf(4, "x1x3 + x2x4");
    BooleanFunction d = from_anf(4, "x1x2");  // semi-bent on F2^4
    BooleanFunction g = a ^ d;

    std::vector<BooleanFunction> coords = {lift_left(a, 2), lift_left(g, 2),
                                           lift_left(g, 2), projection(6, 5),
                                           projection(6, 6)};
    CompositeForm cf(form_c1(), coords);
    SplitSupport ss = split_support(wht(form_c1()), 3);
    CHECK(ss.theta_unique);
    CHECK(ss.entries.size() == 4);

    WalshSpectrum via_split = split_wht(cf, ss);
    WalshSpectrum direct = wht(cf_truth_table(cf));
    CHECK(via_split == direct);

    // the four branch formulas: v=00 -> 2W_a, v=01,10 -> 2W_{a^g}, v=11 -> -2W_a
    WalshSpectrum wa = wht(a), wag = wht(a ^ g);
    for (std::uint32_t u = 0; u < 16; ++u) {
        CHECK(via_split.values[(u << 2) | 0] == 2 * wa.values[u]);
        CHECK(via_split.values[(u << 2) | 1] == 2 * wag.values[u]);
        CHECK(via_split.values[(u << 2) | 2] == 2 * wag.values[u]);
        CHECK(via_split.values[(u << 2) | 3] == -2 * wa.values[u]);
    }
}

TEST_CASE("split_wht: zero outside Theta and shape checking") {
    // a form whose support misses some suffixes: the c4 form, t = 3
    SplitSupport ss = split_support(wht(form_c4()), 3);
    // support {17,21,26,30} = (delta, theta) pairs with theta in {01,10}
    CHECK_FALSE(ss.theta_present(0b00));
    CHECK_FALSE(ss.theta_present(0b11));

    std::mt19937_64 rng(0x5eed3002);
    std::vector<BooleanFunction> coords;
    for (int i = 0; i < 3; ++i)
        coords.push_back(lift_left(testutil::random_function(4, rng), 2));
    coords.push_back(projection(6, 5));
    coords.push_back(projection(6, 6));
    CompositeForm cf(form_c4(), coords);
    WalshSpectrum via_split = split_wht(cf, ss);
    CHECK(via_split == wht(cf_truth_table(cf)));
    for (std::uint32_t u = 0; u < 16; ++u) {
        CHECK(via_split.values[(u << 2) | 0] == 0);
        CHECK(via_split.values[(u << 2) | 3] == 0);
    }

    // wrong shape: a y-dependent coordinate in the x block
    std::vector<BooleanFunction> bad = coords;
    bad[1] = projection(6, 6);
    CHECK_THROWS_AS(split_wht(CompositeForm(form_c4(), bad), ss), ShapeMismatch);
}

TEST_CASE("split_wht: additive x-only term shifts the inner transforms") {
    // composition a(x) ^ q(g(x)^y1, g(x)^y2) with q = z1 z2
    std::mt19937_64 rng(0x5eed3003);
    BooleanFunction a = from_anf(4, "x1x3 + x2x4");
    BooleanFunction g = testutil::random_function(4, rng);

    // form (z1^y1)(z2^y2) over coords (g, g, y1, y2)
    BooleanFunction form4(4);
    for (std::uint32_t z = 0; z < 16; ++z)
        form4.set(z, ((z >> 3) ^ (z >> 1)) & ((z >> 2) ^ z) & 1);  // (z1^y1)(z2^y2)
    std::vector<BooleanFunction> coords4 = {lift_left(g, 2), lift_left(g, 2),
                                            projection(6, 5), projection(6, 6)};
    CompositeForm cf(form4, coords4);
    SplitSupport ss = split_support(wht(form4), 2);
    WalshSpectrum with_shift = split_wht(cf, ss, a);
    BooleanFunction direct = lift_left(a, 2) ^ cf_truth_table(cf);
    CHECK(with_shift == wht(direct));
}

TEST_CASE("split_wht: equals the direct transform on random split composites") {
    std::mt19937_64 rng(0x5eed3005);
    int rounds = 0;
    while (rounds < 15) {
        int r = 2 + int(rng() % 3);  // 2..4
        int m = 2;
        int t = 1 + int(rng() % 3);  // 1..3
        int k = t + m;
        if (k > 5) continue;
        BooleanFunction form = testutil::random_function(k, rng);
        if (wht(form).values == std::vector<std::int64_t>(std::size_t{1} << k, 0))
            continue;
        std::vector<BooleanFunction> coords;
        for (int i = 0; i < t; ++i)
            coords.push_back(lift_left(testutil::random_function(r, rng), m));
        for (int j = 0; j < m; ++j) coords.push_back(projection(r + m, r + 1 + j));
        CompositeForm cf(form, coords);
        SplitSupport ss = split_support(wht(form), t);
        CHECK(split_wht(cf, ss) == wht(cf_truth_table(cf)));
        ++rounds;
    }
}

TEST_CASE("construct_c1: rows 1 and 2") {
    BooleanFunction a = from_anf(4, "x1x3 + x2x4");
    BooleanFunction d = from_anf(4, "x1x2");
    BooleanFunction g = a ^ d;  // a^g = d semi-bent

    BooleanFunction f1 = construct_c1(a, g, g, 1);
    Classification c = classify(wht(f1));
    REQUIRE(c.is_five_valued());
    CHECK(c.exponent_lo == 3);
    CHECK(c.exponent_hi == 4);

    BooleanFunction f2 = construct_c1(a, from_anf(4, "x1"), g, 2);
    CHECK(classify(wht(f2)).is_five_valued());

    // r = 6 instance: exponents are (n/2, (n+2)/2) with n = 8
    BooleanFunction a6 = from_anf(6, "x1x2 + x3x4 + x5x6");
    BooleanFunction d6 = from_anf(6, "x1x2 + x3x4");  // 2-plateaued, semi-bent
    BooleanFunction g6 = a6 ^ d6;
    Classification c6 = classify(wht(construct_c1(a6, g6, g6, 1)));
    REQUIRE(c6.is_five_valued());
    CHECK(c6.exponent_lo == 4);
    CHECK(c6.exponent_hi == 5);

    CHECK_THROWS_WITH_AS(construct_c1(from_anf(4, "x1x2"), g, g, 1), "condition violated: a not bent",
                         ConditionViolated);
    CHECK_THROWS_AS(construct_c1(a, g, g.complement(), 1), ConditionViolated);
    CHECK_THROWS_AS(construct_c1(a, a, a, 1), ConditionViolated);  // a^g not semi-bent
}

TEST_CASE("construct_c1: rows 3 and 4 verify by classification") {
    std::mt19937_64 rng(0x5eed3004);
    BooleanFunction a = assemble_five_valued(testutil::make_suffix_pair(4, 1, 3, rng), 8, 4);
    REQUIRE(classify(wht(a)).is_five_valued());

    BooleanFunction f3 = construct_c1(a, from_anf(4, "x1"), from_anf(4, "x2 + 1"), 3);
    CHECK(classify(wht(f3)).is_five_valued());

    BooleanFunction d = from_anf(4, "x1x2");  // semi-bent
    BooleanFunction f4 = construct_c1(a, from_anf(4, "x2"), a ^ d, 4);
    CHECK(classify(wht(f4)).is_five_valued());

    CHECK_THROWS_AS(construct_c1(a, from_anf(4, "x1x2"), from_anf(4, "x2"), 3),
                    ConditionViolated);  // h1 not affine
}

TEST_CASE("construct_c2_quadruple: pinned instance concatenates bent") {
    std::array<BooleanFunction, 4> a = pinned_bent_quadruple();
    std::array<BooleanFunction, 4> d = disjoint_semibent4();
    std::array<BooleanFunction, 4> quad = construct_c2_quadruple(a, d);

    QuadrupleReport report = verify_5valued_quadruple(quad);
    CHECK(report.s1_pairwise_disjoint);
    CHECK(report.s2_all_equal);
    CHECK(report.dual_sum_one);
    CHECK(report.pass());

    BooleanFunction concat = concatenate_4(quad, 0b10000000, 0b01000000);
    CHECK(classify(wht(concat)).is_bent());

    // the high-amplitude support of each member sits over the d_i support
    FiveValuedProfile p = five_valued_profile(wht(quad[0]));
    OrderedSupport sd = ordered_support(wht(d[0]), 8);
    std::vector<std::uint32_t> expect;
    for (std::uint32_t u : sd.points_sorted())
        for (std::uint32_t v : {1u, 2u}) expect.push_back((u << 2) | v);
    std::sort(expect.begin(), expect.end());
    CHECK(p.s1.points_sorted() == expect);
    std::vector<std::uint32_t> expect2;
    for (std::uint32_t u = 0; u < 16; ++u)
        for (std::uint32_t v : {0u, 3u}) expect2.push_back((u << 2) | v);
    std::sort(expect2.begin(), expect2.end());
    CHECK(p.s2.points_sorted() == expect2);
}

TEST_CASE("construct_c2_quadruple: violations are named") {
    std::array<BooleanFunction, 4> a = pinned_bent_quadruple();
    std::array<BooleanFunction, 4> d = disjoint_semibent4();

    std::array<BooleanFunction, 4> bad_a = a;
    bad_a[3] = a[3] ^ from_anf(4, "1");  // dual sum becomes 0
    CHECK_THROWS_AS(construct_c2_quadruple(bad_a, d), DualSumNotOne);
    // the broken quadruple really does concatenate to a non-bent function
    std::array<BooleanFunction, 4> quad{BooleanFunction(6), BooleanFunction(6),
                                        BooleanFunction(6), BooleanFunction(6)};
    for (int i = 0; i < 4; ++i) {
        BooleanFunction g = bad_a[i] ^ d[i];
        quad[i] = construct_c1(bad_a[i], g, g, 1);
    }
    CHECK_FALSE(classify(wht(concatenate_4(quad, 0b10000000, 0b01000000))).is_bent());

    std::array<BooleanFunction, 4> bad_d = d;
    bad_d[1] = d[0];
    CHECK_THROWS_AS(construct_c2_quadruple(a, bad_d), SupportsOverlap);
}

TEST_CASE("construct_c3: disjoint plateaued inputs give a 5-valued function") {
    // three 2-plateaued on disjoint 16-point affine supports + one
    // 4-plateaued on a 4-point support, r = 6
    std::vector<OrderedSupport> supports;
    std::vector<BooleanFunction> duals;
    for (std::uint32_t c = 0; c < 3; ++c) {
        std::vector<std::uint32_t> pts;
        for (std::uint32_t e = 0; e < 16; ++e) pts.push_back((c << 4) | e);
        supports.push_back(OrderedSupport::from_points(6, pts));
        duals.push_back(from_anf(4, "x1x2 + x3x4"));
    }
    {
        std::vector<std::uint32_t> pts;
        for (std::uint32_t e = 0; e < 4; ++e) pts.push_back((3u << 4) | e);
        supports.push_back(OrderedSupport::from_points(6, pts));
        duals.push_back(from_bits(2, {0, 0, 0, 1}));
    }
    std::vector<BooleanFunction> h = disjoint_plateaued_family(supports, duals);
    BooleanFunction f = construct_c3({h[0], h[1], h[2], h[3]});
    Classification c = classify(wht(f));
    REQUIRE(c.is_five_valued());
    CHECK(c.exponent_lo == 4);
    CHECK(c.exponent_hi == 5);

    // overlapping supports are rejected
    CHECK_THROWS_AS(construct_c3({h[0], h[0], h[2], h[3]}), ConditionViolated);
    // wrong plateau order is rejected
    CHECK_THROWS_AS(construct_c3({h[0], h[1], h[3], h[2]}), ConditionViolated);
}

TEST_CASE("construct_c3_quadruple: grid instance concatenates bent") {
    // rows p = 1..3: fixed supports A_p shared by all four members, duals
    // bent with dual sum 1; row 4: four disjoint 4-point supports
    std::array<std::array<BooleanFunction, 4>, 4> h;
    BooleanFunction base = from_anf(4, "x1x3 + x2x4");
    std::array<BooleanFunction, 4> bent_duals = {base, base ^ from_anf(4, "x1"),
                                                 base ^ from_anf(4, "x2"),
                                                 base ^ from_anf(4, "1 + x1 + x2")};
    for (int p = 0; p < 3; ++p) {
        std::vector<std::uint32_t> pts;
        for (std::uint32_t e = 0; e < 16; ++e) pts.push_back((std::uint32_t(p) << 4) | e);
        OrderedSupport s = OrderedSupport::from_points(6, pts);
        for (int i = 0; i < 4; ++i) h[p][i] = construct_plateaued(s, bent_duals[i]);
    }
    for (int i = 0; i < 4; ++i) {
        std::vector<std::uint32_t> pts;
        for (std::uint32_t e = 0; e < 4; ++e)
            pts.push_back((3u << 4) | (std::uint32_t(i) << 2) | e);
        h[3][i] = construct_plateaued(OrderedSupport::from_points(6, pts),
                                      from_bits(2, {0, 0, 0, 1}));
    }

    // dual sum 1 per row p: the duals are g, g^x1, g^x2, g^(1+x1+x2) whose
    // duals xor to 1 exactly as in the bent quadruple
    std::array<BooleanFunction, 4> quad = construct_c3_quadruple(h);
    CHECK(verify_5valued_quadruple(quad).pass());
    BooleanFunction concat = concatenate_4(quad, 0b1000000000, 0b0100000000);
    CHECK(classify(wht(concat)).is_bent());

    // break one row's dual sum
    std::array<std::array<BooleanFunction, 4>, 4> bad = h;
    OrderedSupport s0 = ordered_support(wht(h[0][0]), 16);
    bad[0][3] = construct_plateaued(s0, bent_duals[3].complement());
    CHECK_THROWS_AS(construct_c3_quadruple(bad), DualSumNotOne);

    // a shared point between two row-4 supports
    std::array<std::array<BooleanFunction, 4>, 4> bad2 = h;
    bad2[3][1] = h[3][0];
    CHECK_THROWS_AS(construct_c3_quadruple(bad2), SupportsOverlap);
}

TEST_CASE("construct_c4: bent-space case with the worked instance") {
    BooleanFunction a = from_anf(4, "x1x3 + x2x4");
    BooleanFunction h1 = from_anf(4, "x3x4");
    BooleanFunction h2 = from_anf(4, "x2x3");
    BooleanFunction g1 = from_anf(4, "x1x2 + x3x4");
    BooleanFunction g2 = from_anf(4, "x1x3 + x2x4");

    BooleanFunction zeta = c4_zeta(a, h1, h2);
    std::vector<int> zeta_bits;
    for (std::uint32_t x = 0; x < 16; ++x) zeta_bits.push_back(zeta.get(x));
    CHECK(zeta_bits == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1});

    BooleanFunction f = construct_c4(a, h1, h2, g1, g2, C4Case::BentSpace);
    Classification c = classify(wht(f));
    REQUIRE(c.is_five_valued());
    CHECK(c.abs_values == std::vector<std::int64_t>{16, 32});
    CHECK(truth_table_to_anf(f).degree() == 4);

    CHECK_THROWS_AS(
        construct_c4(a, h1, h2, from_anf(4, "x1"), g2, C4Case::BentSpace),
        ConditionViolated);
    // a member of a^<h1,h2> fails to be bent
    CHECK_THROWS_AS(
        construct_c4(a, h1, from_anf(4, "x1x2"), g1, g2, C4Case::BentSpace),
        NotBent);
}

TEST_CASE("construct_c4: plateaued case") {
    BooleanFunction a = from_anf(6, "x1x2");
    BooleanFunction h1 = from_anf(6, "x3x4 + x5");
    BooleanFunction h2 = from_anf(6, "x1x2 + x1x3 + x2x4 + x6");
    BooleanFunction g1 = from_anf(4, "x1x2 + x3x4");
    BooleanFunction g2 = from_anf(4, "x1x3 + x2x4");

    BooleanFunction f = construct_c4(a, h1, h2, g1, g2, C4Case::FourPlateaued);
    Classification c = classify(wht(f));
    REQUIRE(c.is_five_valued());
    CHECK(c.abs_values == std::vector<std::int64_t>{32, 64});

    // overlapping combination spectra are rejected
    CHECK_THROWS_AS(construct_c4(a, from_anf(6, "x3x4"), h2, g1, g2,
                                 C4Case::FourPlateaued),
                    ConditionViolated);
}
