#include "boolspectra/anfcon.hpp"

#include <algorithm>

namespace boolspectra {

CompositeForm::CompositeForm(BooleanFunction form, std::vector<BooleanFunction> coords)
    : form_(std::move(form)), coords_(std::move(coords)) {
    if (coords_.empty())
        throw DimensionMismatch("composite form needs at least one coordinate");
    if (static_cast<int>(coords_.size()) != form_.n())
        throw DimensionMismatch("coordinate count does not match form variables");
    for (const BooleanFunction& h : coords_)
        if (h.n() != coords_[0].n())
            throw DimensionMismatch("coordinates live on different dimensions");
}

BooleanFunction cf_truth_table(const CompositeForm& cf) {
    const int k = cf.k();
    BooleanFunction out(cf.n());
    for (std::uint32_t x = 0; x < out.size(); ++x) {
        std::uint32_t z = 0;
        for (int i = 0; i < k; ++i)
            if (cf.coords()[i].get(x)) z |= 1u << (k - 1 - i);
        out.set(x, cf.form().get(z));
    }
    return out;
}

std::int64_t cf_wht(const CompositeForm& cf, std::uint32_t u) {
    const WalshSpectrum wf = wht(cf.form());
    const int k = cf.k();
    const std::uint32_t size = std::uint32_t{1} << cf.n();
    std::int64_t total = 0;
    for (std::uint32_t w = 0; w < wf.size(); ++w) {
        if (wf.values[w] == 0) continue;
        // W of the component function w.(h_1..h_k) at u
        std::int64_t comp = 0;
        for (std::uint32_t x = 0; x < size; ++x) {
            int bit = dot(u, x);
            for (int i = 0; i < k; ++i)
                if ((w >> (k - 1 - i)) & 1) bit ^= cf.coords()[i].get(x);
            comp += bit ? -1 : 1;
        }
        total += wf.values[w] * comp;
    }
    std::int64_t scale = std::int64_t{1} << k;
    if (total % scale != 0)
        throw Error("composite transform sum not divisible by 2^k");
    return total / scale;
}

std::optional<std::uint32_t> SplitSupport::delta_of(std::uint32_t theta) const {
    std::optional<std::uint32_t> found;
    for (auto [d, th] : entries)
        if (th == theta) {
            if (found) return std::nullopt;  // ambiguous
            found = d;
        }
    return found;
}

bool SplitSupport::theta_present(std::uint32_t theta) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](auto e) { return e.second == theta; });
}

SplitSupport split_support(const WalshSpectrum& form_spectrum, int t) {
    if (t < 1 || t >= form_spectrum.n)
        throw PreconditionError("prefix width t must satisfy 1 <= t < k");
    SplitSupport ss;
    ss.k = form_spectrum.n;
    ss.t = t;
    const int m = ss.k - t;
    for (std::uint32_t w = 0; w < form_spectrum.size(); ++w)
        if (form_spectrum.values[w] != 0)
            ss.entries.push_back({w >> m, w & ((1u << m) - 1)});
    std::vector<std::uint32_t> thetas;
    for (auto [d, th] : ss.entries) thetas.push_back(th);
    std::sort(thetas.begin(), thetas.end());
    ss.theta_unique =
        std::adjacent_find(thetas.begin(), thetas.end()) == thetas.end();
    return ss;
}

BooleanFunction lift_left(const BooleanFunction& f, int extra) {
    BooleanFunction out(f.n() + extra);
    for (std::uint32_t x = 0; x < out.size(); ++x)
        out.set(x, f.get(x >> extra));
    return out;
}

BooleanFunction projection(int n, int var) {
    if (var < 1 || var > n) throw DimensionMismatch("projection index out of range");
    BooleanFunction out(n);
    for (std::uint32_t x = 0; x < out.size(); ++x)
        out.set(x, (x >> (n - var)) & 1);
    return out;
}

static WalshSpectrum split_wht_impl(const CompositeForm& cf, const SplitSupport& ss,
                                    const BooleanFunction* shift) {
    const int k = cf.k();
    const int t = ss.t;
    const int m = ss.m();
    const int n = cf.n();
    const int r = n - m;
    if (ss.k != k) throw ShapeMismatch("split support is for a different form size");
    if (r < 1) throw ShapeMismatch("no x variables left of the y block");

    // last m coordinates must be the y projections, first t must ignore y
    for (int j = 0; j < m; ++j)
        if (!(cf.coords()[t + j] == projection(n, r + 1 + j)))
            throw ShapeMismatch("coordinate " + std::to_string(t + j + 1) +
                                " is not the y" + std::to_string(j + 1) + " projection");
    const std::uint32_t y_count = std::uint32_t{1} << m;
    const std::uint32_t x_count = std::uint32_t{1} << r;
    for (int i = 0; i < t; ++i)
        for (std::uint32_t x = 0; x < x_count; ++x) {
            bool v0 = cf.coords()[i].get(x << m);
            for (std::uint32_t y = 1; y < y_count; ++y)
                if (cf.coords()[i].get((x << m) | y) != v0)
                    throw ShapeMismatch("coordinate " + std::to_string(i + 1) +
                                        " depends on a y variable");
        }
    if (shift && shift->n() != r)
        throw DimensionMismatch("shift term must be a function of x only");

    const WalshSpectrum wf = wht(cf.form());

    // one r-variable transform per distinct delta
    std::vector<std::uint32_t> deltas;
    for (auto [d, th] : ss.entries) deltas.push_back(d);
    std::sort(deltas.begin(), deltas.end());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
    std::vector<std::vector<std::int64_t>> inner(deltas.size());
    for (std::size_t di = 0; di < deltas.size(); ++di) {
        BooleanFunction q(r);
        for (std::uint32_t x = 0; x < x_count; ++x) {
            int bit = shift ? shift->get(x) : 0;
            for (int i = 0; i < t; ++i)
                if ((deltas[di] >> (t - 1 - i)) & 1) bit ^= cf.coords()[i].get(x << m);
            q.set(x, bit);
        }
        inner[di] = wht(q).values;
    }
    auto inner_of = [&](std::uint32_t d) -> const std::vector<std::int64_t>& {
        return inner[std::lower_bound(deltas.begin(), deltas.end(), d) - deltas.begin()];
    };

    WalshSpectrum out;
    out.n = n;
    out.values.assign(std::size_t{1} << n, 0);
    const std::int64_t scale = std::int64_t{1} << t;
    for (std::uint32_t v = 0; v < y_count; ++v) {
        if (!ss.theta_present(v)) continue;  // zero branch
        for (std::uint32_t u = 0; u < x_count; ++u) {
            std::int64_t sum = 0;
            for (auto [d, th] : ss.entries)
                if (th == v) sum += wf.values[(d << m) | v] * inner_of(d)[u];
            if (sum % scale != 0)
                throw Error("split transform sum not divisible by 2^t");
            out.values[(u << m) | v] = sum / scale;
        }
    }
    return out;
}

WalshSpectrum split_wht(const CompositeForm& cf, const SplitSupport& ss) {
    return split_wht_impl(cf, ss, nullptr);
}

WalshSpectrum split_wht(const CompositeForm& cf, const SplitSupport& ss,
                        const BooleanFunction& shift) {
    return split_wht_impl(cf, ss, &shift);
}

static BooleanFunction from_anf(int n, std::initializer_list<std::initializer_list<int>> terms) {
    AnfPolynomial p;
    p.n = n;
    for (auto term : terms) p.monomials.insert(monomial(n, term));
    return anf_to_truth_table(p);
}

const BooleanFunction& form_c1() {
    // x1 ^ (x2^x4)(x3^x5) = x1 ^ x2x3 ^ x2x5 ^ x3x4 ^ x4x5
    static const BooleanFunction f =
        from_anf(5, {{1}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});
    return f;
}

const BooleanFunction& form_c3() {
    // (x2 ^ x2x5 ^ x4x5)x6 ^ x3x5(1^x6) ^ x1(1^x5)(1^x6)
    static const BooleanFunction f = from_anf(
        6, {{2, 6}, {2, 5, 6}, {4, 5, 6}, {3, 5}, {3, 5, 6},
            {1}, {1, 5}, {1, 6}, {1, 5, 6}});
    return f;
}

const BooleanFunction& form_c4() {
    // x1 ^ x5 ^ x3(x2^x4^x5)
    static const BooleanFunction f = from_anf(5, {{1}, {5}, {2, 3}, {3, 4}, {3, 5}});
    return f;
}

static bool is_affine(const BooleanFunction& f) {
    return truth_table_to_anf(f).degree() <= 1;
}

static BooleanFunction dual_of_bent(const BooleanFunction& f, const char* clause) {
    WalshSpectrum w = wht(f);
    if (!classify(w).is_bent()) throw NotBent(clause);
    return dual(w).g;
}

BooleanFunction construct_c1(const BooleanFunction& a, const BooleanFunction& h1,
                             const BooleanFunction& h2, int row) {
    const int r = a.n();
    if (h1.n() != r || h2.n() != r)
        throw DimensionMismatch("a, h1, h2 must share one dimension");
    if (r % 2 != 0) throw PreconditionError("r must be even");

    Classification ca = classify(wht(a));
    auto semi_bent = [&](const BooleanFunction& f) {
        return classify(wht(f)).is_semi_bent();
    };
    switch (row) {
        case 1:
            if (!ca.is_bent()) throw ConditionViolated("a not bent");
            if (!(h1 == h2)) throw ConditionViolated("h1 != h2");
            if (!semi_bent(a ^ h1)) throw ConditionViolated("a^g not semi-bent");
            break;
        case 2:
            if (!ca.is_bent()) throw ConditionViolated("a not bent");
            if (!is_affine(h1)) throw ConditionViolated("h1 not affine");
            if (!semi_bent(a ^ h2)) throw ConditionViolated("a^h2 not semi-bent");
            break;
        case 3:
            if (!ca.is_five_valued()) throw ConditionViolated("a not 5-valued");
            if (!is_affine(h1)) throw ConditionViolated("h1 not affine");
            if (!is_affine(h2)) throw ConditionViolated("h2 not affine");
            break;
        case 4: {
            if (!ca.is_five_valued()) throw ConditionViolated("a not 5-valued");
            if (!is_affine(h1)) throw ConditionViolated("h1 not affine");
            Classification ch = classify(wht(a ^ h2));
            if (!ch.is_semi_bent() && !ch.is_bent())
                throw ConditionViolated("a^h2 not semi-bent or bent");
            break;
        }
        default:
            throw PreconditionError("row must be 1..4");
    }

    const int n = r + 2;
    BooleanFunction out(n);
    for (std::uint32_t i = 0; i < out.size(); ++i) {
        std::uint32_t x = i >> 2;
        bool y1 = (i >> 1) & 1, y2 = i & 1;
        out.set(i, a.get(x) ^ ((h1.get(x) ^ y1) & (h2.get(x) ^ y2)));
    }
    if (row >= 3) {
        // rows with a 5-valued a carry no amplitude guarantee
        if (!classify(wht(out)).is_five_valued())
            throw ConditionViolated("result not 5-valued");
    }
    return out;
}

std::array<BooleanFunction, 4> construct_c2_quadruple(
    const std::array<BooleanFunction, 4>& a, const std::array<BooleanFunction, 4>& d) {
    const int r = a[0].n();
    if (r % 2 != 0 || r < 4) throw PreconditionError("r must be even and >= 4");

    BooleanFunction dual_sum(r);
    std::array<OrderedSupport, 4> supports;
    for (int i = 0; i < 4; ++i) {
        if (a[i].n() != r || d[i].n() != r)
            throw DimensionMismatch("all inputs must share one dimension");
        dual_sum = dual_sum ^ dual_of_bent(a[i], "a_i not bent");
        WalshSpectrum wd = wht(d[i]);
        if (!classify(wd).is_semi_bent())
            throw ConditionViolated("d_" + std::to_string(i + 1) + " not semi-bent");
        supports[i] = ordered_support(wd, std::int64_t{1} << ((r + 2) / 2));
    }
    if (dual_sum.weight() != dual_sum.size())
        throw DualSumNotOne("a*_1^a*_2^a*_3^a*_4 != 1");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!supports[i].disjoint_from(supports[j]))
                throw SupportsOverlap("d_" + std::to_string(i + 1) + " and d_" +
                                      std::to_string(j + 1) + " share a support point");

    std::array<BooleanFunction, 4> out{BooleanFunction(r + 2), BooleanFunction(r + 2),
                                       BooleanFunction(r + 2), BooleanFunction(r + 2)};
    for (int i = 0; i < 4; ++i) {
        BooleanFunction g = a[i] ^ d[i];
        out[i] = construct_c1(a[i], g, g, 1);
    }
    return out;
}

BooleanFunction construct_c3(const std::array<BooleanFunction, 4>& h) {
    const int r = h[0].n();
    if (r % 2 != 0 || r < 6) throw PreconditionError("r must be even and >= 6");
    std::array<OrderedSupport, 4> supports;
    for (int i = 0; i < 4; ++i) {
        if (h[i].n() != r) throw DimensionMismatch("h_i must share one dimension");
        Classification c = classify(wht(h[i]));
        int want = i < 3 ? 2 : 4;
        if (!c.is_plateaued(want))
            throw ConditionViolated("h_" + std::to_string(i + 1) + " not " +
                                    std::to_string(want) + "-plateaued");
        supports[i] = ordered_support(wht(h[i]), std::int64_t{1} << ((r + c.s) / 2));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!supports[i].disjoint_from(supports[j]))
                throw ConditionViolated("h_" + std::to_string(i + 1) + " and h_" +
                                        std::to_string(j + 1) + " spectra overlap");

    std::vector<BooleanFunction> coords;
    for (int i = 0; i < 4; ++i) coords.push_back(lift_left(h[i], 2));
    coords.push_back(projection(r + 2, r + 1));
    coords.push_back(projection(r + 2, r + 2));
    return cf_truth_table(CompositeForm(form_c3(), std::move(coords)));
}

std::array<BooleanFunction, 4> construct_c3_quadruple(
    const std::array<std::array<BooleanFunction, 4>, 4>& h) {
    const int r = h[0][0].n();
    // columns i satisfy the single-instance conditions (checked inside
    // construct_c3 below); here: equal supports + dual sum per row p <= 3,
    // pairwise disjoint h[3][i] across i
    for (int p = 0; p < 3; ++p) {
        OrderedSupport first =
            ordered_support(wht(h[p][0]), std::int64_t{1} << ((r + 2) / 2));
        BooleanFunction sum(first.rank());
        for (int i = 0; i < 4; ++i) {
            WalshSpectrum w = wht(h[p][i]);
            if (!classify(w).is_plateaued(2))
                throw ConditionViolated("h_" + std::to_string(p + 1) + "," +
                                        std::to_string(i + 1) + " not 2-plateaued");
            OrderedSupport s = ordered_support(w, std::int64_t{1} << ((r + 2) / 2));
            if (!(s.points_sorted() == first.points_sorted()))
                throw ConditionViolated("row " + std::to_string(p + 1) +
                                        " supports differ");
            sum = sum ^ dual_on(w, first).g;
        }
        if (sum.weight() != sum.size())
            throw DualSumNotOne("row " + std::to_string(p + 1) + " dual sum != 1");
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            OrderedSupport si =
                ordered_support(wht(h[3][i]), std::int64_t{1} << ((r + 4) / 2));
            OrderedSupport sj =
                ordered_support(wht(h[3][j]), std::int64_t{1} << ((r + 4) / 2));
            if (!si.disjoint_from(sj))
                throw SupportsOverlap("h_4," + std::to_string(i + 1) + " and h_4," +
                                      std::to_string(j + 1) + " share a support point");
        }

    std::array<BooleanFunction, 4> out{BooleanFunction(r + 2), BooleanFunction(r + 2),
                                       BooleanFunction(r + 2), BooleanFunction(r + 2)};
    for (int i = 0; i < 4; ++i)
        out[i] = construct_c3({h[0][i], h[1][i], h[2][i], h[3][i]});
    return out;
}

BooleanFunction c4_zeta(const BooleanFunction& a, const BooleanFunction& h1,
                        const BooleanFunction& h2) {
    BooleanFunction zeta = dual_of_bent(a, "a not bent");
    zeta = zeta ^ dual_of_bent(a ^ h1, "a^h1 not bent");
    zeta = zeta ^ dual_of_bent(a ^ h2, "a^h2 not bent");
    zeta = zeta ^ dual_of_bent(a ^ h1 ^ h2, "a^h1^h2 not bent");
    return zeta;
}

BooleanFunction construct_c4(const BooleanFunction& a, const BooleanFunction& h1,
                             const BooleanFunction& h2, const BooleanFunction& g1,
                             const BooleanFunction& g2, C4Case which) {
    const int r = a.n();
    const int m = g1.n();
    if (h1.n() != r || h2.n() != r)
        throw DimensionMismatch("a, h1, h2 must share one dimension");
    if (g2.n() != m) throw DimensionMismatch("g1, g2 must share one dimension");
    if (r % 2 != 0 || m % 2 != 0) throw PreconditionError("r and m must be even");
    if (!classify(wht(g1)).is_bent()) throw ConditionViolated("g1 not bent");
    if (!classify(wht(g2)).is_bent()) throw ConditionViolated("g2 not bent");

    if (which == C4Case::BentSpace) {
        c4_zeta(a, h1, h2);  // throws NotBent naming the non-bent member
    } else {
        if (r < 6) throw PreconditionError("r must be >= 6 for the plateaued case");
        std::vector<OrderedSupport> supports;
        for (int c1 = 0; c1 < 2; ++c1)
            for (int c2 = 0; c2 < 2; ++c2) {
                BooleanFunction q = a;
                if (c1) q = q ^ h1;
                if (c2) q = q ^ h2;
                WalshSpectrum w = wht(q);
                Classification c = classify(w);
                int want = (c1 == 0 && c2 == 0) ? 4 : 2;
                if (!c.is_plateaued(want))
                    throw ConditionViolated("a^" + std::to_string(c1) + "h1^" +
                                            std::to_string(c2) + "h2 not " +
                                            std::to_string(want) + "-plateaued");
                supports.push_back(ordered_support(w, std::int64_t{1} << ((r + c.s) / 2)));
            }
        for (std::size_t i = 0; i < supports.size(); ++i)
            for (std::size_t j = i + 1; j < supports.size(); ++j)
                if (!supports[i].disjoint_from(supports[j]))
                    throw SupportsOverlap("the a^c1h1^c2h2 spectra overlap");
    }

    std::vector<BooleanFunction> coords = {lift_left(a, m), lift_left(h1, m),
                                           lift_left(h2, m)};
    {
        // g1, g2 act on the y block
        BooleanFunction lifted1(r + m), lifted2(r + m);
        const std::uint32_t y_mask = (std::uint32_t{1} << m) - 1;
        for (std::uint32_t x = 0; x < lifted1.size(); ++x) {
            lifted1.set(x, g1.get(x & y_mask));
            lifted2.set(x, g2.get(x & y_mask));
        }
        coords.push_back(std::move(lifted1));
        coords.push_back(std::move(lifted2));
    }
    BooleanFunction out = cf_truth_table(CompositeForm(form_c4(), std::move(coords)));
    if (!classify(wht(out)).is_five_valued())
        throw ConditionViolated("result not 5-valued");
    return out;
}

std::vector<BooleanFunction> disjoint_plateaued_family(
    const std::vector<OrderedSupport>& supports,
    const std::vector<BooleanFunction>& duals) {
    if (supports.size() != duals.size())
        throw DimensionMismatch("one dual per support required");
    for (std::size_t i = 0; i < supports.size(); ++i)
        for (std::size_t j = i + 1; j < supports.size(); ++j)
            if (!supports[i].disjoint_from(supports[j]))
                throw SupportsOverlap("supports " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " intersect");
    std::vector<BooleanFunction> out;
    out.reserve(supports.size());
    for (std::size_t i = 0; i < supports.size(); ++i)
        out.push_back(construct_plateaued(supports[i], duals[i]));
    return out;
}

}  // namespace boolspectra
