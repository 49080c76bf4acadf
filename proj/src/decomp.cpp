#include "boolspectra/decomp.hpp"

#include <algorithm>

namespace boolspectra {

static std::vector<std::uint32_t> reduce_basis(std::span<const std::uint32_t> vectors) {
    std::uint32_t slot[32] = {0};
    std::vector<std::uint32_t> basis;
    for (std::uint32_t v : vectors) {
        while (v) {
            int k = 31 - std::countl_zero(v);
            if (!slot[k]) {
                slot[k] = v;
                basis.push_back(v);
                break;
            }
            v ^= slot[k];
        }
    }
    return basis;
}

std::vector<std::uint32_t> span_f2(int n, std::span<const std::uint32_t> vectors) {
    for (std::uint32_t v : vectors)
        if (v >= (std::uint32_t{1} << n))
            throw DimensionMismatch("vector does not fit in n bits");
    std::vector<std::uint32_t> basis = reduce_basis(vectors);
    std::vector<std::uint32_t> out{0};
    for (std::uint32_t b : basis) {
        std::size_t old = out.size();
        for (std::size_t i = 0; i < old; ++i) out.push_back(out[i] ^ b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> orthogonal_complement(int n,
                                                 std::span<const std::uint32_t> vectors) {
    std::vector<std::uint32_t> basis = reduce_basis(vectors);
    for (std::uint32_t v : vectors)
        if (v >= (std::uint32_t{1} << n))
            throw DimensionMismatch("vector does not fit in n bits");
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
        bool ok = true;
        for (std::uint32_t b : basis)
            if (dot(x, b)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;  // ascending by construction
}

BooleanFunction restrict_to_coset(const BooleanFunction& f,
                                  std::span<const std::uint32_t> subspace,
                                  std::uint32_t rep) {
    std::size_t sz = subspace.size();
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw DimensionMismatch("subspace enumeration length is not a power of two");
    if (!std::is_sorted(subspace.begin(), subspace.end()))
        throw PreconditionError("subspace must be lexicographically enumerated");
    if (rep != 0 && std::binary_search(subspace.begin(), subspace.end(), rep))
        throw PreconditionError("coset representative lies inside the subspace");
    int k = std::countr_zero(sz);
    if (k == 0) throw PreconditionError("one-point subspace has no variables");
    BooleanFunction g(k);
    for (std::size_t i = 0; i < sz; ++i)
        g.set(static_cast<std::uint32_t>(i), f.get(rep ^ subspace[i]));
    return g;
}

// V and a transversal subspace Q = {0, q1, q2, q1^q2}. Uses (alpha, beta)
// directly when <alpha,beta> meets V only in 0; otherwise falls back to the
// minimal transversal (over F2 a pair can lie inside its own orthogonal
// complement).
struct Frame {
    std::vector<std::uint32_t> subspace;
    std::array<std::uint32_t, 4> reps;
};

static Frame decomposition_frame(int n, std::uint32_t alpha, std::uint32_t beta) {
    if (alpha == 0 || beta == 0 || alpha == beta)
        throw PreconditionError("alpha and beta must be distinct and nonzero");
    if (alpha >= (std::uint32_t{1} << n) || beta >= (std::uint32_t{1} << n))
        throw DimensionMismatch("alpha or beta does not fit in n bits");
    Frame fr;
    std::uint32_t gens[2] = {alpha, beta};
    fr.subspace = orthogonal_complement(n, gens);
    auto in_v = [&](std::uint32_t x) {
        return std::binary_search(fr.subspace.begin(), fr.subspace.end(), x);
    };
    if (!in_v(alpha) && !in_v(beta) && !in_v(alpha ^ beta)) {
        fr.reps = {0, alpha, beta, alpha ^ beta};
        return fr;
    }
    std::uint32_t q1 = 0, q2 = 0;
    for (std::uint32_t x = 1; x < (std::uint32_t{1} << n) && !q2; ++x) {
        if (in_v(x)) continue;
        if (!q1) {
            q1 = x;
            continue;
        }
        if (x != q1 && !in_v(x ^ q1)) q2 = x;
    }
    fr.reps = {0, q1, q2, q1 ^ q2};
    return fr;
}

static std::array<OrderedSupport, 4> supports_at(const std::array<BooleanFunction, 4>& f,
                                                 std::int64_t amplitude) {
    return {ordered_support(wht(f[0]), amplitude), ordered_support(wht(f[1]), amplitude),
            ordered_support(wht(f[2]), amplitude), ordered_support(wht(f[3]), amplitude)};
}

QuadrupleReport verify_5valued_quadruple(const std::array<BooleanFunction, 4>& f) {
    const int m = f[0].n();
    if (m % 2 != 0) throw WrongSpectralShape("quadruple members need even dimension");
    std::array<WalshSpectrum, 4> w = {wht(f[0]), wht(f[1]), wht(f[2]), wht(f[3])};
    for (int i = 0; i < 4; ++i) {
        if (f[i].n() != m)
            throw DimensionMismatch("quadruple members must share one dimension");
        Classification c = classify(w[i]);
        if (!c.is_five_valued() || c.exponent_lo != m / 2 || c.exponent_hi != m / 2 + 1)
            throw WrongSpectralShape("member " + std::to_string(i + 1) +
                                     " is not 5-valued with |W| in {0, 2^(m/2), 2^(m/2+1)}");
    }
    const std::int64_t hi = std::int64_t{1} << (m / 2 + 1);
    const std::int64_t lo = std::int64_t{1} << (m / 2);

    QuadrupleReport report;
    std::array<OrderedSupport, 4> s1 = {ordered_support(w[0], hi), ordered_support(w[1], hi),
                                        ordered_support(w[2], hi), ordered_support(w[3], hi)};
    report.s1_pairwise_disjoint = true;
    for (int i = 0; i < 4 && report.s1_pairwise_disjoint; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!s1[i].disjoint_from(s1[j])) {
                report.s1_pairwise_disjoint = false;
                break;
            }

    std::array<OrderedSupport, 4> s2 = {ordered_support(w[0], lo), ordered_support(w[1], lo),
                                        ordered_support(w[2], lo), ordered_support(w[3], lo)};
    std::vector<std::uint32_t> common = s2[0].points_sorted();
    report.s2_all_equal = true;
    for (int i = 1; i < 4; ++i)
        if (s2[i].points_sorted() != common) {
            report.s2_all_equal = false;
            break;
        }

    // sign product on the common support: (-1)^(sum of duals) == -1 pointwise
    if (report.s2_all_equal) {
        report.dual_sum_one = true;
        for (std::uint32_t point : common) {
            std::int64_t prod = 1;
            for (int i = 0; i < 4; ++i) prod *= w[i].values[point] / lo;
            if (prod != -1) {
                report.dual_sum_one = false;
                break;
            }
        }
    }
    return report;
}

Decomposition four_decompose(const BooleanFunction& f, std::uint32_t alpha,
                             std::uint32_t beta) {
    const int n = f.n();
    if (n < 4 || n % 2 != 0)
        throw PreconditionError("decomposition needs bent input (even n >= 4)");
    if (!classify(wht(f)).is_bent()) throw NotBent("input not bent");

    Frame fr = decomposition_frame(n, alpha, beta);
    Decomposition dec;
    dec.n = n;
    dec.alpha = alpha;
    dec.beta = beta;
    dec.subspace = fr.subspace;
    dec.coset_reps = fr.reps;
    for (int i = 0; i < 4; ++i) {
        dec.restrictions[i] = restrict_to_coset(f, fr.subspace, fr.reps[i]);
        dec.classes[i] = classify(wht(dec.restrictions[i]));
    }

    const int m = n - 2;
    auto all = [&](auto pred) {
        return pred(dec.classes[0]) && pred(dec.classes[1]) && pred(dec.classes[2]) &&
               pred(dec.classes[3]);
    };
    if (all([](const Classification& c) { return c.is_bent(); })) {
        dec.kind = DecompositionKind::Bent4;
        BooleanFunction sum(m);
        for (int i = 0; i < 4; ++i) sum = sum ^ dual(wht(dec.restrictions[i])).g;
        dec.dual_sum_one = sum.weight() == sum.size();
    } else if (all([](const Classification& c) { return c.is_semi_bent(); })) {
        dec.kind = DecompositionKind::SemiBent4;
        std::array<OrderedSupport, 4> s =
            supports_at(dec.restrictions, std::int64_t{1} << ((m + 2) / 2));
        dec.pairwise_disjoint = true;
        for (int i = 0; i < 4 && dec.pairwise_disjoint; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!s[i].disjoint_from(s[j])) {
                    dec.pairwise_disjoint = false;
                    break;
                }
    } else if (all([&](const Classification& c) {
                   return c.is_five_valued() && c.exponent_lo == m / 2 &&
                          c.exponent_hi == m / 2 + 1;
               })) {
        dec.kind = DecompositionKind::FiveValued4;
        dec.quadruple = verify_5valued_quadruple(dec.restrictions);
    } else {
        throw TrichotomyViolated(
            "restrictions of a bent function are not uniformly bent, semi-bent or "
            "5-valued: implementation bug");
    }
    return dec;
}

BooleanFunction concatenate_4(const std::array<BooleanFunction, 4>& f,
                              std::uint32_t alpha, std::uint32_t beta) {
    const int m = f[0].n();
    for (const BooleanFunction& fi : f)
        if (fi.n() != m) throw DimensionMismatch("pieces must share one dimension");
    const int n = m + 2;
    Frame fr = decomposition_frame(n, alpha, beta);
    if (fr.subspace.size() != (std::size_t{1} << m))
        throw DimensionMismatch("alpha, beta must be independent");
    BooleanFunction out(n);
    for (int q = 0; q < 4; ++q)
        for (std::size_t i = 0; i < fr.subspace.size(); ++i)
            out.set(fr.reps[q] ^ fr.subspace[i],
                    f[q].get(static_cast<std::uint32_t>(i)));
    return out;
}

}  // namespace boolspectra
