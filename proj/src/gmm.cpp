#include "boolspectra/gmm.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace boolspectra {

std::vector<std::uint32_t> GmmSpec::image0() const {
    std::vector<std::uint32_t> out;
    for (auto [k, v] : phi0) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> GmmSpec::image1() const {
    std::vector<std::uint32_t> out;
    for (auto [k, v] : phi1) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

void validate_gmm(const GmmSpec& spec) {
    const int n = spec.n, s = spec.s, t = spec.t;
    if (n < 2 || n > max_variables())
        throw PreconditionError("n out of range");
    if (s < 1 || s > n / 2) throw PreconditionError("s must satisfy 1 <= s <= n/2");
    if (t < 0 || t > n / 2) throw PreconditionError("t must satisfy 0 <= t <= n/2");
    if (n - s - t < 1) throw PreconditionError("phi1 codomain F2^(n-s-t) is empty");

    const std::uint32_t prefixes = std::uint32_t{1} << s;
    std::set<std::uint32_t> e0_set(spec.e0.begin(), spec.e0.end());
    if (e0_set.size() != spec.e0.size())
        throw PreconditionError("E0 has duplicate entries");
    for (std::uint32_t e : spec.e0)
        if (e >= prefixes) throw DimensionMismatch("E0 entry does not fit in s bits");

    // domains exactly E0 and comp(E0) x F2^t
    if (spec.phi0.size() != e0_set.size())
        throw PreconditionError("phi0 domain is not exactly E0");
    for (auto [k, v] : spec.phi0) {
        if (!e0_set.count(k)) throw PreconditionError("phi0 key outside E0");
        if (v >= (std::uint32_t{1} << (n - s)))
            throw DimensionMismatch("phi0 image does not fit in n-s bits");
    }
    std::size_t e1_size = (prefixes - e0_set.size()) << t;
    if (spec.phi1.size() != e1_size)
        throw PreconditionError("phi1 domain is not exactly comp(E0) x F2^t");
    for (auto [k, v] : spec.phi1) {
        if (k >= (std::uint32_t{1} << (s + t)) || e0_set.count(k >> t))
            throw PreconditionError("phi1 key outside comp(E0) x F2^t");
        if (v >= (std::uint32_t{1} << (n - s - t)))
            throw DimensionMismatch("phi1 image does not fit in n-s-t bits");
    }

    auto injective = [](const std::map<std::uint32_t, std::uint32_t>& m) {
        std::set<std::uint32_t> seen;
        for (auto [k, v] : m)
            if (!seen.insert(v).second) return false;
        return true;
    };
    if (!injective(spec.phi0)) throw NotInjective("phi0 repeats an image point");
    if (!injective(spec.phi1)) throw NotInjective("phi1 repeats an image point");

    std::vector<std::uint32_t> t1 = spec.image1();
    if (spec.case_a()) {
        const std::uint32_t suffix_mask = (std::uint32_t{1} << (n - s - t)) - 1;
        for (auto [k, v] : spec.phi0)
            if (std::binary_search(t1.begin(), t1.end(), v & suffix_mask))
                throw CaseConditionViolated(
                    "case a: a phi0 image has its n-s-t suffix inside T1");
    } else {
        std::vector<std::uint32_t> t0 = spec.image0();
        bool overlap = false;
        for (std::uint32_t v : t0)
            if (std::binary_search(t1.begin(), t1.end(), v)) {
                overlap = true;
                break;
            }
        if (!overlap) throw CaseConditionViolated("case b: T0 and T1 are disjoint");
        if (t0 == t1) throw CaseConditionViolated("case b: T0 equals T1");
    }
}

GmmResult build_gmm(const GmmSpec& spec) {
    validate_gmm(spec);
    const int n = spec.n, s = spec.s, t = spec.t;
    std::set<std::uint32_t> e0_set(spec.e0.begin(), spec.e0.end());
    BooleanFunction f(n);
    const std::uint32_t suffix0_mask = (std::uint32_t{1} << (n - s)) - 1;
    const std::uint32_t suffix1_mask = (std::uint32_t{1} << (n - s - t)) - 1;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        std::uint32_t prefix = x >> (n - s);
        if (e0_set.count(prefix)) {
            f.set(x, dot(spec.phi0.at(prefix), x & suffix0_mask));
        } else {
            std::uint32_t prefix2 = x >> (n - s - t);
            f.set(x, dot(spec.phi1.at(prefix2), x & suffix1_mask));
        }
    }
    GmmResult out{f, {}, {}};
    WalshSpectrum w = wht(f);
    std::set<std::int64_t> realized(w.values.begin(), w.values.end());
    out.realized_values.assign(realized.begin(), realized.end());
    std::int64_t big = std::int64_t{1} << (n - s);
    std::int64_t small = spec.case_a() ? std::int64_t{1} << (n - s - t)
                                       : std::int64_t{1} << (n - s + 1);
    out.guaranteed_values = {-std::max(big, small), -std::min(big, small), 0,
                             std::min(big, small), std::max(big, small)};
    return out;
}

std::pair<std::int64_t, std::int64_t> gmm_partial_sums(const GmmSpec& spec,
                                                       std::uint32_t omega) {
    const int n = spec.n, s = spec.s, t = spec.t;
    const std::uint32_t suffix0 = omega & ((std::uint32_t{1} << (n - s)) - 1);
    const std::uint32_t suffix1 = omega & ((std::uint32_t{1} << (n - s - t)) - 1);
    std::int64_t s1 = 0, s2 = 0;
    for (auto [k, v] : spec.phi0)
        if (v == suffix0)
            s1 = (dot(omega >> (n - s), k) ? -1 : 1) * (std::int64_t{1} << (n - s));
    for (auto [k, v] : spec.phi1)
        if (v == suffix1)
            s2 = (dot(omega >> (n - s - t), k) ? -1 : 1) * (std::int64_t{1} << (n - s - t));
    return {s1, s2};
}

int gmm_resiliency_bound(const GmmSpec& spec) {
    int m0 = spec.n, m1 = spec.n;
    for (std::uint32_t v : spec.image0()) m0 = std::min(m0, hamming_weight(v));
    for (std::uint32_t v : spec.image1()) m1 = std::min(m1, hamming_weight(v));
    return std::min(m0, m1);
}

// points of F2^width with weight >= min_weight, ascending
static std::vector<std::uint32_t> weighted_points(int width, int min_weight) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << width); ++v)
        if (hamming_weight(v) >= min_weight) out.push_back(v);
    return out;
}

static GmmSpec make_spec(int n, int s, int t, std::uint32_t e0_size, int min_weight,
                         std::mt19937_64* rng) {
    if (s < 1 || s > n / 2 || t < 0 || t > n / 2 || n - s - t < 1)
        throw PreconditionError("invalid widths");
    const std::uint32_t prefixes = std::uint32_t{1} << s;
    if (e0_size < 1 || e0_size >= prefixes)
        throw Infeasible("need 1 <= |E0| < 2^s so both branches are populated");

    GmmSpec spec;
    spec.n = n;
    spec.s = s;
    spec.t = t;
    for (std::uint32_t e = 0; e < e0_size; ++e) spec.e0.push_back(e);
    const std::size_t e1_size = std::size_t{prefixes - e0_size} << t;

    if (t != 0) {
        // phi1 first; phi0 images must avoid F2^t x T1
        std::vector<std::uint32_t> pool1 = weighted_points(n - s - t, min_weight);
        if (pool1.size() < e1_size)
            throw Infeasible("not enough weight-qualified points for phi1");
        if (rng) std::shuffle(pool1.begin(), pool1.end(), *rng);
        std::set<std::uint32_t> t1;
        std::size_t idx = 0;
        for (std::uint32_t p = e0_size; p < prefixes; ++p)
            for (std::uint32_t z = 0; z < (std::uint32_t{1} << t); ++z) {
                spec.phi1[(p << t) | z] = pool1[idx];
                t1.insert(pool1[idx]);
                ++idx;
            }
        std::vector<std::uint32_t> pool0;
        const std::uint32_t suffix_mask = (std::uint32_t{1} << (n - s - t)) - 1;
        for (std::uint32_t v : weighted_points(n - s, min_weight))
            if (!t1.count(v & suffix_mask)) pool0.push_back(v);
        if (pool0.size() < e0_size)
            throw Infeasible("not enough weight-qualified points for phi0 outside F2^t x T1");
        if (rng) std::shuffle(pool0.begin(), pool0.end(), *rng);
        for (std::uint32_t e = 0; e < e0_size; ++e) spec.phi0[e] = pool0[e];
    } else {
        // case b: one deliberate image collision plus a guaranteed difference
        if (e0_size < 2 && e1_size < 2)
            throw Infeasible("case b needs T0 != T1, so one side must have >= 2 points");
        std::vector<std::uint32_t> pool = weighted_points(n - s, min_weight);
        if (pool.size() < e0_size + e1_size - 1)
            throw Infeasible("not enough weight-qualified points for both images");
        if (rng) std::shuffle(pool.begin(), pool.end(), *rng);
        for (std::uint32_t e = 0; e < e0_size; ++e) spec.phi0[e] = pool[e];
        spec.phi1[e0_size] = pool[0];  // shared image point
        std::size_t idx = e0_size;     // continue with unused points
        std::uint32_t k = e0_size + 1;
        for (; k < prefixes; ++k) spec.phi1[k] = pool[idx++];
    }
    validate_gmm(spec);
    return spec;
}

GmmSpec gmm_default_maps(int n, int s, int t, std::uint32_t e0_size, int min_weight) {
    return make_spec(n, s, t, e0_size, min_weight, nullptr);
}

GmmSpec random_gmm_spec(int n, int s, int t, std::uint32_t e0_size, int min_weight,
                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return make_spec(n, s, t, e0_size, min_weight, &rng);
}

}  // namespace boolspectra
