#include "boolspectra/support.hpp"

#include <algorithm>

namespace boolspectra {

int OrderedSupport::rank() const {
    std::size_t sz = size();
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw SupportNotPowerOfTwo("support size " + std::to_string(sz) +
                                   " is not a power of two");
    return std::countr_zero(sz);
}

std::vector<std::uint32_t> OrderedSupport::points_sorted() const {
    std::vector<std::uint32_t> pts;
    pts.reserve(size());
    for (std::uint32_t e : offsets) pts.push_back(v ^ e);
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool OrderedSupport::contains(std::uint32_t point) const {
    return std::binary_search(offsets.begin(), offsets.end(), point ^ v);
}

bool OrderedSupport::disjoint_from(const OrderedSupport& other) const {
    for (std::uint32_t e : offsets)
        if (other.contains(v ^ e)) return false;
    return true;
}

// E (distinct, containing 0) is a subspace iff |E| == |span(E)|.
static bool closed_under_xor(const std::vector<std::uint32_t>& offsets) {
    if (offsets.empty() || (offsets.size() & (offsets.size() - 1)) != 0) return false;
    std::uint32_t basis[32] = {0};
    std::size_t rank = 0;
    for (std::uint32_t e : offsets) {
        while (e) {
            int k = 31 - std::countl_zero(e);
            if (!basis[k]) {
                basis[k] = e;
                ++rank;
                break;
            }
            e ^= basis[k];
        }
    }
    return (std::size_t{1} << rank) == offsets.size();
}

OrderedSupport OrderedSupport::from_points(int n, std::vector<std::uint32_t> points) {
    if (points.empty()) throw EmptySupport("support set is empty");
    std::uint32_t base = *std::min_element(points.begin(), points.end());
    return from_points_with_base(n, base, std::move(points));
}

OrderedSupport OrderedSupport::from_points_with_base(int n, std::uint32_t v,
                                                     std::vector<std::uint32_t> points) {
    if (points.empty()) throw EmptySupport("support set is empty");
    OrderedSupport s;
    s.n = n;
    s.v = v;
    s.offsets.reserve(points.size());
    bool base_seen = false;
    for (std::uint32_t p : points) {
        if (p >= (std::uint32_t{1} << n))
            throw DimensionMismatch("support point does not fit in n bits");
        if (p == v) base_seen = true;
        s.offsets.push_back(p ^ v);
    }
    if (!base_seen) throw PreconditionError("base point is not in the support set");
    std::sort(s.offsets.begin(), s.offsets.end());
    if (std::adjacent_find(s.offsets.begin(), s.offsets.end()) != s.offsets.end())
        throw PreconditionError("support set has duplicate points");
    s.is_affine = closed_under_xor(s.offsets);
    return s;
}

OrderedSupport ordered_support(const WalshSpectrum& w, std::int64_t amplitude) {
    if (amplitude <= 0) throw PreconditionError("amplitude must be positive");
    std::vector<std::uint32_t> pts;
    for (std::uint32_t u = 0; u < w.size(); ++u)
        if (w.values[u] == amplitude || w.values[u] == -amplitude) pts.push_back(u);
    if (pts.empty())
        throw EmptySupport("no spectrum value has absolute value " +
                           std::to_string(amplitude));
    return OrderedSupport::from_points(w.n, std::move(pts));
}

static DualFunction dual_at(const WalshSpectrum& w, const OrderedSupport& s) {
    DualFunction d;
    d.support = s;
    if (s.rank() == 0)
        throw PreconditionError("single-point support: the dual has no variables");
    d.g = BooleanFunction(s.rank());
    for (std::size_t j = 0; j < s.size(); ++j) {
        std::int64_t value = w.values[s.omega(j)];
        if (value == 0)
            throw PreconditionError("support contains a zero of the spectrum");
        if (value < 0) d.g.set(static_cast<std::uint32_t>(j), true);
    }
    return d;
}

DualFunction dual(const WalshSpectrum& w) {
    Classification c = classify(w);
    std::int64_t amplitude;
    if (c.is_bent())
        amplitude = std::int64_t{1} << (w.n / 2);
    else if (c.is_plateaued())
        amplitude = std::int64_t{1} << ((w.n + c.s) / 2);
    else
        throw NotPlateaued("dual is defined for bent and plateaued spectra only");
    return dual_at(w, ordered_support(w, amplitude));
}

DualFunction dual_on(const WalshSpectrum& w, const OrderedSupport& s) {
    return dual_at(w, s);
}

BooleanFunction signs_along(const WalshSpectrum& w, std::span<const std::uint32_t> omegas) {
    std::size_t sz = omegas.size();
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw SupportNotPowerOfTwo("ordered support length is not a power of two");
    BooleanFunction g(std::countr_zero(sz));
    for (std::size_t j = 0; j < sz; ++j) {
        std::int64_t value = w.values[omegas[j]];
        if (value == 0)
            throw PreconditionError("ordering contains a zero of the spectrum");
        if (value < 0) g.set(static_cast<std::uint32_t>(j), true);
    }
    return g;
}

FiveValuedProfile five_valued_profile(const WalshSpectrum& w) {
    Classification c = classify(w);
    if (!c.is_five_valued())
        throw NotFiveValued("spectrum does not take exactly two nonzero amplitudes plus zero");
    FiveValuedProfile p;
    p.c1 = std::int64_t{1} << c.exponent_hi;
    p.c2 = std::int64_t{1} << c.exponent_lo;
    p.s1 = ordered_support(w, p.c1);
    p.s2 = ordered_support(w, p.c2);
    p.s1.rank();  // both must be powers of two for the duals to exist
    p.s2.rank();
    p.d1 = dual_at(w, p.s1);
    p.d2 = dual_at(w, p.s2);
    return p;
}

static SequenceProfile profile_from_omegas(int n, std::span<const std::uint32_t> omegas) {
    std::size_t sz = omegas.size();
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw SupportNotPowerOfTwo("support size is not a power of two");
    if (sz == 1)
        throw PreconditionError("single-point support: the profile has no variables");
    SequenceProfile p;
    p.n = n;
    p.m = std::countr_zero(sz);
    p.generators.reserve(n);
    for (int bit = 0; bit < n; ++bit) {
        BooleanFunction gen(p.m);
        for (std::size_t j = 0; j < sz; ++j)
            if ((omegas[j] >> (n - 1 - bit)) & 1) gen.set(static_cast<std::uint32_t>(j), true);
        p.generators.push_back(std::move(gen));
    }
    return p;
}

SequenceProfile sequence_profile(const OrderedSupport& s) {
    std::vector<std::uint32_t> omegas;
    omegas.reserve(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) omegas.push_back(s.omega(j));
    return profile_from_omegas(s.n, omegas);
}

SequenceProfile sequence_profile(int n, std::span<const std::uint32_t> omegas) {
    return profile_from_omegas(n, omegas);
}

std::vector<BooleanFunction> SequenceProfile::distinct_functions() const {
    // grow the span one independent generator at a time
    std::vector<BooleanFunction> span;
    span.push_back(BooleanFunction(m));
    for (const BooleanFunction& gen : generators) {
        if (std::find(span.begin(), span.end(), gen) != span.end()) continue;
        std::size_t old = span.size();
        span.reserve(old * 2);
        for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ gen);
    }
    return span;
}

bool bent_distance_to_profile(const BooleanFunction& g, const SequenceProfile& p) {
    if (g.n() != p.m)
        throw DimensionMismatch("function dimension does not match the profile");
    if (p.m % 2 != 0)
        throw OddDimension("bent distance to a profile needs even m");
    for (const BooleanFunction& phi : p.distinct_functions())
        if (!bent_distance_check(g, phi)) return false;
    return true;
}

}  // namespace boolspectra
