#include "boolspectra/spectral.hpp"

#include <algorithm>

namespace boolspectra {

DisjointPair DisjointPair::make(DualFunction d1, DualFunction d2) {
    if (d1.support.n != d2.support.n)
        throw DimensionMismatch("supports live in different ambient dimensions");
    if (d1.g.n() != d1.support.rank() || d2.g.n() != d2.support.rank())
        throw DimensionMismatch("dual variable count does not match support rank");
    if (!d1.support.disjoint_from(d2.support))
        throw SupportsOverlap("the two supports intersect");
    if (d1.support.size() + d2.support.size() >= (std::size_t{1} << d1.support.n))
        throw PreconditionError("support sizes must sum to less than 2^n");
    DisjointPair p;
    p.d1 = std::move(d1);
    p.d2 = std::move(d2);
    return p;
}

static void check_plateaued_weight(int r, const BooleanFunction& g) {
    if (g.n() != r)
        throw DimensionMismatch("dual variable count does not match support rank");
    if (r % 2 != 0)
        throw WeightPrecondition("support rank must be even for a plateaued assembly");
    std::int64_t wt = g.weight();
    std::int64_t mid = std::int64_t{1} << (r - 1);
    std::int64_t off = std::int64_t{1} << (r / 2 - 1);
    if (wt != mid - off && wt != mid + off)
        throw WeightPrecondition("wt(g) != 2^(r-1) +- 2^(r/2-1)");
}

static BooleanFunction plateaued_from_omegas(int n, std::span<const std::uint32_t> omegas,
                                             const BooleanFunction& g) {
    std::size_t sz = omegas.size();
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw SupportNotPowerOfTwo("support size is not a power of two");
    int r = std::countr_zero(sz);
    int s = n - r;
    if (s < 1 || (s % 2) != (n % 2))
        throw PreconditionError("support size 2^(n-s) needs s >= 1 with s = n mod 2");
    check_plateaued_weight(r, g);
    WalshSpectrum w;
    w.n = n;
    w.values.assign(std::size_t{1} << n, 0);
    const std::int64_t amplitude = std::int64_t{1} << ((n + s) / 2);
    for (std::size_t j = 0; j < sz; ++j) {
        if (w.values[omegas[j]] != 0)
            throw PreconditionError("ordered support repeats a point");
        w.values[omegas[j]] = g.get(static_cast<std::uint32_t>(j)) ? -amplitude : amplitude;
    }
    return inverse_wht(w);
}

BooleanFunction construct_plateaued(const OrderedSupport& s, const BooleanFunction& g) {
    std::vector<std::uint32_t> omegas;
    omegas.reserve(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) omegas.push_back(s.omega(j));
    return plateaued_from_omegas(s.n, omegas, g);
}

BooleanFunction construct_plateaued(int n, std::span<const std::uint32_t> omegas,
                                    const BooleanFunction& g) {
    return plateaued_from_omegas(n, omegas, g);
}

const char* DisjointCertificate::describe() const {
    switch (result) {
        case Result::Pass: return "pass";
        case Result::ProductNonzero: return "X1(u) * X2(u) != 0";
        case Result::BothZero: return "X1(u) = X2(u) = 0";
    }
    return "?";
}

// One masked transform per side: load (-1)^(d_i) on the support, zero
// elsewhere, and run the butterfly; entry u of the result is X_i(u).
static std::vector<std::int64_t> masked_transform(const DualFunction& d) {
    const std::uint32_t size = std::uint32_t{1} << d.support.n;
    std::vector<std::int64_t> a(size, 0);
    for (std::size_t j = 0; j < d.support.size(); ++j)
        a[d.support.omega(j)] = d.g.get(static_cast<std::uint32_t>(j)) ? -1 : 1;
    for (std::uint32_t half = 1; half < size; half <<= 1)
        for (std::uint32_t block = 0; block < size; block += half << 1)
            for (std::uint32_t j = block; j < block + half; ++j) {
                std::int64_t x = a[j];
                std::int64_t y = a[j + half];
                a[j] = x + y;
                a[j + half] = x - y;
            }
    return a;
}

DisjointCertificate certify_totally_disjoint(const DisjointPair& p) {
    std::vector<std::int64_t> x1 = masked_transform(p.d1);
    std::vector<std::int64_t> x2 = masked_transform(p.d2);
    DisjointCertificate cert;
    for (std::uint32_t u = 0; u < x1.size(); ++u) {
        if (x1[u] != 0 && x2[u] != 0) {
            cert.result = DisjointCertificate::Result::ProductNonzero;
        } else if (x1[u] == 0 && x2[u] == 0) {
            cert.result = DisjointCertificate::Result::BothZero;
        } else {
            continue;
        }
        cert.u = u;
        cert.x1 = x1[u];
        cert.x2 = x2[u];
        return cert;
    }
    return cert;
}

bool check_amplitude_law(int lambda1, int s1, int lambda2, int s2, int n) {
    if (lambda1 < 0 || s1 < 0 || lambda2 < 0 || s2 < 0 || n < 0) return false;
    return lambda1 + s1 + 2 == n && lambda2 + s2 == n;
}

BooleanFunction assemble_five_valued(const DisjointPair& p, std::int64_t c1,
                                     std::int64_t c2) {
    const int n = p.n();
    if (n % 2 != 0)
        throw PreconditionError("five-valued assembly needs even n");
    if (c1 != std::int64_t{1} << ((n + 2) / 2) || c2 != std::int64_t{1} << (n / 2))
        throw PreconditionError("amplitudes must be c1 = 2^((n+2)/2), c2 = 2^(n/2)");
    WalshSpectrum w;
    w.n = n;
    w.values.assign(std::size_t{1} << n, 0);
    for (std::size_t j = 0; j < p.s1().size(); ++j)
        w.values[p.s1().omega(j)] =
            p.d1.g.get(static_cast<std::uint32_t>(j)) ? -c1 : c1;
    for (std::size_t j = 0; j < p.s2().size(); ++j)
        w.values[p.s2().omega(j)] =
            p.d2.g.get(static_cast<std::uint32_t>(j)) ? -c2 : c2;
    return inverse_wht(w);
}

ConstructionOneResult construction_one(const BooleanFunction& g,
                                       const BooleanFunction& h,
                                       std::uint32_t hyperplane_mask) {
    const int k = g.n();
    const int m = h.n();
    const int n = k + m;
    if (k % 2 != 0 || m % 2 != 0)
        throw PreconditionError("construction needs even k and m");
    if (hyperplane_mask == 0 || hyperplane_mask >= (std::uint32_t{1} << m))
        throw PreconditionError("hyperplane mask must be a nonzero m-bit value");
    if (!classify(wht(g)).is_bent()) throw NotBent("g is not bent");
    if (!classify(wht(h)).is_bent()) throw NotBent("h is not bent");

    std::vector<std::uint32_t> in_h, in_hbar;
    for (std::uint32_t beta = 0; beta < h.size(); ++beta)
        (dot(hyperplane_mask, beta) == 0 ? in_h : in_hbar).push_back(beta);

    WalshSpectrum w;
    w.n = n;
    w.values.assign(std::size_t{1} << n, 0);
    const std::int64_t amp1 = std::int64_t{1} << (n / 2);       // on F2^k x H
    const std::int64_t amp2 = std::int64_t{1} << (m / 2 + k);   // on {0} x comp(H)

    std::vector<std::uint32_t> e1_points, e2_points;
    for (std::uint32_t alpha = 0; alpha < g.size(); ++alpha)
        for (std::uint32_t beta : in_h) {
            std::uint32_t point = (alpha << m) | beta;
            w.values[point] = (g.get(alpha) ^ h.get(beta)) ? -amp1 : amp1;
            e1_points.push_back(point);
        }
    for (std::uint32_t beta : in_hbar) {
        w.values[beta] = h.get(beta) ? -amp2 : amp2;
        e2_points.push_back(beta);
    }

    ConstructionOneResult out;
    out.f = inverse_wht(w);

    OrderedSupport s1 = OrderedSupport::from_points(n, e1_points);
    OrderedSupport s2 = OrderedSupport::from_points(n, e2_points);
    // amp2 > amp1, so the larger-amplitude side (E2) comes first in the pair
    out.pair = DisjointPair::make(dual_on(w, s2), dual_on(w, s1));
    return out;
}

}  // namespace boolspectra
