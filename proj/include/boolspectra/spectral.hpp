#ifndef BOOLSPECTRA_SPECTRAL_HPP
#define BOOLSPECTRA_SPECTRAL_HPP

#include <cstdint>
#include <span>

#include "boolspectra/support.hpp"

namespace boolspectra {

// Two candidate (support, dual) pairs on disjoint supports inside F2^n,
// the raw material for 5-valued assembly.
struct DisjointPair {
    DualFunction d1;  // over s1, a candidate f*_[1] on lambda1 variables
    DualFunction d2;  // over s2

    int n() const { return d1.support.n; }
    const OrderedSupport& s1() const { return d1.support; }
    const OrderedSupport& s2() const { return d2.support; }

    // validates: same ambient n, disjoint supports, size sum < 2^n
    static DisjointPair make(DualFunction d1, DualFunction d2);
};

// Assembles W[omega_j] = 2^((n+s)/2) (-1)^(g(x_j)) over the support (zeros
// elsewhere) and inverts. s is determined by the support size 2^(n-s).
// Succeeds exactly when g is at bent distance to the support's sequence
// profile; for affine supports that means exactly when g is bent. A failure
// surfaces as NotBooleanSpectrum. Throws WeightPrecondition unless
// wt(g) = 2^(n-s-1) +- 2^((n-s)/2-1).
BooleanFunction construct_plateaued(const OrderedSupport& s, const BooleanFunction& g);

// Same assembly along an explicitly ordered omega list (for support
// orderings that are not the canonical v ^ lex-E rendering).
BooleanFunction construct_plateaued(int n, std::span<const std::uint32_t> omegas,
                                    const BooleanFunction& g);

// Outcome of checking X1(u) X2(u) = 0 and |X1(u)| + |X2(u)| > 0 at every u,
// where X_i(u) = sum_{omega in S_i} (-1)^(d_i(omega) ^ u.omega). Violations
// are reported as values with the smallest offending u, not as errors.
struct DisjointCertificate {
    enum class Result { Pass, ProductNonzero, BothZero };
    Result result = Result::Pass;
    std::uint32_t u = 0;      // first offending point (violations only)
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;

    explicit operator bool() const { return result == Result::Pass; }
    const char* describe() const;
};

DisjointCertificate certify_totally_disjoint(const DisjointPair& p);

// The amplitude law lambda1 + s1 + 2 = lambda2 + s2 = n.
bool check_amplitude_law(int lambda1, int s1, int lambda2, int s2, int n);

// Builds W = c1 (-1)^(d1) on S1, c2 (-1)^(d2) on S2, zero elsewhere, and
// inverts. Requires c1 = 2^((n+2)/2), c2 = 2^(n/2), n even. Inputs are not
// required to pre-certify: an assembly failure (NotBooleanSpectrum with the
// offending u) is itself the observable condition violation.
BooleanFunction assemble_five_valued(const DisjointPair& p, std::int64_t c1,
                                     std::int64_t c2);

struct ConstructionOneResult {
    BooleanFunction f;  // on F2^(k+m)
    DisjointPair pair;  // certifies totally disjoint
};

// From bent g on F2^k and bent h on F2^m (k, m even) and a hyperplane
// H = {beta : a.beta = 0} (a != 0): E1 = F2^k x H with signs g(alpha)^h(beta)
// at amplitude 2^(n/2), E2 = {0} x comp(H) with signs h(beta) at amplitude
// 2^(m/2+k). The assembled spectrum always inverts to a Boolean function.
ConstructionOneResult construction_one(const BooleanFunction& g,
                                       const BooleanFunction& h,
                                       std::uint32_t hyperplane_mask);

}  // namespace boolspectra

#endif
