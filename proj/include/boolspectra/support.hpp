#ifndef BOOLSPECTRA_SUPPORT_HPP
#define BOOLSPECTRA_SUPPORT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "boolspectra/core.hpp"

namespace boolspectra {

// A Walsh support rendered as v ^ E with E lexicographically ordered and
// e_0 = 0. The canonical rendering picks v as the minimal-integer element of
// the set, which makes serialization and dual extraction reproducible;
// explicitly chosen base points are also accepted since any v in S gives the
// same E exactly when E is a subspace.
struct OrderedSupport {
    int n = 1;
    std::uint32_t v = 0;
    std::vector<std::uint32_t> offsets;  // E, strictly increasing, offsets[0] == 0
    bool is_affine = false;              // E closed under xor (a linear subspace)

    std::size_t size() const { return offsets.size(); }
    std::uint32_t omega(std::size_t j) const { return v ^ offsets[j]; }

    // log2(size); throws SupportNotPowerOfTwo otherwise
    int rank() const;

    std::vector<std::uint32_t> points_sorted() const;
    bool contains(std::uint32_t point) const;
    bool disjoint_from(const OrderedSupport& other) const;

    // canonical rendering: v = minimal element
    static OrderedSupport from_points(int n, std::vector<std::uint32_t> points);
    // rendering around a chosen base point (must lie in the set)
    static OrderedSupport from_points_with_base(int n, std::uint32_t v,
                                                std::vector<std::uint32_t> points);

    bool operator==(const OrderedSupport& other) const = default;
};

// All w with |W(w)| == amplitude, canonically ordered.
OrderedSupport ordered_support(const WalshSpectrum& w, std::int64_t amplitude);

// The dual of a plateaued (or bent) function: g(x_j) records the sign of
// W at omega_j under the lexicographic identification, g(x_j) = 0 iff
// W(omega_j) = +amplitude.
struct DualFunction {
    OrderedSupport support;
    BooleanFunction g;  // on rank() variables

    bool operator==(const DualFunction& other) const = default;
};

// Throws NotPlateaued unless classify(w) is Bent or Plateaued.
DualFunction dual(const WalshSpectrum& w);

// Sign extraction over an already-built support rendering (e.g. one with a
// non-minimal base point chosen by the caller).
DualFunction dual_on(const WalshSpectrum& w, const OrderedSupport& s);

// Sign extraction along an explicitly ordered omega list; entry j of the
// result is 0 iff W(omegas[j]) > 0. Used for support orderings that are not
// of the v ^ lex-E shape.
BooleanFunction signs_along(const WalshSpectrum& w, std::span<const std::uint32_t> omegas);

// Both ordered supports and duals of a 5-valued spectrum, higher amplitude
// first (c1 > c2). Requires both support sizes to be powers of two, since
// the duals are only defined as functions on F2^lambda then.
struct FiveValuedProfile {
    OrderedSupport s1;
    DualFunction d1;
    std::int64_t c1 = 0;
    OrderedSupport s2;
    DualFunction d2;
    std::int64_t c2 = 0;

    int lambda1() const { return s1.rank(); }
    int lambda2() const { return s2.rank(); }
};

FiveValuedProfile five_valued_profile(const WalshSpectrum& w);

// The family of m-variable functions phi_u whose (+-1)-sequences are
// ((-1)^(u.omega_0), ..., (-1)^(u.omega_{2^m-1})) over the ordered support.
// Only the n generators phi_{b_1}..phi_{b_n} are stored (columns of the
// omega matrix); the full multiset is their span, deduplicated on demand.
struct SequenceProfile {
    int n = 1;  // ambient dimension (u ranges over F2^n)
    int m = 0;  // log2 of the support size
    std::vector<BooleanFunction> generators;  // n functions on m variables

    // distinct span elements, 2^rank of them, lexicographically minimal
    // basis combination order
    std::vector<BooleanFunction> distinct_functions() const;
};

SequenceProfile sequence_profile(const OrderedSupport& s);
SequenceProfile sequence_profile(int n, std::span<const std::uint32_t> omegas);

// True iff |chi_g . chi_phi| = 2^(m/2) for every profile element; iterates
// the deduplicated span, O(2^rank) correlations instead of O(2^n).
bool bent_distance_to_profile(const BooleanFunction& g, const SequenceProfile& p);

}  // namespace boolspectra

#endif
