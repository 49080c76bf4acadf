#ifndef BOOLSPECTRA_GMM_HPP
#define BOOLSPECTRA_GMM_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "boolspectra/core.hpp"

namespace boolspectra {

// Concatenation of linear functions of two widths: on prefixes in E0 the
// function is phi0(prefix).suffix with an (n-s)-bit suffix, elsewhere
// phi1(extended prefix).suffix with an (n-s-t)-bit suffix. Both maps are
// explicit tables so injectivity and the case clauses stay checkable and
// the spec serializes directly.
struct GmmSpec {
    int n = 0;
    int s = 0;  // prefix width, 1 <= s <= n/2
    int t = 0;  // secondary width, 0 <= t <= n/2
    std::vector<std::uint32_t> e0;             // subset of F2^s, ascending
    std::map<std::uint32_t, std::uint32_t> phi0;  // E0 -> F2^(n-s)
    std::map<std::uint32_t, std::uint32_t> phi1;  // comp(E0) x F2^t -> F2^(n-s-t)

    bool case_a() const { return t != 0; }
    std::vector<std::uint32_t> image0() const;  // T0, ascending
    std::vector<std::uint32_t> image1() const;  // T1, ascending
};

// Checks widths, injectivity, exact domains and the case clause:
//   case a (t != 0): T0 within F2^t x comp(T1)
//   case b (t == 0): T0 and T1 intersect and differ
// Throws NotInjective / CaseConditionViolated naming the failed clause.
void validate_gmm(const GmmSpec& spec);

struct GmmResult {
    BooleanFunction f;
    std::vector<std::int64_t> realized_values;    // distinct spectrum values
    std::vector<std::int64_t> guaranteed_values;  // the stated superset
};

// Builds the function and reports the realized spectrum values next to the
// guaranteed set {0, +-2^(n-s), +-2^(n-s-t)} (case a) or
// {0, +-2^(n-s), +-2^(n-s+1)} (case b); the theorem states membership, not
// attainment, and case b can degenerate to fewer values.
GmmResult build_gmm(const GmmSpec& spec);

// The two partial sums S1(w), S2(w) with W = S1 + S2, from the closed form
// (table lookups, no transform).
std::pair<std::int64_t, std::int64_t> gmm_partial_sums(const GmmSpec& spec,
                                                       std::uint32_t omega);

// min(m0, m1) where m_i is the minimal Hamming weight over T_i. The spectrum
// vanishes on every w with wt(w) < this bound and the bound is attained, so
// resiliency_order(build_gmm(spec).f) == bound - 1 exactly.
int gmm_resiliency_bound(const GmmSpec& spec);

// Deterministic instance factory: E0 = first e0_size prefixes, images taken
// from the weight->=min_weight codomain points in ascending order, honoring
// the case clause by construction. Throws Infeasible when the counting
// argument fails.
GmmSpec gmm_default_maps(int n, int s, int t, std::uint32_t e0_size, int min_weight);

// Seeded randomized factory for batch experiments; same validity guarantees
// as gmm_default_maps.
GmmSpec random_gmm_spec(int n, int s, int t, std::uint32_t e0_size, int min_weight,
                        std::uint64_t seed);

}  // namespace boolspectra

#endif
