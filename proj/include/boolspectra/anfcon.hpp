#ifndef BOOLSPECTRA_ANFCON_HPP
#define BOOLSPECTRA_ANFCON_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "boolspectra/spectral.hpp"

namespace boolspectra {

// Composite representation: the n-variable function x -> form(h_1(x), ...,
// h_k(x)) with a small k-variable form and coordinate functions on F2^n.
class CompositeForm {
public:
    CompositeForm(BooleanFunction form, std::vector<BooleanFunction> coords);

    const BooleanFunction& form() const { return form_; }
    const std::vector<BooleanFunction>& coords() const { return coords_; }
    int k() const { return form_.n(); }
    int n() const { return coords_[0].n(); }

private:
    BooleanFunction form_;
    std::vector<BooleanFunction> coords_;
};

// Truth table of the composition itself.
BooleanFunction cf_truth_table(const CompositeForm& cf);

// W of the composition at one point via the composite identity
// 2^-k sum_w W_form(w) W_{w.(h_1..h_k)}(u); zero form coefficients drop out,
// so for a plateaued form this is the reduced support sum.
std::int64_t cf_wht(const CompositeForm& cf, std::uint32_t u);

// A form support split as S = Delta wr Theta: delta = the first t
// coordinates of each support point, theta = the remaining k-t.
struct SplitSupport {
    int k = 0;
    int t = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;  // (delta, theta)
    bool theta_unique = false;  // Theta is not a multiset

    int m() const { return k - t; }
    std::optional<std::uint32_t> delta_of(std::uint32_t theta) const;
    bool theta_present(std::uint32_t theta) const;
};

SplitSupport split_support(const WalshSpectrum& form_spectrum, int t);

// Full spectrum of a composition whose coordinates have the split shape
// (first t depend on x only, last m are the y projections):
// W(u,v) = 0 for v outside Theta, else
// 2^-t sum_{(delta,v) in S} W_form(delta,v) W_{delta.(h_1..h_t)}(u).
// Throws ShapeMismatch when the coordinates are not of that shape.
WalshSpectrum split_wht(const CompositeForm& cf, const SplitSupport& ss);

// Same with an additive x-only term: the composition a(x) ^ form(H(x,y)),
// where each inner transform becomes W_{a ^ delta.(h_1..h_t)}(u).
WalshSpectrum split_wht(const CompositeForm& cf, const SplitSupport& ss,
                        const BooleanFunction& shift);

// Coordinate helpers for building compositions.
BooleanFunction lift_left(const BooleanFunction& f, int extra);  // f(x), ignore y
BooleanFunction projection(int n, int var);                      // x -> x_var (1-based)

// Fixed forms shipped as named constants (tests regenerate them from their
// support/dual recipes).
const BooleanFunction& form_c1();  // 5 vars: x1 ^ (x2^x4)(x3^x5), 3-plateaued
const BooleanFunction& form_c3();  // 6 vars, 2-plateaued on the identity-block support
const BooleanFunction& form_c4();  // 5 vars: x1 ^ x5 ^ x3(x2^x4^x5), 3-plateaued

// f(x,y) = a(x) ^ (h1(x)^y1)(h2(x)^y2) on r+2 variables. The row selects
// which sufficient condition is enforced:
//   1: a bent, h1 == h2, a^h1 semi-bent
//   2: a bent, h1 affine, a^h2 semi-bent
//   3: a 5-valued, h1 and h2 affine
//   4: a 5-valued, h1 affine, a^h2 semi-bent or bent
// Rows 3-4 carry no amplitude guarantee, so their result is additionally
// gated on classifying 5-valued.
BooleanFunction construct_c1(const BooleanFunction& a, const BooleanFunction& h1,
                             const BooleanFunction& h2, int row);

// Four functions a_i(x) ^ (g_i(x)^y1)(g_i(x)^y2) with g_i = a_i ^ d_i, from
// bent a_i with dual sum 1 and pairwise disjoint-spectra semi-bent d_i.
// The result satisfies the 5-valued quadruple conditions and concatenates
// to a bent function on r+4 variables.
std::array<BooleanFunction, 4> construct_c2_quadruple(
    const std::array<BooleanFunction, 4>& a, const std::array<BooleanFunction, 4>& d);

// f(x,y) = form_c3(h1(x)..h4(x), y1, y2) from pairwise disjoint-spectra
// plateaued h with h1..h3 2-plateaued and h4 4-plateaued (r >= 6 even).
BooleanFunction construct_c3(const std::array<BooleanFunction, 4>& h);

// Four construct_c3 instances over a 4x4 grid h[p][i] (p = form position,
// i = member): columns satisfy the construct_c3 conditions, the h[3][i] are
// pairwise disjoint across i, and for p = 0..2 the supports agree across i
// with dual sum 1.
std::array<BooleanFunction, 4> construct_c3_quadruple(
    const std::array<std::array<BooleanFunction, 4>, 4>& h);

enum class C4Case { BentSpace, FourPlateaued };

// zeta = a* ^ (a^h1)* ^ (a^h2)* ^ (a^h1^h2)* (all four must be bent).
BooleanFunction c4_zeta(const BooleanFunction& a, const BooleanFunction& h1,
                        const BooleanFunction& h2);

// f(x,y) = form_c4(a(x), h1(x), h2(x), g1(y), g2(y)) on r+m variables.
// BentSpace: a ^ <h1,h2> all bent, g1 g2 bent; accepted with any zeta and
// gated on classifying 5-valued. FourPlateaued: a 4-plateaued, the three
// a^c1h1^c2h2 2-plateaued, all four pairwise disjoint spectra, g1 g2 bent,
// r >= 6.
BooleanFunction construct_c4(const BooleanFunction& a, const BooleanFunction& h1,
                             const BooleanFunction& h2, const BooleanFunction& g1,
                             const BooleanFunction& g2, C4Case which);

// Pairwise disjoint-spectra plateaued family from caller-supplied disjoint
// supports and duals; thin wrapper over construct_plateaued used to prepare
// construction inputs.
std::vector<BooleanFunction> disjoint_plateaued_family(
    const std::vector<OrderedSupport>& supports,
    const std::vector<BooleanFunction>& duals);

}  // namespace boolspectra

#endif
