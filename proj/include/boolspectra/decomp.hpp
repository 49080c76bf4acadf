#ifndef BOOLSPECTRA_DECOMP_HPP
#define BOOLSPECTRA_DECOMP_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "boolspectra/support.hpp"

namespace boolspectra {

// Lexicographically ordered span of the given vectors.
std::vector<std::uint32_t> span_f2(int n, std::span<const std::uint32_t> vectors);

// Lexicographically ordered kernel {x : x.y = 0 for all y}; dim + rank = n.
std::vector<std::uint32_t> orthogonal_complement(int n,
                                                 std::span<const std::uint32_t> vectors);

// Restriction of f to the coset rep ^ V under the index identification
// g(x_i) = f(rep ^ v_i), V lexicographically enumerated. rep must be 0 or
// outside V.
BooleanFunction restrict_to_coset(const BooleanFunction& f,
                                  std::span<const std::uint32_t> subspace,
                                  std::uint32_t rep);

enum class DecompositionKind { Bent4, SemiBent4, FiveValued4 };

// Clause-by-clause outcome of the 5-valued quadruple conditions: the
// high-amplitude supports pairwise disjoint, the low-amplitude supports
// equal as sets, and the four low-amplitude duals xoring to constant 1 over
// the common support (checked on the spectrum level, so the result does not
// depend on any base-point rule).
struct QuadrupleReport {
    bool s1_pairwise_disjoint = false;
    bool s2_all_equal = false;
    bool dual_sum_one = false;
    bool pass() const { return s1_pairwise_disjoint && s2_all_equal && dual_sum_one; }
};

// Throws WrongSpectralShape unless every f_i is 5-valued with
// |W| in {0, 2^(m/2), 2^(m/2+1)}.
QuadrupleReport verify_5valued_quadruple(const std::array<BooleanFunction, 4>& f);

struct Decomposition {
    int n = 0;
    std::uint32_t alpha = 0;
    std::uint32_t beta = 0;
    std::vector<std::uint32_t> subspace;       // V = <alpha,beta>^perp, lex order
    std::array<std::uint32_t, 4> coset_reps;   // Q, transversal of V
    std::array<BooleanFunction, 4> restrictions;
    std::array<Classification, 4> classes;
    DecompositionKind kind = DecompositionKind::Bent4;

    // criterion checks for the matching kind
    bool dual_sum_one = false;          // Bent4: f*_1^f*_2^f*_3^f*_4 == 1
    bool pairwise_disjoint = false;     // SemiBent4: supports pairwise disjoint
    QuadrupleReport quadruple;          // FiveValued4
};

// Restricts bent f to the four cosets of V = <alpha,beta>^perp, classifies
// the restrictions and checks the matching criterion. Coset reps are
// (0, alpha, beta, alpha^beta) whenever that set is a transversal of V;
// over F2 the pair (alpha, beta) can fall inside its own orthogonal
// complement, in which case a deterministic minimal transversal subspace is
// used instead (the cosets, and hence the kind, do not depend on the reps).
// Throws NotBent for non-bent input and TrichotomyViolated if the
// restrictions are not uniformly bent / semi-bent / 5-valued.
Decomposition four_decompose(const BooleanFunction& f, std::uint32_t alpha,
                             std::uint32_t beta);

// Inverse of the restriction step: places f_i on the cosets of
// <alpha,beta>^perp in the order (0, alpha, beta, alpha^beta) (same
// transversal fallback as four_decompose).
BooleanFunction concatenate_4(const std::array<BooleanFunction, 4>& f,
                              std::uint32_t alpha, std::uint32_t beta);

}  // namespace boolspectra

#endif
