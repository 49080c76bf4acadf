#ifndef BOOLSPECTRA_CORE_HPP
#define BOOLSPECTRA_CORE_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <vector>

#include "boolspectra/errors.hpp"

namespace boolspectra {

// Largest variable count accepted by the library. Defaults to 24 so a truth
// table (2 MiB of bits) and its 64-bit spectrum (128 MiB) both fit in memory;
// override with the BOOLSPECTRA_MAX_N environment variable.
int max_variables();

inline int parity(std::uint32_t x) { return std::popcount(x) & 1; }

// Scalar product over F2. Points of F2^n are packed MSB-first: index
// i = sum_j x_j * 2^(n-j), so x1 is the top bit. The product itself does not
// depend on the packing as long as both operands use it.
inline int dot(std::uint32_t a, std::uint32_t b) { return parity(a & b); }

inline int hamming_weight(std::uint32_t x) { return std::popcount(x); }

// Mask of the monomial x_{v1} x_{v2} ... in n variables (1-based indices).
std::uint32_t monomial(int n, std::initializer_list<int> vars);

// A Boolean function on F2^n stored as a bit-packed truth table of length
// 2^n. Entry i is f(x) for the MSB-first point x with integer value i.
class BooleanFunction {
public:
    BooleanFunction() : n_(1), words_(1, 0) {}
    explicit BooleanFunction(int n);

    static BooleanFunction from_bits(int n, const std::vector<int>& bits);

    int n() const { return n_; }
    std::uint32_t size() const { return 1u << n_; }

    bool get(std::uint32_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }
    void set(std::uint32_t x, bool value) {
        std::uint64_t bit = std::uint64_t{1} << (x & 63);
        if (value)
            words_[x >> 6] |= bit;
        else
            words_[x >> 6] &= ~bit;
    }
    int sign(std::uint32_t x) const { return get(x) ? -1 : 1; }  // (-1)^f(x)

    std::uint32_t weight() const;

    BooleanFunction operator^(const BooleanFunction& other) const;
    BooleanFunction complement() const;

    bool operator==(const BooleanFunction& other) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

// Multilinear polynomial over F2: the set of monomial masks with
// coefficient 1, under the same MSB-first packing as truth table indices.
struct AnfPolynomial {
    int n = 1;
    std::set<std::uint32_t> monomials;

    int degree() const;  // -1 for the zero polynomial
    bool operator==(const AnfPolynomial& other) const = default;
};

// The image of a Boolean function under the Walsh-Hadamard transform:
// values[w] = sum_x (-1)^(f(x) ^ w.x). Exact 64-bit integers throughout.
struct WalshSpectrum {
    int n = 1;
    std::vector<std::int64_t> values;

    std::int64_t operator[](std::uint32_t w) const { return values[w]; }
    std::uint32_t size() const { return 1u << n; }

    // sum of squares == 2^(2n); holds exactly when the spectrum comes from a
    // Boolean function
    bool parseval_ok() const;

    bool operator==(const WalshSpectrum& other) const = default;
};

enum class SpectralKind { Bent, Plateaued, FiveValued, Other };

// Result of classifying a spectrum by its multiset of absolute values.
// Plateaued carries the amplitude exponent offset s (amplitude 2^((n+s)/2));
// semi_bent annotates s==1 for odd n / s==2 for even n. FiveValued carries
// the exponents of the two actual absolute values (log2|W|, high then low);
// the mapping to support-size exponents lives with the support machinery.
struct Classification {
    SpectralKind kind = SpectralKind::Other;
    int n = 0;
    int s = 0;                 // Plateaued only
    bool semi_bent = false;    // Plateaued annotation
    int exponent_hi = 0;       // FiveValued: log2 of the larger |W|
    int exponent_lo = 0;       // FiveValued: log2 of the smaller |W|
    std::vector<std::int64_t> abs_values;       // distinct nonzero |W|, ascending
    std::map<std::int64_t, std::uint32_t> value_counts;  // full histogram

    bool is_bent() const { return kind == SpectralKind::Bent; }
    bool is_plateaued() const { return kind == SpectralKind::Plateaued; }
    bool is_plateaued(int want_s) const {
        return kind == SpectralKind::Plateaued && s == want_s;
    }
    bool is_semi_bent() const { return is_plateaued() && semi_bent; }
    bool is_five_valued() const { return kind == SpectralKind::FiveValued; }

    std::uint32_t count(std::int64_t value) const;
    std::uint32_t support_size(std::int64_t amplitude) const;  // |W|==amplitude
};

// Butterfly transform, O(n 2^n) integer operations, bit-exact with the
// quadratic definition.
WalshSpectrum wht(const BooleanFunction& f);

// Inverse transform; throws NotBooleanSpectrum (with the first offending
// point in index order and its raw sum) when some reconstructed value is
// not +-2^n.
BooleanFunction inverse_wht(const WalshSpectrum& w);

// Binary Moebius transform and its inverse (the transform is an involution).
AnfPolynomial truth_table_to_anf(const BooleanFunction& f);
BooleanFunction anf_to_truth_table(const AnfPolynomial& p);

// Classifies by the multiset of |W| values. Throws NotAFunctionSpectrum if
// Parseval fails.
Classification classify(const WalshSpectrum& w);

std::uint32_t hamming_distance(const BooleanFunction& f, const BooleanFunction& g);

// True iff d_H(f,g) = 2^(n-1) +- 2^(n/2-1), computed from the correlation
// chi_f . chi_g. Requires equal even n.
bool bent_distance_check(const BooleanFunction& f, const BooleanFunction& g);

// Largest m such that W_f(w) = 0 for all wt(w) <= m; -1 when W_f(0) != 0
// (unbalanced).
int resiliency_order(const BooleanFunction& f);

}  // namespace boolspectra

#endif
