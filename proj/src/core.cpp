#include "boolspectra/core.hpp"

#include <algorithm>
#include <cstdlib>

namespace boolspectra {

int max_variables() {
    static const int cap = [] {
        if (const char* env = std::getenv("BOOLSPECTRA_MAX_N")) {
            int v = std::atoi(env);
            if (v >= 1 && v <= 30) return v;
        }
        return 24;
    }();
    return cap;
}

static void check_n(int n) {
    if (n < 1 || n > max_variables())
        throw DimensionMismatch("variable count " + std::to_string(n) +
                                " outside [1, " + std::to_string(max_variables()) + "]");
}

std::uint32_t monomial(int n, std::initializer_list<int> vars) {
    check_n(n);
    std::uint32_t m = 0;
    for (int v : vars) {
        if (v < 1 || v > n)
            throw DimensionMismatch("variable index out of range");
        m |= 1u << (n - v);
    }
    return m;
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
    check_n(n);
    words_.assign(std::size_t{1} << (n_ > 6 ? n_ - 6 : 0), 0);
}

BooleanFunction BooleanFunction::from_bits(int n, const std::vector<int>& bits) {
    BooleanFunction f(n);
    if (bits.size() != f.size())
        throw DimensionMismatch("bit vector length does not match 2^n");
    for (std::uint32_t i = 0; i < f.size(); ++i)
        if (bits[i]) f.set(i, true);
    return f;
}

std::uint32_t BooleanFunction::weight() const {
    std::uint64_t mask = n_ >= 6 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        w += std::popcount(words_[i] & (i + 1 == words_.size() ? mask : ~std::uint64_t{0}));
    return w;
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& other) const {
    if (n_ != other.n_)
        throw DimensionMismatch("xor of functions on different dimensions");
    BooleanFunction out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] ^= other.words_[i];
    return out;
}

BooleanFunction BooleanFunction::complement() const {
    BooleanFunction out = *this;
    std::uint64_t mask = n_ >= 6 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
        out.words_[i] = ~out.words_[i];
        if (i + 1 == out.words_.size()) out.words_[i] &= mask;
    }
    return out;
}

int AnfPolynomial::degree() const {
    int d = -1;
    for (std::uint32_t u : monomials) d = std::max(d, hamming_weight(u));
    return d;
}

bool WalshSpectrum::parseval_ok() const {
    // exact in unsigned 64-bit arithmetic for n <= 30
    std::uint64_t sum = 0;
    for (std::int64_t v : values) sum += std::uint64_t(v) * std::uint64_t(v);
    return sum == (std::uint64_t{1} << (2 * n));
}

std::uint32_t Classification::count(std::int64_t value) const {
    auto it = value_counts.find(value);
    return it == value_counts.end() ? 0 : it->second;
}

std::uint32_t Classification::support_size(std::int64_t amplitude) const {
    return count(amplitude) + count(-amplitude);
}

WalshSpectrum wht(const BooleanFunction& f) {
    const std::uint32_t size = f.size();
    WalshSpectrum w;
    w.n = f.n();
    w.values.resize(size);
    for (std::uint32_t x = 0; x < size; ++x) w.values[x] = f.sign(x);
    for (std::uint32_t half = 1; half < size; half <<= 1) {
        for (std::uint32_t block = 0; block < size; block += half << 1) {
            for (std::uint32_t j = block; j < block + half; ++j) {
                std::int64_t a = w.values[j];
                std::int64_t b = w.values[j + half];
                w.values[j] = a + b;
                w.values[j + half] = a - b;
            }
        }
    }
    return w;
}

BooleanFunction inverse_wht(const WalshSpectrum& w) {
    check_n(w.n);
    const std::uint32_t size = std::uint32_t{1} << w.n;
    if (w.values.size() != size)
        throw DimensionMismatch("spectrum length does not match 2^n");
    std::vector<std::int64_t> a = w.values;
    for (std::uint32_t half = 1; half < size; half <<= 1) {
        for (std::uint32_t block = 0; block < size; block += half << 1) {
            for (std::uint32_t j = block; j < block + half; ++j) {
                std::int64_t x = a[j];
                std::int64_t y = a[j + half];
                a[j] = x + y;
                a[j + half] = x - y;
            }
        }
    }
    const std::int64_t full = std::int64_t{1} << w.n;
    BooleanFunction f(w.n);
    for (std::uint32_t x = 0; x < size; ++x) {
        if (a[x] == full) continue;
        if (a[x] == -full)
            f.set(x, true);
        else
            throw NotBooleanSpectrum(x, a[x]);
    }
    return f;
}

// In-place binary Moebius transform on the packed table. Sub-word strides use
// shifted masks, word strides xor whole words.
static void mobius_inplace(std::vector<std::uint64_t>& words, int n) {
    static constexpr std::uint64_t low_masks[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    for (int k = 0; k < n && k < 6; ++k)
        for (auto& word : words)
            word ^= (word & low_masks[k]) << (1u << k);
    for (int k = 6; k < n; ++k) {
        const std::size_t stride = std::size_t{1} << (k - 6);
        for (std::size_t block = 0; block < words.size(); block += stride << 1)
            for (std::size_t j = block; j < block + stride; ++j)
                words[j + stride] ^= words[j];
    }
}

AnfPolynomial truth_table_to_anf(const BooleanFunction& f) {
    std::vector<std::uint64_t> words = f.words();
    mobius_inplace(words, f.n());
    AnfPolynomial p;
    p.n = f.n();
    for (std::uint32_t u = 0; u < f.size(); ++u)
        if ((words[u >> 6] >> (u & 63)) & 1) p.monomials.insert(u);
    return p;
}

BooleanFunction anf_to_truth_table(const AnfPolynomial& p) {
    BooleanFunction f(p.n);
    for (std::uint32_t u : p.monomials) {
        if (u >= f.size())
            throw DimensionMismatch("monomial mask does not fit in n bits");
        f.set(u, true);
    }
    mobius_inplace(f.words(), p.n);
    return f;
}

static bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

static int log2_exact(std::int64_t v) { return std::countr_zero(std::uint64_t(v)); }

Classification classify(const WalshSpectrum& w) {
    check_n(w.n);
    if (w.values.size() != (std::size_t{1} << w.n))
        throw DimensionMismatch("spectrum length does not match 2^n");
    if (!w.parseval_ok())
        throw NotAFunctionSpectrum("Parseval check failed: sum of squares != 2^(2n)");

    Classification c;
    c.n = w.n;
    for (std::int64_t v : w.values) ++c.value_counts[v];
    std::set<std::int64_t> abs_set;
    for (std::int64_t v : w.values)
        if (v != 0) abs_set.insert(std::abs(v));
    c.abs_values.assign(abs_set.begin(), abs_set.end());
    const std::uint32_t zeros = c.count(0);

    if (c.abs_values.size() == 1 && zeros == 0 && w.n % 2 == 0) {
        // Parseval forces the single amplitude to be 2^(n/2)
        c.kind = SpectralKind::Bent;
        return c;
    }
    if (c.abs_values.size() == 1 && zeros > 0 && is_power_of_two(c.abs_values[0])) {
        int e = log2_exact(c.abs_values[0]);
        int s = 2 * e - w.n;
        if (s >= 1 && (s % 2) == (w.n % 2)) {
            c.kind = SpectralKind::Plateaued;
            c.s = s;
            c.semi_bent = (w.n % 2 == 1) ? (s == 1) : (s == 2);
            return c;
        }
    }
    if (c.abs_values.size() == 2 && zeros > 0 && is_power_of_two(c.abs_values[0]) &&
        is_power_of_two(c.abs_values[1])) {
        c.kind = SpectralKind::FiveValued;
        c.exponent_lo = log2_exact(c.abs_values[0]);
        c.exponent_hi = log2_exact(c.abs_values[1]);
        return c;
    }
    c.kind = SpectralKind::Other;
    return c;
}

std::uint32_t hamming_distance(const BooleanFunction& f, const BooleanFunction& g) {
    return (f ^ g).weight();
}

bool bent_distance_check(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.n() != g.n())
        throw DimensionMismatch("bent distance needs functions on the same dimension");
    if (f.n() % 2 != 0)
        throw OddDimension("bent distance is defined for even n only");
    std::int64_t d = hamming_distance(f, g);
    std::int64_t mid = std::int64_t{1} << (f.n() - 1);
    std::int64_t off = std::int64_t{1} << (f.n() / 2 - 1);
    return d == mid - off || d == mid + off;
}

int resiliency_order(const BooleanFunction& f) {
    WalshSpectrum w = wht(f);
    int min_weight = f.n() + 1;
    for (std::uint32_t u = 0; u < w.size(); ++u)
        if (w.values[u] != 0) min_weight = std::min(min_weight, hamming_weight(u));
    return min_weight - 1;  // -1 when W(0) != 0
}

}  // namespace boolspectra
