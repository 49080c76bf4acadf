#ifndef BOOLSPECTRA_TEST_HELPERS_HPP
#define BOOLSPECTRA_TEST_HELPERS_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "boolspectra/core.hpp"
#include "boolspectra/io.hpp"

namespace testutil {

using boolspectra::BooleanFunction;
using boolspectra::WalshSpectrum;

// quadratic-time transform straight from the definition; the independent
// oracle every fast path is checked against
inline std::int64_t naive_wht_at(const BooleanFunction& f, std::uint32_t w) {
    std::int64_t sum = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x)
        sum += (f.get(x) ^ boolspectra::dot(w, x)) ? -1 : 1;
    return sum;
}

inline WalshSpectrum naive_wht(const BooleanFunction& f) {
    WalshSpectrum out;
    out.n = f.n();
    out.values.resize(f.size());
    for (std::uint32_t w = 0; w < f.size(); ++w) out.values[w] = naive_wht_at(f, w);
    return out;
}

inline BooleanFunction random_function(int n, std::mt19937_64& rng) {
    BooleanFunction f(n);
    for (auto& word : f.words()) word = rng();
    if (n < 6) f.words()[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    return f;
}

inline BooleanFunction from_anf(int n, const std::string& text) {
    return boolspectra::anf_to_truth_table(boolspectra::parse_anf(n, text));
}

inline BooleanFunction from_bits(int n, const std::vector<int>& bits) {
    return BooleanFunction::from_bits(n, bits);
}

// all bent functions on n variables by exhaustive classification (n <= 4)
inline const std::vector<BooleanFunction>& all_bent(int n) {
    static std::vector<BooleanFunction> cache2, cache4;
    auto& cache = n == 2 ? cache2 : cache4;
    if (!cache.empty()) return cache;
    if (n != 2 && n != 4) throw std::logic_error("bent enumeration only for n = 2, 4");
    const std::uint32_t count = std::uint32_t{1} << (1u << n);
    const std::int64_t amp = std::int64_t{1} << (n / 2);
    for (std::uint32_t code = 0; code < count; ++code) {
        BooleanFunction f(n);
        f.words()[0] = code;
        WalshSpectrum w = boolspectra::wht(f);
        bool bent = true;
        for (std::int64_t v : w.values)
            if (v != amp && v != -amp) {
                bent = false;
                break;
            }
        if (bent) cache.push_back(f);
    }
    return cache;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(BOOLSPECTRA_FIXTURES_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline BooleanFunction load_table(const std::string& fixture) {
    return boolspectra::parse_truth_table_hex(slurp(fixture_path(fixture)));
}

}  // namespace testutil

#endif
