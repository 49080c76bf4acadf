#ifndef BOOLSPECTRA_IO_HPP
#define BOOLSPECTRA_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "boolspectra/decomp.hpp"
#include "boolspectra/gmm.hpp"
#include "boolspectra/spectral.hpp"

namespace boolspectra {

// Truth tables as lowercase hex, MSB-first: table index 0 is the highest bit
// of the first digit. Length must be 2^(n-2) digits for some n >= 2.
std::string emit_truth_table_hex(const BooleanFunction& f);
BooleanFunction parse_truth_table_hex(std::string_view text);

// Spectra as CSV with header "omega,value", omega as decimal index. Parsing
// succeeds even when Parseval fails; the flag records it.
std::string emit_spectrum_csv(const WalshSpectrum& w);

struct ParsedSpectrum {
    WalshSpectrum spectrum;
    bool parseval_ok = true;
};
ParsedSpectrum parse_spectrum_csv(std::string_view text);

// Compact JSON rendering: the plain value array indexed by omega.
nlohmann::json spectrum_to_json(const WalshSpectrum& w);
WalshSpectrum spectrum_from_json(const nlohmann::json& j);

// ANF text: terms joined by '+' or '^'; a term is '1' or a product of
// variables x<k> (1-based), '*' optional. Example: "1 + x1*x6 + x2x3x6".
AnfPolynomial parse_anf(int n, std::string_view text);
std::string emit_anf(const AnfPolynomial& p);

// JSON renderings (exact formats used by the CLI and the fixtures).
nlohmann::json support_to_json(const OrderedSupport& s);
OrderedSupport support_from_json(const nlohmann::json& j);
nlohmann::json dual_to_json(const DualFunction& d);
DualFunction dual_from_json(const nlohmann::json& j);
nlohmann::json gmm_spec_to_json(const GmmSpec& spec);
GmmSpec gmm_spec_from_json(const nlohmann::json& j);
nlohmann::json classification_to_json(const Classification& c);
nlohmann::json decomposition_to_json(const Decomposition& d);

// A pinned data file: payload plus what it is and where it came from.
struct Fixture {
    std::string name;
    std::string kind;  // truth-table | spectrum | support | recipe
    std::string payload;
    std::string note;
};
Fixture load_fixture(const std::string& path);

}  // namespace boolspectra

#endif
