#include "boolspectra/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace boolspectra {

std::string emit_truth_table_hex(const BooleanFunction& f) {
    if (f.n() < 2)
        throw PreconditionError("hex truth tables start at n = 2 (one digit)");
    std::string out;
    out.reserve(f.size() / 4);
    for (std::uint32_t i = 0; i < f.size(); i += 4) {
        int nibble = 0;
        for (int b = 0; b < 4; ++b)
            if (f.get(i + b)) nibble |= 8 >> b;  // index i is the high bit
        out.push_back("0123456789abcdef"[nibble]);
    }
    return out;
}

BooleanFunction parse_truth_table_hex(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    std::size_t digits = text.size();
    if (digits == 0 || (digits & (digits - 1)) != 0)
        throw BadLength("hex length " + std::to_string(digits) +
                        " is not a power of two");
    int n = std::countr_zero(digits) + 2;
    if (n > max_variables())
        throw BadLength("hex table larger than the n cap");
    BooleanFunction f(n);
    for (std::size_t d = 0; d < digits; ++d) {
        char c = text[d];
        int nibble;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            nibble = c - 'A' + 10;
        else
            throw BadDigit(std::string("not a hex digit: '") + c + "'");
        for (int b = 0; b < 4; ++b)
            if (nibble & (8 >> b)) f.set(static_cast<std::uint32_t>(d * 4 + b), true);
    }
    return f;
}

std::string emit_spectrum_csv(const WalshSpectrum& w) {
    std::string out = "omega,value\n";
    for (std::uint32_t u = 0; u < w.size(); ++u) {
        out += std::to_string(u);
        out += ',';
        out += std::to_string(w.values[u]);
        out += '\n';
    }
    return out;
}

ParsedSpectrum parse_spectrum_csv(std::string_view text) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> rows;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "omega,value") throw BadRow("missing 'omega,value' header");
            header_seen = true;
            continue;
        }
        std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) throw BadRow("row has no comma");
        std::uint32_t omega;
        std::int64_t value;
        auto a = std::from_chars(line.data(), line.data() + comma, omega);
        auto b = std::from_chars(line.data() + comma + 1, line.data() + line.size(), value);
        if (a.ec != std::errc{} || a.ptr != line.data() + comma || b.ec != std::errc{} ||
            b.ptr != line.data() + line.size())
            throw BadRow("row is not 'decimal,integer': " + std::string(line));
        rows.push_back({omega, value});
    }
    if (!header_seen) throw BadRow("empty input");
    std::size_t size = rows.size();
    if (size < 2 || (size & (size - 1)) != 0)
        throw BadLength("row count is not a power of two >= 2");
    ParsedSpectrum out;
    out.spectrum.n = std::countr_zero(size);
    out.spectrum.values.assign(size, 0);
    std::vector<bool> seen(size, false);
    for (auto [omega, value] : rows) {
        if (omega >= size || seen[omega])
            throw BadRow("omega index " + std::to_string(omega) + " out of range or repeated");
        seen[omega] = true;
        out.spectrum.values[omega] = value;
    }
    out.parseval_ok = out.spectrum.parseval_ok();
    return out;
}

json spectrum_to_json(const WalshSpectrum& w) { return json(w.values); }

WalshSpectrum spectrum_from_json(const json& j) {
    WalshSpectrum w;
    w.values = j.get<std::vector<std::int64_t>>();
    std::size_t size = w.values.size();
    if (size < 2 || (size & (size - 1)) != 0)
        throw BadLength("spectrum array length is not a power of two >= 2");
    w.n = std::countr_zero(size);
    return w;
}

AnfPolynomial parse_anf(int n, std::string_view text) {
    AnfPolynomial p;
    p.n = n;
    auto toggle = [&](std::uint32_t mask) {
        // repeated terms cancel over F2
        if (!p.monomials.insert(mask).second) p.monomials.erase(mask);
    };
    auto flush = [&](std::string term_text) {
        // strip blanks and optional '*'
        std::string body;
        for (char c : term_text)
            if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') body.push_back(c);
        if (body.empty()) throw BadRow("empty term in ANF text");
        if (body == "0") return;  // additive identity, contributes nothing
        if (body == "1") {
            toggle(0);
            return;
        }
        std::uint32_t mask = 0;
        std::size_t i = 0;
        while (i < body.size()) {
            if (body[i] != 'x' && body[i] != 'X')
                throw BadRow("expected variable in ANF term: " + body);
            ++i;
            std::size_t start = i;
            while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
            if (start == i) throw BadRow("variable without index in ANF term: " + body);
            int var = std::stoi(body.substr(start, i - start));
            if (var < 1 || var > n) throw BadRow("variable index out of range: " + body);
            mask |= 1u << (n - var);
        }
        toggle(mask);
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '+' || text[i] == '^') {
            flush(std::string(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return p;
}

std::string emit_anf(const AnfPolynomial& p) {
    if (p.monomials.empty()) return "0";
    std::string out;
    for (std::uint32_t u : p.monomials) {
        if (!out.empty()) out += " + ";
        if (u == 0) {
            out += "1";
            continue;
        }
        for (int v = 1; v <= p.n; ++v)
            if ((u >> (p.n - v)) & 1) out += "x" + std::to_string(v);
    }
    return out;
}

json support_to_json(const OrderedSupport& s) {
    return json{{"n", s.n}, {"v", s.v}, {"E", s.offsets}};
}

OrderedSupport support_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::uint32_t v = j.at("v").get<std::uint32_t>();
    std::vector<std::uint32_t> offsets = j.at("E").get<std::vector<std::uint32_t>>();
    std::vector<std::uint32_t> points;
    points.reserve(offsets.size());
    for (std::uint32_t e : offsets) points.push_back(v ^ e);
    return OrderedSupport::from_points_with_base(n, v, std::move(points));
}

json dual_to_json(const DualFunction& d) {
    return json{{"support", support_to_json(d.support)},
                {"dual", emit_truth_table_hex(d.g)}};
}

DualFunction dual_from_json(const json& j) {
    DualFunction d;
    d.support = support_from_json(j.at("support"));
    d.g = parse_truth_table_hex(j.at("dual").get<std::string>());
    if (d.g.n() != d.support.rank())
        throw DimensionMismatch("dual table size does not match support rank");
    return d;
}

json gmm_spec_to_json(const GmmSpec& spec) {
    json phi0 = json::object(), phi1 = json::object();
    for (auto [k, v] : spec.phi0) phi0[std::to_string(k)] = v;
    for (auto [k, v] : spec.phi1) phi1[std::to_string(k)] = v;
    return json{{"n", spec.n},    {"s", spec.s},     {"t", spec.t},
                {"E0", spec.e0},  {"phi0", phi0},    {"phi1", phi1}};
}

GmmSpec gmm_spec_from_json(const json& j) {
    GmmSpec spec;
    spec.n = j.at("n").get<int>();
    spec.s = j.at("s").get<int>();
    spec.t = j.at("t").get<int>();
    spec.e0 = j.at("E0").get<std::vector<std::uint32_t>>();
    for (auto& [k, v] : j.at("phi0").items())
        spec.phi0[static_cast<std::uint32_t>(std::stoul(k))] = v.get<std::uint32_t>();
    for (auto& [k, v] : j.at("phi1").items())
        spec.phi1[static_cast<std::uint32_t>(std::stoul(k))] = v.get<std::uint32_t>();
    validate_gmm(spec);
    return spec;
}

json classification_to_json(const Classification& c) {
    json out;
    switch (c.kind) {
        case SpectralKind::Bent: out["class"] = "bent"; break;
        case SpectralKind::Plateaued:
            out["class"] = "plateaued";
            out["s"] = c.s;
            out["semi_bent"] = c.semi_bent;
            break;
        case SpectralKind::FiveValued:
            out["class"] = "five_valued";
            out["exponents"] = {c.exponent_hi, c.exponent_lo};
            break;
        case SpectralKind::Other: out["class"] = "other"; break;
    }
    out["abs_values"] = c.abs_values;
    json hist = json::object();
    for (auto [value, count] : c.value_counts) hist[std::to_string(value)] = count;
    out["histogram"] = hist;
    return out;
}

json decomposition_to_json(const Decomposition& d) {
    json out;
    out["n"] = d.n;
    out["alpha"] = d.alpha;
    out["beta"] = d.beta;
    out["coset_reps"] = d.coset_reps;
    switch (d.kind) {
        case DecompositionKind::Bent4:
            out["kind"] = "bent";
            out["dual_sum_one"] = d.dual_sum_one;
            break;
        case DecompositionKind::SemiBent4:
            out["kind"] = "semi_bent";
            out["pairwise_disjoint"] = d.pairwise_disjoint;
            break;
        case DecompositionKind::FiveValued4:
            out["kind"] = "five_valued";
            out["s1_pairwise_disjoint"] = d.quadruple.s1_pairwise_disjoint;
            out["s2_all_equal"] = d.quadruple.s2_all_equal;
            out["dual_sum_one"] = d.quadruple.dual_sum_one;
            break;
    }
    json restrictions = json::array();
    for (int i = 0; i < 4; ++i) {
        restrictions.push_back(json{{"table", emit_truth_table_hex(d.restrictions[i])},
                                    {"classification", classification_to_json(d.classes[i])}});
    }
    out["restrictions"] = restrictions;
    return out;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Fixture fx;
    fx.payload = buffer.str();
    fx.name = path;
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".tt.hex"))
        fx.kind = "truth-table";
    else if (ends_with(".spec.csv"))
        fx.kind = "spectrum";
    else if (ends_with(".support.json"))
        fx.kind = "support";
    else if (ends_with(".recipe.json"))
        fx.kind = "recipe";
    else
        fx.kind = "unknown";
    return fx;
}

}  // namespace boolspectra
