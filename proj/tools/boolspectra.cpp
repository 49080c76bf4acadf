// command-line driver: classify / build / decompose / certify / profile
//
// Machine-readable JSON goes to stdout (--human for a text rendering).
// Exit codes: 0 success, 2 parse failure, 3 construction condition violated,
// 4 operation precondition failed.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolspectra/anfcon.hpp"
#include "boolspectra/decomp.hpp"
#include "boolspectra/gmm.hpp"
#include "boolspectra/io.hpp"

using nlohmann::json;
using namespace boolspectra;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

BooleanFunction function_arg(const json& j) {
    if (j.is_string()) return parse_truth_table_hex(j.get<std::string>());
    if (j.contains("hex")) return parse_truth_table_hex(j.at("hex").get<std::string>());
    if (j.contains("anf"))
        return anf_to_truth_table(
            parse_anf(j.at("n").get<int>(), j.at("anf").get<std::string>()));
    if (j.contains("file")) return parse_truth_table_hex(slurp(j.at("file").get<std::string>()));
    throw ParseError("function argument needs \"hex\", \"anf\"+\"n\" or \"file\"");
}

OrderedSupport support_arg(const json& j) {
    if (j.contains("omegas")) {
        std::vector<std::uint32_t> pts = j.at("omegas").get<std::vector<std::uint32_t>>();
        return OrderedSupport::from_points(j.at("n").get<int>(), std::move(pts));
    }
    return support_from_json(j);
}

// explicit omega ordering when given, else the canonical one
std::vector<std::uint32_t> omega_list_arg(const json& j, int* n_out) {
    if (j.contains("omegas")) {
        *n_out = j.at("n").get<int>();
        return j.at("omegas").get<std::vector<std::uint32_t>>();
    }
    OrderedSupport s = support_from_json(j);
    *n_out = s.n;
    std::vector<std::uint32_t> omegas;
    for (std::size_t i = 0; i < s.size(); ++i) omegas.push_back(s.omega(i));
    return omegas;
}

json classify_report(const BooleanFunction& f) {
    WalshSpectrum w = wht(f);
    Classification c = classify(w);
    json out;
    out["n"] = f.n();
    out["classification"] = classification_to_json(c);
    json sizes = json::object();
    for (std::int64_t a : c.abs_values)
        sizes[std::to_string(a)] = c.support_size(a);
    out["support_sizes"] = sizes;
    out["resiliency_order"] = resiliency_order(f);
    out["weight"] = f.weight();
    return out;
}

void print_human_classification(const json& r) {
    std::cout << "n = " << r["n"] << ", class = " << r["classification"]["class"];
    if (r["classification"].contains("s"))
        std::cout << " (s = " << r["classification"]["s"] << ")";
    std::cout << "\nresiliency order = " << r["resiliency_order"]
              << ", weight = " << r["weight"] << "\nvalue histogram:";
    for (auto& [value, count] : r["classification"]["histogram"].items())
        std::cout << "  " << value << ":" << count.dump();
    std::cout << "\n";
}

DisjointPair pair_arg(const json& args) {
    DualFunction d1{support_arg(args.at("s1")), function_arg(args.at("d1"))};
    DualFunction d2{support_arg(args.at("s2")), function_arg(args.at("d2"))};
    return DisjointPair::make(std::move(d1), std::move(d2));
}

struct BuildOutput {
    std::vector<BooleanFunction> tables;
    json report;
};

BuildOutput run_build(const json& recipe, std::uint64_t seed) {
    const std::string op = recipe.at("operation").get<std::string>();
    const json& args = recipe.at("args");
    BuildOutput out;

    if (op == "construct_plateaued") {
        int n = 0;
        std::vector<std::uint32_t> omegas = omega_list_arg(args.at("support"), &n);
        out.tables.push_back(construct_plateaued(n, omegas, function_arg(args.at("dual"))));
    } else if (op == "assemble_five_valued") {
        DisjointPair p = pair_arg(args);
        std::int64_t c1 = args.contains("c1")
                              ? args.at("c1").get<std::int64_t>()
                              : std::int64_t{1} << ((p.n() + 2) / 2);
        std::int64_t c2 = args.contains("c2") ? args.at("c2").get<std::int64_t>()
                                              : std::int64_t{1} << (p.n() / 2);
        out.tables.push_back(assemble_five_valued(p, c1, c2));
    } else if (op == "construction_one") {
        ConstructionOneResult r =
            construction_one(function_arg(args.at("g")), function_arg(args.at("h")),
                             args.at("hyperplane").get<std::uint32_t>());
        out.tables.push_back(r.f);
        out.report["pair"] = {{"d1", dual_to_json(r.pair.d1)},
                              {"d2", dual_to_json(r.pair.d2)}};
        DisjointCertificate cert = certify_totally_disjoint(r.pair);
        out.report["totally_disjoint"] = bool(cert);
    } else if (op == "c1") {
        out.tables.push_back(construct_c1(function_arg(args.at("a")),
                                          function_arg(args.at("h1")),
                                          function_arg(args.at("h2")),
                                          args.at("row").get<int>()));
    } else if (op == "c2") {
        std::array<BooleanFunction, 4> a{
            function_arg(args.at("a")[0]), function_arg(args.at("a")[1]),
            function_arg(args.at("a")[2]), function_arg(args.at("a")[3])};
        std::array<BooleanFunction, 4> d{
            function_arg(args.at("d")[0]), function_arg(args.at("d")[1]),
            function_arg(args.at("d")[2]), function_arg(args.at("d")[3])};
        std::array<BooleanFunction, 4> quad = construct_c2_quadruple(a, d);
        out.tables.assign(quad.begin(), quad.end());
    } else if (op == "c3") {
        std::array<BooleanFunction, 4> h{
            function_arg(args.at("h")[0]), function_arg(args.at("h")[1]),
            function_arg(args.at("h")[2]), function_arg(args.at("h")[3])};
        out.tables.push_back(construct_c3(h));
    } else if (op == "c3q") {
        std::array<std::array<BooleanFunction, 4>, 4> h{};
        for (int p = 0; p < 4; ++p)
            for (int i = 0; i < 4; ++i) h[p][i] = function_arg(args.at("h")[p][i]);
        std::array<BooleanFunction, 4> quad = construct_c3_quadruple(h);
        out.tables.assign(quad.begin(), quad.end());
    } else if (op == "c4") {
        C4Case which = args.at("case").get<std::string>() == "plateaued"
                           ? C4Case::FourPlateaued
                           : C4Case::BentSpace;
        out.tables.push_back(construct_c4(
            function_arg(args.at("a")), function_arg(args.at("h1")),
            function_arg(args.at("h2")), function_arg(args.at("g1")),
            function_arg(args.at("g2")), which));
    } else if (op == "gmm") {
        GmmSpec spec;
        if (args.contains("spec")) {
            spec = gmm_spec_from_json(args.at("spec"));
        } else if (args.contains("default_maps")) {
            const json& p = args.at("default_maps");
            spec = gmm_default_maps(p.at("n").get<int>(), p.at("s").get<int>(),
                                    p.at("t").get<int>(),
                                    p.at("e0_size").get<std::uint32_t>(),
                                    p.at("min_weight").get<int>());
        } else if (args.contains("random")) {
            const json& p = args.at("random");
            spec = random_gmm_spec(p.at("n").get<int>(), p.at("s").get<int>(),
                                   p.at("t").get<int>(),
                                   p.at("e0_size").get<std::uint32_t>(),
                                   p.at("min_weight").get<int>(), seed);
        } else {
            throw ParseError("gmm args need \"spec\", \"default_maps\" or \"random\"");
        }
        GmmResult r = build_gmm(spec);
        out.tables.push_back(r.f);
        out.report["spec"] = gmm_spec_to_json(spec);
        out.report["realized_values"] = r.realized_values;
        out.report["guaranteed_values"] = r.guaranteed_values;
        out.report["resiliency_bound"] = gmm_resiliency_bound(spec);
    } else if (op == "concatenate_4") {
        std::array<BooleanFunction, 4> f{
            function_arg(args.at("f")[0]), function_arg(args.at("f")[1]),
            function_arg(args.at("f")[2]), function_arg(args.at("f")[3])};
        out.tables.push_back(concatenate_4(f, args.at("alpha").get<std::uint32_t>(),
                                           args.at("beta").get<std::uint32_t>()));
    } else {
        throw ParseError("unknown operation: " + op);
    }

    if (out.tables.size() == 4) {
        // quadruple constructions also report the concatenation check
        std::array<BooleanFunction, 4> quad{out.tables[0], out.tables[1], out.tables[2],
                                            out.tables[3]};
        QuadrupleReport qr = verify_5valued_quadruple(quad);
        out.report["quadruple"] = {{"s1_pairwise_disjoint", qr.s1_pairwise_disjoint},
                                   {"s2_all_equal", qr.s2_all_equal},
                                   {"dual_sum_one", qr.dual_sum_one}};
        int m = out.tables[0].n();
        BooleanFunction concat =
            concatenate_4(quad, std::uint32_t{1} << (m + 1), std::uint32_t{1} << m);
        out.report["concatenation"] = classify_report(concat);
    }
    return out;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"construction and certification of Boolean functions with "
                 "5-valued Walsh spectra"};
    app.require_subcommand(1);
    app.fallthrough();
    bool human = false;
    std::uint64_t seed = 0;
    std::string out_path;
    app.add_flag("--human", human, "human-readable rendering instead of JSON");
    app.add_option("--seed", seed, "seed for randomized instance factories");
    app.add_option("--out", out_path, "output path for built truth tables");

    std::string input, query_path, recipe_path;
    auto* c_classify = app.add_subcommand("classify", "classify a truth table file");
    c_classify->add_option("input", input)->required();

    auto* c_build = app.add_subcommand("build", "run a construction recipe");
    c_build->add_option("recipe", recipe_path)->required();

    std::uint32_t alpha = 0, beta = 0;
    bool sweep = false;
    auto* c_dec = app.add_subcommand("decompose", "4-decomposition of a bent function");
    c_dec->add_option("input", input)->required();
    c_dec->add_option("--alpha", alpha);
    c_dec->add_option("--beta", beta);
    c_dec->add_flag("--sweep", sweep, "report every (alpha, beta) pair");

    auto* c_cert = app.add_subcommand("certify", "totally-disjoint certification of a pair");
    c_cert->add_option("pair", recipe_path)->required();

    auto* c_prof = app.add_subcommand("profile", "sequence profile of an ordered support");
    c_prof->add_option("support", recipe_path)->required();
    c_prof->add_option("--query", query_path, "check bent distance of this table to the profile");

    CLI11_PARSE(app, argc, argv);

    if (c_classify->parsed()) {
        json r = classify_report(parse_truth_table_hex(slurp(input)));
        if (human)
            print_human_classification(r);
        else
            std::cout << r.dump(2) << "\n";
        return 0;
    }

    if (c_build->parsed()) {
        json recipe = json::parse(slurp(recipe_path));
        BuildOutput out = run_build(recipe, seed);
        std::string target = !out_path.empty()
                                 ? out_path
                                 : recipe.value("out", std::string{});
        json report = out.report;
        json tables = json::array();
        for (std::size_t i = 0; i < out.tables.size(); ++i) {
            std::string hex = emit_truth_table_hex(out.tables[i]);
            json entry = classify_report(out.tables[i]);
            entry["table"] = hex;
            if (!target.empty()) {
                std::string path = target;
                if (out.tables.size() > 1) {
                    std::string suffix = "." + std::to_string(i + 1);
                    std::size_t dot = path.find(".tt.hex");
                    path = dot == std::string::npos ? path + suffix
                                                    : path.substr(0, dot) + suffix + ".tt.hex";
                }
                write_file(path, hex + "\n");
                entry["path"] = path;
            }
            tables.push_back(entry);
        }
        report["outputs"] = tables;
        if (human) {
            for (auto& entry : report["outputs"])
                print_human_classification(entry);
        } else {
            std::cout << report.dump(2) << "\n";
        }
        return 0;
    }

    if (c_dec->parsed()) {
        BooleanFunction f = parse_truth_table_hex(slurp(input));
        // a non-bent input is a precondition failure for this command
        if (!classify(wht(f)).is_bent())
            throw PreconditionError("decompose needs a bent input");
        if (sweep) {
            json reports = json::array();
            for (std::uint32_t a = 1; a < f.size(); ++a)
                for (std::uint32_t b = a + 1; b < f.size(); ++b)
                    reports.push_back(decomposition_to_json(four_decompose(f, a, b)));
            std::cout << reports.dump(2) << "\n";
        } else {
            if (alpha == 0 || beta == 0)
                throw PreconditionError("--alpha and --beta are required without --sweep");
            json r = decomposition_to_json(four_decompose(f, alpha, beta));
            if (human)
                std::cout << "kind = " << r["kind"].get<std::string>() << "\n"
                          << r.dump(2) << "\n";
            else
                std::cout << r.dump(2) << "\n";
        }
        return 0;
    }

    if (c_cert->parsed()) {
        json args = json::parse(slurp(recipe_path));
        DisjointPair p = pair_arg(args.contains("args") ? args.at("args") : args);
        DisjointCertificate cert = certify_totally_disjoint(p);
        json r;
        r["result"] = cert.describe();
        r["pass"] = bool(cert);
        if (!cert) {
            r["u"] = cert.u;
            r["x1"] = cert.x1;
            r["x2"] = cert.x2;
        }
        if (human) {
            std::cout << (bool(cert) ? "totally disjoint\n"
                                     : std::string("violation at u = ") +
                                           std::to_string(cert.u) + ": " +
                                           cert.describe() + "\n");
        } else {
            std::cout << r.dump(2) << "\n";
        }
        return 0;
    }

    if (c_prof->parsed()) {
        json args = json::parse(slurp(recipe_path));
        int n = 0;
        std::vector<std::uint32_t> omegas =
            omega_list_arg(args.contains("support") ? args.at("support") : args, &n);
        SequenceProfile p = sequence_profile(n, omegas);
        json r;
        r["n"] = p.n;
        r["m"] = p.m;
        json gens = json::array();
        for (const BooleanFunction& g : p.generators)
            gens.push_back(emit_truth_table_hex(g));
        r["generators"] = gens;
        r["distinct_count"] = p.distinct_functions().size();
        if (!query_path.empty()) {
            BooleanFunction g = parse_truth_table_hex(slurp(query_path));
            r["query_bent_distance"] = bent_distance_to_profile(g, p);
        }
        if (human) {
            std::cout << "profile on " << r["m"] << " variables, "
                      << r["distinct_count"] << " distinct elements\n";
            if (r.contains("query_bent_distance"))
                std::cout << "query at bent distance: "
                          << (r["query_bent_distance"].get<bool>() ? "yes" : "no")
                          << "\n";
        } else {
            std::cout << r.dump(2) << "\n";
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NotBooleanSpectrum& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 3;
    } catch (const ConditionViolated& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
