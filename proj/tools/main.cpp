#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>

#include "grconv/constructions.hpp"
#include "grconv/serialize.hpp"
#include "grconv/specfile.hpp"

using namespace grconv;

namespace {

void print_code(const ConvCode& code) {
    std::cout << "length n = " << code.n << "\n";
    std::cout << "dimension k = " << code.k << "\n";
    std::cout << "field = " << code.field->name() << "\n";
    std::cout << "unit position t = " << code.t << "\n";
    if (!code.provenance.empty()) std::cout << "provenance: " << code.provenance << "\n";
    std::cout << "G(z):\n";
    for (int i = 0; i < code.k; ++i)
        for (int j = 0; j < code.n; ++j)
            std::cout << "  G[" << i << "][" << j << "] = " << code.G.entry(i, j).str() << "\n";
    if (code.H.cols() > 0) {
        std::cout << "H(z):\n";
        for (int i = 0; i < code.H.rows(); ++i)
            for (int j = 0; j < code.H.cols(); ++j)
                std::cout << "  H[" << i << "][" << j << "] = " << code.H.entry(i, j).str() << "\n";
        if (code.h_shift > 0)
            std::cout << "polynomial control matrix: H(z) * z^" << code.h_shift << "\n";
    }
    std::cout << "degree delta = " << code_degree(code) << "\n";
    auto noncat = is_noncatastrophic(code);
    std::cout << "noncatastrophic: " << (noncat.yes ? "yes" : "no") << " (" << noncat.detail << ")\n";
}

void print_report(const DistanceReport& rep) {
    std::cout << "free distance: " << rep.value << "\n";
    std::cout << "mode: " << (rep.mode == DistanceMode::exact ? "exact" : "upper_bound") << "\n";
    std::cout << "witness input:";
    for (const auto& p : rep.witness_input) std::cout << " [" << p.str() << "]";
    std::cout << "\nwitness codeword:";
    for (const auto& p : rep.witness_codeword) std::cout << " [" << p.str() << "]";
    std::cout << "\nexplored states: " << rep.explored_states << "\n";
    if (rep.cap_used) std::cout << "cap: " << *rep.cap_used << "\n";
}

int run_verify(const CodeSpecFile& spec) {
    int failures = 0;
    auto check = [&failures](const std::string& what, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
    };
    if (spec.has_word) {
        auto t = is_unit_pair(spec.word, spec.pair);
        check("unit pair w * g = z^t", t.has_value());
        if (t) {
            std::cout << "     t = " << *t << "\n";
            ConvCode code = build_from_spec(spec);
            auto dual = verify_duality(code);
            check("duality block f1*g1 = I", dual.f1g1_is_identity);
            check("duality block f1*g2 = 0", dual.f1g2_is_zero);
            check("duality block f2*g1 = 0", dual.f2g1_is_zero);
            check("duality block f2*g2 = I", dual.f2g2_is_identity);
            check("G * H = 0", (code.G * code.H).is_zero());
            check("noncatastrophic", is_noncatastrophic(code).yes);
        }
    }
    if (!spec.family_check.empty()) {
        std::vector<GroupRingElem> es;
        for (const auto& nm : spec.family_check) {
            const GroupRingElem* e = spec.element(nm);
            if (!e) throw std::invalid_argument("check_family references unknown element " + nm);
            es.push_back(*e);
        }
        check("complete orthogonal idempotent family {" + spec.family_check[0] + ", ...}",
              is_complete_orthogonal_family(es));
    }
    return failures == 0 ? 0 : 1;
}

SearchOptions options_from(int cap, long long budget) {
    SearchOptions opts;
    opts.weight_cap = cap;
    if (budget > 0) opts.node_budget = budget;
    return opts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convolutional codes from units in Laurent polynomials over group rings"};
    app.require_subcommand(1);

    std::string spec_path, machine_out, demo_name;
    std::string mode = "exact";
    int cap = 64;
    int max_degree = 6;
    long long budget = 0;
    long long specialize_p = 0;
    bool no_distance = false;

    auto* build = app.add_subcommand("build", "build a code from a spec file and print it");
    build->add_option("spec", spec_path, "spec file")->required();
    build->add_option("--machine", machine_out, "also write the machine-format document here");

    auto* verify = app.add_subcommand("verify", "run unit, duality and family checks");
    verify->add_option("spec", spec_path, "spec file")->required();

    auto* distance = app.add_subcommand("distance", "compute the free distance");
    distance->add_option("spec", spec_path, "spec file")->required();
    distance->add_option("--mode", mode, "exact | bounded")->check(CLI::IsMember({"exact", "bounded"}));
    distance->add_option("--cap", cap, "weight cap");
    distance->add_option("--max-degree", max_degree, "input degree bound for bounded mode");
    distance->add_option("--specialize", specialize_p, "prime for characteristic-0 codes");
    distance->add_option("--budget", budget, "node budget (also GRCONV_NODE_BUDGET)");

    auto* cat = app.add_subcommand("catalog", "list the built-in construction recipes");

    bool demo_all = false;
    auto* demo = app.add_subcommand("demo", "build one recipe and report on it");
    demo->add_option("name", demo_name, "recipe name from `catalog`");
    demo->add_flag("--all", demo_all, "build every recipe, name-sorted, without distances");
    demo->add_flag("--no-distance", no_distance, "skip the distance computation");
    demo->add_option("--cap", cap, "weight cap");
    demo->add_option("--budget", budget, "node budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            CodeSpecFile spec = parse_spec_file(spec_path);
            ConvCode code = build_from_spec(spec);
            print_code(code);
            if (!machine_out.empty()) {
                std::ofstream out(machine_out);
                out << serialize_code(code);
                std::cout << "machine format written to " << machine_out << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            CodeSpecFile spec = parse_spec_file(spec_path);
            return run_verify(spec);
        }
        if (distance->parsed()) {
            CodeSpecFile spec = parse_spec_file(spec_path);
            ConvCode code = build_from_spec(spec);
            SearchOptions opts = options_from(cap, budget);
            DistanceReport rep;
            long long p = specialize_p > 0 ? specialize_p : code.specialization_prime.value_or(0);
            if (!code.field->is_finite()) {
                if (p <= 0)
                    throw std::invalid_argument(
                        "characteristic-0 code: pass --specialize <prime> (or set specialize= in the spec)");
                ConvCode spec_code = specialize_code(code, p);
                std::cout << "specialized at p = " << p << "\n";
                rep = mode == "exact" ? free_distance_exact(spec_code, opts)
                                      : free_distance_bounded(spec_code, max_degree, opts);
                print_report(rep);
                auto lift = lift_specialized_witness(code, rep);
                std::cout << "lifted witness weight (characteristic-0 upper bound): " << lift.weight
                          << "\n";
            } else {
                rep = mode == "exact" ? free_distance_exact(code, opts)
                                      : free_distance_bounded(code, max_degree, opts);
                print_report(rep);
            }
            return 0;
        }
        if (cat->parsed()) {
            for (const auto& r : catalog()) {
                std::cout << r.name << "\t" << r.summary;
                if (r.claimed_distance) {
                    std::cout << "\t[fd " << *r.claimed_distance
                              << (r.specialize_prime ? " at p=" + std::to_string(*r.specialize_prime)
                                                     : "")
                              << "]";
                } else {
                    std::cout << "\t[fd measured]";
                }
                std::cout << "\n";
            }
            std::cout << catalog().size() << " recipes\n";
            return 0;
        }
        if (demo->parsed() && demo_all) {
            std::vector<std::string> names;
            for (const auto& r : catalog()) names.push_back(r.name);
            std::sort(names.begin(), names.end());
            for (const auto& nm : names) {
                const Recipe* r = find_recipe(nm);
                ConvCode code = r->build();
                std::cout << nm << ": (" << code.n << "," << code.k << ") over "
                          << code.field->name() << ", degree " << code_degree(code)
                          << ", noncatastrophic " << (is_noncatastrophic(code).yes ? "yes" : "no")
                          << "\n";
            }
            return 0;
        }
        if (demo->parsed()) {
            if (demo_name.empty()) {
                std::cerr << "demo needs a recipe name or --all\n";
                return 2;
            }
            const Recipe* r = find_recipe(demo_name);
            if (!r) {
                std::cerr << "no such recipe: " << demo_name << " (see `catalog`)\n";
                return 2;
            }
            std::cout << r->name << ": " << r->summary << "\n";
            ConvCode code = r->build();
            print_code(code);
            if (!no_distance) {
                SearchOptions opts = options_from(cap, budget);
                DistanceReport rep;
                if (r->specialize_prime) {
                    std::cout << "specialized at p = " << *r->specialize_prime << "\n";
                    rep = char0_distance_via_specialization(code, *r->specialize_prime, opts);
                } else {
                    rep = free_distance_exact(code, opts);
                }
                print_report(rep);
                if (r->claimed_distance)
                    std::cout << "expected fd " << *r->claimed_distance << ": "
                              << (rep.value == *r->claimed_distance && rep.mode == DistanceMode::exact
                                      ? "ok"
                                      : "MISMATCH")
                              << "\n";
            }
            return 0;
        }
    } catch (const spec_parse_error& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
