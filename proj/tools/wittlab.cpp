// wittlab: exact quadratic modules over Z, hyperbolic orbit reduction,
// simplicial homology, and the orthogonality flag complex, from the shell.
// Exit codes: 0 ok, 1 usage/parse error, 2 validation violation, 3 suite failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "wittlab/acceptance.hpp"
#include "wittlab/arf.hpp"
#include "wittlab/connectivity.hpp"
#include "wittlab/json_io.hpp"
#include "wittlab/ka.hpp"
#include "wittlab/kernel_restriction.hpp"

using namespace wittlab;

namespace {

struct Output {
    std::string format = "json";
    std::string path;  // empty: stdout

    void emit(const json& j) const {
        std::string body;
        if (format == "csv") {
            std::vector<std::pair<std::string, std::string>> cols;
            flatten(j, "", cols);
            std::string header, row;
            for (size_t i = 0; i < cols.size(); ++i) {
                header += (i ? "," : "") + cols[i].first;
                row += (i ? "," : "") + csv_quote(cols[i].second);
            }
            body = header + "\n" + row + "\n";
        } else {
            body = j.dump(2) + "\n";
        }
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw input_error("cannot open output file: " + path);
            out << body;
        }
    }

    static void flatten(const json& j, const std::string& prefix,
                        std::vector<std::pair<std::string, std::string>>& cols) {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
                flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), cols);
        } else if (j.is_array()) {
            for (size_t i = 0; i < j.size(); ++i)
                flatten(j[i], prefix + "." + std::to_string(i), cols);
        } else if (j.is_string()) {
            cols.emplace_back(prefix, j.get<std::string>());
        } else {
            cols.emplace_back(prefix, j.dump());
        }
    }

    static std::string csv_quote(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        return q + "\"";
    }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

FormParameter parse_param(int epsilon, const std::string& lambda) {
    LambdaSub l;
    if (lambda == "zero") l = LambdaSub::zero;
    else if (lambda == "even") l = LambdaSub::even;
    else if (lambda == "all") l = LambdaSub::all;
    else throw input_error("lambda must be zero|even|all");
    return FormParameter(epsilon, l);
}

int thread_cap() {
    const char* env = std::getenv("WITTLAB_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wittlab: quadratic modules, orbit reduction, homology, K^a complexes"};
    app.require_subcommand(1);
    (void)thread_cap();  // parallelism cap honoured (all pipelines run serially)

    Output out;
    int bound = 1;
    int max_degree = 3;
    int pi1_budget = 10000;
    unsigned long long seed = SuiteConfig{}.seed;
    app.add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out.path, "output file (default stdout)");
    app.add_option("--bound", bound, "coefficient bound for searches");
    app.add_option("--max-degree", max_degree, "top homology degree");
    app.add_option("--pi1-budget", pi1_budget, "Tietze simplification budget");
    app.add_option("--seed", seed, "seed for randomized suites");

    std::string in_a, in_b, in_c;
    int epsilon = -1;
    std::string lambda = "even";
    int depth = 10, level = 1, stabilize = 0, g_claim = -1;
    std::string vertex_list, profile = "desk", target_path;

    auto* validate_cmd = app.add_subcommand("validate", "check quadratic module invariants");
    validate_cmd->add_option("module", in_a)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "carry an H^{n+1} vector into H + 0");
    reduce_cmd->add_option("vector", in_a)->required();
    reduce_cmd->add_option("--epsilon", epsilon);
    reduce_cmd->add_option("--lambda", lambda);
    reduce_cmd->add_option("--target", target_path, "search a move word toward this vector");
    reduce_cmd->add_option("--depth", depth, "BFS depth for --target");

    auto* witt_cmd = app.add_subcommand("witt", "bounded Witt index lower bound");
    witt_cmd->add_option("module", in_a)->required();
    witt_cmd->add_option("--stabilize", stabilize, "k for the stable lower bound");

    auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of a (-1,2Z) module");
    arf_cmd->add_option("module", in_a)->required();

    auto* comp_cmd = app.add_subcommand("complement", "orthogonal complement splitting");
    comp_cmd->add_option("target", in_a)->required();
    comp_cmd->add_option("morphism", in_b)->required();
    comp_cmd->add_option("--source", in_c, "source module (default: hyperbolic of fitting rank)");

    auto* ka_cmd = app.add_subcommand("ka", "orthogonality complex of a module");
    ka_cmd->add_option("module", in_a)->required();
    ka_cmd->add_option("--g-claim", g_claim, "connectivity claim to test (default: certified bound)");

    auto* hom_cmd = app.add_subcommand("homology", "integral homology of a complex");
    hom_cmd->add_option("complex", in_a)->required();

    auto* wcm_cmd = app.add_subcommand("wcm", "weak Cohen-Macaulay check");
    wcm_cmd->add_option("complex", in_a)->required();
    wcm_cmd->add_option("-n,--level", level)->required();

    auto* lcm_cmd = app.add_subcommand("lcm", "local Cohen-Macaulay check");
    lcm_cmd->add_option("complex", in_a)->required();
    lcm_cmd->add_option("-n,--level", level)->required();

    auto* p25_cmd = app.add_subcommand("prop25", "full-subcomplex inclusion harness");
    p25_cmd->add_option("complex", in_a)->required();
    p25_cmd->add_option("--vertices", vertex_list, "comma-separated Y vertices")->required();
    p25_cmd->add_option("-n,--level", level)->required();

    auto* trans_cmd = app.add_subcommand("transitivity", "automorphism moving one vertex to another");
    trans_cmd->add_option("module", in_a)->required();
    trans_cmd->add_option("h0", in_b)->required();
    trans_cmd->add_option("h1", in_c)->required();

    auto* cancel_cmd = app.add_subcommand("cancel", "cancellation: M+H = N+H gives M = N");
    cancel_cmd->add_option("module_m", in_a)->required();
    cancel_cmd->add_option("module_n", in_b)->required();
    cancel_cmd->add_option("phi", in_c)->required();

    auto* suite_cmd = app.add_subcommand("suite", "run the acceptance suite");
    suite_cmd->add_option("--profile", profile);

    // global flags remain usable after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) {
            QuadraticModule m = json_to_module(load_json(in_a));
            ValidationResult v = validate(m);
            json j;
            j["ok"] = v.ok;
            if (!v.ok) j["violation"] = v.violation;
            out.emit(j);
            return v.ok ? 0 : 2;
        }
        if (*reduce_cmd) {
            FormParameter param = parse_param(epsilon, lambda);
            HVector v(param, json_to_vec(load_json(in_a)));
            json j;
            if (!target_path.empty()) {
                HVector w(param, json_to_vec(load_json(target_path)));
                Int gv = gcd_all(v.coords), gw = gcd_all(w.coords);
                if (gv != gw) {
                    j["status"] = "gcd-obstruction";
                    j["gcd_source"] = int_to_json(gv);
                    j["gcd_target"] = int_to_json(gw);
                    out.emit(j);
                    return 0;
                }
                auto word = orbit_search(v, w, depth);
                j["status"] = word ? "found" : "not-found";
                if (word) j["word"] = word_to_json(*word);
            } else {
                auto red = reduce_to_first_block(v);
                j["word"] = word_to_json(red.word);
                j["result"] = hvector_to_json(red.result);
            }
            out.emit(j);
            return 0;
        }
        if (*witt_cmd) {
            QuadraticModule m = json_to_module(load_json(in_a));
            json j;
            if (stabilize > 0) {
                j["stable_witt_lower_bound"] = stable_witt_lower_bound(m, stabilize, bound);
                j["stabilized_by"] = stabilize;
            } else {
                WittBound w = witt_index_lower_bound(m, bound);
                j["witt_lower_bound"] = w.g_lb;
                if (w.witness) j["witness"] = morphism_to_json(*w.witness);
            }
            j["bound"] = bound;
            out.emit(j);
            return 0;
        }
        if (*arf_cmd) {
            QuadraticModule m = json_to_module(load_json(in_a));
            json j;
            j["arf"] = arf_invariant(m);
            out.emit(j);
            return 0;
        }
        if (*comp_cmd) {
            QuadraticModule target = json_to_module(load_json(in_a));
            Mat f = json_to_mat(load_json(in_b).at("matrix"));
            QuadraticModule source = in_c.empty()
                                         ? hyperbolic_module(target.param, f.cols() / 2)
                                         : json_to_module(load_json(in_c));
            ComplementSplit split = orthogonal_complement(make_morphism(source, target, f));
            json j;
            j["complement"] = module_to_json(split.complement);
            j["basis"] = mat_to_json(split.basis);
            j["change_of_basis"] = mat_to_json(split.change_of_basis);
            out.emit(j);
            return 0;
        }
        if (*ka_cmd) {
            QuadraticModule m = json_to_module(load_json(in_a));
            KaComplex k = build_ka(m, bound);
            json j;
            j["vertices"] = k.vertex_count();
            j["images"] = k.image_count();
            auto edges = k.edge_count();
            if (edges) j["edges"] = *edges;
            else j["edges"] = "not_computed";
            if (k.vertex_count() > 0 && k.vertex_count() <= 2000) {
                SimplicialComplex flag = k.to_flag_complex(2000);
                j["homology"] = homology_to_json(homology(flag, max_degree));
            }
            int claim = g_claim;
            if (claim < 0) claim = witt_index_lower_bound(m, bound).g_lb;
            if (claim > 0) {
                Theorem32Evidence ev = theorem32_evidence(m, claim, bound, max_degree, pi1_budget);
                json cl = json::array();
                for (const auto& c : ev.clauses) {
                    json e;
                    e["claim"] = "thm32";
                    e["g"] = ev.g_claim;
                    e["bound"] = ev.coeff_bound;
                    e["clause"] = c.clause;
                    e["level"] = c.level;
                    e["status"] = c.status;
                    e["evidence_only"] = true;
                    cl.push_back(std::move(e));
                }
                j["theorem32"] = std::move(cl);
            }
            out.emit(j);
            return 0;
        }
        if (*hom_cmd) {
            json input = load_json(in_a);
            json j;
            if (input.contains("counts")) {
                std::vector<int> counts = input.at("counts").get<std::vector<int>>();
                auto faces = input.at("faces").get<std::vector<std::vector<std::vector<int>>>>();
                SemiSimplicialSet s = SemiSimplicialSet::validated(counts, faces);
                j["homology"] = homology_to_json(homology(s, max_degree));
            } else {
                SimplicialComplex x = json_to_complex(input);
                j["homology"] = homology_to_json(homology(x, max_degree));
            }
            out.emit(j);
            return 0;
        }
        if (*wcm_cmd || *lcm_cmd) {
            SimplicialComplex x = json_to_complex(load_json(in_a));
            CmReport rep = *wcm_cmd ? is_wcm(x, level, pi1_budget) : is_lcm(x, level, pi1_budget);
            json j;
            j["value"] = rep.value;
            j["level"] = level;
            if (rep.witness) {
                json w = json::array();
                for (int v : *rep.witness) w.push_back(v);
                j["witness"] = std::move(w);
            }
            out.emit(j);
            return 0;
        }
        if (*p25_cmd) {
            SimplicialComplex x = json_to_complex(load_json(in_a));
            std::vector<int> ys;
            std::stringstream ss(vertex_list);
            for (std::string tok; std::getline(ss, tok, ',');)
                if (!tok.empty()) ys.push_back(std::stoi(tok));
            Prop25Report rep = prop25_harness(x, ys, level, pi1_budget);
            json j;
            j["hypothesis_holds"] = rep.hypothesis_holds;
            j["conclusion_holds"] = rep.conclusion_holds;
            j["level"] = level;
            out.emit(j);
            return 0;
        }
        if (*trans_cmd) {
            QuadraticModule m = json_to_module(load_json(in_a));
            Mat h0 = json_to_mat(load_json(in_b).at("matrix"));
            Mat h1 = json_to_mat(load_json(in_c).at("matrix"));
            auto f = transitivity_witness(m, h0, h1, bound);
            json j;
            j["status"] = f ? "found" : "not-found";
            if (f) j["automorphism"] = mat_to_json(*f);
            out.emit(j);
            return 0;
        }
        if (*cancel_cmd) {
            QuadraticModule m = json_to_module(load_json(in_a));
            QuadraticModule n = json_to_module(load_json(in_b));
            Mat phi = json_to_mat(load_json(in_c).at("matrix"));
            auto iso = cancellation_witness(m, n, phi, bound);
            json j;
            j["status"] = iso ? "found" : "not-found";
            if (iso) j["isomorphism"] = mat_to_json(*iso);
            out.emit(j);
            return 0;
        }
        if (*suite_cmd) {
            if (profile != "desk") {
                std::cerr << "unknown profile: " << profile << "\n";
                return 1;
            }
            SuiteConfig cfg;
            cfg.seed = seed;
            cfg.pi1_budget = pi1_budget;
            cfg.echo_progress = true;
            json rep = suite_report(cfg);
            for (const auto& c : rep["criteria"])
                std::cerr << "criterion " << c["id"] << " (" << c["name"].get<std::string>()
                          << "): " << c["status"].get<std::string>() << "\n";
            out.emit(rep);
            return rep["all_pass"].get<bool>() ? 0 : 3;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
