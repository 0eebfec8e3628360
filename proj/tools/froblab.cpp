// Command-line front end: ring inspection, orbit partitions, partition duals,
// local-global scans, extension searches, poset analysis, and the named
// verification scenarios.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "froblab/codes.hpp"
#include "froblab/json_io.hpp"
#include "froblab/parallel.hpp"
#include "froblab/scenarios.hpp"

using namespace froblab;
using nlohmann::ordered_json;

namespace {

Character pick_character(const Ring& R, int k) {
    const auto chis = all_generating_characters(R);
    if (chis.empty()) throw SpecError("ring " + R->name() + " has no generating character");
    if (k < 0 || k >= static_cast<int>(chis.size()))
        throw SpecError("character index out of range (ring has " +
                        std::to_string(chis.size()) + " generating characters)");
    return chis[k];
}

Partition partition_from_source(const std::string& src, const Ring& R, int n) {
    const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R->size()), n);
    if (src == "singletons") return Partition::singletons(universe);
    if (src == "oneblock") return Partition::one_block(universe);
    if (src == "hamming" || src.rfind("weight:", 0) == 0) {
        const std::string wspec = src == "hamming" ? "hamming" : src.substr(7);
        const WeightSpec w = parse_weight_spec(wspec, R, n);
        std::map<std::string, int> ids;
        std::vector<int> labels(universe);
        for (std::uint64_t v = 0; v < universe; ++v) {
            const Vec x = vec_unrank(*R, n, v);
            const auto key = w.fn(x).to_string();
            auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
            (void)fresh;
            labels[v] = it->second;
        }
        return Partition(std::move(labels));
    }
    if (src.rfind("orbits:", 0) == 0) {
        const MatrixGroup U = parse_group_spec(src.substr(7), R, n);
        return orbit_partition(U, OrbitSide::Right);
    }
    throw SpecError("unknown partition source '" + src +
                    "' (singletons | oneblock | hamming | weight:<spec> | orbits:<spec>)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_partition_summary(const Partition& P, const std::string& label) {
    std::cout << label << ": " << P.block_count() << " blocks over " << P.universe_size()
              << " elements\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring partition duality and extension-theorem workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_out = false;
    int threads = 1;
    std::uint64_t budget = 0;
    app.add_flag("--json", json_out, "emit JSON instead of text");
    app.add_option("--threads", threads, "worker thread cap");
    app.add_option("--budget", budget, "enumeration budget override");

    // ring info
    auto* ring_cmd = app.add_subcommand("ring", "ring operations");
    auto* ring_info = ring_cmd->add_subcommand("info", "build a ring and report its invariants");
    std::string ring_spec;
    ring_info->add_option("spec", ring_spec, "ring spec")->required();

    // orbits
    auto* orbits_cmd = app.add_subcommand("orbits", "orbit partition of a matrix group");
    std::string o_ring, o_group, o_side = "right";
    int o_n = 1;
    orbits_cmd->add_option("ring", o_ring)->required();
    orbits_cmd->add_option("n", o_n)->required();
    orbits_cmd->add_option("group", o_group)->required();
    orbits_cmd->add_option("--side", o_side, "right | left");

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "chi-dual of a partition of R^n");
    std::string d_ring, d_src, d_side = "left";
    int d_n = 1, d_char = 0;
    dual_cmd->add_option("ring", d_ring)->required();
    dual_cmd->add_option("n", d_n)->required();
    dual_cmd->add_option("--partition", d_src, "partition source")->required();
    dual_cmd->add_option("--side", d_side, "left | right");
    dual_cmd->add_option("--char", d_char, "generating character index");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "local-global scan of a subgroup");
    std::string s_ring, s_group;
    int s_n = 1;
    ScanLimits s_limits;
    scan_cmd->add_option("ring", s_ring)->required();
    scan_cmd->add_option("n", s_n)->required();
    scan_cmd->add_option("group", s_group)->required();
    scan_cmd->add_option("--max-gens", s_limits.max_code_generators);
    scan_cmd->add_option("--max-size", s_limits.max_code_size);

    // extend
    auto* extend_cmd = app.add_subcommand("extend", "all extensions of a map given by a file");
    std::string e_file;
    extend_cmd->add_option("file", e_file, "JSON {ring, n, code_generators, image_vectors, weight}")
        ->required();

    // poset
    auto* poset_cmd = app.add_subcommand("poset", "poset analysis");
    auto* poset_classify = poset_cmd->add_subcommand("classify", "hierarchical classification");
    std::string p_file;
    poset_classify->add_option("file", p_file)->required();
    auto* poset_ce = poset_cmd->add_subcommand("counterexample",
                                               "non-extendable isometry for a non-hierarchical poset");
    std::string pc_file, pc_ring;
    poset_ce->add_option("file", pc_file)->required();
    poset_ce->add_option("ring", pc_ring)->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run named verification scenarios");
    std::string v_name;
    verify_cmd->add_option("name", v_name, "scenario name or 'all'")->required();

    CLI11_PARSE(app, argc, argv);
    set_worker_threads(threads);
    if (budget > 0) set_default_budget(budget);

    try {
        if (*ring_info) {
            const Ring R = build_ring(ring_spec);
            const auto us = units(*R);
            const auto chi = find_generating_character(R);
            if (json_out) {
                ordered_json j = ring_to_json(*R);
                j["units"] = us;
                j["frobenius"] = chi.has_value();
                if (chi) j["generating_character"] = character_to_json(*chi);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "ring " << R->name() << " (spec " << R->spec() << "), size "
                          << R->size() << ", axioms verified\n";
                std::cout << "units (" << us.size() << "):";
                for (int u : us) std::cout << " " << R->element_name(u);
                std::cout << "\nfrobenius: " << (chi ? "yes" : "no") << "\n";
                if (chi) {
                    std::cout << "generating character exponents:";
                    for (int e : chi->exponents()) std::cout << " " << e;
                    std::cout << " (orders:";
                    for (int d : chi->decomposition()->orders()) std::cout << " " << d;
                    std::cout << ")\n";
                }
            }
            return 0;
        }
        if (*orbits_cmd) {
            const Ring R = build_ring(o_ring);
            const MatrixGroup U = parse_group_spec(o_group, R, o_n);
            if (o_side != "left" && o_side != "right")
                throw SpecError("--side must be left or right");
            const OrbitSide side = o_side == "left" ? OrbitSide::Left : OrbitSide::Right;
            const Partition P = orbit_partition(U, side);
            if (json_out) {
                ordered_json j = partition_to_json(P);
                j["group_order"] = U.order();
                j["side"] = o_side;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "group " << U.name() << ", order " << U.order() << "\n";
                print_partition_summary(P, side == OrbitSide::Right ? "P_U (right orbits)"
                                                                    : "P_{U^T} (left orbits)");
            }
            return 0;
        }
        if (*dual_cmd) {
            const Ring R = build_ring(d_ring);
            const Character chi = pick_character(R, d_char);
            const Partition P = partition_from_source(d_src, R, d_n);
            if (d_side != "left" && d_side != "right")
                throw SpecError("--side must be left or right");
            const ActionSide side = d_side == "right" ? ActionSide::Right : ActionSide::Left;
            const auto res = chi_dual_with_table(P, chi, d_n, side);
            const bool reflexive = is_reflexive(P, chi, d_n);
            if (json_out) {
                ordered_json j;
                j["chi"] = character_to_json(chi);
                j["side"] = d_side;
                j["partition"] = partition_to_json(P);
                j["dual"] = partition_to_json(res.dual);
                j["reflexive"] = reflexive;
                j["krawtchouk"] = krawtchouk_to_json(res.table);
                std::cout << j.dump(2) << "\n";
            } else {
                print_partition_summary(P, "P");
                print_partition_summary(res.dual, d_side == "right" ? "P^[chi,r]" : "P^[chi,l]");
                std::cout << "reflexive: " << (reflexive ? "yes" : "no") << "\n";
                std::cout << "krawtchouk rows: " << res.table.rows.size() << " (order m = "
                          << res.table.m << ")\n";
            }
            return 0;
        }
        if (*scan_cmd) {
            const Ring R = build_ring(s_ring);
            const MatrixGroup U = parse_group_spec(s_group, R, s_n);
            const ScanResult res = local_global_scan(R, s_n, U, s_limits);
            if (json_out) {
                std::cout << scan_to_json(res).dump(2) << "\n";
            } else {
                std::cout << "group " << U.name() << ", order " << U.order() << "\n";
                std::cout << "codes " << res.codes << ", assignments " << res.assignments
                          << ", linear maps " << res.linear_maps << ", local maps "
                          << res.local_maps << "\n";
                if (!res.complete) std::cout << "scan truncated by budget\n";
                if (res.holds) {
                    std::cout << "local-global holds within limits\n";
                } else {
                    std::cout << "counterexample found on a code of size "
                              << res.counterexample->code_size << "\n";
                }
            }
            return res.holds ? 0 : 1;
        }
        if (*extend_cmd) {
            const auto j = nlohmann::json::parse(read_file(e_file));
            const Ring R = build_ring(j.at("ring").get<std::string>());
            const int n = j.at("n").get<int>();
            std::vector<Vec> gens, imgs;
            for (const auto& g : j.at("code_generators")) gens.push_back(g.get<Vec>());
            for (const auto& y : j.at("image_vectors")) imgs.push_back(y.get<Vec>());
            const WeightSpec w = parse_weight_spec(j.at("weight").get<std::string>(), R, n);
            const CodePtr C = Code::closure(R, n, gens);
            const auto f = LinearMap::build(C, imgs);
            if (!f) throw SpecError("image vectors do not define a linear map");
            const auto pres = preserves_weight(*f, w);
            const auto exts = extension_search(*f, w);
            if (json_out) {
                ordered_json out;
                out["code_size"] = C->size();
                out["weight"] = w.name;
                out["preserves_weight"] = pres.preserved;
                ordered_json ms = ordered_json::array();
                for (const auto& M : exts) ms.push_back(matrix_to_json(M));
                out["extensions"] = ms;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "code size " << C->size() << ", weight " << w.name
                          << ", preserved: " << (pres.preserved ? "yes" : "no") << "\n";
                std::cout << exts.size() << " extension(s)\n";
                for (const auto& M : exts) std::cout << "  " << M.to_string() << "\n";
            }
            return 0;
        }
        if (*poset_classify) {
            const Poset P = Poset::parse(read_file(p_file));
            const auto cls = classify_hierarchical(P);
            if (json_out) {
                ordered_json j;
                j["n"] = P.n();
                j["hierarchical"] = cls.hierarchical();
                if (cls.shape) j["level_sizes"] = cls.shape->level_sizes;
                if (cls.witness)
                    j["witness"] = ordered_json{{"level", cls.witness->level},
                                                {"alpha", cls.witness->alpha + 1},
                                                {"beta", cls.witness->beta + 1}};
                std::cout << j.dump(2) << "\n";
            } else if (cls.hierarchical()) {
                std::cout << "hierarchical H(" << P.n() << ";";
                for (std::size_t i = 0; i < cls.shape->level_sizes.size(); ++i)
                    std::cout << (i ? "," : " ") << cls.shape->level_sizes[i];
                std::cout << ")\n";
            } else {
                std::cout << "non-hierarchical; witness: level " << cls.witness->level
                          << ", alpha " << cls.witness->alpha + 1 << ", beta "
                          << cls.witness->beta + 1 << "\n";
            }
            return 0;
        }
        if (*poset_ce) {
            const Poset P = Poset::parse(read_file(pc_file));
            const Ring R = build_ring(pc_ring);
            const auto ce = nonhier_counterexample(P, R);
            if (json_out) {
                ordered_json j;
                j["e_hat"] = ce.e_hat;
                j["e_beta"] = ce.e_beta;
                j["weight"] = ce.weight;
                j["code_size"] = ce.code_elements.size();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "isometric one-generator codes over " << R->name() << ":\n";
                std::cout << "  C  = <" << ce.e_hat[0];
                for (std::size_t i = 1; i < ce.e_hat.size(); ++i) std::cout << "," << ce.e_hat[i];
                std::cout << ">,  C' = <" << ce.e_beta[0];
                for (std::size_t i = 1; i < ce.e_beta.size(); ++i) std::cout << "," << ce.e_beta[i];
                std::cout << ">,  common weight " << ce.weight << "\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            std::vector<std::string> names;
            if (v_name == "all") names = scenario_names();
            else names.push_back(v_name);
            bool all_pass = true;
            ordered_json reports = ordered_json::array();
            for (const auto& nm : names) {
                const ScenarioReport rep = run_named_scenario(nm);
                all_pass = all_pass && rep.pass();
                if (json_out) {
                    reports.push_back(rep.to_json());
                } else {
                    std::cout << (rep.pass() ? "PASS" : "FAIL") << " " << rep.scenario << " ("
                              << rep.runtime_ms << " ms)\n";
                    if (!rep.pass()) std::cout << rep.witnesses.dump(2) << "\n";
                }
            }
            if (json_out) std::cout << reports.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
