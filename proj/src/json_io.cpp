#include "froblab/json_io.hpp"

namespace froblab {

using nlohmann::ordered_json;

ordered_json ring_to_json(const FiniteRing& R) {
    ordered_json add = ordered_json::array(), mul = ordered_json::array();
    for (int a = 0; a < R.size(); ++a) {
        ordered_json arow = ordered_json::array(), mrow = ordered_json::array();
        for (int b = 0; b < R.size(); ++b) {
            arow.push_back(R.add(a, b));
            mrow.push_back(R.mul(a, b));
        }
        add.push_back(std::move(arow));
        mul.push_back(std::move(mrow));
    }
    return ordered_json{{"name", R.name()},   {"size", R.size()}, {"add_table", add},
                        {"mul_table", mul},   {"zero", R.zero()}, {"one", R.one()}};
}

ordered_json character_to_json(const Character& chi) {
    return ordered_json{{"orders", chi.decomposition()->orders()}, {"exponents", chi.exponents()}};
}

ordered_json cyclo_to_json(const CyclotomicSum& s) {
    return ordered_json{{"m", s.order()}, {"coeffs", s.coeffs()}};
}

ordered_json partition_to_json(const Partition& P) {
    return ordered_json{{"universe_size", P.universe_size()}, {"block_of", P.labels()}};
}

ordered_json krawtchouk_to_json(const KrawtchoukTable& K) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : K.rows) {
        ordered_json r = ordered_json::array();
        for (const auto& s : row) r.push_back(s.coeffs());
        rows.push_back(std::move(r));
    }
    return ordered_json{{"m", K.m}, {"rows", rows}};
}

ordered_json matrix_to_json(const RingMatrix& M) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
    return rows;
}

ordered_json group_to_json(const MatrixGroup& U) {
    ordered_json els = ordered_json::array();
    for (const auto& M : U.elements()) els.push_back(M.entries());
    return ordered_json{{"ring_spec", U.ring()->spec()}, {"n", U.n()}, {"elements", els}};
}

ordered_json scan_to_json(const ScanResult& s) {
    ordered_json j{{"holds", s.holds},
                   {"complete", s.complete},
                   {"codes", s.codes},
                   {"assignments", s.assignments},
                   {"linear_maps", s.linear_maps},
                   {"local_maps", s.local_maps}};
    if (s.counterexample) {
        ordered_json gens = ordered_json::array(), imgs = ordered_json::array();
        for (const auto& g : s.counterexample->code_generators) gens.push_back(g);
        for (const auto& y : s.counterexample->images) imgs.push_back(y);
        j["counterexample"] = ordered_json{{"code_generators", gens},
                                           {"images", imgs},
                                           {"code_size", s.counterexample->code_size}};
    }
    return j;
}

ordered_json orbit_duality_to_json(const OrbitDualityReport& r) {
    ordered_json j{{"pass", r.pass},
                   {"right_orbits", r.right_orbits},
                   {"left_orbits", r.left_orbits},
                   {"chi_exponents", r.chi_exponents}};
    if (!r.failures.empty()) j["failures"] = r.failures;
    return j;
}

}  // namespace froblab
