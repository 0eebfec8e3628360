#pragma once

#include <json.hpp>

#include "froblab/characters.hpp"
#include "froblab/codes.hpp"
#include "froblab/cyclotomic.hpp"
#include "froblab/groups.hpp"
#include "froblab/partitions.hpp"
#include "froblab/ring.hpp"
#include "froblab/weights.hpp"

namespace froblab {

/// Stable JSON encodings used by the CLI. Key order is fixed, so output is
/// byte-deterministic for fixed inputs.
nlohmann::ordered_json ring_to_json(const FiniteRing& R);
nlohmann::ordered_json character_to_json(const Character& chi);
nlohmann::ordered_json cyclo_to_json(const CyclotomicSum& s);
nlohmann::ordered_json partition_to_json(const Partition& P);
nlohmann::ordered_json krawtchouk_to_json(const KrawtchoukTable& K);
nlohmann::ordered_json group_to_json(const MatrixGroup& U);
nlohmann::ordered_json matrix_to_json(const RingMatrix& M);
nlohmann::ordered_json scan_to_json(const ScanResult& s);
nlohmann::ordered_json orbit_duality_to_json(const OrbitDualityReport& r);

}  // namespace froblab
