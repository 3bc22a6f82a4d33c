#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monideal/monideal.hpp"

namespace monideal::cli {

using nlohmann::json;

/// Version tag written into every JSON document.
inline constexpr const char* kSchemaVersion = "monideal-output/v1";

json to_json(const Monomial& m);
/// {"dim": d, "generators": [[e1..ed], ...], "text": "(...)"}
json to_json(const MonomialIdeal& ideal);
/// 1-based index list.
json to_json(const PrimeSupport& p);
json to_json(const std::vector<PrimeSupport>& supports);
/// {"components": [{"indices": [...], "exponents": [...]}, ...]}
json to_json(const Decomposition& d);
json to_json(const PowerReport& r);
json to_json(const NormalityReport& r);
json to_json(const EquivalenceReport& r);

/// `k | equal | ass_condition | normal_at_k` rows.
struct TableRow {
  std::uint64_t k;
  bool equal;
  bool ass_condition;
  bool normal_at_k;
};
std::string power_table(const std::vector<TableRow>& rows);

}  // namespace monideal::cli
