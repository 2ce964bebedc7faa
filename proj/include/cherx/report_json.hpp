#pragma once

#include <json.hpp>

#include "cherx/decompose.hpp"

namespace cherx {

// Canonical JSON (alphabetically sorted keys, deterministic scalar strings).
nlohmann::json report_to_json(const DecompositionReport& rep);
nlohmann::json lowest_weights_to_json(const GroupData& g, const DecompositionReport& rep);
nlohmann::json char_table_to_json(const GroupData& g, const CharacterTable& t);
nlohmann::json molien_to_json(const GroupData& g, const CharacterTable& t, size_t chi,
                              const MolienSeries& s);
nlohmann::json equivalence_to_json(const EquivalenceReport& rep);
nlohmann::json pbw_to_json(const PBWElement& e);
nlohmann::json poly_to_json(const MultiPoly& f, bool indexed_params);

std::string char_table_text(const GroupData& g, const CharacterTable& t);

}  // namespace cherx
