#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hochlat/bimodule.hpp"
#include "hochlat/chains.hpp"
#include "hochlat/homology.hpp"
#include "hochlat/natural_splitting.hpp"
#include "hochlat/semilattice.hpp"

namespace hochlat {

using json = nlohmann::ordered_json;

// All file formats are strict UTF-8 JSON; parsers reject unknown keys.
//
//   table:    {"elements": ["a", ...], "table": [[...], ...], "unit": i|null}
//   morphism: {"source": path, "target": path, "map": [i, ...]}
//             (paths resolved relative to the morphism file)
//   element:  {"base": path-or-inline-table, "coeffs": {"label": "n/d", ...}}
//   chain:    {"base": path-or-inline-table, "degree": n,
//              "coeffs": {"(i,j,k)": "n/d", ...}}
//   bimodule: {"dim": d, "left": {"label": [["n/d", ...], ...], ...},
//              "right": {...}, "symmetric": bool}
//   tower:    dir/tower.json {"jmax": N, "chains": ["w1.json", ...]}
//             plus one chain file per degree.

json table_to_json(const SemigroupTable& s);
TablePtr table_from_json(const json& j, const Caps& caps = {});
TablePtr load_table(const std::filesystem::path& path, const Caps& caps = {});
void save_table(const SemigroupTable& s, const std::filesystem::path& path);

Morphism load_morphism(const std::filesystem::path& path, const Caps& caps = {});
void save_morphism(const Morphism& m, const std::filesystem::path& path,
                   const std::string& source_rel, const std::string& target_rel);

json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const json& j, const std::filesystem::path& base_dir,
                                 const Caps& caps = {});

json chain_to_json(const Chain& c);
Chain chain_from_json(const json& j, const std::filesystem::path& base_dir,
                      const Caps& caps = {});
Chain load_chain(const std::filesystem::path& path, const Caps& caps = {});
void save_chain(const Chain& c, const std::filesystem::path& path);

json bimodule_to_json(const Bimodule& m);
BimodulePtr bimodule_from_json(const json& j, const TablePtr& base, const Caps& caps = {});
BimodulePtr load_bimodule(const std::filesystem::path& path, const TablePtr& base,
                          const Caps& caps = {});
void save_bimodule(const Bimodule& m, const std::filesystem::path& path);

void save_tower(const SigmaTower& t, const std::filesystem::path& dir);
SigmaTower load_tower(const std::filesystem::path& dir, const Caps& caps = {});

// Report serialization (stable machine contract for --format json).
json homology_report_to_json(const HomologyReport& r);
json duality_report_to_json(const DualityReport& r);
json unitisation_report_to_json(const UnitisationReport& r);
json splitting_report_to_json(const SplittingReport& r, const std::string& table_desc);
json naturality_result_to_json(const NaturalityResult& r);
json homotopy_records_to_json(const std::vector<HomotopyCheckRecord>& records);

std::string tuple_key(const Tuple& t);
Tuple parse_tuple_key(const std::string& text);

}  // namespace hochlat
