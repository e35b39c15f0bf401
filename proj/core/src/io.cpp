#include "hochlat/io.hpp"

#include <fstream>

#include "hochlat/detail/sparse_map.hpp"

namespace hochlat {

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& what) {
  if (!j.is_object()) throw IoError(what + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) {
        ok = true;
        break;
      }
    if (!ok) throw IoError(what + ": unknown key '" + key + "'");
  }
  for (const char* a : allowed)
    if (!j.contains(a)) throw IoError(what + ": missing key '" + std::string(a) + "'");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse '" + path.string() + "': " + e.what());
  }
  return j;
}

void write_json_file(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

TablePtr table_from_json_value(const json& base, const std::filesystem::path& base_dir,
                               const Caps& caps) {
  if (base.is_string())
    return load_table(base_dir / base.get<std::string>(), caps);
  return table_from_json(base, caps);
}

RationalMatrix matrix_from_json(const json& j, int dim, const std::string& what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dim))
    throw IoError(what + ": expected " + std::to_string(dim) + " rows");
  RationalMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw IoError(what + ": row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < dim; ++c)
      m.set(r, c, parse_rational(row[static_cast<std::size_t>(c)].get<std::string>()));
  }
  return m;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(format_rational(m.get(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string tuple_key(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

Tuple parse_tuple_key(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw IoError("malformed tuple key '" + text + "'");
  Tuple t;
  std::size_t pos = 1;
  const std::size_t end = text.size() - 1;
  if (pos == end) return t;
  while (pos < end) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos || next > end) next = end;
    const std::string part = text.substr(pos, next - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw IoError("malformed tuple key '" + text + "'");
    t.push_back(std::stoi(part));
    pos = next + 1;
  }
  return t;
}

json table_to_json(const SemigroupTable& s) {
  json j;
  j["elements"] = s.elements;
  json rows = json::array();
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(s.mul(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (s.unit)
    j["unit"] = *s.unit;
  else
    j["unit"] = nullptr;
  return j;
}

TablePtr table_from_json(const json& j, const Caps& caps) {
  check_keys(j, {"elements", "table", "unit"}, "table");
  if (!j["elements"].is_array()) throw IoError("table: 'elements' must be an array");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw IoError("table: element labels must be strings");
    elements.push_back(e.get<std::string>());
  }
  const int n = static_cast<int>(elements.size());
  if (!j["table"].is_array() || j["table"].size() != static_cast<std::size_t>(n))
    throw IoError("table: 'table' must have one row per element");
  std::vector<int> product;
  product.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw IoError("table: each row must have one entry per element");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw IoError("table: entries must be integers");
      product.push_back(v.get<int>());
    }
  }
  std::optional<int> unit;
  if (!j["unit"].is_null()) {
    if (!j["unit"].is_number_integer()) throw IoError("table: 'unit' must be an index or null");
    unit = j["unit"].get<int>();
  }
  return validate_table(std::move(elements), std::move(product), unit, caps);
}

TablePtr load_table(const std::filesystem::path& path, const Caps& caps) {
  return table_from_json(read_json_file(path), caps);
}

void save_table(const SemigroupTable& s, const std::filesystem::path& path) {
  write_json_file(table_to_json(s), path);
}

Morphism load_morphism(const std::filesystem::path& path, const Caps& caps) {
  const json j = read_json_file(path);
  check_keys(j, {"source", "target", "map"}, "morphism");
  const auto dir = path.parent_path();
  TablePtr source = table_from_json_value(j["source"], dir, caps);
  TablePtr target = table_from_json_value(j["target"], dir, caps);
  if (!j["map"].is_array()) throw IoError("morphism: 'map' must be an array");
  std::vector<int> map;
  for (const auto& v : j["map"]) {
    if (!v.is_number_integer()) throw IoError("morphism: map entries must be integers");
    map.push_back(v.get<int>());
  }
  return validate_morphism(std::move(source), std::move(target), std::move(map));
}

void save_morphism(const Morphism& m, const std::filesystem::path& path,
                   const std::string& source_rel, const std::string& target_rel) {
  json j;
  j["source"] = source_rel;
  j["target"] = target_rel;
  j["map"] = m.map;
  write_json_file(j, path);
}

json element_to_json(const AlgebraElement& a) {
  json j;
  j["base"] = table_to_json(*a.base);
  json coeffs = json::object();
  for (const auto& [s, v] : a.coeffs)
    coeffs[a.base->elements[static_cast<std::size_t>(s)]] = format_rational(v);
  j["coeffs"] = std::move(coeffs);
  return j;
}

AlgebraElement element_from_json(const json& j, const std::filesystem::path& base_dir,
                                 const Caps& caps) {
  check_keys(j, {"base", "coeffs"}, "element");
  TablePtr base = table_from_json_value(j["base"], base_dir, caps);
  AlgebraElement a = zero_element(base);
  if (!j["coeffs"].is_object()) throw IoError("element: 'coeffs' must be an object");
  for (const auto& [label, value] : j["coeffs"].items()) {
    auto it = std::find(base->elements.begin(), base->elements.end(), label);
    if (it == base->elements.end()) throw IoError("element: unknown label '" + label + "'");
    const int idx = static_cast<int>(it - base->elements.begin());
    detail::add_term(a.coeffs, idx, parse_rational(value.get<std::string>()));
  }
  return a;
}

json chain_to_json(const Chain& c) {
  if (c.module) throw UsageError("Usage", "only simplicial chains are serialized");
  json j;
  j["base"] = table_to_json(*c.base);
  j["degree"] = c.degree;
  json coeffs = json::object();
  for (const auto& [t, v] : c.coeffs) coeffs[tuple_key(t)] = format_rational(v);
  j["coeffs"] = std::move(coeffs);
  return j;
}

Chain chain_from_json(const json& j, const std::filesystem::path& base_dir, const Caps& caps) {
  check_keys(j, {"base", "degree", "coeffs"}, "chain");
  TablePtr base = table_from_json_value(j["base"], base_dir, caps);
  if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 0)
    throw IoError("chain: 'degree' must be a nonnegative integer");
  Chain c = zero_chain(std::move(base), j["degree"].get<int>());
  if (!j["coeffs"].is_object()) throw IoError("chain: 'coeffs' must be an object");
  for (const auto& [key, value] : j["coeffs"].items()) {
    const Tuple t = parse_tuple_key(key);
    if (t.size() != static_cast<std::size_t>(c.degree) + 1)
      throw IoError("chain: tuple '" + key + "' has wrong arity");
    for (int v : t)
      if (v < 0 || v >= c.base->size()) throw IoError("chain: tuple '" + key + "' out of range");
    detail::add_term(c.coeffs, t, parse_rational(value.get<std::string>()));
  }
  return c;
}

Chain load_chain(const std::filesystem::path& path, const Caps& caps) {
  return chain_from_json(read_json_file(path), path.parent_path(), caps);
}

void save_chain(const Chain& c, const std::filesystem::path& path) {
  write_json_file(chain_to_json(c), path);
}

json bimodule_to_json(const Bimodule& m) {
  json j;
  j["dim"] = m.dim;
  json left = json::object();
  json right = json::object();
  for (int s = 0; s < m.base->size(); ++s) {
    left[m.base->elements[static_cast<std::size_t>(s)]] =
        matrix_to_json(m.left[static_cast<std::size_t>(s)]);
    right[m.base->elements[static_cast<std::size_t>(s)]] =
        matrix_to_json(m.right[static_cast<std::size_t>(s)]);
  }
  j["left"] = std::move(left);
  j["right"] = std::move(right);
  j["symmetric"] = m.symmetric;
  return j;
}

BimodulePtr bimodule_from_json(const json& j, const TablePtr& base, const Caps& caps) {
  (void)caps;
  check_keys(j, {"dim", "left", "right", "symmetric"}, "bimodule");
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 0)
    throw IoError("bimodule: 'dim' must be a nonnegative integer");
  const int dim = j["dim"].get<int>();

  auto read_side = [&](const json& side, const std::string& what) {
    if (!side.is_object()) throw IoError(what + ": expected an object keyed by element label");
    std::vector<RationalMatrix> out;
    out.reserve(static_cast<std::size_t>(base->size()));
    for (int s = 0; s < base->size(); ++s) {
      const std::string& label = base->elements[static_cast<std::size_t>(s)];
      if (!side.contains(label)) throw IoError(what + ": missing action for '" + label + "'");
      out.push_back(matrix_from_json(side[label], dim, what + "[" + label + "]"));
    }
    if (side.size() != static_cast<std::size_t>(base->size()))
      throw IoError(what + ": unknown extra element labels");
    return out;
  };

  BimodulePtr m = validate_bimodule(base, dim, read_side(j["left"], "bimodule left"),
                                    read_side(j["right"], "bimodule right"));
  if (!j["symmetric"].is_boolean()) throw IoError("bimodule: 'symmetric' must be a boolean");
  if (j["symmetric"].get<bool>() != m->symmetric)
    throw ValidationError("NotSymmetric", "declared 'symmetric' flag does not match the actions");
  return m;
}

BimodulePtr load_bimodule(const std::filesystem::path& path, const TablePtr& base,
                          const Caps& caps) {
  return bimodule_from_json(read_json_file(path), base, caps);
}

void save_bimodule(const Bimodule& m, const std::filesystem::path& path) {
  write_json_file(bimodule_to_json(m), path);
}

void save_tower(const SigmaTower& t, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json manifest;
  manifest["jmax"] = t.max_degree;
  json chains = json::array();
  for (int j = 1; j <= t.max_degree; ++j) {
    const std::string name = "w" + std::to_string(j) + ".json";
    save_chain(t.w_chain(j), dir / name);
    chains.push_back(name);
  }
  manifest["chains"] = std::move(chains);
  write_json_file(manifest, dir / "tower.json");
}

SigmaTower load_tower(const std::filesystem::path& dir, const Caps& caps) {
  const json manifest = read_json_file(dir / "tower.json");
  check_keys(manifest, {"jmax", "chains"}, "tower");
  if (!manifest["jmax"].is_number_integer() || manifest["jmax"].get<int>() < 1)
    throw IoError("tower: 'jmax' must be a positive integer");
  const int jmax = manifest["jmax"].get<int>();
  if (!manifest["chains"].is_array() ||
      manifest["chains"].size() != static_cast<std::size_t>(jmax))
    throw IoError("tower: 'chains' must list one file per degree");

  SigmaTower t;
  t.max_degree = jmax;
  t.w.resize(static_cast<std::size_t>(jmax) + 1);
  for (int j = 1; j <= jmax; ++j) {
    const std::string name = manifest["chains"][static_cast<std::size_t>(j) - 1].get<std::string>();
    Chain w = load_chain(dir / name, caps);
    const TablePtr expected = free_unital_semilattice(j + 1, caps);
    if (w.degree != j + 1 || !(*w.base == *expected))
      throw IoError("tower: chain '" + name + "' has the wrong degree or base");
    t.w[static_cast<std::size_t>(j)] = std::move(w);

    // Re-verify the defining identity against the part already loaded.
    const Chain f = primitive_tensor(expected, generator_tuple(expected, j));
    Chain rhs = f;
    if (j >= 2) {
      SigmaEvaluator eval(t, expected);
      rhs = f - eval.apply(j - 1, boundary(f));
    }
    if (!(boundary(t.w[static_cast<std::size_t>(j)]) == rhs))
      throw ValidationError("FormalIdentityFailed",
                            "loaded tower chain fails its identity at degree " + std::to_string(j));
  }
  return t;
}

json homology_report_to_json(const HomologyReport& r) {
  json j;
  j["table"] = r.table_desc;
  j["coefficients"] = r.coefficients;
  j["kind"] = r.cohomology ? "cohomology" : "homology";
  j["unit_linked"] = r.unit_linked;
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    json rec;
    rec["n"] = d.n;
    rec["dim_space"] = d.dim_space;
    rec["rank_outgoing"] = d.rank_outgoing;
    rec["rank_incoming"] = d.rank_incoming;
    rec["dim_kernel"] = d.dim_kernel;
    rec["dim_H"] = d.dim_h;
    degrees.push_back(std::move(rec));
  }
  j["degrees"] = std::move(degrees);
  j["all_zero"] = r.all_zero();
  return j;
}

json duality_report_to_json(const DualityReport& r) {
  json j;
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    json rec;
    rec["n"] = d.n;
    rec["dim_H_homology"] = d.dim_homology;
    rec["dim_H_cohomology"] = d.dim_cohomology;
    degrees.push_back(std::move(rec));
  }
  j["degrees"] = std::move(degrees);
  j["ok"] = r.ok;
  return j;
}

json unitisation_report_to_json(const UnitisationReport& r) {
  json j;
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    json rec;
    rec["n"] = d.n;
    rec["dim_H_unitized"] = d.dim_unitized;
    rec["dim_H_original"] = d.dim_original;
    degrees.push_back(std::move(rec));
  }
  j["degrees"] = std::move(degrees);
  j["ok"] = r.ok;
  return j;
}

json splitting_report_to_json(const SplittingReport& r, const std::string& table_desc) {
  json j;
  j["table"] = table_desc;
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    json rec;
    rec["j"] = d.j;
    rec["checked"] = d.checked;
    json failures = json::array();
    for (const auto& t : d.failures) failures.push_back(tuple_key(t));
    rec["failures"] = std::move(failures);
    rec["sigma_norm"] = format_rational(d.sigma_norm);
    rec["w_norm"] = format_rational(d.w_norm);
    rec["ok"] = d.ok();
    degrees.push_back(std::move(rec));
  }
  j["degrees"] = std::move(degrees);
  j["ok"] = r.ok;
  return j;
}

json naturality_result_to_json(const NaturalityResult& r) {
  json j;
  j["j"] = r.j;
  j["checked"] = r.checked;
  json failures = json::array();
  for (const auto& t : r.failures) failures.push_back(tuple_key(t));
  j["failures"] = std::move(failures);
  j["ok"] = r.ok();
  return j;
}

json homotopy_records_to_json(const std::vector<HomotopyCheckRecord>& records) {
  json out = json::array();
  for (const auto& rec : records) {
    json j;
    j["k"] = rec.k;
    j["n"] = rec.n;
    j["identity_verified"] = rec.identity_verified;
    j["exact_norm"] = format_rational(rec.exact_norm);
    j["bound"] = format_rational(rec.bound);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace hochlat
