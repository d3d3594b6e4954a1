#include "nilbij/json_io.hpp"

#include <limits>

namespace nilbij::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse_error, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t as_uint(const json& j, const char* what) {
  if (!j.is_number_unsigned()) fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const json& j, const char* what) {
  const auto v = as_uint(j, what);
  if (v > std::numeric_limits<std::uint32_t>::max()) fail(std::string(what) + " is too large");
  return static_cast<std::uint32_t>(v);
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

std::vector<Code> codes(const json& j, const char* what) {
  std::vector<Code> out;
  for (const auto& e : as_array(j, what)) out.push_back(as_u32(e, what));
  return out;
}

json rows_of(std::span<const Code> data, std::size_t rows, std::size_t cols) {
  json out = json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    out.push_back(std::vector<Code>(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                                    data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)));
  }
  return out;
}

json strata_json(const std::vector<DegreeStratum>& strata) {
  json out = json::array();
  for (const auto& s : strata) out.push_back(to_json(s));
  return out;
}

}  // namespace

std::string canonical(const json& j) { return j.dump(); }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

// ---------------------------------------------------------------- encoders

json to_json(const FieldSpec& spec) {
  json out{{"p", spec.p}, {"k", spec.k}};
  if (spec.k > 1) out["poly"] = spec.poly;
  return out;
}

json to_json(const Vector& x) {
  return {{"field", to_json(x.field()->spec())},
          {"entries", std::vector<Code>(x.entries().begin(), x.entries().end())}};
}

json to_json(const Matrix& m) {
  return {{"field", to_json(m.field()->spec())},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"data", rows_of(m.data(), m.rows(), m.cols())}};
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(std::vector<Code>(b.entries().begin(), b.entries().end()));
  return {{"field", to_json(s.field()->spec())}, {"ambient", s.ambient_dim()}, {"basis", basis}};
}

json to_json(const FittingPair& fp) {
  return {{"V", to_json(fp.v)}, {"W", to_json(fp.w)}, {"R", to_json(fp.r.matrix())}, {"S", to_json(fp.s.matrix())}};
}

json to_json(const NilPointed& tv) { return {{"T", to_json(tv.t)}, {"v", to_json(tv.v)}}; }

json to_json(const Tree& t) {
  json edges = json::array();
  for (auto [a, b] : t.edges()) edges.push_back({a, b});
  return {{"n", t.size()}, {"edges", edges}};
}

json to_json(const EndoFunction& f) { return {{"n", f.size()}, {"table", f.table()}}; }

json to_json(const PointedTree& p) { return {{"tree", to_json(p.tree)}, {"v", p.v}, {"v2", p.v2}}; }

json to_json(const NilpotentCount& r) {
  return {{"field", to_json(r.field)},
          {"q", r.q},
          {"n", r.n},
          {"total_operators", r.total_operators},
          {"nilpotent_count", r.nilpotent_count},
          {"expected_nilpotents", r.expected_nilpotents},
          {"nilpotent_fraction", std::to_string(r.ratio_numerator) + "/" + std::to_string(r.ratio_denominator)},
          {"success", r.success()}};
}

json to_json(const DegreeStratum& s) {
  return {{"k", s.k}, {"left_count", s.left_count}, {"right_count", s.right_count}};
}

json to_json(const DegreeTable& r) {
  return {{"field", to_json(r.field)},
          {"q", r.q},
          {"n", r.n},
          {"per_degree", strata_json(r.strata)},
          {"stratum_violations", r.stratum_violations},
          {"success", r.success()}};
}

json to_json(const CensusReport& r) {
  return {{"field", to_json(r.field)},
          {"q", r.q},
          {"n", r.n},
          {"total_operators", r.total_operators},
          {"nilpotent_count", r.nilpotent_count},
          {"expected_nilpotents", r.expected_nilpotents},
          {"domain_size", r.domain_size},
          {"roundtrip_failures", r.roundtrip_failures},
          {"surjectivity_gap", r.surjectivity_gap},
          {"injectivity_collisions", r.injectivity_collisions},
          {"stratum_violations", r.stratum_violations},
          {"per_degree", strata_json(r.per_degree)},
          {"elapsed_seconds", r.elapsed_seconds},
          {"success", r.success()}};
}

json to_json(const JoyalReport& r) {
  return {{"n", r.n},
          {"functions", r.functions},
          {"eventually_constant", r.eventually_constant},
          {"expected_eventually_constant", r.expected_eventually_constant},
          {"trees", r.trees},
          {"expected_trees", r.expected_trees},
          {"pointed_trees", r.pointed_trees},
          {"roundtrip_failures", r.roundtrip_failures},
          {"elapsed_seconds", r.elapsed_seconds},
          {"success", r.success()}};
}

// ---------------------------------------------------------------- decoders

FieldPtr field_from_json(const json& j) {
  FieldSpec spec;
  spec.p = as_u32(member(j, "p"), "p");
  spec.k = j.contains("k") ? as_u32(j["k"], "k") : 1;
  if (j.contains("poly")) {
    for (const auto& c : as_array(j["poly"], "poly")) spec.poly.push_back(as_u32(c, "poly coefficient"));
  }
  return Field::make(std::move(spec));
}

Vector vector_from_json(const json& j) {
  return Vector(field_from_json(member(j, "field")), codes(member(j, "entries"), "entries"));
}

Matrix matrix_from_json(const json& j) {
  const FieldPtr field = field_from_json(member(j, "field"));
  const std::size_t rows = as_uint(member(j, "rows"), "rows");
  const std::size_t cols = as_uint(member(j, "cols"), "cols");
  const json& data = as_array(member(j, "data"), "data");
  if (data.size() != rows) fail("data has " + std::to_string(data.size()) + " rows, expected " + std::to_string(rows));
  std::vector<Code> flat;
  flat.reserve(rows * cols);
  for (const auto& row : data) {
    auto r = codes(row, "data row");
    if (r.size() != cols) fail("data row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Matrix(field, rows, cols, std::move(flat));
}

LoadedSubspace subspace_from_json(const json& j) {
  const FieldPtr field = field_from_json(member(j, "field"));
  const std::size_t ambient = as_uint(member(j, "ambient"), "ambient");
  std::vector<Vector> rows;
  for (const auto& row : as_array(member(j, "basis"), "basis")) rows.emplace_back(field, codes(row, "basis row"));
  Subspace s = Subspace::span(field, ambient, rows);
  const bool canonical = s.basis() == rows;
  return LoadedSubspace{std::move(s), canonical};
}

NilPointed pair_from_json(const json& j) {
  return NilPointed{matrix_from_json(member(j, "T")), vector_from_json(member(j, "v"))};
}

Tree tree_from_json(const json& j) {
  const auto n = as_u32(member(j, "n"), "n");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : as_array(member(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) fail("an edge must be a pair of vertices");
    edges.emplace_back(as_u32(e[0], "edge endpoint"), as_u32(e[1], "edge endpoint"));
  }
  return Tree(n, std::move(edges));
}

EndoFunction function_from_json(const json& j) {
  std::vector<Vertex> table;
  for (const auto& y : as_array(member(j, "table"), "table")) table.push_back(as_u32(y, "table value"));
  if (j.contains("n") && as_uint(j["n"], "n") != table.size()) fail("n does not match the table length");
  return EndoFunction(std::move(table));
}

PointedTree pointed_tree_from_json(const json& j) {
  return PointedTree{tree_from_json(member(j, "tree")), as_u32(member(j, "v"), "v"), as_u32(member(j, "v2"), "v2")};
}

}  // namespace nilbij::io
