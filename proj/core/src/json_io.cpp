#include "gpd/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gpd/errors.hpp"
#include "gpd/functor.hpp"
#include "json.hpp"

namespace gpd::jsonio {

namespace {

using nlohmann::json;

void fail(const std::string& what) { throw JsonError(what); }

json groupoid_payload(const FiniteGroupoid& g, std::uint64_t max_compose_rows) {
  const std::uint64_t rows = composable_pair_count(g);
  if (rows > max_compose_rows)
    throw BoundError("groupoid serialization needs " + std::to_string(rows) +
                     " composition rows, above the cap of " + std::to_string(max_compose_rows));

  json out = json::object();
  json objects = json::array();
  for (ObjId x = 0; x < g.num_objects(); ++x) objects.push_back(x);
  out["objects"] = std::move(objects);

  json morphisms = json::array();
  for (MorId m = 0; m < g.num_morphisms(); ++m)
    morphisms.push_back(json{{"id", m}, {"src", g.src(m)}, {"tgt", g.tgt(m)}});
  out["morphisms"] = std::move(morphisms);

  json identity = json::object();
  for (ObjId x = 0; x < g.num_objects(); ++x) identity[std::to_string(x)] = g.identity(x);
  out["identity"] = std::move(identity);

  json inverse = json::object();
  for (MorId m = 0; m < g.num_morphisms(); ++m) inverse[std::to_string(m)] = g.inverse(m);
  out["inverse"] = std::move(inverse);

  json compose = json::array();
  for (MorId f = 0; f < g.num_morphisms(); ++f)
    for (const MorId gg : g.morphisms_from(g.tgt(f)))
      compose.push_back(json::array({gg, f, g.compose_unchecked(gg, f)}));
  out["compose"] = std::move(compose);
  return out;
}

json functor_payload(const Functor& f, const std::string& source_ref, json target) {
  json objects = json::object();
  for (ObjId x = 0; x < f.obj.size(); ++x) objects[std::to_string(x)] = f.obj[x];
  json morphisms = json::object();
  for (MorId m = 0; m < f.mor.size(); ++m) morphisms[std::to_string(m)] = f.mor[m];
  return json{{"objects", std::move(objects)},
              {"morphisms", std::move(morphisms)},
              {"source", source_ref},
              {"target", std::move(target)}};
}

// ----------------------------------------------------------------------
// Shape-checked readers

const json& member(const json& j, const char* key, const char* where) {
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string(where) + " is missing the \"" + key + "\" field");
  return *it;
}

void require_object_keys(const json& j, std::initializer_list<const char*> keys,
                         const char* where) {
  if (!j.is_object()) fail(std::string(where) + " must be a JSON object");
  for (const char* k : keys) member(j, k, where);
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys)
      if (key == k) known = true;
    if (!known) fail(std::string(where) + " has an unexpected field \"" + key + "\"");
  }
}

std::uint32_t as_u32(const json& j, const char* where) {
  if (!j.is_number_integer() || j.is_number_float())
    fail(std::string(where) + " must be an integer");
  const std::int64_t v = j.get<std::int64_t>();
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max())
    fail(std::string(where) + " is out of the id range");
  return static_cast<std::uint32_t>(v);
}

std::uint32_t key_index(const std::string& key, std::size_t bound, const char* where) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    fail(std::string(where) + " has a non-numeric key \"" + key + "\"");
  }
  if (pos != key.size() || (key.size() > 1 && key[0] == '0'))
    fail(std::string(where) + " has a malformed key \"" + key + "\"");
  if (v >= bound) fail(std::string(where) + " has a key out of range: \"" + key + "\"");
  return static_cast<std::uint32_t>(v);
}

// A map {id: value} whose keys must be exactly 0..size-1 and whose values
// must stay below value_bound.
std::vector<std::uint32_t> dense_map(const json& j, std::size_t size, std::size_t value_bound,
                                     const char* where) {
  if (!j.is_object()) fail(std::string(where) + " must be a JSON object");
  if (j.size() != size)
    fail(std::string(where) + " must have exactly " + std::to_string(size) + " entries");
  std::vector<std::uint32_t> out(size);
  std::vector<bool> seen(size, false);
  for (const auto& [key, value] : j.items()) {
    const std::uint32_t k = key_index(key, size, where);
    if (seen[k]) fail(std::string(where) + " repeats the key \"" + key + "\"");
    seen[k] = true;
    const std::uint32_t v = as_u32(value, where);
    if (v >= value_bound) fail(std::string(where) + " has a value out of range at \"" + key + "\"");
    out[k] = v;
  }
  return out;
}

GroupoidPtr read_groupoid(const json& j, const char* where) {
  require_object_keys(j, {"objects", "morphisms", "identity", "compose", "inverse"}, where);

  const json& objects = member(j, "objects", where);
  if (!objects.is_array()) fail(std::string(where) + ".objects must be an array");
  const std::size_t n = objects.size();
  for (std::size_t i = 0; i < n; ++i)
    if (as_u32(objects[i], "object id") != i)
      fail(std::string(where) + ".objects must list ids densely from zero, in order");

  const json& morphisms = member(j, "morphisms", where);
  if (!morphisms.is_array()) fail(std::string(where) + ".morphisms must be an array");
  const std::size_t m = morphisms.size();
  std::vector<ObjId> src(m), tgt(m);
  std::vector<bool> seen(m, false);
  for (const json& row : morphisms) {
    require_object_keys(row, {"id", "src", "tgt"}, "morphism row");
    const std::uint32_t id = as_u32(member(row, "id", "morphism row"), "morphism id");
    if (id >= m) fail("morphism id " + std::to_string(id) + " is not dense from zero");
    if (seen[id]) fail("morphism id " + std::to_string(id) + " repeats");
    seen[id] = true;
    const std::uint32_t s = as_u32(member(row, "src", "morphism row"), "morphism src");
    const std::uint32_t t = as_u32(member(row, "tgt", "morphism row"), "morphism tgt");
    if (s >= n || t >= n) fail("morphism " + std::to_string(id) + " has an endpoint out of range");
    src[id] = s;
    tgt[id] = t;
  }

  std::vector<MorId> identity = dense_map(member(j, "identity", where), n, m, "identity map");
  std::vector<MorId> inverse = dense_map(member(j, "inverse", where), m, m, "inverse map");

  const json& compose = member(j, "compose", where);
  if (!compose.is_array()) fail(std::string(where) + ".compose must be an array");
  std::vector<ComposeEntry> entries;
  entries.reserve(compose.size());
  for (const json& row : compose) {
    if (!row.is_array() || row.size() != 3)
      fail("compose rows must be [g, f, gf] triples");
    ComposeEntry e;
    e.g = as_u32(row[0], "compose row");
    e.f = as_u32(row[1], "compose row");
    e.gf = as_u32(row[2], "compose row");
    if (e.g >= m || e.f >= m || e.gf >= m) fail("a compose row references an id out of range");
    entries.push_back(e);
  }

  return FiniteGroupoid::from_tables(static_cast<std::uint32_t>(n), std::move(src), std::move(tgt),
                                     std::move(identity), std::move(inverse), std::move(entries),
                                     false);
}

// Functor tables against already-built endpoint groupoids. source_ref names
// the sibling document the source field must reference; target_ref does the
// same for the target field when non-null, otherwise the target field is an
// embedded groupoid the caller has already read.
Functor read_functor(const json& j, GroupoidPtr source, GroupoidPtr target,
                     const char* source_ref, const char* target_ref, const char* where) {
  require_object_keys(j, {"objects", "morphisms", "source", "target"}, where);
  const json& sref = member(j, "source", where);
  if (!sref.is_string() || sref.get<std::string>() != source_ref)
    fail(std::string(where) + ".source must be the reference \"" + source_ref + "\"");
  if (target_ref != nullptr) {
    const json& tref = member(j, "target", where);
    if (!tref.is_string() || tref.get<std::string>() != target_ref)
      fail(std::string(where) + ".target must be the reference \"" + target_ref + "\"");
  }

  Functor f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.obj = dense_map(member(j, "objects", where), f.source->num_objects(),
                    f.target->num_objects(), "functor object map");
  f.mor = dense_map(member(j, "morphisms", where), f.source->num_morphisms(),
                    f.target->num_morphisms(), "functor morphism map");
  return f;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("malformed JSON");
  return j;
}

}  // namespace

std::string groupoid_json(const FiniteGroupoid& g, std::uint64_t max_compose_rows) {
  return groupoid_payload(g, max_compose_rows).dump();
}

std::string span_json(const Span& s, std::uint64_t max_compose_rows) {
  json out = json::object();
  out["apex"] = groupoid_payload(*apex(s), max_compose_rows);
  out["left"] =
      functor_payload(s.left, "apex", groupoid_payload(*s.left.target, max_compose_rows));
  out["right"] =
      functor_payload(s.right, "apex", groupoid_payload(*s.right.target, max_compose_rows));
  return out.dump();
}

std::string over_json(const GroupoidOver& v, std::uint64_t max_compose_rows) {
  json out = json::object();
  out["total"] = groupoid_payload(*v.projection.source, max_compose_rows);
  out["base"] = groupoid_payload(*v.projection.target, max_compose_rows);
  out["projection"] = functor_payload(v.projection, "total", json("base"));
  return out.dump();
}

std::string vector_json(const ClassTable& table, const RationalVector& v) {
  json classes = json::array();
  for (const ObjId rep : table.classes.reps) classes.push_back(rep);
  json entries = json::array();
  for (const Rational& r : v) entries.push_back(r.str());
  return json{{"classes", std::move(classes)}, {"entries", std::move(entries)}}.dump();
}

std::string matrix_json(const ClassTable& codomain, const ClassTable& domain,
                        const RationalMatrix& m) {
  json row_classes = json::array();
  for (const ObjId rep : codomain.classes.reps) row_classes.push_back(rep);
  json col_classes = json::array();
  for (const ObjId rep : domain.classes.reps) col_classes.push_back(rep);
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    entries.push_back(std::move(row));
  }
  return json{{"col_classes", std::move(col_classes)},
              {"entries", std::move(entries)},
              {"row_classes", std::move(row_classes)}}
      .dump();
}

std::string matrix_csv(const ClassTable& codomain, const ClassTable& domain,
                       const RationalMatrix& m) {
  std::string out = "class";
  for (const ObjId rep : domain.classes.reps) out += "," + std::to_string(rep);
  out += "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += std::to_string(codomain.classes.reps[r]);
    for (std::size_t c = 0; c < m.cols(); ++c) out += "," + m.at(r, c).str();
    out += "\n";
  }
  return out;
}

std::string envelope(const std::string& status, const std::string& payload_json) {
  return "{\"payload\":" + payload_json + ",\"status\":\"" + status + "\"}";
}

GroupoidPtr parse_groupoid(const std::string& text) {
  return read_groupoid(parse_text(text), "groupoid");
}

Span parse_span(const std::string& text) {
  const json j = parse_text(text);
  require_object_keys(j, {"apex", "left", "right"}, "span");
  GroupoidPtr apex_g = read_groupoid(member(j, "apex", "span"), "span.apex");
  const json& left = member(j, "left", "span");
  const json& right = member(j, "right", "span");
  if (!left.is_object() || !right.is_object()) fail("span legs must be JSON objects");
  GroupoidPtr left_target = read_groupoid(member(left, "target", "span.left"), "span.left.target");
  GroupoidPtr right_target =
      read_groupoid(member(right, "target", "span.right"), "span.right.target");
  Span s;
  s.left = read_functor(left, apex_g, std::move(left_target), "apex", nullptr, "span.left");
  s.right = read_functor(right, apex_g, std::move(right_target), "apex", nullptr, "span.right");
  return s;
}

GroupoidOver parse_over(const std::string& text) {
  const json j = parse_text(text);
  require_object_keys(j, {"total", "base", "projection"}, "state");
  GroupoidPtr total = read_groupoid(member(j, "total", "state"), "state.total");
  GroupoidPtr base = read_groupoid(member(j, "base", "state"), "state.base");
  GroupoidOver v;
  v.projection = read_functor(member(j, "projection", "state"), std::move(total), std::move(base),
                              "total", "base", "state.projection");
  return v;
}

}  // namespace gpd::jsonio
