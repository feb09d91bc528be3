#include "ceqss/io.hpp"

#include <nlohmann/json.hpp>

namespace ceqss {

using nlohmann::json;

namespace {

json matrix_to_json(const FqMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = m.data();
  return j;
}

FqMatrix matrix_from_json(const FieldSpec& field, const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw DomainError("descriptor", "matrix needs rows/cols/data");
  size_t rows = j.at("rows").get<size_t>();
  size_t cols = j.at("cols").get<size_t>();
  auto data = j.at("data").get<std::vector<int64_t>>();
  if (data.size() != rows * cols)
    throw DomainError("descriptor", "matrix data length mismatch");
  FqMatrix m(field, rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) {
      int64_t v = data[r * cols + c];
      if (v < 0 || v >= int64_t(field.q()))
        throw DomainError("descriptor", "matrix entry outside [0, q)");
      m.set(r, c, uint32_t(v));
    }
  return m;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DomainError("descriptor", "invalid JSON");
  return j;
}

template <typename T>
T require(const json& j, const char* key) {
  if (!j.contains(key)) throw DomainError("descriptor", std::string("missing ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError("descriptor", std::string("bad value for ") + key);
  }
}

}  // namespace

SchemeDescriptor parse_descriptor(const std::string& json_text) {
  json j = parse_text(json_text);
  if (!j.is_object()) throw DomainError("descriptor", "descriptor must be an object");

  SchemeDescriptor d;
  int64_t q = require<int64_t>(j, "q");
  if (q < 2) throw DomainError("field", "q must be at least 2");
  d.q = uint32_t(q);
  d.t = require<size_t>(j, "t");
  d.d = require<size_t>(j, "d");
  d.z = require<size_t>(j, "z");
  d.construction = require<std::string>(j, "construction");
  if (d.construction != "grs" && d.construction != "explicit")
    throw DomainError("descriptor", "construction must be \"grs\" or \"explicit\"");

  if (d.construction == "grs") {
    if (j.contains("matrices"))
      throw DomainError("descriptor", "grs construction takes points, not matrices");
    if (j.contains("points"))
      d.points = require<std::vector<uint32_t>>(j, "points");
  } else {
    if (j.contains("points"))
      throw DomainError("descriptor", "explicit construction takes matrices, not points");
    if (!j.contains("matrices"))
      throw DomainError("descriptor", "explicit construction needs matrices");
    FieldSpec field(d.q);  // throws "field" on composite q
    std::map<std::string, FqMatrix> mats;
    const json& mj = j.at("matrices");
    for (const char* key : {"b0", "b1", "b2", "a1", "a2", "e"}) {
      if (!mj.contains(key))
        throw DomainError("descriptor", std::string("matrices missing ") + key);
      mats.emplace(key, matrix_from_json(field, mj.at(key)));
    }
    d.matrices = std::move(mats);
  }

  // n is derivable; when present it must agree
  size_t derived_n;
  if (d.construction == "grs") {
    derived_n = d.points ? d.points->size() : d.t + d.z;
  } else {
    derived_n = d.matrices->at("b0").cols();
  }
  d.n = j.contains("n") ? require<size_t>(j, "n") : derived_n;
  if (d.n != derived_n) throw DomainError("descriptor", "n disagrees with construction data");
  return d;
}

std::string emit_descriptor(const SchemeDescriptor& desc) {
  json j;
  j["q"] = desc.q;
  j["n"] = desc.n;
  j["t"] = desc.t;
  j["d"] = desc.d;
  j["z"] = desc.z;
  j["construction"] = desc.construction;
  if (desc.points) j["points"] = *desc.points;
  if (desc.matrices) {
    json mj;
    for (const auto& [k, m] : *desc.matrices) mj[k] = matrix_to_json(m);
    j["matrices"] = mj;
  }
  return j.dump(2) + "\n";
}

Scheme scheme_from_descriptor(const SchemeDescriptor& desc, const BuildOptions& opts) {
  if (desc.construction == "grs") {
    return optimal_grs(desc.q, desc.t, desc.d, desc.z, desc.points, opts);
  }
  FieldSpec field(desc.q);
  const auto& m = *desc.matrices;
  SchemeCodes codes{
      LinearCode::from_generator(m.at("b0")), LinearCode::from_generator(m.at("b1")),
      LinearCode::from_generator(m.at("b2")), LinearCode::from_generator(m.at("a1")),
      LinearCode::from_generator(m.at("a2")), LinearCode::from_generator(m.at("e"))};
  return build(field, codes, desc.t, desc.d, desc.z, opts);
}

std::string emit_scheme(const Scheme& s) {
  json j;
  j["q"] = s.field.q();
  j["n"] = s.n;
  j["t"] = s.t;
  j["d"] = s.d;
  j["z"] = s.z;
  j["dims"] = {{"b0", s.b0}, {"b1", s.b1}, {"b2", s.b2},
               {"a1", s.a1}, {"a2", s.a2}, {"e", s.e}};
  j["blocks"] = {{"v1", s.v1}, {"v2", s.v2}};
  j["costs"] = {{"m", s.m}, {"w", s.w}, {"cc_t", s.cc_t}, {"cc_d", s.cc_d}};
  j["weights"] = {{"a2b1_over_b1", s.conditions.w_a2b1_over_b1},
                  {"a1b2_over_b2", s.conditions.w_a1b2_over_b2},
                  {"dual_b1_over_dual_b0", s.conditions.w_dual_b1_over_dual_b0},
                  {"b0_over_b1", s.conditions.w_b0_over_b1},
                  {"dual_b2_over_dual_a1b2", s.conditions.w_dual_b2_over_dual_a1b2}};
  json gens;
  gens["b0"] = matrix_to_json(s.codes.b0.gen());
  gens["b1"] = matrix_to_json(s.codes.b1.gen());
  gens["b2"] = matrix_to_json(s.codes.b2.gen());
  gens["a1"] = matrix_to_json(s.codes.a1.gen());
  gens["a2"] = matrix_to_json(s.codes.a2.gen());
  gens["e"] = matrix_to_json(s.codes.e.gen());
  gens["stack"] = matrix_to_json(s.stack);
  j["generators"] = gens;

  json parties = json::array();
  for (size_t p = 1; p <= s.n; ++p) {
    parties.push_back({{"party", p},
                       {"layer1", s.layer1_coords(p)},
                       {"layer2", s.layer2_coords(p)}});
  }
  j["layout"] = {{"parties", parties},
                 {"downloads_per_party_t", s.downloads_per_party_t()},
                 {"downloads_per_party_d", s.downloads_per_party_d()}};
  return j.dump(2) + "\n";
}

Scheme parse_scheme(const std::string& json_text) {
  json j = parse_text(json_text);
  FieldSpec field(require<uint32_t>(j, "q"));
  const json& gens = j.at("generators");
  SchemeCodes codes{LinearCode::from_generator(matrix_from_json(field, gens.at("b0"))),
                    LinearCode::from_generator(matrix_from_json(field, gens.at("b1"))),
                    LinearCode::from_generator(matrix_from_json(field, gens.at("b2"))),
                    LinearCode::from_generator(matrix_from_json(field, gens.at("a1"))),
                    LinearCode::from_generator(matrix_from_json(field, gens.at("a2"))),
                    LinearCode::from_generator(matrix_from_json(field, gens.at("e")))};
  Scheme s = build(field, codes, require<size_t>(j, "t"), require<size_t>(j, "d"),
                   require<size_t>(j, "z"));
  // the canonical stack is deterministic, so a rebuilt scheme must agree
  FqMatrix stack = matrix_from_json(field, gens.at("stack"));
  if (!(stack == s.stack))
    throw DomainError("descriptor", "stack does not match the canonical build");
  return s;
}

bool scheme_equal(const Scheme& a, const Scheme& b) {
  return a.field == b.field && a.n == b.n && a.t == b.t && a.d == b.d && a.z == b.z &&
         a.b0 == b.b0 && a.b1 == b.b1 && a.b2 == b.b2 && a.a1 == b.a1 &&
         a.a2 == b.a2 && a.e == b.e && a.v1 == b.v1 && a.v2 == b.v2 && a.m == b.m &&
         a.w == b.w && a.cc_t == b.cc_t && a.cc_d == b.cc_d && a.stack == b.stack &&
         a.codes.b0.gen() == b.codes.b0.gen() && a.codes.b1.gen() == b.codes.b1.gen() &&
         a.codes.b2.gen() == b.codes.b2.gen() && a.codes.a1.gen() == b.codes.a1.gen() &&
         a.codes.a2.gen() == b.codes.a2.gen() && a.codes.e.gen() == b.codes.e.gen();
}

std::string descriptor_hash(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace ceqss
