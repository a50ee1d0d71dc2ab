#include "vawrt/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace vawrt {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw InputError("field " + path + ": " + what);
}

void only_fields(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(path, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, _] : j.items()) {
    if (!ok.count(k)) bad(path + "." + k, "unknown field");
  }
}

const Json& need(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) bad(path + "." + key, "missing");
  return j.at(key);
}

Rat rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(mpz_class(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(path, std::string("not a rational: ") + e.what());
    }
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    const mpz_class den(j[1].dump());
    if (den == 0) bad(path, "zero denominator");
    Rat q(mpz_class(j[0].dump()), den);
    q.canonicalize();
    return q;
  }
  bad(path, "expected a \"p/q\" string, an integer or an integer pair");
}

RVec vector_of(const Json& j, const std::string& path, std::optional<std::size_t> len) {
  if (!j.is_array()) bad(path, "expected an array of rationals");
  if (len && j.size() != *len) bad(path, "expected length " + std::to_string(*len) + ", got " + std::to_string(j.size()));
  RVec out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::size_t dimension(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) bad(path, "expected a nonnegative integer");
  const auto d = j.get<std::size_t>();
  if (d > 64) bad(path, "dimension too large");
  return d;
}

std::vector<AffineRow> rows(const Json& obj, const char* key, const std::string& path, std::size_t dim) {
  std::vector<AffineRow> out;
  if (!obj.contains(key)) return out;
  const Json& arr = obj.at(key);
  const std::string p = path + "." + key;
  if (!arr.is_array()) bad(p, "expected an array of rows");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string rp = p + "[" + std::to_string(i) + "]";
    only_fields(arr[i], rp, {"a", "b"});
    out.push_back({vector_of(need(arr[i], rp, "a"), rp + ".a", dim), rational(need(arr[i], rp, "b"), rp + ".b")});
  }
  return out;
}

ConvexPoly convex_body(const Json& j, const std::string& path, std::size_t dim) {
  return ConvexPoly(dim, rows(j, "ineqs", path, dim), rows(j, "eqs", path, dim));
}

PolySet pieces(const Json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array()) bad(path, "expected an array of pieces");
  std::vector<ConvexPoly> ps;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string pp = path + "[" + std::to_string(i) + "]";
    only_fields(j[i], pp, {"ineqs", "eqs"});
    ps.push_back(convex_body(j[i], pp, dim));
  }
  return PolySet(dim, std::move(ps));
}

Object parse_object(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const Json& kind = need(j, path, "kind");
  if (!kind.is_string()) bad(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "point") {
    only_fields(j, path, {"kind", "coords"});
    return vector_of(need(j, path, "coords"), path + ".coords", std::nullopt);
  }
  if (k == "convex") {
    only_fields(j, path, {"kind", "dim", "ineqs", "eqs"});
    return convex_body(j, path, dimension(need(j, path, "dim"), path + ".dim"));
  }
  if (k == "set") {
    only_fields(j, path, {"kind", "dim", "pieces"});
    const std::size_t d = dimension(need(j, path, "dim"), path + ".dim");
    return pieces(need(j, path, "pieces"), path + ".pieces", d);
  }
  if (k == "map") {
    only_fields(j, path, {"kind", "in_dim", "out_dim", "graph"});
    const std::size_t n = dimension(need(j, path, "in_dim"), path + ".in_dim");
    const std::size_t m = dimension(need(j, path, "out_dim"), path + ".out_dim");
    return PolyMultimap(n, m, pieces(need(j, path, "graph"), path + ".graph", n + m));
  }
  if (k == "function") {
    only_fields(j, path, {"kind", "dim", "epigraph", "max_affine", "domain"});
    const std::size_t n = dimension(need(j, path, "dim"), path + ".dim");
    if (j.contains("epigraph") == j.contains("max_affine")) {
      bad(path, "give exactly one of \"epigraph\" and \"max_affine\"");
    }
    try {
      if (j.contains("epigraph")) {
        if (j.contains("domain")) bad(path + ".domain", "only allowed with \"max_affine\"");
        return PLFunc(n, pieces(j.at("epigraph"), path + ".epigraph", n + 1));
      }
      ConvexPoly dom = ConvexPoly::whole(n);
      if (j.contains("domain")) {
        only_fields(j.at("domain"), path + ".domain", {"ineqs", "eqs"});
        dom = convex_body(j.at("domain"), path + ".domain", n);
      }
      const Json wrapper = {{"ineqs", j.at("max_affine")}};
      return PLFunc::max_affine(rows(wrapper, "ineqs", path + ".max_affine", n), dom);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      bad(path, e.what());
    }
  }
  bad(path + ".kind", "unknown kind \"" + k + "\"");
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const char* kind_name(const Object& o) {
  static const char* names[] = {"point", "convex", "set", "map", "function"};
  return names[o.index()];
}

}  // namespace

Problem parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("syntax error at " + line_col(text, e.byte) + ": " + e.what());
  }
  only_fields(j, "$", {"version", "description", "objects", "queries"});
  const Json& ver = need(j, "$", "version");
  if (ver != 1) bad("$.version", "unsupported version (expected 1)");
  Problem p;
  if (j.contains("description")) {
    if (!j["description"].is_string()) bad("$.description", "expected a string");
    p.description = j["description"].get<std::string>();
  }
  if (j.contains("objects")) {
    if (!j["objects"].is_object()) bad("$.objects", "expected an object");
    for (const auto& [name, o] : j["objects"].items()) {
      try {
        p.objects.emplace(name, parse_object(o, "$.objects." + name));
      } catch (const InputError&) {
        throw;
      } catch (const std::exception& e) {
        bad("$.objects." + name, e.what());
      }
    }
  }
  const Json& qs = need(j, "$", "queries");
  if (!qs.is_array()) bad("$.queries", "expected an array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const std::string path = "$.queries[" + std::to_string(i) + "]";
    if (!qs[i].is_object()) bad(path, "expected an object");
    Query q;
    q.path = path;
    const Json& op = need(qs[i], path, "op");
    if (!op.is_string()) bad(path + ".op", "expected a string");
    q.op = op.get<std::string>();
    q.name = "q" + std::to_string(i);
    if (qs[i].contains("name")) {
      if (!qs[i]["name"].is_string()) bad(path + ".name", "expected a string");
      q.name = qs[i]["name"].get<std::string>();
    }
    if (!names.insert(q.name).second) bad(path + ".name", "duplicate query name \"" + q.name + "\"");
    for (const auto& [k, v] : qs[i].items()) {
      if (k != "op" && k != "name") q.params[k] = v;
    }
    p.queries.push_back(std::move(q));
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

void QueryArgs::fail(const std::string& key, const std::string& what) const {
  bad(query_.path + (key.empty() ? "" : "." + key), what);
}

void QueryArgs::allow(std::initializer_list<const char*> allowed) const {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, _] : query_.params.items()) {
    if (!ok.count(k)) fail(k, "unknown field for op \"" + query_.op + "\"");
  }
}

const Object& QueryArgs::object(const std::string& key) const {
  if (!has(key)) fail(key, "missing");
  const Json& v = query_.params.at(key);
  if (!v.is_string()) fail(key, "expected an object name");
  const auto it = problem_.objects.find(v.get<std::string>());
  if (it == problem_.objects.end()) fail(key, "no object named \"" + v.get<std::string>() + "\"");
  return it->second;
}

RVec QueryArgs::point(const std::string& key) const {
  if (has(key) && query_.params.at(key).is_array()) return vector_of(query_.params.at(key), query_.path + "." + key, std::nullopt);
  const Object& o = object(key);
  if (const auto* p = std::get_if<RVec>(&o)) return *p;
  fail(key, std::string("expected a point, got a ") + kind_name(o));
}

ConvexPoly QueryArgs::convex(const std::string& key) const {
  const Object& o = object(key);
  if (const auto* c = std::get_if<ConvexPoly>(&o)) return *c;
  fail(key, std::string("expected a convex set, got a ") + kind_name(o));
}

ConvexPoly QueryArgs::convex_or_whole(const std::string& key, std::size_t dim) const {
  if (!has(key)) return ConvexPoly::whole(dim);
  ConvexPoly c = convex(key);
  if (c.dim() != dim) fail(key, "dimension " + std::to_string(c.dim()) + " does not match " + std::to_string(dim));
  return c;
}

PolySet QueryArgs::set(const std::string& key) const {
  const Object& o = object(key);
  if (const auto* s = std::get_if<PolySet>(&o)) return *s;
  if (const auto* c = std::get_if<ConvexPoly>(&o)) return PolySet(*c);
  fail(key, std::string("expected a set, got a ") + kind_name(o));
}

PolyMultimap QueryArgs::map(const std::string& key) const {
  const Object& o = object(key);
  if (const auto* m = std::get_if<PolyMultimap>(&o)) return *m;
  fail(key, std::string("expected a map, got a ") + kind_name(o));
}

PLFunc QueryArgs::function(const std::string& key) const {
  const Object& o = object(key);
  if (const auto* f = std::get_if<PLFunc>(&o)) return *f;
  fail(key, std::string("expected a function, got a ") + kind_name(o));
}

std::string QueryArgs::word(const std::string& key, const std::string& fallback,
                            std::initializer_list<const char*> choices) const {
  if (!has(key)) return fallback;
  const Json& v = query_.params.at(key);
  if (v.is_string()) {
    for (const char* c : choices) {
      if (v.get<std::string>() == c) return c;
    }
  }
  std::string list;
  for (const char* c : choices) list += std::string(list.empty() ? "" : ", ") + c;
  fail(key, "expected one of: " + list);
}

bool QueryArgs::flag(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  if (!query_.params.at(key).is_boolean()) fail(key, "expected true or false");
  return query_.params.at(key).get<bool>();
}

}  // namespace vawrt
