#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vawrt/mpec.hpp"

namespace vawrt {

/// Malformed problem file; the message names the offending line or field.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

using Object = std::variant<RVec, ConvexPoly, PolySet, PolyMultimap, PLFunc>;

struct Query {
  std::string name;
  std::string op;
  nlohmann::ordered_json params;  // everything except name and op
  std::string path;               // location in the file, for diagnostics
};

/// A problem file: named objects plus queries that reference them by name.
///
///   { "version": 1, "description": "...",
///     "objects": { "<name>": { "kind": "point" | "convex" | "set" | "map" | "function", ... } },
///     "queries": [ { "name": "...", "op": "...", ... } ] }
///
/// Rationals are "p/q" strings, JSON integers, or [p, q] integer pairs.
struct Problem {
  std::string description;
  std::map<std::string, Object> objects;
  std::vector<Query> queries;
};

/// Parses and validates a problem file. Unknown fields are rejected.
Problem parse_problem(const std::string& text);

/// Reads the file at `path` and parses it.
Problem load_problem(const std::string& path);

/// Typed access to query parameters, with diagnostics naming the field.
class QueryArgs {
 public:
  QueryArgs(const Problem& p, const Query& q) : problem_(p), query_(q) {}

  /// Throws InputError if a parameter outside `allowed` is present.
  void allow(std::initializer_list<const char*> allowed) const;

  bool has(const std::string& key) const { return query_.params.contains(key); }
  RVec point(const std::string& key) const;
  ConvexPoly convex(const std::string& key) const;
  /// Defaults to the whole space of dimension `dim` when absent.
  ConvexPoly convex_or_whole(const std::string& key, std::size_t dim) const;
  PolySet set(const std::string& key) const;
  PolyMultimap map(const std::string& key) const;
  PLFunc function(const std::string& key) const;
  std::string word(const std::string& key, const std::string& fallback,
                   std::initializer_list<const char*> choices) const;
  bool flag(const std::string& key, bool fallback) const;

  [[noreturn]] void fail(const std::string& key, const std::string& what) const;

 private:
  const Object& object(const std::string& key) const;

  const Problem& problem_;
  const Query& query_;
};

}  // namespace vawrt
