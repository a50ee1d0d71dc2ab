#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vawrt/polyhedron.hpp"

namespace vawrt {

enum class Verdict { kHolds, kFails, kUnknown };

std::string to_string(Verdict v);

/// First nonzero ray or lineality vector of the union, if any.
std::optional<RVec> nonzero_member(const ConeUnion& u);

struct TriVerdict {
  Verdict value = Verdict::kUnknown;
  std::optional<RVec> certificate;
  std::optional<RVec> certificate2;
  std::string note;

  bool holds() const { return value == Verdict::kHolds; }
  bool fails() const { return value == Verdict::kFails; }

  static TriVerdict holding(std::string note = {}) { return {Verdict::kHolds, {}, {}, std::move(note)}; }
  static TriVerdict failing(RVec cert, std::string note = {}) {
    return {Verdict::kFails, std::move(cert), {}, std::move(note)};
  }
  static TriVerdict unknown(std::string note) { return {Verdict::kUnknown, {}, {}, std::move(note)}; }
};

/// Holds iff a ∩ b ⊂ {0}; the certificate is a nonzero common vector.
TriVerdict zero_meet(const ConeUnion& a, const ConeUnion& b, const std::string& what);

/// First Fails, else first Unknown, else Holds; notes name the offending
/// item when there is more than one.
TriVerdict worst_of(const std::vector<std::pair<RVec, TriVerdict>>& items, const std::string& label);

/// One side of a rule: a cone union, or a union of polyhedra for
/// coderivative values at a nonzero y*.
using Side = std::variant<ConeUnion, PolySet>;

std::size_t side_dim(const Side& s);

struct Comparison {
  std::string name;
  Side lhs;
  Side rhs;
  bool equality = false;  // otherwise lhs ⊂ rhs
  bool holds = false;
  std::optional<RVec> witness;  // in lhs \ rhs, or rhs \ lhs for equality
};

/// Decides lhs ⊂ rhs (or lhs = rhs) exactly and fills in a witness.
Comparison compare(std::string name, Side lhs, Side rhs, bool equality);

struct Qualification {
  std::string name;
  TriVerdict verdict;
};

struct RuleReport {
  std::string rule;
  Side lhs = ConeUnion(0);
  Side rhs = ConeUnion(0);
  bool equality = false;
  std::vector<Qualification> qualifications;
  bool inclusion_holds = false;
  std::optional<RVec> witness;
  std::vector<Comparison> extra;

  bool hypotheses_hold() const;
};

RuleReport make_report(std::string rule, Comparison main, std::vector<Qualification> quals);

}  // namespace vawrt
