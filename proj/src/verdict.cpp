#include "vawrt/verdict.hpp"

namespace vawrt {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

std::optional<RVec> nonzero_member(const ConeUnion& u) {
  for (const Cone& c : u.parts()) {
    if (!c.rays().empty()) return c.rays().front();
    if (!c.lineality().empty()) return c.lineality().front();
  }
  return std::nullopt;
}

TriVerdict zero_meet(const ConeUnion& a, const ConeUnion& b, const std::string& what) {
  const ConeUnion meet = a.intersect(b);
  if (meet.is_empty() || meet.is_zero()) return TriVerdict::holding(what + " is {0}");
  return TriVerdict::failing(*nonzero_member(meet), what + " contains a nonzero vector");
}

std::size_t side_dim(const Side& s) {
  return std::visit([](const auto& x) { return x.dim(); }, s);
}

namespace {

PolySet as_polyset(const Side& s) {
  if (const auto* p = std::get_if<PolySet>(&s)) return *p;
  return as_polyset(std::get<ConeUnion>(s));
}

std::optional<RVec> outside(const Side& a, const Side& b) {
  const auto* ca = std::get_if<ConeUnion>(&a);
  const auto* cb = std::get_if<ConeUnion>(&b);
  if (ca && cb) return ca->subset_of(*cb).witness;
  return as_polyset(a).point_outside(as_polyset(b));
}

}  // namespace

Comparison compare(std::string name, Side lhs, Side rhs, bool equality) {
  if (side_dim(lhs) != side_dim(rhs)) throw DimensionError("rule comparison: dimension mismatch");
  Comparison c{std::move(name), std::move(lhs), std::move(rhs), equality, true, std::nullopt};
  c.witness = outside(c.lhs, c.rhs);
  if (!c.witness && equality) c.witness = outside(c.rhs, c.lhs);
  c.holds = !c.witness;
  return c;
}

bool RuleReport::hypotheses_hold() const {
  for (const Qualification& q : qualifications) {
    if (!q.verdict.holds()) return false;
  }
  return true;
}

TriVerdict worst_of(const std::vector<std::pair<RVec, TriVerdict>>& items, const std::string& label) {
  const std::pair<RVec, TriVerdict>* unknown = nullptr;
  for (const auto& it : items) {
    if (it.second.fails()) {
      TriVerdict v = it.second;
      if (items.size() > 1) v.note += " (" + label + " = " + to_string(it.first) + ")";
      return v;
    }
    if (it.second.value == Verdict::kUnknown && !unknown) unknown = &it;
  }
  if (unknown) {
    TriVerdict v = unknown->second;
    if (items.size() > 1) v.note += " (" + label + " = " + to_string(unknown->first) + ")";
    return v;
  }
  if (items.size() == 1) return items.front().second;
  return TriVerdict::holding("holds at every " + label + " candidate");
}

RuleReport make_report(std::string rule, Comparison main, std::vector<Qualification> quals) {
  RuleReport r;
  r.rule = std::move(rule);
  r.lhs = std::move(main.lhs);
  r.rhs = std::move(main.rhs);
  r.equality = main.equality;
  r.qualifications = std::move(quals);
  r.inclusion_holds = main.holds;
  r.witness = std::move(main.witness);
  return r;
}

}  // namespace vawrt
