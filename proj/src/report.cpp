#include "vawrt/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace vawrt {

namespace {

using Json = nlohmann::ordered_json;

std::string num(const Rat& q, bool decimal) {
  std::string s = q.get_str();
  if (decimal && q.get_den() != 1) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.6g)", q.get_d());
    s += buf;
  }
  return s;
}

Json mat_json(const RMat& m, bool decimal) {
  Json a = Json::array();
  for (const RVec& r : m) a.push_back(vec_json(r, decimal));
  return a;
}

Json poly_json(const ConvexPoly& p, bool decimal) {
  const Cone k = p.homogenization();
  const std::size_t n = p.dim();
  RMat vertices, rays;
  for (const RVec& r : k.rays()) {
    const Rat t = r[n];
    RVec head = slice(r, 0, n);
    if (sgn(t) > 0) {
      for (Rat& q : head) q /= t;
      vertices.push_back(std::move(head));
    } else {
      rays.push_back(std::move(head));
    }
  }
  // Lineality of the homogenization has t = 0 since P is nonempty.
  RMat lineality;
  for (const RVec& l : k.lineality()) lineality.push_back(slice(l, 0, n));
  std::sort(vertices.begin(), vertices.end());
  Json rows_in = Json::array(), rows_eq = Json::array();
  const ConvexPoly c = p.canonical();
  for (const AffineRow& r : c.ineqs()) rows_in.push_back(Json{{"a", vec_json(r.a, decimal)}, {"b", num(r.b, decimal)}});
  for (const AffineRow& r : c.eqs()) rows_eq.push_back(Json{{"a", vec_json(r.a, decimal)}, {"b", num(r.b, decimal)}});
  return Json{{"vertices", mat_json(vertices, decimal)},
              {"rays", mat_json(rays, decimal)},
              {"lineality", mat_json(lineality, decimal)},
              {"ineqs", rows_in},
              {"eqs", rows_eq}};
}

Json side_json(const Side& s, bool decimal) {
  return std::visit([&](const auto& v) { return to_json(v, decimal); }, s);
}

Json comparison_json(const Comparison& c, bool decimal) {
  Json j{{"name", c.name}, {"relation", c.equality ? "equal" : "subset"}, {"holds", c.holds}};
  if (c.witness) j["witness"] = vec_json(*c.witness, decimal);
  j["lhs"] = side_json(c.lhs, decimal);
  j["rhs"] = side_json(c.rhs, decimal);
  return j;
}

int verdict_code(const TriVerdict& v) {
  if (v.holds()) return kExitOk;
  return v.fails() ? kExitFails : kExitUnknown;
}

std::string dbl(double d) {
  if (d == std::numeric_limits<double>::infinity()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", d);
  return buf;
}

struct Outcome {
  Json body;
  int code = kExitOk;
  std::string status;
};

class Runner {
 public:
  Runner(const Problem& p, const RunOptions& o, RunResult& r) : p_(p), o_(o), r_(r) {}

  Outcome run(const Query& q) {
    const QueryArgs a(p_, q);
    if (q.op == "normal-cone") return normal_cone(a, q);
    if (q.op == "coderivative") return coderivative(a);
    if (q.op == "subdiff") return subdiff(a);
    if (q.op == "check-aubin") return check_aubin(a, q);
    if (q.op == "check-lipschitz") return check_lipschitz(a);
    if (q.op == "check-lqc" || q.op == "check-normal-densed") return check_pair(a, q.op);
    if (q.op == "rule") return rule(a);
    if (q.op == "mpec-check") return mpec(a, q);
    a.fail("op", "unknown op \"" + q.op + "\"");
  }

 private:
  bool dec() const { return o_.decimal; }

  void warn(const Query& q, const std::string& what) { r_.warnings.push_back(q.name + ": " + what); }

  Json cross_frechet(const Query& q, const PolySet& s, const ConvexPoly& c, const RVec& x, const Cone& exact) {
    const oracle::CrossCheckReport rep = oracle::cross_check_frechet(s, c, x, exact, o_.plan);
    Json flagged = Json::array();
    for (const RVec& d : rep.flagged) flagged.push_back(vec_json(d, dec()));
    if (!rep.clean()) warn(q, std::to_string(rep.flagged.size()) + " Fréchet probe disagreement(s)");
    return Json{{"probes", rep.probes}, {"flags", rep.flagged.size()}, {"flagged", flagged}};
  }

  Json cross_aubin(const Query& q, const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y,
                   const TriVerdict& exact) {
    const oracle::AubinSample s = oracle::aubin_ratio_probe(f, c, x, y, o_.plan);
    const bool agree = oracle::aubin_agrees(exact, s);
    if (!agree) warn(q, "Aubin ratio probe disagrees with the exact verdict");
    return Json{{"max_ratio", dbl(s.max_ratio)}, {"pairs", s.pairs}, {"divergent", s.divergent()}, {"agrees", agree},
                {"flags", agree ? 0 : 1}};
  }

  Outcome normal_cone(const QueryArgs& a, const Query& q) {
    a.allow({"set", "wrt", "at", "kind"});
    const PolySet s = a.set("set");
    const RVec x = a.point("at");
    if (x.size() != s.dim()) a.fail("at", "dimension does not match the set");
    const ConvexPoly c = a.convex_or_whole("wrt", s.dim());
    const std::string kind = a.word("kind", "limiting", {"frechet", "proximal", "limiting"});
    Outcome out;
    out.status = "computed";
    out.body["kind"] = kind;
    out.body["at"] = vec_json(x, dec());
    if (kind == "limiting") {
      out.body["cone"] = to_json(limiting_normal_wrt(s, c, x), dec());
    } else {
      const auto k = kind == "frechet" ? frechet_normal_wrt(s, c, x) : proximal_normal_wrt(s, c, x);
      out.body["cone"] = k ? to_json(*k, dec()) : Json{{"empty", true}};
    }
    if (o_.cross_check) {
      if (const auto k = frechet_normal_wrt(s, c, x)) out.body["cross_check"] = cross_frechet(q, s, c, x, *k);
    }
    return out;
  }

  Outcome coderivative(const QueryArgs& a) {
    a.allow({"map", "wrt", "x", "y", "ystar"});
    const PolyMultimap f = a.map("map");
    const RVec x = a.point("x"), y = a.point("y");
    const ConvexPoly c = a.convex_or_whole("wrt", f.in_dim);
    Outcome out;
    out.status = "computed";
    out.body["graph_normal_cone"] = to_json(coderivative_cone(f, c, x, y), dec());
    out.body["at_zero"] = to_json(coderivative_at_zero(f, c, x, y), dec());
    if (a.has("ystar")) {
      const RVec ys = a.point("ystar");
      out.body["ystar"] = vec_json(ys, dec());
      out.body["value"] = to_json(coderivative_wrt(f, c, x, y, ys).value, dec());
    }
    return out;
  }

  Outcome subdiff(const QueryArgs& a) {
    a.allow({"function", "wrt", "at", "kind"});
    const PLFunc f = a.function("function");
    const RVec x = a.point("at");
    const ConvexPoly c = a.convex_or_whole("wrt", f.dim());
    const std::string kind = a.word("kind", "limiting", {"frechet", "limiting", "horizon"});
    const SubdiffKind k =
        kind == "frechet" ? SubdiffKind::kFrechet : kind == "horizon" ? SubdiffKind::kHorizon : SubdiffKind::kLimiting;
    Outcome out;
    out.status = "computed";
    out.body["kind"] = kind;
    out.body["at"] = vec_json(x, dec());
    out.body["value"] = to_json(subdiff_wrt(f, c, x, k).value, dec());
    return out;
  }

  Outcome check_aubin(const QueryArgs& a, const Query& q) {
    a.allow({"map", "wrt", "x", "y"});
    const PolyMultimap f = a.map("map");
    const RVec x = a.point("x"), y = a.point("y");
    const ConvexPoly c = a.convex_or_whole("wrt", f.in_dim);
    const TriVerdict v = aubin_wrt_check(f, c, x, y);
    Outcome out{to_json(v, dec()), verdict_code(v), to_string(v.value)};
    out.body["coderivative_at_zero"] = to_json(coderivative_at_zero(f, c, x, y), dec());
    if (o_.cross_check) out.body["cross_check"] = cross_aubin(q, f, c, x, y, v);
    return out;
  }

  Outcome check_lipschitz(const QueryArgs& a) {
    a.allow({"function", "wrt", "at"});
    const PLFunc f = a.function("function");
    const RVec x = a.point("at");
    const ConvexPoly c = a.convex_or_whole("wrt", f.dim());
    const TriVerdict v = lipschitz_wrt_check(f, c, x);
    Outcome out{to_json(v, dec()), verdict_code(v), to_string(v.value)};
    out.body["horizon_subdifferential"] = to_json(horizon_cone(f, c, x), dec());
    return out;
  }

  SetPair pair(const QueryArgs& a) const {
    SetPair s{a.set("omega1"), a.set("omega2"), ConvexPoly::whole(0), ConvexPoly::whole(0)};
    if (s.omega1.dim() != s.omega2.dim()) a.fail("omega2", "dimension does not match omega1");
    s.c1 = a.convex_or_whole("c1", s.omega1.dim());
    s.c2 = a.convex_or_whole("c2", s.omega1.dim());
    return s;
  }

  Outcome check_pair(const QueryArgs& a, const std::string& op) {
    a.allow({"omega1", "omega2", "c1", "c2", "at"});
    const SetPair s = pair(a);
    const RVec x = a.point("at");
    const TriVerdict v = op == "check-lqc" ? lqc_wrt_check(s, x) : normal_densed_check(s, x);
    return Outcome{to_json(v, dec()), verdict_code(v), to_string(v.value)};
  }

  Outcome rule(const QueryArgs& a) {
    const std::string kind =
        a.word("rule", "", {"product", "mixed-product", "intersection", "preimage", "sum", "chain"});
    if (kind.empty()) a.fail("rule", "missing");
    RuleReport r;
    if (kind == "product") {
      a.allow({"rule", "omega1", "c1", "x1", "omega2", "c2", "x2"});
      const PolySet o1 = a.set("omega1"), o2 = a.set("omega2");
      r = product_rule(o1, a.convex_or_whole("c1", o1.dim()), a.point("x1"), o2, a.convex_or_whole("c2", o2.dim()),
                       a.point("x2"));
    } else if (kind == "mixed-product") {
      a.allow({"rule", "omega1", "c1", "omega2", "c2", "x", "y", "z", "reading"});
      MixedInput in{a.set("omega1"), ConvexPoly::whole(0), a.set("omega2"), ConvexPoly::whole(0),
                    a.point("x"),    a.point("y"),         a.point("z")};
      in.c1 = a.convex_or_whole("c1", in.omega1.dim());
      in.c2 = a.convex_or_whole("c2", in.omega2.dim());
      const bool statement = a.word("reading", "proof", {"proof", "statement"}) == "statement";
      r = mixed_product_rule(in, statement ? MixedReading::kStatement : MixedReading::kProof);
    } else if (kind == "intersection") {
      a.allow({"rule", "omega1", "omega2", "c1", "c2", "at"});
      r = intersection_rule(pair(a), a.point("at"));
    } else if (kind == "preimage") {
      a.allow({"rule", "map", "theta", "wrt", "at"});
      const PolyMultimap f = a.map("map");
      r = preimage_rule(f, a.set("theta"), a.convex_or_whole("wrt", f.in_dim), a.point("at"));
    } else if (kind == "sum") {
      a.allow({"rule", "f1", "f2", "c1", "c2", "x", "y1", "y2", "ystar", "semicompact"});
      const PolyMultimap f1 = a.map("f1"), f2 = a.map("f2");
      r = sum_rule(SumRuleInput{f1, f2, a.convex_or_whole("c1", f1.in_dim), a.convex_or_whole("c2", f1.in_dim),
                                a.point("x"), a.point("y1"), a.point("y2"), a.point("ystar")},
                   a.flag("semicompact", false));
    } else {
      a.allow({"rule", "g", "f", "c", "x", "y", "z", "zstar", "semicompact"});
      const PolyMultimap g = a.map("g");
      r = chain_rule(ChainRuleInput{g, a.map("f"), a.convex_or_whole("c", g.in_dim), a.point("x"), a.point("y"),
                                    a.point("z"), a.point("zstar")},
                     a.flag("semicompact", false));
    }
    Outcome out;
    out.body["rule"] = r.rule;
    Json quals = Json::array();
    for (const Qualification& q : r.qualifications) {
      Json j{{"name", q.name}};
      j.update(to_json(q.verdict, dec()));
      quals.push_back(j);
    }
    out.body["qualifications"] = quals;
    out.body["hypotheses_hold"] = r.hypotheses_hold();
    Comparison main{"conclusion", r.lhs, r.rhs, r.equality, r.inclusion_holds, r.witness};
    out.body["conclusion"] = comparison_json(main, dec());
    Json extra = Json::array();
    bool all = r.inclusion_holds;
    for (const Comparison& c : r.extra) {
      extra.push_back(comparison_json(c, dec()));
      all = all && c.holds;
    }
    out.body["consequences"] = extra;
    if (o_.quals == QualsMode::kStrict && !r.hypotheses_hold()) {
      out.status = "hypotheses-not-met";
      out.code = kExitUnknown;
    } else {
      out.status = all ? "inclusion-holds" : "inclusion-violated";
      out.code = all ? kExitOk : kExitFails;
    }
    return out;
  }

  Outcome mpec(const QueryArgs& a, const Query& q) {
    a.allow({"function", "map", "c1", "c2", "at"});
    const PLFunc f = a.function("function");
    const PolyMultimap g = a.map("map");
    const MPECProblem p{f, g, a.convex_or_whole("c1", f.dim()), a.convex_or_whole("c2", f.dim())};
    const RVec x = a.point("at");
    StationarityReport s;
    try {
      s = stationarity_check(p, x);
    } catch (const InfeasibleCandidate& e) {
      a.fail("at", e.what());
    }
    const RVec y = zeros(g.out_dim);
    const TriVerdict classical = aubin_wrt_check(g, ConvexPoly::whole(f.dim()), x, y);
    Outcome out;
    Json& b = out.body;
    b["candidate"] = vec_json(x, dec());
    b["q1"] = to_json(s.q1, dec());
    b["q2"] = to_json(s.q2, dec());
    b["aubin_wrt_c2"] = to_json(s.aubin_g, dec());
    b["aubin_classical"] = to_json(classical, dec());
    b["subdifferential"] = to_json(s.subdiff, dec());
    b["coderivative_at_zero"] = to_json(s.coderiv, dec());
    b["zero_in_subdiff_plus_coderivative"] = s.condition_full;
    b["zero_in_subdiff"] = s.condition_simple;
    b["simple_condition_applicable"] = s.simple_applicable;
    b["verdict"] = to_string(s.verdict);
    if (o_.cross_check) {
      b["cross_check"] = Json{{"aubin_wrt_c2", cross_aubin(q, g, p.c2, x, y, s.aubin_g)},
                              {"aubin_classical", cross_aubin(q, g, ConvexPoly::whole(f.dim()), x, y, classical)}};
    }
    out.status = to_string(s.verdict);
    out.code = s.verdict == MPECVerdict::kNecessaryConditionsHold ? kExitOk
               : s.verdict == MPECVerdict::kCertifiedNonOptimal  ? kExitFails
                                                                  : kExitUnknown;
    return out;
  }

  const Problem& p_;
  const RunOptions& o_;
  RunResult& r_;
};

}  // namespace

Json vec_json(const RVec& v, bool decimal) {
  Json a = Json::array();
  for (const Rat& q : v) a.push_back(num(q, decimal));
  return a;
}

Json to_json(const Cone& c, bool decimal) {
  return Json{{"rays", mat_json(c.rays(), decimal)},
              {"lineality", mat_json(c.lineality(), decimal)},
              {"ineqs", mat_json(c.ineqs(), decimal)},
              {"eqs", mat_json(c.eqs(), decimal)}};
}

Json to_json(const ConeUnion& u, bool decimal) {
  Json parts = Json::array();
  for (const Cone& c : u.parts()) parts.push_back(to_json(c, decimal));
  return Json{{"parts", parts}};
}

Json to_json(const PolySet& s, bool decimal) {
  std::vector<std::pair<std::string, Json>> keyed;
  for (const ConvexPoly& p : s.pieces()) {
    Json j = poly_json(p, decimal);
    keyed.emplace_back(j.dump(), std::move(j));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  Json pieces = Json::array();
  for (auto& [_, j] : keyed) pieces.push_back(std::move(j));
  return Json{{"pieces", pieces}};
}

Json to_json(const TriVerdict& v, bool decimal) {
  Json j{{"verdict", to_string(v.value)}};
  if (v.certificate) j["certificate"] = vec_json(*v.certificate, decimal);
  if (v.certificate2) j["certificate2"] = vec_json(*v.certificate2, decimal);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

RunResult run_problem(const Problem& p, const RunOptions& opt) {
  opt.plan.validate();
  RunResult r;
  Json results = Json::array();
  Runner runner(p, opt, r);
  int code = kExitOk;
  for (const Query& q : p.queries) {
    if (opt.op && q.op != *opt.op) continue;
    if (opt.query && q.name != *opt.query) continue;
    if (opt.rule && !(q.params.contains("rule") && q.params["rule"] == *opt.rule)) continue;
    Outcome o;
    try {
      o = runner.run(q);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(q.path + " (" + q.name + "): " + e.what());
    }
    Json entry{{"query", q.name}, {"op", q.op}, {"status", o.status}, {"exit_code", o.code}};
    entry.update(o.body);
    results.push_back(std::move(entry));
    code = std::max(code, o.code);
  }
  if (results.empty()) throw InputError("no query matches the selection");
  r.report = Json{{"format", "vawrt-report/1"},
                  {"source", opt.source},
                  {"quals", opt.quals == QualsMode::kStrict ? "strict" : "diagnostic"},
                  {"cross_check", opt.cross_check},
                  {"results", results},
                  {"exit_code", code}};
  r.exit_code = code;
  return r;
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace vawrt
