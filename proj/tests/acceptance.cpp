// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: acceptance <path to vawrt_cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "support.hpp"
#include "vawrt/calculus.hpp"
#include "vawrt/cones.hpp"
#include "vawrt/presets.hpp"
#include "vawrt/problem.hpp"
#include "vawrt/report.hpp"

using namespace vawrt;
using namespace vawrt::test;

namespace {

constexpr double kExactLimit = 1.0;
constexpr double kStructuralLimit = 60.0;
constexpr double kGuardedLimit = 120.0;
constexpr double kOracleLimit = 30.0;
constexpr double kDeterminismLimit = 60.0;
constexpr int kStructuralCount = 100;
constexpr int kGuardedCount = 100;
constexpr std::uint64_t kStructuralSeed = 20261;
constexpr std::uint64_t kGuardedSeed = 20262;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  std::vector<std::string> info;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  out.check(secs < limit, "over time limit");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << buf << "]";
  for (const std::string& n : out.notes) std::cout << "\n    " << n;
  for (const std::string& n : out.info) std::cout << "\n    " << n;
  std::cout << std::endl;
  return out.ok;
}

Cone zero3() { return Cone::from_h(3, {}, {v({"1", "0", "0"}), v({"0", "1", "0"}), v({"0", "0", "1"})}); }

// {(u,0,v) : 0 <= u <= -v}
Cone wedge() { return cone_h(3, {v({"-1", "0", "0"}), v({"1", "0", "1"})}, {v({"0", "1", "0"})}); }
// {(u,0,v) : 0 <= u = -v}
Cone diagonal() { return cone_h(3, {v({"-1", "0", "0"})}, {v({"0", "1", "0"}), v({"1", "0", "1"})}); }
// {0} x R_- x {0}
Cone y_ray() { return cone_h(3, {v({"0", "1", "0"})}, {v({"1", "0", "0"}), v({"0", "0", "1"})}); }

void cone_tables(Outcome& o) {
  WedgePair ex;
  struct Row {
    const char* label;
    const PolySet* set;
    const ConvexPoly* wrt;
    RVec at;
    Cone expect;
  };
  const std::vector<Row> rows = {
      {"omega1/C (0,0,0)", &ex.omega1, &ex.c, v({"0", "0", "0"}), wedge()},
      {"omega1/C x=z>0", &ex.omega1, &ex.c, v({"1", "0", "1"}), diagonal()},
      {"omega1/C z>x=0", &ex.omega1, &ex.c, v({"0", "3", "1"}), zero3()},
      {"omega1/C z>x>0", &ex.omega1, &ex.c, v({"1", "-2", "2"}), zero3()},
      {"omega2/C x=y=0", &ex.omega2, &ex.c, v({"0", "0", "0"}), y_ray()},
      {"omega2/C x>0,y=0", &ex.omega2, &ex.c, v({"1", "0", "-1"}), y_ray()},
      {"omega2/C x=0,y>0", &ex.omega2, &ex.c, v({"0", "1", "0"}), zero3()},
      {"omega2/C x,y>0", &ex.omega2, &ex.c, v({"2", "1", "3"}), zero3()},
      {"omega1/C1 x=z=0", &ex.omega1, &ex.c1, v({"0", "0", "0"}), diagonal()},
      {"omega1/C1 x=z>0", &ex.omega1, &ex.c1, v({"1", "2", "1"}), diagonal()},
      {"omega2/C2 y=0", &ex.omega2, &ex.c, v({"0", "0", "1"}), y_ray()},
      {"omega2/C2 y>0", &ex.omega2, &ex.c, v({"2", "1", "-1"}), zero3()},
  };
  for (const Row& r : rows) {
    const auto got = frechet_normal_wrt(*r.set, *r.wrt, r.at);
    o.check(got && *got == r.expect, r.label);
  }
}

SetPair pair(bool whole_c1) {
  WedgePair e;
  return SetPair{e.omega1, e.omega2, whole_c1 ? e.c1 : e.c, e.c};
}

void qualifications(Outcome& o) {
  const RVec origin = v({"0", "0", "0"});
  o.check(lqc_wrt_check(pair(false), origin).holds(), "LQC wrt {C,C}");
  o.check(lqc_wrt_check(pair(true), origin).holds(), "LQC wrt {C1,C2}");
  o.check(normal_densed_check(pair(false), origin).holds(), "normal-densed {C,C}");
  const TriVerdict nd = normal_densed_check(pair(true), origin);
  o.check(nd.fails() && nd.certificate && *nd.certificate == v({"1", "0", "-2"}), "normal-densed {C1,C2} certificate");
}

void intersection(Outcome& o) {
  WedgePair e;
  const RVec origin = v({"0", "0", "0"});
  const ConvexPoly c = e.c;  // C1 ∩ C2

  const ConeUnion lhs = limiting_normal_wrt(e.omega1.intersect(e.omega2), c, origin);
  o.check(lhs.same_set(ConeUnion(wedge())),
          "N_{C1∩C2}(0, Ω1∩Ω2) = {(u,0,v): 0<=u<=-v}; computed " + to_json(lhs).dump());

  const ConeUnion sum = limiting_normal_wrt(e.omega1, e.c1, origin).minkowski_sum(limiting_normal_wrt(e.omega2, e.c, origin));
  const Cone sum_expect = cone_h(3, {v({"-1", "0", "0"}), v({"0", "1", "0"})}, {v({"1", "0", "1"})});
  o.check(sum.same_set(ConeUnion(sum_expect)), "N_{C1}(Ω1) + N_{C2}(Ω2) = {(u,w,-u): u>=0, w<=0}");

  const RuleReport fail = intersection_rule(pair(true), origin);
  o.check(!fail.inclusion_holds && fail.witness && *fail.witness == v({"1", "0", "-2"}), "inclusion fails with (1,0,-2)");

  const RuleReport hold = intersection_rule(pair(false), origin);
  o.check(hold.hypotheses_hold() && hold.inclusion_holds, "inclusion holds for C1 = C2 = R_+ x R^2");

  const ConeUnion n1 = limiting_normal_wrt(e.omega1, c, origin);
  o.check(lhs.same_set(n1), "N_C(0, Ω1∩Ω2) = N_C(0, Ω1); computed N_C(0, Ω1) " + to_json(n1).dump());
}

void mpec(Outcome& o) {
  ConstraintMap e;
  const StationarityReport first = stationarity_check(e.first(), e.zero);
  o.check(first.verdict == MPECVerdict::kNecessaryConditionsHold, "first: NecessaryConditionsHold");
  o.check(first.subdiff.same_set(PolySet(poly(1, {row({"-1"}, "0"), row({"1"}, "1")}))), "first: subdifferential [0,1]");

  const StationarityReport second = stationarity_check(e.second(), e.zero);
  o.check(second.q2.fails(), "second: q2 fails");
  o.check(second.subdiff.same_set(PolySet(ConvexPoly::point(v({"1"})))), "second: subdifferential {1}");
  o.check(!second.condition_simple, "second: 0 not in subdifferential");

  o.check(aubin_wrt_check(e.g, e.half, e.zero, e.zero).holds(), "Aubin wrt [0,inf) holds");
  o.check(coderivative_at_zero(e.g, e.half, e.zero, e.zero).is_zero(), "D*_C G(0,0)(0) = {0}");
}

void suite(Outcome& o, const SuiteResult& r, int count) {
  o.check(r.instances >= count, "instance count " + std::to_string(r.instances));
  for (const std::string& f : r.failures) o.check(false, f);
}

void walk_probes(const nlohmann::ordered_json& j, const std::string& path, long& flags,
                 std::vector<std::pair<std::string, bool>>& aubin) {
  if (j.is_object()) {
    if (j.contains("divergent")) aubin.emplace_back(path, j["divergent"].get<bool>());
    if (j.contains("flags") && j["flags"].is_number()) flags += j["flags"].get<long>();
    for (const auto& [k, v] : j.items()) walk_probes(v, path + "/" + k, flags, aubin);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto& item = j[i];
      const std::string key = item.is_object() && item.contains("query") ? item["query"].get<std::string>()
                                                                           : std::to_string(i);
      walk_probes(item, path + "/" + key, flags, aubin);
    }
  }
}

void oracle_concordance(Outcome& o) {
  long flags = 0;
  int divergent = 0;
  for (const Preset& p : presets()) {
    RunOptions opt;
    opt.source = p.id;
    opt.cross_check = true;
    const RunResult r = run_problem(parse_problem(p.text), opt);
    std::vector<std::pair<std::string, bool>> aubin;
    walk_probes(r.report, p.id, flags, aubin);
    for (const auto& [path, div] : aubin) {
      const bool classical = path.find("classical") != std::string::npos;
      o.check(div == classical, path + (div ? " divergent" : " not divergent"));
      divergent += div;
    }
  }
  o.check(flags == 0, std::to_string(flags) + " disagreement flags");
  o.check(divergent > 0, "no divergent probe observed");
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

void determinism(Outcome& o, const std::string& cli) {
  for (const Preset& p : presets()) {
    for (const char* extra : {"", " --cross-check"}) {
      const std::string cmd = "'" + cli + "'" + extra + " paper-example " + p.id + " 2>/dev/null";
      const std::string a = capture(cmd);
      const std::string b = capture(cmd);
      o.check(!a.empty() && a == b, p.id + extra);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <vawrt_cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  bool all = true;
  all &= run_criterion(1, "Fréchet cone tables, 12 points", kExactLimit, cone_tables);
  all &= run_criterion(2, "qualification verdicts", kExactLimit, qualifications);
  all &= run_criterion(3, "intersection rule example", kExactLimit, intersection);
  all &= run_criterion(4, "MPEC stationarity examples", kExactLimit, mpec);
  all &= run_criterion(5, "structural property suite", kStructuralLimit,
                       [](Outcome& o) { suite(o, structural_suite(kStructuralSeed, kStructuralCount), kStructuralCount); });
  all &= run_criterion(6, "guarded rule suite", kGuardedLimit, [](Outcome& o) {
    const SuiteResult r = guarded_rule_suite(kGuardedSeed, kGuardedCount);
    suite(o, r, kGuardedCount);
    o.check(r.guarded > 0, "no instance met all hypotheses");
    o.info.push_back("rule checks with all hypotheses holding: " + std::to_string(r.guarded) + " over " +
                     std::to_string(r.instances) + " instances");
  });
  all &= run_criterion(7, "oracle concordance on presets", kOracleLimit, oracle_concordance);
  all &= run_criterion(8, "byte-identical CLI reports", kDeterminismLimit, [&](Outcome& o) { determinism(o, cli); });
  return all ? 0 : 1;
}
