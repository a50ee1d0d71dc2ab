#include "vawrt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vawrt::oracle {

namespace {

using DVec = std::vector<double>;
using Index = std::vector<long>;

/// a·(x̄ + step k) - b evaluated as offset + step (a·k) with integer a, so that
/// rows active at x̄ give exactly zero.
struct GridRow {
  DVec a;
  double offset = 0;
  bool eq = false;

  double value(const Index& k, double step) const {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<double>(k[i]);
    return offset + step * s;
  }
  bool holds(const Index& k, double step) const {
    const double v = value(k, step);
    return eq ? v == 0 : v <= 0;
  }
};

GridRow grid_row(const AffineRow& r, const RVec& base, bool eq) {
  RVec full = concat(r.a, RVec{r.b});
  full = primitive(full);
  const RVec a = slice(full, 0, r.a.size());
  GridRow g;
  g.eq = eq;
  g.offset = Rat(dot(a, base) - full.back()).get_d();
  for (const Rat& q : a) g.a.push_back(q.get_d());
  return g;
}

std::vector<GridRow> grid_rows(const ConvexPoly& p, const RVec& base) {
  std::vector<GridRow> out;
  for (const AffineRow& r : p.ineqs()) out.push_back(grid_row(r, base, false));
  for (const AffineRow& r : p.eqs()) out.push_back(grid_row(r, base, true));
  return out;
}

bool all_hold(const std::vector<GridRow>& rows, const Index& k, double step) {
  return std::all_of(rows.begin(), rows.end(), [&](const GridRow& r) { return r.holds(k, step); });
}

/// Calls visit(k) for every k ∈ [-w, w]^n in lexicographic order.
template <class F>
void for_each_index(std::size_t n, long w, F&& visit) {
  Index k(n, -w);
  while (true) {
    visit(static_cast<const Index&>(k));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (k[i] < w) {
        ++k[i];
        break;
      }
      k[i] = -w;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

long inf_norm(const Index& k) {
  long m = 0;
  for (long v : k) m = std::max(m, std::labs(v));
  return m;
}

RVec grid_point(const RVec& base, const Rat& step, const Index& k) {
  RVec p = base;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += step * Rat(k[i]);
  return p;
}

DVec to_double(const RVec& v) {
  DVec d;
  for (const Rat& q : v) d.push_back(q.get_d());
  return d;
}

double norm2(const DVec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double distance(const DVec& a, const DVec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

/// Halfspace a·y ≤ b.
struct Half {
  DVec a;
  double b;
};

using Fiber = std::vector<Half>;

/// Euclidean projection onto a nonempty intersection of halfspaces by
/// Dykstra's algorithm; nullopt when the iterate stays infeasible.
std::optional<DVec> project(const Fiber& hs, const DVec& z) {
  const std::size_t m = z.size();
  std::vector<Half> live;
  for (const Half& h : hs) {
    if (norm2(h.a) == 0) {
      if (h.b < -1e-12) return std::nullopt;
      continue;
    }
    live.push_back(h);
  }
  DVec x = z;
  std::vector<DVec> inc(live.size(), DVec(m, 0.0));
  for (int cycle = 0; cycle < 2000; ++cycle) {
    double change = 0;
    for (std::size_t i = 0; i < live.size(); ++i) {
      DVec y = x;
      for (std::size_t j = 0; j < m; ++j) y[j] += inc[i][j];
      DVec p = y;
      double v = -live[i].b;
      for (std::size_t j = 0; j < m; ++j) v += live[i].a[j] * y[j];
      if (v > 0) {
        const double nn = norm2(live[i].a);
        for (std::size_t j = 0; j < m; ++j) p[j] -= v / (nn * nn) * live[i].a[j];
      }
      for (std::size_t j = 0; j < m; ++j) {
        inc[i][j] = y[j] - p[j];
        change = std::max(change, std::fabs(p[j] - x[j]));
      }
      x = std::move(p);
    }
    if (change < 1e-14) break;
  }
  for (const Half& h : live) {
    double v = -h.b;
    for (std::size_t j = 0; j < m; ++j) v += h.a[j] * x[j];
    if (v / norm2(h.a) > 1e-9) return std::nullopt;
  }
  return x;
}

/// F(p) piece by piece, equalities split into two halfspaces.
std::vector<Fiber> fibers(const PolyMultimap& f, const RVec& p) {
  std::vector<Fiber> out;
  const std::size_t n = f.in_dim, m = f.out_dim;
  for (const ConvexPoly& piece : f.graph.pieces()) {
    Fiber fb;
    auto add = [&](const AffineRow& r, double sign) {
      const Rat rhs = r.b - dot(slice(r.a, 0, n), p);
      DVec a = to_double(slice(r.a, n, m));
      for (double& v : a) v *= sign;
      fb.push_back({std::move(a), sign * rhs.get_d()});
    };
    for (const AffineRow& r : piece.ineqs()) add(r, 1);
    for (const AffineRow& r : piece.eqs()) {
      add(r, 1);
      add(r, -1);
    }
    out.push_back(std::move(fb));
  }
  return out;
}

bool in_fiber(const Fiber& fb, const DVec& y) {
  for (const Half& h : fb) {
    double v = -h.b;
    for (std::size_t j = 0; j < y.size(); ++j) v += h.a[j] * y[j];
    if (v > 1e-12) return false;
  }
  return true;
}

/// Half width and step of a grid with at most 129 points in `dim` dimensions.
std::pair<long, Rat> coarse_grid(std::size_t dim, const SamplingPlan& plan) {
  long w = plan.half_width();
  Rat step = plan.grid_step;
  auto count = [&](long hw) {
    double c = 1;
    for (std::size_t i = 0; i < dim; ++i) c *= static_cast<double>(2 * hw + 1);
    return c;
  };
  while (w > 1 && count(w) > 129) {
    w /= 2;
    step *= 2;
  }
  return {w, step};
}

}  // namespace

void SamplingPlan::validate() const {
  if (sgn(radius) <= 0 || sgn(grid_step) <= 0) throw std::invalid_argument("sampling plan: radius and step must be positive");
  if (grid_step >= radius) throw std::invalid_argument("sampling plan: grid_step must be smaller than radius");
  if (!(tolerance > 0)) throw std::invalid_argument("sampling plan: tolerance must be positive");
  if (direction_count < 0) throw std::invalid_argument("sampling plan: direction_count must be nonnegative");
}

long SamplingPlan::half_width() const {
  const Rat q = radius / grid_step;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

std::string to_string(Probe p) { return p == Probe::kConsistent ? "consistent" : "inconsistent"; }

FrechetSampler::FrechetSampler(const PolySet& omega, const ConvexPoly& c, const RVec& x, const SamplingPlan& plan)
    : c_(c), x_(x), plan_(plan) {
  plan.validate();
  if (omega.dim() != x.size() || c.dim() != x.size()) throw DimensionError("oracle: dimension mismatch");
  if (!omega.contains(x) || !c.contains(x)) throw std::invalid_argument("oracle: x must lie in Ω∩C");
  // The limsup is the infimum over shrinking balls; keep the smallest ball
  // B(x̄, radius 2^-j) still holding at least 8 steps per half axis.
  long w = plan.half_width();
  while (w / 2 >= 8) w /= 2;
  const double step = plan.grid_step.get_d();
  const std::vector<GridRow> crow = grid_rows(c, x);
  std::vector<std::vector<GridRow>> prow;
  for (const ConvexPoly& p : omega.pieces()) prow.push_back(grid_rows(p, x));
  for_each_index(x.size(), w, [&](const Index& k) {
    if (inf_norm(k) == 0 || !all_hold(crow, k, step)) return;
    for (const auto& rows : prow) {
      if (all_hold(rows, k, step)) {
        members_.push_back(k);
        return;
      }
    }
  });
}

FrechetSample FrechetSampler::sample(const RVec& d) const {
  if (d.size() != x_.size()) throw DimensionError("oracle: direction has wrong length");
  FrechetSample s;
  if (is_zero(d)) return s;
  Rat scale = 0;
  for (const Rat& q : d) scale = std::max(scale, Rat(abs(q)));
  RVec unit_d = d;
  for (Rat& q : unit_d) q /= scale;
  s.radial = false;
  for (const Rat& p : {plan_.grid_step, plan_.radius}) {
    RVec y = x_;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += p * unit_d[i];
    if (c_.contains(y)) s.radial = true;
  }
  const DVec dd = to_double(unit_d);
  s.limsup = -std::numeric_limits<double>::infinity();
  for (const Index& k : members_) {
    double num = 0, nn = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      num += dd[i] * static_cast<double>(k[i]);
      nn += static_cast<double>(k[i]) * static_cast<double>(k[i]);
    }
    s.limsup = std::max(s.limsup, num / std::sqrt(nn));
  }
  return s;
}

Probe frechet_membership_probe(const PolySet& omega, const ConvexPoly& c, const RVec& x, const RVec& d,
                               const SamplingPlan& plan, bool claimed) {
  const FrechetSampler s(omega, c, x, plan);
  return s.sample(d).member(plan.tolerance) == claimed ? Probe::kConsistent : Probe::kInconsistent;
}

CrossCheckReport cross_check_frechet(const PolySet& omega, const ConvexPoly& c, const RVec& x, const Cone& exact,
                                     const SamplingPlan& plan) {
  const FrechetSampler sampler(omega, c, x, plan);
  std::vector<RVec> dirs;
  for (const RVec& r : exact.rays()) dirs.push_back(r);
  for (const RVec& l : exact.lineality()) {
    dirs.push_back(l);
    dirs.push_back(negate(l));
  }
  int extra = 0;
  for_each_index(x.size(), 1, [&](const Index& k) {
    if (extra >= plan.direction_count || inf_norm(k) == 0) return;
    RVec d;
    for (long v : k) d.push_back(Rat(v));
    dirs.push_back(std::move(d));
    ++extra;
  });
  CrossCheckReport rep;
  for (const RVec& d : dirs) {
    ++rep.probes;
    if (sampler.sample(d).member(plan.tolerance) != exact.contains(d)) rep.flagged.push_back(d);
  }
  return rep;
}

AubinSample aubin_ratio_probe(const PolyMultimap& f, const ConvexPoly& c, const RVec& x, const RVec& y,
                              const SamplingPlan& plan) {
  plan.validate();
  const std::size_t n = f.in_dim, m = f.out_dim;
  if (x.size() != n || y.size() != m || c.dim() != n) throw DimensionError("oracle: dimension mismatch");
  if (!f.in_graph(x, y)) throw std::invalid_argument("oracle: (x, y) must lie in gph F");

  const auto [wx, sx] = coarse_grid(n, plan);
  std::vector<RVec> points;
  for_each_index(n, wx, [&](const Index& k) {
    RVec p = grid_point(x, sx, k);
    if (c.contains(p)) points.push_back(std::move(p));
  });
  if (points.size() < 2) throw std::invalid_argument("oracle: empty samples");

  const auto [wy, sy] = coarse_grid(m, plan);
  std::vector<DVec> ygrid;
  for_each_index(m, wy, [&](const Index& k) { ygrid.push_back(to_double(grid_point(y, sy, k))); });
  const DVec ybar = to_double(y);
  const double vr = plan.radius.get_d();
  auto in_v = [&](const DVec& p) {
    for (std::size_t j = 0; j < m; ++j) {
      if (std::fabs(p[j] - ybar[j]) > vr) return false;
    }
    return true;
  };

  std::vector<std::vector<Fiber>> fib;
  std::vector<std::vector<DVec>> near;  // samples of F(u) ∩ V
  for (const RVec& p : points) {
    fib.push_back(fibers(f, p));
    std::vector<DVec> s;
    for (const Fiber& fb : fib.back()) {
      if (auto q = project(fb, ybar); q && in_v(*q)) s.push_back(*q);
    }
    if (!s.empty()) {
      for (const DVec& g : ygrid) {
        if (std::any_of(fib.back().begin(), fib.back().end(), [&](const Fiber& fb) { return in_fiber(fb, g); })) {
          s.push_back(g);
        }
      }
    }
    near.push_back(std::move(s));
  }

  AubinSample out;
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t u = 0; u < points.size(); ++u) {
    if (near[u].empty()) continue;
    const DVec du = to_double(points[u]);
    for (std::size_t xi = 0; xi < points.size(); ++xi) {
      if (xi == u) continue;
      ++out.pairs;
      double excess = 0;
      for (const DVec& q : near[u]) {
        double best = inf;
        for (const Fiber& fb : fib[xi]) {
          if (auto p = project(fb, q)) best = std::min(best, distance(*p, q));
        }
        excess = std::max(excess, best);
        if (excess == inf) break;
      }
      out.max_ratio = std::max(out.max_ratio, excess / distance(du, to_double(points[xi])));
    }
  }
  return out;
}

bool aubin_agrees(const TriVerdict& exact, const AubinSample& s) {
  if (exact.holds()) return !s.divergent();
  if (exact.fails()) return s.divergent();
  return true;
}

}  // namespace vawrt::oracle
