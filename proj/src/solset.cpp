#include "splitquat/solset.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "splitquat/realroots.hpp"
#include "splitquat/rng.hpp"

namespace splitquat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double dot(const SplitQuaternion& x, const SplitQuaternion& y) {
  return x.s0 * y.s0 + x.s1 * y.s1 + x.s2 * y.s2 + x.s3 * y.s3;
}

SplitQuaternion canonical_sign(SplitQuaternion d) {
  for (double v : d.coords()) {
    if (v > 0) return d;
    if (v < 0) return -d;
  }
  return d;
}

// Clamp a discriminant that is negative only by rounding.
double domain_sqrt(double v, double scale, const char* what) {
  if (v >= 0) return std::sqrt(v);
  if (v >= -1e-12 * (1.0 + scale)) return 0.0;
  throw OutOfDomain(what);
}

void expect_params(std::span<const double> p, std::size_t n) {
  if (p.size() != n) throw std::invalid_argument("wrong number of family parameters");
}

std::vector<SplitQuaternion> instantiate_implicit(const ImplicitQuarticFamily& f, std::span<const double> p) {
  const double a2 = f.a2, a3 = f.a3, b1 = f.b1, c0 = f.c0, c1 = f.c1;
  std::vector<SplitQuaternion> out;
  switch (f.tag) {
    case ImplicitCase::NoLinearTerm: {
      expect_params(p, 2);
      const double x2 = p[0], x3 = p[1];
      const double s = a2 * x2 + a3 * x3;
      const double u = a2 * x3 - a3 * x2;
      for (double T : real_quartic_roots(1.0, 2.0 * s, s * s + c0, u * c1, -c1 * c1 / 4.0)) {
        if (T == 0.0) continue;
        out.push_back({f.offset + T, -c1 / (2.0 * T) + u, x2, x3});
      }
      break;
    }
    case ImplicitCase::TraceZeroA2Zero: {
      expect_params(p, 1);
      const double x1 = p[0];
      const double x3 = c1 / (a3 * b1);
      const double q = c1 * c1 / (b1 * b1) + c0 - x1 * x1 - b1 * x1;
      const double disc = b1 * b1 - 4.0 * q;
      const double r = domain_sqrt(disc, b1 * b1 + 4.0 * (std::fabs(q) + x1 * x1), "x1 outside the admissible range");
      out.push_back({f.offset, x1, (-a3 * b1 + r) / 2.0, x3});
      if (r > 0) out.push_back({f.offset, x1, (-a3 * b1 - r) / 2.0, x3});
      break;
    }
    case ImplicitCase::TraceZeroA2Nonzero: {
      expect_params(p, 1);
      const double x3 = p[0];
      const double l = (2.0 * a3 * c1 + a2 * b1 * b1) / b1;
      const double k =
          (4.0 * (a2 * a2 * b1 * b1 * c0 + a2 * b1 * b1 * a3 * c1 + c1 * c1) + b1 * b1 * b1 * b1 * a2 * a2) /
          (4.0 * b1 * b1);
      const double w = x3 * x3 - l * x3 + k;
      const double r = domain_sqrt(w, x3 * x3 + std::fabs(l * x3) + std::fabs(k), "x3 outside the admissible range");
      const double x2 = c1 / (a2 * b1) - a3 / a2 * x3;
      out.push_back({f.offset, -b1 / 2.0 + r / a2, x2, x3});
      if (r > 0) out.push_back({f.offset, -b1 / 2.0 - r / a2, x2, x3});
      break;
    }
    case ImplicitCase::TraceNonzero: {
      expect_params(p, 2);
      const double x2 = p[0], x3 = p[1];
      const double s = a2 * x2 + a3 * x3;
      const double g = b1 * s - c1;
      const double q2 = s * s + b1 * (a3 * x2 - a2 * x3) + c0 + b1 * b1 / 4.0;
      const double q1 = a2 * a3 * b1 * (x2 * x2 - x3 * x3) + b1 * (a3 * a3 - a2 * a2) * x2 * x3 +
                        c1 * (a2 * x3 - a3 * x2);
      for (double T : real_quartic_roots(1.0, 2.0 * s, q2, q1, -g * g / 4.0)) {
        if (T == 0.0) continue;
        const double x1 = (a2 * b1 / (2.0 * T) - a3) * x2 + (a3 * b1 / (2.0 * T) + a2) * x3 - (c1 + b1 * T) / (2.0 * T);
        out.push_back({f.offset + T, x1, x2, x3});
      }
      break;
    }
  }
  return out;
}

std::array<AffinePlane, 2> tilted_planes(const TiltedPlanePair& t) {
  const double s = std::sqrt(std::max(-t.c0, 0.0));
  const SplitQuaternion d2{-t.a2, -t.a3, 1.0, 0.0};
  const SplitQuaternion d3{-t.a3, t.a2, 0.0, 1.0};
  return {make_plane({t.offset + s, 0, 0, 0}, d2, d3, "x2", "x3"),
          make_plane({t.offset - s, 0, 0, 0}, d2, d3, "x2", "x3")};
}

double plane_distance(const AffinePlane& p, const SplitQuaternion& x) {
  const SplitQuaternion v = x - p.base;
  return euclid_norm(v - dot(v, p.dir1) * p.dir1 - dot(v, p.dir2) * p.dir2);
}

double min_distance(const std::vector<SplitQuaternion>& pts, const SplitQuaternion& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) best = std::min(best, distance(p, x));
  return best;
}

// Compass search over the family parameters, starting at the chart projection.
double search_distance(const SolutionComponent& c, const SplitQuaternion& x) {
  auto eval = [&](const std::vector<double>& p) {
    try {
      return min_distance(instantiate(c, p), x);
    } catch (const OutOfDomain&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  std::vector<double> p = chart_params(c, x);
  double best = eval(p);
  if (best <= 1e-13 * (1.0 + euclid_norm(x))) return best;
  double step = 0.25 * (1.0 + euclid_norm(x));
  int budget = 600;
  while (step > 1e-14 * (1.0 + euclid_norm(x)) && budget > 0) {
    bool improved = false;
    for (std::size_t k = 0; k < p.size() && budget > 0; ++k) {
      for (double sgn : {1.0, -1.0}) {
        std::vector<double> q = p;
        q[k] += sgn * step;
        const double d = eval(q);
        --budget;
        if (d < best) {
          best = d;
          p = std::move(q);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

AffineLine make_line(const SplitQuaternion& base, const SplitQuaternion& dir, std::string param) {
  const double n = euclid_norm(dir);
  if (!(n > 0)) throw std::invalid_argument("line direction must be nonzero");
  return {base, canonical_sign(dir / n), std::move(param)};
}

AffinePlane make_plane(const SplitQuaternion& base, const SplitQuaternion& d1, const SplitQuaternion& d2,
                       std::string p1, std::string p2) {
  const double n1 = euclid_norm(d1);
  if (!(n1 > 0)) throw std::invalid_argument("plane direction must be nonzero");
  const SplitQuaternion u1 = d1 / n1;
  SplitQuaternion v = d2 - dot(d2, u1) * u1;
  v = v - dot(v, u1) * u1;
  const double n2 = euclid_norm(v);
  if (!(n2 > 1e-12 * euclid_norm(d2))) throw std::invalid_argument("plane directions must be independent");
  return {base, u1, v / n2, std::move(p1), std::move(p2)};
}

std::string kind_name(const SolutionComponent& c) {
  return std::visit(overloaded{[](const Point&) { return std::string("point"); },
                               [](const AffineLine&) { return std::string("affine_line"); },
                               [](const AffinePlane&) { return std::string("affine_plane"); },
                               [](const QuadricFamily&) { return std::string("quadric"); },
                               [](const TiltedPlanePair&) { return std::string("tilted_plane_pair"); },
                               [](const ImplicitQuarticFamily&) { return std::string("implicit_quartic"); },
                               [](const ParabolicCurve&) { return std::string("parabolic_curve"); },
                               [](const WholeSpace&) { return std::string("whole_space"); }},
                    c);
}

std::string case_name(ImplicitCase c) {
  switch (c) {
    case ImplicitCase::NoLinearTerm: return "thm4_1_2";
    case ImplicitCase::TraceZeroA2Zero: return "thm5_3_1_1";
    case ImplicitCase::TraceZeroA2Nonzero: return "thm5_3_1_2";
    case ImplicitCase::TraceNonzero: return "thm5_3_2_1";
  }
  return "?";
}

std::optional<ImplicitCase> parse_case_name(const std::string& s) {
  for (ImplicitCase c : {ImplicitCase::NoLinearTerm, ImplicitCase::TraceZeroA2Zero,
                         ImplicitCase::TraceZeroA2Nonzero, ImplicitCase::TraceNonzero})
    if (case_name(c) == s) return c;
  return std::nullopt;
}

std::vector<std::string> parameter_names(const SolutionComponent& c) {
  return std::visit(
      overloaded{[](const Point&) { return std::vector<std::string>{}; },
                 [](const AffineLine& l) { return std::vector<std::string>{l.param}; },
                 [](const AffinePlane& p) { return std::vector<std::string>{p.param1, p.param2}; },
                 [](const QuadricFamily&) { return std::vector<std::string>{"x2", "x3"}; },
                 [](const TiltedPlanePair&) { return std::vector<std::string>{"x2", "x3"}; },
                 [](const ImplicitQuarticFamily& f) {
                   switch (f.tag) {
                     case ImplicitCase::TraceZeroA2Zero: return std::vector<std::string>{"x1"};
                     case ImplicitCase::TraceZeroA2Nonzero: return std::vector<std::string>{"x3"};
                     default: return std::vector<std::string>{"x2", "x3"};
                   }
                 },
                 [](const ParabolicCurve&) { return std::vector<std::string>{"x0"}; },
                 [](const WholeSpace&) { return std::vector<std::string>{"x0", "x1", "x2", "x3"}; }},
      c);
}

std::size_t parameter_count(const SolutionComponent& c) { return parameter_names(c).size(); }

std::vector<SplitQuaternion> instantiate(const SolutionComponent& comp, std::span<const double> p) {
  return std::visit(
      overloaded{
          [&](const Point& x) {
            expect_params(p, 0);
            return std::vector<SplitQuaternion>{x.q};
          },
          [&](const AffineLine& l) {
            expect_params(p, 1);
            return std::vector<SplitQuaternion>{l.base + p[0] * l.dir};
          },
          [&](const AffinePlane& pl) {
            expect_params(p, 2);
            return std::vector<SplitQuaternion>{pl.base + p[0] * pl.dir1 + p[1] * pl.dir2};
          },
          [&](const QuadricFamily& q) {
            expect_params(p, 2);
            const double rad = p[0] * p[0] + p[1] * p[1] - q.level;
            const double x1 = domain_sqrt(rad, p[0] * p[0] + p[1] * p[1] + std::fabs(q.level),
                                          "chart point outside the quadric's shadow");
            std::vector<SplitQuaternion> out{{q.x0, x1, p[0], p[1]}};
            if (x1 > 0) out.push_back({q.x0, -x1, p[0], p[1]});
            return out;
          },
          [&](const TiltedPlanePair& t) {
            expect_params(p, 2);
            if (t.c0 > 0) throw OutOfDomain("tilted plane pair needs c0 <= 0");
            const double s = std::sqrt(-t.c0);
            const double x0 = t.offset - t.a2 * p[0] - t.a3 * p[1];
            const double x1 = t.a2 * p[1] - t.a3 * p[0];
            std::vector<SplitQuaternion> out{{x0 + s, x1, p[0], p[1]}};
            if (s > 0) out.push_back({x0 - s, x1, p[0], p[1]});
            return out;
          },
          [&](const ImplicitQuarticFamily& f) { return instantiate_implicit(f, p); },
          [&](const ParabolicCurve& pc) {
            expect_params(p, 1);
            const double x0 = p[0];
            const double x1 = (pc.p2 * x0 + pc.p1) * x0 + pc.p0;
            return std::vector<SplitQuaternion>{{pc.offset + x0, x1, pc.q0 + pc.q1 * x1, pc.r0 + pc.r1 * x1}};
          },
          [&](const WholeSpace&) {
            expect_params(p, 4);
            return std::vector<SplitQuaternion>{{p[0], p[1], p[2], p[3]}};
          }},
      comp);
}

std::vector<double> chart_params(const SolutionComponent& comp, const SplitQuaternion& x) {
  return std::visit(overloaded{[&](const Point&) { return std::vector<double>{}; },
                               [&](const AffineLine& l) { return std::vector<double>{dot(x - l.base, l.dir)}; },
                               [&](const AffinePlane& p) {
                                 const SplitQuaternion v = x - p.base;
                                 return std::vector<double>{dot(v, p.dir1), dot(v, p.dir2)};
                               },
                               [&](const QuadricFamily&) { return std::vector<double>{x.s2, x.s3}; },
                               [&](const TiltedPlanePair&) { return std::vector<double>{x.s2, x.s3}; },
                               [&](const ImplicitQuarticFamily& f) {
                                 switch (f.tag) {
                                   case ImplicitCase::TraceZeroA2Zero: return std::vector<double>{x.s1};
                                   case ImplicitCase::TraceZeroA2Nonzero: return std::vector<double>{x.s3};
                                   default: return std::vector<double>{x.s2, x.s3};
                                 }
                               },
                               [&](const ParabolicCurve& pc) { return std::vector<double>{x.s0 - pc.offset}; },
                               [&](const WholeSpace&) { return std::vector<double>{x.s0, x.s1, x.s2, x.s3}; }},
                    comp);
}

SolutionComponent translate(const SolutionComponent& comp, double shift) {
  return std::visit(overloaded{[&](Point p) -> SolutionComponent {
                                 p.q.s0 -= shift;
                                 return p;
                               },
                               [&](AffineLine l) -> SolutionComponent {
                                 l.base.s0 -= shift;
                                 return l;
                               },
                               [&](AffinePlane p) -> SolutionComponent {
                                 p.base.s0 -= shift;
                                 return p;
                               },
                               [&](QuadricFamily q) -> SolutionComponent {
                                 q.x0 -= shift;
                                 return q;
                               },
                               [&](TiltedPlanePair t) -> SolutionComponent {
                                 t.offset -= shift;
                                 return t;
                               },
                               [&](ImplicitQuarticFamily f) -> SolutionComponent {
                                 f.offset -= shift;
                                 return f;
                               },
                               [&](ParabolicCurve pc) -> SolutionComponent {
                                 pc.offset -= shift;
                                 return pc;
                               },
                               [&](WholeSpace w) -> SolutionComponent { return w; }},
                    comp);
}

double component_distance(const SolutionComponent& comp, const SplitQuaternion& x) {
  return std::visit(overloaded{[&](const Point& p) { return distance(p.q, x); },
                               [&](const AffineLine& l) {
                                 const SplitQuaternion v = x - l.base;
                                 return euclid_norm(v - dot(v, l.dir) * l.dir);
                               },
                               [&](const AffinePlane& p) { return plane_distance(p, x); },
                               [&](const TiltedPlanePair& t) {
                                 const auto planes = tilted_planes(t);
                                 return std::min(plane_distance(planes[0], x), plane_distance(planes[1], x));
                               },
                               [&](const WholeSpace&) { return 0.0; },
                               [&](const auto&) { return search_distance(comp, x); }},
                    comp);
}

double residual(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                const SplitQuaternion& x) {
  return euclid_norm(a * (x * x) + b * x + c);
}

double relative_residual(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                         const SplitQuaternion& x) {
  const double nx = euclid_norm(x);
  return residual(a, b, c, x) / (1.0 + euclid_norm(a) * nx * nx + euclid_norm(b) * nx + euclid_norm(c));
}

std::vector<SolutionComponent> CertifiedSolutionSet::retained() const {
  std::vector<SolutionComponent> out;
  for (std::size_t n = 0; n < components.size(); ++n)
    if (!report[n].dropped) out.push_back(components[n]);
  return out;
}

bool CertifiedSolutionSet::empty() const {
  for (const auto& r : report)
    if (!r.dropped) return false;
  return true;
}

std::vector<double> coefficient_vector(const SolutionComponent& comp) {
  auto push = [](std::vector<double>& v, const SplitQuaternion& q) {
    for (double x : q.coords()) v.push_back(x);
  };
  return std::visit(overloaded{[&](const Point& p) {
                                 std::vector<double> v;
                                 push(v, p.q);
                                 return v;
                               },
                               [&](const AffineLine& l) {
                                 std::vector<double> v;
                                 push(v, l.base);
                                 push(v, l.dir);
                                 return v;
                               },
                               [&](const AffinePlane& p) {
                                 std::vector<double> v;
                                 push(v, p.base);
                                 push(v, p.dir1);
                                 push(v, p.dir2);
                                 return v;
                               },
                               [&](const QuadricFamily& q) { return std::vector<double>{q.x0, q.level}; },
                               [&](const TiltedPlanePair& t) {
                                 return std::vector<double>{t.c0, t.a2, t.a3, t.offset};
                               },
                               [&](const ImplicitQuarticFamily& f) {
                                 return std::vector<double>{static_cast<double>(f.tag), f.a2, f.a3, f.b1,
                                                            f.c0,                      f.c1, f.offset};
                               },
                               [&](const ParabolicCurve& pc) {
                                 return std::vector<double>{pc.p2, pc.p1, pc.p0, pc.q0,
                                                            pc.q1, pc.r0, pc.r1, pc.offset};
                               },
                               [&](const WholeSpace&) { return std::vector<double>{}; }},
                    comp);
}

void canonical_sort(std::vector<SolutionComponent>& comps) {
  std::stable_sort(comps.begin(), comps.end(), [](const SolutionComponent& x, const SolutionComponent& y) {
    if (x.index() != y.index()) return x.index() < y.index();
    return coefficient_vector(x) < coefficient_vector(y);
  });
}

namespace {

bool same_coefficients(const SolutionComponent& x, const SolutionComponent& y, double radius) {
  if (x.index() != y.index()) return false;
  const auto u = coefficient_vector(x);
  const auto v = coefficient_vector(y);
  for (std::size_t n = 0; n < u.size(); ++n)
    if (std::fabs(u[n] - v[n]) > radius * (1.0 + std::fabs(u[n]))) return false;
  return true;
}

// Probe points that pin down a linear family.
std::vector<SplitQuaternion> probes(const SolutionComponent& c) {
  if (const auto* l = std::get_if<AffineLine>(&c)) return {l->base, l->base + l->dir, l->base - l->dir};
  if (const auto* p = std::get_if<AffinePlane>(&c))
    return {p->base, p->base + p->dir1, p->base + p->dir2, p->base - p->dir1 - p->dir2};
  return {};
}

bool contains(const SolutionComponent& outer, const SolutionComponent& inner, double radius) {
  if (std::holds_alternative<WholeSpace>(outer)) return true;
  if (same_coefficients(outer, inner, radius)) return true;
  const auto pts = probes(inner);
  if (pts.empty()) return false;
  // A plane cannot sit inside a curve.
  if (std::holds_alternative<AffinePlane>(inner) &&
      (std::holds_alternative<AffineLine>(outer) || std::holds_alternative<ParabolicCurve>(outer)))
    return false;
  for (const auto& q : pts)
    if (component_distance(outer, q) > radius * (1.0 + euclid_norm(q))) return false;
  return true;
}

}  // namespace

std::vector<SolutionComponent> dedupe(std::vector<SolutionComponent> comps, double radius) {
  std::vector<SolutionComponent> families;
  std::vector<SplitQuaternion> points;
  for (auto& c : comps) {
    if (const auto* p = std::get_if<Point>(&c)) {
      points.push_back(p->q);
      continue;
    }
    bool covered = false;
    for (const auto& k : families)
      if (contains(k, c, radius)) {
        covered = true;
        break;
      }
    if (covered) continue;
    std::erase_if(families, [&](const SolutionComponent& k) { return contains(c, k, radius); });
    families.push_back(std::move(c));
  }
  std::vector<SolutionComponent> out = families;
  std::vector<SplitQuaternion> kept;
  for (const auto& p : points) {
    const double r = radius * (1.0 + euclid_norm(p));
    bool dup = false;
    for (const auto& k : kept)
      if (distance(k, p) <= r) {
        dup = true;
        break;
      }
    for (std::size_t n = 0; !dup && n < families.size(); ++n)
      if (component_distance(families[n], p) <= r) dup = true;
    if (!dup) kept.push_back(p);
  }
  for (const auto& p : kept) out.push_back(Point{p});
  canonical_sort(out);
  return out;
}

std::vector<std::vector<double>> sample_parameters(const SolutionComponent& comp, const CertifyConfig& cfg) {
  Rng rng(cfg.seed);
  const int ng = std::max(cfg.grid, 0);
  const int nr = std::max(cfg.random, 0);
  std::vector<std::vector<double>> out;

  // Unit grid coordinates in [−1, 1]: ng values for one parameter, a
  // ⌈√ng⌉-square grid for two.
  auto grid1 = [&](int k) { return ng <= 1 ? 0.0 : -1.0 + 2.0 * k / (ng - 1); };
  const int side = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(ng)))));
  auto grid2 = [&](int k, int axis) {
    const int idx = axis == 0 ? k % side : k / side;
    return side <= 1 ? 0.0 : -1.0 + 2.0 * idx / (side - 1);
  };

  auto one_sided = [&](double center, double gap, double spread) {
    // Two rays center ± (gap + spread·u), u ∈ [0, 1].
    for (int k = 0; k < ng; ++k) {
      const double u = grid1(k);
      const double sgn = u < 0 ? -1.0 : 1.0;
      out.push_back({center + sgn * (gap + spread * std::fabs(u))});
    }
    for (int k = 0; k < nr; ++k) {
      const double u = rng.uniform(-1.0, 1.0);
      const double sgn = u < 0 ? -1.0 : 1.0;
      out.push_back({center + sgn * (gap + spread * std::fabs(u))});
    }
  };
  auto square = [&](double c0, double c1, double spread) {
    for (int k = 0; k < ng && k < side * side; ++k) out.push_back({c0 + spread * grid2(k, 0), c1 + spread * grid2(k, 1)});
    for (int k = 0; k < nr; ++k) out.push_back({c0 + spread * rng.uniform(-1, 1), c1 + spread * rng.uniform(-1, 1)});
  };
  auto line = [&](double spread) {
    for (int k = 0; k < ng; ++k) out.push_back({spread * grid1(k)});
    for (int k = 0; k < nr; ++k) out.push_back({spread * rng.uniform(-1, 1)});
  };

  std::visit(
      overloaded{
          [&](const Point&) { out.push_back({}); },
          [&](const AffineLine& l) { line(1.0 + euclid_norm(l.base)); },
          [&](const AffinePlane& p) { square(0.0, 0.0, 1.0 + euclid_norm(p.base)); },
          [&](const QuadricFamily& q) {
            // Polar chart outside the circle x2² + x3² = level.
            const double r0 = std::sqrt(std::max(q.level, 0.0));
            const double spread = 1.0 + std::fabs(q.x0) + r0;
            for (int k = 0; k < ng; ++k) {
              const double rho = r0 + spread * (k % 4) / 3.0;
              const double phi = 2.0 * std::numbers::pi * ((k / 4) + 0.125) / std::max(1, (ng + 3) / 4);
              out.push_back({rho * std::cos(phi), rho * std::sin(phi)});
            }
            for (int k = 0; k < nr; ++k) {
              const double rho = r0 + spread * rng.uniform();
              const double phi = 2.0 * std::numbers::pi * rng.uniform();
              out.push_back({rho * std::cos(phi), rho * std::sin(phi)});
            }
          },
          [&](const TiltedPlanePair& t) { square(0.0, 0.0, 1.0 + std::fabs(t.offset) + std::sqrt(std::fabs(t.c0))); },
          [&](const ImplicitQuarticFamily& f) {
            const double scale = 1.0 + std::fabs(f.offset) + std::fabs(f.b1) + std::fabs(f.c0) + std::fabs(f.c1);
            switch (f.tag) {
              case ImplicitCase::TraceZeroA2Zero: {
                // Admissible iff (x1 + b1/2)² ≥ c1²/b1² + c0.
                const double kappa = f.c1 * f.c1 / (f.b1 * f.b1) + f.c0;
                one_sided(-f.b1 / 2.0, std::sqrt(std::max(kappa, 0.0)), scale);
                break;
              }
              case ImplicitCase::TraceZeroA2Nonzero: {
                const double b1 = f.b1, a2 = f.a2, a3 = f.a3, c0 = f.c0, c1 = f.c1;
                const double h = (2.0 * a3 * c1 + a2 * b1 * b1) / (2.0 * b1);
                const double k =
                    (4.0 * (a2 * a2 * b1 * b1 * c0 + a2 * b1 * b1 * a3 * c1 + c1 * c1) + b1 * b1 * b1 * b1 * a2 * a2) /
                    (4.0 * b1 * b1);
                one_sided(h, std::sqrt(std::max(h * h - k, 0.0)), scale);
                break;
              }
              default: square(0.0, 0.0, scale); break;
            }
          },
          [&](const ParabolicCurve& pc) { line(1.0 + std::fabs(pc.offset) + std::fabs(pc.p1) + std::fabs(pc.p0)); },
          [&](const WholeSpace&) {
            for (int k = 0; k < ng + nr; ++k)
              out.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
          }},
      comp);
  return out;
}

CertifiedSolutionSet certify(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                             const SolutionSet& set, const CertifyConfig& cfg) {
  CertifiedSolutionSet out;
  out.components = set.components;
  out.failed_conditions = set.failed_conditions;
  for (const auto& comp : set.components) {
    ComponentReport rep;
    for (const auto& params : sample_parameters(comp, cfg)) {
      std::vector<SplitQuaternion> pts;
      try {
        pts = instantiate(comp, params);
      } catch (const OutOfDomain&) {
        continue;
      }
      for (const auto& x : pts) {
        const double r = relative_residual(a, b, c, x);
        rep.max_residual = std::max(rep.max_residual, std::isfinite(r) ? r : std::numeric_limits<double>::infinity());
        ++rep.samples;
      }
    }
    if (rep.samples == 0) {
      rep.dropped = true;
      rep.failed_condition = "no_sample";
    } else if (!(rep.max_residual <= cfg.tol)) {
      rep.dropped = true;
      rep.failed_condition = "residual";
    }
    out.report.push_back(rep);
  }
  return out;
}

CertifiedSolutionSet certify(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                             const CertifiedSolutionSet& set, const CertifyConfig& cfg) {
  return certify(a, b, c, SolutionSet{set.components, set.failed_conditions}, cfg);
}

double membership_distance(std::span<const SolutionComponent> comps, const SplitQuaternion& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : comps) {
    best = std::min(best, component_distance(c, x));
    if (best == 0.0) break;
  }
  return best;
}

double membership_distance(const CertifiedSolutionSet& set, const SplitQuaternion& x) {
  const auto kept = set.retained();
  return membership_distance(kept, x);
}

}  // namespace splitquat
