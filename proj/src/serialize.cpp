#include "splitquat/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <limits>

namespace splitquat {

namespace {

using nlohmann::json;

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string str(const std::string& s) { return json(s).dump(); }

std::string quat(const SplitQuaternion& q) {
  return "[" + num(q.s0) + "," + num(q.s1) + "," + num(q.s2) + "," + num(q.s3) + "]";
}

std::string names(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t n = 0; n < v.size(); ++n) out += (n ? "," : "") + str(v[n]);
  return out + "]";
}

struct Writer {
  std::string out = "{";
  bool first = true;
  Writer& field(const char* key, const std::string& raw) {
    out += (first ? "\"" : ",\"") + std::string(key) + "\":" + raw;
    first = false;
    return *this;
  }
  std::string done() { return out + "}"; }
};

double get_num(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  if (!j.is_number()) throw FormatError("expected a number");
  return j.get<double>();
}

SplitQuaternion get_quat(const json& j) {
  if (!j.is_array() || j.size() != 4) throw FormatError("expected an array of four numbers");
  return {get_num(j[0]), get_num(j[1]), get_num(j[2]), get_num(j[3])};
}

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

SolutionComponent parse_component(const json& j) {
  const std::string kind = at(j, "kind").get<std::string>();
  if (kind == "point") return Point{get_quat(at(j, "q"))};
  if (kind == "affine_line")
    return AffineLine{get_quat(at(j, "base")), get_quat(at(j, "dir")), at(j, "params").at(0).get<std::string>()};
  if (kind == "affine_plane") {
    const json& p = at(j, "params");
    return AffinePlane{get_quat(at(j, "base")), get_quat(at(j, "dir1")), get_quat(at(j, "dir2")),
                       p.at(0).get<std::string>(), p.at(1).get<std::string>()};
  }
  if (kind == "quadric") return QuadricFamily{get_num(at(j, "x0")), get_num(at(j, "level"))};
  if (kind == "tilted_plane_pair") {
    const json& k = at(j, "coeffs");
    return TiltedPlanePair{get_num(at(k, "c0")), get_num(at(k, "a2")), get_num(at(k, "a3")),
                           get_num(at(j, "offset"))};
  }
  if (kind == "implicit_quartic") {
    const auto tag = parse_case_name(at(j, "case").get<std::string>());
    if (!tag) throw FormatError("unknown implicit family case");
    const json& k = at(j, "coeffs");
    return ImplicitQuarticFamily{*tag,
                                 get_num(at(k, "a2")),
                                 get_num(at(k, "a3")),
                                 get_num(at(k, "b1")),
                                 get_num(at(k, "c0")),
                                 get_num(at(k, "c1")),
                                 get_num(at(j, "offset"))};
  }
  if (kind == "parabolic_curve") {
    const json& k = at(j, "coeffs");
    return ParabolicCurve{get_num(at(k, "p2")), get_num(at(k, "p1")), get_num(at(k, "p0")),
                          get_num(at(k, "q0")), get_num(at(k, "q1")), get_num(at(k, "r0")),
                          get_num(at(k, "r1")), get_num(at(j, "offset"))};
  }
  if (kind == "whole_space") return WholeSpace{};
  throw FormatError("unknown component kind \"" + kind + "\"");
}

}  // namespace

std::string to_json(const SolutionComponent& comp) {
  Writer w;
  w.field("kind", str(kind_name(comp)));
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Point>) {
          w.field("q", quat(c.q));
        } else if constexpr (std::is_same_v<T, AffineLine>) {
          w.field("base", quat(c.base)).field("dir", quat(c.dir));
        } else if constexpr (std::is_same_v<T, AffinePlane>) {
          w.field("base", quat(c.base)).field("dir1", quat(c.dir1)).field("dir2", quat(c.dir2));
        } else if constexpr (std::is_same_v<T, QuadricFamily>) {
          w.field("x0", num(c.x0)).field("level", num(c.level));
        } else if constexpr (std::is_same_v<T, TiltedPlanePair>) {
          w.field("coeffs", Writer{}.field("c0", num(c.c0)).field("a2", num(c.a2)).field("a3", num(c.a3)).done());
          w.field("offset", num(c.offset));
        } else if constexpr (std::is_same_v<T, ImplicitQuarticFamily>) {
          w.field("case", str(case_name(c.tag)));
          w.field("coeffs", Writer{}
                                .field("a2", num(c.a2))
                                .field("a3", num(c.a3))
                                .field("b1", num(c.b1))
                                .field("c0", num(c.c0))
                                .field("c1", num(c.c1))
                                .done());
          w.field("offset", num(c.offset));
        } else if constexpr (std::is_same_v<T, ParabolicCurve>) {
          w.field("coeffs", Writer{}
                                .field("p2", num(c.p2))
                                .field("p1", num(c.p1))
                                .field("p0", num(c.p0))
                                .field("q0", num(c.q0))
                                .field("q1", num(c.q1))
                                .field("r0", num(c.r0))
                                .field("r1", num(c.r1))
                                .done());
          w.field("offset", num(c.offset));
        }
      },
      comp);
  if (!std::holds_alternative<Point>(comp) && !std::holds_alternative<WholeSpace>(comp))
    w.field("params", names(parameter_names(comp)));
  return w.done();
}

std::string to_json(const CertifiedSolutionSet& set) {
  std::string comps = "[", report = "[", failed = "[";
  for (std::size_t n = 0; n < set.components.size(); ++n) comps += (n ? "," : "") + to_json(set.components[n]);
  for (std::size_t n = 0; n < set.report.size(); ++n) {
    const auto& r = set.report[n];
    report += (n ? "," : "") + Writer{}
                                   .field("max_residual", num(r.max_residual))
                                   .field("samples", std::to_string(r.samples))
                                   .field("dropped", r.dropped ? "true" : "false")
                                   .field("failed_condition", r.failed_condition ? str(*r.failed_condition) : "null")
                                   .done();
  }
  for (std::size_t n = 0; n < set.failed_conditions.size(); ++n)
    failed += (n ? "," : "") + str(set.failed_conditions[n]);
  return Writer{}.field("components", comps + "]").field("report", report + "]").field("failed_conditions", failed + "]").done();
}

std::string to_json(const SqrtResult& r) {
  std::string pts = "[";
  for (std::size_t n = 0; n < r.points.size(); ++n) pts += (n ? "," : "") + quat(r.points[n]);
  return Writer{}
      .field("points", pts + "]")
      .field("quadric", r.quadric ? to_json(SolutionComponent{*r.quadric}) : "null")
      .done();
}

CertifiedSolutionSet parse_solution_set(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  CertifiedSolutionSet out;
  try {
    for (const auto& c : at(j, "components")) out.components.push_back(parse_component(c));
    for (const auto& r : at(j, "report")) {
      ComponentReport rep;
      rep.max_residual = get_num(at(r, "max_residual"));
      rep.samples = at(r, "samples").get<int>();
      rep.dropped = at(r, "dropped").get<bool>();
      const json& f = at(r, "failed_condition");
      if (!f.is_null()) rep.failed_condition = f.get<std::string>();
      out.report.push_back(rep);
    }
    if (j.contains("failed_conditions"))
      for (const auto& f : j.at("failed_conditions")) out.failed_conditions.push_back(f.get<std::string>());
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  return out;
}

EquationCoefficients parse_equation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  if (!j.is_object()) throw FormatError("expected an object with keys a, b, c");
  EquationCoefficients eq;
  for (auto [key, dst] : {std::pair{"a", &eq.a}, std::pair{"b", &eq.b}, std::pair{"c", &eq.c}}) {
    if (!j.contains(key)) continue;
    *dst = get_quat(j.at(key));
    if (!dst->is_finite()) throw FormatError(std::string("coefficient ") + key + " is not finite");
  }
  return eq;
}

}  // namespace splitquat
