#pragma once

#include <cmath>
#include <vector>

#include "splitquat/solset.hpp"
#include "support/oracles.hpp"

namespace check {

using namespace splitquat;

template <class T>
std::vector<T> all_of_kind(const std::vector<SolutionComponent>& comps) {
  std::vector<T> out;
  for (const auto& c : comps)
    if (const auto* p = std::get_if<T>(&c)) out.push_back(*p);
  return out;
}

inline std::vector<SolutionComponent> as_points(const std::vector<SplitQuaternion>& pts) {
  std::vector<SolutionComponent> out;
  for (const auto& q : pts) out.push_back(Point{q});
  return out;
}

inline bool has_point(const std::vector<SolutionComponent>& comps, const SplitQuaternion& q, double tol) {
  for (const auto& p : all_of_kind<Point>(comps))
    if (oracle::qdist(p.q, q) <= tol) return true;
  return false;
}

/// Some line of the set passes through both p and p + d.
inline bool has_line(const std::vector<SolutionComponent>& comps, const SplitQuaternion& p, const SplitQuaternion& d,
                     double tol) {
  for (const auto& l : all_of_kind<AffineLine>(comps))
    if (component_distance(l, p) <= tol && component_distance(l, p + d) <= tol) return true;
  return false;
}

/// Some plane of the set contains p, p + d1 and p + d2.
inline bool has_plane(const std::vector<SolutionComponent>& comps, const SplitQuaternion& p, const SplitQuaternion& d1,
                      const SplitQuaternion& d2, double tol) {
  for (const auto& l : all_of_kind<AffinePlane>(comps))
    if (component_distance(l, p) <= tol && component_distance(l, p + d1) <= tol &&
        component_distance(l, p + d2) <= tol)
      return true;
  return false;
}

inline bool has_failed(const std::vector<std::string>& names, const std::string& n) {
  for (const auto& s : names)
    if (s == n) return true;
  return false;
}

}  // namespace check
