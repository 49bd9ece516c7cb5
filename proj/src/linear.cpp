#include "splitquat/linear.hpp"

#include <algorithm>
#include <array>

namespace splitquat {

SolutionSet solve_linear(const SplitQuaternion& a, const SplitQuaternion& d, double eps) {
  return solve_linear(a, d, Tolerance::for_inputs({a, d}, eps));
}

SolutionSet solve_linear(const SplitQuaternion& a, const SplitQuaternion& d, const Tolerance& tol) {
  SolutionSet out;
  if (a == SplitQuaternion{}) {
    if (tol.zero(d, 0.0)) {
      out.components.push_back(WholeSpace{});
    } else {
      out.failed_conditions.push_back("d=0");
    }
    return out;
  }
  if (auto inv = inverse(a, tol.inverse_eps())) {
    out.components.push_back(Point{*inv * d});
    return out;
  }
  const SplitQuaternion ap = mp_inverse(a, tol.inverse_eps());
  const SplitQuaternion proj = a * ap * d;
  if (!tol.zero(proj - d, euclid_norm(d))) {
    out.failed_conditions.push_back("a*a^+*d=d");
    return out;
  }
  // Image of y ↦ (1 − a⁺a)·y is two-dimensional; keep the two longest images
  // of the basis vectors that are independent.
  const SplitQuaternion kernel = SplitQuaternion(1.0) - ap * a;
  std::array<SplitQuaternion, 4> img;
  const std::array<SplitQuaternion, 4> basis{SplitQuaternion(1.0), SplitQuaternion::i(), SplitQuaternion::j(),
                                             SplitQuaternion::k()};
  for (std::size_t n = 0; n < 4; ++n) img[n] = kernel * basis[n];
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return euclid_norm(img[x]) > euclid_norm(img[y]); });
  for (std::size_t n = 1; n < 4; ++n) {
    try {
      out.components.push_back(make_plane(ap * d, img[order[0]], img[order[n]], "y1", "y2"));
      return out;
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace splitquat
