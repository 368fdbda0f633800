// Copyright 2026 The qcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <utility>

namespace qcomp {

inline constexpr double kArgTolerance = 1e-8;

struct Peak {
  double x;
  double value;
};

struct Peak2D {
  double x;
  double y;
  double value;
};

/// Golden-section search for the maximum of a function unimodal on [lo, hi].
template <typename F>
Peak golden_max(F&& f, double lo, double hi, double tol = kArgTolerance) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  // The midpoint can lose to an interior probe by rounding; keep the best.
  if (fc > fx && fc >= fd) return {c, fc};
  if (fd > fx) return {d, fd};
  return {x, fx};
}

/// Maximizes f near x0 with a sliding window of half-width `width`: the
/// window is recentred until the optimum lands strictly inside it.
template <typename F>
Peak refine_max(F&& f, double x0, double width) {
  Peak best{x0, f(x0)};
  double centre = x0;
  for (int iter = 0; iter < 64; ++iter) {
    const Peak p = golden_max(f, centre - width, centre + width);
    if (p.value > best.value) best = p;
    if (std::abs(p.x - centre) < 0.9 * width) break;
    centre = p.x;
  }
  return best;
}

/// Two-dimensional variant: nested golden sections (inner over x, outer over
/// y) inside a window recentred until the optimum is interior.
template <typename F>
Peak2D refine_max_2d(F&& f, double x0, double y0, double wx, double wy) {
  Peak2D best{x0, y0, f(x0, y0)};
  double cx = x0;
  double cy = y0;
  for (int iter = 0; iter < 64; ++iter) {
    auto inner = [&](double y) {
      return golden_max([&](double x) { return f(x, y); }, cx - wx, cx + wx);
    };
    const Peak outer = golden_max([&](double y) { return inner(y).value; }, cy - wy, cy + wy);
    const Peak at = inner(outer.x);
    if (at.value > best.value) best = {at.x, outer.x, at.value};
    const bool interior = std::abs(at.x - cx) < 0.9 * wx && std::abs(outer.x - cy) < 0.9 * wy;
    if (interior) break;
    cx = at.x;
    cy = outer.x;
  }
  return best;
}

}  // namespace qcomp
