#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

namespace qdiscord {

struct ScalarMinimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of f on [lo, hi], stopping once the
/// bracket is narrower than tol. f should be unimodal on the bracket.
/// Returns the best interior point evaluated.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tol,
                                      std::size_t max_iterations = 200) {
  constexpr double inv_phi = 0.6180339887498948482;  // (sqrt 5 - 1) / 2
  if (hi < lo) std::swap(lo, hi);

  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  ScalarMinimum best = fc <= fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};

  for (std::size_t it = 0; it < max_iterations && (hi - lo) > tol; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
      if (fc < best.value || (fc == best.value && c < best.x)) best = {c, fc};
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
      if (fd < best.value || (fd == best.value && d < best.x)) best = {d, fd};
    }
  }
  return best;
}

}  // namespace qdiscord
