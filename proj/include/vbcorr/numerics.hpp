#pragma once

#include <cmath>
#include <stdexcept>

namespace vbcorr {

struct RootResult {
  double root;
  int iterations;
};

/// Bisection for f(x) = 0 on [lo, hi]; f(lo) and f(hi) must differ in sign.
/// Stops when the bracket is narrower than `tol` or after `max_iter` halvings.
template <typename F>
RootResult bisect(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 60) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if ((flo < 0.0) == (fhi < 0.0)) throw std::invalid_argument("bisect: root not bracketed");
  int it = 0;
  while (it < max_iter && hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    ++it;
    if (fm == 0.0) return {mid, it};
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), it};
}

struct MaxResult {
  double arg;
  double value;
};

/// Golden-section search for the maximum of a unimodal f on [a, b].
template <typename F>
MaxResult golden_section_max(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && std::abs(b - a) > tol; ++i) {
    if (fc > fd) {
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
  return fc > fd ? MaxResult{c, fc} : MaxResult{d, fd};
}

}  // namespace vbcorr
