#pragma once

// Adaptive Gauss-Legendre quadrature for small vector-valued integrands.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qedccr/errors.hpp"

namespace qedccr {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

//! n-point rule, nodes found by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(std::size_t n);

struct AdaptiveOptions {
  std::size_t points = 16;   // nodes per panel
  double rel_tol = 1e-8;     // relative to the largest component of the integral
  std::size_t max_depth = 40;
};

template <std::size_t N>
struct AdaptiveResult {
  std::array<double, N> value{};
  std::size_t panels = 0;
};

namespace detail {

template <std::size_t N, class F>
std::array<double, N> apply_rule(F& f, GaussLegendreRule const& rule, double lo, double hi) {
  std::array<double, N> acc{};
  double const half = 0.5 * (hi - lo);
  double const mid = 0.5 * (hi + lo);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    std::array<double, N> const v = f(mid + half * rule.nodes[i]);
    for (std::size_t k = 0; k < N; ++k) acc[k] += rule.weights[i] * v[k];
  }
  for (auto& a : acc) a *= half;
  return acc;
}

template <std::size_t N>
double max_abs_diff(std::array<double, N> const& x, std::array<double, N> const& y) {
  double m = 0.0;
  for (std::size_t k = 0; k < N; ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

template <std::size_t N>
double max_abs(std::array<double, N> const& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace detail

//! Integrates every component of f over [lo, hi]. A panel is accepted once
//! its estimate agrees with the sum over its two halves to within its share
//! of rel_tol·max_k |I_k|.
//! \throws QuadratureError if a panel needs more than max_depth bisections.
template <std::size_t N, class F>
AdaptiveResult<N> integrate_adaptive(F&& f, double lo, double hi,
                                     AdaptiveOptions const& opts = {}) {
  auto const rule = gauss_legendre(opts.points);
  AdaptiveResult<N> result;

  struct Panel {
    double lo, hi;
    std::array<double, N> estimate;
    std::size_t depth;
  };
  auto const whole = detail::apply_rule<N>(f, rule, lo, hi);
  double const scale = std::max(detail::max_abs(whole), 1e-300);
  double const width = hi - lo;

  // Depth-first with an explicit stack, left panel first, so the summation
  // order is fixed.
  std::vector<Panel> stack{{lo, hi, whole, 0}};
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double const mid = 0.5 * (p.lo + p.hi);
    auto const left = detail::apply_rule<N>(f, rule, p.lo, mid);
    auto const right = detail::apply_rule<N>(f, rule, mid, p.hi);
    std::array<double, N> fine{};
    for (std::size_t k = 0; k < N; ++k) fine[k] = left[k] + right[k];

    double const allowed = opts.rel_tol * scale * (p.hi - p.lo) / width;
    if (detail::max_abs_diff(fine, p.estimate) <= allowed) {
      for (std::size_t k = 0; k < N; ++k) result.value[k] += fine[k];
      result.panels += 2;
      continue;
    }
    if (p.depth + 1 > opts.max_depth) {
      throw QuadratureError("adaptive quadrature did not converge on [" +
                            std::to_string(p.lo) + ", " + std::to_string(p.hi) + "]");
    }
    stack.push_back({mid, p.hi, right, p.depth + 1});
    stack.push_back({p.lo, mid, left, p.depth + 1});
  }
  return result;
}

}  // namespace qedccr
