#pragma once

#include "hjmfdr/grid.hpp"

namespace hjmfdr {

// d/dx by second-order finite differences: central in the interior,
// one-sided three-point at both ends. Exact on affine curves.
ForwardCurve deriv(const ForwardCurve& h);

// Cumulative trapezoidal integral, (∫h)(0) = 0. Exact on affine curves.
ForwardCurve integral(const ForwardCurve& h);

// Right shift (S_t h)(x) = h(x+t) by linear interpolation on the padded
// grid. Consumes t of the curve's remaining pad; throws PadExhausted when
// the budget runs out. Shifts by whole grid steps are exact.
ForwardCurve shift(const ForwardCurve& h, double t);

// ||h||_w^2 = |h(0)|^2 + ∫ |h'(x)|^2 w(x) dx  (trapezoid over the grid).
double norm_w(const ForwardCurve& h, const WeightFunction& w = default_weight());

// The matching inner product <f,g>_w = f(0)g(0) + ∫ f' g' w dx.
double inner_w(const ForwardCurve& f, const ForwardCurve& g,
               const WeightFunction& w = default_weight());

}  // namespace hjmfdr
