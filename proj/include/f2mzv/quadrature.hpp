#pragma once

#include "f2mzv/index.hpp"

#include <functional>

namespace f2mzv {

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
double integrate(const std::function<double(double)> &f, double a, double b,
                 double tol, int max_depth = 40);

/// Direct iterated-integral evaluation of an admissible index over the
/// ordered simplex (independent oracle; pullback x = t, y = sqrt(1-t^2)).
/// Restricted to depth <= 2 and weight <= 4; target accuracy 1e-8.
double quad_oracle(const F2Index &idx);

} // namespace f2mzv
