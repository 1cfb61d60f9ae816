#pragma once

#include "hllab/series.hpp"

namespace hllab {

/// Which coefficient action realizes the fractional calculus:
/// gamma uses the ratio Gamma(n+beta+1)/n!, power uses (n+1)^beta.
enum class FracFlavor { gamma, power };

enum class FracDirection { derivative, integral };

struct FracOrder {
  double beta = 0.0;
  FracFlavor flavor = FracFlavor::gamma;
};

/// Fractional derivative/integral of order beta on coefficients.
/// beta = 0 is the identity; negative beta swaps the direction.
/// gamma flavor: derivative multiplies a_n by Gamma(n+beta+1)/n!,
/// integral by its reciprocal. power flavor uses (n+1)^{+-beta}.
CoefficientSeries frac_apply(const CoefficientSeries& f, FracOrder order,
                             FracDirection direction);

}  // namespace hllab
