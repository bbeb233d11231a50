#pragma once

#include <vector>

#include "fvlim/grid.hpp"
#include "fvlim/limiters.hpp"

namespace fvlim {

/// Reconstructed interface values for every cell.
/// left[i]  = u^- at x_{i+1/2}, reconstructed from within cell i;
/// right[i] = u^+ at x_{i-1/2}, reconstructed from within cell i.
struct InterfaceStates {
  std::vector<double> left;
  std::vector<double> right;
};

/// u^-_{i+1/2} = ubar_i + 1/2 phi~(delta_-, delta_+)
/// u^+_{i-1/2} = ubar_i - 1/2 phi~(delta_+, delta_-)
/// with periodic slopes; the right face swaps the slope arguments instead of
/// forming 1/theta, so a vanishing delta_- needs no special case.
InterfaceStates reconstruct(const CellField& field, const LimiterSpec& spec);

}  // namespace fvlim
