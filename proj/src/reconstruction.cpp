#include "fvlim/reconstruction.hpp"

namespace fvlim {

InterfaceStates reconstruct(const CellField& field, const LimiterSpec& spec) {
  spec.validate();
  const int n = field.size();
  const double dx = field.grid().dx();
  InterfaceStates out;
  out.left.resize(static_cast<size_t>(n));
  out.right.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double u = field[i];
    const SlopePair s{u - field.value(i - 1), field.value(i + 1) - u};
    out.left[static_cast<size_t>(i)] = u + 0.5 * apply_limiter(spec, s, dx);
    out.right[static_cast<size_t>(i)] = u - 0.5 * apply_limiter(spec, {s.plus, s.minus}, dx);
  }
  return out;
}

}  // namespace fvlim
