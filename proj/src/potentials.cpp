#include "jostlab/potentials.hpp"

#include <cmath>
#include <string>

#include "jostlab/errors.hpp"

namespace jostlab {

ShellPotential ShellPotential::make(double a, double b, double V0) {
  if (!(a > 0.0)) throw PreconditionError("shell potential needs a > 0, got a = " + std::to_string(a));
  if (!(b > a)) throw PreconditionError("shell potential needs b > a");
  if (!std::isfinite(V0)) throw PreconditionError("shell potential needs a finite V0");
  return {a, b, V0};
}

BarrierPotential BarrierPotential::make(double a, double b, double V0) {
  if (!std::isfinite(a) || !(b > a)) throw PreconditionError("barrier potential needs a < b");
  if (!std::isfinite(V0)) throw PreconditionError("barrier potential needs a finite V0");
  return {a, b, V0};
}

}  // namespace jostlab
