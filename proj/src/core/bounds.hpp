#pragma once

#include <gmpxx.h>

#include <string>

#include "core/error.hpp"

namespace ltc {

// Clustering model for graphs of bounded treewidth and degree, used by the
// bound cascade. Linear: C*(w+1)*delta. Constant: a fixed value.
struct FModel {
  enum class Kind { Linear, Constant };
  Kind kind = Kind::Linear;
  long long value = 1;  // C for Linear, the constant for Constant

  mpz_class eval(const mpz_class& w, const mpz_class& delta) const {
    if (value <= 0) fail(Status::Usage, "f-model constant must be positive");
    if (kind == Kind::Constant) return mpz_class(value);
    return mpz_class(value) * (w + 1) * delta;
  }

  static FModel linear(long long c) { return {Kind::Linear, c}; }
  static FModel constant(long long c) { return {Kind::Constant, c}; }
};

// Default linear-model constant, calibrated on the generated family suite so
// the model dominates every measured phase clustering there. Overridable via
// the LTC_F_MODEL_C environment variable.
long long default_f_model_c();

// The three-phase parameter cascade. Values grow like w^19 * delta^37, hence
// arbitrary-precision integers.
struct BoundsCascade {
  mpz_class f1, delta2, w2, f2, delta3, w3, f3, g;
};

// Evaluates the cascade exactly:
//   f1 = f(w,delta)            delta2 = delta + f1*delta^2
//   w2 = w + 2(w+1)f1^2 delta^2    f2 = f(w2,delta2)
//   delta3 = delta + f2*delta^2    w3 = w + 4(w2+1)f2^2 delta^2
//   f3 = f(w3,delta3)              g = (1 + f2*delta) * f3
BoundsCascade compute_bounds(int w, int delta, const FModel& f);

// Same cascade with the f-values pinned to measured clusterings (floored at 1).
BoundsCascade measured_bounds(int w, int delta, int f1, int f2, int f3);

}  // namespace ltc
