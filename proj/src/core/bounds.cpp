#include "core/bounds.hpp"

#include <cstdlib>

namespace ltc {

long long default_f_model_c() {
  if (const char* env = std::getenv("LTC_F_MODEL_C")) {
    char* end = nullptr;
    long long c = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || c <= 0)
      fail(Status::Usage, std::string("LTC_F_MODEL_C must be a positive integer, got '") + env + "'");
    return c;
  }
  return 1;
}

BoundsCascade compute_bounds(int w, int delta, const FModel& f) {
  if (w < 1 || delta < 1) fail(Status::Usage, "compute_bounds: w and delta must be >= 1");
  BoundsCascade b;
  mpz_class W = w, D = delta;
  b.f1 = f.eval(W, D);
  b.delta2 = D + b.f1 * D * D;
  b.w2 = W + 2 * (W + 1) * b.f1 * b.f1 * D * D;
  b.f2 = f.eval(b.w2, b.delta2);
  b.delta3 = D + b.f2 * D * D;
  b.w3 = W + 4 * (b.w2 + 1) * b.f2 * b.f2 * D * D;
  b.f3 = f.eval(b.w3, b.delta3);
  b.g = (1 + b.f2 * D) * b.f3;
  return b;
}

BoundsCascade measured_bounds(int w, int delta, int f1, int f2, int f3) {
  if (w < 1 || delta < 1) fail(Status::Usage, "measured_bounds: w and delta must be >= 1");
  BoundsCascade b;
  mpz_class W = w, D = delta;
  b.f1 = std::max(f1, 1);
  b.delta2 = D + b.f1 * D * D;
  b.w2 = W + 2 * (W + 1) * b.f1 * b.f1 * D * D;
  b.f2 = std::max(f2, 1);
  b.delta3 = D + b.f2 * D * D;
  b.w3 = W + 4 * (b.w2 + 1) * b.f2 * b.f2 * D * D;
  b.f3 = std::max(f3, 1);
  b.g = (1 + b.f2 * D) * b.f3;
  return b;
}

}  // namespace ltc
