#pragma once

namespace omegabound {

/// Kahan-compensated running sum.
///
/// `compensation` carries the low-order bits lost by the last addition; both
/// members are plain data so a sum can be checkpointed and restored exactly.
/// Do not build this code with -ffast-math: reassociation removes the
/// compensation step.
struct KahanSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double term) noexcept {
    const double y = term - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  [[nodiscard]] double value() const noexcept { return sum; }

  friend bool operator==(const KahanSum&, const KahanSum&) = default;
};

}  // namespace omegabound
