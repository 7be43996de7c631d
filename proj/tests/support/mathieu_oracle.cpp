#include "mathieu_oracle.hpp"

#include <cmath>

namespace oracle {

namespace {

// One RK4 step of the first-order system (x, v) for the Mathieu equation.
void rk4_step(double omega, double a, double q, double t, double h, double& x,
              double& v) {
  auto accel = [&](double time, double pos) {
    return -(omega * omega / 4.0) * (a - 2.0 * q * std::cos(omega * time)) *
           pos;
  };
  const double k1x = v;
  const double k1v = accel(t, x);
  const double k2x = v + 0.5 * h * k1v;
  const double k2v = accel(t + 0.5 * h, x + 0.5 * h * k1x);
  const double k3x = v + 0.5 * h * k2v;
  const double k3v = accel(t + 0.5 * h, x + 0.5 * h * k2x);
  const double k4x = v + h * k3v;
  const double k4v = accel(t + h, x + h * k3x);
  x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
  v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

void propagate(double omega, double a, double q, int steps, double& x,
               double& v) {
  const double period = 2.0 * M_PI / omega;
  const double h = period / steps;
  for (int i = 0; i < steps; ++i)
    rk4_step(omega, a, q, i * h, h, x, v);
}

}  // namespace

FloquetResult mathieu_floquet(double omega, double a, double q,
                              int steps_per_period) {
  // Columns of the monodromy matrix from the two canonical initial
  // conditions; for velocities, scale by the period to keep the matrix
  // well conditioned (the trace is scale-invariant in this normalization).
  const double period = 2.0 * M_PI / omega;
  double x1 = 1, v1 = 0;
  double x2 = 0, v2 = 1.0 / period;
  propagate(omega, a, q, steps_per_period, x1, v1);
  propagate(omega, a, q, steps_per_period, x2, v2);

  FloquetResult out;
  out.trace = x1 + v2 * period;
  out.stable = std::abs(out.trace) < 2.0;
  if (out.stable)
    out.secular = std::acos(out.trace / 2.0) / period;
  return out;
}

double stability_edge(double omega, double a, double q_stable,
                      double q_unstable, int iterations) {
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (q_stable + q_unstable);
    if (mathieu_floquet(omega, a, mid).stable)
      q_stable = mid;
    else
      q_unstable = mid;
  }
  return 0.5 * (q_stable + q_unstable);
}

}  // namespace oracle
