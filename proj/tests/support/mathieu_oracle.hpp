#pragma once

namespace oracle {

// Monodromy analysis of x'' + (W^2/4)(a - 2 q cos(W t)) x = 0 over one
// drive period, independent of the library's force-field integrator.
struct FloquetResult {
  double trace = 0;      // tr M of the one-period monodromy matrix
  bool stable = false;   // |tr M| < 2
  double secular = 0;    // rad/s, principal branch (valid below W/2)
};

FloquetResult mathieu_floquet(double omega, double a, double q,
                              int steps_per_period = 4000);

// Bisection on q at fixed a for the |tr M| = 2 boundary.
double stability_edge(double omega, double a, double q_stable,
                      double q_unstable, int iterations = 40);

}  // namespace oracle
