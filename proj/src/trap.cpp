#include "paratrap/trap.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <unsupported/Eigen/FFT>

#include "paratrap/constants.hpp"

namespace paratrap::trap {

using Eigen::Vector3d;
using constants::two_pi;

void TrapFieldModel::validate() const {
  if (mass <= 0 || charge == 0)
    throw TrapError("TrapFieldModel: mass and charge must be set");
  const double sum =
      rf_curvature[0] + rf_curvature[1] + rf_curvature[2];
  const double scale = std::max({std::abs(rf_curvature[0]),
                                 std::abs(rf_curvature[1]),
                                 std::abs(rf_curvature[2]), 1.0});
  if (std::abs(sum) > 1e-9 * scale)
    throw TrapError("TrapFieldModel: oscillating quadrupole violates Laplace");
}

Vector3d TrapFieldModel::field(const Vector3d& r, double t) const {
  const double rf = omega_trap > 0 ? std::cos(omega_trap * t) : 0.0;
  Vector3d e;
  for (int i = 0; i < 3; ++i)
    e(i) = -2.0 * (rf_curvature[i] * rf + static_curvature[i]) * r(i);
  if (omega_drive > 0) {
    const double dr = std::cos(omega_drive * t);
    e(1) -= dr * (drive_dipole + 2.0 * drive_quadrupole * r(1));
  }
  return e;
}

TrapFieldModel TrapFieldModel::from_mathieu(double mass, double charge,
                                            double omega, double a, double q,
                                            int axis) {
  TrapFieldModel m;
  m.mass = mass;
  m.charge = charge;
  m.omega_trap = omega;
  const double c = -mass * omega * omega * q / (4.0 * charge);
  const double s = mass * omega * omega * a / (8.0 * charge);
  m.rf_curvature[axis] = c;
  m.rf_curvature[(axis + 1) % 3] = -c / 2.0;
  m.rf_curvature[(axis + 2) % 3] = -c / 2.0;
  m.static_curvature[axis] = s;
  return m;
}

double TrapFieldModel::mathieu_q(int axis) const {
  return -4.0 * charge * rf_curvature[axis] / (mass * omega_trap * omega_trap);
}

double TrapFieldModel::mathieu_a(int axis) const {
  return 8.0 * charge * static_curvature[axis] /
         (mass * omega_trap * omega_trap);
}

TrajectoryRecord integrate_motion(const TrapFieldModel& model,
                                  const Vector3d& r0, const Vector3d& v0,
                                  double t_span, double step) {
  model.validate();
  if (step <= 0 || t_span <= 0)
    throw TrapError("integrate_motion: invalid span or step");
  const double f_max = std::max(model.omega_trap, model.omega_drive);
  if (f_max > 0 && step > two_pi / (100.0 * f_max))
    throw TrapError("integrate_motion: step too large for the drive tones");

  const double qm = model.charge / model.mass;
  auto accel = [&](const Vector3d& r, double t) {
    return (qm * model.field(r, t)).eval();
  };

  const int n_steps = static_cast<int>(std::ceil(t_span / step - 1e-9));
  const double h = t_span / n_steps;
  double envelope = r0.norm();
  if (envelope == 0 && f_max > 0) envelope = v0.norm() / f_max;
  if (envelope == 0) envelope = 1e-9;

  TrajectoryRecord traj;
  traj.times.reserve(n_steps + 1);
  traj.positions.reserve(n_steps + 1);
  traj.velocities.reserve(n_steps + 1);
  Vector3d r = r0, v = v0;
  traj.times.push_back(0);
  traj.positions.push_back(r);
  traj.velocities.push_back(v);
  for (int i = 0; i < n_steps; ++i) {
    const double t = i * h;
    const Vector3d k1r = v, k1v = accel(r, t);
    const Vector3d k2r = v + (h / 2) * k1v,
                   k2v = accel(r + (h / 2) * k1r, t + h / 2);
    const Vector3d k3r = v + (h / 2) * k2v,
                   k3v = accel(r + (h / 2) * k2r, t + h / 2);
    const Vector3d k4r = v + h * k3v, k4v = accel(r + h * k3r, t + h);
    r += (h / 6) * (k1r + 2 * k2r + 2 * k3r + k4r);
    v += (h / 6) * (k1v + 2 * k2v + 2 * k3v + k4v);
    traj.times.push_back((i + 1) * h);
    traj.positions.push_back(r);
    traj.velocities.push_back(v);
    if (r.norm() > 10.0 * envelope) {
      traj.escaped = true;
      break;
    }
  }
  return traj;
}

std::vector<SpectrumPeak> extract_spectrum(const TrajectoryRecord& traj,
                                           int axis,
                                           double relative_threshold) {
  const std::size_t n = traj.times.size();
  if (n < (1u << 14)) throw TrapError("extract_spectrum: too few samples");
  if (axis < 0 || axis > 2) throw TrapError("extract_spectrum: bad axis");
  const double dt = traj.times[1] - traj.times[0];

  std::vector<double> data(n);
  double window_sum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double w =
        0.5 * (1.0 - std::cos(two_pi * double(k) / double(n - 1)));
    data[k] = traj.positions[k](axis) * w;
    window_sum += w;
  }

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec;
  fft.fwd(spec, data);

  const std::size_t half = n / 2;
  std::vector<double> amp(half);
  for (std::size_t k = 0; k < half; ++k)
    amp[k] = 2.0 * std::abs(spec[k]) / window_sum;

  double max_amp = 0;
  for (std::size_t k = 2; k < half; ++k) max_amp = std::max(max_amp, amp[k]);

  std::vector<SpectrumPeak> peaks;
  const double dw = two_pi / (n * dt);
  for (std::size_t k = 2; k + 1 < half; ++k) {
    if (amp[k] < relative_threshold * max_amp) continue;
    if (!(amp[k] >= amp[k - 1] && amp[k] > amp[k + 1])) continue;
    // Parabolic refinement on the log magnitude.
    const double l0 = std::log(std::max(amp[k - 1], 1e-300));
    const double l1 = std::log(amp[k]);
    const double l2 = std::log(std::max(amp[k + 1], 1e-300));
    double delta = 0;
    const double denom = l0 - 2 * l1 + l2;
    if (std::abs(denom) > 1e-12) delta = 0.5 * (l0 - l2) / denom;
    delta = std::clamp(delta, -0.5, 0.5);
    SpectrumPeak p;
    p.frequency = (k + delta) * dw;
    p.amplitude = std::exp(l1 - 0.25 * (l0 - l2) * delta);
    peaks.push_back(p);
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const SpectrumPeak& a, const SpectrumPeak& b) {
              return a.frequency < b.frequency;
            });
  return peaks;
}

double drive_pseudopotential_ratio(double omega_drive, double omega_secular) {
  if (omega_secular <= 0)
    throw TrapError("drive_pseudopotential_ratio: omega must be > 0");
  const double r = omega_drive / omega_secular;
  return 0.25 * r * r;
}

double limiting_drive_frequency(double omega_secular, double ratio_budget) {
  if (omega_secular <= 0 || ratio_budget <= 0)
    throw TrapError("limiting_drive_frequency: inputs must be > 0");
  return 2.0 * omega_secular * std::sqrt(ratio_budget);
}

std::vector<StabilityPoint> stability_scan(
    double mass, double charge, double omega_trap,
    const std::vector<std::pair<double, double>>& aq_grid, int periods) {
  std::vector<StabilityPoint> out;
  out.reserve(aq_grid.size());
  for (const auto& [a, q] : aq_grid) {
    TrapFieldModel model =
        TrapFieldModel::from_mathieu(mass, charge, omega_trap, a, q);
    // Secular estimate from the lowest-order pseudopotential expansion,
    // floored so that deep-drive points still integrate a finite span.
    double w_sec =
        (omega_trap / 2.0) * std::sqrt(std::max(a, 0.0) + q * q / 2.0);
    w_sec = std::max(w_sec, omega_trap / 40.0);
    const double span = periods * two_pi / w_sec;
    const double h = two_pi / omega_trap / 120.0;
    const Vector3d r0(0, 1e-6, 0);
    TrajectoryRecord traj = integrate_motion(model, r0, Vector3d::Zero(),
                                             span, h);
    out.push_back({a, q, !traj.escaped});
  }
  return out;
}

}  // namespace paratrap::trap
