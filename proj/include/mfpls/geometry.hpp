// SPDX-License-Identifier: Apache-2.0
//
// XL-array geometry and steering vectors for mixed near-/far-field links.
// Angle convention: theta is the spatial angle sin(phi) with phi the physical
// angle-of-departure measured from array broadside; theta lies in (-1, 1).
// Steering vectors are stored in their Hermitian (row) form, i.e. the entries
// written in the channel model; see hermitian_product() for how products with
// beamforming vectors are taken.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace mfpls {

using ChannelVector = Eigen::VectorXcd;

inline constexpr double kSpeedOfLight = 2.998e8;    // m/s
inline constexpr double kRayleighCoeff = 0.367;     // epsilon in Z(theta)
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Half-wavelength uniform linear array on the y-axis, centered at the origin.
struct ArrayConfig {
  int num_antennas = 256;
  double carrier_freq_hz = 30e9;

  double wavelength() const { return kSpeedOfLight / carrier_freq_hz; }
  double spacing() const { return wavelength() / 2.0; }
  double aperture() const { return (num_antennas - 1) * spacing(); }

  // Signed index offset of antenna n about the array center; symmetric and
  // summing to zero over n = 0..N-1.
  double antenna_offset(int n) const {
    return static_cast<double>(n) - (num_antennas - 1) / 2.0;
  }

  void validate() const {
    if (num_antennas < 1) throw std::invalid_argument("num_antennas must be >= 1");
    if (!(carrier_freq_hz > 0.0)) throw std::invalid_argument("carrier_freq_hz must be > 0");
  }
};

// User position in the array's polar coordinates.
struct PolarLocation {
  double theta = 0.0;   // spatial angle sin(phi), |theta| < 1
  double range = 1.0;   // meters, > 0

  static PolarLocation from_physical(double phi_rad, double range_m) {
    return PolarLocation{std::sin(phi_rad), range_m};
  }

  void validate() const {
    if (!(std::abs(theta) < 1.0)) throw std::invalid_argument("|theta| must be < 1");
    if (!(range > 0.0)) throw std::invalid_argument("range must be > 0");
  }
};

// Product x^H y for vectors stored in Hermitian-row form: both arguments hold
// the row entries, so the sum is sum_n x_n * conj(y_n).
inline std::complex<double> hermitian_product(const ChannelVector& x, const ChannelVector& y) {
  return (x.array() * y.array().conjugate()).sum();
}

// Far-field (planar-wavefront) steering vector, unit norm; entry n is
// exp(j*pi*n*theta)/sqrt(N).
inline ChannelVector far_steering(const ArrayConfig& cfg, double theta) {
  if (!(std::abs(theta) < 1.0)) throw std::invalid_argument("far_steering: |theta| must be < 1");
  const int n_ant = cfg.num_antennas;
  ChannelVector v(n_ant);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_ant));
  for (int n = 0; n < n_ant; ++n) {
    v(n) = std::polar(scale, kPi * n * theta);
  }
  return v;
}

// Exact distance from antenna n to a user at (theta, r).
inline double antenna_range(const ArrayConfig& cfg, const PolarLocation& loc, int n) {
  const double dd = cfg.antenna_offset(n) * cfg.spacing();
  return std::sqrt(loc.range * loc.range + dd * dd - 2.0 * loc.range * loc.theta * dd);
}

// Near-field (spherical-wavefront) steering vector, unit norm; entry n is
// exp(-j*2*pi*(r^(n) - r)/lambda)/sqrt(N) with r^(n) the exact antenna-user
// distance.
inline ChannelVector near_steering(const ArrayConfig& cfg, const PolarLocation& loc) {
  loc.validate();
  const int n_ant = cfg.num_antennas;
  ChannelVector v(n_ant);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_ant));
  const double two_pi_over_lambda = 2.0 * kPi / cfg.wavelength();
  for (int n = 0; n < n_ant; ++n) {
    const double excess = antenna_range(cfg, loc, n) - loc.range;
    v(n) = std::polar(scale, -two_pi_over_lambda * excess);
  }
  return v;
}

// Free-space line-of-sight gain: magnitude sqrt(beta)/r, phase -2*pi*r/lambda.
// beta_ref is the linear power gain at 1 m.
inline std::complex<double> los_gain(double beta_ref, double range_m, double wavelength_m) {
  if (!(range_m > 0.0)) throw std::invalid_argument("los_gain: range must be > 0");
  if (!(beta_ref > 0.0)) throw std::invalid_argument("los_gain: beta_ref must be > 0");
  return std::polar(std::sqrt(beta_ref) / range_m, -2.0 * kPi * range_m / wavelength_m);
}

// Effective Rayleigh distance Z(theta) = eps * 2 D^2 (1 - theta^2) / lambda:
// the range beyond which far-field array-gain modeling is accurate.
inline double effective_rayleigh(const ArrayConfig& cfg, double theta) {
  if (!(std::abs(theta) < 1.0)) throw std::invalid_argument("effective_rayleigh: |theta| must be < 1");
  const double d_ap = cfg.aperture();
  return kRayleighCoeff * 2.0 * d_ap * d_ap * (1.0 - theta * theta) / cfg.wavelength();
}

// Exact correlation between the near-field steering vector at `p` and the
// far-field steering vector at angle theta_q.
inline double correlation_exact(const ArrayConfig& cfg, const PolarLocation& p, double theta_q) {
  return std::abs(hermitian_product(near_steering(cfg, p), far_steering(cfg, theta_q)));
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
// dBm uses a 1 mW reference.
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

// Default reference channel gain (lambda / 4 pi)^2 at 1 m, about -62 dB at 30 GHz.
inline double default_beta_ref(const ArrayConfig& cfg) {
  const double b = cfg.wavelength() / (4.0 * kPi);
  return b * b;
}

}  // namespace mfpls
