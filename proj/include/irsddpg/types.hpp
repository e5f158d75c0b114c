#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace irsddpg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Scenario dimensions and physical constants of the uplink system.
struct SystemConfig {
  int num_users = 10;      // K
  int tx_antennas = 2;     // N_t per user
  int streams = 2;         // N_s per user
  int rx_antennas = 30;    // N_r at the base station
  int irs_elements = 50;   // N
  double power_budget = 10.0;   // Omega, linear
  double noise_var = 1.0;       // sigma_n^2, linear
  double rician_beta_db = 3.0;  // LoS-to-scatter power ratio, dB

  double snr_db() const;
  void set_snr_db(double snr_db);

  /// Throws std::invalid_argument when any dimension or constant is out of range.
  void validate() const;
};

/// One realization of all user->IRS links plus the IRS->BS link.
struct ChannelSet {
  std::vector<CMatrix> user_irs;  // K matrices, each N x N_t
  CMatrix irs_bs;                 // N_r x N
};

/// Per-user transmit precoders, each power-limited by omega.
struct PrecoderSet {
  std::vector<CMatrix> p;  // K matrices, each N_t x N_s
  double omega = 0.0;
};

/// Diagonal of the IRS phase-shift matrix; every entry has unit modulus.
struct IrsPhaseVector {
  CVector theta;
};

struct ReceiveFilter {
  std::vector<CMatrix> w;  // K matrices, each N_r x N_s
};

struct RateReport {
  std::vector<double> per_user;  // bit/s/Hz, nonnegative
  double sum = 0.0;
};

}  // namespace irsddpg
