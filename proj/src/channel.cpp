#include "irsddpg/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsddpg {

namespace {

CMatrix rayleigh_matrix(int rows, int cols, Rng& rng) {
  CMatrix h(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      h(i, j) = rng.cgaussian();
    }
  }
  return h;
}

}  // namespace

CVector steering_vector(int n_elements, double angle) {
  if (n_elements < 1) {
    throw std::invalid_argument("steering vector needs at least one element");
  }
  CVector a(n_elements);
  const double phase_step = std::numbers::pi * std::sin(angle);
  for (int m = 0; m < n_elements; ++m) {
    a(m) = std::polar(1.0, phase_step * m);
  }
  return a;
}

std::vector<CMatrix> sample_user_channels(const SystemConfig& cfg, Rng& rng) {
  cfg.validate();
  std::vector<CMatrix> h;
  h.reserve(cfg.num_users);
  for (int k = 0; k < cfg.num_users; ++k) {
    h.push_back(rayleigh_matrix(cfg.irs_elements, cfg.tx_antennas, rng));
  }
  return h;
}

CMatrix sample_irs_bs_channel_linear(const SystemConfig& cfg,
                                     double beta_linear, Rng& rng) {
  cfg.validate();
  const double two_pi = 2.0 * std::numbers::pi;
  const double angle_rx = rng.uniform() * two_pi;
  const double angle_tx = rng.uniform() * two_pi;
  CVector a_rx = steering_vector(cfg.rx_antennas, angle_rx);
  CVector a_tx = steering_vector(cfg.irs_elements, angle_tx);
  CMatrix los = a_rx * a_tx.adjoint();
  CMatrix nlos = rayleigh_matrix(cfg.rx_antennas, cfg.irs_elements, rng);
  const double w_los = std::sqrt(beta_linear / (1.0 + beta_linear));
  const double w_nlos = std::sqrt(1.0 / (1.0 + beta_linear));
  return w_los * los + w_nlos * nlos;
}

CMatrix sample_irs_bs_channel(const SystemConfig& cfg, Rng& rng) {
  const double beta = std::pow(10.0, cfg.rician_beta_db / 10.0);
  return sample_irs_bs_channel_linear(cfg, beta, rng);
}

ChannelSet sample_channel_set(const SystemConfig& cfg, Rng& rng) {
  ChannelSet ch;
  ch.user_irs = sample_user_channels(cfg, rng);
  ch.irs_bs = sample_irs_bs_channel(cfg, rng);
  return ch;
}

}  // namespace irsddpg
