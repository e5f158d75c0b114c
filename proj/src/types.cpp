#include "irsddpg/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irsddpg {

double SystemConfig::snr_db() const {
  return 10.0 * std::log10(power_budget / noise_var);
}

void SystemConfig::set_snr_db(double snr_db) {
  power_budget = std::pow(10.0, snr_db / 10.0) * noise_var;
}

void SystemConfig::validate() const {
  auto dim = [](const char* name, int v) {
    if (v < 1) {
      throw std::invalid_argument(std::string(name) + " must be >= 1, got " +
                                  std::to_string(v));
    }
  };
  dim("K", num_users);
  dim("Nt", tx_antennas);
  dim("Ns", streams);
  dim("Nr", rx_antennas);
  dim("N", irs_elements);
  if (!(power_budget > 0.0)) {
    throw std::invalid_argument("power budget must be > 0");
  }
  if (!(noise_var > 0.0)) {
    throw std::invalid_argument("noise variance must be > 0");
  }
  if (!std::isfinite(rician_beta_db)) {
    throw std::invalid_argument("Rician factor must be finite");
  }
  // N_s beyond min(N_t, N_r) makes the per-user interference-plus-noise
  // matrix singular even with positive noise, so rule it out up front.
  if (streams > tx_antennas || streams > rx_antennas) {
    throw std::invalid_argument("Ns must not exceed min(Nt, Nr)");
  }
}

}  // namespace irsddpg
