#pragma once

#include <vector>

#include "irsddpg/rng.hpp"
#include "irsddpg/types.hpp"

namespace irsddpg {

/// Uniform-linear-array steering vector with half-wavelength spacing:
/// entry m = exp(j*pi*m*sin(angle)), m = 0..n_elements-1.
CVector steering_vector(int n_elements, double angle);

/// K Rayleigh user->IRS channels: i.i.d. CN(0,1) entries, each N x N_t.
std::vector<CMatrix> sample_user_channels(const SystemConfig& cfg, Rng& rng);

/// Rician IRS->BS channel (N_r x N). beta_linear mixes a rank-one LoS
/// steering-vector product with a Rayleigh scatter component.
CMatrix sample_irs_bs_channel_linear(const SystemConfig& cfg,
                                     double beta_linear, Rng& rng);

/// Same, with the configured Rician factor converted from dB.
CMatrix sample_irs_bs_channel(const SystemConfig& cfg, Rng& rng);

/// One full realization of all links.
ChannelSet sample_channel_set(const SystemConfig& cfg, Rng& rng);

}  // namespace irsddpg
