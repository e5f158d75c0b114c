#pragma once

#include "irsddpg/types.hpp"

namespace irsddpg {

/// Effective user->BS channel through the IRS: G_k = H_IB * diag(theta) * H_UI_k.
CMatrix effective_channel(const ChannelSet& ch, const IrsPhaseVector& irs,
                          int k);

/// Per-user MMSE receive filter, returned as W_k^H (N_s x N_r):
///   W_k^H = P_k^H G_k^H (sum_i G_i P_i P_i^H G_i^H + noise_var I)^(-1).
CMatrix mmse_filter(const ChannelSet& ch, const IrsPhaseVector& irs,
                    const PrecoderSet& pre, double noise_var, int k);

/// All K MMSE filters, stored as W_k (N_r x N_s).
ReceiveFilter mmse_receive_filter(const ChannelSet& ch,
                                  const IrsPhaseVector& irs,
                                  const PrecoderSet& pre, double noise_var);

/// Achievable rate of user k (bit/s/Hz) under the MMSE receive filter:
/// log2 det(I + X_k^-1 W_k^H G_k P_k P_k^H G_k^H W_k), with X_k the
/// interference-plus-noise matrix after the filter.
double user_rate(const ChannelSet& ch, const IrsPhaseVector& irs,
                 const PrecoderSet& pre, double noise_var, int k);

/// Per-user rates plus their sum.
RateReport sum_rate(const ChannelSet& ch, const IrsPhaseVector& irs,
                    const PrecoderSet& pre, double noise_var);

}  // namespace irsddpg
