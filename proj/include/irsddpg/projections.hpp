#pragma once

#include <vector>

#include "irsddpg/rng.hpp"
#include "irsddpg/types.hpp"

namespace irsddpg {

/// Scales each raw precoder to exactly full power ||P_k||_F^2 = omega.
/// Throws std::invalid_argument when a raw matrix is all zero.
PrecoderSet normalize_precoders(const std::vector<CMatrix>& raw, double omega);

/// Entrywise projection onto the unit circle; entries with modulus below
/// 1e-12 map to 1+0j.
IrsPhaseVector project_unit_modulus(const CVector& raw);

/// Snaps each phase to the nearest of the L grid points {2*pi*l/L}. Ties
/// under the circular distance break toward the smaller l.
IrsPhaseVector quantize_phases(const IrsPhaseVector& irs, int levels);

/// MRT precoders: top-N_s right singular vectors of each effective channel
/// G_k, scaled to full power. When N_s exceeds rank(G_k) the remaining
/// columns come from the orthonormal null-space basis of the full SVD.
PrecoderSet mrt_precoder(const ChannelSet& ch, const IrsPhaseVector& irs,
                         double omega, int n_streams);

/// Phases i.i.d. uniform on [0, 2*pi).
IrsPhaseVector random_irs(Rng& rng, int n);

}  // namespace irsddpg
