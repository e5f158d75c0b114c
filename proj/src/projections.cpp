#include "irsddpg/projections.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "irsddpg/rates.hpp"

namespace irsddpg {

namespace {
constexpr double kDegenerateEps = 1e-12;
}

PrecoderSet normalize_precoders(const std::vector<CMatrix>& raw, double omega) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("power budget must be > 0");
  }
  PrecoderSet out;
  out.omega = omega;
  out.p.reserve(raw.size());
  for (const auto& m : raw) {
    double norm = m.norm();
    if (norm < kDegenerateEps) {
      throw std::invalid_argument("cannot normalize an all-zero precoder");
    }
    out.p.push_back(m * (std::sqrt(omega) / norm));
  }
  return out;
}

IrsPhaseVector project_unit_modulus(const CVector& raw) {
  IrsPhaseVector out;
  out.theta.resize(raw.size());
  for (Eigen::Index n = 0; n < raw.size(); ++n) {
    double mod = std::abs(raw(n));
    out.theta(n) = mod < kDegenerateEps ? Complex(1.0, 0.0) : raw(n) / mod;
  }
  return out;
}

IrsPhaseVector quantize_phases(const IrsPhaseVector& irs, int levels) {
  if (levels < 2) {
    throw std::invalid_argument("quantization needs at least two levels");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  const double step = two_pi / levels;
  auto circular_dist = [two_pi](double a, double b) {
    double d = std::fmod(std::abs(a - b), two_pi);
    return d > two_pi / 2.0 ? two_pi - d : d;
  };
  IrsPhaseVector out;
  out.theta.resize(irs.theta.size());
  for (Eigen::Index n = 0; n < irs.theta.size(); ++n) {
    double phase = std::arg(irs.theta(n));
    if (phase < 0.0) phase += two_pi;
    int lo = static_cast<int>(std::floor(phase / step)) % levels;
    int hi = (lo + 1) % levels;
    double d_lo = circular_dist(phase, lo * step);
    double d_hi = circular_dist(phase, hi * step);
    int pick;
    if (d_lo < d_hi) {
      pick = lo;
    } else if (d_hi < d_lo) {
      pick = hi;
    } else {
      pick = std::min(lo, hi);
    }
    out.theta(n) = std::polar(1.0, pick * step);
  }
  return out;
}

PrecoderSet mrt_precoder(const ChannelSet& ch, const IrsPhaseVector& irs,
                         double omega, int n_streams) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("power budget must be > 0");
  }
  if (n_streams < 1) {
    throw std::invalid_argument("stream count must be >= 1");
  }
  PrecoderSet out;
  out.omega = omega;
  const int users = static_cast<int>(ch.user_irs.size());
  out.p.reserve(users);
  const double scale = std::sqrt(omega / n_streams);
  for (int k = 0; k < users; ++k) {
    CMatrix g = effective_channel(ch, irs, k);
    if (n_streams > g.cols()) {
      throw std::invalid_argument("stream count exceeds transmit antennas");
    }
    // Full V keeps orthonormal columns past rank(G_k), which covers the
    // rank-deficient case without special handling.
    Eigen::JacobiSVD<CMatrix> svd(g, Eigen::ComputeFullV);
    out.p.push_back(scale * svd.matrixV().leftCols(n_streams));
  }
  return out;
}

IrsPhaseVector random_irs(Rng& rng, int n) {
  IrsPhaseVector out;
  out.theta.resize(n);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < n; ++i) {
    out.theta(i) = std::polar(1.0, rng.uniform() * two_pi);
  }
  return out;
}

}  // namespace irsddpg
