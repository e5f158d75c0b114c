#include "irsddpg/rates.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsddpg {

namespace {

void check_user_index(const ChannelSet& ch, int k) {
  if (k < 0 || k >= static_cast<int>(ch.user_irs.size())) {
    throw std::out_of_range("user index out of range");
  }
}

void check_finite(const ChannelSet& ch, const IrsPhaseVector& irs,
                  const PrecoderSet& pre) {
  if (!ch.irs_bs.allFinite() || !irs.theta.allFinite()) {
    throw std::invalid_argument("non-finite channel or phase input");
  }
  for (const auto& h : ch.user_irs) {
    if (!h.allFinite()) throw std::invalid_argument("non-finite channel input");
  }
  for (const auto& p : pre.p) {
    if (!p.allFinite()) throw std::invalid_argument("non-finite precoder input");
  }
}

// Shared per-instance products: every G_k and the Cholesky factor of the
// received-signal covariance A = sum_i G_i P_i P_i^H G_i^H + noise_var I.
struct LinkState {
  std::vector<CMatrix> g;
  std::vector<CMatrix> gp;  // G_k P_k
  Eigen::LLT<CMatrix> cov_llt;
};

LinkState make_link_state(const ChannelSet& ch, const IrsPhaseVector& irs,
                          const PrecoderSet& pre, double noise_var) {
  check_finite(ch, irs, pre);
  if (!(noise_var > 0.0)) {
    throw std::invalid_argument("noise variance must be > 0");
  }
  const int users = static_cast<int>(ch.user_irs.size());
  if (static_cast<int>(pre.p.size()) != users) {
    throw std::invalid_argument("precoder count does not match channel set");
  }
  const int n_rx = static_cast<int>(ch.irs_bs.rows());

  LinkState st;
  st.g.reserve(users);
  st.gp.reserve(users);
  CMatrix cov = noise_var * CMatrix::Identity(n_rx, n_rx);
  for (int i = 0; i < users; ++i) {
    CMatrix g = ch.irs_bs * (irs.theta.asDiagonal() * ch.user_irs[i]);
    CMatrix gp = g * pre.p[i];
    cov.noalias() += gp * gp.adjoint();
    st.g.push_back(std::move(g));
    st.gp.push_back(std::move(gp));
  }
  st.cov_llt.compute(cov);
  if (st.cov_llt.info() != Eigen::Success) {
    throw std::runtime_error("received-signal covariance is not positive definite");
  }
  return st;
}

// log det of a Hermitian positive definite matrix, via its Cholesky factor.
double logdet_hermitian_pd(const CMatrix& a) {
  Eigen::LLT<CMatrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("matrix is not positive definite");
  }
  double ld = 0.0;
  CMatrix l = llt.matrixL();
  for (int i = 0; i < l.rows(); ++i) {
    ld += std::log(l(i, i).real());
  }
  return 2.0 * ld;
}

// W_k^H given the shared state.
CMatrix filter_from_state(const LinkState& st, int k) {
  return st.cov_llt.solve(st.gp[k]).adjoint();
}

double rate_from_state(const LinkState& st, double noise_var, int k) {
  const int n_streams = static_cast<int>(st.gp[k].cols());
  CMatrix w_h = filter_from_state(st, k);
  if (w_h.norm() == 0.0) {
    return 0.0;  // zero precoder: the filter vanishes and so does the rate
  }
  CMatrix interference = noise_var * (w_h * w_h.adjoint());
  CMatrix signal = CMatrix::Zero(n_streams, n_streams);
  for (std::size_t i = 0; i < st.gp.size(); ++i) {
    CMatrix t = w_h * st.gp[i];
    if (static_cast<int>(i) == k) {
      signal.noalias() += t * t.adjoint();
    } else {
      interference.noalias() += t * t.adjoint();
    }
  }
  // log2 det(I + X^-1 S) = (logdet(X + S) - logdet(X)) / ln 2, kept in the
  // log domain so large instances cannot overflow the determinant.
  double rate = (logdet_hermitian_pd(interference + signal) -
                 logdet_hermitian_pd(interference)) /
                std::numbers::ln2;
  return rate < 0.0 ? 0.0 : rate;
}

}  // namespace

CMatrix effective_channel(const ChannelSet& ch, const IrsPhaseVector& irs,
                          int k) {
  check_user_index(ch, k);
  return ch.irs_bs * (irs.theta.asDiagonal() * ch.user_irs[k]);
}

CMatrix mmse_filter(const ChannelSet& ch, const IrsPhaseVector& irs,
                    const PrecoderSet& pre, double noise_var, int k) {
  check_user_index(ch, k);
  LinkState st = make_link_state(ch, irs, pre, noise_var);
  return filter_from_state(st, k);
}

ReceiveFilter mmse_receive_filter(const ChannelSet& ch,
                                  const IrsPhaseVector& irs,
                                  const PrecoderSet& pre, double noise_var) {
  LinkState st = make_link_state(ch, irs, pre, noise_var);
  ReceiveFilter f;
  f.w.reserve(st.gp.size());
  for (std::size_t k = 0; k < st.gp.size(); ++k) {
    f.w.push_back(filter_from_state(st, static_cast<int>(k)).adjoint());
  }
  return f;
}

double user_rate(const ChannelSet& ch, const IrsPhaseVector& irs,
                 const PrecoderSet& pre, double noise_var, int k) {
  check_user_index(ch, k);
  LinkState st = make_link_state(ch, irs, pre, noise_var);
  return rate_from_state(st, noise_var, k);
}

RateReport sum_rate(const ChannelSet& ch, const IrsPhaseVector& irs,
                    const PrecoderSet& pre, double noise_var) {
  LinkState st = make_link_state(ch, irs, pre, noise_var);
  RateReport report;
  report.per_user.reserve(st.gp.size());
  for (std::size_t k = 0; k < st.gp.size(); ++k) {
    double r = rate_from_state(st, noise_var, static_cast<int>(k));
    report.per_user.push_back(r);
    report.sum += r;
  }
  return report;
}

}  // namespace irsddpg
