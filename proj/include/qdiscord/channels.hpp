#pragma once

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "qdiscord/qcore.hpp"

namespace qdiscord {

constexpr double kTracePreservationTol = 1e-12;

/// A single-qubit channel in operator-sum form, E(rho) = sum_i E_i rho E_i^dagger.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Operator2> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw ChannelError("Kraus channel needs at least one operator");
  }

  static KrausChannel identity() { return KrausChannel({Operator2::Identity()}); }

  const std::vector<Operator2>& ops() const noexcept { return ops_; }

 private:
  std::vector<Operator2> ops_;
};

struct TracePreservation {
  bool preserving;
  double residual;  // max-entry norm of sum E^dagger E - I

  explicit operator bool() const noexcept { return preserving; }
};

inline TracePreservation is_trace_preserving(const KrausChannel& ch) {
  Operator2 sum = Operator2::Zero();
  for (const auto& e : ch.ops()) sum += e.adjoint() * e;
  const double residual = (sum - Operator2::Identity()).cwiseAbs().maxCoeff();
  return {residual <= kTracePreservationTol, residual};
}

/// Generalized amplitude damping with decay probability gamma and
/// ground-state bias p; p = 1 is plain amplitude damping.
inline KrausChannel gad_channel(double p, double gamma) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "gad_channel: p = " << p << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    std::ostringstream msg;
    msg << "gad_channel: gamma = " << gamma << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  const double sp = std::sqrt(p);
  const double sq = std::sqrt(1.0 - p);
  const double sg = std::sqrt(gamma);
  const double sd = std::sqrt(1.0 - gamma);

  Operator2 e0, e1, e2, e3;
  e0 << sp, 0.0, 0.0, sp * sd;
  e1 << 0.0, sp * sg, 0.0, 0.0;
  e2 << sq * sd, 0.0, 0.0, sq;
  e3 << 0.0, 0.0, sq * sg, 0.0;
  return KrausChannel({e0, e1, e2, e3});
}

namespace detail {

inline void require_trace_preserving(const KrausChannel& ch) {
  const auto tp = is_trace_preserving(ch);
  if (!tp) {
    std::ostringstream msg;
    msg << "channel is not trace preserving (residual " << tp.residual << ")";
    throw ChannelError(msg.str());
  }
}

}  // namespace detail

inline DensityMatrix2 apply_single(const KrausChannel& ch, const DensityMatrix2& rho) {
  detail::require_trace_preserving(ch);
  Operator2 out = Operator2::Zero();
  for (const auto& e : ch.ops()) out += e * rho.matrix() * e.adjoint();
  return DensityMatrix2::from_matrix(out);
}

/// Applies the channel to qubit A only: sum_i (E_i (x) I) rho (E_i (x) I)^dagger.
inline DensityMatrix4 apply_local_A(const KrausChannel& ch, const DensityMatrix4& rho) {
  detail::require_trace_preserving(ch);
  const Operator2 id = Operator2::Identity();
  Operator4 out = Operator4::Zero();
  for (const auto& e : ch.ops()) {
    const Operator4 lifted = kron(e, id);
    out += lifted * rho.matrix() * lifted.adjoint();
  }
  return DensityMatrix4::from_matrix(out);
}

}  // namespace qdiscord
