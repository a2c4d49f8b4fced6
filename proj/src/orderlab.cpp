#include "entmono/orderlab.hpp"

#include <cmath>

#include "entmono/error.hpp"
#include "entmono/monotones.hpp"
#include "entmono/sampling.hpp"

namespace entmono {

namespace {

struct Direction {
  bool forward = false;
  bool backward = false;
  double gap = 0.0;
};

Order combine(bool forward, bool backward) {
  if (forward && backward) return Order::Equal;
  if (forward) return Order::Forward;
  if (backward) return Order::Backward;
  return Order::Incomparable;
}

// Nonnegative minimum over the one-parameter family, treating an unbounded
// family (degenerate leading coefficient) as a failed ordering.
bool family_slack_nonneg(int k, std::span<const double> dm, double& slack) {
  try {
    const InequalitySlack s = k == 3 ? inequality3_slack_from_delta(dm) : inequality4_slack_from_delta(dm);
    slack = s.slack;
    return s.slack >= -kCompareTol;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateDenominator) throw;
    slack = -INFINITY;
    return false;
  }
}

std::vector<Direction> degree_directions(const Spectrum& rho, const Spectrum& sigma, int nmax,
                                         ConeFamily family) {
  const std::vector<double> fwd = delta_m(rho, sigma, std::min(nmax, 4));
  std::vector<double> bwd(fwd.size());
  for (std::size_t i = 0; i < fwd.size(); ++i) bwd[i] = -fwd[i];
  std::vector<Direction> out;
  for (int k = 1; k <= nmax; ++k) {
    Direction d;
    if (family == ConeFamily::MSequence) {
      d.gap = k <= 4 ? fwd[k - 1]
                     : shifted_moment(sigma, ShiftParams::minimal(k)) - shifted_moment(rho, ShiftParams::minimal(k));
      d.forward = d.gap >= -kCompareTol;
      d.backward = d.gap <= kCompareTol;
    } else if (k <= 2) {
      // Normalized P_E^(1) = -S and P_E^(2) = -M^(2)(.; 1).
      d.gap = fwd[k - 1];
      d.forward = d.gap >= -kCompareTol;
      d.backward = d.gap <= kCompareTol;
    } else if (k <= 4) {
      double back_slack = 0.0;
      d.forward = family_slack_nonneg(k, fwd, d.gap);
      d.backward = family_slack_nonneg(k, bwd, back_slack);
    } else {
      const OptimizedSlack f = optimized_extremal_slack(rho, sigma, k);
      const OptimizedSlack b = optimized_extremal_slack(sigma, rho, k);
      d.gap = f.slack;
      d.forward = f.slack >= -kCompareTol;
      d.backward = b.slack >= -kCompareTol;
    }
    out.push_back(d);
  }
  return out;
}

std::size_t idx(Order o) { return static_cast<std::size_t>(o); }

}  // namespace

std::string to_string(Order o) {
  switch (o) {
    case Order::Forward: return "forward";
    case Order::Backward: return "backward";
    case Order::Incomparable: return "incomparable";
    case Order::Equal: return "equal";
  }
  return "unknown";
}

std::string to_string(ConeFamily f) { return f == ConeFamily::MSequence ? "msequence" : "extremal"; }

ConeFamily parse_cone_family(std::string_view name) {
  if (name == "msequence") return ConeFamily::MSequence;
  if (name == "extremal") return ConeFamily::Extremal;
  throw Error(ErrorKind::InvalidArgument, "unknown cone family '" + std::string(name) + "'");
}

Order majorization_order(const Spectrum& rho, const Spectrum& sigma) {
  return combine(majorizes(rho, sigma), majorizes(sigma, rho));
}

OrderVerdict cone_verdict(const Spectrum& rho, const Spectrum& sigma, int nmax, ConeFamily family,
                          bool allow_high_extremal) {
  if (nmax < 1 || nmax > 6) throw Error(ErrorKind::InvalidArgument, "cone degree must lie in 1..6");
  if (family == ConeFamily::Extremal && nmax >= 5 && !allow_high_extremal) {
    throw Error(ErrorKind::BudgetExceeded, "extremal degrees >= 5 need the high-degree budget flag");
  }
  OrderVerdict v;
  v.family = family;
  v.majorization = majorization_order(rho, sigma);
  bool forward = true;
  bool backward = true;
  for (const Direction& d : degree_directions(rho, sigma, nmax, family)) {
    forward = forward && d.forward;
    backward = backward && d.backward;
    v.cone.push_back(combine(forward, backward));
    v.gaps.push_back(d.gap);
  }
  return v;
}

CensusResult order_census(int dim, std::int64_t samples, std::uint64_t seed, int nmax,
                          ConeFamily family, bool allow_high_extremal) {
  if (dim < 2) throw Error(ErrorKind::InvalidArgument, "census dimension must be at least 2");
  if (dim > 8) throw Error(ErrorKind::BudgetExceeded, "census dimension is capped at 8");
  if (samples < 0 || samples > 1'000'000) {
    throw Error(ErrorKind::BudgetExceeded, "census sample count is capped at 1e6");
  }
  CensusResult out;
  out.dim = dim;
  out.samples = samples;
  out.seed = seed;
  out.family = family;
  for (int n = 1; n <= nmax; ++n) out.levels.push_back(CensusLevel{n});
  Rng rng(seed);
  for (std::int64_t s = 0; s < samples; ++s) {
    const Spectrum rho = random_spectrum(rng, dim);
    const Spectrum sigma = random_spectrum(rng, dim);
    const OrderVerdict v = cone_verdict(rho, sigma, nmax, family, allow_high_extremal);
    for (int n = 1; n <= nmax; ++n) {
      CensusLevel& level = out.levels[n - 1];
      const Order cone = v.cone[n - 1];
      ++level.confusion[idx(v.majorization)][idx(cone)];
      const bool ordered = cone == Order::Forward || cone == Order::Backward;
      if (ordered && v.majorization == Order::Incomparable) ++level.cone_ordered_incomparable;
      const bool unsound = (v.majorization == Order::Forward && cone != Order::Forward && cone != Order::Equal) ||
                           (v.majorization == Order::Backward && cone != Order::Backward && cone != Order::Equal);
      if (unsound) ++level.soundness_violations;
    }
  }
  return out;
}

}  // namespace entmono
