#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "entmono/spectra.hpp"

namespace entmono {

enum class Order { Forward, Backward, Incomparable, Equal };
enum class ConeFamily { MSequence, Extremal };

inline constexpr int kOrderCount = 4;

std::string to_string(Order o);
std::string to_string(ConeFamily f);
ConeFamily parse_cone_family(std::string_view name);

Order majorization_order(const Spectrum& rho, const Spectrum& sigma);

struct OrderVerdict {
  Order majorization = Order::Incomparable;
  ConeFamily family = ConeFamily::MSequence;
  std::vector<Order> cone;    // index n - 1: order generated by monotones up to degree n
  std::vector<double> gaps;   // per-degree monotone gap, positive when rho sits above sigma
};

// Degrees 3 and 4 of the extremal family use the optimized quadratic slacks;
// degrees >= 5 need `allow_high_extremal` because each costs a grid search.
OrderVerdict cone_verdict(const Spectrum& rho, const Spectrum& sigma, int nmax, ConeFamily family,
                          bool allow_high_extremal = false);

struct CensusLevel {
  int n = 0;
  std::array<std::array<std::int64_t, kOrderCount>, kOrderCount> confusion{};  // [majorization][cone]
  std::int64_t cone_ordered_incomparable = 0;
  std::int64_t soundness_violations = 0;
};

struct CensusResult {
  int dim = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  ConeFamily family = ConeFamily::MSequence;
  std::vector<CensusLevel> levels;
};

CensusResult order_census(int dim, std::int64_t samples, std::uint64_t seed, int nmax,
                          ConeFamily family, bool allow_high_extremal = false);

}  // namespace entmono
