#ifndef IRSA_SCENARIO_HPP
#define IRSA_SCENARIO_HPP

#include <cstdint>

#include "irsa/degree_distribution.hpp"

namespace irsa {

/** How replica slots are drawn for the packets of one source.
 *
 *  kSourceDistinct: all replicas a source sends within a frame occupy
 *  pairwise distinct slots (the protocol behaviour). kPacketDistinct:
 *  distinctness only within one packet, packets placed independently —
 *  the assumption behind the asymptotic analysis, kept for validating
 *  the prior.
 */
enum class PlacementMode { kSourceDistinct, kPacketDistinct };

/** Fixed environment: L sources sharing frames of M slots. */
struct ScenarioConfig {
  int num_sources = 1;       // L
  int slots_per_frame = 1;   // M
  double utility_weight = 1.0;  // w
  int max_degree = 8;        // l_max
  int horizon = 1;           // decision opportunities per episode
  std::uint64_t rng_seed = 0;
  PlacementMode placement = PlacementMode::kSourceDistinct;
  int frames_per_decision = 1;

  /** Throws std::invalid_argument when a bound is violated. */
  void validate() const;
};

/** One candidate arm: replica distribution + packets per source per frame. */
struct TransmissionStrategy {
  DegreeDistribution degree_dist;
  int packets_per_source = 1;  // K

  bool operator==(const TransmissionStrategy& other) const {
    return packets_per_source == other.packets_per_source && degree_dist == other.degree_dist;
  }
};

/** Normalized traffic load G = L*K / M. */
double traffic_load(const TransmissionStrategy& strategy, const ScenarioConfig& cfg);

/** Enforces the stability constraint L*K <= M; throws otherwise. */
void require_stable(const TransmissionStrategy& strategy, const ScenarioConfig& cfg);

}  // namespace irsa

#endif
