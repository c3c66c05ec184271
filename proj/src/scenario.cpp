#include "irsa/scenario.hpp"

#include <stdexcept>
#include <string>

namespace irsa {

void ScenarioConfig::validate() const {
  if (num_sources < 1) throw std::invalid_argument("scenario: L must be >= 1");
  if (slots_per_frame < 1) throw std::invalid_argument("scenario: M must be >= 1");
  if (!(utility_weight > 0.0)) throw std::invalid_argument("scenario: w must be > 0");
  if (max_degree < 1) throw std::invalid_argument("scenario: l_max must be >= 1");
  if (horizon < 1) throw std::invalid_argument("scenario: horizon must be >= 1");
  if (frames_per_decision < 1)
    throw std::invalid_argument("scenario: frames_per_decision must be >= 1");
}

double traffic_load(const TransmissionStrategy& strategy, const ScenarioConfig& cfg) {
  return static_cast<double>(cfg.num_sources) * strategy.packets_per_source / cfg.slots_per_frame;
}

void require_stable(const TransmissionStrategy& strategy, const ScenarioConfig& cfg) {
  if (strategy.packets_per_source < 1)
    throw std::invalid_argument("strategy: K must be >= 1");
  const long lk = static_cast<long>(cfg.num_sources) * strategy.packets_per_source;
  if (lk > cfg.slots_per_frame)
    throw std::invalid_argument("strategy: L*K = " + std::to_string(lk) + " exceeds M = " +
                                std::to_string(cfg.slots_per_frame));
}

}  // namespace irsa
