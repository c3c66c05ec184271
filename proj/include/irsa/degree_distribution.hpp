#ifndef IRSA_DEGREE_DISTRIBUTION_HPP
#define IRSA_DEGREE_DISTRIBUTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "irsa/rng.hpp"

namespace irsa {

/** Probability distribution of per-packet replica counts.
 *
 *  Holds the polynomial Lambda(x) = sum_l Lambda_l x^l over degrees
 *  1 <= l <= l_max. Degree 0 is rejected: a packet with no replicas can
 *  never be decoded.
 */
class DegreeDistribution {
 public:
  /** terms: (degree, probability) pairs. Validates degrees in [1, l_max]
   *  and unique, probabilities in [0,1] summing to 1 within 1e-12.
   *  Throws std::invalid_argument otherwise. Terms are kept sorted by
   *  degree so sampling order is independent of input order.
   */
  DegreeDistribution(std::vector<std::pair<int, double>> terms, int l_max);

  /** Point mass on a single degree. */
  static DegreeDistribution constant(int degree);

  /** Parse "2:0.75,3:0.25" (also accepts whitespace separators). */
  static DegreeDistribution parse(const std::string& text, int l_max);

  int max_degree() const { return l_max_; }
  const std::vector<std::pair<int, double>>& terms() const { return terms_; }

  /** Average replica count Lambda'(1). */
  double mean_degree() const { return mean_degree_; }

  /** Node-perspective polynomial Lambda(x). */
  double node_poly(double x) const;

  /** Edge-perspective polynomial lambda(x) = Lambda'(x) / Lambda'(1). */
  double edge_poly(double x) const;

  /** Draw a degree; consumes exactly one engine call. */
  int sample(Rng& rng) const;

  /** Polynomial rendering, e.g. "0.75x^2+0.25x^3" (CSV-safe, no commas). */
  std::string to_string() const;

  bool operator==(const DegreeDistribution& other) const {
    return l_max_ == other.l_max_ && terms_ == other.terms_;
  }

 private:
  std::vector<std::pair<int, double>> terms_;  // sorted by degree
  int l_max_;
  double mean_degree_;
};

}  // namespace irsa

#endif
