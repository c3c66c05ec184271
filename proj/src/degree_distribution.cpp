#include "irsa/degree_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace irsa {

namespace {
constexpr double kSumTolerance = 1e-12;
}

DegreeDistribution::DegreeDistribution(std::vector<std::pair<int, double>> terms, int l_max)
    : terms_(std::move(terms)), l_max_(l_max) {
  if (l_max_ < 1) throw std::invalid_argument("degree distribution: l_max must be >= 1");
  if (terms_.empty()) throw std::invalid_argument("degree distribution: no terms");

  std::sort(terms_.begin(), terms_.end());
  double sum = 0.0;
  mean_degree_ = 0.0;
  int prev_degree = 0;
  for (const auto& [degree, prob] : terms_) {
    if (degree < 1)
      throw std::invalid_argument("degree distribution: degree 0 disallowed (undecodable packet)");
    if (degree > l_max_)
      throw std::invalid_argument("degree distribution: degree exceeds l_max");
    if (degree == prev_degree)
      throw std::invalid_argument("degree distribution: duplicate degree");
    if (!(prob >= 0.0 && prob <= 1.0))
      throw std::invalid_argument("degree distribution: probability outside [0,1]");
    sum += prob;
    mean_degree_ += degree * prob;
    prev_degree = degree;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw std::invalid_argument("degree distribution: probabilities must sum to 1");
}

DegreeDistribution DegreeDistribution::constant(int degree) {
  return DegreeDistribution({{degree, 1.0}}, degree);
}

DegreeDistribution DegreeDistribution::parse(const std::string& text, int l_max) {
  std::vector<std::pair<int, double>> terms;
  std::string token;
  std::stringstream in(text);
  while (std::getline(in, token, ',')) {
    std::stringstream ts(token);
    std::string piece;
    while (ts >> piece) {
      const auto colon = piece.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("degree distribution: expected 'degree:prob', got '" + piece + "'");
      terms.emplace_back(std::stoi(piece.substr(0, colon)), std::stod(piece.substr(colon + 1)));
    }
  }
  return DegreeDistribution(std::move(terms), l_max);
}

double DegreeDistribution::node_poly(double x) const {
  double value = 0.0;
  for (const auto& [degree, prob] : terms_) value += prob * std::pow(x, degree);
  return value;
}

double DegreeDistribution::edge_poly(double x) const {
  double value = 0.0;
  for (const auto& [degree, prob] : terms_)
    value += degree * prob * std::pow(x, degree - 1);
  return value / mean_degree_;
}

int DegreeDistribution::sample(Rng& rng) const {
  const double u = uniform_unit(rng);
  double acc = 0.0;
  for (const auto& [degree, prob] : terms_) {
    acc += prob;
    if (u < acc) return degree;
  }
  return terms_.back().first;  // guards against accumulated rounding
}

std::string DegreeDistribution::to_string() const {
  std::string out;
  char buf[64];
  for (const auto& [degree, prob] : terms_) {
    if (!out.empty()) out += '+';
    std::snprintf(buf, sizeof(buf), "%.17g", prob);
    out += buf;
    out += "x^";
    out += std::to_string(degree);
  }
  return out;
}

}  // namespace irsa
