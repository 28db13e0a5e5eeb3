#include "scoreseq/bijection.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace scoreseq {

namespace {

std::string join_steps(const Bridge& b) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < b.down_steps().size(); ++i) {
    if (i) os << ",";
    os << b.down_steps()[i];
  }
  os << "}";
  return os.str();
}

}  // namespace

std::vector<std::uint32_t> irreducible_breakpoints(const Bridge& b) {
  if (!scores_from_bridge(b))
    throw std::invalid_argument("irreducible_breakpoints: bridge is not a score bridge");
  std::vector<std::uint32_t> out;
  for (std::uint32_t k : zero_return_times(b))
    if (prefix_area(b, k) == 0) out.push_back(k);
  return out;
}

std::uint32_t first_part_length(const Bridge& b) { return irreducible_breakpoints(b).front(); }

Bridge cyclic_shift(const Bridge& b, std::uint32_t m) {
  const std::uint32_t period = 2 * b.half_length();
  if (m >= period) throw std::invalid_argument("cyclic_shift: shift must lie in [0, 2n)");
  std::vector<std::uint32_t> shifted;
  shifted.reserve(b.down_steps().size());
  for (std::uint32_t d : b.down_steps())
    shifted.push_back((d + period - m - 1) % period + 1);
  std::sort(shifted.begin(), shifted.end());
  return Bridge(b.half_length(), std::move(shifted));
}

ShiftPair::ShiftPair(Bridge bridge, std::uint32_t shift)
    : bridge_(std::move(bridge)), shift_(shift) {
  if (shift_ >= 2 * first_part_length(bridge_))
    throw std::invalid_argument("ShiftPair: shift must be below twice the first part length");
}

Bridge forward_map(const ShiftPair& p) { return cyclic_shift(p.bridge(), p.shift()); }

ShiftPair inverse_map(const Bridge& b_prime) {
  const std::uint32_t n = b_prime.half_length();
  const std::uint32_t period = 2 * n;
  if (sawtooth_area(b_prime) % static_cast<std::int64_t>(n) != 0)
    throw std::invalid_argument("inverse_map: sawtooth area not divisible by n");

  std::vector<ShiftPair> candidates;
  for (std::uint32_t r = 0; r < period; ++r) {
    Bridge rotated = cyclic_shift(b_prime, r);
    if (!scores_from_bridge(rotated)) continue;
    std::uint32_t m = (period - r) % period;
    if (m < 2 * first_part_length(rotated)) candidates.emplace_back(std::move(rotated), m);
  }
  if (candidates.size() != 1)
    throw std::logic_error("inverse_map: found " + std::to_string(candidates.size()) +
                           " preimages of " + join_steps(b_prime) + ", expected exactly one");
  return candidates.front();
}

BijectionReport verify_bijection(std::uint32_t n, std::uint32_t bound) {
  if (n == 0) throw std::invalid_argument("verify_bijection: n must be positive");
  BijectionReport report;
  report.n = n;

  std::vector<ShiftPair> domain;
  for (const ScoreSeq& s : enumerate_score_sequences(n, bound)) {
    Bridge b = bridge_from_scores(s);
    std::uint32_t ell = first_part_length(b);
    for (std::uint32_t m = 0; m < 2 * ell; ++m) domain.emplace_back(b, m);
  }
  report.domain_size = domain.size();

  std::map<std::vector<std::uint32_t>, std::size_t> image_counts;
  for (const ShiftPair& p : domain) ++image_counts[forward_map(p).down_steps()];

  report.injective = true;
  for (const auto& [steps, count] : image_counts) {
    if (count > 1) {
      report.injective = false;
      report.failures.push_back("image " + join_steps(Bridge(n, steps)) + " has " +
                                std::to_string(count) + " preimages");
    }
  }

  auto codomain = enumerate_bridges_area_zero_mod_n(n, bound);
  report.codomain_size = codomain.size();

  report.surjective = true;
  for (const Bridge& b : codomain) {
    if (!image_counts.contains(b.down_steps())) {
      report.surjective = false;
      report.failures.push_back("codomain bridge " + join_steps(b) + " is never hit");
    }
  }
  for (const auto& [steps, count] : image_counts) {
    Bridge b(n, steps);
    if (sawtooth_area(b) % static_cast<std::int64_t>(n) != 0) {
      report.surjective = false;  // image escapes the codomain entirely
      report.failures.push_back("image " + join_steps(b) + " has area not divisible by n");
    }
  }
  return report;
}

}  // namespace scoreseq
