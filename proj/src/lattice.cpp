#include "scoreseq/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scoreseq {

namespace {

// Lexicographic enumeration of k-element subsets of {1, ..., m}.
template <typename Fn>
void for_each_combination(std::uint32_t m, std::uint32_t k, Fn&& fn) {
  if (k > m) return;
  std::vector<std::uint32_t> c(k);
  for (std::uint32_t i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    fn(c);
    // advance
    std::uint32_t i = k;
    while (i > 0 && c[i - 1] == m - k + i) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::uint32_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

void check_enum_bound(std::uint32_t n, std::uint32_t bound, const char* what) {
  if (n > bound) {
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds enumeration bound " + std::to_string(bound));
  }
}

}  // namespace

Bridge::Bridge(std::uint32_t half_length, std::vector<std::uint32_t> down_steps)
    : n_(half_length), down_(std::move(down_steps)) {
  if (n_ == 0) throw std::invalid_argument("Bridge: half-length must be positive");
  if (down_.size() != n_)
    throw std::invalid_argument("Bridge: need exactly n down steps among 2n steps");
  for (std::size_t i = 0; i < down_.size(); ++i) {
    if (down_[i] < 1 || down_[i] > 2 * n_)
      throw std::invalid_argument("Bridge: down-step time out of [1, 2n]");
    if (i > 0 && down_[i] <= down_[i - 1])
      throw std::invalid_argument("Bridge: down-step times must be strictly increasing");
  }
}

std::vector<std::int32_t> Bridge::walk() const {
  std::vector<std::int32_t> b(2 * n_ + 1, 0);
  std::size_t next_down = 0;
  for (std::uint32_t t = 1; t <= 2 * n_; ++t) {
    bool down = next_down < down_.size() && down_[next_down] == t;
    if (down) ++next_down;
    b[t] = b[t - 1] + (down ? -1 : +1);
  }
  return b;
}

ScoreSeq::ScoreSeq(std::vector<std::uint32_t> scores) : scores_(std::move(scores)) {
  std::vector<std::int64_t> raw(scores_.begin(), scores_.end());
  if (!is_score_sequence(raw))
    throw std::invalid_argument("ScoreSeq: Landau conditions violated");
}

std::int64_t sawtooth_area(const Bridge& b) {
  std::int64_t n = b.half_length();
  std::int64_t sum = 0;
  for (std::uint32_t d : b.down_steps()) sum += d;
  return -n * n + sum;
}

std::int64_t sawtooth_area_step_form(const Bridge& b) {
  std::int64_t n = b.half_length();
  std::int64_t acc = n;
  auto w = b.walk();
  for (std::uint32_t t = 1; t <= 2 * n; ++t)
    acc += (2 * n + 1 - t) * static_cast<std::int64_t>(w[t] - w[t - 1]);
  // the bracket is always even: it equals twice the diamond count
  return acc / 2;
}

std::vector<std::uint32_t> zero_return_times(const Bridge& b) {
  std::vector<std::uint32_t> out;
  auto w = b.walk();
  for (std::uint32_t k = 1; k <= b.half_length(); ++k)
    if (w[2 * k] == 0) out.push_back(k);
  return out;
}

std::int64_t prefix_area(const Bridge& b, std::uint32_t k) {
  if (k > b.half_length()) throw std::invalid_argument("prefix_area: k out of range");
  std::int64_t sum = 0;
  std::int64_t below = 0;
  for (std::uint32_t d : b.down_steps()) {
    if (d <= 2 * k) {
      sum += d;
      ++below;
    }
  }
  if (below != static_cast<std::int64_t>(k))
    throw std::invalid_argument("prefix_area: walk does not return to 0 at time 2k");
  return -static_cast<std::int64_t>(k) * k + sum;
}

bool is_score_sequence(const std::vector<std::int64_t>& s) {
  std::int64_t n = static_cast<std::int64_t>(s.size());
  std::int64_t partial = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    std::int64_t v = s[k - 1];
    if (v < 0 || v > n - 1) return false;
    if (k > 1 && v < s[k - 2]) return false;
    partial += v;
    if (partial < k * (k - 1) / 2) return false;
  }
  return partial == n * (n - 1) / 2;
}

Bridge bridge_from_scores(const ScoreSeq& s) {
  std::vector<std::uint32_t> d(s.length());
  for (std::uint32_t i = 0; i < s.length(); ++i) d[i] = s.scores()[i] + i + 1;
  return Bridge(s.length(), std::move(d));
}

std::optional<ScoreSeq> scores_from_bridge(const Bridge& b) {
  std::vector<std::int64_t> raw(b.half_length());
  for (std::uint32_t i = 0; i < b.half_length(); ++i)
    raw[i] = static_cast<std::int64_t>(b.down_steps()[i]) - (i + 1);
  if (!is_score_sequence(raw)) return std::nullopt;
  return ScoreSeq(std::vector<std::uint32_t>(raw.begin(), raw.end()));
}

std::vector<ScoreSeq> enumerate_score_sequences(std::uint32_t n, std::uint32_t bound) {
  check_enum_bound(n, bound, "enumerate_score_sequences");
  std::vector<ScoreSeq> out;
  if (n == 0) {
    out.emplace_back(std::vector<std::uint32_t>{});  // the empty sequence
    return out;
  }
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::vector<std::uint32_t> prefix;
  prefix.reserve(n);

  auto rec = [&](auto&& self, std::int64_t partial) -> void {
    std::uint32_t k = static_cast<std::uint32_t>(prefix.size());
    if (k == n) {
      if (partial == total) out.emplace_back(prefix);
      return;
    }
    std::int64_t lo = prefix.empty() ? 0 : prefix.back();
    // partial sum after placing entry k+1 must reach binomial(k+1, 2)
    std::int64_t needed = static_cast<std::int64_t>(k + 1) * k / 2 - partial;
    if (needed > lo) lo = needed;
    std::int64_t rem = static_cast<std::int64_t>(n) - k - 1;
    for (std::int64_t v = lo; v <= n - 1; ++v) {
      std::int64_t t = partial + v;
      if (t + rem * v > total) break;              // later entries only grow
      if (t + rem * (n - 1) < total) continue;     // cannot reach the total
      prefix.push_back(static_cast<std::uint32_t>(v));
      self(self, t);
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Bridge> enumerate_bridges_area_zero_mod_n(std::uint32_t n, std::uint32_t bound) {
  if (n == 0) throw std::invalid_argument("enumerate_bridges_area_zero_mod_n: n must be positive");
  check_enum_bound(n, bound, "enumerate_bridges_area_zero_mod_n");
  std::vector<Bridge> out;
  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  for_each_combination(2 * n, n, [&](const std::vector<std::uint32_t>& c) {
    std::int64_t sum = 0;
    for (std::uint32_t d : c) sum += d;
    if ((sum - nn) % n == 0) out.emplace_back(n, c);
  });
  return out;
}

Bridge reflect(const Bridge& b) {
  std::vector<std::uint32_t> comp;
  comp.reserve(b.half_length());
  std::size_t i = 0;
  const auto& d = b.down_steps();
  for (std::uint32_t t = 1; t <= 2 * b.half_length(); ++t) {
    if (i < d.size() && d[i] == t)
      ++i;
    else
      comp.push_back(t);
  }
  return Bridge(b.half_length(), std::move(comp));
}

BigInt brute_force_egz(std::uint32_t n, std::uint32_t bound) {
  if (n == 0) throw std::invalid_argument("brute_force_egz: n must be positive");
  check_enum_bound(n, bound, "brute_force_egz");
  BigInt count = 0;
  for_each_combination(2 * n - 1, n, [&](const std::vector<std::uint32_t>& c) {
    std::uint64_t sum = 0;
    for (std::uint32_t t : c) sum += t;
    if (sum % n == 0) ++count;
  });
  return count;
}

}  // namespace scoreseq
