#pragma once

// Return probability of the simple random walk driven by the uniform
// measure on {s, s^-1, t, t^-1}, on G or on its quotient C2 wr Z.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "fcwreath/group.hpp"

namespace fcwreath {

enum class WalkTarget { G, Q };

struct WalkConfig {
  std::int64_t steps = 2;
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
  WalkTarget target = WalkTarget::G;
  /// Number of independent RNG streams; results reproduce for a fixed value.
  unsigned shards = 1;

  /// An identity product needs zero s- and t-exponent sums, so odd lengths
  /// never return; they are rejected rather than answered.
  void validate() const {
    if (steps < 0 || steps % 2 != 0) throw ParamError("walk steps must be even and non-negative");
    if (trials < 1) throw ParamError("walk trials must be positive");
    if (shards < 1) throw ParamError("walk shards must be positive");
  }
};

inline constexpr std::int64_t kExactStepCap = 12;

/// count / total, kept unreduced so total = 4^steps.
struct ExactProb {
  std::uint64_t count = 0;
  std::uint64_t total = 1;

  double value() const { return static_cast<double>(count) / static_cast<double>(total); }
  std::string str() const { return std::to_string(count) + "/" + std::to_string(total); }

  friend bool operator==(const ExactProb& x, const ExactProb& y) {
    return static_cast<unsigned __int128>(x.count) * y.total == static_cast<unsigned __int128>(y.count) * x.total;
  }
  friend bool operator<=(const ExactProb& x, const ExactProb& y) {
    return static_cast<unsigned __int128>(x.count) * y.total <= static_cast<unsigned __int128>(y.count) * x.total;
  }
};

namespace detail {

/// Incremental evaluation of a walk prefix, with exact undo. Tracks pi_0,
/// the t-exponent, the lamp configuration and the layers 1..bound, plus
/// the number of nontrivial entries so the identity test is O(1).
class WalkState {
 public:
  WalkState(const GroupParams& gp, std::int64_t steps, WalkTarget target) : steps_(steps), lamps_(2 * steps + 1, 0) {
    if (target == WalkTarget::G) {
      // The s-offsets visited by a walk of this length span at most `steps`.
      const std::int64_t bound = gp.support_bound(steps);
      for (std::int64_t n = 1; n <= bound; ++n) {
        layers_.push_back(gp.layer(n));
        coords_.emplace_back(static_cast<std::size_t>(layers_.back().k));
      }
    }
    track_z_ = target == WalkTarget::G;
  }

  /// pi_n(s) is an involution, so applying inverse(l) after l restores the state.
  void apply(Letter l) {
    if (!is_s(l)) {
      shift_ += sign(l);
      return;
    }
    z_ += sign(l);
    toggle_lamp(shift_);
    for (std::size_t j = 0; j < layers_.size(); ++j) {
      const auto& p = layers_[j];
      auto& f = coords_[j];
      mul_into(f[static_cast<std::size_t>(mod_floor(shift_, p.k))], Dihedral::a());
      mul_into(f[static_cast<std::size_t>(mod_floor(shift_ + p.d - 1, p.k))], Dihedral::b());
    }
  }

  void undo(Letter l) { apply(inverse(l)); }

  bool at_identity() const { return shift_ == 0 && lit_ == 0 && nontrivial_ == 0 && (!track_z_ || z_ == 0); }

 private:
  void toggle_lamp(std::int64_t pos) {
    auto& v = lamps_[static_cast<std::size_t>(pos + steps_)];
    v ^= 1;
    lit_ += v ? 1 : -1;
  }

  void mul_into(Dihedral& x, const Dihedral& g) {
    const bool before = x.is_identity();
    x = d_mul(x, g);
    nontrivial_ += static_cast<std::int64_t>(before) - static_cast<std::int64_t>(x.is_identity());
  }

  std::int64_t steps_;
  std::int64_t shift_ = 0;
  std::int64_t z_ = 0;
  bool track_z_ = true;
  std::vector<std::uint8_t> lamps_;
  std::int64_t lit_ = 0;
  std::vector<LayerParams> layers_;
  std::vector<std::vector<Dihedral>> coords_;
  std::int64_t nontrivial_ = 0;
};

inline std::uint64_t count_from(WalkState& st, std::int64_t remaining) {
  if (remaining == 0) return st.at_identity() ? 1 : 0;
  std::uint64_t total = 0;
  for (Letter l : kAlphabet) {
    st.apply(l);
    total += count_from(st, remaining - 1);
    st.undo(l);
  }
  return total;
}

}  // namespace detail

/// Number of the 4^steps generator sequences whose product is trivial in the
/// target. Accepts odd lengths; capped at kExactStepCap.
inline std::uint64_t count_returns(std::int64_t steps, WalkTarget target, const GroupParams& gp, unsigned threads = 1) {
  if (steps < 0) throw ParamError("walk steps must be non-negative");
  if (steps > kExactStepCap)
    throw ParamError("exact enumeration is capped at " + std::to_string(kExactStepCap) + " steps");
  if (steps < 2) {
    detail::WalkState st(gp, steps, target);
    return detail::count_from(st, steps);
  }
  // 16 subtrees under the two-letter prefixes, shared out to the workers.
  std::vector<std::uint64_t> part(16, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    detail::WalkState st(gp, steps, target);
    for (std::size_t i; (i = next.fetch_add(1)) < 16;) {
      const Letter x = kAlphabet[i / 4], y = kAlphabet[i % 4];
      st.apply(x);
      st.apply(y);
      part[i] = detail::count_from(st, steps - 2);
      st.undo(y);
      st.undo(x);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < std::clamp(threads, 1u, 16u); ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (auto c : part) total += c;
  return total;
}

inline ExactProb exact_return_prob(const WalkConfig& cfg, const GroupParams& gp, unsigned threads = 1) {
  if (cfg.steps < 0 || cfg.steps % 2 != 0) throw ParamError("walk steps must be even and non-negative");
  const std::uint64_t count = count_returns(cfg.steps, cfg.target, gp, threads);
  return {count, std::uint64_t{1} << (2 * cfg.steps)};
}

struct Estimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
};

inline bool returns_to_identity(const Word& w, WalkTarget target, const GroupParams& gp) {
  return target == WalkTarget::G ? is_identity(w, gp) : quotient_image(w).is_identity();
}

/// Monte Carlo estimate from `trials` walks. Shard j draws from an mt19937_64
/// seeded with (seed, j) and runs a contiguous block of trials.
inline Estimate mc_return_prob(const WalkConfig& cfg, const GroupParams& gp) {
  cfg.validate();
  std::vector<std::uint64_t> hits(cfg.shards, 0);
  auto run_shard = [&](unsigned j) {
    const std::int64_t begin = cfg.trials * j / cfg.shards;
    const std::int64_t end = cfg.trials * (j + 1) / cfg.shards;
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), j};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> pick(0, 3);
    for (std::int64_t trial = begin; trial < end; ++trial) {
      std::vector<Letter> letters(static_cast<std::size_t>(cfg.steps));
      for (auto& l : letters) l = kAlphabet[pick(rng)];
      hits[j] += returns_to_identity(Word(std::move(letters)), cfg.target, gp) ? 1 : 0;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < cfg.shards; ++j) pool.emplace_back(run_shard, j);
  run_shard(0);
  for (auto& th : pool) th.join();

  Estimate e;
  for (auto h : hits) e.hits += h;
  const double n = static_cast<double>(cfg.trials);
  e.estimate = static_cast<double>(e.hits) / n;
  e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / n);
  return e;
}

}  // namespace fcwreath
