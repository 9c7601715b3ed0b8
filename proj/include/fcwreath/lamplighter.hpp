#pragma once

// The lamplighter group C2 wr Z: finitely supported configurations Z -> C2
// together with a shift. This is the quotient G / FC(G).

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "fcwreath/dihedral.hpp"

namespace fcwreath {

class LampElement {
 public:
  LampElement() = default;

  /// Positions listed an odd number of times are lit.
  LampElement(std::vector<std::int64_t> positions, std::int64_t shift) : shift_(shift) {
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < positions.size();) {
      std::size_t j = i;
      while (j < positions.size() && positions[j] == positions[i]) ++j;
      if ((j - i) % 2 == 1) lit_.push_back(positions[i]);
      i = j;
    }
  }

  LampElement(std::initializer_list<std::int64_t> positions, std::int64_t shift)
      : LampElement(std::vector<std::int64_t>(positions), shift) {}

  static LampElement dirac(std::int64_t pos) { return LampElement({pos}, 0); }
  static LampElement translation(std::int64_t m) { return LampElement({}, m); }

  /// Sorted, duplicate-free lit positions.
  const std::vector<std::int64_t>& config() const { return lit_; }
  std::int64_t shift() const { return shift_; }

  bool config_trivial() const { return lit_.empty(); }
  bool is_identity() const { return lit_.empty() && shift_ == 0; }

  /// Toggle the lamp at `pos` in place.
  void toggle(std::int64_t pos) {
    auto it = std::lower_bound(lit_.begin(), lit_.end(), pos);
    if (it != lit_.end() && *it == pos)
      lit_.erase(it);
    else
      lit_.insert(it, pos);
  }

  friend bool operator==(const LampElement&, const LampElement&) = default;

 private:
  friend LampElement l_mul(const LampElement&, const LampElement&);
  friend LampElement l_inv(const LampElement&);

  std::vector<std::int64_t> lit_;
  std::int64_t shift_ = 0;
};

/// (c1, m1)(c2, m2) = (c1 + shift_{m1}(c2), m1 + m2), with shift_m(c)(x) = c(x - m).
inline LampElement l_mul(const LampElement& x, const LampElement& y) {
  std::vector<std::int64_t> moved;
  moved.reserve(y.lit_.size());
  for (auto p : y.lit_) moved.push_back(checked_add(p, x.shift_));
  LampElement r;
  std::set_symmetric_difference(x.lit_.begin(), x.lit_.end(), moved.begin(), moved.end(),
                                std::back_inserter(r.lit_));
  r.shift_ = checked_add(x.shift_, y.shift_);
  return r;
}

inline LampElement l_inv(const LampElement& x) {
  LampElement r;
  r.shift_ = checked_neg(x.shift_);
  r.lit_.reserve(x.lit_.size());
  for (auto p : x.lit_) r.lit_.push_back(checked_add(p, r.shift_));
  return r;
}

inline LampElement operator*(const LampElement& x, const LampElement& y) { return l_mul(x, y); }

inline Order l_order(const LampElement& x) {
  if (x.shift() != 0) return Order::Infinite;
  return x.config_trivial() ? Order::One : Order::Two;
}

/// "({p1,p2,...}, m)".
inline std::string to_string(const LampElement& x) {
  std::string s = "({";
  for (std::size_t i = 0; i < x.config().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.config()[i]);
  }
  s += "}, " + std::to_string(x.shift()) + ")";
  return s;
}

}  // namespace fcwreath
