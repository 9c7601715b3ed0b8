#pragma once

// Parameter sequences (d_n) and (k_n) selecting a group G of the family.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcwreath/dihedral.hpp"
#include "fcwreath/layers.hpp"

namespace fcwreath {

/// A query needed a layer beyond the end of an explicit parameter list.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An integer sequence indexed from n = 1: either affine (slope * n + offset)
/// or an explicit finite list.
class SeqRule {
 public:
  static SeqRule affine(std::int64_t slope, std::int64_t offset) {
    SeqRule r;
    r.affine_ = true;
    r.slope_ = slope;
    r.offset_ = offset;
    return r;
  }

  static SeqRule list(std::vector<std::int64_t> values) {
    SeqRule r;
    r.affine_ = false;
    r.values_ = std::move(values);
    return r;
  }

  bool is_affine() const { return affine_; }
  std::int64_t slope() const { return slope_; }
  std::int64_t offset() const { return offset_; }
  const std::vector<std::int64_t>& values() const { return values_; }

  /// Number of defined terms, or nullopt for an unbounded rule.
  std::optional<std::int64_t> length() const {
    if (affine_) return std::nullopt;
    return static_cast<std::int64_t>(values_.size());
  }

  std::int64_t at(std::int64_t n) const {
    if (n < 1) throw ParamError("sequence index must be >= 1");
    if (affine_) return checked_add(checked_mul(slope_, n), offset_);
    if (n > static_cast<std::int64_t>(values_.size()))
      throw BoundError("explicit sequence has only " + std::to_string(values_.size()) + " terms, term " +
                       std::to_string(n) + " requested");
    return values_[static_cast<std::size_t>(n - 1)];
  }

  std::string describe() const {
    if (affine_) return std::to_string(slope_) + "n" + (offset_ < 0 ? "" : "+") + std::to_string(offset_);
    std::string s = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
    return s + "]";
  }

 private:
  bool affine_ = true;
  std::int64_t slope_ = 1;
  std::int64_t offset_ = 0;
  std::vector<std::int64_t> values_;
};

/// Validated pair of sequences: both strictly increasing, d_1 > 1 and
/// k_n >= 2 d_n for every realizable n.
class GroupParams {
 public:
  GroupParams(SeqRule d, SeqRule k, std::string name = "custom")
      : d_(std::move(d)), k_(std::move(k)), name_(std::move(name)) {
    validate();
  }

  /// d_n = n + 1, k_n = 2n + 2.
  static GroupParams paper() { return GroupParams(SeqRule::affine(1, 1), SeqRule::affine(2, 2), "paper"); }

  const SeqRule& d_rule() const { return d_; }
  const SeqRule& k_rule() const { return k_; }
  const std::string& name() const { return name_; }

  std::int64_t d(std::int64_t n) const { return d_.at(n); }
  std::int64_t k(std::int64_t n) const { return k_.at(n); }

  LayerParams layer(std::int64_t n) const { return {n, d(n), k(n)}; }

  /// Largest realizable layer index; nullopt when both rules are unbounded.
  std::optional<std::int64_t> max_layer() const {
    auto ld = d_.length(), lk = k_.length();
    if (ld && lk) return std::min(*ld, *lk);
    return ld ? ld : lk;
  }

  /// B = max { n : d_n <= span + 1 }, the last layer on which an element of
  /// G -> C2 wr Z kernel, written over s-indices of the given span, can be
  /// nontrivial. Throws BoundError when an explicit list is too short to
  /// certify B or to evaluate layers 1..B.
  std::int64_t support_bound(std::int64_t span) const {
    if (span < 0) throw ParamError("span must be non-negative");
    const std::int64_t limit = checked_add(span, 1);
    std::int64_t bound = 0;
    if (d_.is_affine()) {
      // d_1 > 1 and slope >= 1, so (limit - offset) >= slope whenever d_1 <= limit.
      if (d_.at(1) <= limit) bound = (limit - d_.offset()) / d_.slope();
    } else {
      const auto& v = d_.values();
      if (v.back() <= limit)
        throw BoundError("d-list of length " + std::to_string(v.size()) + " cannot certify the support bound for span " +
                         std::to_string(span));
      while (v[static_cast<std::size_t>(bound)] <= limit) ++bound;
    }
    if (auto ml = max_layer(); ml && bound > *ml)
      throw BoundError("k-list of length " + std::to_string(*ml) + " too short for support bound " + std::to_string(bound));
    return bound;
  }

  std::string describe() const { return name_ + "(d=" + d_.describe() + ",k=" + k_.describe() + ")"; }

 private:
  void validate() const {
    for (const SeqRule* r : {&d_, &k_}) {
      if (r->is_affine()) {
        if (r->slope() < 1) throw ParamError("affine sequence must be strictly increasing (slope >= 1)");
      } else {
        const auto& v = r->values();
        if (v.empty()) throw ParamError("explicit sequence must be nonempty");
        for (std::size_t i = 1; i < v.size(); ++i)
          if (v[i] <= v[i - 1]) throw ParamError("explicit sequence must be strictly increasing");
      }
    }
    if (d_.at(1) <= 1) throw ParamError("d_1 must be > 1");
    if (d_.is_affine() && k_.is_affine()) {
      // k_n - 2 d_n is affine in n: nonnegative for all n >= 1 iff its slope
      // and its value at n = 1 are nonnegative.
      const std::int64_t slope = checked_sub(k_.slope(), checked_mul(2, d_.slope()));
      if (slope < 0 || k_.at(1) < checked_mul(2, d_.at(1)))
        throw ParamError("k_n >= 2 d_n fails for large n");
      return;
    }
    const std::int64_t last = *max_layer();
    for (std::int64_t n = 1; n <= last; ++n)
      if (k_.at(n) < checked_mul(2, d_.at(n)))
        throw ParamError("k_n >= 2 d_n fails at n = " + std::to_string(n));
  }

  SeqRule d_;
  SeqRule k_;
  std::string name_;
};

}  // namespace fcwreath
