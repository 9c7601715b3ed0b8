#pragma once

// Layer groups H_n = D^k semidirect C_k, where C_k permutes the k dihedral
// coordinates cyclically.
//
// Coordinates are stored 0-based: position p in {1..k} lives at
// index p - 1. The generator 1 of C_k acts by moving the coordinate at
// position x to position x + 1, so that t^i s t^-i has its a-letter at
// position i + 1 and its b-letter at position d + i (mod k).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcwreath/dihedral.hpp"
#include "fcwreath/word.hpp"

namespace fcwreath {

struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Layer index n with d = d_n and k = k_n.
struct LayerParams {
  std::int64_t n = 1;
  std::int64_t d = 2;
  std::int64_t k = 4;

  void validate() const {
    if (n < 1) throw ParamError("layer index must be >= 1");
    if (d < 2) throw ParamError("layer requires d >= 2");
    if (k < 2 * d) throw ParamError("layer requires k >= 2d");
  }

  friend bool operator==(const LayerParams&, const LayerParams&) = default;
};

class LayerElement {
 public:
  LayerElement() = default;
  explicit LayerElement(std::int64_t k) : coords_(static_cast<std::size_t>(k)) {}
  LayerElement(std::vector<Dihedral> coords, std::int64_t shift) : coords_(std::move(coords)) {
    if (coords_.empty()) throw ParamError("layer element needs at least one coordinate");
    shift_ = mod_floor(shift, k());
  }

  static LayerElement identity(const LayerParams& p) { return LayerElement(p.k); }

  /// The image of t: trivial coordinates, shift 1.
  static LayerElement rotation(const LayerParams& p) { return LayerElement(std::vector<Dihedral>(p.k), 1); }

  std::int64_t k() const { return static_cast<std::int64_t>(coords_.size()); }
  std::int64_t shift() const { return shift_; }
  const std::vector<Dihedral>& coords() const { return coords_; }

  /// Coordinate at 0-based index.
  const Dihedral& at(std::int64_t idx) const { return coords_[static_cast<std::size_t>(mod_floor(idx, k()))]; }
  Dihedral& at(std::int64_t idx) { return coords_[static_cast<std::size_t>(mod_floor(idx, k()))]; }

  /// Coordinate at 1-based position.
  const Dihedral& at_position(std::int64_t pos) const { return at(pos - 1); }

  void set_shift(std::int64_t c) { shift_ = mod_floor(c, k()); }

  bool is_identity() const {
    if (shift_ != 0) return false;
    for (const auto& c : coords_)
      if (!c.is_identity()) return false;
    return true;
  }

  std::int64_t support_size() const {
    std::int64_t n = 0;
    for (const auto& c : coords_) n += c.is_identity() ? 0 : 1;
    return n;
  }

  friend bool operator==(const LayerElement&, const LayerElement&) = default;

 private:
  std::vector<Dihedral> coords_;
  std::int64_t shift_ = 0;
};

/// (f1, c1)(f2, c2) = (f1 * (c1 . f2), c1 + c2) with (c . f)(x) = f(x - c).
inline LayerElement h_mul(const LayerElement& x, const LayerElement& y) {
  if (x.k() != y.k()) throw ParamError("layer elements from different layers");
  const std::int64_t k = x.k();
  std::vector<Dihedral> out(static_cast<std::size_t>(k));
  for (std::int64_t pos = 0; pos < k; ++pos)
    out[static_cast<std::size_t>(pos)] = d_mul(x.at(pos), y.at(pos - x.shift()));
  return LayerElement(std::move(out), x.shift() + y.shift());
}

inline LayerElement h_inv(const LayerElement& x) {
  const std::int64_t k = x.k();
  std::vector<Dihedral> out(static_cast<std::size_t>(k));
  // ((-c) . f^-1)(pos) = f(pos + c)^-1
  for (std::int64_t pos = 0; pos < k; ++pos) out[static_cast<std::size_t>(pos)] = d_inv(x.at(pos + x.shift()));
  return LayerElement(std::move(out), -x.shift());
}

inline LayerElement operator*(const LayerElement& x, const LayerElement& y) { return h_mul(x, y); }

/// sigma_n: a at position 1, b at position d.
inline LayerElement sigma(const LayerParams& p) {
  p.validate();
  LayerElement e(p.k);
  e.at(0) = Dihedral::a();
  e.at(p.d - 1) = Dihedral::b();
  return e;
}

/// r_i = pi_n(t^i s t^-i): a at position i + 1, b at position d + i (mod k).
inline LayerElement r_elem(const LayerParams& p, std::int64_t i) {
  p.validate();
  LayerElement e(p.k);
  e.at(i) = Dihedral::a();
  e.at(checked_add(p.d - 1, i)) = Dihedral::b();
  return e;
}

/// Right-multiplies by the image of a single generator, in place. pi_n(s) is
/// an involution, so s and s^-1 act identically.
inline void apply_letter(const LayerParams& p, LayerElement& x, Letter l) {
  switch (l) {
    case Letter::S:
    case Letter::SInv: {
      Dihedral& lo = x.at(x.shift());
      lo = d_mul(lo, Dihedral::a());
      Dihedral& hi = x.at(x.shift() + p.d - 1);
      hi = d_mul(hi, Dihedral::b());
      break;
    }
    case Letter::T: x.set_shift(x.shift() + 1); break;
    case Letter::TInv: x.set_shift(x.shift() - 1); break;
  }
}

/// pi_n of a word, evaluated left to right.
inline LayerElement project_word(const LayerParams& p, const Word& w) {
  p.validate();
  LayerElement x = LayerElement::identity(p);
  for (Letter l : w.letters()) apply_letter(p, x, l);
  return x;
}

/// "[pos:elt, ...]; shift=c" with 1-based positions, nontrivial coordinates only.
inline std::string to_string(const LayerElement& x) {
  std::string s = "[";
  bool first = true;
  for (std::int64_t i = 0; i < x.k(); ++i) {
    if (x.at(i).is_identity()) continue;
    if (!first) s += ", ";
    first = false;
    s += std::to_string(i + 1) + ":" + to_string(x.at(i));
  }
  s += "]; shift=" + std::to_string(x.shift());
  return s;
}

}  // namespace fcwreath
