#pragma once

// The infinite dihedral group D = <a, b | a^2 = b^2 = 1>.
//
// Every element has a unique normal form (ab)^n a^e with n in Z and e in
// {0, 1}; Dihedral stores the pair (n, e). The rotation subgroup Z = <ab>
// is the set of elements with e = 0, and the derived subgroup D' = <(ab)^2>
// is the set with e = 0 and n even.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace fcwreath {

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in group arithmetic");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in group arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in group arithmetic");
  return r;
}

inline std::int64_t checked_neg(std::int64_t x) { return checked_sub(0, x); }

/// Non-negative remainder, for both parities and cyclic positions.
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

enum class Order { One, Two, Infinite };

inline std::string to_string(Order o) {
  switch (o) {
    case Order::One: return "1";
    case Order::Two: return "2";
    case Order::Infinite: return "infinite";
  }
  return "?";
}

/// Element (ab)^trans * a^refl of the infinite dihedral group.
struct Dihedral {
  std::int64_t trans = 0;
  std::uint8_t refl = 0;

  static constexpr Dihedral identity() { return {0, 0}; }
  static constexpr Dihedral a() { return {0, 1}; }
  static constexpr Dihedral b() { return {-1, 1}; }
  static constexpr Dihedral ab() { return {1, 0}; }

  constexpr bool is_identity() const { return trans == 0 && refl == 0; }

  friend constexpr bool operator==(const Dihedral&, const Dihedral&) = default;
};

/// (n1, e1)(n2, e2) = (n1 + (-1)^e1 n2, e1 xor e2), since a (ab)^n a = (ab)^-n.
inline Dihedral d_mul(const Dihedral& x, const Dihedral& y) {
  const std::int64_t t = x.refl ? checked_sub(x.trans, y.trans) : checked_add(x.trans, y.trans);
  return {t, static_cast<std::uint8_t>(x.refl ^ y.refl)};
}

inline Dihedral d_inv(const Dihedral& x) {
  if (x.refl) return x;
  return {checked_neg(x.trans), 0};
}

inline Dihedral operator*(const Dihedral& x, const Dihedral& y) { return d_mul(x, y); }

inline Order d_order(const Dihedral& x) {
  if (x.is_identity()) return Order::One;
  if (x.refl) return Order::Two;
  return Order::Infinite;
}

/// Parities of the number of a's and b's in any word representing the element.
struct PhiPair {
  int a = 0;
  int b = 0;
  friend constexpr bool operator==(const PhiPair&, const PhiPair&) = default;
};

/// (phi_a, phi_b): D -> C2 x C2. (ab)^n a^e contains n + e letters a and n letters b.
inline PhiPair phi(const Dihedral& x) {
  const int n = static_cast<int>(mod_floor(x.trans, 2));
  return {(n + x.refl) % 2, n};
}

inline bool in_derived(const Dihedral& x) { return x.refl == 0 && mod_floor(x.trans, 2) == 0; }

/// "e", "a", "(ab)^n" or "(ab)^n a".
inline std::string to_string(const Dihedral& x) {
  if (x.trans == 0) return x.refl ? "a" : "e";
  std::string s = "(ab)^" + std::to_string(x.trans);
  if (x.refl) s += " a";
  return s;
}

}  // namespace fcwreath
