#pragma once

// Words over the generators s, t of G and their inverses.

#include <cstdint>
#include <string>
#include <vector>

#include "fcwreath/dihedral.hpp"

namespace fcwreath {

/// Alphabet order s < s^-1 < t < t^-1 is the canonical lexicographic order.
enum class Letter : std::uint8_t { S = 0, SInv = 1, T = 2, TInv = 3 };

inline constexpr Letter kAlphabet[4] = {Letter::S, Letter::SInv, Letter::T, Letter::TInv};

constexpr Letter inverse(Letter l) { return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u); }
constexpr bool is_s(Letter l) { return l == Letter::S || l == Letter::SInv; }
constexpr int sign(Letter l) { return (static_cast<std::uint8_t>(l) & 1u) ? -1 : 1; }

inline const char* to_string(Letter l) {
  switch (l) {
    case Letter::S: return "s";
    case Letter::SInv: return "s^-1";
    case Letter::T: return "t";
    case Letter::TInv: return "t^-1";
  }
  return "?";
}

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word s() { return Word{Letter::S}; }
  static Word t() { return Word{Letter::T}; }

  /// t^i s t^-i
  static Word s_at(std::int64_t i) { return t_pow(i) * s() * t_pow(-i); }

  static Word t_pow(std::int64_t m) {
    Word w;
    const Letter l = m >= 0 ? Letter::T : Letter::TInv;
    for (std::int64_t j = 0; j < (m >= 0 ? m : -m); ++j) w.letters_.push_back(l);
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(Letter l) { letters_.push_back(l); }

  Word inverse() const {
    Word r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(fcwreath::inverse(*it));
    return r;
  }

  Word pow(std::int64_t k) const {
    const Word base = k >= 0 ? *this : inverse();
    Word r;
    for (std::int64_t j = 0; j < (k >= 0 ? k : -k); ++j) r.letters_.insert(r.letters_.end(), base.letters_.begin(), base.letters_.end());
    return r;
  }

  friend Word operator*(Word x, const Word& y) {
    x.letters_.insert(x.letters_.end(), y.letters_.begin(), y.letters_.end());
    return x;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// [x, y] = x y x^-1 y^-1
inline Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

/// Free reduction: cancels adjacent inverse pairs until none remain.
inline Word reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

inline bool is_reduced(const Word& w) {
  const auto& ls = w.letters();
  for (std::size_t i = 1; i < ls.size(); ++i)
    if (ls[i] == inverse(ls[i - 1])) return false;
  return true;
}

/// Space separated letters, "e" for the empty word. Parses back to the same word.
inline std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w.letters()[i]);
  }
  return s;
}

}  // namespace fcwreath
