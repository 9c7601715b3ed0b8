#pragma once

// Generators and brute-force oracles shared by the unit and acceptance
// suites. Nothing here calls into the code path it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fcwreath/fcwreath.hpp"

namespace fcwreath::testkit {

/// Words over {a, b} reduced with a^2 = b^2 = 1 by cancelling equal
/// neighbours. The result alternates, and alternating words are in bijection
/// with D: a-initial of length L is (ab)^{L/2} a^{L mod 2}, b-initial is
/// (ab)^{-ceil(L/2)} a^{L mod 2}.
inline std::string reduce_ab(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

inline Dihedral ab_word_to_normal_form(const std::string& reduced) {
  const auto len = static_cast<std::int64_t>(reduced.size());
  if (len == 0) return Dihedral::identity();
  const auto refl = static_cast<std::uint8_t>(len % 2);
  if (reduced[0] == 'a') return {len / 2, refl};
  return {-((len + 1) / 2), refl};
}

inline std::vector<std::string> all_ab_words(int max_len) {
  std::vector<std::string> out{""};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (static_cast<int>(out[start].size()) == max_len) continue;
    out.push_back(out[start] + 'a');
    out.push_back(out[start] + 'b');
  }
  return out;
}

/// All freely reduced words of length <= max_len, shortlex.
inline std::vector<Word> all_reduced_words(int max_len) {
  std::vector<Word> out{Word()};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (static_cast<int>(out[start].size()) == max_len) continue;
    for (Letter l : kAlphabet) {
      if (!out[start].empty() && out[start].letters().back() == inverse(l)) continue;
      Word w = out[start];
      w.push_back(l);
      out.push_back(std::move(w));
    }
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> ls(len);
  for (auto& l : ls) l = kAlphabet[pick(rng)];
  return Word(std::move(ls));
}

inline Word random_word_upto(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return random_word(rng, len(rng));
}

inline Dihedral random_dihedral(std::mt19937_64& rng, std::int64_t range = 1000) {
  std::uniform_int_distribution<std::int64_t> t(-range, range);
  std::uniform_int_distribution<int> e(0, 1);
  return {t(rng), static_cast<std::uint8_t>(e(rng))};
}

/// s_i^{+-1}
inline Word signed_s(std::int64_t i, bool inv) {
  const Word si = Word::s_at(i);
  return inv ? si.inverse() : si;
}

/// A product of conjugated commutators [s_i^{+-1}, s_j^{+-1}] and squares
/// s_i^{+-2}, all indices in [base, base + span]. Lies in the kernel of the
/// map to C2 wr Z.
inline Word random_kernel_element(std::mt19937_64& rng, std::int64_t span, int max_terms = 4) {
  std::uniform_int_distribution<std::int64_t> base_d(-6, 6), idx(0, span);
  std::uniform_int_distribution<int> coin(0, 1), terms_d(1, max_terms), kind(0, 4), conj_len(0, 2);
  const std::int64_t base = base_d(rng);
  Word w;
  const int terms = terms_d(rng);
  for (int j = 0; j < terms; ++j) {
    Word term;
    if (kind(rng) == 0) {
      term = signed_s(base + idx(rng), coin(rng)).pow(2);
    } else {
      term = commutator(signed_s(base + idx(rng), coin(rng)), signed_s(base + idx(rng), coin(rng)));
    }
    Word conj;
    for (int c = conj_len(rng); c > 0; --c) conj = conj * signed_s(base + idx(rng), coin(rng));
    w = w * conj * term * conj.inverse();
  }
  return w;
}

/// A random word pushed into the kernel of G -> C2 wr Z by cancelling its
/// t-exponent and switching off every lit lamp. The lamps are read off by
/// a running offset scan, independently of normal_form.
inline Word random_fc_member(std::mt19937_64& rng, std::size_t max_len = 14) {
  Word w = random_word_upto(rng, max_len);
  std::int64_t offset = 0;
  std::vector<std::int64_t> parity_positions;
  for (Letter l : w.letters()) {
    if (is_s(l))
      parity_positions.push_back(offset);
    else
      offset += sign(l);
  }
  w = w * Word::t_pow(-offset);
  const LampElement lamps(parity_positions, 0);
  for (auto p : lamps.config()) w = w * Word::s_at(p);
  return w;
}

}  // namespace fcwreath::testkit
