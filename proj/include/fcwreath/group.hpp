#pragma once

// The group G = <s, t> inside Z x prod_n H_n.
//
// Elements are handled through words. A word is brought to the form
//   s_{i_1}^{e_1} ... s_{i_k}^{e_k} t^m,   s_i = t^i s t^-i,
// from which the projections are read off directly: pi_0 is the exponent
// sum, the image in C2 wr Z is (sum over each index of e_j mod 2, m), and
// pi_n is a product of the elements r_i of the layer group.
//
// The word problem is decided by the quotient image, pi_0, and the layers
// 1..B, where B is the support bound: beyond B every kernel element is
// trivial because the a-block and b-block of its layer projection cannot
// overlap.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcwreath/dihedral.hpp"
#include "fcwreath/lamplighter.hpp"
#include "fcwreath/layers.hpp"
#include "fcwreath/params.hpp"
#include "fcwreath/word.hpp"

namespace fcwreath {

struct SPower {
  std::int64_t index = 0;
  std::int64_t exponent = 0;
  friend bool operator==(const SPower&, const SPower&) = default;
};

/// s_{i_1}^{e_1} ... s_{i_k}^{e_k} t^m. Exponents stay in Z: pi_0 needs the
/// integer sum, the layers only the parities.
struct SWord {
  std::vector<SPower> pairs;
  std::int64_t m = 0;

  std::int64_t span() const {
    if (pairs.empty()) return 0;
    auto [lo, hi] = std::minmax_element(pairs.begin(), pairs.end(),
                                        [](const SPower& x, const SPower& y) { return x.index < y.index; });
    return checked_sub(hi->index, lo->index);
  }

  std::int64_t exponent_sum() const {
    std::int64_t sum = 0;
    for (const auto& p : pairs) sum = checked_add(sum, p.exponent);
    return sum;
  }

  friend bool operator==(const SWord&, const SWord&) = default;
};

/// "s_i^e ... t^m"
inline std::string to_string(const SWord& sw) {
  std::string s;
  for (const auto& p : sw.pairs) {
    if (!s.empty()) s += ' ';
    s += "s_" + std::to_string(p.index) + "^" + std::to_string(p.exponent);
  }
  if (!s.empty()) s += ' ';
  return s + "t^" + std::to_string(sw.m);
}

/// Scans the reduced word keeping the running t-exponent c; each s^{+-1}
/// read at offset c contributes s_c^{+-1}. Adjacent powers of the same s_i
/// are merged.
inline SWord normal_form(const Word& w) {
  SWord sw;
  std::int64_t c = 0;
  const Word reduced = reduce(w);
  for (Letter l : reduced.letters()) {
    if (!is_s(l)) {
      c = checked_add(c, sign(l));
      continue;
    }
    if (!sw.pairs.empty() && sw.pairs.back().index == c) {
      sw.pairs.back().exponent = checked_add(sw.pairs.back().exponent, sign(l));
      if (sw.pairs.back().exponent == 0) sw.pairs.pop_back();
    } else {
      sw.pairs.push_back({c, sign(l)});
    }
  }
  sw.m = c;
  return sw;
}

/// Coordinate of the element on the Z factor: the s-exponent sum.
inline std::int64_t pi0(const Word& w) {
  std::int64_t sum = 0;
  for (Letter l : w.letters())
    if (is_s(l)) sum = checked_add(sum, sign(l));
  return sum;
}

inline LampElement quotient_image(const SWord& sw) {
  std::vector<std::int64_t> odd;
  for (const auto& p : sw.pairs)
    if (mod_floor(p.exponent, 2) == 1) odd.push_back(p.index);
  return LampElement(std::move(odd), sw.m);
}

inline LampElement quotient_image(const Word& w) { return quotient_image(normal_form(w)); }

/// pi_n of the element r_{i_1}^{e_1} ... r_{i_k}^{e_k} t^m, coordinate by
/// coordinate: r_i puts a at index i and b at index d - 1 + i.
inline LayerElement project_sword(const LayerParams& p, const SWord& sw) {
  p.validate();
  LayerElement x = LayerElement::identity(p);
  for (const auto& pw : sw.pairs) {
    if (mod_floor(pw.exponent, 2) == 0) continue;
    Dihedral& lo = x.at(pw.index);
    lo = d_mul(lo, Dihedral::a());
    Dihedral& hi = x.at(checked_add(pw.index, p.d - 1));
    hi = d_mul(hi, Dihedral::b());
  }
  x.set_shift(mod_floor(sw.m, p.k));
  return x;
}

/// Layers beyond this index are trivial for a kernel element with this normal form.
inline std::int64_t support_bound(const SWord& sw, const GroupParams& gp) { return gp.support_bound(sw.span()); }

inline bool is_identity(const SWord& sw, const GroupParams& gp) {
  if (!quotient_image(sw).is_identity()) return false;
  if (sw.exponent_sum() != 0) return false;
  const std::int64_t bound = support_bound(sw, gp);
  for (std::int64_t n = 1; n <= bound; ++n)
    if (!project_sword(gp.layer(n), sw).is_identity()) return false;
  return true;
}

inline bool is_identity(const Word& w, const GroupParams& gp) { return is_identity(normal_form(w), gp); }

/// Orders in G are 1, 2 or infinite: the image in C2 wr Z has order 1, 2 or
/// infinity, and the kernel FC(G) is free abelian.
inline Order order(const Word& w, const GroupParams& gp) {
  const Word r = reduce(w);
  const LampElement q = quotient_image(r);
  switch (l_order(q)) {
    case Order::Infinite: return Order::Infinite;
    case Order::One: return is_identity(r, gp) ? Order::One : Order::Infinite;
    case Order::Two: return is_identity(r * r, gp) ? Order::Two : Order::Infinite;
  }
  return Order::Infinite;
}

/// Coordinates of an element of FC(G) = <sigma_0^2> + sum_n (D')^{k_n}.
struct FCDecomposition {
  std::int64_t z = 0;
  /// Nontrivial layer vectors by layer index; every coordinate lies in D'.
  std::map<std::int64_t, std::vector<Dihedral>> layers;

  friend bool operator==(const FCDecomposition&, const FCDecomposition&) = default;
};

inline std::optional<FCDecomposition> fc_membership(const Word& w, const GroupParams& gp) {
  const SWord sw = normal_form(w);
  if (!quotient_image(sw).is_identity()) return std::nullopt;
  FCDecomposition fc;
  fc.z = sw.exponent_sum();
  if (mod_floor(fc.z, 2) != 0) throw std::logic_error("FC member with odd pi_0: " + to_string(w));
  const std::int64_t bound = support_bound(sw, gp);
  for (std::int64_t n = 1; n <= bound; ++n) {
    LayerElement x = project_sword(gp.layer(n), sw);
    if (x.is_identity()) continue;
    if (x.shift() != 0) throw std::logic_error("FC member with nonzero layer shift: " + to_string(w));
    for (const auto& c : x.coords())
      if (!in_derived(c)) throw std::logic_error("FC member coordinate outside D': " + to_string(w));
    fc.layers.emplace(n, x.coords());
  }
  return fc;
}

}  // namespace fcwreath
