#pragma once

// Desk-scale checks of the structural lemmas, an independent identity
// oracle, and the exhaustive torsion search.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fcwreath/group.hpp"

namespace fcwreath {

struct Report {
  std::string name;
  std::string range;
  std::vector<Word> witnesses;

  bool pass() const { return witnesses.empty(); }
};

/// CHECK <name> RANGE <range> VERDICT <pass|fail>, then one WITNESS line each.
inline void write_report(std::ostream& os, const Report& r) {
  os << "CHECK " << r.name << " RANGE " << r.range << " VERDICT " << (r.pass() ? "pass" : "fail") << '\n';
  for (const auto& w : r.witnesses) os << "WITNESS " << to_string(w) << '\n';
}

/// Evaluates the word letter by letter in Z x H_1 x ... x H_{B+extra} using
/// the generic semidirect product law, with no normal form involved. The
/// span that determines B is read from the raw word.
inline bool oracle_is_identity(const Word& w, const GroupParams& gp, std::int64_t extra = 10) {
  if (extra < 1) throw ParamError("oracle needs extra >= 1");
  std::int64_t offset = 0, lo = 0, hi = 0, z = 0;
  bool seen = false;
  for (Letter l : w.letters()) {
    if (is_s(l)) {
      z = checked_add(z, sign(l));
      lo = seen ? std::min(lo, offset) : offset;
      hi = seen ? std::max(hi, offset) : offset;
      seen = true;
    } else {
      offset = checked_add(offset, sign(l));
    }
  }
  if (z != 0) return false;
  std::int64_t layers = checked_add(gp.support_bound(hi - lo), extra);
  if (auto ml = gp.max_layer()) layers = std::min(layers, *ml);
  for (std::int64_t n = 1; n <= layers; ++n) {
    const LayerParams p = gp.layer(n);
    const LayerElement gen_s = sigma(p);
    const LayerElement gen_t = LayerElement::rotation(p);
    const LayerElement gen_t_inv = h_inv(gen_t);
    LayerElement x = LayerElement::identity(p);
    for (Letter l : w.letters()) {
      switch (l) {
        case Letter::S:
        case Letter::SInv: x = h_mul(x, gen_s); break;
        case Letter::T: x = h_mul(x, gen_t); break;
        case Letter::TInv: x = h_mul(x, gen_t_inv); break;
      }
    }
    if (!x.is_identity()) return false;
  }
  return true;
}

inline std::string range_string(const GroupParams& gp, const std::string& extra) {
  return "params=" + gp.describe() + "," + extra;
}

/// For n <= n_max and 0 <= i <= i_max, pi_n([s, s_i]) has all coordinates in
/// D'; it equals (ba)^2 at position d_n alone when d_n - 1 = i; and it is
/// trivial when d_n - 1 > i.
inline Report check_basis_lemma(const GroupParams& gp, std::int64_t n_max, std::int64_t i_max) {
  Report r{"basis", range_string(gp, "n<=" + std::to_string(n_max) + ",0<=i<=" + std::to_string(i_max)), {}};
  const Dihedral ba_squared = d_mul(d_mul(Dihedral::b(), Dihedral::a()), d_mul(Dihedral::b(), Dihedral::a()));
  for (std::int64_t i = 0; i <= i_max; ++i) {
    const Word c = commutator(Word::s(), Word::s_at(i));
    bool ok = true;
    for (std::int64_t n = 1; n <= n_max && ok; ++n) {
      const LayerParams p = gp.layer(n);
      const LayerElement x = project_word(p, c);
      if (x.shift() != 0) ok = false;
      for (const auto& coord : x.coords()) ok = ok && in_derived(coord);
      if (p.d - 1 == i) {
        ok = ok && x.support_size() == 1 && x.at_position(p.d) == ba_squared;
      } else if (p.d - 1 > i) {
        ok = ok && x.is_identity();
      }
    }
    if (!ok) r.witnesses.push_back(c);
  }
  return r;
}

/// [s^2, s] and [s^2, t] project trivially to Z and to every H_n, n <= n_max.
inline Report check_center(const GroupParams& gp, std::int64_t n_max) {
  Report r{"center", range_string(gp, "n<=" + std::to_string(n_max)), {}};
  const Word s2 = Word::s().pow(2);
  for (const Word& x : {Word::s(), Word::t()}) {
    const Word c = commutator(s2, x);
    bool ok = pi0(c) == 0;
    for (std::int64_t n = 1; n <= n_max && ok; ++n) ok = project_word(gp.layer(n), c).is_identity();
    if (!ok) r.witnesses.push_back(c);
  }
  return r;
}

/// Relations and independence of the images of s_i in C2 wr Z, and FC
/// membership of s^2 and [s, s_i], for 0 <= i <= i_max.
inline Report check_quotient_relations(const GroupParams& gp, std::int64_t i_max) {
  Report r{"quotient", range_string(gp, "0<=i<=" + std::to_string(i_max)), {}};
  const Word s2 = Word::s().pow(2);
  if (!quotient_image(s2).is_identity() || !fc_membership(s2, gp)) r.witnesses.push_back(s2);
  std::vector<std::int64_t> earlier;
  for (std::int64_t i = 0; i <= i_max; ++i) {
    const Word c = commutator(Word::s(), Word::s_at(i));
    if (!quotient_image(c).is_identity() || !fc_membership(c, gp)) r.witnesses.push_back(c);

    // The subgroup generated by earlier Diracs is supported on `earlier`.
    const Word si = Word::s_at(i);
    const LampElement q = quotient_image(si);
    const bool independent = q.shift() == 0 && q.config().size() == 1 &&
                             std::find(earlier.begin(), earlier.end(), q.config()[0]) == earlier.end();
    if (!independent) r.witnesses.push_back(si);
    for (auto p : q.config()) earlier.push_back(p);
  }
  return r;
}

inline bool shortlex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x.letters() < y.letters();
}

struct TorsionSearchOptions {
  std::int64_t max_len = 10;
  unsigned threads = 1;
  /// Order in which letters are tried; the witness set does not depend on it.
  std::array<Letter, 4> alphabet = {Letter::S, Letter::SInv, Letter::T, Letter::TInv};
};

namespace detail {

template <class Visit>
void enumerate_reduced(Word& prefix, std::int64_t max_len, const std::array<Letter, 4>& alphabet, Visit&& visit) {
  visit(prefix);
  if (static_cast<std::int64_t>(prefix.size()) == max_len) return;
  for (Letter l : alphabet) {
    if (!prefix.empty() && prefix.letters().back() == inverse(l)) continue;
    Word next = prefix;
    next.push_back(l);
    enumerate_reduced(next, max_len, alphabet, visit);
  }
}

}  // namespace detail

/// Enumerates the cyclically reduced words of length 1..max_len and returns
/// those of order 2, each confirmed by the oracle. Words that are not
/// cyclically reduced are skipped: they are conjugate to a shorter word that
/// is enumerated. Witnesses are sorted shortlex.
inline Report torsion_search(const GroupParams& gp, const TorsionSearchOptions& opt = {}) {
  if (opt.max_len < 1) throw ParamError("max_len must be >= 1");
  Report r{"torsion", range_string(gp, "len<=" + std::to_string(opt.max_len)), {}};

  auto visit = [&](const Word& w, std::vector<Word>& out) {
    if (w.size() > 1 && w.letters().back() == inverse(w.letters().front())) return;
    if (order(w, gp) != Order::Two) return;
    if (!oracle_is_identity(w * w, gp, 10) || oracle_is_identity(w, gp, 10))
      throw std::logic_error("oracle rejects order-2 witness " + to_string(w));
    out.push_back(w);
  };

  // Partitions are the subtrees below each reduced two-letter prefix.
  std::vector<Word> roots;
  std::vector<std::vector<Word>> found(1);
  for (Letter x : opt.alphabet) {
    visit(Word{x}, found[0]);
    if (opt.max_len < 2) continue;
    for (Letter y : opt.alphabet)
      if (y != inverse(x)) roots.push_back(Word{x, y});
  }
  found.resize(roots.size() + 1);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t part; (part = next.fetch_add(1)) < roots.size();) {
      try {
        Word root = roots[part];
        detail::enumerate_reduced(root, opt.max_len, opt.alphabet,
                                  [&](const Word& w) { visit(w, found[part + 1]); });
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::clamp<unsigned>(opt.threads, 1u, static_cast<unsigned>(std::max<std::size_t>(roots.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  for (auto& f : found) r.witnesses.insert(r.witnesses.end(), f.begin(), f.end());
  std::sort(r.witnesses.begin(), r.witnesses.end(), shortlex_less);
  return r;
}

}  // namespace fcwreath
