#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fcwreath/parse.hpp"
#include "fcwreath/verify.hpp"
#include "test_support.hpp"

using namespace fcwreath;

namespace {

const GroupParams kPaper = GroupParams::paper();
const GroupParams kEven(SeqRule::affine(2, 0), SeqRule::affine(4, 0), "even");

}  // namespace

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_is_identity(Word(), kPaper));
  EXPECT_FALSE(oracle_is_identity(parse_word("[s, s_1]"), kPaper));
  EXPECT_TRUE(oracle_is_identity(parse_word("[[s, s_1], [s, s_2]]"), kPaper));
  EXPECT_FALSE(oracle_is_identity(parse_word("s^2"), kPaper));
  EXPECT_FALSE(oracle_is_identity(parse_word("t"), kPaper));
  EXPECT_THROW(oracle_is_identity(Word(), kPaper, 0), ParamError);
}

TEST(Oracle, AgreesOnAllShortWords) {
  for (const Word& w : testkit::all_reduced_words(6)) {
    ASSERT_EQ(is_identity(w, kPaper), oracle_is_identity(w, kPaper, 10)) << to_string(w);
    ASSERT_EQ(is_identity(w, kEven), oracle_is_identity(w, kEven, 10)) << to_string(w);
  }
}

TEST(Checks, BasisLemmaPassesForPaperPreset) {
  const Report r = check_basis_lemma(kPaper, 12, 12);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.name, "basis");
}

TEST(Checks, BasisLemmaItemInstances) {
  // n = 5, i = 2: d_5 - 1 = 5 > 2, trivial.
  EXPECT_TRUE(project_word(kPaper.layer(5), commutator(Word::s(), Word::s_at(2))).is_identity());
  // n = 1, i = 1: (ba)^2 at position 2.
  const LayerElement x = project_word(kPaper.layer(1), commutator(Word::s(), Word::s_at(1)));
  EXPECT_EQ(x.at_position(2), (Dihedral{-2, 0}));
  EXPECT_EQ(x.support_size(), 1);
}

TEST(Checks, BasisLemmaHoldsForOtherValidParameters) {
  // The lemma only uses k_n >= 2 d_n.
  EXPECT_TRUE(check_basis_lemma(kEven, 10, 20).pass());
  const GroupParams tight(SeqRule::list({2, 3, 7, 8}), SeqRule::list({4, 6, 14, 16}));
  EXPECT_TRUE(check_basis_lemma(tight, 4, 10).pass());
}

TEST(Checks, CenterPasses) {
  EXPECT_TRUE(check_center(kPaper, 20).pass());
  EXPECT_EQ(pi0(commutator(Word::s().pow(2), Word::t())), 0);
  EXPECT_TRUE(project_word(kPaper.layer(3), commutator(Word::s().pow(2), Word::s())).is_identity());
}

TEST(Checks, QuotientRelationsPass) {
  EXPECT_TRUE(check_quotient_relations(kPaper, 10).pass());
  EXPECT_TRUE(quotient_image(Word::s().pow(2)).is_identity());
  EXPECT_EQ(quotient_image(Word::s_at(3)), LampElement::dirac(3));
}

TEST(Checks, ReportSerialization) {
  Report r{"torsion", "params=x,len<=6", {}};
  std::ostringstream os;
  write_report(os, r);
  EXPECT_EQ(os.str(), "CHECK torsion RANGE params=x,len<=6 VERDICT pass\n");
  r.witnesses.push_back(parse_word("s t"));
  os.str("");
  write_report(os, r);
  EXPECT_EQ(os.str(), "CHECK torsion RANGE params=x,len<=6 VERDICT fail\nWITNESS s t\n");
}

TEST(TorsionSearch, PaperPresetShortWords) {
  TorsionSearchOptions opt;
  opt.max_len = 8;
  EXPECT_TRUE(torsion_search(kPaper, opt).pass());
}

TEST(TorsionSearch, EvenPresetFindsInvolutions) {
  TorsionSearchOptions opt;
  opt.max_len = 6;
  const Report r = torsion_search(kEven, opt);
  ASSERT_FALSE(r.pass());
  const Word expected = parse_word("s t^2 s^-1 t^-2");
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), expected), r.witnesses.end());
  for (const Word& w : r.witnesses) {
    EXPECT_TRUE(oracle_is_identity(w * w, kEven, 10));
    EXPECT_FALSE(oracle_is_identity(w, kEven, 10));
    EXPECT_TRUE(is_reduced(w));
    EXPECT_NE(w.letters().back(), inverse(w.letters().front()));
  }
}

// Cross-check against plain enumeration of every cyclically reduced word.
TEST(TorsionSearch, MatchesBruteForce) {
  std::vector<Word> brute;
  for (const Word& w : testkit::all_reduced_words(6)) {
    if (w.empty() || (w.size() > 1 && w.letters().back() == inverse(w.letters().front()))) continue;
    if (order(w, kEven) == Order::Two) brute.push_back(w);
  }
  TorsionSearchOptions opt;
  opt.max_len = 6;
  EXPECT_EQ(torsion_search(kEven, opt).witnesses, brute);
}

TEST(TorsionSearch, IndependentOfAlphabetOrderAndThreads) {
  TorsionSearchOptions base;
  base.max_len = 7;
  const Report ref = torsion_search(kEven, base);
  std::array<Letter, 4> alphabet = {Letter::S, Letter::SInv, Letter::T, Letter::TInv};
  std::sort(alphabet.begin(), alphabet.end());
  int tried = 0;
  do {
    TorsionSearchOptions opt = base;
    opt.alphabet = alphabet;
    opt.threads = 1 + static_cast<unsigned>(tried % 4);
    EXPECT_EQ(torsion_search(kEven, opt).witnesses, ref.witnesses);
    ++tried;
  } while (std::next_permutation(alphabet.begin(), alphabet.end()));
  EXPECT_EQ(tried, 24);
}

TEST(TorsionSearch, RejectsBadLength) {
  TorsionSearchOptions opt;
  opt.max_len = 0;
  EXPECT_THROW(torsion_search(kPaper, opt), ParamError);
}
