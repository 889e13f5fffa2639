#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stlat/mnn_classify.hpp"

using namespace stlat;

namespace {

ElementSet set_of(const Lattice& l, std::initializer_list<const char*> labels) {
  ElementSet s;
  for (const char* lab : labels) s.add(l.index_of(lab));
  return s;
}

}  // namespace

TEST_CASE("expected counts follow the closed formulas") {
  for (std::size_t n : {3, 4, 5, 6, 9}) {
    TypeCounts c = expected_counts(n);
    CHECK(c.per_type[0] == 4 * n - 1);
    CHECK(c.per_type[1] == 2 * n - 2);
    CHECK(c.per_type[2] == (n - 1) * (n - 1));
    CHECK(c.per_type[3] == 2 * n - 2);
    CHECK(c.per_type[4] == 2 * n - 2);
    CHECK(c.total == n * n + 8 * n - 6);
  }
  CHECK(expected_counts(3).total == 27);
  CHECK(expected_counts(4).total == 42);
  CHECK(expected_counts(5).total == 59);
  CHECK(expected_counts(6).total == 78);
}

TEST_CASE("type tags") {
  CHECK(std::string(pair_type_tag(PairType::TChain)) == "t-chain");
  CHECK(std::string(pair_type_tag(PairType::SLink)) == "s-link");
  CHECK(std::string(pair_type_tag(PairType::S2Links)) == "s-2-links");
  CHECK(std::string(pair_type_tag(PairType::SLevel)) == "s-level");
  CHECK(std::string(pair_type_tag(PairType::SLevelMinusLink)) == "s-level-minus-link");
  CHECK(std::string(pair_type_tag(PairType::Unclassified)) == "none");
}

TEST_CASE("template instances for n = 3") {
  auto [l, lay] = m_nn(3);
  auto templates = detail::mnn_templates(l, lay);
  CHECK(templates.size() == expected_counts(3).total);
  // every template instance really is a maximal-pair candidate: valid
  // and with the exact maximum S for its T
  for (const auto& [pair, type] : templates) {
    CHECK(st_distributive(l, pair.s, pair.t));
    CHECK(max_s_for_t(l, pair.t, MaximalityMode::Problem1) == pair.s);
  }
  // no duplicates
  for (std::size_t i = 0; i < templates.size(); ++i)
    for (std::size_t j = i + 1; j < templates.size(); ++j)
      CHECK(!(templates[i].first.s == templates[j].first.s &&
              templates[i].first.t == templates[j].first.t));
}

TEST_CASE("classify_pair on hand-picked pairs of M_{3,3}") {
  auto [l, lay] = m_nn(3);
  CHECK(classify_pair(l, lay, set_of(l, {"a2", "a3", "b1", "b2", "b3"}), set_of(l, {"a1"})) ==
        PairType::TChain);
  CHECK(classify_pair(l, lay, set_of(l, {"b1"}), set_of(l, {"a1", "a2", "a3", "b2"})) ==
        PairType::SLink);
  CHECK(classify_pair(l, lay, set_of(l, {"a3", "b1"}), set_of(l, {"a1", "b2"})) ==
        PairType::S2Links);
  CHECK(classify_pair(l, lay, set_of(l, {"b1", "b2", "b3"}), set_of(l, {"a1", "a3"})) ==
        PairType::SLevel);
  CHECK(classify_pair(l, lay, set_of(l, {"b2", "b3"}), set_of(l, {"a1", "a3", "b1"})) ==
        PairType::SLevelMinusLink);
  // not a maximal pair at all
  CHECK(classify_pair(l, lay, set_of(l, {"a1"}), set_of(l, {"a2"})) == PairType::Unclassified);
  CHECK(classify_pair(l, lay, ElementSet::empty(), ElementSet::empty()) ==
        PairType::Unclassified);
}

TEST_CASE("ST-breaking antichains") {
  auto [l, lay] = m_nn(3);
  // S = {a1}, T = {a2, a3}: x = a1, y = a2, z = a3 is a 3-antichain
  // with one element in S and two in T.
  ElementSet s = set_of(l, {"a1"}), t = set_of(l, {"a2", "a3"});
  auto breaks = st_breaking_antichains(l, s, t);
  CHECK(breaks.size() == 1);
  CHECK(breaking_antichain_blocks(l, lay, s, t));
  CHECK(!st_distributive(l, s, t));
  // T-chain pairs have no breaking antichain
  ElementSet s2 = set_of(l, {"a2", "a3", "b1", "b2", "b3"}), t2 = set_of(l, {"a1"});
  CHECK(st_breaking_antichains(l, s2, t2).empty());
  CHECK(st_distributive(l, s2, t2));
}

TEST_CASE("breaking antichain iff not ST-distributive, exhaustive over L* of M_{3,3}") {
  auto [l, lay] = m_nn(3);
  auto star_members = l.star().members();
  const std::uint64_t n = std::uint64_t{1} << star_members.size();
  auto scatter = [&](std::uint64_t bits) {
    ElementSet s;
    for (std::size_t k = 0; k < star_members.size(); ++k)
      if ((bits >> k) & 1) s.add(star_members[k]);
    return s;
  };
  std::size_t checked = 0;
  for (std::uint64_t sb = 0; sb < n; ++sb)
    for (std::uint64_t tb = 0; tb < n; ++tb) {
      ElementSet s = scatter(sb), t = scatter(tb);
      bool broken = !st_breaking_antichains(l, s, t).empty();
      CHECK(broken == !st_distributive(l, s, t));
      ++checked;
    }
  CHECK(checked == 64 * 64);  // 2^6 x 2^6 subset pairs of the 6-element L*
}

TEST_CASE("T-restriction lemma") {
  auto [l, lay] = m_nn(3);
  // at least 2 from each level -> excluded
  CHECK(!t_restriction_holds(lay, set_of(l, {"a1", "a2", "b2", "b3"})));
  CHECK(t_restriction_holds(lay, set_of(l, {"a1", "a2", "b1"})));
  CHECK(t_restriction_holds(lay, set_of(l, {"b1", "b2", "b3"})));
  // and every enumerated maximal pair satisfies it
  MaximalPairReport rep = enumerate_maximal_pairs(l, MaximalityMode::Problem1, 1);
  for (const auto& p : rep.pairs) CHECK(t_restriction_holds(lay, p.t));
}

TEST_CASE("full characterization for n = 3 and 4") {
  for (std::size_t n : {3, 4}) {
    CharacterizationReport rep = verify_characterization(n, 2);
    CHECK(rep.ok());
    CHECK(rep.unclassified == 0);
    CHECK(rep.counts_match);
    CHECK(rep.every_template_seen_once);
    CHECK(rep.t_restriction_ok);
    CHECK(rep.enumerated.total == expected_counts(n).total);
  }
}
