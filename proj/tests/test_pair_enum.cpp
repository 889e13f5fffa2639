#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stlat/constructors.hpp"
#include "stlat/pair_enum.hpp"
#include "stlat/st_props.hpp"

using namespace stlat;

namespace {

ElementSet set_of(const Lattice& l, std::initializer_list<const char*> labels) {
  ElementSet s;
  for (const char* lab : labels) s.add(l.index_of(lab));
  return s;
}

bool same_pairs(const MaximalPairReport& a, const MaximalPairReport& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (a.pairs[i].s != b.pairs[i].s || a.pairs[i].t != b.pairs[i].t) return false;
  return true;
}

}  // namespace

TEST_CASE("max_s_for_t on the pentagon") {
  Lattice l = n5();
  // T = {w}: singletons always distribute, so S(L,T) tops out at L.
  CHECK(s_lattice_top(l, set_of(l, {"w"})) == l.all());
  // Problem1 universe excludes 0, 1, and T itself.
  ElementSet s = max_s_for_t(l, set_of(l, {"w"}), MaximalityMode::Problem1);
  CHECK(s == set_of(l, {"u", "v"}));
  // T = {u, w}: v fails (v is below neither and u,w incomparable;
  // v | (u & w) = v but (v | u) & (v | w) = u).
  ElementSet s2 = max_s_for_t(l, set_of(l, {"u", "w"}), MaximalityMode::Problem1);
  CHECK(!s2.contains(l.index_of("v")));
}

TEST_CASE("S(L,T) is closed under union and intersection") {
  for (const Lattice& l : {n5(), m3(), fig_counterexample()}) {
    const std::uint64_t nt = std::uint64_t{1} << l.size();
    for (std::uint64_t tb = 0; tb < nt; tb += 3) {  // sample Ts
      ElementSet t{tb};
      ElementSet top = s_lattice_top(l, t);
      // every subset of top works; anything outside top fails
      for (std::size_t x = 0; x < l.size(); ++x) {
        if (top.contains(x))
          CHECK(st_distributive(l, ElementSet::single(x), t));
        else
          CHECK(!st_distributive(l, ElementSet::single(x), t));
      }
      CHECK(st_distributive(l, top, t));
    }
  }
}

TEST_CASE("antimonotonicity: growing T shrinks the maximum S") {
  Lattice l = fig_counterexample();
  const std::uint64_t nt = std::uint64_t{1} << l.size();
  for (std::uint64_t tb = 0; tb < nt; ++tb)
    for (std::size_t x = 0; x < l.size(); ++x) {
      ElementSet t{tb};
      if (t.contains(x)) continue;
      ElementSet bigger = t | ElementSet::single(x);
      CHECK(s_lattice_top(l, bigger).subset_of(s_lattice_top(l, t)));
    }
}

TEST_CASE("problem1 enumeration on the pentagon") {
  Lattice l = n5();
  MaximalPairReport rep = enumerate_maximal_pairs(l, MaximalityMode::Problem1, 1, "n5");
  // Every reported pair is disjoint, nonempty, inside L*, and valid.
  for (const auto& p : rep.pairs) {
    CHECK(!p.s.is_empty());
    CHECK(!p.t.is_empty());
    CHECK((p.s & p.t).is_empty());
    CHECK(p.s.subset_of(l.star()));
    CHECK(p.t.subset_of(l.star()));
    CHECK(st_distributive(l, p.s, p.t));
  }
  // No pair dominates another.
  for (std::size_t i = 0; i < rep.pairs.size(); ++i)
    for (std::size_t j = 0; j < rep.pairs.size(); ++j)
      if (i != j)
        CHECK(!(rep.pairs[i].s.subset_of(rep.pairs[j].s) &&
                rep.pairs[i].t.subset_of(rep.pairs[j].t)));
}

TEST_CASE("definition4 enumeration keeps the worked maximal pair") {
  Lattice l = n5();
  MaximalPairReport rep = enumerate_maximal_pairs(l, MaximalityMode::Definition4, 1, "n5");
  ElementSet s = set_of(l, {"0", "u", "v", "w"});
  ElementSet t = set_of(l, {"0", "1", "w"});
  bool found = false;
  for (const auto& p : rep.pairs) found = found || (p.s == s && p.t == t);
  CHECK(found);
  // S' = {0,u,v,w} cannot grow (only 1 is missing), and adding u or v
  // to T' breaks distributivity.
  CHECK(!st_distributive(l, s, t | ElementSet::single(l.index_of("u"))));
  CHECK(!st_distributive(l, s, t | ElementSet::single(l.index_of("v"))));
}

TEST_CASE("oracle equivalence on the small zoo, both modes") {
  std::vector<std::pair<std::string, Lattice>> zoo;
  zoo.emplace_back("n5", n5());
  zoo.emplace_back("m3", m3());
  zoo.emplace_back("fig", fig_counterexample());
  zoo.emplace_back("mnn:3", std::get<0>(m_nn(3)));
  zoo.emplace_back("chain:5", chain(5));
  zoo.emplace_back("mn:4", m_n(4));
  for (const auto& [id, l] : zoo) {
    for (MaximalityMode mode : {MaximalityMode::Problem1, MaximalityMode::Definition4}) {
      if (mode == MaximalityMode::Definition4 && l.size() > 12) continue;
      CAPTURE(id);
      MaximalPairReport fast = enumerate_maximal_pairs(l, mode, 2, id);
      MaximalPairReport slow = brute_force_maximal_pairs(l, mode, id);
      CHECK(same_pairs(fast, slow));
    }
  }
}

TEST_CASE("thread count does not change the result") {
  Lattice l = std::get<0>(m_nn(4));
  MaximalPairReport one = enumerate_maximal_pairs(l, MaximalityMode::Problem1, 1);
  for (unsigned k : {2u, 3u, 8u}) {
    MaximalPairReport many = enumerate_maximal_pairs(l, MaximalityMode::Problem1, k);
    CHECK(same_pairs(one, many));
  }
}

TEST_CASE("canonical report order") {
  MaximalPairReport rep = enumerate_maximal_pairs(std::get<0>(m_nn(3)),
                                                  MaximalityMode::Problem1, 1);
  for (std::size_t i = 1; i < rep.pairs.size(); ++i)
    CHECK(detail::pair_less(rep.pairs[i - 1], rep.pairs[i]));
}

TEST_CASE("stats bookkeeping") {
  MaximalPairReport rep = enumerate_maximal_pairs(std::get<0>(m_nn(3)),
                                                  MaximalityMode::Problem1, 1);
  CHECK(rep.stats.subsets_scanned == (std::uint64_t{1} << 6) - 1);  // nonempty T over L*
  CHECK(rep.stats.triples_checked > 0);
  CHECK(rep.stats.triples_filtered > 0);
  std::size_t by_size = 0;
  for (const auto& [k, v] : rep.stats.pairs_by_t_size) by_size += v;
  CHECK(by_size == rep.pairs.size());
}

TEST_CASE("size guards") {
  // |L*| = 14 for n = 7 exceeds the oracle's 12-element cap.
  CHECK_THROWS_AS(brute_force_maximal_pairs(std::get<0>(m_nn(7)), MaximalityMode::Problem1),
                  too_large);
  CHECK_THROWS_AS(brute_force_maximal_pairs(std::get<0>(m_nn(7)), MaximalityMode::Definition4),
                  too_large);
}

TEST_CASE("gosper subset walker covers each size exactly once") {
  auto subs = detail::subsets_by_size(5, true, true);
  CHECK(subs.size() == 32);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    auto pc = [](std::uint64_t v) { return __builtin_popcountll(v); };
    CHECK(pc(subs[i - 1]) <= pc(subs[i]));
  }
  std::sort(subs.begin(), subs.end());
  for (std::uint64_t v = 0; v < 32; ++v) CHECK(subs[v] == v);
}
