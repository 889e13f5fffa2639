#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stlat/constructors.hpp"
#include "stlat/st_props.hpp"

using namespace stlat;

TEST_CASE("chain") {
  CHECK_THROWS_AS(chain(0), lattice_error);
  Lattice c1 = chain(1);
  CHECK(c1.size() == 1);
  CHECK(c1.bottom() == c1.top());
  Lattice c5 = chain(5);
  CHECK(c5.size() == 5);
  CHECK(c5.cover_pairs().size() == 4);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(c5.comparable(i, j));
  CHECK(c5.label(c5.bottom()) == "c1");
  CHECK(c5.label(c5.top()) == "c5");
}

TEST_CASE("m_n") {
  CHECK_THROWS_AS(m_n(0), lattice_error);
  CHECK(m_n(1).isomorphic_to(chain(3)));
  CHECK(m_n(2).size() == 4);
  CHECK(is_distributive(m_n(2)));
  for (std::size_t n : {3, 4, 7}) {
    Lattice l = m_n(n);
    CHECK(l.size() == n + 2);
    CHECK(l.cover_pairs().size() == 2 * n);
    CHECK(is_modular(l));
    CHECK(!is_distributive(l));
    // middle layer is an antichain
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (i != j)
          CHECK(!l.comparable(l.index_of("x" + std::to_string(i)),
                              l.index_of("x" + std::to_string(j))));
  }
  CHECK(m3().isomorphic_to(m_n(3)));
}

TEST_CASE("linear sum and product") {
  Lattice two = chain(2);
  CHECK(linear_sum(two, two).isomorphic_to(chain(4)));
  Lattice sq = product(two, two);
  CHECK(sq.size() == 4);
  CHECK(is_distributive(sq));
  CHECK(sq.isomorphic_to(m_n(2)));
  Lattice cube = product(sq, two);
  CHECK(cube.size() == 8);
  CHECK(is_distributive(cube));
  CHECK(product(chain(3), chain(4)).cover_pairs().size() == 2 * 4 + 3 * 3);
  CHECK_THROWS_AS(product(chain(9), chain(9)), lattice_error);  // 81 > 64
}

TEST_CASE("m_nn structure") {
  CHECK_THROWS_AS(m_nn(0), lattice_error);
  CHECK_THROWS_AS(m_nn(2), lattice_error);
  for (std::size_t n : {3, 4, 5}) {
    auto [l, lay] = m_nn(n);
    CHECK(l.size() == 2 * n + 2);
    // n covers below the a-level, n above the b-level, and 2n-1 distinct
    // cross covers (a_n under every b_j, each other a_i under b_1)
    CHECK(l.cover_pairs().size() == 4 * n - 1);
    CHECK(is_modular(l));
    CHECK(!is_distributive(l));
    CHECK(lay.n == n);
    CHECK(lay.link_a == l.index_of("a" + std::to_string(n)));
    CHECK(lay.link_b == l.index_of("b1"));
    CHECK(l.leq(lay.link_a, lay.link_b));
    // levels are n-antichains
    CHECK(lay.a_level().count() == n);
    CHECK(lay.b_level().count() == n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          CHECK(!l.comparable(lay.a_indices[i], lay.a_indices[j]));
          CHECK(!l.comparable(lay.b_indices[i], lay.b_indices[j]));
        }
        // a_i <= b_j iff the pair touches a link
        CHECK(l.leq(lay.a_indices[i], lay.b_indices[j]) ==
              (i == n - 1 || j == 0));
      }
  }
}

TEST_CASE("m_nn glues two copies of m_n") {
  auto [l, lay] = m_nn(3);
  // lower copy: 0, a1..a3, b1; upper copy: a3, b1..b3, 1
  ElementSet lower = ElementSet::single(l.bottom()) | ElementSet::single(lay.link_b);
  for (auto i : lay.a_indices) lower.add(i);
  ElementSet upper = ElementSet::single(l.top()) | ElementSet::single(lay.link_a);
  for (auto i : lay.b_indices) upper.add(i);
  CHECK(l.restrict(lower).isomorphic_to(m_n(3)));
  CHECK(l.restrict(upper).isomorphic_to(m_n(3)));
}

TEST_CASE("named small lattices") {
  Lattice p = n5();
  CHECK(p.size() == 5);
  CHECK(!is_modular(p));
  CHECK(!is_distributive(p));
  CHECK(p.leq(p.index_of("v"), p.index_of("u")));

  Lattice d = m3();
  CHECK(d.size() == 5);
  CHECK(is_modular(d));
  CHECK(!is_distributive(d));

  Lattice f = fig_counterexample();
  CHECK(f.size() == 7);
  CHECK(f.cover_pairs().size() == 9);
  // d and e sit below a; b is only above d, c only above e
  CHECK(f.leq(f.index_of("d"), f.index_of("a")));
  CHECK(f.leq(f.index_of("e"), f.index_of("a")));
  CHECK(f.leq(f.index_of("d"), f.index_of("b")));
  CHECK(!f.leq(f.index_of("e"), f.index_of("b")));
  CHECK(f.leq(f.index_of("e"), f.index_of("c")));
  CHECK(!f.leq(f.index_of("d"), f.index_of("c")));
  CHECK(!is_modular(f));  // contains a pentagon (0, e, c, b, 1)
}
