// Named lattice families and lattice constructs: chains, M_n, M_{n,n},
// linear (ordinal) sums, products, and the figure lattices used in
// tests and the CLI.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stlat/lattice.hpp"

namespace stlat {

/// Element indices of the distinguished parts of an M_{n,n} lattice:
/// the two n-element levels and the two link elements a_n and b_1.
struct MnnLayout {
  std::size_t n = 0;
  std::vector<std::size_t> a_indices;  // lower level a_1..a_n
  std::vector<std::size_t> b_indices;  // upper level b_1..b_n
  std::size_t link_a = 0;              // a_n
  std::size_t link_b = 0;              // b_1

  ElementSet a_level() const {
    ElementSet s;
    for (auto i : a_indices) s.add(i);
    return s;
  }
  ElementSet b_level() const {
    ElementSet s;
    for (auto i : b_indices) s.add(i);
    return s;
  }
};

namespace detail {

// Unvalidated poset presented by labels + covers; operand type for the
// ordinal sum, which is defined on posets (an antichain is a legal
// summand even though it is not a lattice).
struct Poset {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;

  static Poset chain(std::size_t n, const std::string& prefix) {
    Poset p;
    for (std::size_t i = 1; i <= n; ++i) p.labels.push_back(prefix + std::to_string(i));
    for (std::size_t i = 1; i + 1 <= n; ++i)
      p.covers.emplace_back(p.labels[i - 1], p.labels[i]);
    return p;
  }
  static Poset antichain(std::size_t n, const std::string& prefix) {
    Poset p;
    for (std::size_t i = 1; i <= n; ++i) p.labels.push_back(prefix + std::to_string(i));
    return p;
  }
};

// Ordinal sum: every maximal element of lo is covered by every minimal
// element of hi. Labels in hi that collide with lo get a prime suffix.
inline Poset ordinal_sum(const Poset& lo, const Poset& hi) {
  auto index_in = [](const std::vector<std::string>& v, const std::string& s) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == s) return i;
    return v.size();
  };
  std::vector<bool> lo_maximal(lo.labels.size(), true), hi_minimal(hi.labels.size(), true);
  for (const auto& [l, u] : lo.covers) lo_maximal[index_in(lo.labels, l)] = false;
  for (const auto& [l, u] : hi.covers) hi_minimal[index_in(hi.labels, u)] = false;

  Poset out = lo;
  std::vector<std::string> renamed(hi.labels.size());
  for (std::size_t j = 0; j < hi.labels.size(); ++j) {
    std::string lab = hi.labels[j];
    while (index_in(out.labels, lab) != out.labels.size()) lab += "'";
    renamed[j] = lab;
    out.labels.push_back(lab);
  }
  for (const auto& [l, u] : hi.covers)
    out.covers.emplace_back(renamed[index_in(hi.labels, l)], renamed[index_in(hi.labels, u)]);
  for (std::size_t i = 0; i < lo.labels.size(); ++i)
    if (lo_maximal[i])
      for (std::size_t j = 0; j < hi.labels.size(); ++j)
        if (hi_minimal[j]) out.covers.emplace_back(lo.labels[i], renamed[j]);
  return out;
}

inline Lattice to_lattice(const Poset& p) {
  return Lattice::from_covers(p.labels, p.covers);
}

inline Poset to_poset(const Lattice& l) {
  Poset p;
  p.labels = l.labels();
  for (auto [lo, hi] : l.cover_pairs()) p.covers.emplace_back(l.label(lo), l.label(hi));
  return p;
}

}  // namespace detail

/// Chain of n elements, labeled c1 (bottom) .. cn (top).
inline Lattice chain(std::size_t n) {
  if (n == 0) throw lattice_error("chain: n must be >= 1");
  return detail::to_lattice(detail::Poset::chain(n, "c"));
}

/// M_n = 1 (+) n-antichain (+) 1: bounded lattice whose middle layer is
/// an n-element antichain. Labels: 0, x1..xn, 1.
inline Lattice m_n(std::size_t n) {
  if (n == 0) throw lattice_error("m_n: n must be >= 1");
  detail::Poset bot;
  bot.labels = {"0"};
  detail::Poset top;
  top.labels = {"1"};
  return detail::to_lattice(
      detail::ordinal_sum(detail::ordinal_sum(bot, detail::Poset::antichain(n, "x")), top));
}

/// Linear sum L (+) K: a new covering edge from L's top to K's bottom,
/// both elements kept distinct.
inline Lattice linear_sum(const Lattice& l1, const Lattice& l2) {
  return detail::to_lattice(detail::ordinal_sum(detail::to_poset(l1), detail::to_poset(l2)));
}

/// Direct product with componentwise order. Labels are "(x,y)".
inline Lattice product(const Lattice& l1, const Lattice& l2) {
  const std::size_t m1 = l1.size(), m2 = l2.size();
  if (m1 * m2 > kMaxElements) throw lattice_error("product: result exceeds 64 elements");
  std::vector<std::string> labels;
  std::vector<ElementSet> up(m1 * m2);
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < m2; ++j)
      labels.push_back("(" + l1.label(i) + "," + l2.label(j) + ")");
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < m2; ++j)
      for (std::size_t k = 0; k < m1; ++k)
        for (std::size_t t = 0; t < m2; ++t)
          if (l1.leq(i, k) && l2.leq(j, t)) up[i * m2 + j].add(k * m2 + t);
  return make_from_order(std::move(labels), std::move(up));
}

/// M_{n,n}: two copies of M_n glued along the edge a_n -< b_1. Elements
/// 0, 1, a1..an, b1..bn; 0 -< a_i, b_j -< 1, a_n -< b_j, a_i -< b_1.
/// Requires n >= 3 (n = 1, 2 give distributive
/// lattices isomorphic to the chain 4 and to 2 x 3).
inline std::pair<Lattice, MnnLayout> m_nn(std::size_t n) {
  if (n < 3)
    throw lattice_error(
        "m_nn: n must be >= 3 (M_{1,1} and M_{2,2} degenerate to distributive lattices)");
  std::vector<std::string> labels = {"0"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) labels.push_back("b" + std::to_string(j));
  labels.push_back("1");

  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i <= n; ++i) {
    covers.emplace_back("0", "a" + std::to_string(i));
    covers.emplace_back("b" + std::to_string(i), "1");
    covers.emplace_back("a" + std::to_string(n), "b" + std::to_string(i));
    if (i != n) covers.emplace_back("a" + std::to_string(i), "b1");
  }
  Lattice l = Lattice::from_covers(std::move(labels), covers);

  MnnLayout layout;
  layout.n = n;
  for (std::size_t i = 1; i <= n; ++i) {
    layout.a_indices.push_back(l.index_of("a" + std::to_string(i)));
    layout.b_indices.push_back(l.index_of("b" + std::to_string(i)));
  }
  layout.link_a = layout.a_indices[n - 1];
  layout.link_b = layout.b_indices[0];
  return {std::move(l), std::move(layout)};
}

/// The pentagon: 0 -< v -< u -< 1, 0 -< w -< 1.
inline Lattice n5() {
  return Lattice::from_covers({"0", "v", "u", "w", "1"},
                              {{"0", "v"}, {"v", "u"}, {"u", "1"}, {"0", "w"}, {"w", "1"}});
}

/// The diamond M_3 with its customary labels 0, a, b, c, 1.
inline Lattice m3() {
  return Lattice::from_covers({"0", "a", "b", "c", "1"}, {{"0", "a"},
                                                          {"0", "b"},
                                                          {"0", "c"},
                                                          {"a", "1"},
                                                          {"b", "1"},
                                                          {"c", "1"}});
}

/// The 7-element counterexample lattice used for the meet-vs-join and
/// modularity examples (the same diagram serves both).
inline Lattice fig_counterexample() {
  return Lattice::from_covers({"0", "d", "e", "a", "b", "c", "1"},
                              {{"0", "d"},
                               {"0", "e"},
                               {"d", "a"},
                               {"e", "a"},
                               {"d", "b"},
                               {"e", "c"},
                               {"a", "1"},
                               {"b", "1"},
                               {"c", "1"}});
}

}  // namespace stlat
