// Relative distributivity and modularity predicates: the ST laws, the
// triple efficiency filter, MCCD, classical law checkers, distributive
// element sets, the supersolvability check, and transport of ST-pairs
// through sublattices, products, homomorphic images, and duals.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stlat/lattice.hpp"

namespace stlat {

/// Outcome of the order-based triple filter. Anything but MustCheck
/// guarantees that (a, b, c) satisfies both distribution identities,
/// so meets and joins need not be computed for the triple.
enum class TripleVerdict : std::uint8_t {
  Comparable_t1t2,  // b <= c or c <= b
  SAboveBoth,       // a >= b and a >= c
  SBelowBoth,       // a <= b and a <= c
  MustCheck,
};

/// Conditions checked in order 1, 2, 3; first match wins.
inline TripleVerdict triple_filter(const Lattice& l, std::size_t a, std::size_t b,
                                   std::size_t c) {
  if (l.comparable(b, c)) return TripleVerdict::Comparable_t1t2;
  if (l.leq(b, a) && l.leq(c, a)) return TripleVerdict::SAboveBoth;
  if (l.leq(a, b) && l.leq(a, c)) return TripleVerdict::SBelowBoth;
  return TripleVerdict::MustCheck;
}

inline bool meet_distributes(const Lattice& l, std::size_t a, std::size_t b, std::size_t c) {
  return l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c));
}

inline bool join_distributes(const Lattice& l, std::size_t a, std::size_t b, std::size_t c) {
  return l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), l.join(a, c));
}

/// Both distribution identities for the triple, using the filter to
/// skip order-guaranteed cases.
inline bool triple_distributes(const Lattice& l, std::size_t a, std::size_t b, std::size_t c) {
  if (triple_filter(l, a, b, c) != TripleVerdict::MustCheck) return true;
  return meet_distributes(l, a, b, c) && join_distributes(l, a, b, c);
}

/// Eq. (1) over all s in S and ordered pairs (t1, t2) in T x T. Empty S
/// or T is vacuously true.
inline bool st_meet_distributive(const Lattice& l, ElementSet s, ElementSet t) {
  for (auto a : bits_of(s))
    for (auto t1 : bits_of(t))
      for (auto t2 : bits_of(t)) {
        if (triple_filter(l, a, t1, t2) != TripleVerdict::MustCheck) continue;
        if (!meet_distributes(l, a, t1, t2)) return false;
      }
  return true;
}

inline bool st_join_distributive(const Lattice& l, ElementSet s, ElementSet t) {
  for (auto a : bits_of(s))
    for (auto t1 : bits_of(t))
      for (auto t2 : bits_of(t)) {
        if (triple_filter(l, a, t1, t2) != TripleVerdict::MustCheck) continue;
        if (!join_distributes(l, a, t1, t2)) return false;
      }
  return true;
}

inline bool st_distributive(const Lattice& l, ElementSet s, ElementSet t) {
  return st_meet_distributive(l, s, t) && st_join_distributive(l, s, t);
}

/// s >= t2 implies s /\ (t1 \/ t2) = (s /\ t1) \/ t2, over S x T x T.
/// Vacuously true when no s >= t2 occurs.
inline bool st_meet_modular(const Lattice& l, ElementSet s, ElementSet t) {
  for (auto a : bits_of(s))
    for (auto t2 : bits_of(t)) {
      if (!l.leq(t2, a)) continue;
      for (auto t1 : bits_of(t))
        if (l.meet(a, l.join(t1, t2)) != l.join(l.meet(a, t1), t2)) return false;
    }
  return true;
}

inline bool st_join_modular(const Lattice& l, ElementSet s, ElementSet t) {
  for (auto a : bits_of(s))
    for (auto t2 : bits_of(t)) {
      if (!l.leq(a, t2)) continue;
      for (auto t1 : bits_of(t))
        if (l.join(a, l.meet(t1, t2)) != l.meet(l.join(a, t1), t2)) return false;
    }
  return true;
}

inline bool st_modular(const Lattice& l, ElementSet s, ElementSet t) {
  return st_meet_modular(l, s, t) && st_join_modular(l, s, t);
}

/// MCCD: in a modular lattice, any comparability (including equality)
/// inside {a, b, c} forces both distribution identities. Returns whether
/// the criterion applies, i.e. the triple is not a 3-antichain.
inline bool mccd_applies(const Lattice& l, std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || a == c || b == c) return true;
  return !l.is_antichain_triple(a, b, c);
}

inline bool is_distributive(const Lattice& l) {
  return st_distributive(l, l.all(), l.all());
}

inline bool is_modular(const Lattice& l) {
  const std::size_t m = l.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (l.leq(c, a) && l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), c)) return false;
  return true;
}

/// The distributive, meet-distributive, and join-distributive elements
/// of a lattice. distr is always contained in m_distr and j_distr, and
/// 0 and 1 always belong to distr.
struct DistrElementSets {
  ElementSet distr;
  ElementSet m_distr;
  ElementSet j_distr;
};

inline DistrElementSets distributive_element_sets(const Lattice& l) {
  const std::size_t m = l.size();
  DistrElementSets out;
  for (std::size_t a = 0; a < m; ++a) {
    bool md = true, jd = true, d = true;
    for (std::size_t x = 0; x < m && (md || jd); ++x)
      for (std::size_t y = 0; y < m && (md || jd); ++y) {
        if (md && !meet_distributes(l, a, x, y)) md = false;
        if (jd && !join_distributes(l, a, x, y)) jd = false;
      }
    for (std::size_t x = 0; x < m && d; ++x)
      for (std::size_t y = 0; y < m && d; ++y) {
        ElementSet seed = ElementSet::single(a) | ElementSet::single(x) | ElementSet::single(y);
        if (!is_distributive(l.restrict(l.generated_sublattice(seed)))) d = false;
      }
    if (md) out.m_distr.add(a);
    if (jd) out.j_distr.add(a);
    if (d) out.distr.add(a);
  }
  return out;
}

class not_maximal_chain : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

/// All chains of l (as bitsets), including the empty chain, by DFS over
/// the comparability graph. Exponential; intended for small lattices.
inline std::vector<ElementSet> all_chains(const Lattice& l) {
  std::vector<ElementSet> out = {ElementSet::empty()};
  const std::size_t m = l.size();
  auto extend = [&](auto&& self, ElementSet cur, std::size_t next) -> void {
    for (std::size_t i = next; i < m; ++i) {
      bool ok = true;
      for (auto j : bits_of(cur))
        if (!l.comparable(i, j)) { ok = false; break; }
      if (!ok) continue;
      ElementSet ext = cur;
      ext.add(i);
      out.push_back(ext);
      self(self, ext, i + 1);
    }
  };
  extend(extend, ElementSet::empty(), 0);
  return out;
}

/// Stanley's SS-lattice test for a supplied maximal chain delta: every
/// chain K of l must generate, together with delta, a distributive
/// sublattice. Throws not_maximal_chain if delta is not a maximal chain.
inline bool is_supersolvable_with(const Lattice& l, ElementSet delta) {
  if (!l.is_chain(delta)) throw not_maximal_chain("delta is not a chain");
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (delta.contains(i)) continue;
    bool comparable_to_all = true;
    for (auto j : bits_of(delta))
      if (!l.comparable(i, j)) { comparable_to_all = false; break; }
    if (comparable_to_all) throw not_maximal_chain("delta can be extended by " + l.label(i));
  }
  for (ElementSet k : all_chains(l)) {
    ElementSet seed = delta | k;
    if (seed.is_empty()) continue;
    if (!is_distributive(l.restrict(l.generated_sublattice(seed)))) return false;
  }
  return true;
}

class not_homomorphism : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

/// Transport of an ST-pair into a sublattice K: (S n K, T n K). The
/// carrier must be meet/join closed; the result is a pair over
/// l.restrict(k_carrier)'s indices.
inline std::pair<ElementSet, ElementSet> pair_in_sublattice(const Lattice& l,
                                                            ElementSet k_carrier, ElementSet s,
                                                            ElementSet t) {
  Lattice sub = l.restrict(k_carrier);  // throws not_closed when invalid
  ElementSet s1, t1;
  auto ms = k_carrier.members();
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (s.contains(ms[k])) s1.add(k);
    if (t.contains(ms[k])) t1.add(k);
  }
  return {s1, t1};
}

/// Transport into a product lattice built by product(l1, l2): returns
/// (S x S', T x T') over the product's indices.
inline std::pair<ElementSet, ElementSet> pair_in_product(const Lattice& l1, ElementSet s,
                                                         ElementSet t, const Lattice& l2,
                                                         ElementSet s2, ElementSet t2) {
  ElementSet sp, tp;
  for (auto i : bits_of(s))
    for (auto j : bits_of(s2)) sp.add(i * l2.size() + j);
  for (auto i : bits_of(t))
    for (auto j : bits_of(t2)) tp.add(i * l2.size() + j);
  return {sp, tp};
}

/// Transport through a surjective lattice homomorphism given as an index
/// map from l onto k. The map is validated (meet/join preservation and
/// surjectivity); throws not_homomorphism otherwise.
inline std::pair<ElementSet, ElementSet> pair_under_hom(const Lattice& l, const Lattice& k,
                                                        const std::vector<std::size_t>& phi,
                                                        ElementSet s, ElementSet t) {
  if (phi.size() != l.size()) throw not_homomorphism("index map has wrong length");
  ElementSet image;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (phi[i] >= k.size()) throw not_homomorphism("index map out of range");
    image.add(phi[i]);
  }
  if (image != k.all()) throw not_homomorphism("homomorphism is not onto");
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (phi[l.meet(i, j)] != k.meet(phi[i], phi[j]))
        throw not_homomorphism("map does not preserve meet");
      if (phi[l.join(i, j)] != k.join(phi[i], phi[j]))
        throw not_homomorphism("map does not preserve join");
    }
  ElementSet sp, tp;
  for (auto i : bits_of(s)) sp.add(phi[i]);
  for (auto i : bits_of(t)) tp.add(phi[i]);
  return {sp, tp};
}

/// Transport into the dual lattice. dual() keeps element indices, so the
/// sets carry over unchanged; returned for symmetry with the other
/// constructs.
inline std::pair<ElementSet, ElementSet> pair_in_dual(const Lattice&, ElementSet s,
                                                      ElementSet t) {
  return {s, t};
}

}  // namespace stlat
