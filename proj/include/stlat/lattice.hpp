// Finite bounded lattices with precomputed order and meet/join tables.
//
// Elements are dense indices 0..m-1; user-facing labels live in a side
// table. Everything downstream (subset predicates, pair enumeration)
// works on indices and word-sized bitsets, so lattices are capped at 64
// elements.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stlat {

constexpr std::size_t kMaxElements = 64;

class lattice_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a cover relation does not describe a lattice (some pair
/// lacks a unique meet or join).
class not_a_lattice : public lattice_error {
 public:
  not_a_lattice(std::size_t i, std::size_t j, const std::string& what)
      : lattice_error(what), i_(i), j_(j) {}
  std::size_t lhs() const { return i_; }
  std::size_t rhs() const { return j_; }

 private:
  std::size_t i_, j_;
};

class no_bounds : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

class not_closed : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

/// Subset of the elements of a specific lattice, stored as one machine
/// word. The owning lattice is not referenced; callers pair the set with
/// the lattice they built it for.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet empty() { return ElementSet{}; }
  static constexpr ElementSet single(std::size_t i) {
    return ElementSet{std::uint64_t{1} << i};
  }
  static constexpr ElementSet first_n(std::size_t n) {
    return ElementSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr std::size_t count() const {
    return static_cast<std::size_t>(__builtin_popcountll(bits_));
  }

  constexpr void add(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void remove(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet{bits_ | o.bits_}; }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet{bits_ & o.bits_}; }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet{bits_ & ~o.bits_}; }
  constexpr bool operator==(const ElementSet&) const = default;

  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Indices of set bits, ascending.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(static_cast<std::size_t>(__builtin_ctzll(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Iterates `for (auto i : bits_of(set))` over set members without
/// materializing a vector.
struct bits_of {
  explicit bits_of(ElementSet s) : bits(s.bits()) {}
  std::uint64_t bits;
  struct iterator {
    std::uint64_t bits;
    std::size_t operator*() const {
      return static_cast<std::size_t>(__builtin_ctzll(bits));
    }
    iterator& operator++() {
      bits &= bits - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return bits != o.bits; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }
};

/// Immutable finite bounded lattice. Construction validates the lattice
/// axioms; there is no unchecked path. Safe to share across threads.
class Lattice {
 public:
  /// Builds a lattice from its Hasse diagram. `covers` lists (lower,
  /// upper) label pairs. Throws not_a_lattice / no_bounds on invalid
  /// input.
  static Lattice from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& covers);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label; throws if unknown.
  std::size_t index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].contains(j); }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Up-set {j : i <= j} and down-set {j : j <= i} as bitsets.
  ElementSet up_set(std::size_t i) const { return up_[i]; }
  ElementSet down_set(std::size_t i) const { return down_[i]; }

  /// Covering pairs (lower, upper) of the Hasse diagram, recomputed from
  /// the order.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  ElementSet all() const { return ElementSet::first_n(size()); }
  /// L* = L minus its identity elements 0 and 1.
  ElementSet star() const {
    ElementSet s = all();
    s.remove(bottom_);
    s.remove(top_);
    return s;
  }

  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  /// True iff the elements of s are pairwise comparable. Empty and
  /// singleton sets count as chains.
  bool is_chain(ElementSet s) const;

  /// True iff x, y, z are pairwise incomparable (caller guarantees
  /// distinctness).
  bool is_antichain_triple(std::size_t x, std::size_t y, std::size_t z) const;

  /// Order-dual lattice: order reversed, meet/join swapped, same element
  /// indices and labels.
  Lattice dual() const;

  /// Smallest superset of seed closed under meet and join.
  ElementSet generated_sublattice(ElementSet seed) const;

  /// Sublattice on a meet/join-closed carrier. Throws not_closed
  /// otherwise. Element order (and labels) inherited; bottom/top are the
  /// carrier's own extrema.
  Lattice restrict(ElementSet carrier) const;

  /// Isomorphic as bounded lattices (backtracking search; intended for
  /// the small lattices this library targets).
  bool isomorphic_to(const Lattice& other) const;

 private:
  Lattice() = default;
  void compute_tables();  // from up_/down_; throws on failure
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_, down_;
  std::vector<std::uint8_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;

  friend Lattice make_from_order(std::vector<std::string> labels,
                                 std::vector<ElementSet> up_sets);
};

/// Internal: builds a lattice from complete up-sets (already reflexive
/// and transitive). Used by dual/restrict/product.
inline Lattice make_from_order(std::vector<std::string> labels,
                               std::vector<ElementSet> up_sets) {
  Lattice l;
  l.labels_ = std::move(labels);
  const std::size_t m = l.labels_.size();
  if (m == 0 || m > kMaxElements)
    throw lattice_error("lattice must have between 1 and 64 elements");
  l.up_ = std::move(up_sets);
  l.down_.assign(m, ElementSet{});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (l.up_[i].contains(j)) l.down_[j].add(i);
  l.compute_tables();
  return l;
}

inline std::size_t Lattice::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw lattice_error("unknown element label: " + label);
}

inline void Lattice::compute_tables() {
  const std::size_t m = size();

  // Order axioms.
  for (std::size_t i = 0; i < m; ++i) {
    if (!up_[i].contains(i)) throw lattice_error("order not reflexive");
    for (auto j : bits_of(up_[i])) {
      if (j != i && up_[j].contains(i)) throw lattice_error("order not antisymmetric");
      if (!up_[j].subset_of(up_[i])) throw lattice_error("order not transitive");
    }
  }

  // Unique global bounds.
  std::size_t nbot = 0, ntop = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (up_[i].count() == m) { bottom_ = i; ++nbot; }
    if (down_[i].count() == m) { top_ = i; ++ntop; }
  }
  if (nbot != 1 || ntop != 1) throw no_bounds("poset lacks a unique minimum or maximum");

  meet_.assign(m * m, 0);
  join_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ElementSet lower = down_[i] & down_[j];
      std::size_t g = m, cnt = 0;
      for (auto k : bits_of(lower))
        if (lower.subset_of(down_[k])) { g = k; ++cnt; }
      if (cnt != 1) throw not_a_lattice(i, j, "pair {" + labels_[i] + "," + labels_[j] +
                                              "} lacks a unique meet");
      meet_[i * m + j] = static_cast<std::uint8_t>(g);

      ElementSet upper = up_[i] & up_[j];
      std::size_t s = m;
      cnt = 0;
      for (auto k : bits_of(upper))
        if (upper.subset_of(up_[k])) { s = k; ++cnt; }
      if (cnt != 1) throw not_a_lattice(i, j, "pair {" + labels_[i] + "," + labels_[j] +
                                              "} lacks a unique join");
      join_[i * m + j] = static_cast<std::uint8_t>(s);
    }
  }
  validate();
}

inline void Lattice::validate() const {
  const std::size_t m = size();
  for (std::size_t a = 0; a < m; ++a) {
    if (meet(a, a) != a || join(a, a) != a) throw lattice_error("tables not idempotent");
    for (std::size_t b = 0; b < m; ++b) {
      if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a))
        throw lattice_error("tables not commutative");
      if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a)
        throw lattice_error("absorption fails");
      // Connecting Lemma: a <= b iff meet(a,b)=a iff join(a,b)=b.
      const bool le = leq(a, b);
      if (le != (meet(a, b) == a) || le != (join(a, b) == b))
        throw lattice_error("order inconsistent with tables");
    }
  }
}

inline Lattice Lattice::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t m = labels.size();
  if (m == 0 || m > kMaxElements)
    throw lattice_error("lattice must have between 1 and 64 elements");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (labels[i] == labels[j]) throw lattice_error("duplicate label: " + labels[i]);

  auto idx = [&](const std::string& s) -> std::size_t {
    for (std::size_t i = 0; i < m; ++i)
      if (labels[i] == s) return i;
    throw lattice_error("cover mentions unknown label: " + s);
  };

  // Reflexive-transitive closure of the cover relation.
  std::vector<ElementSet> up(m);
  for (std::size_t i = 0; i < m; ++i) up[i].add(i);
  for (const auto& [lo, hi] : covers) up[idx(lo)].add(idx(hi));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i)
      for (auto j : bits_of(up[i]))
        if (!up[j].subset_of(up[i])) {
          up[i] = up[i] | up[j];
          changed = true;
        }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (auto j : bits_of(up[i]))
      if (j != i && up[j].contains(i)) throw lattice_error("cover relation is cyclic");

  return make_from_order(std::move(labels), std::move(up));
}

inline std::vector<std::pair<std::size_t, std::size_t>> Lattice::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t m = size();
  for (std::size_t i = 0; i < m; ++i) {
    for (auto j : bits_of(up_[i])) {
      if (j == i) continue;
      bool is_cover = true;
      for (auto k : bits_of(up_[i] & down_[j]))
        if (k != i && k != j) { is_cover = false; break; }
      if (is_cover) out.emplace_back(i, j);
    }
  }
  return out;
}

inline bool Lattice::is_chain(ElementSet s) const {
  auto ms = s.members();
  for (std::size_t x = 0; x < ms.size(); ++x)
    for (std::size_t y = x + 1; y < ms.size(); ++y)
      if (!comparable(ms[x], ms[y])) return false;
  return true;
}

inline bool Lattice::is_antichain_triple(std::size_t x, std::size_t y, std::size_t z) const {
  return !comparable(x, y) && !comparable(x, z) && !comparable(y, z);
}

inline Lattice Lattice::dual() const {
  return make_from_order(labels_, down_);
}

inline ElementSet Lattice::generated_sublattice(ElementSet seed) const {
  if (seed.is_empty()) throw lattice_error("generated_sublattice: empty seed");
  ElementSet cur = seed;
  for (;;) {
    ElementSet next = cur;
    auto ms = cur.members();
    for (std::size_t x = 0; x < ms.size(); ++x)
      for (std::size_t y = x; y < ms.size(); ++y) {
        next.add(meet(ms[x], ms[y]));
        next.add(join(ms[x], ms[y]));
      }
    if (next == cur) return cur;
    cur = next;
  }
}

inline Lattice Lattice::restrict(ElementSet carrier) const {
  if (carrier.is_empty()) throw not_closed("restrict: empty carrier");
  auto ms = carrier.members();
  for (std::size_t x = 0; x < ms.size(); ++x)
    for (std::size_t y = x; y < ms.size(); ++y)
      if (!carrier.contains(meet(ms[x], ms[y])) || !carrier.contains(join(ms[x], ms[y])))
        throw not_closed("carrier not closed under meet/join: {" + labels_[ms[x]] + "," +
                         labels_[ms[y]] + "}");

  std::vector<std::size_t> to_new(size(), size());
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    to_new[ms[k]] = k;
    labels.push_back(labels_[ms[k]]);
  }
  std::vector<ElementSet> up(ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (auto j : bits_of(up_[ms[k]] & carrier)) up[k].add(to_new[j]);
  return make_from_order(std::move(labels), std::move(up));
}

inline bool Lattice::isomorphic_to(const Lattice& other) const {
  const std::size_t m = size();
  if (m != other.size()) return false;

  // Degree-style invariants prune the search.
  auto sig = [](const Lattice& l, std::size_t i) {
    return std::pair{l.up_set(i).count(), l.down_set(i).count()};
  };
  std::vector<std::size_t> map(m, m);
  std::vector<bool> used(m, false);

  auto consistent = [&](std::size_t i, std::size_t cand) {
    if (sig(*this, i) != sig(other, cand)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (leq(i, j) != other.leq(cand, map[j])) return false;
      if (leq(j, i) != other.leq(map[j], cand)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return true;
    for (std::size_t cand = 0; cand < m; ++cand) {
      if (used[cand] || !consistent(i, cand)) continue;
      used[cand] = true;
      map[i] = cand;
      if (self(self, i + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace stlat
