// M_{n,n}-specific theory: ST-breaking antichains, the restriction on
// T, the five-type classifier for maximal ST-pairs, and verification of
// the characterization theorem together with its counting corollary.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "stlat/constructors.hpp"
#include "stlat/lattice.hpp"
#include "stlat/pair_enum.hpp"
#include "stlat/st_props.hpp"

namespace stlat {

enum class PairType : std::uint8_t {
  TChain,
  SLink,
  S2Links,
  SLevel,
  SLevelMinusLink,
  Unclassified,
};

inline const char* pair_type_tag(PairType t) {
  switch (t) {
    case PairType::TChain: return "t-chain";
    case PairType::SLink: return "s-link";
    case PairType::S2Links: return "s-2-links";
    case PairType::SLevel: return "s-level";
    case PairType::SLevelMinusLink: return "s-level-minus-link";
    default: return "none";
  }
}

/// Ordered triples (x, y, z) with x in S, {y, z} in T (emitted with
/// y < z), such that {x, y, z} is a 3-antichain. In M_{n,n} each such
/// triple witnesses failure of distribution.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> st_breaking_antichains(
    const Lattice& l, ElementSet s, ElementSet t) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (auto x : bits_of(s)) {
    auto tm = t.members();
    for (std::size_t i = 0; i < tm.size(); ++i)
      for (std::size_t j = i + 1; j < tm.size(); ++j) {
        std::size_t y = tm[i], z = tm[j];
        if (x == y || x == z) continue;
        if (l.is_antichain_triple(x, y, z)) out.emplace_back(x, y, z);
      }
  }
  return out;
}

inline bool breaking_antichain_blocks(const Lattice& l, const MnnLayout&, ElementSet s,
                                      ElementSet t) {
  return !st_breaking_antichains(l, s, t).empty();
}

/// False iff t contains at least two elements of each level.
inline bool t_restriction_holds(const MnnLayout& layout, ElementSet t) {
  return (t & layout.a_level()).count() < 2 || (t & layout.b_level()).count() < 2;
}

namespace detail {

// The closed-form pair templates, enumerated per type directly from
// their formal descriptions. Every template instance is a distinct pair.
inline std::vector<std::pair<SubsetPair, PairType>> mnn_templates(const Lattice& l,
                                                                  const MnnLayout& y) {
  std::vector<std::pair<SubsetPair, PairType>> out;
  const std::size_t n = y.n;
  const ElementSet star = l.star();
  const ElementSet alev = y.a_level(), blev = y.b_level();
  auto chain_pair = [&](ElementSet t) { out.push_back({{star - t, t}, PairType::TChain}); };

  // T-chain: singletons, then the two-element chains {a_i, b_1} and
  // {a_n, b_j} ({a_n, b_1} counted once).
  for (auto e : bits_of(star)) chain_pair(ElementSet::single(e));
  for (std::size_t i = 0; i < n; ++i)
    chain_pair(ElementSet::single(y.a_indices[i]) | ElementSet::single(y.link_b));
  for (std::size_t j = 1; j < n; ++j)
    chain_pair(ElementSet::single(y.link_a) | ElementSet::single(y.b_indices[j]));

  // S-link.
  for (std::size_t j = 1; j < n; ++j)
    out.push_back({{ElementSet::single(y.link_b),
                    alev | ElementSet::single(y.b_indices[j])},
                   PairType::SLink});
  for (std::size_t i = 0; i + 1 < n; ++i)
    out.push_back({{ElementSet::single(y.link_a),
                    blev | ElementSet::single(y.a_indices[i])},
                   PairType::SLink});

  // S-2-links.
  ElementSet links = ElementSet::single(y.link_a) | ElementSet::single(y.link_b);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      out.push_back({{links, ElementSet::single(y.a_indices[i]) |
                                 ElementSet::single(y.b_indices[j])},
                     PairType::S2Links});

  // S-level.
  for (std::size_t i = 0; i + 1 < n; ++i)
    out.push_back({{blev, ElementSet::single(y.a_indices[i]) | ElementSet::single(y.link_a)},
                   PairType::SLevel});
  for (std::size_t j = 1; j < n; ++j)
    out.push_back({{alev, ElementSet::single(y.link_b) | ElementSet::single(y.b_indices[j])},
                   PairType::SLevel});

  // S-level-minus-link.
  for (std::size_t i = 0; i + 1 < n; ++i)
    out.push_back({{blev - ElementSet::single(y.link_b),
                    ElementSet::single(y.a_indices[i]) | links},
                   PairType::SLevelMinusLink});
  for (std::size_t j = 1; j < n; ++j)
    out.push_back({{alev - ElementSet::single(y.link_a),
                    links | ElementSet::single(y.b_indices[j])},
                   PairType::SLevelMinusLink});

  return out;
}

}  // namespace detail

/// Matches (s, t) against the formal five-type templates; returns the
/// unique tag or Unclassified.
inline PairType classify_pair(const Lattice& l, const MnnLayout& layout, ElementSet s,
                              ElementSet t) {
  for (const auto& [tpl, type] : detail::mnn_templates(l, layout))
    if (tpl.s == s && tpl.t == t) return type;
  return PairType::Unclassified;
}

/// Per-type pair counts predicted by the counting corollary:
/// (4n-1, 2n-2, n^2-2n+1, 2n-2, 2n-2), total n^2+8n-6.
struct TypeCounts {
  std::array<std::size_t, 5> per_type{};
  std::size_t total = 0;
};

inline TypeCounts expected_counts(std::size_t n) {
  if (n < 3) throw lattice_error("expected_counts: n must be >= 3");
  TypeCounts c;
  c.per_type = {4 * n - 1, 2 * n - 2, n * n - 2 * n + 1, 2 * n - 2, 2 * n - 2};
  c.total = n * n + 8 * n - 6;
  return c;
}

struct CharacterizationReport {
  std::size_t n = 0;
  MaximalPairReport pairs;
  std::vector<PairType> types;  // parallel to pairs.pairs
  TypeCounts enumerated;        // per-type counts observed
  TypeCounts expected;
  std::size_t unclassified = 0;
  bool every_template_seen_once = false;
  bool counts_match = false;
  bool t_restriction_ok = false;

  bool ok() const {
    return unclassified == 0 && every_template_seen_once && counts_match && t_restriction_ok;
  }
};

/// Enumerates the maximal pairs of M_{n,n}, classifies each one, and
/// cross-checks the result against the template list and the counting
/// corollary.
inline CharacterizationReport verify_characterization(std::size_t n, unsigned threads = 1) {
  auto [l, layout] = m_nn(n);
  CharacterizationReport rep;
  rep.n = n;
  rep.pairs = enumerate_maximal_pairs(l, MaximalityMode::Problem1, threads,
                                      "mnn:" + std::to_string(n));
  rep.expected = expected_counts(n);

  auto templates = detail::mnn_templates(l, layout);
  std::vector<std::size_t> template_hits(templates.size(), 0);

  rep.t_restriction_ok = true;
  for (const auto& p : rep.pairs.pairs) {
    PairType type = PairType::Unclassified;
    for (std::size_t k = 0; k < templates.size(); ++k)
      if (templates[k].first.s == p.s && templates[k].first.t == p.t) {
        type = templates[k].second;
        ++template_hits[k];
      }
    rep.types.push_back(type);
    if (type == PairType::Unclassified)
      ++rep.unclassified;
    else
      ++rep.enumerated.per_type[static_cast<std::size_t>(type)];
    if (!t_restriction_holds(layout, p.t)) rep.t_restriction_ok = false;
  }
  rep.enumerated.total = rep.pairs.pairs.size();

  rep.every_template_seen_once = true;
  for (std::size_t k = 0; k < templates.size(); ++k)
    if (template_hits[k] != 1) rep.every_template_seen_once = false;

  rep.counts_match = rep.enumerated.total == rep.expected.total;
  for (std::size_t k = 0; k < 5; ++k)
    if (rep.enumerated.per_type[k] != rep.expected.per_type[k]) rep.counts_match = false;
  return rep;
}

}  // namespace stlat
