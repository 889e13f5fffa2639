// Maximal ST-pair enumeration.
//
// The fast path iterates candidate sets T by increasing population
// count over a word-sized bitset universe, builds the unique maximum S
// for each T (the admissible-S family is union closed, so the maximum
// exists), and finishes with a componentwise dominance sweep. A naive
// oracle with no pruning checks the same contract on small lattices.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "stlat/lattice.hpp"
#include "stlat/st_props.hpp"

namespace stlat {

/// Problem1: S, T nonempty disjoint subsets of L* (the golden reports
/// follow this convention). Definition4: S, T proper subsets of L,
/// overlap and identity elements allowed.
enum class MaximalityMode { Problem1, Definition4 };

struct SubsetPair {
  ElementSet s, t;
  bool operator==(const SubsetPair&) const = default;
};

struct EnumStats {
  std::map<std::size_t, std::size_t> pairs_by_t_size;  // retained pairs
  std::size_t subsets_scanned = 0;
  std::size_t triples_filtered = 0;  // skipped by the order filter
  std::size_t triples_checked = 0;   // needed table lookups
  std::size_t dominated_dropped = 0;
};

struct MaximalPairReport {
  std::string lattice_id;
  MaximalityMode mode = MaximalityMode::Problem1;
  std::vector<SubsetPair> pairs;  // canonically sorted
  EnumStats stats;
};

class too_large : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

namespace detail {

// Canonical pair order: |T| ascending, then T and S as bit patterns.
// Bit patterns compare consistently with lexicographic index lists here
// because all sets live in one 64-bit word.
inline bool pair_less(const SubsetPair& a, const SubsetPair& b) {
  if (a.t.count() != b.t.count()) return a.t.count() < b.t.count();
  if (a.t.bits() != b.t.bits()) return a.t.bits() < b.t.bits();
  return a.s.bits() < b.s.bits();
}

inline bool dominates(const SubsetPair& big, const SubsetPair& small) {
  return small.s.subset_of(big.s) && small.t.subset_of(big.t) && !(big == small);
}

// Next subset of the same popcount (Gosper's hack), within a universe
// that has already been compacted to the low bits.
inline std::uint64_t next_same_popcount(std::uint64_t v) {
  std::uint64_t c = v & -v;
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

// Does s distribute (both identities) into every ordered pair from t?
inline bool distributes_into(const Lattice& l, std::size_t s, ElementSet t, EnumStats* stats) {
  for (auto t1 : bits_of(t))
    for (auto t2 : bits_of(t)) {
      if (triple_filter(l, s, t1, t2) != TripleVerdict::MustCheck) {
        if (stats) ++stats->triples_filtered;
        continue;
      }
      if (stats) ++stats->triples_checked;
      if (!meet_distributes(l, s, t1, t2) || !join_distributes(l, s, t1, t2)) return false;
    }
  return true;
}

}  // namespace detail

/// The unique largest S over the mode's admissible universe (L* \ T for
/// Problem1, all of L for Definition4) whose elements distribute into
/// every ordered pair from t.
inline ElementSet max_s_for_t(const Lattice& l, ElementSet t, MaximalityMode mode,
                              EnumStats* stats = nullptr) {
  ElementSet universe =
      mode == MaximalityMode::Problem1 ? (l.star() - t) : l.all();
  ElementSet s;
  for (auto cand : bits_of(universe))
    if (detail::distributes_into(l, cand, t, stats)) s.add(cand);
  return s;
}

/// Top element of S(L,T): every element of L (0 and 1 included) that is
/// meet and join distributive into T.
inline ElementSet s_lattice_top(const Lattice& l, ElementSet t) {
  ElementSet s;
  for (std::size_t cand = 0; cand < l.size(); ++cand)
    if (detail::distributes_into(l, cand, t, nullptr)) s.add(cand);
  return s;
}

namespace detail {

// Candidate pairs for one T under the given mode. Problem1 emits the
// maximum S when nonempty. Definition4 emits every extension-maximal
// proper S: that is the maximum itself when proper, and each
// one-element-removed subset of L when the maximum is all of L.
inline void emit_candidates(const Lattice& l, ElementSet t, MaximalityMode mode,
                            EnumStats* stats, std::vector<SubsetPair>& out) {
  ElementSet s = max_s_for_t(l, t, mode, stats);
  if (mode == MaximalityMode::Problem1) {
    if (!s.is_empty()) out.push_back({s, t});
    return;
  }
  if (s == l.all()) {
    for (std::size_t x = 0; x < l.size(); ++x) {
      ElementSet r = s;
      r.remove(x);
      out.push_back({r, t});
    }
  } else if (!s.is_empty()) {
    out.push_back({s, t});
  }
}

inline std::vector<std::uint64_t> subsets_by_size(std::size_t universe_size, bool include_empty,
                                                  bool include_full) {
  std::vector<std::uint64_t> out;
  if (include_empty) out.push_back(0);
  for (std::size_t k = 1; k <= universe_size; ++k) {
    if (k == universe_size && !include_full) break;
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << universe_size;
    while (v < limit) {
      out.push_back(v);
      if (k == universe_size) break;
      v = next_same_popcount(v);
    }
  }
  return out;
}

// Expand a compact subset (low bits) back into universe positions.
inline ElementSet scatter(std::uint64_t compact, const std::vector<std::size_t>& positions) {
  ElementSet s;
  for (std::uint64_t b = compact; b; b &= b - 1)
    s.add(positions[static_cast<std::size_t>(__builtin_ctzll(b))]);
  return s;
}

}  // namespace detail

/// All maximal ST-pairs of l under the mode's constraints. The T-loop is
/// split across threads (the lattice is immutable and shared read-only);
/// the dominance filter and canonical sort run single-threaded, so the
/// result is schedule independent.
inline MaximalPairReport enumerate_maximal_pairs(const Lattice& l, MaximalityMode mode,
                                                 unsigned threads = 1,
                                                 std::string lattice_id = "") {
  if (l.size() > kMaxElements) throw too_large("lattice exceeds 64 elements");
  MaximalPairReport report;
  report.lattice_id = std::move(lattice_id);
  report.mode = mode;

  ElementSet universe = mode == MaximalityMode::Problem1 ? l.star() : l.all();
  std::vector<std::size_t> positions = universe.members();
  // Problem1 skips empty T; Definition4 iterates proper subsets only
  // (T = L is not proper) but keeps the empty set, which the dominance
  // sweep removes via the always-valid singleton extensions.
  std::vector<std::uint64_t> ts = detail::subsets_by_size(
      positions.size(), mode == MaximalityMode::Definition4, mode == MaximalityMode::Problem1);

  unsigned nthreads = std::max(1u, threads);
  std::vector<std::vector<SubsetPair>> found(nthreads);
  std::vector<EnumStats> stats(nthreads);
  if (nthreads == 1) {
    for (std::uint64_t tc : ts) {
      ++stats[0].subsets_scanned;
      detail::emit_candidates(l, detail::scatter(tc, positions), mode, &stats[0], found[0]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned w) {
      for (;;) {
        std::size_t i = next.fetch_add(64);
        if (i >= ts.size()) return;
        std::size_t end = std::min(ts.size(), i + 64);
        for (; i < end; ++i) {
          ++stats[w].subsets_scanned;
          detail::emit_candidates(l, detail::scatter(ts[i], positions), mode, &stats[w],
                                  found[w]);
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  std::vector<SubsetPair> merged;
  for (unsigned w = 0; w < nthreads; ++w) {
    merged.insert(merged.end(), found[w].begin(), found[w].end());
    report.stats.subsets_scanned += stats[w].subsets_scanned;
    report.stats.triples_filtered += stats[w].triples_filtered;
    report.stats.triples_checked += stats[w].triples_checked;
  }

  // Dominance sweep: a candidate survives iff no other candidate
  // contains it componentwise. By antimonotonicity of max_s_for_t this
  // is exactly Def. 4 maximality restricted to the mode's universe.
  std::sort(merged.begin(), merged.end(), detail::pair_less);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < merged.size() && !dominated; ++j)
      if (j != i && detail::dominates(merged[j], merged[i])) dominated = true;
    if (dominated)
      ++report.stats.dominated_dropped;
    else
      report.pairs.push_back(merged[i]);
  }
  for (const auto& p : report.pairs) ++report.stats.pairs_by_t_size[p.t.count()];
  return report;
}

/// Independent oracle: iterates every admissible (S, T) assignment with
/// no pruning and tests maximality literally by single-element
/// extension. Problem1 walks all 3^|L*| disjoint assignments, so the
/// lattice is capped at |L*| <= 12.
inline MaximalPairReport brute_force_maximal_pairs(const Lattice& l, MaximalityMode mode,
                                                   std::string lattice_id = "") {
  MaximalPairReport report;
  report.lattice_id = std::move(lattice_id);
  report.mode = mode;

  auto plain_st_distributive = [&](ElementSet s, ElementSet t) {
    for (auto a : bits_of(s))
      for (auto t1 : bits_of(t))
        for (auto t2 : bits_of(t))
          if (!meet_distributes(l, a, t1, t2) || !join_distributes(l, a, t1, t2)) return false;
    return true;
  };

  std::vector<SubsetPair> all;
  if (mode == MaximalityMode::Problem1) {
    ElementSet star = l.star();
    if (star.count() > 12) throw too_large("oracle requires |L*| <= 12");
    auto positions = star.members();
    const std::uint64_t nsub = std::uint64_t{1} << positions.size();
    for (std::uint64_t tc = 1; tc < nsub; ++tc) {
      ElementSet t = detail::scatter(tc, positions);
      ElementSet rest = star - t;
      auto rest_pos = rest.members();
      const std::uint64_t nrest = std::uint64_t{1} << rest_pos.size();
      for (std::uint64_t sc = 1; sc < nrest; ++sc) {
        ElementSet s = detail::scatter(sc, rest_pos);
        if (!plain_st_distributive(s, t)) continue;
        bool maximal = true;
        for (auto x : bits_of(star - s - t))
          if (plain_st_distributive(s | ElementSet::single(x), t) ||
              plain_st_distributive(s, t | ElementSet::single(x))) {
            maximal = false;
            break;
          }
        if (maximal) all.push_back({s, t});
      }
    }
  } else {
    if (l.size() > 12) throw too_large("oracle requires |L| <= 12 in Definition4 mode");
    const std::uint64_t nsub = std::uint64_t{1} << l.size();
    const std::uint64_t full = nsub - 1;
    for (std::uint64_t tb = 0; tb < full; ++tb) {  // proper T
      ElementSet t{tb};
      for (std::uint64_t sb = 0; sb < full; ++sb) {  // proper S
        ElementSet s{sb};
        if (!plain_st_distributive(s, t)) continue;
        bool maximal = true;
        for (std::size_t x = 0; x < l.size() && maximal; ++x) {
          if (!s.contains(x) && (s | ElementSet::single(x)) != l.all() &&
              plain_st_distributive(s | ElementSet::single(x), t))
            maximal = false;
          if (!t.contains(x) && (t | ElementSet::single(x)) != l.all() &&
              plain_st_distributive(s, t | ElementSet::single(x)))
            maximal = false;
        }
        if (maximal) all.push_back({s, t});
      }
    }
  }

  std::sort(all.begin(), all.end(), detail::pair_less);
  report.pairs = std::move(all);
  for (const auto& p : report.pairs) ++report.stats.pairs_by_t_size[p.t.count()];
  return report;
}

}  // namespace stlat
