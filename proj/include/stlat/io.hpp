// Text formats: the lattice cover-list file, DOT export of Hasse
// diagrams, and the line-oriented / JSON serializations of maximal-pair
// reports.
//
// Lattice file format, one lattice per file:
//   # comment
//   elements: a b c ...
//   cover: x y          (meaning x is covered by y)
// Labels match [A-Za-z0-9_]+.

#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stlat/lattice.hpp"
#include "stlat/mnn_classify.hpp"
#include "stlat/pair_enum.hpp"

namespace stlat {

class parse_error : public lattice_error {
 public:
  using lattice_error::lattice_error;
};

namespace detail {

inline bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace detail

inline Lattice read_lattice(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  bool saw_elements = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& msg) {
      throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    auto known = [&](const std::string& lab) {
      return std::find(labels.begin(), labels.end(), lab) != labels.end();
    };
    if (head == "elements:") {
      if (saw_elements) fail("duplicate elements line");
      saw_elements = true;
      std::string lab;
      while (ls >> lab) {
        if (!detail::valid_label(lab)) fail("bad label '" + lab + "'");
        if (known(lab)) fail("duplicate label '" + lab + "'");
        labels.push_back(lab);
      }
      if (labels.empty()) fail("no elements listed");
    } else if (head == "cover:") {
      if (!saw_elements) fail("cover before the elements line");
      std::string lo, hi, extra;
      if (!(ls >> lo >> hi) || (ls >> extra)) fail("expected 'cover: x y'");
      if (!known(lo)) fail("unknown label '" + lo + "' in cover");
      if (!known(hi)) fail("unknown label '" + hi + "' in cover");
      covers.emplace_back(lo, hi);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!saw_elements) throw parse_error("missing 'elements:' line");
  return Lattice::from_covers(std::move(labels), covers);
}

/// Canonical re-export: elements in index order, covers sorted by
/// (lower, upper) index. read_lattice(write_lattice(l)) round-trips to
/// an identical canonical file.
inline void write_lattice(std::ostream& out, const Lattice& l) {
  out << "elements:";
  for (std::size_t i = 0; i < l.size(); ++i) out << ' ' << l.label(i);
  out << '\n';
  for (auto [lo, hi] : l.cover_pairs())
    out << "cover: " << l.label(lo) << ' ' << l.label(hi) << '\n';
}

/// DOT digraph of the Hasse diagram, edges pointing upward, stable node
/// order.
inline void export_dot(std::ostream& out, const Lattice& l,
                       const std::string& name = "lattice") {
  out << "digraph " << (detail::valid_label(name) ? name : std::string("lattice")) << " {\n";
  out << "  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < l.size(); ++i)
    out << "  n" << i << " [label=\"" << l.label(i) << "\"];\n";
  for (auto [lo, hi] : l.cover_pairs()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
}

inline std::string format_set(const Lattice& l, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (auto i : bits_of(s)) {
    if (!first) out += ',';
    out += l.label(i);
    first = false;
  }
  return out + "}";
}

/// One pair per line: `S={...} T={...} type=<tag|none>`. Labels sorted
/// by element index; pairs already arrive in canonical order.
inline void write_report_text(std::ostream& out, const Lattice& l,
                              const MaximalPairReport& report,
                              const std::vector<PairType>* types = nullptr) {
  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    const auto& p = report.pairs[i];
    const char* tag = types ? pair_type_tag((*types)[i]) : "none";
    out << "S=" << format_set(l, p.s) << " T=" << format_set(l, p.t) << " type=" << tag
        << '\n';
  }
}

/// Machine-readable dump. Schema:
/// { lattice, mode, pair_count,
///   pairs: [ { s: [labels], t: [labels], type: tag } ],
///   stats: { subsets_scanned, triples_filtered, triples_checked,
///            dominated_dropped, pairs_by_t_size: {"k": count} } }
inline nlohmann::json report_to_json(const Lattice& l, const MaximalPairReport& report,
                                     const std::vector<PairType>* types = nullptr) {
  nlohmann::json j;
  j["lattice"] = report.lattice_id;
  j["mode"] = report.mode == MaximalityMode::Problem1 ? "problem1" : "definition4";
  j["pair_count"] = report.pairs.size();
  j["pairs"] = nlohmann::json::array();
  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    nlohmann::json pj;
    pj["s"] = nlohmann::json::array();
    pj["t"] = nlohmann::json::array();
    for (auto e : bits_of(report.pairs[i].s)) pj["s"].push_back(l.label(e));
    for (auto e : bits_of(report.pairs[i].t)) pj["t"].push_back(l.label(e));
    pj["type"] = types ? pair_type_tag((*types)[i]) : "none";
    j["pairs"].push_back(pj);
  }
  j["stats"]["subsets_scanned"] = report.stats.subsets_scanned;
  j["stats"]["triples_filtered"] = report.stats.triples_filtered;
  j["stats"]["triples_checked"] = report.stats.triples_checked;
  j["stats"]["dominated_dropped"] = report.stats.dominated_dropped;
  for (const auto& [k, v] : report.stats.pairs_by_t_size)
    j["stats"]["pairs_by_t_size"][std::to_string(k)] = v;
  return j;
}

}  // namespace stlat
