// st: command-line front end for the lattice toolkit.
//
// Exit codes: 0 success / property holds, 1 property violation,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stlat/constructors.hpp"
#include "stlat/convex.hpp"
#include "stlat/io.hpp"
#include "stlat/lattice.hpp"
#include "stlat/mnn_classify.hpp"
#include "stlat/pair_enum.hpp"
#include "stlat/st_props.hpp"

namespace {

using namespace stlat;

// Parses "name" or "name:n" for the built-in constructors. Fills
// *layout when the result is an M_{n,n}.
Lattice make_named(const std::string& spec, std::optional<MnnLayout>* layout = nullptr) {
  std::string name = spec;
  std::size_t n = 0;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    try {
      n = std::stoul(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw lattice_error("bad constructor parameter in: " + spec);
    }
  }
  if (name == "chain") return chain(n);
  if (name == "mn") return m_n(n);
  if (name == "mnn") {
    auto [l, lay] = m_nn(n);
    if (layout) *layout = lay;
    return l;
  }
  if (name == "n5") return n5();
  if (name == "m3") return m3();
  if (name == "fig3" || name == "fig8") return fig_counterexample();
  throw lattice_error("unknown constructor: " + name +
                      " (expected chain:n, mn:n, mnn:n, n5, m3, fig3, fig8)");
}

Lattice load_lattice(const std::string& make_spec, const std::string& file,
                     std::optional<MnnLayout>* layout = nullptr) {
  if (!make_spec.empty() && !file.empty())
    throw lattice_error("give either --make or --lattice, not both");
  if (!make_spec.empty()) return make_named(make_spec, layout);
  if (file.empty()) throw lattice_error("one of --make or --lattice is required");
  std::ifstream in(file);
  if (!in) throw lattice_error("cannot open lattice file: " + file);
  return read_lattice(in);
}

ElementSet parse_set(const Lattice& l, const std::string& csv) {
  ElementSet out;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.add(l.index_of(tok));
  return out;
}

MaximalityMode parse_mode(const std::string& mode) {
  if (mode == "problem1") return MaximalityMode::Problem1;
  if (mode == "definition4") return MaximalityMode::Definition4;
  throw lattice_error("unknown mode: " + mode + " (expected problem1 or definition4)");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw lattice_error("cannot open output file: " + path);
  return file;
}

int cmd_check(const Lattice& l, const std::string& law, const std::string& s_csv,
              const std::string& t_csv) {
  ElementSet s = parse_set(l, s_csv), t = parse_set(l, t_csv);
  bool verdict;
  std::string shown;
  if (law == "st-distributive") {
    verdict = st_distributive(l, s, t);
    shown = "ST-distributive";
  } else if (law == "st-meet-distributive") {
    verdict = st_meet_distributive(l, s, t);
    shown = "ST-meet-distributive";
  } else if (law == "st-join-distributive") {
    verdict = st_join_distributive(l, s, t);
    shown = "ST-join-distributive";
  } else if (law == "st-modular") {
    verdict = st_modular(l, s, t);
    shown = "ST-modular";
  } else if (law == "st-meet-modular") {
    verdict = st_meet_modular(l, s, t);
    shown = "ST-meet-modular";
  } else if (law == "st-join-modular") {
    verdict = st_join_modular(l, s, t);
    shown = "ST-join-modular";
  } else if (law == "distributive") {
    verdict = is_distributive(l);
    shown = "distributive";
  } else if (law == "modular") {
    verdict = is_modular(l);
    shown = "modular";
  } else {
    throw lattice_error("unknown law: " + law);
  }
  std::cout << shown << ": " << (verdict ? "true" : "false") << "\n";
  return verdict ? 0 : 1;
}

int cmd_elements(const Lattice& l) {
  DistrElementSets sets = distributive_element_sets(l);
  std::cout << "Distr(L)  = " << format_set(l, sets.distr) << "\n";
  std::cout << "mDistr(L) = " << format_set(l, sets.m_distr) << "\n";
  std::cout << "jDistr(L) = " << format_set(l, sets.j_distr) << "\n";
  return 0;
}

int cmd_enumerate(const Lattice& l, const std::optional<MnnLayout>& layout,
                  const std::string& mode_name, unsigned threads, const std::string& make_spec,
                  const std::string& json_path, const std::string& out_path) {
  MaximalityMode mode = parse_mode(mode_name);
  std::string id = make_spec.empty() ? "lattice" : make_spec;
  MaximalPairReport report = enumerate_maximal_pairs(l, mode, threads, id);

  std::vector<PairType> types;
  const std::vector<PairType>* types_ptr = nullptr;
  if (layout && mode == MaximalityMode::Problem1) {
    for (const auto& p : report.pairs) types.push_back(classify_pair(l, *layout, p.s, p.t));
    types_ptr = &types;
  }

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  write_report_text(out, l, report, types_ptr);
  if (!json_path.empty()) {
    std::ofstream jf(json_path);
    if (!jf) throw lattice_error("cannot open output file: " + json_path);
    jf << report_to_json(l, report, types_ptr).dump(2) << "\n";
  }
  return 0;
}

int cmd_verify_mnn(std::size_t n, unsigned threads) {
  CharacterizationReport rep = verify_characterization(n, threads);
  std::cout << "total=" << rep.enumerated.total << " expected=" << rep.expected.total;
  if (rep.unclassified == 0)
    std::cout << " all classified";
  else
    std::cout << " unclassified=" << rep.unclassified;
  std::cout << "\n";
  for (std::size_t k = 0; k < 5; ++k)
    std::cout << pair_type_tag(static_cast<PairType>(k)) << ": " << rep.enumerated.per_type[k]
              << " (expected " << rep.expected.per_type[k] << ")\n";
  std::cout << "templates matched once: " << (rep.every_template_seen_once ? "yes" : "no")
            << "\n";
  std::cout << "T-restriction: " << (rep.t_restriction_ok ? "holds" : "violated") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_convex_verify(const std::string& flat_path, const std::string& b_path,
                      const std::string& c_path) {
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    if (!in) throw geometry_error("cannot open file: " + p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  std::istringstream fs(slurp(flat_path));
  AffineFlat a = read_flat(fs);
  std::istringstream bs(slurp(b_path)), cs(slurp(c_path));
  QPolytope b = read_polytope(bs, a.ambient_dim());
  QPolytope c = read_polytope(cs, a.ambient_dim());

  QPolytope lhs = meet_with_flat(a, hull_join(b, c));
  QPolytope rhs = hull_join(meet_with_flat(a, b), c);
  std::cout << "lhs vertices:\n";
  write_polytope(std::cout, lhs);
  std::cout << "rhs vertices:\n";
  write_polytope(std::cout, rhs);
  bool ok = verify_affine_hull_identity(a, b, c);
  std::cout << "identity holds: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-lattice ST-distributivity toolkit"};
  app.require_subcommand(1);

  std::string make_spec, lattice_file, out_path, json_path;
  std::string law = "st-distributive", s_csv, t_csv, delta_csv, mode_name = "problem1";
  std::string flat_path, b_path, c_path, dot_name = "lattice";
  std::size_t n = 3;
  unsigned threads = 1;

  auto add_source = [&](CLI::App* c) {
    c->add_option("--make", make_spec, "built-in lattice, e.g. mnn:3, n5, chain:4");
    c->add_option("--lattice", lattice_file, "lattice text file");
  };

  CLI::App* c_make = app.add_subcommand("make", "print a built-in lattice in the text format");
  c_make->add_option("--make", make_spec, "constructor name")->required();
  c_make->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_check = app.add_subcommand("check", "check a distributivity/modularity law");
  add_source(c_check);
  c_check->add_option("--law", law,
                      "st-distributive, st-meet-distributive, st-join-distributive, "
                      "st-modular, st-meet-modular, st-join-modular, distributive, modular");
  c_check->add_option("--S", s_csv, "comma-separated labels for S");
  c_check->add_option("--T", t_csv, "comma-separated labels for T");

  CLI::App* c_elem = app.add_subcommand("elements", "distributive element subsets");
  add_source(c_elem);

  CLI::App* c_ss = app.add_subcommand("ss-check", "supersolvability with a fixed chain");
  add_source(c_ss);
  c_ss->add_option("--delta", delta_csv, "comma-separated labels of a maximal chain")
      ->required();

  CLI::App* c_enum = app.add_subcommand("enumerate", "enumerate maximal ST-pairs");
  add_source(c_enum);
  c_enum->add_option("--mode", mode_name, "problem1 (default) or definition4");
  c_enum->add_option("--threads", threads, "worker thread cap");
  c_enum->add_option("--json", json_path, "also dump a JSON report here");
  c_enum->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_classify = app.add_subcommand("classify", "type of one maximal pair of M_{n,n}");
  c_classify->add_option("--n", n, "level size, n >= 3")->required();
  c_classify->add_option("--S", s_csv, "comma-separated labels")->required();
  c_classify->add_option("--T", t_csv, "comma-separated labels")->required();

  CLI::App* c_verify = app.add_subcommand("verify-mnn", "check the M_{n,n} characterization");
  c_verify->add_option("--n", n, "level size, n >= 3")->required();
  c_verify->add_option("--threads", threads, "worker thread cap");

  CLI::App* c_convex = app.add_subcommand("convex", "exact convex geometry");
  CLI::App* c_identity =
      c_convex->add_subcommand("verify-identity", "A n conv(B,C) = conv(A n B, C)");
  c_identity->add_option("--flat", flat_path, "flat spec file (point + directions)")
      ->required();
  c_identity->add_option("--b", b_path, "polytope file for B")->required();
  c_identity->add_option("--c", c_path, "polytope file for C")->required();
  c_convex->require_subcommand(1);

  CLI::App* c_dot = app.add_subcommand("export-dot", "Hasse diagram as a DOT digraph");
  add_source(c_dot);
  c_dot->add_option("--name", dot_name, "graph name");
  c_dot->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::optional<MnnLayout> layout;
    if (*c_make) {
      Lattice l = make_named(make_spec);
      std::ofstream file;
      write_lattice(open_out(file, out_path), l);
      return 0;
    }
    if (*c_check) return cmd_check(load_lattice(make_spec, lattice_file), law, s_csv, t_csv);
    if (*c_elem) return cmd_elements(load_lattice(make_spec, lattice_file));
    if (*c_ss) {
      Lattice l = load_lattice(make_spec, lattice_file);
      bool ok = is_supersolvable_with(l, parse_set(l, delta_csv));
      std::cout << "supersolvable: " << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
    if (*c_enum) {
      Lattice l = load_lattice(make_spec, lattice_file, &layout);
      return cmd_enumerate(l, layout, mode_name, threads, make_spec, json_path, out_path);
    }
    if (*c_classify) {
      auto [l, lay] = m_nn(n);
      PairType t = classify_pair(l, lay, parse_set(l, s_csv), parse_set(l, t_csv));
      std::cout << "type: " << pair_type_tag(t) << "\n";
      return t == PairType::Unclassified ? 1 : 0;
    }
    if (*c_verify) return cmd_verify_mnn(n, threads);
    if (*c_convex) return cmd_convex_verify(flat_path, b_path, c_path);
    if (*c_dot) {
      Lattice l = load_lattice(make_spec, lattice_file);
      std::ofstream file;
      export_dot(open_out(file, out_path), l, dot_name);
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const dimension_mismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const geometry_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lattice_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
