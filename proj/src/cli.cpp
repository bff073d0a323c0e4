#include "redwords/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "redwords/checked.hpp"
#include "redwords/family.hpp"
#include "redwords/graph.hpp"
#include "redwords/iso.hpp"
#include "redwords/perm.hpp"
#include "redwords/simplex.hpp"
#include "redwords/tableaux.hpp"
#include "redwords/verify.hpp"
#include "redwords/words.hpp"

namespace redwords {

namespace {

std::string set_text(const std::set<int>& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int v : s) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string tuple_text(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

// "2d^2 z^3 + (2d - 4d^2 + 2d^3) z^4 + ..." — multi-term coefficients get parens.
std::string series_text(const DegreeSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t].is_zero()) continue;
    if (!first) out << " + ";
    const std::string c = s[t].to_string("d");
    const bool wrap = c.find(' ') != std::string::npos;
    out << (wrap ? "(" + c + ")" : c) << " z^" << t;
    first = false;
  }
  return first ? "0" : out.str();
}

void print_perm_info(const Permutation& w, bool as_json, std::ostream& out) {
  const auto gr = grassmannian_descent(w);
  if (as_json) {
    nlohmann::ordered_json doc;
    doc["permutation"] = w.to_string();
    doc["n"] = w.n();
    doc["length"] = length(w);
    doc["descents"] = descent_set(w);
    doc["cycle_type"] = cycle_type(w).parts;
    doc["fixed_points"] = fixed_points(w);
    doc["lehmer_code"] = lehmer_code(w);
    doc["grassmannian"] = gr.has_value();
    if (gr) doc["descent_position"] = *gr;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "permutation   " << w.to_string() << "\n";
  out << "n             " << w.n() << "\n";
  out << "length        " << length(w) << "\n";
  out << "descents      " << set_text(descent_set(w)) << "\n";
  out << "cycle type    " << cycle_type(w).to_string() << "\n";
  out << "fixed points  " << set_text(fixed_points(w)) << "\n";
  out << "lehmer code   " << tuple_text(lehmer_code(w)) << "\n";
  if (gr)
    out << "grassmannian  yes, descent at " << *gr << "\n";
  else
    out << "grassmannian  no\n";
}

int print_family_report(const FamilyReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    doc["order_predicted"] = r.order_predicted;
    doc["order_actual"] = r.order_actual;
    doc["degree_poly_predicted"] = r.degree_poly_predicted.to_string("d");
    doc["degree_poly_actual"] = r.degree_poly_actual.to_string("d");
    doc["four_cycles_predicted"] = r.four_cycles_predicted;
    doc["four_cycles_actual"] = r.four_cycles_actual;
    doc["degree_sum"] = r.degree_sum;
    doc["braid_vertex_count"] = r.braid_vertex_count;
    doc["pass"] = r.pass;
    out << doc.dump(2) << "\n";
  } else {
    out << "family permutation  " << family_permutation(r.n).to_string() << "\n";
    out << "order               predicted " << r.order_predicted << "  actual "
        << r.order_actual << "\n";
    out << "degree polynomial   predicted " << r.degree_poly_predicted.to_string("d")
        << "  actual " << r.degree_poly_actual.to_string("d") << "\n";
    out << "4-cycles            predicted " << r.four_cycles_predicted << "  actual "
        << r.four_cycles_actual << "\n";
    out << "degree sum          " << r.degree_sum << " (4*C(n-1,2) = "
        << 4 * binomial(r.n - 1, 2) << ")\n";
    out << "braid vertices      " << r.braid_vertex_count << " (2(n-2) = "
        << 2 * (r.n - 2) << ")\n";
    out << "result              " << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return r.pass ? 0 : 1;
}

int print_series_report(const SeriesReport& rep, std::ostream& out) {
  out << "degree-polynomial generating series, coefficients of z^4..z^" << rep.max_n
      << "\n";
  out << "closed-form numerator  " << series_text(rep.closed_form_numerator) << "\n";
  out << "termwise numerator     " << series_text(rep.termwise_numerator) << "\n";
  for (int n = 4; n <= rep.max_n; ++n) {
    const bool match = rep.closed_form[n] == rep.termwise[n];
    out << "z^" << n << "  " << rep.termwise[n].to_string("d")
        << (match ? "  (both routes)" : "  DIFFERS: closed form gives " +
                                            rep.closed_form[n].to_string("d"))
        << "\n";
  }
  out << "difference (closed form - termwise)  " << series_text(rep.difference) << "\n";
  return rep.termwise_matches ? 0 : 1;
}

std::string graph_text(const LabeledGraph& g, const std::string& format) {
  return format == "json" ? to_json(g) : to_dot(g);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine for reduced words, recording tableaux and lattice graphs"};
  app.name("redwords");
  app.require_subcommand(1);

  std::string perm_text, word_format = "dot", graph_format = "dot", emit_format = "dot";
  std::string outdir;
  bool as_json = false, count_only = false, recording_only = false;
  int n = 0, k = 0, max_n = 9, series_max_n = 12;
  std::size_t budget = kDefaultWordBudget;
  int rc = 0;

  auto* perm = app.add_subcommand("perm", "permutation statistics");
  perm->require_subcommand(1);
  auto* perm_info = perm->add_subcommand("info", "length, descents, cycle type, code");
  perm_info->add_option("permutation", perm_text, "one-line notation, e.g. 51342 or 5,1,3,4,2")
      ->required();
  perm_info->add_flag("--json", as_json, "emit JSON");
  perm_info->callback([&] { print_perm_info(Permutation::parse(perm_text), as_json, out); });

  auto* words = app.add_subcommand("words", "reduced words and their move graph");
  words->require_subcommand(1);
  auto* words_enum = words->add_subcommand("enumerate", "list R(w)");
  words_enum->add_option("permutation", perm_text)->required();
  words_enum->add_flag("--count-only", count_only, "print |R(w)| only");
  words_enum->add_flag("--json", as_json, "emit JSON");
  words_enum->add_option("--budget", budget, "word-count cap");
  words_enum->callback([&] {
    const Permutation w = Permutation::parse(perm_text);
    if (count_only && !as_json) {
      out << count_reduced_words(w, budget) << "\n";
      return;
    }
    if (as_json) {
      nlohmann::ordered_json doc;
      doc["permutation"] = w.to_string();
      if (count_only) {
        doc["count"] = count_reduced_words(w, budget);
      } else {
        doc["words"] = nlohmann::ordered_json::array();
        for (const Word& a : enumerate_reduced_words(w, budget))
          doc["words"].push_back(word_key(a, w.n()));
        doc["count"] = doc["words"].size();
      }
      out << doc.dump(2) << "\n";
      return;
    }
    for (const Word& a : enumerate_reduced_words(w, budget))
      out << word_key(a, w.n()) << "\n";
  });
  auto* words_graph = words->add_subcommand("graph", "move graph of R(w)");
  words_graph->add_option("permutation", perm_text)->required();
  words_graph->add_option("--format", word_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  words_graph->add_option("--budget", budget, "word-count cap");
  words_graph->callback([&] {
    out << graph_text(build_word_graph(Permutation::parse(perm_text), budget), word_format);
  });

  auto* family = app.add_subcommand("family", "checks for the studied permutation family");
  family->require_subcommand(1);
  auto* family_verify = family->add_subcommand("verify", "predictions vs brute force");
  family_verify->add_option("n", n, "rank, n >= 4")->required();
  family_verify->add_flag("--json", as_json, "emit JSON");
  family_verify->add_option("--budget", budget, "word-count cap");
  family_verify->callback([&] { rc = print_family_report(verify_family(n, budget), as_json, out); });
  auto* family_series = family->add_subcommand("series", "degree-polynomial generating series");
  family_series->add_option("--max-n", series_max_n, "expansion order (default 12)");
  family_series->callback([&] { rc = print_series_report(generating_series_check(series_max_n), out); });

  auto* tableaux = app.add_subcommand("tableaux", "row-strict hook tableaux");
  tableaux->require_subcommand(1);
  auto* tableaux_list = tableaux->add_subcommand("list", "tableaux of shape (n-2,1,1)");
  tableaux_list->add_option("n", n, "rank, n >= 4")->required();
  tableaux_list->add_flag("--recording-only", recording_only, "only recording tableaux");
  tableaux_list->add_flag("--json", as_json, "emit JSON");
  tableaux_list->callback([&] {
    const auto ts = recording_only ? enumerate_recording(n) : enumerate_rst(n);
    if (as_json) {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const HookTableau& t : ts) {
        nlohmann::ordered_json o;
        o["first_row"] = t.first_row;
        o["box2"] = t.box2;
        o["box3"] = t.box3;
        o["reading"] = row_reading(t).to_string();
        o["rank"] = tableau_rank(t);
        doc.push_back(std::move(o));
      }
      out << doc.dump(2) << "\n";
      return;
    }
    for (const HookTableau& t : ts)
      out << t.to_string() << "  reading " << row_reading(t).to_string() << "  rank "
          << tableau_rank(t) << (is_recording(t) ? "  recording" : "") << "\n";
  });

  auto* simplex = app.add_subcommand("simplex", "dilated 2-simplex lattice points");
  simplex->require_subcommand(1);
  auto* simplex_points = simplex->add_subcommand("points", "lattice points with weights");
  simplex_points->add_option("k", k, "dilation factor, k >= 0")->required();
  simplex_points->callback([&] {
    for (const LatticePoint& p : enumerate_lattice_points(k))
      out << p.to_string() << "  weight " << weight(p) << "  partition "
          << fitted_partition(p).to_string() << "\n";
  });
  auto* simplex_gaussian = simplex->add_subcommand("gaussian", "rank polynomial [k+2 2]_q");
  simplex_gaussian->add_option("k", k, "dilation factor, k >= 0")->required();
  simplex_gaussian->callback([&] {
    const IntPolynomial g = gaussian_binomial_k2(k);
    out << "[" << k + 2 << " 2]_q = " << g.to_string("q") << "\n";
    out << "value at q=1: " << g.eval(1) << " = ehrhart(" << k << ")\n";
  });
  auto* simplex_graph = simplex->add_subcommand("graph", "cover graph of the lattice points");
  simplex_graph->add_option("k", k, "dilation factor, k >= 0")->required();
  simplex_graph->add_option("--format", graph_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  simplex_graph->callback([&] { out << graph_text(build_lattice_graph(k), graph_format); });

  auto* iso = app.add_subcommand("iso", "isomorphisms between the five graphs");
  iso->require_subcommand(1);
  auto* iso_chain = iso->add_subcommand("chain", "verify the five-way chain");
  iso_chain->add_option("n", n, "rank, n >= 4")->required();
  iso_chain->add_option("--emit", emit_format, "graph file format: dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  iso_chain->add_option("--outdir", outdir, "write graphs, maps and summary here");
  iso_chain->add_option("--budget", budget, "word-count cap");
  iso_chain->callback([&] {
    const ChainReport rep = isomorphism_chain(n, budget);
    const std::string summary = chain_report_text(rep);
    out << summary;
    if (!outdir.empty()) {
      const std::filesystem::path dir{outdir};
      std::filesystem::create_directories(dir);
      for (const auto& [name, g] : rep.graphs)
        write_file(dir / (name + (emit_format == "json" ? ".json" : ".dot")),
                   graph_text(g, emit_format));
      write_file(dir / "maps.json", chain_maps_json(rep));
      write_file(dir / "summary.txt", summary);
      out << "wrote " << rep.graphs.size() << " graphs, maps.json and summary.txt to "
          << dir.string() << "\n";
    }
    rc = rep.all_verified ? 0 : 1;
  });

  auto* verify = app.add_subcommand("verify", "verification suite");
  verify->require_subcommand(1);
  auto* verify_all = verify->add_subcommand("all", "run every check");
  verify_all->add_option("--max-n", max_n, "family sweep bound (default 9)")
      ->check(CLI::Range(4, 12));
  verify_all->add_option("--budget", budget, "word-count cap");
  verify_all->callback([&] {
    rc = run_verification(VerifyOptions{max_n, budget}, out) ? 0 : 1;
  });

  std::vector<const char*> argv;
  argv.push_back("redwords");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace redwords
