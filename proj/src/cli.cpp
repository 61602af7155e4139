#include "quivoa/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "quivoa/algebra.hpp"
#include "quivoa/error.hpp"
#include "quivoa/graph.hpp"
#include "quivoa/io.hpp"
#include "quivoa/iso.hpp"
#include "quivoa/mispace.hpp"
#include "quivoa/norm_bounds.hpp"
#include "quivoa/reps.hpp"
#include "quivoa/word.hpp"

namespace quivoa {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DirectedMultigraph load_graph(const std::string& path) {
  return parse_graph(slurp(path)).graph;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char c : s) {
    if (c == sep) {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

Word parse_word_arg(const DirectedMultigraph& q, const std::string& text) {
  Word w;
  for (const std::string& id : split(text, '.')) {
    if (q.vertex_index(id) >= 0)
      w.push_back(vertex_letter(q, id));
    else
      w.push_back(edge_letter(q, id));
  }
  if (w.empty()) throw DomainError("empty word");
  return w;
}

void emit(const Json& report, bool json, std::ostream& out) {
  if (json) {
    out << report.dump(2) << "\n";
    return;
  }
  // flat text rendering: key: value per top-level entry
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() || value.is_object())
      out << key << ": " << value.dump() << "\n";
    else if (value.is_string())
      out << key << ": " << value.get<std::string>() << "\n";
    else
      out << key << ": " << value.dump() << "\n";
  }
}

Json witness_json(const IsoWitness& w) {
  Json j;
  j["verdict"] = w.verdict;
  if (w.vertex_map) j["vertex_map"] = *w.vertex_map;
  if (w.edge_map) j["edge_map"] = *w.edge_map;
  if (w.refutation) j["refutation"] = *w.refutation;
  return j;
}

Json shadow_json(const UndirectedMultigraph& s) {
  Json j;
  j["vertices"] = s.vertex_ids();
  Json pairs = Json::array();
  for (const auto& [pair, count] : s.multiplicity()) {
    Json p;
    p["pair"] = {s.vertex_ids()[pair.first], s.vertex_ids()[pair.second]};
    p["multiplicity"] = count;
    pairs.push_back(p);
  }
  j["multiplicity"] = pairs;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quivoa: universal operator algebras of finite directed graphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a JSON report instead of text");

  // reduce
  std::string g_path, word_text;
  auto* cmd_reduce = app.add_subcommand(
      "reduce", "Normal form of a word (letters joined by '.').\n"
                "JSON schema: {input, reduced, length}");
  cmd_reduce->add_option("graph", g_path, "graph file")->required();
  cmd_reduce->add_option("word", word_text, "word, e.g. v1.t")->required();

  // semigroup
  std::string sg_path;
  int max_len = 3;
  auto* cmd_semigroup = app.add_subcommand(
      "semigroup", "Enumerate reduced words up to a length.\n"
                   "JSON schema: {max_len, count, words[], identity}");
  cmd_semigroup->add_option("graph", sg_path, "graph file")->required();
  cmd_semigroup->add_option("--max-len", max_len, "maximum word length")
      ->check(CLI::Range(1, kMaxEnumerateLength));

  // mispace
  std::string mi_path;
  auto* cmd_mispace = app.add_subcommand(
      "mispace", "Component table of the maximal ideal space.\n"
                 "JSON schema: {n_components, components[{subset,dim,degree}], dims_sorted}");
  cmd_mispace->add_option("graph", mi_path, "graph file")->required();

  // invariants
  std::string inv_path;
  auto* cmd_invariants = app.add_subcommand(
      "invariants", "Invariants recovered from the maximal ideal space.\n"
                    "JSON schema: {n_components, vertex_count, edge_count, alpha, beta, "
                    "total_dim, k0_rank}");
  cmd_invariants->add_option("graph", inv_path, "graph file")->required();

  // recover-shadow
  std::string rs_path;
  std::uint64_t blind_seed = 0;
  auto* cmd_recover = app.add_subcommand(
      "recover-shadow", "Blind the descriptor, rebuild the shadow, compare.\n"
                        "JSON schema: {blind_seed, recovered, matches_true_shadow, witness}");
  cmd_recover->add_option("graph", rs_path, "graph file")->required();
  cmd_recover->add_option("--blind-seed", blind_seed, "blinding seed (default 0)");

  // iso
  std::string iso_model, iso_g1, iso_g2;
  auto* cmd_iso = app.add_subcommand(
      "iso", "Isomorphism decision for the chosen algebra model.\n"
             "JSON schema: {model, verdict, vertex_map?, edge_map?, refutation?}");
  cmd_iso->add_option("--model", iso_model, "oa | gcm")
      ->required()
      ->check(CLI::IsMember({"oa", "gcm"}));
  cmd_iso->add_option("graph1", iso_g1, "first graph file")->required();
  cmd_iso->add_option("graph2", iso_g2, "second graph file")->required();

  // eval
  std::string ev_path, ev_expr, ev_subset, ev_lambda;
  auto* cmd_eval = app.add_subcommand(
      "eval", "Evaluate a character on an expression.\n"
              "JSON schema: {subset[], lambda{}, value:{re,im}, abs}");
  cmd_eval->add_option("--subset", ev_subset, "comma-separated vertex ids")->required();
  cmd_eval->add_option("--lambda", ev_lambda, "edge values, e.g. t1=0.5,t3=i");
  cmd_eval->add_option("graph", ev_path, "graph file")->required();
  cmd_eval->add_option("expr", ev_expr, "algebra expression")->required();

  // norm-bounds
  std::string nb_path, nb_expr;
  bool nb_gcm = false;
  BoundConfig cfg;
  std::string nb_dims;
  auto* cmd_norm = app.add_subcommand(
      "norm-bounds", "Certified lower/upper bounds for the universal norm.\n"
                     "JSON schema: {model, seed, lower, upper, lower_witness, upper_witness}");
  cmd_norm->add_flag("--gcm", nb_gcm, "bound the Gelfand-Naimark seminorm on the double");
  cmd_norm->add_option("--grid", cfg.character_grid, "torus points per coordinate");
  cmd_norm->add_option("--refine", cfg.refinement_steps, "ascent/refinement passes");
  cmd_norm->add_option("--trials", cfg.rep_trials, "representation trials");
  cmd_norm->add_option("--dims", nb_dims, "comma-separated representation dimensions");
  cmd_norm->add_option("--seed", cfg.seed, "sweep seed (default 0)");
  cmd_norm->add_option("graph", nb_path, "graph file")->required();
  cmd_norm->add_option("expr", nb_expr, "algebra expression")->required();

  // lemmas
  int lm_trials = 500;
  std::uint64_t lm_seed = 0;
  auto* cmd_lemmas = app.add_subcommand(
      "lemmas", "Positivity lemma suite on random concrete matrices.\n"
                "JSON schema: {seed, trials, lemmas[{name,trials,failures}], all_passed}");
  cmd_lemmas->add_option("--trials", lm_trials, "trials per lemma")->check(CLI::PositiveNumber);
  cmd_lemmas->add_option("--seed", lm_seed, "suite seed (default 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));  // CLI11's vector overload expects reversed args
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json report;
    if (*cmd_reduce) {
      const DirectedMultigraph q = load_graph(g_path);
      const Word w = parse_word_arg(q, word_text);
      const Word r = reduce(q, w);
      report["input"] = word_text;
      report["reduced"] = word_str(q, r);
      report["length"] = r.size();
    } else if (*cmd_semigroup) {
      const DirectedMultigraph q = load_graph(sg_path);
      report["max_len"] = max_len;
      Json words = Json::array();
      for (const Word& w : enumerate_reduced(q, max_len)) words.push_back(word_str(q, w));
      report["count"] = words.size();
      report["words"] = words;
      const auto id = semigroup_identity(q);
      report["identity"] = id ? Json(word_str(q, *id)) : Json(nullptr);
    } else if (*cmd_mispace) {
      const DirectedMultigraph q = load_graph(mi_path);
      const MaxIdealDescriptor d = build_mispace(q);
      report["n_components"] = d.components.size();
      Json comps = Json::array();
      std::vector<int> dims;
      for (const auto& c : d.components) {
        Json jc;
        Json subset = Json::array();
        for (int v = 0; v < q.vertex_count(); ++v)
          if ((c.subset >> v) & 1u) subset.push_back(q.vertex_id(v));
        jc["subset"] = subset;
        jc["dim"] = c.dim;
        jc["degree"] = c.degree;
        comps.push_back(jc);
        dims.push_back(c.dim);
      }
      std::sort(dims.begin(), dims.end());
      report["components"] = comps;
      report["dims_sorted"] = dims;
    } else if (*cmd_invariants) {
      const DirectedMultigraph q = load_graph(inv_path);
      const InvariantReport r = invariants(build_mispace(q));
      report["n_components"] = r.n_components;
      report["vertex_count"] = r.vertex_count;
      report["edge_count"] = r.edge_count;
      report["alpha"] = r.alpha;
      report["beta"] = r.beta;
      report["total_dim"] = r.total_dim;
      report["k0_rank"] = r.k0_rank;
    } else if (*cmd_recover) {
      const DirectedMultigraph q = load_graph(rs_path);
      const UndirectedMultigraph recovered =
          recover_shadow(blind(build_mispace(q), blind_seed));
      const IsoWitness w = udgraph_isomorphic(recovered, shadow(q));
      report["blind_seed"] = blind_seed;
      report["recovered"] = shadow_json(recovered);
      report["matches_true_shadow"] = w.verdict;
      report["witness"] = witness_json(w);
    } else if (*cmd_iso) {
      const DirectedMultigraph q1 = load_graph(iso_g1);
      const DirectedMultigraph q2 = load_graph(iso_g2);
      const IsoWitness w =
          iso_model == "oa" ? oa_isomorphic(q1, q2) : gcm_isomorphic(q1, q2);
      report["model"] = iso_model;
      report.update(witness_json(w));
    } else if (*cmd_eval) {
      const DirectedMultigraph q = load_graph(ev_path);
      const std::uint32_t subset = subset_mask_of(q, split(ev_subset, ','));
      std::map<int, std::complex<double>> lambda;
      for (const std::string& item : split(ev_lambda, ',')) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("bad --lambda entry: " + item);
        const int e = q.edge_index(item.substr(0, eq));
        if (e < 0) throw DomainError("unknown edge in --lambda: " + item);
        lambda[e] = parse_complex_literal(item.substr(eq + 1));
      }
      const Character c = Character::make(q, subset, std::move(lambda));
      const AlgebraElement x = parse_expr(ev_expr, q);
      const std::complex<double> value = char_eval(c, x);
      report["subset"] = split(ev_subset, ',');
      Json jl;
      for (const auto& [e, v] : c.lambda)
        jl[q.edge(e).id] = {round_for_report(v.real()), round_for_report(v.imag())};
      report["lambda"] = jl;
      report["value"] = {{"re", round_for_report(value.real())},
                        {"im", round_for_report(value.imag())}};
      report["abs"] = round_for_report(std::abs(value));
    } else if (*cmd_norm) {
      const DirectedMultigraph q = load_graph(nb_path);
      if (!nb_dims.empty()) {
        cfg.rep_dims.clear();
        for (const std::string& d : split(nb_dims, ',')) cfg.rep_dims.push_back(std::stoi(d));
      }
      NormBounds b;
      if (nb_gcm) {
        const DoubledGraph d = double_graph(q);
        b = gcm_norm_bounds(d, parse_expr(nb_expr, d), cfg);
      } else {
        b = oa_norm_bounds(q, parse_expr(nb_expr, q), cfg);
      }
      report["model"] = nb_gcm ? "gcm" : "oa";
      report["seed"] = cfg.seed;
      report["lower"] = round_for_report(b.lower);
      report["upper"] = round_for_report(b.upper);
      report["lower_witness"] = b.lower_witness;
      report["upper_witness"] = b.upper_witness;
    } else if (*cmd_lemmas) {
      const LemmaReport r = lemma_suite(lm_seed, lm_trials);
      report["seed"] = lm_seed;
      report["trials"] = lm_trials;
      Json lemmas = Json::array();
      for (const auto& e : r.entries)
        lemmas.push_back({{"name", e.name}, {"trials", e.trials}, {"failures", e.failures}});
      report["lemmas"] = lemmas;
      report["all_passed"] = r.all_passed();
    }
    emit(report, json, out);
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace quivoa
