// Batch frontend: read graphs, run analyses, emit JSON lines (graph6 lines
// for the generators). One object per input graph, in input order; exit
// code 0 only when every input parsed and every analysis completed.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "akgraph/antikekule.hpp"
#include "akgraph/extremal.hpp"
#include "akgraph/graph.hpp"
#include "akgraph/kekule.hpp"
#include "akgraph/matching.hpp"
#include "akgraph/scan.hpp"

using nlohmann::ordered_json;
using namespace akgraph;

namespace {

template <typename... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overload(Fs...) -> Overload<Fs...>;

struct InputGraph {
  std::string label;           // the graph6 line, or the file name for edge lists
  std::optional<Graph> graph;  // empty when parsing failed
  std::string error;
};

void push_graph6_lines(std::istream& in, std::vector<InputGraph>& out) {
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    InputGraph ig{line, std::nullopt, {}};
    try {
      ig.graph = parse_graph6(line);
    } catch (const std::exception& e) {
      ig.error = e.what();
    }
    out.push_back(std::move(ig));
  }
}

void push_edge_list(const std::string& label, std::istream& in, std::vector<InputGraph>& out) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  InputGraph ig{label, std::nullopt, {}};
  try {
    ig.graph = parse_edge_list(text);
  } catch (const std::exception& e) {
    ig.error = e.what();
  }
  out.push_back(std::move(ig));
}

// graph6: one graph per line; edge lists: one graph per file (or per stdin)
std::vector<InputGraph> load_inputs(const std::vector<std::string>& files, bool edge_format) {
  std::vector<InputGraph> out;
  if (files.empty()) {
    if (edge_format)
      push_edge_list("-", std::cin, out);
    else
      push_graph6_lines(std::cin, out);
    return out;
  }
  for (const std::string& path : files) {
    std::ifstream in(path);
    if (!in) {
      out.push_back({path, std::nullopt, "cannot open file"});
      continue;
    }
    if (edge_format)
      push_edge_list(path, in, out);
    else
      push_graph6_lines(in, out);
  }
  return out;
}

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

ordered_json cert_json(const Certificate& c) {
  return std::visit(
      Overload{
          [](const CertBaseEdge& e) {
            return ordered_json{{"kind", "edge"}, {"u", e.u}, {"v", e.v}};
          },
          [](const CertBaseCycle& cy) {
            return ordered_json{{"kind", "cycle"}, {"vertices", cy.vertices}};
          },
          [](const CertCorona& co) {
            ordered_json pairs = ordered_json::array();
            for (const auto& [host, leaf] : co.pairs)
              pairs.push_back(ordered_json::array({host, leaf}));
            return ordered_json{
                {"kind", "corona"}, {"host", co.host}, {"pairs", std::move(pairs)}};
          },
          [](const CertGlue& gl) {
            return ordered_json{{"kind", "glue"},
                                {"attach", gl.attach},
                                {"virtual_id", gl.virtual_id},
                                {"left", cert_json(*gl.left)},
                                {"right", cert_json(*gl.right)}};
          },
      },
      c.node);
}

ordered_json witness_json(const Witness& w) {
  ordered_json tree = ordered_json::array();
  for (const Edge& e : w.tree) tree.push_back(edge_json(e));
  ordered_json j{{"tree", std::move(tree)}};
  if (w.bad_vertex)
    j["bad_vertex"] = *w.bad_vertex;
  else
    j["bad_vertex"] = nullptr;
  j["odd_order"] = w.odd_order;
  return j;
}

void emit(const ordered_json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

// Run `fn(graph, json)` for every parsed input, parallel across inputs, and
// print the buffered objects in input order. Any error object fails the run.
template <typename Fn>
int run_per_graph(const std::vector<InputGraph>& inputs, bool pretty, Fn&& fn) {
  std::vector<ordered_json> results(inputs.size());
  const std::int64_t count = static_cast<std::int64_t>(inputs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    const InputGraph& in = inputs[static_cast<std::size_t>(i)];
    ordered_json j{{"input", in.label}};
    if (!in.graph) {
      j["error"] = in.error;
    } else {
      try {
        fn(*in.graph, j);
      } catch (const std::exception& e) {
        j = ordered_json{{"input", in.label}, {"error", e.what()}};
      }
    }
    results[static_cast<std::size_t>(i)] = std::move(j);
  }
  bool failed = false;
  for (const ordered_json& j : results) {
    failed = failed || j.contains("error");
    emit(j, pretty);
  }
  return failed ? 1 : 0;
}

Graph named_graph(const std::string& kind, int n) {
  if (kind == "cycle") return gen_cycle(n);
  if (kind == "path") return gen_path(n);
  if (kind == "complete") return gen_complete(n);
  throw std::invalid_argument("unknown base kind: " + kind);
}

// "graph6:attach-vertex", split at the last colon (':' never occurs in graph6)
Attachment parse_attachment(const std::string& text) {
  const std::size_t colon = text.rfind(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--part needs the form <graph6>:<attach vertex>");
  Attachment a;
  a.part = parse_graph6(text.substr(0, colon));
  a.vertex = std::stoi(text.substr(colon + 1));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide no-anti-Kekulé-set membership, compute anti-Kekulé numbers,\n"
               "classify matching edges, generate graphs, and search extremal sizes"};
  app.require_subcommand(1);

  // ---- recognize -----------------------------------------------------------
  std::vector<std::string> rec_files;
  std::string rec_format = "graph6";
  bool rec_cert = false, rec_wit = false, rec_oracle = false, rec_pretty = false;
  CLI::App* rec = app.add_subcommand(
      "recognize", "does every spanning tree of each graph have a perfect matching?");
  rec->add_option("files", rec_files, "input files (stdin when absent)");
  rec->add_option("--format", rec_format, "graph6 (one per line) or edges (one per file)")
      ->check(CLI::IsMember({"graph6", "edges"}));
  rec->add_flag("--certificate", rec_cert, "attach the construction certificate for members");
  rec->add_flag("--witness", rec_wit, "attach the refuting spanning tree for non-members");
  rec->add_flag("--oracle", rec_oracle,
                "cross-check against spanning-tree enumeration (small graphs only)");
  rec->add_flag("--pretty", rec_pretty, "indent the JSON output");

  // ---- ak ------------------------------------------------------------------
  std::vector<std::string> ak_files;
  std::string ak_format = "graph6";
  bool ak_all = false, ak_pretty = false;
  int ak_max_k = -1;
  CLI::App* ak = app.add_subcommand("ak", "exact anti-Kekulé number per graph");
  ak->add_option("files", ak_files, "input files (stdin when absent)");
  ak->add_option("--format", ak_format, "graph6 (one per line) or edges (one per file)")
      ->check(CLI::IsMember({"graph6", "edges"}));
  ak->add_flag("--all-min-sets", ak_all, "list every minimum anti-Kekulé set");
  ak->add_option("--max-k", ak_max_k,
                 "largest removal-set size to try (default: the edge count)");
  ak->add_flag("--pretty", ak_pretty, "indent the JSON output");

  // ---- edges ---------------------------------------------------------------
  std::vector<std::string> ed_files;
  std::string ed_format = "graph6";
  bool ed_pretty = false;
  CLI::App* ed = app.add_subcommand(
      "edges", "classify each edge by its role across all perfect matchings");
  ed->add_option("files", ed_files, "input files (stdin when absent)");
  ed->add_option("--format", ed_format, "graph6 (one per line) or edges (one per file)")
      ->check(CLI::IsMember({"graph6", "edges"}));
  ed->add_flag("--pretty", ed_pretty, "indent the JSON output");

  // ---- gen -----------------------------------------------------------------
  std::string gen_kind;
  std::string gen_base;
  std::string gen_host;
  std::vector<std::string> gen_parts;
  int gen_n = 0, gen_half = 0, gen_count = 1;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "emit generated graphs as graph6 lines");
  gen->add_option("kind", gen_kind,
                  "cycle | path | complete | corona | compose | sample-g | sample-pm-tree")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "complete", "corona", "compose", "sample-g",
                             "sample-pm-tree"}));
  gen->add_option("--n", gen_n, "order for cycle/path/complete, base order for corona");
  gen->add_option("--base", gen_base, "corona base: cycle | path | complete");
  gen->add_option("--host", gen_host, "compose host graph (graph6)");
  gen->add_option("--part", gen_parts,
                  "compose attachment <graph6>:<attach vertex>, one per host vertex");
  gen->add_option("--half-order", gen_half, "half order for the samplers (output order 2n)");
  gen->add_option("--seed", gen_seed, "sampler seed (required for sample kinds)");
  gen->add_option("--count", gen_count,
                  "number of samples, drawn with seed, seed+1, ... (default 1)");

  // ---- extremal ------------------------------------------------------------
  int ex_half = 0;
  bool ex_exhaustive = false, ex_pretty = false;
  std::string ex_file;
  CLI::App* ex = app.add_subcommand(
      "extremal", "largest member size at one order: exhaustive sweep or a file of candidates");
  ex->add_option("--half-order", ex_half, "half order n (graphs have order 2n)")->required();
  CLI::Option* ex_mode_a = ex->add_flag("--exhaustive", ex_exhaustive,
                                        "sweep every connected labeled graph (half order <= 3)");
  CLI::Option* ex_mode_b =
      ex->add_option("--file", ex_file, "graph6 file of candidate members to search instead");
  ex_mode_a->excludes(ex_mode_b);
  ex->add_flag("--pretty", ex_pretty, "indent the JSON output");

  CLI11_PARSE(app, argc, argv);

  if (rec->parsed()) {
    return run_per_graph(
        load_inputs(rec_files, rec_format == "edges"), rec_pretty,
        [&](const Graph& g, ordered_json& j) {
          RecognizeResult r = recognize(g);
          j["order"] = g.order();
          j["size"] = g.size();
          j["member"] = r.member;
          if (rec_cert && r.certificate) j["certificate"] = cert_json(*r.certificate);
          if (rec_wit && r.witness) j["witness"] = witness_json(*r.witness);
          if (rec_oracle) j["oracle_agrees"] = r.member == recognize_oracle(g);
        });
  }

  if (ak->parsed()) {
    return run_per_graph(
        load_inputs(ak_files, ak_format == "edges"), ak_pretty,
        [&](const Graph& g, ordered_json& j) {
          AkResult r = anti_kekule_number(g, ak_max_k, ak_all);
          switch (r.kind) {
            case AkKind::kNumber: j["ak"] = r.k; break;
            case AkKind::kNoneExists: j["ak"] = "none"; break;
            case AkKind::kZero: j["ak"] = 0; break;
          }
          if (ak_all) {
            ordered_json sets = ordered_json::array();
            if (r.kind == AkKind::kZero) {
              // the empty set is the unique minimum: nothing to remove
              sets.push_back(ordered_json::array());
            } else {
              for (const std::vector<Edge>& s : r.min_sets) {
                ordered_json one = ordered_json::array();
                for (const Edge& e : s) one.push_back(edge_json(e));
                sets.push_back(std::move(one));
              }
            }
            j["min_sets"] = std::move(sets);
          }
        });
  }

  if (ed->parsed()) {
    return run_per_graph(load_inputs(ed_files, ed_format == "edges"), ed_pretty,
                         [&](const Graph& g, ordered_json& j) {
                           ordered_json list = ordered_json::array();
                           for (const Edge& e : g.edges())
                             list.push_back(ordered_json{
                                 {"edge", edge_json(e)},
                                 {"class", to_string(classify_edge(g, e))}});
                           j["edges"] = std::move(list);
                         });
  }

  if (gen->parsed()) {
    try {
      std::vector<Graph> out;
      if (gen_kind == "cycle" || gen_kind == "path" || gen_kind == "complete") {
        if (gen->count("--n") == 0)
          throw std::invalid_argument("gen " + gen_kind + " needs --n");
        out.push_back(named_graph(gen_kind, gen_n));
      } else if (gen_kind == "corona") {
        if (gen->count("--base") == 0 || gen->count("--n") == 0)
          throw std::invalid_argument("gen corona needs --base and --n");
        out.push_back(corona(named_graph(gen_base, gen_n)));
      } else if (gen_kind == "compose") {
        if (gen->count("--host") == 0 || gen_parts.empty())
          throw std::invalid_argument("gen compose needs --host and at least one --part");
        std::vector<Attachment> parts;
        for (const std::string& p : gen_parts) parts.push_back(parse_attachment(p));
        out.push_back(compose(parse_graph6(gen_host), parts).graph);
      } else {  // sample-g | sample-pm-tree
        if (gen->count("--half-order") == 0 || gen->count("--seed") == 0)
          throw std::invalid_argument("gen " + gen_kind + " needs --half-order and --seed");
        if (gen_count < 1) throw std::invalid_argument("--count must be at least 1");
        for (int i = 0; i < gen_count; ++i)
          out.push_back(gen_kind == "sample-g"
                            ? sample_member(gen_half, gen_seed + static_cast<std::uint64_t>(i))
                            : sample_pm_tree(gen_half, gen_seed + static_cast<std::uint64_t>(i)));
      }
      for (const Graph& g : out) std::cout << encode_graph6(g) << "\n";
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "gen: " << e.what() << "\n";
      return 1;
    }
  }

  if (ex->parsed()) {
    ordered_json j;
    int rc = 0;
    try {
      if (ex_exhaustive == ex->count("--file")) {
        throw std::invalid_argument("pick exactly one of --exhaustive and --file");
      }
      const int f = max_member_size(ex_half);
      int max_found = -1;
      std::vector<std::string> winners;
      if (ex_exhaustive) {
        if (ex_half > 3)
          throw std::invalid_argument(
              "exhaustive sweeps stop at half order 3 (order 6); use --file beyond that");
        scan::ExtremalScan s = scan::extremal_scan_parallel(ex_half);
        max_found = s.max_size;
        winners = s.argmax_graph6;
      } else {
        std::ifstream in(ex_file);
        if (!in) throw std::invalid_argument("cannot open file: " + ex_file);
        std::vector<InputGraph> inputs;
        push_graph6_lines(in, inputs);
        std::vector<Graph> graphs;
        for (const InputGraph& ig : inputs) {
          if (!ig.graph)
            throw std::invalid_argument("bad graph6 line '" + ig.label + "': " + ig.error);
          graphs.push_back(*ig.graph);
        }
        MaxSizeResult r = max_size_search(graphs, ex_half);
        max_found = r.max_size;
        for (const Graph& g : r.argmax) winners.push_back(encode_graph6(g));
      }
      // exhaustive sweeps must attain the closed form; a candidate file
      // merely must not beat it
      const bool matches = ex_exhaustive ? max_found == f : max_found <= f;
      j = ordered_json{{"n", ex_half},
                       {"f", f},
                       {"max_found", max_found},
                       {"extremal_graphs", winners},
                       {"matches_bound", matches}};
    } catch (const std::exception& e) {
      j = ordered_json{{"error", e.what()}};
      rc = 1;
    }
    emit(j, ex_pretty);
    return rc;
  }

  return 0;
}
