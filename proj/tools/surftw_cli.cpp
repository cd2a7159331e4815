// Command-line front end: generators, transformations and checks. Reports go
// to stdout as JSON lines, a human summary to stderr.
//
// Exit codes: 0 success, 1 property violation, 2 invalid input, 3 budget.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "surftw/face_width.hpp"
#include "surftw/io.hpp"
#include "surftw/treewidth.hpp"

using namespace surftw;

namespace {

constexpr int kOk = 0, kViolation = 1, kInvalid = 2, kBudget = 3;

void emit(const Json& line) { std::cout << line.dump() << '\n'; }

void write_or_print(const std::string& path, const Json& j) {
  if (path.empty()) emit(j);
  else write_text_file(path, j.dump() + "\n");
}

// A document holding an embedding: an incidence map with vclass, or a graph map.
EmbeddedHypergraph embedding_from(const Json& j) {
  if (j.contains("vclass")) return embedded_from_json(j);
  return EmbeddedHypergraph::from_graph_map(map_from_json(j));
}

void dump_failures(const std::string& dir, const std::vector<FuzzFailure>& failures) {
  if (dir.empty() || failures.empty()) return;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < failures.size(); ++i) {
    Json j = to_json(failures[i].instance);
    j["reason"] = failures[i].reason;
    write_text_file(dir + "/failure_" + std::to_string(i) + ".json", j.dump() + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surftw: tree-width of embedded hypergraphs and their duals"};
  app.require_subcommand(1);
  int oracle = -1;
  app.add_option("--oracle-limit", oracle, "vertex cap of the exact tree-width oracle (default 18)")
      ->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "generate grids, Todinca graphs and G_{k,p}");
  gen->require_subcommand(1);
  std::string out;
  int n = 1, m = 1, p = 1, k = 1;
  bool reversed = false, crosscap = false;
  auto* gen_grid = gen->add_subcommand("grid", "n x m grid as a hypergraph");
  gen_grid->add_option("-n", n, "rows")->required()->check(CLI::PositiveNumber);
  gen_grid->add_option("-m", m, "columns")->required()->check(CLI::PositiveNumber);
  gen_grid->add_option("-o,--output", out, "output file");
  auto* gen_tod = gen->add_subcommand("todinca", "Todinca graph of order p as a hypergraph");
  gen_tod->add_option("-p", p, "order")->required()->check(CLI::PositiveNumber);
  gen_tod->add_flag("--reversed", reversed, "link b_i to c'_{p+1-i}");
  gen_tod->add_option("-o,--output", out, "output file");
  auto* gen_gkp = gen->add_subcommand("gkp", "embedding of G_{k,p} as a graph map");
  gen_gkp->add_option("-k", k, "number of gadgets")->required()->check(CLI::PositiveNumber);
  gen_gkp->add_option("-p", p, "gadget size")->required()->check(CLI::PositiveNumber);
  gen_gkp->add_flag("--crosscap", crosscap, "use crosscaps instead of handles");
  gen_gkp->add_option("-o,--output", out, "output file");

  std::string input, fail_dump;
  auto* dual = app.add_subcommand("dual", "dual of a graph map or of an embedded hypergraph");
  dual->add_option("input", input)->required()->check(CLI::ExistingFile);
  dual->add_option("-o,--output", out, "output file");

  auto* rad = app.add_subcommand("radial", "radial embedding");
  rad->add_option("input", input)->required()->check(CLI::ExistingFile);
  rad->add_option("-o,--output", out, "output file");

  auto* tw = app.add_subcommand("tw", "tree-width");
  bool exact = false;
  std::string td_out;
  tw->add_option("input", input)->required()->check(CLI::ExistingFile);
  tw->add_flag("--exact", exact, "exact dynamic programming oracle")->required();
  tw->add_option("--td", td_out, "write the optimal decomposition in PACE .td format");

  auto* ptree = app.add_subcommand("ptree", "optimal p-tree of an embedding");
  ptree->add_option("input", input)->required()->check(CLI::ExistingFile);
  ptree->add_option("-o,--output", out, "output file");

  auto* check = app.add_subcommand("check-bound", "check tw(Λ*) ≤ max{tw(Λ)+1+k, α*−1}");
  check->add_option("input", input)->required()->check(CLI::ExistingFile);
  check->add_option("--fail-dump", fail_dump, "directory receiving a failing instance");

  auto* border = app.add_subcommand("bramble-order", "order of a bramble by exhaustive hitting sets");
  std::string bramble_path;
  std::int64_t budget = 50'000'000;
  border->add_option("graph", input)->required()->check(CLI::ExistingFile);
  border->add_option("bramble", bramble_path)->required()->check(CLI::ExistingFile);
  border->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);

  auto* fw = app.add_subcommand("facewidth", "is every non-contractible noose met θ times");
  int theta = 1;
  std::int64_t cycle_budget = 2'000'000;
  fw->add_option("input", input)->required()->check(CLI::ExistingFile);
  fw->add_option("--theta", theta, "representativity to test")->required()->check(CLI::PositiveNumber);
  fw->add_option("--budget", cycle_budget, "radial cycle budget")->check(CLI::PositiveNumber);

  auto* fuzz = app.add_subcommand("fuzz", "exhaustive and random check of the duality bound");
  FuzzConfig config;
  fuzz->add_option("--max-darts", config.exhaustive_darts, "dart bound of the exhaustive enumeration")
      ->check(CLI::NonNegativeNumber);
  fuzz->add_option("--count", config.random_count, "random samples")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--random-darts", config.random_darts, "dart bound of random samples")->check(CLI::Range(2, 64));
  fuzz->add_option("--seed", config.seed, "seed of the random samples");
  fuzz->add_option("--fail-dump", fail_dump, "directory receiving failing instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*gen_grid) {
      const auto h = grid(n, m);
      write_or_print(out, to_json(h));
      if (!out.empty()) emit({{"command", "gen grid"}, {"vertices", h.num_vertices()}, {"edges", h.num_edges()}});
    } else if (*gen_tod) {
      const auto h = todinca(todinca_spec(p, reversed));
      write_or_print(out, to_json(h));
      if (!out.empty()) emit({{"command", "gen todinca"}, {"vertices", h.num_vertices()}, {"edges", h.num_edges()}});
    } else if (*gen_gkp) {
      const auto g = build_gkp(k, p, crosscap);
      write_or_print(out, to_json(g.map));
      if (!out.empty())
        emit({{"command", "gen gkp"},
              {"l", g.l},
              {"vertices", g.map.num_vertices()},
              {"edges", g.map.num_edges()},
              {"faces", trace_faces(g.map).size()},
              {"euler_genus", euler_genus(g.map)},
              {"orientable", is_orientable(g.map)},
              {"outside_construction_range", g.outside_construction_range}});
      if (g.outside_construction_range) std::cerr << "note: p = 1 lies outside the range p > 1 of the construction\n";
    } else if (*dual) {
      const Json j = read_json_file(input);
      if (j.contains("vclass")) {
        const auto d = hyper_dual(embedded_from_json(j));
        write_or_print(out, to_json(d));
        if (!out.empty())
          emit({{"command", "dual"},
                {"vertices", d.element_vertices().size()},
                {"edges", d.centres().size()},
                {"faces", d.num_faces()}});
      } else {
        const auto d = graph_dual(map_from_json(j));
        write_or_print(out, to_json(d));
        if (!out.empty())
          emit({{"command", "dual"},
                {"vertices", d.num_vertices()},
                {"edges", d.num_edges()},
                {"faces", trace_faces(d).size()}});
      }
    } else if (*rad) {
      write_or_print(out, to_json(radial(embedding_from(read_json_file(input)))));
    } else if (*tw) {
      const auto h = any_hypergraph_from_json(read_json_file(input));
      const auto r = exact_treewidth(h, oracle);
      if (!td_out.empty()) write_text_file(td_out, to_pace_td(r.decomposition, h));
      emit({{"command", "tw"}, {"tw", r.width}, {"vertices", h.num_vertices()}});
      std::cerr << "tw = " << r.width << '\n';
    } else if (*ptree) {
      const auto l = embedding_from(read_json_file(input));
      const auto pi = PiStructure::of(l);
      const auto r = optimal_ptree(pi, oracle);
      Json transcript = Json::array();
      for (const auto& s : r.transcript)
        transcript.push_back({{"depth", s.depth}, {"vertices", s.vertices}, {"edges", s.edges}, {"step", s.step}});
      Json j = to_json(r.tree);
      write_or_print(out, j);
      emit({{"command", "ptree"}, {"width", r.width}, {"transcript", transcript}});
    } else if (*check) {
      const auto l = embedding_from(read_json_file(input));
      const auto r = check_duality_bound(l, oracle);
      emit(to_json(r));
      const bool ok = r.pass && r.nodes_ok;
      std::cerr << "tw(Λ) = " << r.tw_lambda << ", tw(Λ*) = "
                << (r.tw_dual ? std::to_string(*r.tw_dual) : "≤ " + std::to_string(r.tw_dual_tree))
                << ", bound = " << r.bound << ": " << (ok ? "PASS" : "FAIL") << '\n';
      if (!ok) {
        dump_failures(fail_dump, {{l, "bound check failed"}});
        return kViolation;
      }
    } else if (*border) {
      const auto h = any_hypergraph_from_json(read_json_file(input));
      const auto b = bramble_from_json(read_json_file(bramble_path));
      if (!is_bramble(h, b)) {
        emit({{"command", "bramble-order"}, {"bramble", false}});
        std::cerr << "not a bramble of the graph\n";
        return kViolation;
      }
      const int order = bramble_order(b, budget);
      emit({{"command", "bramble-order"}, {"bramble", true}, {"order", order}, {"tw_lower_bound", order - 1}});
      std::cerr << "order " << order << ", tw ≥ " << order - 1 << '\n';
    } else if (*fw) {
      const auto l = embedding_from(read_json_file(input));
      const auto witness = short_noncontractible_radial_cycle(l, theta, cycle_budget);
      Json j{{"command", "facewidth"}, {"theta", theta}, {"at_least", !witness}};
      if (witness) j["witness_radial_edges"] = *witness;
      emit(j);
      std::cerr << "face-width " << (witness ? "< " : "≥ ") << theta << '\n';
    } else if (*fuzz) {
      config.oracle_limit = oracle;
      const auto s = fuzz_small_embeddings(config);
      emit(to_json(s));
      dump_failures(fail_dump, s.failures);
      std::cerr << s.checked << " instances (" << s.enumerated << " enumerated, " << s.random << " random), "
                << s.failures.size() << " violations\n";
      if (!s.failures.empty()) return kViolation;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    if (e.code() == ErrorCode::TooLarge) return kBudget;
    if (e.code() == ErrorCode::Internal) return kViolation;
    return kInvalid;
  }
  return kOk;
}
