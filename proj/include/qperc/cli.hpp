#pragma once
// Command-line front end.  Subcommands: simulate, closure, construct, formula,
// oracle, verify (aliases verify-lemma, verify-all).  Output is JSON by
// default or CSV on request, written to stdout or --output.  Exit codes:
// 0 done (and every check passed, for verify), 1 usage or input error,
// 2 resource guard tripped, 3 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qperc/algebra.hpp"
#include "qperc/engine.hpp"
#include "qperc/error.hpp"
#include "qperc/extremal.hpp"
#include "qperc/hamming.hpp"
#include "qperc/io.hpp"
#include "qperc/norms.hpp"
#include "qperc/oracle.hpp"
#include "qperc/verify.hpp"
#include "qperc/vertex_set.hpp"

namespace qperc {
namespace detail {

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline void write_text(const std::string& text, const std::string& path,
                       std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw error("cannot open output file: " + path);
  f << text;
}

struct OutputOpts {
  std::string format = "json";
  std::string path;
};

inline void add_output_opts(CLI::App* cmd, OutputOpts& oo) {
  cmd->add_option("--format", oo.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", oo.path, "write the report to a file instead of stdout");
}

struct SeedSource {
  std::string inline_list;   // comma-separated vertex words
  std::string file;          // seed file path
  std::string construct;     // "q,n" -> extremal construction
};

inline void add_seed_opts(CLI::App* cmd, SeedSource& src) {
  auto* a = cmd->add_option("--seed", src.inline_list,
                            "inline seed: comma-separated vertex words");
  auto* b = cmd->add_option("--seed-file", src.file,
                            "seed file: one vertex word per line, '#' comments");
  auto* c = cmd->add_option("--construct", src.construct,
                            "use the extremal construction for \"q,n\"");
  a->excludes(b)->excludes(c);
  b->excludes(c);
}

struct LoadedSeed {
  CubeShape shape;
  VertexSet set;
  std::vector<std::string> provenance;
};

inline LoadedSeed load_seed(const SeedSource& src, std::optional<int> q,
                            std::optional<int> n, std::uint64_t max_vertices) {
  const int given = !src.inline_list.empty() + !src.file.empty() + !src.construct.empty();
  if (given != 1)
    throw error("exactly one of --seed, --seed-file, --construct is required");
  if (!src.construct.empty()) {
    int cq = 0, cn = 0;
    char comma = 0;
    std::istringstream in(src.construct);
    if (!(in >> cq >> comma >> cn) || comma != ',' || !in.eof())
      throw error("--construct expects \"q,n\"");
    auto seed = build_extremal_seed(cq, cn, max_vertices);
    return {seed.shape, seed.vertices, seed.provenance};
  }
  if (!q || !n) throw error("--q and --n are required with --seed/--seed-file");
  CubeShape shape(*n, *q, max_vertices);
  VertexSet s = src.file.empty() ? parse_seed_list(src.inline_list, shape)
                                 : read_seed_file(src.file, shape);
  return {shape, s, {}};
}

inline json meta_json(const std::string& command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

}  // namespace detail

inline int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "two-neighbour bootstrap percolation on q-ary hypercubes: simulate, "
      "construct extremal seeds, evaluate the closed-form maximum time, run "
      "exhaustive searches, and verify the structural statements"};
  app.require_subcommand(1);

  // --- simulate ----------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "run the infection process from a seed");
  std::optional<int> sim_q, sim_n;
  int sim_r = 2;
  bool sim_timestamps = false;
  std::uint64_t sim_guard = kDefaultVertexGuard;
  detail::SeedSource sim_src;
  detail::OutputOpts sim_out;
  sim->add_option("--q", sim_q, "alphabet size per coordinate");
  sim->add_option("--n", sim_n, "number of coordinates");
  sim->add_option("--r", sim_r, "infection threshold")->capture_default_str();
  sim->add_flag("--timestamps", sim_timestamps, "include per-vertex infection times");
  sim->add_option("--max-vertices", sim_guard, "vertex-count guard")
      ->capture_default_str();
  detail::add_seed_opts(sim, sim_src);
  detail::add_output_opts(sim, sim_out);

  // --- closure -----------------------------------------------------------
  auto* clo = app.add_subcommand("closure", "compute the closure of a seed");
  std::optional<int> clo_q, clo_n;
  int clo_r = 2;
  std::uint64_t clo_guard = kDefaultVertexGuard;
  detail::SeedSource clo_src;
  detail::OutputOpts clo_out;
  clo->add_option("--q", clo_q, "alphabet size per coordinate");
  clo->add_option("--n", clo_n, "number of coordinates");
  clo->add_option("--r", clo_r, "infection threshold")->capture_default_str();
  clo->add_option("--max-vertices", clo_guard, "vertex-count guard")
      ->capture_default_str();
  detail::add_seed_opts(clo, clo_src);
  detail::add_output_opts(clo, clo_out);

  // --- construct ---------------------------------------------------------
  auto* con = app.add_subcommand("construct",
                                 "build the extremal seed and simulate it");
  int con_q = 3, con_n = 0;
  std::uint64_t con_guard = kDefaultVertexGuard;
  detail::OutputOpts con_out;
  con->add_option("--q", con_q, "alphabet size per coordinate")->required();
  con->add_option("--n", con_n, "number of coordinates")->required();
  con->add_option("--max-vertices", con_guard, "vertex-count guard")
      ->capture_default_str();
  detail::add_output_opts(con, con_out);

  // --- formula -----------------------------------------------------------
  auto* frm = app.add_subcommand("formula", "closed-form maximum percolation time");
  int frm_q = 3;
  std::optional<int> frm_n, frm_max_n;
  detail::OutputOpts frm_out;
  frm->add_option("--q", frm_q, "alphabet size per coordinate")->capture_default_str();
  frm->add_option("--n", frm_n, "single dimension to evaluate");
  frm->add_option("--max-n", frm_max_n, "tabulate dimensions 0..max-n");
  detail::add_output_opts(frm, frm_out);

  // --- oracle ------------------------------------------------------------
  auto* ora = app.add_subcommand("oracle", "brute-force search over all seeds");
  int ora_q = 3, ora_n = 1;
  std::optional<int> ora_cap;
  std::optional<std::uint64_t> ora_budget;
  bool ora_minimal = false;
  detail::OutputOpts ora_out;
  ora->add_option("--q", ora_q, "alphabet size per coordinate")->capture_default_str();
  ora->add_option("--n", ora_n, "number of coordinates")->capture_default_str();
  ora->add_option("--cap", ora_cap, "seed-size cap (switches to the capped scan)");
  ora->add_option("--budget", ora_budget,
                  "work budget in vertex updates (default: PERC_BUDGET or 1e8)");
  ora->add_flag("--minimal", ora_minimal,
                "list containment-minimal spanning seeds up to --cap");
  detail::add_output_opts(ora, ora_out);

  // --- verify ------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->alias("verify-lemma");
  std::string ver_suite;
  VerifyOptions vo;
  detail::OutputOpts ver_out;
  auto suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", ver_suite, "suite to run")
      ->required()
      ->check(CLI::IsMember(suites));
  auto add_verify_opts = [&](CLI::App* cmd) {
    cmd->add_option("--q", vo.q, "alphabet size per coordinate")->capture_default_str();
    cmd->add_option("--max-n", vo.max_n, "largest dimension for sweeps")
        ->capture_default_str();
    cmd->add_option("--max-k", vo.max_k, "largest leading block")->capture_default_str();
    cmd->add_option("--max-l", vo.max_l, "largest middle block")->capture_default_str();
    cmd->add_option("--k", vo.k, "exact leading block (overrides --max-k)");
    cmd->add_option("--l", vo.l, "exact middle block (overrides --max-l)");
    cmd->add_option("--trials", vo.trials, "randomized-scan sample count")
        ->capture_default_str();
    cmd->add_option("--rng-seed", vo.rng_seed, "randomized-scan generator seed")
        ->capture_default_str();
    cmd->add_option("--max-vertices", vo.max_vertices, "vertex-count guard")
        ->capture_default_str();
  };
  add_verify_opts(ver);
  detail::add_output_opts(ver, ver_out);

  auto* vall = app.add_subcommand("verify-all", "run every verification suite");
  add_verify_opts(vall);
  detail::add_output_opts(vall, ver_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(sim)) {
      auto seed = detail::load_seed(sim_src, sim_q, sim_n, sim_guard);
      const auto rec = run(seed.set, seed.shape, sim_r);
      json j = detail::meta_json("simulate");
      j["shape"] = shape_json(seed.shape);
      j["r"] = sim_r;
      j["seed"] = vertices_json(seed.set, seed.shape);
      j.update(record_json(rec, sim_timestamps));
      if (sim_out.format == "json") {
        detail::write_text(j.dump(2) + "\n", sim_out.path, out);
      } else {
        std::ostringstream csv;
        csv << "schema_version,command,q,n,r,seed_size,percolated,rounds\n"
            << kSchemaVersion << ",simulate," << seed.shape.q() << ',' << seed.shape.n()
            << ',' << sim_r << ',' << seed.set.count() << ','
            << (rec.percolated ? "true" : "false") << ',' << rec.rounds << "\n";
        if (sim_timestamps) {
          csv << "vertex,time\n";
          for (std::uint64_t v = 0; v < seed.shape.volume(); ++v) {
            const auto t = rec.time_of[v];
            csv << seed.shape.vertex_to_string(static_cast<Vertex>(v)) << ',';
            if (t == kNeverTime)
              csv << "\n";
            else
              csv << t << "\n";
          }
        }
        detail::write_text(csv.str(), sim_out.path, out);
      }
      return 0;
    }

    if (app.got_subcommand(clo)) {
      auto seed = detail::load_seed(clo_src, clo_q, clo_n, clo_guard);
      const VertexSet cl = closure(seed.set, seed.shape, clo_r);
      const auto decomp = clo_r == 2 ? decompose_closed(cl, seed.shape)
                                     : ClosedDecomposition{{}, false};
      json j = detail::meta_json("closure");
      j["shape"] = shape_json(seed.shape);
      j["r"] = clo_r;
      j["seed"] = vertices_json(seed.set, seed.shape);
      j["closure"] = vertices_json(cl, seed.shape);
      j["percolated"] = cl.is_full();
      if (clo_r == 2) {
        json comps = json::array();
        for (const auto& c : decomp.components) comps.push_back(c.to_string());
        j["components"] = comps;
      }
      if (clo_out.format == "json") {
        detail::write_text(j.dump(2) + "\n", clo_out.path, out);
      } else {
        std::ostringstream csv;
        csv << "schema_version,command,q,n,r,seed_size,closure_size,percolated\n"
            << kSchemaVersion << ",closure," << seed.shape.q() << ',' << seed.shape.n()
            << ',' << clo_r << ',' << seed.set.count() << ',' << cl.count() << ','
            << (cl.is_full() ? "true" : "false") << "\n";
        csv << "vertex\n";
        cl.for_each([&](Vertex v) {
          csv << seed.shape.vertex_to_string(v) << "\n";
        });
        if (clo_r == 2) {
          csv << "component\n";
          for (const auto& c : decomp.components) csv << c.to_string() << "\n";
        }
        detail::write_text(csv.str(), clo_out.path, out);
      }
      return 0;
    }

    if (app.got_subcommand(con)) {
      const auto seed = build_extremal_seed(con_q, con_n, con_guard);
      const auto rec = run(seed.vertices, seed.shape);
      const auto want = max_time_formula(con_q, con_n);
      json j = detail::meta_json("construct");
      j.update(seed_json(seed));
      j["rounds"] = rec.rounds;
      j["percolated"] = rec.percolated;
      j["formula"] = want;
      j["matches_formula"] = rec.percolated && rec.rounds == want;
      if (con_out.format == "json") {
        detail::write_text(j.dump(2) + "\n", con_out.path, out);
      } else {
        std::ostringstream csv;
        csv << "schema_version,command,q,n,seed_size,rounds,formula,matches_formula\n"
            << kSchemaVersion << ",construct," << con_q << ',' << con_n << ','
            << seed.vertices.count() << ',' << rec.rounds << ',' << want << ','
            << (j["matches_formula"].get<bool>() ? "true" : "false") << "\n";
        csv << "vertex\n";
        seed.vertices.for_each([&](Vertex v) {
          csv << seed.shape.vertex_to_string(v) << "\n";
        });
        detail::write_text(csv.str(), con_out.path, out);
      }
      return 0;
    }

    if (app.got_subcommand(frm)) {
      if (!frm_n && !frm_max_n) throw error("formula needs --n or --max-n");
      const int lo = frm_n ? *frm_n : 0;
      const int hi = frm_n ? *frm_n : *frm_max_n;
      json rows = json::array();
      for (int n = lo; n <= hi; ++n)
        rows.push_back(json{{"n", n}, {"max_time", max_time_formula(frm_q, n)}});
      json j = detail::meta_json("formula");
      j["q"] = frm_q;
      j["values"] = rows;
      if (frm_out.format == "json") {
        detail::write_text(j.dump(2) + "\n", frm_out.path, out);
      } else {
        std::ostringstream csv;
        csv << "schema_version,command,q,n,max_time\n";
        for (int n = lo; n <= hi; ++n)
          csv << kSchemaVersion << ",formula," << frm_q << ',' << n << ','
              << max_time_formula(frm_q, n) << "\n";
        detail::write_text(csv.str(), frm_out.path, out);
      }
      return 0;
    }

    if (app.got_subcommand(ora)) {
      CubeShape shape(ora_n, ora_q);
      const std::uint64_t budget = ora_budget ? *ora_budget : work_budget_from_env();
      json j = detail::meta_json("oracle");
      std::ostringstream csv;
      if (ora_minimal) {
        if (!ora_cap) throw error("--minimal needs --cap");
        const auto sets = minimal_spanning_sets(shape, *ora_cap, budget);
        j["shape"] = shape_json(shape);
        j["mode"] = "minimal-spanning";
        j["size_cap"] = *ora_cap;
        json arr = json::array();
        for (const auto& w : sets) arr.push_back(vertices_json(w, shape));
        j["sets"] = arr;
        csv << "schema_version,command,mode,q,n,size_cap,set_count\n"
            << kSchemaVersion << ",oracle,minimal-spanning," << ora_q << ',' << ora_n
            << ',' << *ora_cap << ',' << sets.size() << "\n";
        csv << "set\n";
        for (const auto& w : sets) {
          std::string row;
          for (Vertex v : w) row += (row.empty() ? "" : ";") + shape.vertex_to_string(v);
          csv << row << "\n";
        }
      } else {
        const OracleReport rep = ora_cap ? max_time_capped(shape, *ora_cap, budget)
                                         : max_time_exhaustive(shape);
        j.update(oracle_json(rep));
        csv << "schema_version,command,mode,q,n,size_cap,max_time,seeds_examined,"
               "witness_count\n"
            << kSchemaVersion << ",oracle," << rep.mode << ',' << ora_q << ',' << ora_n
            << ',' << (rep.size_cap ? std::to_string(*rep.size_cap) : "") << ','
            << (rep.max_time ? std::to_string(*rep.max_time) : "") << ','
            << rep.seeds_examined << ',' << rep.witnesses.size() << "\n";
        csv << "witness\n";
        for (const auto& w : rep.witnesses) {
          std::string row;
          for (Vertex v : w) row += (row.empty() ? "" : ";") + shape.vertex_to_string(v);
          csv << row << "\n";
        }
      }
      detail::write_text(ora_out.format == "json" ? j.dump(2) + "\n" : csv.str(),
                         ora_out.path, out);
      return 0;
    }

    if (app.got_subcommand(ver) || app.got_subcommand(vall)) {
      const std::string suite = app.got_subcommand(vall) ? "all" : ver_suite;
      const SuiteReport rep = run_suite(suite, vo);
      json items = json::array();
      for (const auto& it : rep.items)
        items.push_back(json{{"key", it.key}, {"pass", it.pass}, {"detail", it.detail}});
      json j = detail::meta_json("verify");
      j["suite"] = rep.suite;
      j["options"] = json{{"q", vo.q},           {"max_n", vo.max_n},
                          {"max_k", vo.max_k},   {"max_l", vo.max_l},
                          {"trials", vo.trials}, {"rng_seed", vo.rng_seed}};
      if (vo.k) j["options"]["k"] = *vo.k;
      if (vo.l) j["options"]["l"] = *vo.l;
      j["items"] = items;
      j["passed"] = rep.passed();
      j["failed"] = rep.failed();
      j["all_pass"] = rep.all_pass();
      if (ver_out.format == "json") {
        detail::write_text(j.dump(2) + "\n", ver_out.path, out);
      } else {
        std::ostringstream csv;
        csv << "schema_version,command,suite,passed,failed,all_pass\n"
            << kSchemaVersion << ",verify," << rep.suite << ',' << rep.passed() << ','
            << rep.failed() << ',' << (rep.all_pass() ? "true" : "false") << "\n";
        csv << "key,pass,detail\n";
        for (const auto& it : rep.items)
          csv << detail::csv_quote(it.key) << ',' << (it.pass ? "true" : "false") << ','
              << detail::csv_quote(it.detail) << "\n";
        detail::write_text(csv.str(), ver_out.path, out);
      }
      return rep.all_pass() ? 0 : 3;
    }
  } catch (const guard_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qperc
