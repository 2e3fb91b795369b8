#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mop/construct.hpp"
#include "mop/exact.hpp"
#include "mop/families.hpp"
#include "mop/harness.hpp"
#include "mop/exceptional.hpp"
#include "mop/io.hpp"
#include "mop/util.hpp"

namespace {

using namespace mop;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Err::ParseError, "cannot write " + out_path);
  out << text;
}

MopGraph make_family(const std::string& family, int n, int k, int s, int t, int m,
                     uint64_t seed, uint64_t index) {
  if (family == "fan") return fan(n);
  if (family == "strip") return strip(m);
  if (family == "strip_minus") return strip_minus(m);
  if (family == "fig5") return ladder_graph(k, s);
  if (family == "fig6") return ladder_graph_odd(k, s, t);
  if (family == "fig6even") return ladder_graph_even(k, s, t);
  if (family == "random") return random_mop(n, seed + index);
  fail(Err::BadParameter, "unknown family " + family);
}

int run(int argc, char** argv) {
  CLI::App app{"maximal outerplanar graph domination toolkit"};
  app.require_subcommand(1);
  int threads = hardware_threads();
  app.add_option("--threads", threads, "worker threads for exhaustive runs");

  // gen
  auto* gen = app.add_subcommand("gen", "generate graphs from the named families");
  std::string family = "random", gen_out;
  int gn = 0, gk = 1, gs = 1, gt = 1, gm = 1, gcount = 1;
  uint64_t gseed = 0;
  bool gdedup = false;
  gen->add_option("--family", family,
                  "fan|strip|strip_minus|fig5|fig6|fig6even|random|enum");
  gen->add_option("--n", gn, "order (fan, random, enum)");
  gen->add_option("--k", gk, "family parameter k");
  gen->add_option("--s", gs, "family parameter s");
  gen->add_option("--t", gt, "family parameter t");
  gen->add_option("--m", gm, "strip parameter m");
  gen->add_option("--seed", gseed, "random seed");
  gen->add_option("--count", gcount, "number of graphs (random)");
  gen->add_flag("--dedup", gdedup, "one representative per canonical form (enum)");
  gen->add_option("--out", gen_out, "output file, or prefix when count > 1");

  // solve
  auto* solve = app.add_subcommand("solve", "exact minimum k-component dominating set");
  std::string solve_file;
  int sk = 1, guard_override = kDefaultSolverGuard;
  solve->add_option("file", solve_file)->required();
  solve->add_option("--k", sk, "component threshold")->required();
  solve->add_option("--guard-override", guard_override, "solver order guard");

  // construct
  auto* cons = app.add_subcommand("construct", "constructive set within the dichotomy bound");
  std::string cons_file, cons_out;
  int ck = 1;
  cons->add_option("file", cons_file)->required();
  cons->add_option("--k", ck)->required();
  cons->add_option("--out", cons_out, "output file");

  // classify
  auto* cls = app.add_subcommand("classify", "exceptional-family membership");
  std::string cls_file, cls_out;
  std::vector<int> cls_ks;
  cls->add_option("file", cls_file)->required();
  cls->add_option("--k", cls_ks, "thresholds to classify against")->required();
  cls->add_option("--out", cls_out, "output file");

  // table
  auto* tab = app.add_subcommand("table", "exact gamma_k(n) table with witnesses");
  int tk = 1, tn_min = 3, tn_max = 8, tguard = kDefaultSolverGuard;
  std::string tab_out, tab_dir, tab_format = "csv";
  tab->add_option("--k", tk)->required();
  tab->add_option("--n-min", tn_min);
  tab->add_option("--n-max", tn_max)->required();
  tab->add_option("--guard-override", tguard);
  tab->add_option("--out", tab_out, "report file");
  tab->add_option("--witness-dir", tab_dir, "directory for extremal graph files");
  tab->add_option("--format", tab_format)->check(CLI::IsMember({"csv"}));

  // verify
  auto* ver = app.add_subcommand("verify", "exhaustive solver/construct/dichotomy check");
  int vk = 2, vn = 10, vguard = kDefaultSolverGuard;
  std::string ver_out, ver_format = "csv";
  ver->add_option("--k-max", vk)->required();
  ver->add_option("--n-max", vn)->required();
  ver->add_option("--guard-override", vguard);
  ver->add_option("--out", ver_out);
  ver->add_option("--format", ver_format)->check(CLI::IsMember({"csv", "json"}));

  // gamma-formula
  auto* gf = app.add_subcommand("gamma-formula", "check gamma_k(n) against the closing formula");
  int fk = 1, fenum = 13, fguard = kDefaultSolverGuard;
  std::vector<int> fns;
  std::string gf_out, gf_format = "csv";
  gf->add_option("--k", fk)->required();
  gf->add_option("--n", fns, "orders to check")->required();
  gf->add_option("--enum-limit", fenum, "largest order solved by enumeration");
  gf->add_option("--guard-override", fguard);
  gf->add_option("--out", gf_out);
  gf->add_option("--format", gf_format)->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);
  auto started = std::chrono::steady_clock::now();
  int rc = 0;

  if (gen->parsed()) {
    if (family == "enum") {
      std::ostringstream out;
      for (const auto& g : enum_mops(gn, gdedup)) out << to_graph_json(g);
      emit(out.str(), gen_out);
    } else if (gcount == 1) {
      emit(to_graph_json(make_family(family, gn, gk, gs, gt, gm, gseed, 0)), gen_out);
    } else {
      for (int i = 0; i < gcount; ++i) {
        auto g = make_family(family, gn, gk, gs, gt, gm, gseed, i);
        if (gen_out.empty())
          std::cout << to_graph_json(g);
        else
          write_graph_file(g, gen_out + "_" + std::to_string(i) + ".json");
      }
    }
  } else if (solve->parsed()) {
    auto g = load_graph_file(solve_file);
    auto d = min_kcds(g, sk, {}, guard_override);
    if (!d) {
      std::cout << "infeasible\n";
      rc = 1;
    } else {
      std::cout << "gamma " << d->vertices.size() << "\nset";
      for (int v : d->vertices) std::cout << " " << v;
      std::cout << "\n";
    }
  } else if (cons->parsed()) {
    auto g = load_graph_file(cons_file);
    std::vector<std::string> trace;
    auto d = dichotomy_construct(g, ck, trace);
    bool member = detect_exceptional(g, ck).has_value();
    std::ostringstream out;
    out << "size " << d.vertices.size() << "\nbound "
        << dichotomy_bound(ck, g.n(), member) << "\nset";
    for (int v : d.vertices) out << " " << v;
    out << "\ntrace";
    for (const auto& t : trace) out << " " << t;
    out << "\n";
    if (!is_kcds(g, ck, d.vertices) ||
        static_cast<long long>(d.vertices.size()) >
            dichotomy_bound(ck, g.n(), member))
      rc = 1;
    emit(out.str(), cons_out);
  } else if (cls->parsed()) {
    auto g = load_graph_file(cls_file);
    std::ostringstream out;
    for (int k : cls_ks) {
      auto dec = detect_exceptional(g, k);
      out << "{\"k\":" << k << ",\"in_hk\":" << (dec ? "true" : "false");
      if (dec) {
        out << ",\"p\":" << dec->p << ",\"cycle\":[";
        for (size_t i = 0; i < dec->cycle.size(); ++i)
          out << (i ? "," : "") << dec->cycle[i];
        out << "],\"piece_sizes\":[";
        for (size_t i = 0; i < dec->piece_ell.size(); ++i)
          out << (i ? "," : "") << dec->piece_ell[i];
        out << "]";
      }
      out << "}\n";
    }
    emit(out.str(), cls_out);
  } else if (tab->parsed()) {
    auto t = gamma_table(tk, tn_min, tn_max, tguard, threads);
    std::vector<std::string> files(t.rows.size());
    if (!tab_dir.empty()) {
      std::filesystem::create_directories(tab_dir);
      for (size_t i = 0; i < t.rows.size(); ++i) {
        std::string joined;
        for (size_t j = 0; j < t.rows[i].extremal.size(); ++j) {
          std::string name = "gamma_k" + std::to_string(t.rows[i].k) + "_n" +
                             std::to_string(t.rows[i].n) + "_" + std::to_string(j) +
                             ".json";
          write_graph_file(MopGraph::validate(t.rows[i].n, t.rows[i].extremal[j]),
                           tab_dir + "/" + name);
          joined += (j ? ";" : "") + name;
        }
        files[i] = joined;
      }
    }
    emit(table_csv(t, files), tab_out);
  } else if (ver->parsed()) {
    auto rep = run_verify(vk, vn, vguard, threads);
    emit(ver_format == "json" ? verify_json(rep) : verify_csv(rep), ver_out);
    for (const auto& note : rep.notes) std::cerr << note << "\n";
    rc = rep.ok ? 0 : 1;
  } else if (gf->parsed()) {
    auto rep = run_gamma_formula(fk, fns, fenum, fguard, threads);
    emit(gf_format == "json" ? formula_json(rep) : formula_csv(rep), gf_out);
    for (const auto& note : rep.notes) std::cerr << note << "\n";
    rc = rep.ok ? 0 : 1;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "elapsed_ms " << elapsed << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
