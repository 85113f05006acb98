// Command-line front end: build universal networks, embed and verify trees,
// route permutations through the switching network, and report bounds.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "utbn/analyze.hpp"
#include "utbn/benes.hpp"
#include "utbn/construct.hpp"
#include "utbn/embed.hpp"
#include "utbn/io.hpp"
#include "utbn/treegen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_build(int n, const std::string& format, const std::string& output) {
  utbn::UniversalNet u = utbn::build_universal(n);
  if (format == "json")
    emit(utbn::to_json_graph(u.net, &u.coord), output);
  else if (format == "dot")
    emit(utbn::to_dot(u.net, &u.coord), output);
  else if (format == "enewick")
    emit(utbn::to_enewick(u.net) + "\n", output);
  else
    throw CLI::ValidationError("--format", "expected json, dot or enewick");
  return kExitOk;
}

int run_embed(int n, const std::string& newick, const std::string& emit_kind,
              const std::string& output) {
  utbn::UniversalNet u = utbn::build_universal(n);
  utbn::PhyloTree tree = utbn::parse_newick(newick);
  utbn::EmbedCertificate cert = utbn::embed_tree(u, tree);
  if (emit_kind == "choice")
    emit(utbn::to_choice_json(u, cert.choice), output);
  else if (emit_kind == "dot")
    emit(utbn::to_dot(u.net, &u.coord, &cert.choice), output);
  else
    throw CLI::ValidationError("--emit", "expected choice or dot");
  return kExitOk;
}

int run_verify(int n, const std::string& newick, const std::string& choice_path) {
  utbn::UniversalNet u = utbn::build_universal(n);
  utbn::PhyloTree tree = utbn::parse_newick(newick);
  utbn::BaseTreeChoice choice = utbn::bind_choice(u, utbn::parse_choice_json(slurp(choice_path)));
  std::string why;
  if (utbn::verify_base_tree(u.net, choice, tree, &why)) {
    std::cout << "base tree: yes\n";
    return kExitOk;
  }
  std::cerr << "not a base tree: " << why << "\n";
  return kExitVerifyFailed;
}

int run_check_universal(int n, unsigned jobs) {
  utbn::UniversalNet u = utbn::build_universal(n);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  utbn::TreeEnumerator enumerator(labels);
  const std::uint64_t total = enumerator.size();
  std::atomic<std::uint64_t> verified{0};
  std::atomic<std::uint64_t> failed{0};
  if (jobs == 0) jobs = 1;

  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    enumerator.for_each(begin, end, [&](std::uint64_t index, const utbn::PhyloTree& tree) {
      try {
        utbn::embed_tree(u, tree);
        ++verified;
      } catch (const std::exception& e) {
        ++failed;
        std::cerr << "tree " << index << ": " << e.what() << "\n";
      }
    });
  };

  if (jobs == 1) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(worker, j * chunk, std::min<std::uint64_t>(total, (j + 1) * chunk));
    for (auto& t : pool) t.join();
  }

  std::cout << verified.load() << "/" << total << " verified\n";
  return failed.load() == 0 && verified.load() == total ? kExitOk : kExitVerifyFailed;
}

int run_benes(int n, const std::string& perm_text) {
  utbn::Permutation perm = utbn::parse_permutation(perm_text);
  if (static_cast<int>(perm.size()) != n)
    throw CLI::ValidationError("--perm", "permutation must list " + std::to_string(n) + " images");
  utbn::BenesNet net(n);
  utbn::SwitchSettings settings = net.route(perm);
  for (const auto& sw : net.switches())
    std::cout << "switch " << sw.id << " wires (" << sw.wire_lo + 1 << "," << sw.wire_hi + 1
              << "): "
              << (settings[sw.id] == utbn::SwitchState::Straight ? "straight" : "crossed")
              << "\n";
  utbn::Permutation realized = net.apply(settings);
  std::cout << "realized: " << utbn::permutation_to_string(realized) << "\n";
  if (realized != perm) {
    std::cerr << "round-trip mismatch\n";
    return kExitVerifyFailed;
  }
  std::cout << "round-trip: ok\n";
  return kExitOk;
}

int run_stats(int from, int to) {
  if (from < 1 || to < from) throw CLI::ValidationError("--from/--to", "need 1 <= from <= to");
  std::printf("%6s %10s %12s %10s\n", "n", "r", "info_bound", "ratio");
  for (int n = from; n <= to; ++n) {
    utbn::UniversalNet u = utbn::build_universal(n);
    utbn::BoundReport report = utbn::bound_report(u);
    std::printf("%6d %10zu %12zu %10.3f\n", report.n, report.reticulations, report.info_bound,
                report.ratio);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal tree-based network construction and verification"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "json", output, newick, emit_kind = "choice", choice_path, perm_text;
  int from = 2, to = 16;
  unsigned jobs = 1;

  auto* build = app.add_subcommand("build", "construct U_n and export it");
  build->add_option("-n", n, "leaf count")->required()->check(CLI::PositiveNumber);
  build->add_option("--format", format, "json|dot|enewick");
  build->add_option("-o,--output", output, "output file (default stdout)");

  auto* embed = app.add_subcommand("embed", "embed a tree as a base tree of U_n");
  embed->add_option("-n", n, "leaf count")->required()->check(CLI::PositiveNumber);
  embed->add_option("--tree", newick, "tree in Newick, leaves labeled 1..n")->required();
  embed->add_option("--emit", emit_kind, "choice|dot");
  embed->add_option("-o,--output", output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a choice file against a tree");
  verify->add_option("-n", n, "leaf count")->required()->check(CLI::PositiveNumber);
  verify->add_option("--tree", newick, "tree in Newick")->required();
  verify->add_option("--choice", choice_path, "choice file")->required();

  auto* check = app.add_subcommand("check-universal", "embed and verify every tree on n leaves");
  check->add_option("-n", n, "leaf count")->required()->check(CLI::PositiveNumber);
  check->add_option("--jobs", jobs, "worker threads");

  auto* benes = app.add_subcommand("benes", "route a permutation through the switching network");
  benes->add_option("-n", n, "wire count")->required()->check(CLI::PositiveNumber);
  benes->add_option("--perm", perm_text, "1-based images, e.g. \"4 1 3 2\"")->required();

  auto* stats = app.add_subcommand("stats", "reticulation counts against the lower bound");
  stats->add_option("--from", from, "first n");
  stats->add_option("--to", to, "last n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the parse error
    return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(n, format, output);
    if (embed->parsed()) return run_embed(n, newick, emit_kind, output);
    if (verify->parsed()) return run_verify(n, newick, choice_path);
    if (check->parsed()) return run_check_universal(n, jobs);
    if (benes->parsed()) return run_benes(n, perm_text);
    if (stats->parsed()) return run_stats(from, to);
  } catch (const utbn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
