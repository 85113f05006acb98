// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "utbn/analyze.hpp"
#include "utbn/benes.hpp"
#include "utbn/bigint.hpp"
#include "utbn/canonical.hpp"
#include "utbn/construct.hpp"
#include "utbn/embed.hpp"
#include "utbn/graph.hpp"
#include "utbn/io.hpp"
#include "utbn/treegen.hpp"

using namespace utbn;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail = {}) {
  std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name,
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::vector<std::string> labels_1_to(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// ---- 1. Universality at desk scale -----------------------------------------

void criterion_universality() {
  const std::vector<std::uint64_t> expected{1, 1, 3, 15, 105, 945, 10395};
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t total = 0;
  std::atomic<std::uint64_t> failures{0};
  for (int n = 1; n <= 7; ++n) {
    UniversalNet u = build_universal(n);
    TreeEnumerator enumerator(labels_1_to(n));
    if (enumerator.size() != expected[n - 1]) {
      report(1, "universality", false,
             "tree count mismatch at n=" + std::to_string(n));
      return;
    }
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t chunk = (enumerator.size() + jobs - 1) / jobs;
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        enumerator.for_each(j * chunk,
                            std::min<std::uint64_t>(enumerator.size(), (j + 1) * chunk),
                            [&](std::uint64_t, const PhyloTree& t) {
                              try {
                                EmbedCertificate cert = embed_tree(u, t);
                                std::string why;
                                if (!verify_base_tree(u.net, cert.choice, t, &why)) ++failures;
                              } catch (const std::exception&) {
                                ++failures;
                              }
                            });
      });
    }
    for (auto& t : pool) t.join();
    total += enumerator.size();
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  // 11465 = 1+1+3+15+105+945+10395, the per-n counts checked above.
  const bool ok = total == 11465 && failures.load() == 0 && elapsed.count() < 120000;
  report(1, "universality n<=7 (11465 certificates)", ok,
         std::to_string(total) + " trees, " + std::to_string(failures.load()) + " failures, " +
             std::to_string(elapsed.count()) + " ms");
}

// ---- 2. Reticulation bounds -------------------------------------------------

void criterion_bounds() {
  for (int n = 2; n <= 4096; ++n)
    if (!scaffold_bound_holds(n)) {
      report(2, "reticulation bounds", false, "scaffold bound fails at n=" + std::to_string(n));
      return;
    }
  std::size_t r4 = 0, r7 = 0;
  for (int n = 2; n <= 1024; ++n) {
    UniversalNet u = build_universal(n);
    const std::size_t r = u.reticulation_count;
    if (n == 4) r4 = r;
    if (n == 7) r7 = r;
    const std::size_t info = count_trees(static_cast<unsigned>(n)).ceil_log2();
    const long double upper = 4.0L * n * std::log2(static_cast<long double>(n));
    if (!(info <= r) || !(static_cast<long double>(r) <= upper)) {
      report(2, "reticulation bounds", false, "bound fails at n=" + std::to_string(n));
      return;
    }
    if (!validate_network(u.net).ok()) {
      report(2, "reticulation bounds", false, "U_n invalid at n=" + std::to_string(n));
      return;
    }
  }
  const bool spots = r4 == 13 && r7 == 34;
  report(2, "reticulation bounds (scaffold<=n log n to 4096; info<=r<=4n log n to 1024)", spots,
         "r(U_4)=" + std::to_string(r4) + ", r(U_7)=" + std::to_string(r7));
}

// ---- 3. Benes rearrangeability ----------------------------------------------

void criterion_benes() {
  std::uint64_t cases = 0;
  for (int n = 1; n <= 7; ++n) {
    BenesNet net(n);
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (net.apply(net.route(p)) != p) {
        report(3, "benes rearrangeability", false,
               "failed on n=" + std::to_string(n) + " perm " + permutation_to_string(p));
        return;
      }
      ++cases;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  if (cases != 5913) {
    report(3, "benes rearrangeability", false, "expected 5913 exhaustive cases");
    return;
  }
  std::mt19937_64 rng(20240601);
  for (int n : {8, 16, 33, 100}) {
    BenesNet net(n);
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int trial = 0; trial < 1000; ++trial) {
      std::shuffle(p.begin(), p.end(), rng);
      if (net.apply(net.route(p)) != p) {
        report(3, "benes rearrangeability", false, "random failure at n=" + std::to_string(n));
        return;
      }
    }
  }
  const bool counts = BenesNet(4).switch_count() == 6 && BenesNet(8).switch_count() == 20;
  report(3, "benes rearrangeability (5913 exhaustive + 4x1000 random)", counts,
         "switch_count(4)=6, switch_count(8)=20");
}

// ---- 4. Independent display oracle on U_4 -----------------------------------

void criterion_oracle() {
  const auto start = std::chrono::steady_clock::now();
  UniversalNet u = build_universal(4);
  if (u.reticulation_count != 13) {
    report(4, "display oracle", false, "r(U_4) != 13");
    return;
  }
  TreeEnumerator enumerator(labels_1_to(4));
  std::size_t displayed = 0;
  enumerator.for_each(0, enumerator.size(), [&](std::uint64_t, const PhyloTree& t) {
    if (displays_bruteforce(u.net, t, 16)) ++displayed;
  });
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  report(4, "display oracle: all 15 four-leaf trees under 2^13 choices", displayed == 15,
         std::to_string(displayed) + "/15, " + std::to_string(elapsed.count()) + " ms");
}

// ---- 5. Temporal and stack-free ----------------------------------------------

void criterion_temporal() {
  for (int n = 1; n <= 64; ++n) {
    UniversalNet u = build_universal(n);
    TemporalResult result = temporal_labeling(u.net);
    if (!result.temporal) {
      report(5, "temporal and stack-free", false, "no labeling at n=" + std::to_string(n));
      return;
    }
    for (VertexId v = 0; v < u.net.vertex_count(); ++v)
      for (VertexId c : u.net.children[v]) {
        const bool retic_edge = u.net.kind[c] == VertexKind::Reticulation;
        const bool ok = retic_edge ? result.labels[v] == result.labels[c]
                                   : result.labels[v] < result.labels[c];
        if (!ok) {
          report(5, "temporal and stack-free", false, "label re-check fails at n=" + std::to_string(n));
          return;
        }
      }
    if (!is_stack_free(u.net)) {
      report(5, "temporal and stack-free", false, "stack at n=" + std::to_string(n));
      return;
    }
  }
  report(5, "temporal labels and stack-freeness for all n <= 64", true);
}

// ---- 6. Identity route -------------------------------------------------------

void criterion_identity_route() {
  for (int n = 1; n <= 64; ++n) {
    UniversalNet u = build_universal(n);
    PhyloTree caterpillar = build_caterpillar(labels_1_to(n));
    std::string why;
    if (!verify_base_tree(u.net, all_vertical_choice(u), caterpillar, &why)) {
      report(6, "all-vertical base tree", false, "n=" + std::to_string(n) + ": " + why);
      return;
    }
  }
  report(6, "all-vertical choice yields the caterpillar for all n <= 64", true);
}

// ---- 7. Enumeration correctness ----------------------------------------------

void criterion_enumeration() {
  const std::vector<std::uint64_t> expected{1, 1, 3, 15, 105, 945, 10395, 135135};
  for (int n = 1; n <= 8; ++n) {
    TreeEnumerator enumerator(labels_1_to(n));
    if (enumerator.size() != expected[n - 1]) {
      report(7, "enumeration", false, "count mismatch at n=" + std::to_string(n));
      return;
    }
    std::set<std::string> canon;
    bool all_valid = true;
    enumerator.for_each(0, enumerator.size(), [&](std::uint64_t, const PhyloTree& t) {
      canon.insert(canonical_encoding(t));
      if (canon.size() <= 128 && !validate_tree(t).ok()) all_valid = false;
    });
    if (canon.size() != expected[n - 1] || !all_valid) {
      report(7, "enumeration", false, "duplicates at n=" + std::to_string(n));
      return;
    }
  }
  report(7, "enumeration matches the product formula up to n = 8 (b_8 = 135135)", true);
}

// ---- 8. Determinism ----------------------------------------------------------

void criterion_determinism() {
  UniversalNet a = build_universal(6);
  UniversalNet b = build_universal(6);
  bool ok = to_json_graph(a.net, &a.coord) == to_json_graph(b.net, &b.coord) &&
            to_dot(a.net, &a.coord) == to_dot(b.net, &b.coord) &&
            to_enewick(a.net) == to_enewick(b.net);

  PhyloTree t = parse_newick("((1,2),((3,4),(5,6)));");
  EmbedCertificate c1 = embed_tree(a, t);
  EmbedCertificate c2 = embed_tree(b, t);
  ok = ok && to_choice_json(a, c1.choice) == to_choice_json(b, c2.choice) &&
       to_dot(a.net, &a.coord, &c1.choice) == to_dot(b.net, &b.coord, &c2.choice);
  report(8, "byte-identical build, embed and export across runs", ok);
}

}  // namespace

int main() {
  criterion_universality();
  criterion_bounds();
  criterion_benes();
  criterion_oracle();
  criterion_temporal();
  criterion_identity_route();
  criterion_enumeration();
  criterion_determinism();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
