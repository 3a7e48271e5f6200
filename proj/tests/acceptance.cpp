// Acceptance suite. Each criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails. All equality checks are exact
// rational comparisons, no tolerances.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlie/automorphism.hpp"
#include "qlie/dsl.hpp"
#include "qlie/random.hpp"
#include "qlie/verify.hpp"

using namespace qlie;

namespace {

int failures = 0;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

void criterion(int number, const std::string& label,
               const std::function<void()>& body, long limit_ms) {
  auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (error.empty() && ms > limit_ms) {
    error = "runtime " + std::to_string(ms) + " ms over the " +
            std::to_string(limit_ms) + " ms limit";
  }
  if (error.empty()) {
    std::cout << "criterion " << number << " (" << label << "): PASS (" << ms
              << " ms)\n";
  } else {
    ++failures;
    std::cout << "criterion " << number << " (" << label << "): FAIL (" << ms
              << " ms): " << error << "\n";
  }
}

Quiver line2() { return parse("arrow a: v1 -> v2\narrow b: v2 -> v3\n"); }

Quiver merge5() {
  return parse(
      "arrow a: v1 -> v2\narrow b: v2 -> v4\narrow c: v3 -> v4\n"
      "arrow d: v3 -> v4\narrow e: v4 -> v5\n");
}

Quiver twin3() {
  return parse(
      "arrow a: v1 -> v3\narrow b: v2 -> v3\narrow c: v3 -> v4\n"
      "arrow d: v4 -> v5\n");
}

std::vector<Rat> rats(const std::vector<std::pair<long, long>>& v) {
  std::vector<Rat> out;
  for (auto [p, q] : v) out.push_back(rat(p, q));
  return out;
}

DiagonalMetric random_metric(int dim, std::mt19937_64& rng) {
  DiagonalMetric g;
  for (int i = 0; i < dim; ++i) {
    g.norms_squared.push_back(
        rat(1 + bounded_rand(rng, 9), 1 + bounded_rand(rng, 9)));
  }
  return g;
}

// the fixed pseudo-random sweep shared by criteria 4 and 6
std::vector<Quiver> random_sweep(int count) {
  std::mt19937_64 rng(20260810);
  std::vector<Quiver> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(random_quiver({2 + i % 5, 1 + i % 10}, rng));
  }
  return out;
}

#ifdef QLIE_CLI_PATH
int run_cli(const std::string& args, std::string* output) {
  std::string cmd =
      std::string(QLIE_CLI_PATH) + " " + args + " > acc_cli_out.txt 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in("acc_cli_out.txt");
  std::ostringstream buf;
  buf << in.rdbuf();
  *output = buf.str();
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

void criterion_1() {
  Quiver q = line2();
  QuiverLieAlgebra alg = build_algebra(q);
  DiagonalMetric g = construct_soliton_metric(q);
  require(g.norms_squared == rats({{3, 2}, {1, 1}, {1, 1}}),
          "metric is not (3/2, 1, 1)");
  SolitonCertificate cert = verify_certificate(alg, g, q);
  require(cert.ricci_diagonal == rats({{-1, 3}, {-1, 3}, {1, 3}}),
          "Ricci diagonal is not (-1/3, -1/3, 1/3)");
  require(cert.c == rat(-1), "c is not -1");
  require(cert.derivation.entries == rats({{2, 3}, {2, 3}, {4, 3}}),
          "D is not (2/3, 2/3, 4/3)");
  require(is_derivation(alg, cert.derivation), "D fails the derivation check");
  require(cert.all_checks(), "certificate checks failed");
}

void criterion_2() {
  Quiver q = merge5();
  std::vector<std::string> names;
  for (const PathSeq& p : enumerate_paths(q)) names.push_back(path_name(q, p));
  require(names == std::vector<std::string>{"a", "b", "c", "d", "e", "a.b",
                                            "b.e", "c.e", "d.e", "a.b.e"},
          "path list is wrong");

  QuiverLieAlgebra alg = build_algebra(q);
  require(nilpotency_step(alg) == 3, "step is not 3");
  require(alg.grades()[0].size() == 5 && alg.grades()[1].size() == 4 &&
              alg.grades()[2].size() == 1,
          "grading is not (5, 4, 1)");

  auto auts = automorphisms(q);
  require(auts.size() == 2, "|Aut| is not 2");
  require(cycle_notation(q, auts[1]) == "(c d)",
          "nontrivial automorphism is not (c d)");

  DiagonalMetric g = construct_soliton_metric(q);
  auto w = [&](const std::string& name) {
    return g.norms_squared[*alg.index_of_name(name)];
  };
  require(w("c") == w("d"), "<c,c> != <d,d>");
  require(w("c.e") == w("d.e"), "<ce,ce> != <de,de>");

  SolitonCertificate cert = verify_certificate(alg, g, q);
  require(cert.aut_invariant, "metric is not Aut-invariant");
  require(cert.all_checks(), "certificate checks failed");
}

void criterion_3() {
  Quiver q = twin3();
  QuiverLieAlgebra alg = build_algebra(q);
  require(alg.dim() == 9, "dimension is not 9");
  std::set<std::string> names;
  for (int i = 0; i < alg.dim(); ++i) names.insert(alg.name(i));
  require(names == std::set<std::string>{"a", "b", "c", "d", "a.c", "b.c",
                                         "c.d", "a.c.d", "b.c.d"},
          "basis is wrong");
  require(nilpotency_step(alg) == 3, "step is not 3");
  require(alg.grades()[0].size() == 4 && alg.grades()[1].size() == 3 &&
              alg.grades()[2].size() == 2,
          "grading is not (4, 3, 2)");
  SolitonCertificate cert =
      verify_certificate(alg, construct_soliton_metric(q), q);
  require(cert.all_checks(), "certificate checks failed");
}

void criterion_4() {
  int count = 0;
  for (const Quiver& q : random_sweep(240)) {
    try {
      full_verification(q);
    } catch (const std::exception& e) {
      throw Failure("quiver\n" + serialize(q) + "failed: " + e.what());
    }
    ++count;
  }
  require(count >= 200, "fewer than 200 quivers verified");
}

void criterion_5() {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 50; ++i) {
    Quiver q = random_quiver({2 + i % 5, 1 + i % 10}, rng);
    QuiverLieAlgebra alg = build_algebra(q);
    DiagonalMetric g = random_metric(alg.dim(), rng);
    RicciResult full = ricci_form(alg, g);
    for (int a = 0; a < alg.dim(); ++a) {
      for (int b = 0; b < alg.dim(); ++b) {
        if (a != b) {
          require(full.op[a][b] == 0,
                  "off-diagonal entry on\n" + serialize(q));
        }
      }
    }
    require(full.operator_diagonal() &&
                full.diagonal == ricci_diagonal_nice(alg, g),
            "route disagreement on\n" + serialize(q));
  }
}

void criterion_6() {
  std::vector<Quiver> quivers = {line2(), merge5(), twin3()};
  for (const Quiver& q : random_sweep(40)) quivers.push_back(q);
  for (const Quiver& q : quivers) {
    QuiverLieAlgebra alg = build_algebra(q);
    DiagonalMetric g = construct_soliton_metric(q);
    SolitonCertificate cert = verify_certificate(alg, g, q);
    auto sol = diagonal_soliton_feasibility(alg, g);
    require(sol.has_value(), "constructed metric reported infeasible");
    require(sol->first == rat(-1), "c is not -1 on a constructed metric");
    require(sol->second == cert.derivation,
            "solver derivation differs from the certificate");
  }

  QuiverLieAlgebra alg = build_algebra(line2());
  auto sol = diagonal_soliton_feasibility(alg, ones_metric(3));
  require(sol.has_value(), "all-ones metric reported infeasible");
  require(sol->first == rat(-3, 2), "c is not -3/2");
  require(sol->second.entries == rats({{1, 1}, {1, 1}, {2, 1}}),
          "d is not (1, 1, 2)");
  auto r = ricci_diagonal_nice(alg, ones_metric(3));
  for (int k = 0; k < 3; ++k) {
    require(r[k] == sol->first + sol->second.entries[k],
            "Ric = c id + D fails");
  }
}

void criterion_7() {
  std::vector<Quiver> quivers = {line2(), merge5(), twin3(),
                                 parse("vertex w\narrow a: v1 -> v2\n")};
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    quivers.push_back(random_quiver({2 + i % 5, 1 + i % 10}, rng));
  }
  for (const Quiver& q : quivers) {
    require(parse(serialize(q)) == q, "round trip is not the identity");
    require(serialize(q) == serialize(parse(serialize(q))),
            "canonical output is not stable");
  }

  // line-anchored parse errors
  try {
    parse("arrow a: v1 -> v2\narrow ?? nope\n");
    throw Failure("malformed input was accepted");
  } catch (const SyntaxError& e) {
    require(e.line == 2, "error is not anchored to line 2");
  }

#ifdef QLIE_CLI_PATH
  {
    std::ofstream("acc_good.quiver") << serialize(merge5());
    std::ofstream("acc_bad.quiver") << "arrow ?? nope\n";
    std::ofstream("acc_loop.quiver") << "arrow a: v1 -> v1\n";

    std::string out;
    require(run_cli("check acc_good.quiver", &out) == 0,
            "CLI rejected a valid quiver");
    require(run_cli("check acc_bad.quiver", &out) == 2,
            "CLI exit code for a syntax error is not 2");
    require(out.find("line 1") != std::string::npos,
            "CLI error is not line-anchored");
    require(run_cli("check acc_loop.quiver", &out) == 2,
            "CLI exit code for a cycle is not 2");
    require(out.find("cycle") != std::string::npos,
            "CLI cycle error lacks a witness");
    require(run_cli("soliton acc_good.quiver --json", &out) == 0,
            "CLI soliton failed on a valid quiver");
    nlohmann::json doc = nlohmann::json::parse(out);  // exactly one document
    require(doc["checks"]["residual_zero"] == true, "JSON checks not true");

    std::remove("acc_good.quiver");
    std::remove("acc_bad.quiver");
    std::remove("acc_loop.quiver");
    std::remove("acc_cli_out.txt");
  }
#endif
}

}  // namespace

int main() {
  criterion(1, "three-dimensional example, exact certificate", criterion_1,
            1000);
  criterion(2, "five-arrow example with a swap symmetry", criterion_2, 1000);
  criterion(3, "nine-dimensional example", criterion_3, 1000);
  criterion(4, "invariant suite over 240 random quivers", criterion_4,
            300000);
  criterion(5, "curvature route agreement on random metrics", criterion_5,
            60000);
  criterion(6, "feasibility solver sanity", criterion_6, 60000);
  criterion(7, "text format round trip and CLI exit codes", criterion_7,
            60000);

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
