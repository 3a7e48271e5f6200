#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qlie/automorphism.hpp"
#include "qlie/dsl.hpp"
#include "qlie/random.hpp"
#include "qlie/verify.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qlie::InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

qlie::Quiver load_quiver(const std::string& path) {
  qlie::Quiver q = qlie::parse(read_file(path));
  qlie::validate(q);
  return q;
}

void print_diagonal(std::ostream& out, const qlie::QuiverLieAlgebra& alg,
                    const std::vector<qlie::Rat>& values) {
  for (int i = 0; i < alg.dim(); ++i) {
    out << "  " << alg.name(i) << " = " << qlie::rat_str(values[i]) << "\n";
  }
}

int run_check(const std::string& file) {
  qlie::Quiver q = load_quiver(file);
  std::cout << q.vertex_count() << " vertices, " << q.arrow_count()
            << " arrows, ";
  if (q.arrow_count() == 0) {
    std::cout << "0 paths\n";
    return 0;
  }
  auto paths = qlie::enumerate_paths(q);
  std::cout << paths.size() << " paths, length " << paths.back().length()
            << "\n";
  return 0;
}

int run_info(const std::string& file, bool json) {
  qlie::Quiver q = load_quiver(file);
  qlie::QuiverLieAlgebra alg = qlie::build_algebra(q);
  int step = qlie::nilpotency_step(alg);
  qlie::check_nice_basis(alg);
  // group order from the stabilizer chain; never enumerates the group
  mpz_class aut_order = qlie::automorphism_chain(q).order;

  std::vector<int> grading;
  for (const auto& grade : alg.grades()) {
    grading.push_back(static_cast<int>(grade.size()));
  }
  std::vector<std::string> names;
  for (int i = 0; i < alg.dim(); ++i) names.push_back(alg.name(i));

  if (json) {
    ordered_json doc;
    doc["dimension"] = alg.dim();
    doc["step"] = step;
    doc["grading"] = grading;
    doc["paths"] = names;
    doc["nice_basis"] = true;
    if (aut_order.fits_ulong_p()) {
      doc["aut_order"] = aut_order.get_ui();
    } else {
      doc["aut_order"] = aut_order.get_str();
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "dimension: " << alg.dim() << "\n";
  std::cout << "step: " << step << "\n";
  std::cout << "grading:";
  for (int d : grading) std::cout << " " << d;
  std::cout << "\n";
  std::cout << "paths:";
  for (const std::string& n : names) std::cout << " " << n;
  std::cout << "\n";
  std::cout << "nice basis: yes\n";
  std::cout << "automorphisms: " << aut_order.get_str() << "\n";
  return 0;
}

void print_level_report(std::ostream& out, const qlie::Quiver& q) {
  qlie::Quiver level = q;
  int depth = 1;
  while (true) {
    int m = qlie::quiver_length(level);
    if (m < 2) {
      out << "  level " << depth << ": length 1 (abelian base)\n";
      return;
    }
    qlie::QuiverPartition part = qlie::partition(level);
    qlie::LevelData ld = qlie::level_data(part);
    out << "  level " << depth << ": length " << m << ", |S| = "
        << part.starting.size() << ", |P0| = " << part.p0.size() << "\n";
    for (const auto& e : ld.entries) {
      out << "    vertex " << level.vertex_name(e.vertex) << ": N = "
          << qlie::rat_str(e.n_value) << ", #S_j = " << e.s_count
          << ", #P1_j = " << e.p1_count << ", #P2_j = " << e.p2_count << "\n";
    }
    level = part.reduced;
    ++depth;
  }
}

int run_soliton(const std::string& file, bool json, bool report) {
  qlie::Quiver q = load_quiver(file);
  qlie::QuiverLieAlgebra alg = qlie::build_algebra(q);
  qlie::DiagonalMetric g = qlie::construct_soliton_metric(q);
  qlie::SolitonCertificate cert = qlie::verify_certificate(alg, g, q);

  if (json) {
    std::cout << qlie::certificate_to_json(alg, cert);
  } else {
    std::cout << "norms_squared:\n";
    print_diagonal(std::cout, alg, g.norms_squared);
    std::cout << "c = " << qlie::rat_str(cert.c) << "\n";
    std::cout << "derivation:\n";
    print_diagonal(std::cout, alg, cert.derivation.entries);
    if (report) {
      std::cout << "levels:\n";
      print_level_report(std::cout, q);
      std::cout << "per-path (norm^2, r, d):\n";
      for (int i = 0; i < alg.dim(); ++i) {
        std::cout << "  " << alg.name(i) << ": "
                  << qlie::rat_str(g.norms_squared[i]) << ", "
                  << qlie::rat_str(cert.ricci_diagonal[i]) << ", "
                  << qlie::rat_str(cert.derivation.entries[i]) << "\n";
      }
    }
    std::cout << "checks: diagonal=" << (cert.operator_diagonal ? "yes" : "no")
              << " derivation=" << (cert.d_is_derivation ? "yes" : "no")
              << " aut_invariant=" << (cert.aut_invariant ? "yes" : "no")
              << " residual_zero="
              << (cert.ric_equals_minus_id_plus_d ? "yes" : "no") << "\n";
  }
  return cert.all_checks() ? 0 : 1;
}

int run_ricci(const std::string& file, const std::string& metric_file,
              bool json) {
  qlie::Quiver q = load_quiver(file);
  qlie::QuiverLieAlgebra alg = qlie::build_algebra(q);
  qlie::DiagonalMetric g = metric_file.empty()
                               ? qlie::ones_metric(alg.dim())
                               : qlie::parse_metric_file(
                                     alg, read_file(metric_file));

  qlie::RicciResult full = qlie::ricci_form(alg, g);
  std::vector<qlie::Rat> nice = qlie::ricci_diagonal_nice(alg, g);
  if (!full.operator_diagonal() || full.diagonal != nice) {
    throw qlie::CrossCheckMismatch(
        "full-form and nice-basis Ricci routes disagree");
  }
  auto feasible = qlie::diagonal_soliton_feasibility(alg, g);

  if (json) {
    ordered_json doc;
    ordered_json paths = ordered_json::array();
    for (int i = 0; i < alg.dim(); ++i) paths.push_back(alg.name(i));
    doc["paths"] = std::move(paths);
    doc["ricci_diagonal"] = qlie::rat_strs(nice);
    doc["feasible"] = feasible.has_value();
    if (feasible) {
      doc["c"] = qlie::rat_str(feasible->first);
      doc["derivation_diagonal"] = qlie::rat_strs(feasible->second.entries);
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "ricci_diagonal:\n";
  print_diagonal(std::cout, alg, nice);
  if (feasible) {
    std::cout << "feasible: yes\n";
    std::cout << "c = " << qlie::rat_str(feasible->first) << "\n";
    std::cout << "derivation:\n";
    print_diagonal(std::cout, alg, feasible->second.entries);
  } else {
    std::cout << "feasible: no\n";
  }
  return 0;
}

int run_aut(const std::string& file) {
  qlie::Quiver q = load_quiver(file);
  for (const qlie::ArrowPermutation& f : qlie::automorphisms(q)) {
    std::cout << qlie::cycle_notation(q, f) << "\n";
  }
  return 0;
}

int run_dot(const std::string& file) {
  std::cout << qlie::export_dot(load_quiver(file));
  return 0;
}

int run_random(int vertices, int arrows, unsigned long long seed, int count,
               bool verify) {
  if (vertices < 1 || arrows < 1 || count < 1) {
    throw qlie::InputError("--vertices, --arrows and --count must be >= 1");
  }
  std::mt19937_64 rng(seed);
  qlie::RandomQuiverParams params{vertices, arrows};
  for (int k = 1; k <= count; ++k) {
    qlie::Quiver q = qlie::random_quiver(params, rng);
    std::cout << "# quiver " << k << "\n" << qlie::serialize(q) << "\n";
    if (verify) {
      try {
        qlie::full_verification(q);
      } catch (const qlie::Error&) {
        std::cerr << "verification failed on:\n" << qlie::serialize(q);
        throw;
      }
    }
  }
  if (verify) {
    std::cerr << "verified " << count << " quiver(s)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilpotent Lie algebras from acyclic quivers: exact Ricci "
               "curvature and soliton certificates"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file;
  bool json = false;
  bool report = false;
  std::string metric_file;

  auto* check = app.add_subcommand("check", "parse and validate a quiver");
  check->add_option("file", file)->required();
  check->callback([&] { exit_code = run_check(file); });

  auto* info = app.add_subcommand(
      "info", "dimension, step, grading, paths, automorphism count");
  info->add_option("file", file)->required();
  info->add_flag("--json", json);
  info->callback([&] { exit_code = run_info(file, json); });

  auto* soliton = app.add_subcommand(
      "soliton", "construct and verify the soliton inner product");
  soliton->add_option("file", file)->required();
  soliton->add_flag("--json", json);
  soliton->add_flag("--report", report);
  soliton->callback([&] { exit_code = run_soliton(file, json, report); });

  auto* ricci = app.add_subcommand(
      "ricci", "exact Ricci diagonal for a diagonal metric");
  ricci->add_option("file", file)->required();
  ricci->add_option("--metric", metric_file, "metric file, defaults to ones");
  ricci->add_flag("--json", json);
  ricci->callback([&] { exit_code = run_ricci(file, metric_file, json); });

  auto* aut = app.add_subcommand("aut", "list quiver automorphisms");
  aut->add_option("file", file)->required();
  aut->callback([&] { exit_code = run_aut(file); });

  auto* dot = app.add_subcommand("dot", "export the quiver in DOT syntax");
  dot->add_option("file", file)->required();
  dot->callback([&] { exit_code = run_dot(file); });

  int vertices = 4, arrows = 5, count = 1;
  unsigned long long seed = 1;
  bool verify = false;
  auto* random = app.add_subcommand(
      "random", "generate random acyclic quivers, optionally verifying the "
                "full invariant suite on each");
  random->add_option("--vertices", vertices);
  random->add_option("--arrows", arrows);
  random->add_option("--seed", seed);
  random->add_option("--count", count);
  random->add_flag("--verify", verify);
  random->callback(
      [&] { exit_code = run_random(vertices, arrows, seed, count, verify); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qlie::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qlie::CheckError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
