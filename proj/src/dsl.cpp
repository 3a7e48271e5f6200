#include "qlie/dsl.hpp"

#include <regex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qlie {

Quiver parse(const std::string& text) {
  Quiver q;
  std::set<std::string> declared;  // explicit vertex declarations
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  static const std::regex vertex_stmt(R"(^\s*vertex\s+([A-Za-z_]\w*)\s*$)");
  static const std::regex arrow_stmt(
      R"(^\s*arrow\s+([A-Za-z_]\w*)\s*:\s*([A-Za-z_]\w*)\s*->\s*([A-Za-z_]\w*)\s*$)");

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::smatch m;
    if (std::regex_match(line, m, vertex_stmt)) {
      if (!declared.insert(m[1].str()).second) {
        throw DuplicateVertexDeclaration(line_no, m[1].str());
      }
      q.add_vertex(m[1].str());
    } else if (std::regex_match(line, m, arrow_stmt)) {
      if (q.arrow_index(m[1].str())) {
        throw DuplicateArrowName(line_no, m[1].str());
      }
      q.add_arrow(m[1].str(), m[2].str(), m[3].str());
    } else {
      throw SyntaxError(line_no,
                        "expected 'vertex <id>' or "
                        "'arrow <id> : <src> -> <tgt>'");
    }
  }
  return q;
}

std::string serialize(const Quiver& q) {
  std::string out;
  for (int v : q.isolated_vertices()) {
    out += "vertex " + q.vertex_name(v) + "\n";
  }
  for (const Arrow& a : q.arrows()) {
    out += "arrow " + a.name + ": " + q.vertex_name(a.source) + " -> " +
           q.vertex_name(a.target) + "\n";
  }
  return out;
}

std::string export_dot(const Quiver& q) {
  std::string out = "digraph Q {\n";
  for (const std::string& v : q.vertices()) {
    out += "  " + v + ";\n";
  }
  for (const Arrow& a : q.arrows()) {
    out += "  " + q.vertex_name(a.source) + " -> " + q.vertex_name(a.target) +
           " [label=\"" + a.name + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string certificate_to_json(const QuiverLieAlgebra& alg,
                                const SolitonCertificate& cert) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json paths = nlohmann::json::array();
  for (int i = 0; i < alg.dim(); ++i) paths.push_back(alg.name(i));
  doc["paths"] = std::move(paths);
  doc["norms_squared"] = rat_strs(cert.metric.norms_squared);
  doc["ricci_eigenvalues"] = rat_strs(cert.ricci_diagonal);
  doc["c"] = rat_str(cert.c);
  doc["derivation_diagonal"] = rat_strs(cert.derivation.entries);
  doc["checks"] = {{"derivation", cert.d_is_derivation},
                   {"diagonal", cert.operator_diagonal},
                   {"aut_invariant", cert.aut_invariant},
                   {"residual_zero", cert.ric_equals_minus_id_plus_d}};
  return doc.dump(2) + "\n";
}

}  // namespace qlie
