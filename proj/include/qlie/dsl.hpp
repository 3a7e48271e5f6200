#pragma once

#include <string>

#include "qlie/soliton.hpp"

namespace qlie {

/// Line grammar, one statement per line:
///   vertex <ident>
///   arrow <ident> : <ident> -> <ident>
/// Blank lines and lines starting with '#' are ignored; identifiers match
/// [A-Za-z_][A-Za-z0-9_]*. Arrow endpoints declare vertices implicitly.
Quiver parse(const std::string& text);

/// Isolated-vertex lines first, then arrows in declaration order.
/// Byte-stable; parse(serialize(q)) == q.
std::string serialize(const Quiver& q);

/// DOT digraph with arrow names as edge labels, deterministic order.
std::string export_dot(const Quiver& q);

/// Certificate JSON: paths, norms_squared, ricci_eigenvalues, c,
/// derivation_diagonal (exact rationals as strings) and the four check
/// booleans.
std::string certificate_to_json(const QuiverLieAlgebra& alg,
                                const SolitonCertificate& cert);

}  // namespace qlie
