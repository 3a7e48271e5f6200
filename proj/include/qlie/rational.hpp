#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qlie {

// Exact arbitrary-precision rational. All metric and curvature arithmetic
// is exact; floating point appears only in display helpers and test
// oracles.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Accepts "p", "-p" or "p/q" (any terms, any denominator sign).
Rat rat_parse(const std::string& text);

// Lowest terms, positive denominator: "p" or "p/q".
std::string rat_str(const Rat& value);

std::vector<std::string> rat_strs(const std::vector<Rat>& values);

double rat_double(const Rat& value);

}  // namespace qlie
