#include "qlie/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "qlie/errors.hpp"

namespace qlie {

Rat rat(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw InputError("empty rational literal");
  try {
    Rat r(s, 10);
    if (r.get_den() == 0) {
      throw InputError("zero denominator in '" + text + "'");
    }
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational: '" + text + "'");
  }
}

std::string rat_str(const Rat& value) { return value.get_str(); }

std::vector<std::string> rat_strs(const std::vector<Rat>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rat& v : values) out.push_back(rat_str(v));
  return out;
}

double rat_double(const Rat& value) { return value.get_d(); }

}  // namespace qlie
