#include "qlie/errors.hpp"

namespace qlie::detail {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ' ';
    out += names[i];
  }
  return out;
}

}  // namespace qlie::detail
