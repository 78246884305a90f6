#include "error.hpp"

#include <sstream>

namespace hgc {

std::string ValidationReport::summary(std::size_t max_items) const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation" << (violations.size() == 1 ? "" : "s");
  const std::size_t shown = std::min(max_items, violations.size());
  for (std::size_t i = 0; i < shown; ++i) {
    out << (i == 0 ? ": " : "; ") << violations[i].axiom;
    if (!violations[i].witness.empty()) {
      out << " (";
      for (std::size_t j = 0; j < violations[i].witness.size(); ++j) {
        if (j) out << ", ";
        out << violations[i].witness[j];
      }
      out << ")";
    }
  }
  if (shown < violations.size()) out << "; ...";
  return out.str();
}

}  // namespace hgc
