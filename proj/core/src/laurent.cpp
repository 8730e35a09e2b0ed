#include "arcext/laurent.hpp"

namespace arcext {

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto [e, c] : coeffs_) {
    if (!first)
      s += (c > 0) ? "+" : "-";
    else if (c < 0)
      s += "-";
    long long a = c > 0 ? c : -c;
    if (e == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a);
      s += "q";
      if (e != 1) s += "^" + std::to_string(e);
    }
    first = false;
  }
  return s;
}

}  // namespace arcext
