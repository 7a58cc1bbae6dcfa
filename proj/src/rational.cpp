#include "ordkit/rational.hpp"

#include <cstdlib>

namespace ordkit {

Rat Rat::parse(const std::string& s) {
  const auto slash = s.find('/');
  auto to_i64 = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("Rat::parse: empty component in '" + s + "'");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
    }
    if (pos != part.size()) throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
    return v;
  };
  if (slash == std::string::npos) return Rat(to_i64(s));
  return Rat(to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1)));
}

}  // namespace ordkit
