#ifndef ORDKIT_IO_HPP
#define ORDKIT_IO_HPP

#include <string>

#include <json.hpp>

#include "ordkit/plmap.hpp"
#include "ordkit/poset.hpp"
#include "ordkit/umodule.hpp"

namespace ordkit {

struct IoError : std::runtime_error {
  IoError(const std::string& message, const std::string& location)
      : std::runtime_error(message + " at " + location), where(location) {}
  std::string where;
};

using Json = nlohmann::json;

/// Poset format: {"n": int, "leq": [[bool,...],...], "labels": [string,...]?}
Json poset_to_json(const FinPoset& p);
FinPoset poset_from_json(const Json& j);

/// Hasse diagram (transitive reduction), edges oriented upward.
std::string poset_to_dot(const FinPoset& p);

/// Piece format: {"pieces": [{"x0","x1","y0","y1","y_at_x0"?}]}, rationals as
/// "p/q" strings; a jump at 1 is carried by a zero-width final piece.
Json plmap_to_json(const PLMap& m);
PLMap plmap_from_json(const Json& j);

/// FunctionModule element: map from element label to rational string.
Json function_elem_to_json(const FunctionModule& m, const FunctionModule::Element& a);
FunctionModule::Element function_elem_from_json(const FunctionModule& m, const Json& j);

Rat rat_from_json(const Json& j, const std::string& location);

}  // namespace ordkit

#endif
