#include "ordkit/io.hpp"

#include <sstream>

namespace ordkit {

namespace {

std::string default_label(int i) { return "e" + std::to_string(i); }

}  // namespace

Json poset_to_json(const FinPoset& p) {
  Json leq = Json::array();
  for (int i = 0; i < p.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < p.size(); ++j) row.push_back(p.leq(i, j));
    leq.push_back(std::move(row));
  }
  Json out{{"n", p.size()}, {"leq", std::move(leq)}};
  if (!p.labels().empty()) out["labels"] = p.labels();
  return out;
}

FinPoset poset_from_json(const Json& j) {
  if (!j.is_object()) throw IoError("expected object", "/");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw IoError("missing integer field", "/n");
  const int n = j["n"].get<int>();
  if (n < 0 || n > FinPoset::kMaxElements) throw IoError("element count out of range", "/n");
  if (!j.contains("leq") || !j["leq"].is_array()) throw IoError("missing array field", "/leq");
  if ((int)j["leq"].size() != n) throw IoError("row count differs from n", "/leq");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    const Json& row = j["leq"][i];
    if (!row.is_array() || (int)row.size() != n)
      throw IoError("row is not a boolean array of length n", "/leq/" + std::to_string(i));
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_boolean())
        throw IoError("expected boolean", "/leq/" + std::to_string(i) + "/" + std::to_string(k));
      leq[i][k] = row[k].get<bool>();
    }
  }
  FinPoset p;
  try {
    p = validate_poset(leq);
  } catch (const PosetError& e) {
    throw IoError(e.what(), "/leq");
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || (int)j["labels"].size() != n)
      throw IoError("labels must be a string array of length n", "/labels");
    std::vector<std::string> ls;
    for (int i = 0; i < n; ++i) {
      if (!j["labels"][i].is_string())
        throw IoError("expected string", "/labels/" + std::to_string(i));
      ls.push_back(j["labels"][i].get<std::string>());
    }
    p.set_labels(std::move(ls));
  }
  return p;
}

std::string poset_to_dot(const FinPoset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) {
    const std::string label = p.labels().empty() ? default_label(i) : p.labels()[i];
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (auto [a, b] : p.cover_pairs()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Rat rat_from_json(const Json& j, const std::string& location) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw IoError("expected rational string \"p/q\"", location);
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw IoError(e.what(), location);
  }
}

Json plmap_to_json(const PLMap& m) {
  Json pieces = Json::array();
  const auto& xs = m.breakpoints();
  for (int i = 0; i < m.segments(); ++i) {
    Json piece{{"x0", xs[i].str()},
               {"x1", xs[i + 1].str()},
               {"y0", m.right_limit(i).str()},
               {"y1", m.left_limit(i).str()}};
    if (m.value_at(i) != m.right_limit(i)) piece["y_at_x0"] = m.value_at(i).str();
    pieces.push_back(std::move(piece));
  }
  const int k = m.segments();
  if (m.value_at(k) != m.left_limit(k - 1)) {
    const std::string v = m.value_at(k).str();
    pieces.push_back(Json{{"x0", "1/1"}, {"x1", "1/1"}, {"y0", v}, {"y1", v}});
  }
  return Json{{"pieces", std::move(pieces)}};
}

PLMap plmap_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
    throw IoError("expected object with a pieces array", "/pieces");
  const Json& pieces = j["pieces"];
  if (pieces.empty()) throw IoError("pieces must be nonempty", "/pieces");

  std::vector<Rat> xs, at, y0, y1;
  Rat value_at_one;
  bool have_value_at_one = false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string loc = "/pieces/" + std::to_string(i);
    const Json& piece = pieces[i];
    for (const char* field : {"x0", "x1", "y0", "y1"})
      if (!piece.contains(field)) throw IoError("missing field", loc + "/" + field);
    const Rat x0 = rat_from_json(piece["x0"], loc + "/x0");
    const Rat x1 = rat_from_json(piece["x1"], loc + "/x1");
    const Rat v0 = rat_from_json(piece["y0"], loc + "/y0");
    const Rat v1 = rat_from_json(piece["y1"], loc + "/y1");
    if (x0 == x1) {
      // zero-width carrier for the value at 1
      if (!(x0 == Rat(1)) || i + 1 != pieces.size())
        throw IoError("zero-width piece only allowed at x = 1 as the final piece", loc);
      value_at_one = piece.contains("y_at_x0") ? rat_from_json(piece["y_at_x0"], loc + "/y_at_x0") : v0;
      have_value_at_one = true;
      break;
    }
    if (xs.empty()) {
      if (!(x0 == Rat(0))) throw IoError("first piece must start at 0", loc + "/x0");
      xs.push_back(x0);
    } else if (!(xs.back() == x0)) {
      throw IoError("pieces must tile [0,1] without gaps", loc + "/x0");
    }
    const Rat at0 = piece.contains("y_at_x0") ? rat_from_json(piece["y_at_x0"], loc + "/y_at_x0") : v0;
    at.push_back(at0);
    y0.push_back(v0);
    y1.push_back(v1);
    xs.push_back(x1);
  }
  if (xs.empty() || !(xs.back() == Rat(1)))
    throw IoError("pieces must end at 1", "/pieces");
  at.push_back(have_value_at_one ? value_at_one : y1.back());
  try {
    return PLMap::from_data(std::move(xs), std::move(at), std::move(y0), std::move(y1));
  } catch (const PLError& e) {
    throw IoError(e.what(), "/pieces");
  }
}

Json function_elem_to_json(const FunctionModule& m, const FunctionModule::Element& a) {
  Json out = Json::object();
  const auto& labels = m.lattice().labels();
  for (int i = 0; i < m.lattice().size(); ++i)
    out[labels.empty() ? default_label(i) : labels[i]] = a[i].str();
  return out;
}

FunctionModule::Element function_elem_from_json(const FunctionModule& m, const Json& j) {
  if (!j.is_object()) throw IoError("expected object of label -> rational", "/");
  FunctionModule::Element a(m.lattice().size());
  const auto& labels = m.lattice().labels();
  for (int i = 0; i < m.lattice().size(); ++i) {
    const std::string key = labels.empty() ? default_label(i) : labels[i];
    if (!j.contains(key)) throw IoError("missing value for element", "/" + key);
    a[i] = rat_from_json(j[key], "/" + key);
  }
  if (!m.is_element(a)) throw IoError("table is not a carrier element", "/");
  return a;
}

}  // namespace ordkit
