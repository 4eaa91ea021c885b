#include "arcd/json_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace arcd {

namespace {

using nlohmann::json;

json triple_obj(const OrientedTriple& t) {
  return json{{"bottom", t.bottom.str()},
              {"orient", t.orient.str()},
              {"top", t.top.str()}};
}

}  // namespace

std::string triple_to_json(const OrientedTriple& t) {
  return triple_obj(t).dump();
}

std::string element_to_json(const Element& x) {
  json arr = json::array();
  for (const auto& [t, c] : x.terms()) {
    json term = triple_obj(t);
    term["coeff"] = json{{"re", c.re}, {"im", c.im}};
    arr.push_back(term);
  }
  return arr.dump();
}

std::string basis_to_json(const std::vector<OrientedTriple>& basis) {
  json arr = json::array();
  for (const OrientedTriple& t : basis) {
    json term = triple_obj(t);
    term["degree"] = triple_degree(t);
    arr.push_back(term);
  }
  return arr.dump();
}

std::string poly_to_json(const LaurentPoly& p) {
  json coeffs = json::object();
  for (auto [e, c] : p.terms()) coeffs[std::to_string(e)] = c;
  return json{{"coeffs", coeffs}}.dump();
}

OrientedTriple parse_triple(const std::string& text, int n) {
  auto c1 = text.find(',');
  auto c2 = text.rfind(',');
  if (c1 == std::string::npos || c2 == c1)
    throw std::invalid_argument(
        "triple must be three comma-separated weights: bottom,orient,top");
  OrientedTriple t{Weight::parse(text.substr(0, c1)),
                   Weight::parse(text.substr(c1 + 1, c2 - c1 - 1)),
                   Weight::parse(text.substr(c2 + 1))};
  if (t.bottom.size() != n || t.orient.size() != n || t.top.size() != n)
    throw std::invalid_argument("triple weights must all have length " +
                                std::to_string(n));
  if (!triple_oriented(t))
    throw std::invalid_argument("orientation does not orient both halves: " +
                                t.str());
  return t;
}

}  // namespace arcd
