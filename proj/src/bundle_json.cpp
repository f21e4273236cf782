#include <json.hpp>

#include "futaki/bundle.hpp"
#include "futaki/errors.hpp"

namespace futaki::bundle {

using nlohmann::json;

namespace {

long get_int(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

BigRational get_rational(const json& v, const char* what) {
  if (v.is_number_integer()) return BigRational(v.get<long>());
  if (v.is_string()) return BigRational::parse(v.get<std::string>());
  throw ParseError(std::string(what) + " must be an integer or a \"p/q\" string");
}

}  // namespace

Problem parse_problem(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  Problem p;
  p.bundle.genus = static_cast<int>(get_int(doc, "genus"));
  if (!doc.contains("summands") || !doc["summands"].is_array()) throw ParseError("missing array 'summands'");
  for (const json& s : doc["summands"])
    p.bundle.summands.push_back({static_cast<int>(get_int(s, "rank")), get_int(s, "degree")});
  if (!doc.contains("destabilizer")) throw ParseError("missing object 'destabilizer'");
  const json& d = doc["destabilizer"];
  const long target = get_int(d, "target");
  if (target < 0) throw ParseError("destabilizer target must be non-negative");
  p.destabilizer = {static_cast<std::size_t>(target), static_cast<int>(get_int(d, "rank")), get_int(d, "degree")};
  if (doc.contains("polarization")) p.polarization = get_rational(doc["polarization"], "polarization");
  try {
    p.bundle.validate();
  } catch (const InvalidBundle& e) {
    throw ParseError(e.what());
  }
  return p;
}

std::string problem_to_json(const Problem& p) {
  json doc;
  doc["genus"] = p.bundle.genus;
  doc["summands"] = json::array();
  for (const auto& s : p.bundle.summands) doc["summands"].push_back({{"rank", s.rank}, {"degree", s.degree}});
  doc["destabilizer"] = {{"target", p.destabilizer.target_index},
                         {"rank", p.destabilizer.sub_rank},
                         {"degree", p.destabilizer.sub_degree}};
  if (p.polarization) doc["polarization"] = p.polarization->str();
  return doc.dump(2);
}

}  // namespace futaki::bundle
