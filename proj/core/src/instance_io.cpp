#include "zonelab/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zonelab {

namespace {

using nlohmann::json;

json vec_to_json(std::span<const Rat> v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(rat_to_string(x));
  return arr;
}

RatVec vec_from_json(const json& arr) {
  if (!arr.is_array()) throw MalformedInputError("expected an array");
  RatVec out;
  for (const auto& x : arr)
    out.push_back(rat_from_string(x.get<std::string>()));
  return out;
}

json body_json(const ConvexBody& body) {
  json hs = json::array();
  for (const auto& h : body.halfspaces())
    hs.push_back({{"c", vec_to_json(h.coeffs)}, {"d", rat_to_string(h.rhs)}});
  return {{"dim", body.ambient_dim()}, {"halfspaces", hs}};
}

ConvexBody body_from(const json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<LinearConstraint> hs;
  for (const auto& h : j.at("halfspaces"))
    hs.push_back(ge(vec_from_json(h.at("c")),
                    rat_from_string(h.at("d").get<std::string>())));
  return ConvexBody(std::move(hs), dim);
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  json hs = json::array();
  for (const auto& h : instance.hyperplanes)
    hs.push_back(
        {{"a", vec_to_json(h.normal())}, {"b", rat_to_string(h.offset())}});
  json j = {{"dim", instance.dim},
            {"seed", instance.seed},
            {"hyperplanes", hs},
            {"body", body_json(instance.body)}};
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInputError(std::string("bad instance file: ") + e.what());
  }
  try {
    Instance inst;
    inst.dim = j.at("dim").get<int>();
    inst.seed = j.value("seed", uint64_t{0});
    for (const auto& h : j.at("hyperplanes"))
      inst.hyperplanes.emplace_back(
          vec_from_json(h.at("a")),
          rat_from_string(h.at("b").get<std::string>()));
    inst.body = body_from(j.at("body"));
    if (inst.body.ambient_dim() != inst.dim)
      throw MalformedInputError("body and instance dimensions differ");
    for (const auto& h : inst.hyperplanes)
      if (h.dim() != inst.dim)
        throw MalformedInputError("hyperplane dimension mismatch");
    return inst;
  } catch (const json::exception& e) {
    throw MalformedInputError(std::string("bad instance file: ") + e.what());
  }
}

std::string body_to_json(const ConvexBody& body) {
  return body_json(body).dump(2) + "\n";
}

ConvexBody body_from_json(const std::string& text) {
  try {
    return body_from(json::parse(text));
  } catch (const json::exception& e) {
    throw MalformedInputError(std::string("bad body file: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace zonelab
