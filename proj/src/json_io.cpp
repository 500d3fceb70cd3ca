#include "arrowribbon/json_io.hpp"

#include <json.hpp>

namespace arrowribbon {

using nlohmann::json;

namespace {

ArrowList arrows_from(const json& j, const std::string& where) {
  ArrowList out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw Error(Errc::InvalidGraph, where + ": arrow list must be an array");
  for (const auto& a : j) {
    if (!a.is_string() || (a != "W" && a != "A")) {
      throw Error(Errc::InvalidGraph, where + ": arrows are \"W\" or \"A\", got " + a.dump());
    }
    out.push_back(a == "W" ? Arrow::With : Arrow::Against);
  }
  return out;
}

json arrows_to(const ArrowList& arrows) {
  json out = json::array();
  for (Arrow a : arrows) out.push_back(std::string(1, arrow_letter(a)));
  return out;
}

std::string id_from(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(Errc::InvalidGraph, where + ": id must be a string or an integer");
}

}  // namespace

ArrowRibbonGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::InvalidGraph, "graph JSON must be an object");
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  try {
    for (const auto& jv : doc.value("vertices", json::array())) {
      Vertex v;
      v.id = id_from(jv.at("id"), "vertex");
      const std::string where = "vertex '" + v.id + "'";
      for (const auto& je : jv.value("rotation", json::array())) {
        RotationEntry r;
        r.end = EndRef::parse(je.at("end").get<std::string>());
        r.seg_arrows = arrows_from(je.value("seg_arrows", json::array()), where);
        r.free_arrows = arrows_from(je.value("free_arrows", json::array()), where);
        v.rotation.push_back(std::move(r));
      }
      v.lone_arrows = arrows_from(jv.value("lone_arrows", json::array()), where);
      vertices.push_back(std::move(v));
    }
    for (const auto& je : doc.value("edges", json::array())) {
      Edge e;
      e.id = id_from(je.at("id"), "edge");
      const std::string where = "edge '" + e.id + "'";
      e.twist = je.value("twist", false);
      e.side_l = arrows_from(je.value("sideL", json::array()), where);
      e.side_r = arrows_from(je.value("sideR", json::array()), where);
      if (je.contains("sign") && !je.at("sign").is_null()) {
        const std::string s = je.at("sign").get<std::string>();
        if (s != "+" && s != "-") throw Error(Errc::InvalidGraph, where + ": sign must be \"+\" or \"-\"");
        e.sign = s == "+" ? Sign::Plus : Sign::Minus;
      }
      edges.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidGraph, std::string("graph JSON: ") + e.what());
  }
  return ArrowRibbonGraph::from_rotation_system(std::move(vertices), std::move(edges));
}

std::string graph_to_json(const ArrowRibbonGraph& g, int indent) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : g.vertices()) {
    json jv;
    jv["id"] = v.id;
    jv["rotation"] = json::array();
    for (const auto& r : v.rotation) {
      jv["rotation"].push_back(
          {{"end", r.end.to_string()}, {"seg_arrows", arrows_to(r.seg_arrows)}, {"free_arrows", arrows_to(r.free_arrows)}});
    }
    if (v.rotation.empty()) jv["lone_arrows"] = arrows_to(v.lone_arrows);
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = json::array();
  for (const auto& e : g.edges()) {
    json je{{"id", e.id}, {"twist", e.twist}, {"sideL", arrows_to(e.side_l)}, {"sideR", arrows_to(e.side_r)}};
    if (e.sign) je["sign"] = *e.sign == Sign::Plus ? "+" : "-";
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(indent);
}

std::string poly_to_json(const LaurentPoly& p, int indent) {
  json doc;
  doc["text"] = format(p);
  doc["terms"] = json::array();
  for (const auto& [m, coeff] : p.terms()) {
    json factors = json::array();
    for (const auto& [v, q] : m.factors()) factors.push_back({{"var", v.to_string()}, {"exp", format_exponent(q)}});
    doc["terms"].push_back({{"coeff", coeff.str()}, {"factors", std::move(factors)}});
  }
  return doc.dump(indent);
}

}  // namespace arrowribbon
