#include "csurg/cobordism/text.hpp"

#include "csurg/error.hpp"

namespace csurg::cobordism {

using nlohmann::json;

namespace {

std::string_view exactness_name(Exactness e) {
  switch (e) {
    case Exactness::exact: return "exact";
    case Exactness::stein_candidate: return "stein_candidate";
    case Exactness::weak: return "weak";
  }
  return "exact";
}

Exactness parse_exactness(const std::string& s) {
  if (s == "exact") return Exactness::exact;
  if (s == "stein_candidate") return Exactness::stein_candidate;
  if (s == "weak") return Exactness::weak;
  throw Error(ErrorCode::malformed_text, "unknown exactness " + s);
}

json group_json(const Group& g) { return {{"rank", g.rank}, {"torsion", g.torsion}}; }

}  // namespace

json to_json(const Handle& h) {
  return {{"ambient_dim", h.ambient_dim}, {"index", h.index}, {"provenance", h.provenance}};
}

json to_json(const CobordismSpec& c) {
  json hs = json::array();
  for (const auto& h : c.handles) hs.push_back(to_json(h));
  return {{"negative_boundary", c.negative_boundary},
          {"positive_boundary", c.positive_boundary},
          {"handles", hs},
          {"exactness", exactness_name(c.exactness)}};
}

json to_json(const HomologyProfile& p) {
  json gs = json::array();
  for (const auto& g : p.groups) gs.push_back(group_json(g));
  return {{"groups", gs}};
}

json to_json(const SteinCheck& r) {
  json j = {{"passed", r.passed}, {"predicted", to_json(r.predicted)}, {"detail", r.detail}};
  j["certificate_degree"] = r.certificate_degree ? json(*r.certificate_degree) : json(nullptr);
  return j;
}

json to_json(const SteinObstructionReport& r) {
  return {{"conclusive", r.conclusive},
          {"degree", r.degree},
          {"boundary", group_json(r.boundary)},
          {"cobordism", group_json(r.cobordism)},
          {"detail", r.detail}};
}

CobordismSpec cobordism_from_json(const json& j) {
  try {
    CobordismSpec c;
    c.negative_boundary = j.at("negative_boundary").get<std::vector<std::string>>();
    c.positive_boundary = j.at("positive_boundary").get<std::string>();
    for (const auto& h : j.at("handles"))
      c.handles.push_back({h.at("ambient_dim").get<int>(), h.at("index").get<int>(),
                           h.at("provenance").get<std::string>()});
    c.exactness = parse_exactness(j.at("exactness").get<std::string>());
    validate_cobordism(c);
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::malformed_text, std::string("cobordism: ") + e.what());
  }
}

HomologyProfile profile_from_json(const json& j) {
  try {
    std::vector<Group> gs;
    for (const auto& g : j.at("groups"))
      gs.push_back({g.at("rank").get<int>(), g.at("torsion").get<std::vector<int>>()});
    return make_profile(std::move(gs));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::malformed_text, std::string("profile: ") + e.what());
  }
}

std::string serialize(const json& j) { return j.dump(2) + "\n"; }

}  // namespace csurg::cobordism
