#include "cnp/json_io.hpp"

#include <fstream>

namespace cnp {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::BadInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::BadInput, "bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), ErrorKind::BadInput, "cannot write " + path);
  out << j.dump(2) << "\n";
}

EndSpace space_from_json(const json& j) {
  try {
    Genus g;
    std::string gs = j.at("genus").get<std::string>();
    if (gs == "infinite") {
      g = Genus::inf();
    } else if (gs.rfind("finite:", 0) == 0) {
      g = Genus::finite(std::stoi(gs.substr(7)));
      require(g.value >= 0, ErrorKind::BadInput, "negative genus");
    } else {
      fail(ErrorKind::BadInput, "genus must be 'finite:n' or 'infinite'");
    }
    std::vector<OrbitSpec> orbits;
    for (const auto& jo : j.at("orbits")) {
      OrbitSpec o;
      o.id = jo.at("id").get<std::string>();
      std::string m = jo.at("maximal").get<std::string>();
      if (m == "isolated")
        o.maximal_kind = MaximalKind::IsolatedMaximal;
      else if (m == "cantor")
        o.maximal_kind = MaximalKind::CantorMaximal;
      else if (m == "none")
        o.maximal_kind = MaximalKind::NotMaximal;
      else
        fail(ErrorKind::BadInput, "maximal must be isolated|cantor|none");
      o.planar = jo.at("planar").get<bool>();
      for (const auto& t : jo.at("accumulates_to"))
        o.accumulates_to.insert(t.get<std::string>());
      if (jo.contains("unique_max_acc") && !jo["unique_max_acc"].is_null())
        o.unique_max_accumulation = jo["unique_max_acc"].get<std::string>();
      orbits.push_back(std::move(o));
    }
    return EndSpace(std::move(orbits), g);
  } catch (const json::exception& e) {
    fail(ErrorKind::BadInput, std::string("malformed end-space JSON: ") +
                                  e.what());
  }
}

json space_to_json(const EndSpace& space) {
  json j;
  j["genus"] = space.genus().infinite
                   ? "infinite"
                   : "finite:" + std::to_string(space.genus().value);
  j["orbits"] = json::array();
  for (const auto& o : space.orbits()) {
    json jo;
    jo["id"] = o.id;
    jo["maximal"] = o.maximal_kind == MaximalKind::IsolatedMaximal ? "isolated"
                    : o.maximal_kind == MaximalKind::CantorMaximal ? "cantor"
                                                                   : "none";
    jo["planar"] = o.planar;
    jo["accumulates_to"] = json::array();
    for (const auto& t : o.accumulates_to) jo["accumulates_to"].push_back(t);
    if (o.unique_max_accumulation)
      jo["unique_max_acc"] = *o.unique_max_accumulation;
    else
      jo["unique_max_acc"] = nullptr;
    j["orbits"].push_back(jo);
  }
  return j;
}

EndSpace load_space(const std::string& path) {
  return space_from_json(load_json_file(path));
}

namespace {

Content content_from_string(const std::string& s) {
  if (s == "none") return Content::None;
  if (s == "partial") return Content::Partial;
  if (s == "all") return Content::All;
  fail(ErrorKind::BadInput, "content must be none|partial|all, got " + s);
}

std::string content_to_string(Content c) {
  switch (c) {
    case Content::None:
      return "none";
    case Content::Partial:
      return "partial";
    case Content::All:
      return "all";
  }
  return "none";
}

}  // namespace

ClopenProfile profile_from_json(const json& j, const EndSpace& space) {
  try {
    ClopenProfile p;
    if (j.contains("isolated_max"))
      for (const auto& id : j["isolated_max"])
        p.isolated_max_contained.insert(id.get<std::string>());
    if (j.contains("cantor"))
      for (auto it = j["cantor"].begin(); it != j["cantor"].end(); ++it)
        p.cantor_content[it.key()] =
            content_from_string(it.value().get<std::string>());
    if (j.contains("nonmax"))
      for (auto it = j["nonmax"].begin(); it != j["nonmax"].end(); ++it)
        p.nonmax_content[it.key()] =
            content_from_string(it.value().get<std::string>());
    return normalize_profile(space, p);
  } catch (const json::exception& e) {
    fail(ErrorKind::BadInput,
         std::string("malformed profile JSON: ") + e.what());
  }
}

json profile_to_json(const ClopenProfile& p) {
  json j;
  j["isolated_max"] = json::array();
  for (const auto& id : p.isolated_max_contained) j["isolated_max"].push_back(id);
  j["cantor"] = json::object();
  for (const auto& [id, c] : p.cantor_content)
    j["cantor"][id] = content_to_string(c);
  j["nonmax"] = json::object();
  for (const auto& [id, c] : p.nonmax_content)
    j["nonmax"][id] = content_to_string(c);
  j["unique_acc_touched"] = json::array();
  for (const auto& id : p.unique_acc_touched)
    j["unique_acc_touched"].push_back(id);
  return j;
}

ClopenProfile load_profile(const std::string& path, const EndSpace& space) {
  return profile_from_json(load_json_file(path), space);
}

}  // namespace cnp
