#include "segal/io.hpp"

#include <fstream>
#include <sstream>

namespace segal {

json sset_to_json(const SSet& X) {
  json j;
  j["kind"] = X.simplicial() ? "simplicial" : "semi-simplicial";
  j["truncation"] = X.truncation;
  j["levels"] = json::array();
  for (int n = 0; n <= X.truncation; ++n) j["levels"].push_back(X.ids[n]);
  j["faces"] = json::array();
  for (int n = 1; n <= X.truncation; ++n) j["faces"].push_back(X.face[n]);
  if (X.simplicial()) {
    j["degeneracies"] = json::array();
    for (int n = 0; n < X.truncation; ++n) j["degeneracies"].push_back(X.degen[n]);
  }
  return j;
}

SSet sset_from_json(const json& j) {
  SSet X;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "simplicial")
    X.kind = SSet::Kind::simplicial;
  else if (kind == "semi-simplicial")
    X.kind = SSet::Kind::semisimplicial;
  else
    throw SSetError("unknown kind: " + kind);
  X.truncation = j.at("truncation").get<int>();
  if (X.truncation < 0) throw SSetError("negative truncation");
  const auto& levels = j.at("levels");
  if (static_cast<int>(levels.size()) != X.truncation + 1)
    throw SSetError("levels array does not match truncation");
  for (auto& l : levels) X.ids.push_back(l.get<std::vector<std::string>>());
  X.face.resize(X.truncation + 1);
  const auto& faces = j.at("faces");
  if (static_cast<int>(faces.size()) != X.truncation)
    throw SSetError("faces array does not match truncation");
  for (int n = 1; n <= X.truncation; ++n)
    X.face[n] = faces[n - 1].get<std::vector<std::vector<int>>>();
  if (X.simplicial()) {
    X.degen.resize(X.truncation + 1);
    const auto& degs = j.at("degeneracies");
    if (static_cast<int>(degs.size()) != X.truncation)
      throw SSetError("degeneracies array does not match truncation");
    for (int n = 0; n < X.truncation; ++n)
      X.degen[n] = degs[n].get<std::vector<std::vector<int>>>();
  } else if (j.contains("degeneracies")) {
    throw SSetError("semi-simplicial set must not carry degeneracies");
  }
  auto rep = validate(X);
  if (!rep.empty()) throw SSetError("invalid simplicial set: " + rep.front());
  return X;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SSetError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SSetError("cannot write " + path);
  out << data;
}

void write_sset(const std::string& path, const SSet& X) {
  write_file(path, sset_to_json(X).dump(1) + "\n");
}

SSet read_sset(const std::string& path) {
  return sset_from_json(json::parse(read_file(path)));
}

json verdict_to_json(const SegalVerdict& v) {
  json j;
  j["property"] = to_string(v.property);
  j["up_to_level"] = v.up_to_level;
  j["holds"] = v.holds;
  j["witnesses"] = json::array();
  for (auto& w : v.witnesses)
    j["witnesses"].push_back(
        {{"level", w.level}, {"where", w.where}, {"detail", w.detail}});
  return j;
}

json report_to_json(const PathCriterionReport& r) {
  json j;
  j["up_to"] = r.up_to;
  j["two_segal"] = verdict_to_json(r.two_segal);
  j["left_path_1segal"] = verdict_to_json(r.left_1segal);
  j["right_path_1segal"] = verdict_to_json(r.right_1segal);
  j["note"] = "path spaces are truncated one level below the input";
  j["consistent"] = r.consistent;
  return j;
}

}  // namespace segal
