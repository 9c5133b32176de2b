#include "blowup/report.hpp"

#include <stdexcept>

namespace blowup {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "inconclusive";
}

std::string to_string(Method m) {
  return m == Method::TheoremPath ? "theorem-path" : "oracle";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "true") return Verdict::True;
  if (s == "false") return Verdict::False;
  if (s == "inconclusive") return Verdict::Inconclusive;
  if (s == "not-applicable") return Verdict::NotApplicable;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Method method_from_string(const std::string& s) {
  if (s == "theorem-path") return Method::TheoremPath;
  if (s == "oracle") return Method::Oracle;
  throw std::invalid_argument("unknown method '" + s + "'");
}

void to_json(nlohmann::ordered_json& j, const CheckReport& r) {
  j = nlohmann::ordered_json::object();
  j["check"] = r.check;
  j["verdict"] = to_string(r.verdict);
  j["method"] = to_string(r.method);
  j["witness"] = r.witness;
  j["certificate"] = r.certificate;
  auto bounds = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.bounds) bounds[k] = v;
  j["bounds"] = bounds;
  j["notes"] = r.notes;
}

void from_json(const nlohmann::ordered_json& j, CheckReport& r) {
  r.check = j.at("check").get<std::string>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.method = method_from_string(j.at("method").get<std::string>());
  r.witness = j.at("witness").get<std::string>();
  r.certificate = j.at("certificate").get<std::vector<std::string>>();
  r.bounds.clear();
  for (const auto& [k, v] : j.at("bounds").items()) r.bounds.emplace_back(k, v.get<std::string>());
  r.notes = j.at("notes").get<std::vector<std::string>>();
}

std::string render_text(const CheckReport& r) {
  std::string out = r.check + ": " + to_string(r.verdict) + "  [" + to_string(r.method) + "]\n";
  if (!r.witness.empty()) out += "  witness: " + r.witness + "\n";
  for (const auto& [k, v] : r.bounds) out += "  bound " + k + " = " + v + "\n";
  for (const auto& line : r.certificate) out += "  cert: " + line + "\n";
  for (const auto& note : r.notes) out += "  note: " + note + "\n";
  return out;
}

}  // namespace blowup
