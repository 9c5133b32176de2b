#pragma once

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blowup {

enum class Verdict { True, False, Inconclusive, NotApplicable };
enum class Method { TheoremPath, Oracle };

std::string to_string(Verdict v);
std::string to_string(Method m);
Verdict verdict_from_string(const std::string& s);
Method method_from_string(const std::string& s);

inline Verdict verdict_of(bool b) { return b ? Verdict::True : Verdict::False; }

/// Outcome of one decision procedure.
///
/// A `False` verdict always carries a witness; `bounds` lists every search radius
/// or cap the procedure actually used so the verdict can be reproduced.
struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::Inconclusive;
  Method method = Method::TheoremPath;
  std::string witness;
  std::vector<std::string> certificate;
  std::vector<std::pair<std::string, std::string>> bounds;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::True; }
  void add_bound(std::string key, std::string value) {
    bounds.emplace_back(std::move(key), std::move(value));
  }
};

void to_json(nlohmann::ordered_json& j, const CheckReport& r);
void from_json(const nlohmann::ordered_json& j, CheckReport& r);

std::string render_text(const CheckReport& r);

}  // namespace blowup
