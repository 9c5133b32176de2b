#include "blowup/frontend.hpp"

#include "blowup/polyhedra.hpp"
#include "blowup/structure_checks.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace blowup::frontend {

using nlohmann::ordered_json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["chromatic_cap_n"] = limits.chromatic_cap_n;
  j["clutter_cap_n"] = limits.clutter_cap_n;
  j["hb_dim_cap"] = limits.hb_dim_cap;
  j["scan_bound"] = limits.scan_bound;
  j["alpha_box_low"] = limits.alpha_box_low;
  j["alpha_box_high"] = limits.alpha_box_high;
  j["enumeration_budget"] = limits.enumeration_budget;
  j["cone"] = cone;
  j["ideal"] = ideal;
  j["assume_perfect"] = assume_perfect;
  return j;
}

Verdict RunReport::verdict() const {
  return checks.empty() ? Verdict::NotApplicable : checks.front().verdict;
}

namespace {

// Presentation helpers that know the document's labels.
class Names {
 public:
  explicit Names(const InputDocument& doc) : labels_(doc.labels) {
    bool default_names = true;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      default_names &= labels_[i] == std::to_string(i + 1);
    }
    if (!default_names) {
      for (const auto& l : labels_) {
        const bool numeric = !l.empty() && std::all_of(l.begin(), l.end(), ::isdigit);
        variables_.push_back(numeric ? "x" + l : l);
      }
    }
  }

  std::string label(int v) const {
    return v >= 1 && v <= static_cast<int>(labels_.size()) ? labels_[static_cast<std::size_t>(v) - 1]
                                                           : "z" + std::to_string(v);
  }

  std::string set(const comb::VertexSet& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + label(s[i]);
    return out + "}";
  }

  std::string monomial(const comb::ExponentVector& a, int b = 0) const {
    return alg::render(alg::MonomialGenerator{a, b}, variables_);
  }

  std::string monomial(const IntVector& v) const {
    if (!is_nonnegative(v)) return blowup::to_string(v);
    return alg::render(alg::MonomialGenerator::from_vector(v), variables_);
  }

  ordered_json variables(std::size_t dim) const {
    auto j = ordered_json::array();
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string name = i < labels_.size() ? label(static_cast<int>(i) + 1) : "t";
      j.push_back("a" + std::to_string(i + 1) + " = " + name);
    }
    return j;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> variables_;
};

ordered_json json_vector(const IntVector& v) {
  auto j = ordered_json::array();
  for (const auto& x : v) j.push_back(x.convert_to<long long>());
  return j;
}

ordered_json json_vectors(const std::vector<IntVector>& vs) {
  auto j = ordered_json::array();
  for (const auto& v : vs) j.push_back(json_vector(v));
  return j;
}

ordered_json rendered_facets(const std::vector<IntVector>& facets) {
  auto j = ordered_json::array();
  for (const auto& f : facets) j.push_back(poly::render_inequality(f));
  return j;
}

void require_kind(const InputDocument& doc, std::initializer_list<DocumentKind> kinds,
                  const std::string& command) {
  for (auto k : kinds) {
    if (doc.kind == k) return;
  }
  std::string allowed;
  for (auto k : kinds) allowed += (allowed.empty() ? "" : ", ") + to_string(k);
  throw InputError(command + " needs a " + allowed + " document, got " + to_string(doc.kind));
}

std::vector<comb::ExponentVector> ideal_of(const InputDocument& doc, const RunConfig& cfg) {
  if (doc.kind == DocumentKind::Ideal) return doc.monomials;
  if (doc.kind == DocumentKind::Matrix) {
    std::vector<comb::ExponentVector> out;
    const auto m = doc.matrix();
    for (const auto& c : m.columns) {
      for (int x : c) {
        if (x < 0) throw InputError("matrix columns with negative entries are not exponent vectors");
      }
      out.push_back(comb::ExponentVector{c});
    }
    return out;
  }
  const auto c = doc.clutter();
  if (cfg.ideal == "cover") return comb::cover_ideal(c);
  if (cfg.ideal == "edge") {
    std::vector<comb::ExponentVector> out;
    for (const auto& e : c.edges()) out.push_back(comb::indicator(c.vertex_count(), e));
    return out;
  }
  throw InputError("unknown ideal '" + cfg.ideal + "' (expected cover or edge)");
}

ordered_json monomial_list(const Names& names, const std::vector<comb::ExponentVector>& ms) {
  auto j = ordered_json::array();
  for (const auto& m : ms) j.push_back(names.monomial(m));
  return j;
}

// Matrix used by the TDI commands: graphs contribute their vertex-clique matrix.
comb::IncidenceMatrix tdi_matrix(const InputDocument& doc) {
  if (doc.kind == DocumentKind::Graph) return comb::vertex_clique_matrix(doc.graph());
  return doc.matrix();
}

using Handler = std::function<void(const InputDocument&, const RunConfig&, RunReport&)>;

void cmd_check_perfect(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  const auto g = doc.graph();
  r.checks.push_back(checks::perfect_via_rees_cone(g, cfg.limits));
  if (g.vertex_count() <= cfg.limits.chromatic_cap_n) {
    r.checks.push_back(comb::is_perfect_definitional(g, cfg.limits));
    if (r.checks[0].verdict != r.checks[1].verdict) {
      throw std::logic_error("cone criterion and definitional oracle disagree on perfection");
    }
  } else {
    r.checks[0].notes.push_back("definitional oracle skipped: n exceeds chromatic_cap_n");
  }
}

void cmd_rees_cone(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  const Names names(doc);
  const auto ideal = ideal_of(doc, cfg);
  const auto model = alg::rees_cone(ideal);
  r.output["ideal"] = monomial_list(names, ideal);
  r.output["variables"] = names.variables(static_cast<std::size_t>(model.n) + 1);
  r.output["generators"] = json_vectors(model.a_prime);
  r.output["facets"] = rendered_facets(model.facets());
  r.output["facet_normals"] = json_vectors(model.facets());
}

void cmd_simis_cone(const InputDocument& doc, const RunConfig&, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  const Names names(doc);
  const auto model = alg::simis_cone(doc.clutter());
  auto covers = ordered_json::array();
  for (const auto& u : model.covers) covers.push_back(names.set(u));
  auto def = ordered_json::array();
  for (std::size_t i = 0; i < model.definition.size(); ++i) {
    ordered_json h;
    h["inequality"] = poly::render_inequality(model.definition[i]);
    h["redundant"] = static_cast<bool>(model.redundant[i]);
    def.push_back(h);
  }
  r.output["covers"] = covers;
  r.output["variables"] = names.variables(static_cast<std::size_t>(model.n) + 1);
  r.output["definition"] = def;
  r.output["facets"] = rendered_facets(model.irredundant());
}

void cmd_hilbert_basis(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  const Names names(doc);
  poly::HilbertBasis hb;
  bool monomials = true;
  if (cfg.cone == "rees") {
    hb = poly::hilbert_basis(alg::rees_cone(ideal_of(doc, cfg)).cone, cfg.limits);
  } else if (cfg.cone == "simis") {
    require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command + " --cone simis");
    hb = alg::simis_hilbert_basis(doc.clutter(), cfg.limits);
  } else if (cfg.cone == "generators") {
    const auto m = doc.matrix();
    std::vector<IntVector> gens;
    for (int c = 0; c < m.cols(); ++c) {
      IntVector v;
      for (int i = 0; i < m.rows; ++i) v.push_back(m.at(i, c));
      gens.push_back(std::move(v));
    }
    hb = poly::hilbert_basis(poly::IntegerCone::from_generators(static_cast<std::size_t>(m.rows), gens),
                             cfg.limits);
    monomials = false;
  } else {
    throw InputError("unknown cone '" + cfg.cone + "' (expected rees, simis or generators)");
  }
  r.output["cone"] = cfg.cone;
  r.output["elements"] = json_vectors(hb.elements);
  if (monomials) {
    auto ms = ordered_json::array();
    for (const auto& h : hb.elements) ms.push_back(names.monomial(h));
    r.output["monomials"] = ms;
  }
  r.output["size"] = hb.elements.size();
  r.output["triangulation_simplices"] = hb.simplices;
  r.output["candidates"] = hb.candidates;
}

void cmd_check_normal(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  const Names names(doc);
  const auto ideal = ideal_of(doc, cfg);
  auto res = alg::rees_normality(ideal, cfg.limits);
  r.output["ideal"] = monomial_list(names, ideal);
  auto ms = ordered_json::array();
  for (const auto& h : res.basis.elements) ms.push_back(names.monomial(h));
  r.output["hilbert_basis"] = ms;
  r.checks.push_back(std::move(res.report));
}

void cmd_check_gorenstein(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  r.checks.push_back(alg::gorenstein_check(doc.graph(), cfg.limits));
}

void cmd_symbolic_gens(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  const Names names(doc);
  const auto g = doc.graph();
  auto res = alg::symbolic_generators_perfect(g, cfg.limits, cfg.assume_perfect);
  auto ms = ordered_json::array();
  std::vector<IntVector> vecs;
  for (const auto& m : res.generators) {
    ms.push_back(names.monomial(m.exponents, m.t_degree));
    vecs.push_back(m.to_vector());
  }
  r.output["generators"] = ms;
  r.output["count"] = res.generators.size();
  if (g.vertex_count() + 1 <= cfg.limits.hb_dim_cap) {
    auto hb = alg::simis_hilbert_basis(comb::edge_clutter(g), cfg.limits).elements;
    sort_unique(vecs);
    if (hb != vecs) throw std::logic_error("clique generators differ from the Simis Hilbert basis");
    r.output["matches_simis_hilbert_basis"] = true;
  }
  r.checks.push_back(std::move(res.perfection));
}

void cmd_check_tdi(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  r.checks.push_back(checks::tdi_check(tdi_matrix(doc), cfg.limits));
}

void cmd_tdi_oracle(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  r.checks.push_back(checks::tdi_oracle(tdi_matrix(doc), cfg.limits));
}

void cmd_check_balanced(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  const auto m = doc.matrix();
  r.checks.push_back(checks::balanced_check(m, cfg.limits));
  if (m.cols() <= cfg.limits.clutter_cap_n) r.checks.push_back(checks::balanced_oracle(m, cfg.limits));
}

void cmd_check_mfmc(const InputDocument& doc, const RunConfig&, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  r.checks.push_back(checks::mfmc_check(doc.clutter()));
}

void cmd_blocker(const InputDocument& doc, const RunConfig&, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  const Names names(doc);
  auto edges = ordered_json::array();
  const comb::Clutter b = comb::blocker(doc.clutter());
  for (const auto& e : b.edges()) edges.push_back(names.set(e));
  r.output["edges"] = edges;
}

void cmd_covers(const InputDocument& doc, const RunConfig&, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  const Names names(doc);
  const auto c = doc.clutter();
  auto covers = ordered_json::array();
  for (const auto& u : comb::minimal_vertex_covers(c)) covers.push_back(names.set(u));
  r.output["covers"] = covers;
  r.output["cover_ideal"] = monomial_list(names, comb::cover_ideal(c));
  r.output["unmixed"] = comb::is_unmixed(c);
}

void cmd_cliques(const InputDocument& doc, const RunConfig&, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  const Names names(doc);
  const auto g = doc.graph();
  auto cl = ordered_json::array();
  for (const auto& k : comb::maximal_cliques(g)) cl.push_back(names.set(k));
  r.output["maximal_cliques"] = cl;
  r.output["clique_number"] = comb::clique_number(g);
  r.output["cliques"] = comb::all_cliques(g).size();
}

void cmd_dual_ideal(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  const Names names(doc);
  const auto ideal = ideal_of(doc, cfg);
  r.output["ideal"] = monomial_list(names, ideal);
  r.output["dual"] = monomial_list(names, comb::dual_ideal(ideal));
}

void cmd_clique_equalize(const InputDocument& doc, const RunConfig&, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  const Names names(doc);
  const auto eq = comb::clique_equalization(doc.graph());
  auto added = ordered_json::array();
  for (int z : eq.added_vertices) added.push_back(names.label(z));
  auto edges = ordered_json::array();
  for (const auto& [u, v] : eq.graph.edges()) edges.push_back(names.label(u) + "-" + names.label(v));
  auto cl = ordered_json::array();
  for (const auto& k : comb::maximal_cliques(eq.graph)) cl.push_back(names.set(k));
  r.output["added_vertices"] = added;
  r.output["edges"] = edges;
  r.output["maximal_cliques"] = cl;
}

void cmd_check_cm2_normal(const InputDocument& doc, const RunConfig& cfg, RunReport& r) {
  require_kind(doc, {DocumentKind::Graph, DocumentKind::Clutter}, r.command);
  const auto g = doc.graph();
  r.checks.push_back(checks::cm_height_two_normal(g.vertex_count(), g.edges(), cfg.limits));
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"check-perfect", cmd_check_perfect},   {"rees-cone", cmd_rees_cone},
      {"simis-cone", cmd_simis_cone},         {"hilbert-basis", cmd_hilbert_basis},
      {"check-normal", cmd_check_normal},     {"check-gorenstein", cmd_check_gorenstein},
      {"symbolic-gens", cmd_symbolic_gens},   {"check-tdi", cmd_check_tdi},
      {"tdi-oracle", cmd_tdi_oracle},         {"check-balanced", cmd_check_balanced},
      {"check-mfmc", cmd_check_mfmc},         {"blocker", cmd_blocker},
      {"covers", cmd_covers},                 {"cliques", cmd_cliques},
      {"dual-ideal", cmd_dual_ideal},         {"clique-equalize", cmd_clique_equalize},
      {"check-cm2-normal", cmd_check_cm2_normal},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers()) out.push_back(k);
    return out;
  }();
  return names;
}

RunReport run(const std::string& command, const InputDocument& doc, const RunConfig& config) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw InputError("unknown command '" + command + "'");
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.command = command;
  r.input_kind = to_string(doc.kind);
  r.input_digest = sha256_hex(doc.canonical());
  r.config = config.to_json();
  it->second(doc, config, r);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ordered_json to_json(const RunReport& r, bool include_timing) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["input"] = {{"kind", r.input_kind}, {"digest", "sha256:" + r.input_digest}};
  j["config"] = r.config;
  j["verdict"] = to_string(r.verdict());
  auto cs = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    to_json(cj, c);
    cs.push_back(std::move(cj));
  }
  j["checks"] = cs;
  j["output"] = r.output;
  j["report_digest"] = "sha256:" + sha256_hex(j.dump());
  if (include_timing) j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  return j;
}

RunReport from_json(const ordered_json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw InputError("unsupported report schema version");
  }
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.input_kind = j.at("input").at("kind").get<std::string>();
  std::string digest = j.at("input").at("digest").get<std::string>();
  if (digest.rfind("sha256:", 0) == 0) digest.erase(0, 7);
  r.input_digest = digest;
  r.config = j.at("config");
  for (const auto& c : j.at("checks")) {
    CheckReport cr;
    from_json(c, cr);
    r.checks.push_back(std::move(cr));
  }
  r.output = j.at("output");
  if (j.contains("timing")) r.elapsed_ms = j.at("timing").at("elapsed_ms").get<double>();
  return r;
}

namespace {

void render_value(std::ostringstream& os, const std::string& key, const ordered_json& v) {
  if (v.is_array() && !v.empty() && !v.front().is_array() && !v.front().is_object()) {
    os << "  " << key << ":\n";
    for (const auto& x : v) os << "    " << (x.is_string() ? x.get<std::string>() : x.dump()) << '\n';
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    os << "  " << key << ":\n";
    for (const auto& x : v) {
      std::string line;
      for (const auto& [k, y] : x.items()) {
        line += (line.empty() ? "" : "  ") + (y.is_string() ? y.get<std::string>() : k + "=" + y.dump());
      }
      os << "    " << line << '\n';
    }
  } else if (v.is_array()) {
    os << "  " << key << ":";
    if (v.empty()) os << " (none)";
    os << '\n';
    for (const auto& x : v) os << "    " << x.dump() << '\n';
  } else {
    os << "  " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  os << "input: " << r.input_kind << " sha256:" << r.input_digest.substr(0, 16) << '\n';
  if (!r.checks.empty()) os << "verdict: " << to_string(r.verdict()) << '\n';
  for (const auto& c : r.checks) os << '\n' << blowup::render_text(c);
  if (!r.output.empty()) {
    os << "\noutput:\n";
    for (const auto& [k, v] : r.output.items()) render_value(os, k, v);
  }
  os << "\nconfig:";
  for (const auto& [k, v] : r.config.items()) os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  os << '\n';
  return os.str();
}

}  // namespace blowup::frontend
