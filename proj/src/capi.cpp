#include "blowup/blowup.h"

#include "blowup/frontend.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

struct bw_document {
  blowup::frontend::InputDocument doc;
};

struct bw_config {
  blowup::frontend::RunConfig cfg;
};

struct bw_report {
  blowup::frontend::RunReport report;
};

namespace {

thread_local std::string last_error;

bw_status fail(bw_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
bw_status guarded(F&& f) {
  try {
    f();
    return BW_OK;
  } catch (const blowup::CapExceeded& e) {
    return fail(BW_ERR_CAP, e.what());
  } catch (const blowup::PreconditionError& e) {
    return fail(BW_ERR_PRECONDITION, e.what());
  } catch (const blowup::InputError& e) {
    return fail(BW_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(BW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BW_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> label_table(const char* labels) {
  return labels == nullptr ? std::vector<std::string>{} : blowup::frontend::parse_label_table(labels);
}

}  // namespace

extern "C" {

const char* bw_version(void) { return "1.0.0"; }

int bw_schema_version(void) { return blowup::frontend::kSchemaVersion; }

const char* bw_last_error(void) { return last_error.c_str(); }

void bw_string_free(char* s) { std::free(s); }

size_t bw_command_count(void) { return blowup::frontend::commands().size(); }

const char* bw_command_name(size_t i) {
  const auto& cs = blowup::frontend::commands();
  return i < cs.size() ? cs[i].c_str() : nullptr;
}

bw_status bw_document_parse(const char* text, size_t length, const char* labels, const char* source,
                            bw_document** out) {
  if (text == nullptr || out == nullptr) return fail(BW_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto d = std::make_unique<bw_document>();
    d->doc = blowup::frontend::parse_text(std::string(text, length), source ? source : "<string>",
                                          label_table(labels));
    *out = d.release();
  });
}

bw_status bw_document_parse_file(const char* path, const char* labels, bw_document** out) {
  if (path == nullptr || out == nullptr) return fail(BW_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw blowup::InputError(std::string("cannot open '") + path + "'");
    auto d = std::make_unique<bw_document>();
    d->doc = blowup::frontend::parse_input(in, path, label_table(labels));
    *out = d.release();
  });
}

bw_status bw_document_from_edges(int n, const int* pairs, size_t count, bw_document** out) {
  if (out == nullptr || (pairs == nullptr && count > 0)) return fail(BW_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto d = std::make_unique<bw_document>();
    d->doc.kind = blowup::frontend::DocumentKind::Graph;
    d->doc.source = "<edges>";
    if (n < 0 || n > blowup::comb::kMaxVertices) throw blowup::InputError("vertex count out of range");
    for (int i = 1; i <= n; ++i) d->doc.labels.push_back(std::to_string(i));
    for (size_t i = 0; i < count; ++i) d->doc.edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    (void)d->doc.graph();
    *out = d.release();
  });
}

int bw_document_vertex_count(const bw_document* doc) { return doc ? doc->doc.vertex_count() : -1; }

void bw_document_free(bw_document* doc) { delete doc; }

bw_status bw_config_new(bw_config** out) {
  if (out == nullptr) return fail(BW_ERR_ARGUMENT, "null argument");
  *out = new bw_config{};
  return BW_OK;
}

void bw_config_free(bw_config* cfg) { delete cfg; }

bw_status bw_config_set_int(bw_config* cfg, const char* key, long long value) {
  if (cfg == nullptr || key == nullptr) return fail(BW_ERR_ARGUMENT, "null argument");
  auto& l = cfg->cfg.limits;
  const std::string k = key;
  const bool fits = value >= 0 && value <= 1'000'000;
  if (k == "alpha_box_low" || k == "alpha_box_high") {
    if (value < -1000 || value > 1000) return fail(BW_ERR_ARGUMENT, k + " out of range");
    (k == "alpha_box_low" ? l.alpha_box_low : l.alpha_box_high) = static_cast<int>(value);
    return BW_OK;
  }
  if (k == "enumeration_budget") {
    if (value <= 0) return fail(BW_ERR_ARGUMENT, k + " must be positive");
    l.enumeration_budget = static_cast<std::size_t>(value);
    return BW_OK;
  }
  if (k == "assume_perfect") {
    cfg->cfg.assume_perfect = value != 0;
    return BW_OK;
  }
  int* target = k == "chromatic_cap_n" ? &l.chromatic_cap_n
                : k == "clutter_cap_n" ? &l.clutter_cap_n
                : k == "hb_dim_cap"    ? &l.hb_dim_cap
                : k == "scan_bound"    ? &l.scan_bound
                                       : nullptr;
  if (target == nullptr) return fail(BW_ERR_ARGUMENT, "unknown option '" + k + "'");
  if (!fits) return fail(BW_ERR_ARGUMENT, k + " out of range");
  *target = static_cast<int>(value);
  return BW_OK;
}

bw_status bw_config_set_string(bw_config* cfg, const char* key, const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) return fail(BW_ERR_ARGUMENT, "null argument");
  const std::string k = key, v = value;
  if (k == "cone") {
    if (v != "rees" && v != "simis" && v != "generators") {
      return fail(BW_ERR_ARGUMENT, "cone must be rees, simis or generators");
    }
    cfg->cfg.cone = v;
    return BW_OK;
  }
  if (k == "ideal") {
    if (v != "cover" && v != "edge") return fail(BW_ERR_ARGUMENT, "ideal must be cover or edge");
    cfg->cfg.ideal = v;
    return BW_OK;
  }
  return fail(BW_ERR_ARGUMENT, "unknown option '" + k + "'");
}

bw_status bw_run(const char* command, const bw_document* doc, const bw_config* cfg, bw_report** out) {
  if (command == nullptr || doc == nullptr || out == nullptr) return fail(BW_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<bw_report>();
    r->report = blowup::frontend::run(command, doc->doc, cfg ? cfg->cfg : blowup::frontend::RunConfig{});
    *out = r.release();
  });
}

bw_verdict bw_report_verdict(const bw_report* report) {
  if (report == nullptr) return BW_VERDICT_INCONCLUSIVE;
  switch (report->report.verdict()) {
    case blowup::Verdict::True: return BW_VERDICT_TRUE;
    case blowup::Verdict::False: return BW_VERDICT_FALSE;
    case blowup::Verdict::Inconclusive: return BW_VERDICT_INCONCLUSIVE;
    case blowup::Verdict::NotApplicable: return BW_VERDICT_NOT_APPLICABLE;
  }
  return BW_VERDICT_INCONCLUSIVE;
}

size_t bw_report_check_count(const bw_report* report) {
  return report ? report->report.checks.size() : 0;
}

bw_status bw_report_to_json(const bw_report* report, int include_timing, char** out) {
  if (report == nullptr || out == nullptr) return fail(BW_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(blowup::frontend::to_json(report->report, include_timing != 0).dump(2) + "\n");
  });
}

bw_status bw_report_to_text(const bw_report* report, char** out) {
  if (report == nullptr || out == nullptr) return fail(BW_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = copy_string(blowup::frontend::render_text(report->report)); });
}

void bw_report_free(bw_report* report) { delete report; }

}  // extern "C"
