// Command-line front end over the C interface.
//
// Exit codes: 0 completed (whatever the verdict), 1 verdict differs from
// --assert, 2 input or precondition error, 3 cap exceeded, 4 internal error.

#include "blowup/blowup.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

int exit_code(bw_status s) {
  switch (s) {
    case BW_OK: return 0;
    case BW_ERR_CAP: return 3;
    case BW_ERR_INTERNAL: return 4;
    default: return 2;
  }
}

int report_error(bw_status s) {
  std::cerr << "error: " << bw_last_error() << '\n';
  return exit_code(s);
}

std::optional<std::string> slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

struct Freer {
  void operator()(bw_document* d) const { bw_document_free(d); }
  void operator()(bw_config* c) const { bw_config_free(c); }
  void operator()(bw_report* r) const { bw_report_free(r); }
  void operator()(char* s) const { bw_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> command_names;
  for (size_t i = 0; i < bw_command_count(); ++i) command_names.emplace_back(bw_command_name(i));

  CLI::App app{"Rees and Simis cones, Hilbert bases and structure checks for clutters and graphs"};
  std::string command, input = "-", labels_path, assert_value, cone = "rees", ideal = "cover";
  bool json = false, no_timing = false, assume_perfect = false;
  std::optional<int> cap_n, hb_dim_cap, alpha_box, scan_bound;
  std::optional<long long> budget;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(command_names));
  app.add_option("input", input, "Input file, '-' for standard input")->capture_default_str();
  app.add_flag("--json", json, "Emit the machine-readable report");
  app.add_flag("--no-timing", no_timing, "Leave timing out of the JSON report");
  app.add_option("--assert", assert_value, "Exit with status 1 unless the verdict matches")
      ->check(CLI::IsMember({"true", "false"}));
  app.add_option("--cap-n", cap_n, "Vertex cap of the exhaustive perfection oracle");
  app.add_option("--hb-dim-cap", hb_dim_cap, "Largest ambient dimension for Hilbert bases");
  app.add_option("--alpha-box", alpha_box, "Upper end of the TDI oracle objective box");
  app.add_option("--scan-bound", scan_bound, "t-degree bound of the Gorenstein interior scan");
  app.add_option("--budget", budget, "Enumeration budget for lattice points and search nodes");
  app.add_option("--labels", labels_path, "File of whitespace-separated vertex labels");
  app.add_option("--cone", cone, "Cone for hilbert-basis")
      ->check(CLI::IsMember({"rees", "simis", "generators"}))
      ->capture_default_str();
  app.add_option("--ideal", ideal, "Ideal built from graphs and clutters")
      ->check(CLI::IsMember({"cover", "edge"}))
      ->capture_default_str();
  app.add_flag("--assume-perfect", assume_perfect,
               "Accept perfection without the oracle for graphs above the cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::optional<std::string> labels;
  if (!labels_path.empty()) {
    std::ifstream lf(labels_path);
    if (!lf) {
      std::cerr << "error: cannot open label file '" << labels_path << "'\n";
      return 2;
    }
    labels = slurp(lf);
  }

  bw_document* raw_doc = nullptr;
  bw_status s;
  if (input == "-") {
    const auto text = slurp(std::cin);
    if (!text) {
      std::cerr << "error: cannot read standard input\n";
      return 2;
    }
    s = bw_document_parse(text->data(), text->size(), labels ? labels->c_str() : nullptr, "<stdin>",
                          &raw_doc);
  } else {
    s = bw_document_parse_file(input.c_str(), labels ? labels->c_str() : nullptr, &raw_doc);
  }
  if (s != BW_OK) return report_error(s);
  std::unique_ptr<bw_document, Freer> doc(raw_doc);

  bw_config* raw_cfg = nullptr;
  bw_config_new(&raw_cfg);
  std::unique_ptr<bw_config, Freer> cfg(raw_cfg);
  auto set = [&](const char* key, long long v) {
    const bw_status st = bw_config_set_int(cfg.get(), key, v);
    if (st != BW_OK) throw std::invalid_argument(bw_last_error());
  };
  try {
    if (cap_n) set("chromatic_cap_n", *cap_n);
    if (hb_dim_cap) set("hb_dim_cap", *hb_dim_cap);
    if (alpha_box) set("alpha_box_high", *alpha_box);
    if (scan_bound) set("scan_bound", *scan_bound);
    if (budget) set("enumeration_budget", *budget);
    set("assume_perfect", assume_perfect ? 1 : 0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  bw_config_set_string(cfg.get(), "cone", cone.c_str());
  bw_config_set_string(cfg.get(), "ideal", ideal.c_str());

  bw_report* raw_report = nullptr;
  s = bw_run(command.c_str(), doc.get(), cfg.get(), &raw_report);
  if (s != BW_OK) return report_error(s);
  std::unique_ptr<bw_report, Freer> report(raw_report);

  char* raw_text = nullptr;
  s = json ? bw_report_to_json(report.get(), no_timing ? 0 : 1, &raw_text) : bw_report_to_text(report.get(), &raw_text);
  if (s != BW_OK) return report_error(s);
  std::unique_ptr<char, Freer> text(raw_text);
  std::fputs(text.get(), stdout);

  if (!assert_value.empty()) {
    const bw_verdict want = assert_value == "true" ? BW_VERDICT_TRUE : BW_VERDICT_FALSE;
    if (bw_report_verdict(report.get()) != want) {
      std::cerr << "assertion failed: verdict is not " << assert_value << '\n';
      return 1;
    }
  }
  return 0;
}
