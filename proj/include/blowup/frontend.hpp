#pragma once

// Input documents, command dispatch and run reports shared by the C API and the
// command-line tool.
//
// Grammar (UTF-8, '#' starts a comment that runs to the end of the line):
//
//   graph { a-b b-c ... }
//   clutter [minimalize] { {a,b,d} {b,c,e} ... }
//   matrix { 1 0 1 ; 0 1 1 }          rows separated by ';'
//   ideal { a*b^2 c*d ... }           one monomial per whitespace-separated token
//   a b                               plain edge list, one edge per line
//
// Vertices are numbered by first appearance unless a label table is supplied,
// in which case the table fixes the numbering and every label must occur in it.

#include "blowup/blowup_algebras.hpp"
#include "blowup/combinatorics.hpp"
#include "blowup/errors.hpp"
#include "blowup/limits.hpp"
#include "blowup/report.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace blowup::frontend {

inline constexpr int kSchemaVersion = 1;

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class DocumentKind { Graph, Clutter, Matrix, Ideal };
std::string to_string(DocumentKind k);

struct InputDocument {
  DocumentKind kind = DocumentKind::Graph;
  std::string source;
  std::vector<std::string> labels;  // labels[i] names vertex / variable i + 1
  std::vector<std::pair<int, int>> edges;
  std::vector<comb::VertexSet> clutter_edges;
  bool minimalize = false;
  std::vector<std::vector<int>> matrix_rows;
  std::vector<comb::ExponentVector> monomials;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  comb::Graph graph() const;
  comb::Clutter clutter() const;          // graphs convert to their edge clutter
  comb::IncidenceMatrix matrix() const;   // clutters and graphs convert to incidence matrices
  // Canonical text used for the input digest.
  std::string canonical() const;
};

// Throws ParseError (an InputError) with a 1-based line and column.
InputDocument parse_input(std::istream& in, const std::string& source = "<stdin>",
                          const std::vector<std::string>& label_table = {});
InputDocument parse_text(const std::string& text, const std::string& source = "<string>",
                         const std::vector<std::string>& label_table = {});
// Whitespace-separated labels; duplicates are rejected.
std::vector<std::string> parse_label_table(const std::string& text);

struct RunConfig {
  Limits limits;
  std::string cone = "rees";    // hilbert-basis: rees | simis | generators
  std::string ideal = "cover";  // ideal built from graphs and clutters: cover | edge
  bool assume_perfect = false;

  nlohmann::ordered_json to_json() const;
};

struct RunReport {
  std::string command;
  std::string input_kind;
  std::string input_digest;  // SHA-256 of InputDocument::canonical()
  nlohmann::ordered_json config;
  std::vector<CheckReport> checks;
  nlohmann::ordered_json output = nlohmann::ordered_json::object();
  double elapsed_ms = 0;

  // Verdict of the first check; NotApplicable for commands without checks.
  Verdict verdict() const;
};

const std::vector<std::string>& commands();

// Throws InputError for unknown commands or unsuitable document kinds.
RunReport run(const std::string& command, const InputDocument& doc, const RunConfig& config);

// Timing is the only field that varies between identical runs; leave it out for
// byte-identical output.
nlohmann::ordered_json to_json(const RunReport& r, bool include_timing = true);
RunReport from_json(const nlohmann::ordered_json& j);
std::string render_text(const RunReport& r);

std::string sha256_hex(const std::string& data);

}  // namespace blowup::frontend
