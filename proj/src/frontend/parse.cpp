#include "blowup/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

namespace blowup::frontend {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Graph: return "graph";
    case DocumentKind::Clutter: return "clutter";
    case DocumentKind::Matrix: return "matrix";
    case DocumentKind::Ideal: return "ideal";
  }
  return "graph";
}

namespace {

struct Token {
  enum class Kind { Word, Symbol, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool word_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '.' || c == '\'' || c >= 0x80;
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size();) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(c)) {
      ++i;
      ++col;
    } else if (word_char(c)) {
      const std::size_t start = i, start_col = col;
      while (i < text.size() && word_char(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++col;
      }
      out.push_back({Token::Kind::Word, text.substr(start, i - start), line, start_col});
    } else if (std::string_view("{}-,;*^").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), line, col});
      ++i;
      ++col;
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

bool is_positive_decimal(const std::string& s) {
  return !s.empty() && s.size() < 10 && s[0] != '0' &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct Ref {
  std::string label;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& table)
      : tokens_(std::move(tokens)), table_(table) {}

  InputDocument parse() {
    InputDocument doc;
    const Token& first = peek();
    const Token& second = tokens_.size() > 1 ? tokens_[1] : first;
    const bool block = first.kind == Token::Kind::Word &&
                       (second.text == "{" || (first.text == "clutter" && second.text == "minimalize"));
    if (block && first.text == "graph") {
      next();
      parse_graph(doc);
    } else if (block && first.text == "clutter") {
      next();
      parse_clutter(doc);
    } else if (block && first.text == "matrix") {
      next();
      parse_matrix(doc);
    } else if (block && first.text == "ideal") {
      next();
      parse_ideal(doc);
    } else if (first.kind == Token::Kind::End) {
      throw ParseError(first.line, first.column, "empty input");
    } else if (block) {
      throw ParseError(first.line, first.column, "unknown document kind '" + first.text + "'");
    } else {
      parse_edge_list(doc);
    }
    if (peek().kind != Token::Kind::End) {
      throw ParseError(peek().line, peek().column, "unexpected '" + peek().text + "' after document");
    }
    return doc;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }

  const Token& expect_symbol(const char* s) {
    const Token& t = next();
    if (t.kind != Token::Kind::Symbol || t.text != s) {
      fail(t, std::string("expected '") + s + "', found " +
                  (t.kind == Token::Kind::End ? std::string("end of input") : "'" + t.text + "'"));
    }
    return t;
  }

  Ref expect_label() {
    const Token& t = next();
    if (t.kind != Token::Kind::Word) {
      fail(t, "expected a vertex label, found " +
                  (t.kind == Token::Kind::End ? std::string("end of input") : "'" + t.text + "'"));
    }
    return Ref{t.text, t.line, t.column};
  }

  bool at_symbol(const char* s) const {
    return peek().kind == Token::Kind::Symbol && peek().text == s;
  }

  // Assigns vertex numbers to every label reference collected while parsing.
  std::vector<int> resolve(InputDocument& doc) {
    std::map<std::string, int> index;
    if (!table_.empty()) {
      for (std::size_t i = 0; i < table_.size(); ++i) index[table_[i]] = static_cast<int>(i) + 1;
      doc.labels = table_;
      std::vector<int> out;
      for (const auto& r : refs_) {
        const auto it = index.find(r.label);
        if (it == index.end()) {
          throw ParseError(r.line, r.column, "label '" + r.label + "' is not in the label table");
        }
        out.push_back(it->second);
      }
      return out;
    }
    const bool numeric = std::all_of(refs_.begin(), refs_.end(),
                                     [](const Ref& r) { return is_positive_decimal(r.label); });
    std::vector<int> out;
    if (numeric) {
      int n = 0;
      for (const auto& r : refs_) {
        out.push_back(std::stoi(r.label));
        n = std::max(n, out.back());
      }
      if (n > comb::kMaxVertices) {
        throw ParseError(refs_.front().line, refs_.front().column,
                         "vertex count exceeds " + std::to_string(comb::kMaxVertices));
      }
      for (int i = 1; i <= n; ++i) doc.labels.push_back(std::to_string(i));
      return out;
    }
    for (const auto& r : refs_) {
      auto [it, fresh] = index.emplace(r.label, static_cast<int>(doc.labels.size()) + 1);
      if (fresh) {
        if (doc.labels.size() == static_cast<std::size_t>(comb::kMaxVertices)) {
          throw ParseError(r.line, r.column,
                           "more than " + std::to_string(comb::kMaxVertices) + " distinct labels");
        }
        doc.labels.push_back(r.label);
      }
      out.push_back(it->second);
    }
    return out;
  }

  void parse_graph(InputDocument& doc) {
    doc.kind = DocumentKind::Graph;
    expect_symbol("{");
    std::vector<std::pair<std::size_t, std::size_t>> where;
    while (!at_symbol("}")) {
      Ref u = expect_label();
      expect_symbol("-");
      Ref v = expect_label();
      if (u.label == v.label) throw ParseError(u.line, u.column, "loop at vertex '" + u.label + "'");
      where.emplace_back(u.line, u.column);
      refs_.push_back(std::move(u));
      refs_.push_back(std::move(v));
    }
    const Token& close = expect_symbol("}");
    if (refs_.empty()) fail(close, "graph has no edges");
    const auto ids = resolve(doc);
    for (std::size_t i = 0; i < ids.size(); i += 2) doc.edges.emplace_back(ids[i], ids[i + 1]);
  }

  void parse_edge_list(InputDocument& doc) {
    doc.kind = DocumentKind::Graph;
    while (peek().kind != Token::Kind::End) {
      const Token& a = next();
      if (a.kind != Token::Kind::Word) fail(a, "expected a vertex label, found '" + a.text + "'");
      const Token& b = next();
      if (b.kind != Token::Kind::Word || b.line != a.line) {
        fail(a, "edge list lines need exactly two vertex labels");
      }
      if (peek().kind != Token::Kind::End && peek().line == a.line) {
        fail(peek(), "edge list lines need exactly two vertex labels");
      }
      if (a.text == b.text) fail(a, "loop at vertex '" + a.text + "'");
      refs_.push_back({a.text, a.line, a.column});
      refs_.push_back({b.text, b.line, b.column});
    }
    const auto ids = resolve(doc);
    for (std::size_t i = 0; i < ids.size(); i += 2) doc.edges.emplace_back(ids[i], ids[i + 1]);
  }

  void parse_clutter(InputDocument& doc) {
    doc.kind = DocumentKind::Clutter;
    if (peek().kind == Token::Kind::Word && peek().text == "minimalize") {
      next();
      doc.minimalize = true;
    }
    expect_symbol("{");
    std::vector<std::size_t> sizes;
    std::vector<Token> starts;
    while (!at_symbol("}")) {
      starts.push_back(expect_symbol("{"));
      std::size_t k = 0;
      if (at_symbol("}")) fail(peek(), "empty edge");
      while (true) {
        refs_.push_back(expect_label());
        ++k;
        if (at_symbol(",")) {
          next();
          continue;
        }
        expect_symbol("}");
        break;
      }
      sizes.push_back(k);
    }
    const Token& close = expect_symbol("}");
    if (sizes.empty()) fail(close, "clutter has no edges");
    const auto ids = resolve(doc);
    std::size_t at = 0;
    std::vector<comb::VertexSet> edges;
    for (std::size_t e = 0; e < sizes.size(); ++e) {
      comb::VertexSet s(ids.begin() + static_cast<std::ptrdiff_t>(at),
                        ids.begin() + static_cast<std::ptrdiff_t>(at + sizes[e]));
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        fail(starts[e], "edge repeats a vertex");
      }
      if (!doc.minimalize) {
        for (std::size_t f = 0; f < edges.size(); ++f) {
          const auto& t = edges[f];
          const bool sub = std::includes(s.begin(), s.end(), t.begin(), t.end());
          const bool sup = std::includes(t.begin(), t.end(), s.begin(), s.end());
          if (sub || sup) {
            fail(starts[e], std::string("edge ") + (sub && sup ? "repeats" : "is comparable with") +
                                " edge " + std::to_string(f + 1) +
                                " (use 'clutter minimalize' to drop supersets)");
          }
        }
      }
      edges.push_back(std::move(s));
      at += sizes[e];
    }
    doc.clutter_edges = std::move(edges);
  }

  int expect_integer() {
    bool negative = false;
    const Token* t = &next();
    if (t->kind == Token::Kind::Symbol && t->text == "-") {
      negative = true;
      t = &next();
    }
    if (t->kind != Token::Kind::Word ||
        !std::all_of(t->text.begin(), t->text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        t->text.size() > 9) {
      fail(*t, "expected an integer entry, found '" + t->text + "'");
    }
    const int v = std::stoi(t->text);
    return negative ? -v : v;
  }

  void parse_matrix(InputDocument& doc) {
    doc.kind = DocumentKind::Matrix;
    expect_symbol("{");
    std::vector<int> row;
    const Token* row_start = &peek();
    auto finish_row = [&](const Token& where) {
      if (row.empty()) fail(where, "empty matrix row");
      if (!doc.matrix_rows.empty() && row.size() != doc.matrix_rows.front().size()) {
        fail(*row_start, "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(doc.matrix_rows.front().size()));
      }
      doc.matrix_rows.push_back(std::move(row));
      row.clear();
    };
    while (!at_symbol("}")) {
      if (at_symbol(";")) {
        finish_row(next());
        row_start = &peek();
        continue;
      }
      row.push_back(expect_integer());
    }
    const Token& close = expect_symbol("}");
    if (!row.empty() || doc.matrix_rows.empty()) finish_row(close);
    const auto m = doc.matrix_rows.size();
    if (m > static_cast<std::size_t>(comb::kMaxVertices)) fail(close, "matrix has too many rows");
    if (!table_.empty()) {
      if (table_.size() != m) {
        fail(close, "label table has " + std::to_string(table_.size()) + " labels for " +
                        std::to_string(m) + " matrix rows");
      }
      doc.labels = table_;
    } else {
      for (std::size_t i = 1; i <= m; ++i) doc.labels.push_back(std::to_string(i));
    }
  }

  void parse_ideal(InputDocument& doc) {
    doc.kind = DocumentKind::Ideal;
    expect_symbol("{");
    std::vector<std::vector<std::pair<std::size_t, int>>> monomials;  // (ref index, exponent)
    while (!at_symbol("}")) {
      std::vector<std::pair<std::size_t, int>> factors;
      while (true) {
        refs_.push_back(expect_label());
        int e = 1;
        if (at_symbol("^")) {
          next();
          const Token& t = peek();
          e = expect_integer();
          if (e < 1) fail(t, "exponents must be positive");
        }
        factors.emplace_back(refs_.size() - 1, e);
        if (!at_symbol("*")) break;
        next();
      }
      monomials.push_back(std::move(factors));
    }
    const Token& close = expect_symbol("}");
    if (monomials.empty()) fail(close, "ideal has no generators");
    const auto ids = resolve(doc);
    for (const auto& factors : monomials) {
      comb::ExponentVector v;
      v.entries.assign(doc.labels.size(), 0);
      for (const auto& [ref, e] : factors) v.entries[static_cast<std::size_t>(ids[ref]) - 1] += e;
      doc.monomials.push_back(std::move(v));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> table_;
  std::vector<Ref> refs_;
};

}  // namespace

std::vector<std::string> parse_label_table(const std::string& text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& t : tokenize(text)) {
    if (t.kind == Token::Kind::End) break;
    if (t.kind != Token::Kind::Word) throw ParseError(t.line, t.column, "labels must be words");
    if (!seen.insert(t.text).second) {
      throw ParseError(t.line, t.column, "duplicate label '" + t.text + "'");
    }
    out.push_back(t.text);
  }
  if (out.size() > static_cast<std::size_t>(comb::kMaxVertices)) {
    throw InputError("label table has more than " + std::to_string(comb::kMaxVertices) + " labels");
  }
  return out;
}

InputDocument parse_text(const std::string& text, const std::string& source,
                         const std::vector<std::string>& label_table) {
  InputDocument doc = Parser(tokenize(text), label_table).parse();
  doc.source = source;
  // Surface constructor diagnostics (range checks, repeated edges) as input errors now.
  switch (doc.kind) {
    case DocumentKind::Graph: (void)doc.graph(); break;
    case DocumentKind::Clutter: (void)doc.clutter(); break;
    case DocumentKind::Matrix: (void)doc.matrix(); break;
    case DocumentKind::Ideal: break;
  }
  return doc;
}

InputDocument parse_input(std::istream& in, const std::string& source,
                          const std::vector<std::string>& label_table) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_text(text, source, label_table);
}

comb::Graph InputDocument::graph() const {
  if (kind == DocumentKind::Graph) return comb::Graph::from_edges(vertex_count(), edges);
  if (kind == DocumentKind::Clutter) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : clutter_edges) {
      if (e.size() != 2) throw InputError("clutter is not a graph: edge " + comb::to_string(e));
      es.emplace_back(e[0], e[1]);
    }
    return comb::Graph::from_edges(vertex_count(), es);
  }
  throw InputError("a " + to_string(kind) + " document does not describe a graph");
}

comb::Clutter InputDocument::clutter() const {
  if (kind == DocumentKind::Graph) return comb::edge_clutter(graph());
  if (kind == DocumentKind::Clutter) {
    return comb::Clutter(vertex_count(), clutter_edges,
                         minimalize ? comb::ClutterMode::Minimalize : comb::ClutterMode::Strict);
  }
  throw InputError("a " + to_string(kind) + " document does not describe a clutter");
}

comb::IncidenceMatrix InputDocument::matrix() const {
  switch (kind) {
    case DocumentKind::Matrix: return comb::matrix_from_rows(matrix_rows);
    case DocumentKind::Ideal: {
      comb::IncidenceMatrix m;
      m.rows = vertex_count();
      for (const auto& v : monomials) m.columns.push_back(v.entries);
      return m;
    }
    default: return comb::incidence_matrix(clutter());
  }
}

std::string InputDocument::canonical() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["labels"] = labels;
  switch (kind) {
    case DocumentKind::Graph: {
      auto es = graph().edges();
      j["edges"] = es;
      break;
    }
    case DocumentKind::Clutter: j["edges"] = clutter().edges(); break;
    case DocumentKind::Matrix: j["rows"] = matrix_rows; break;
    case DocumentKind::Ideal: {
      auto ms = monomials;
      std::sort(ms.begin(), ms.end());
      ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
      auto rows = nlohmann::ordered_json::array();
      for (const auto& m : ms) rows.push_back(m.entries);
      j["monomials"] = rows;
      break;
    }
  }
  return j.dump();
}

}  // namespace blowup::frontend
