#include <cctype>
#include <optional>
#include <set>

#include "nesy/dsl.hpp"

namespace nesy {
namespace {

enum class Tok { ident, equals, colon, semicolon, comma, arrow, maps_to,
                 lbrace, rbrace, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

const std::set<std::string, std::less<>> kReserved = {
    "logic", "pattern", "refinement", "network", "data", "combine",
    "then",  "end",     "refined",    "to",      "via"};

/// Pull lexer; the parser switches to raw reads for ontology references and
/// Manchester fragments.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  const Token& peek() {
    if (!ahead_) ahead_ = lex();
    return *ahead_;
  }

  Token next() {
    Token t = peek();
    ahead_.reset();
    return t;
  }

  SourcePos position() const { return {line_, col_}; }

  /// Skips blanks and reports whether the next character is `c`.
  bool raw_peek_char(char c) {
    skip_blanks();
    return !ahead_ && i_ < text_.size() && text_[i_] == c;
  }

  /// Ontology reference: a run of non-blank characters other than braces and
  /// ';'.
  Token raw_reference() {
    skip_blanks();
    Token t;
    t.kind = Tok::ident;
    t.pos = position();
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' ||
          c == ';' || text_.substr(i_, 2) == "%%") {
        break;
      }
      t.text += c;
      advance();
    }
    if (t.text.empty()) {
      throw Error(ErrorKind::syntax, t.pos,
                  "expected an ontology reference (CURIE or <IRI>)");
    }
    return t;
  }

  /// Text up to (not including) the '}' matching an already consumed '{'.
  /// Text up to the matching '}', without surrounding whitespace.
  std::string raw_until_close(SourcePos& start, SourcePos open) {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) {
      advance();
    }
    start = position();
    std::string out;
    int depth = 0;
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '{') ++depth;
      if (c == '}') {
        if (depth == 0) {
          while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) {
            out.pop_back();
          }
          return out;
        }
        --depth;
      }
      out += c;
      advance();
    }
    throw Error(ErrorKind::syntax, open,
                "unterminated '{': expected '}' before end of input");
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_blanks() {
    while (i_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[i_]))) {
        advance();
      } else if (text_.substr(i_, 2) == "%%") {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token lex() {
    skip_blanks();
    Token t;
    t.pos = position();
    if (i_ >= text_.size()) return t;
    char c = text_[i_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    if (ident_start(c)) {
      t.kind = Tok::ident;
      while (i_ < text_.size() && ident_char(text_[i_])) {
        t.text += text_[i_];
        advance();
      }
      return t;
    }
    switch (c) {
      case '=': return single(Tok::equals);
      case ':': return single(Tok::colon);
      case ';': return single(Tok::semicolon);
      case ',': return single(Tok::comma);
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      default: break;
    }
    if (text_.substr(i_, 2) == "->") {
      t.kind = Tok::arrow;
      t.text = "->";
      advance();
      advance();
      return t;
    }
    if (text_.substr(i_, 3) == "|->") {
      t.kind = Tok::maps_to;
      t.text = "|->";
      advance();
      advance();
      advance();
      return t;
    }
    std::string shown(1, c);
    if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f) {
      shown = "\\x" + std::string(1, "0123456789abcdef"[(c >> 4) & 0xf]) +
              std::string(1, "0123456789abcdef"[c & 0xf]);
    }
    throw Error(ErrorKind::syntax, t.pos, "unexpected character '" + shown + "'");
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::optional<Token> ahead_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  ast::Document document() {
    expect_keyword("logic");
    expect_keyword("NeSyPatterns");
    ast::Document doc;
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::end) break;
      if (is_keyword(t, "pattern")) {
        doc.declarations.emplace_back(pattern());
      } else if (is_keyword(t, "refinement")) {
        doc.declarations.emplace_back(refinement());
      } else if (is_keyword(t, "network")) {
        doc.declarations.emplace_back(network());
      } else {
        fail(t, {"'pattern'", "'refinement'", "'network'", "end of input"});
      }
    }
    return doc;
  }

 private:
  static bool is_keyword(const Token& t, std::string_view kw) {
    return t.kind == Tok::ident && t.text == kw;
  }

  [[noreturn]] static void fail(const Token& found,
                                std::initializer_list<std::string_view> expected) {
    std::string msg = "expected ";
    if (expected.size() > 1) msg += "one of ";
    bool first = true;
    for (auto e : expected) {
      if (!first) msg += ", ";
      msg += e;
      first = false;
    }
    msg += " but found " + describe(found);
    throw Error(ErrorKind::syntax, found.pos, std::move(msg));
  }

  Token expect_keyword(std::string_view kw) {
    Token t = lex_.next();
    if (!is_keyword(t, kw)) {
      std::string quoted = "'" + std::string(kw) + "'";
      fail(t, {quoted});
    }
    return t;
  }

  Token expect(Tok kind, std::string_view what) {
    Token t = lex_.next();
    if (t.kind != kind) fail(t, {what});
    return t;
  }

  ast::Name name(std::string_view what) {
    Token t = lex_.next();
    if (t.kind != Tok::ident) fail(t, {what});
    if (kReserved.contains(t.text)) {
      throw Error(ErrorKind::syntax, t.pos,
                  "expected " + std::string(what) + " but found keyword '" +
                      t.text + "'");
    }
    return {t.text, t.pos};
  }

  ast::PatternDecl pattern() {
    ast::PatternDecl decl;
    decl.pos = expect_keyword("pattern").pos;
    decl.name = name("a pattern name");
    expect(Tok::equals, "'='");
    const Token& t = lex_.peek();
    if (is_keyword(t, "combine")) {
      lex_.next();
      decl.body = ast::CombineBody{name("a network name")};
      expect_keyword("end");
      return decl;
    }
    if (!is_keyword(t, "data")) fail(t, {"'combine'", "'data'"});
    lex_.next();

    ast::DataBody body;
    if (lex_.raw_peek_char('{')) {
      Token open = lex_.next();
      Token ref = lex_.raw_reference();
      body.ontology.base = {ref.text, ref.pos};
      const Token& after = lex_.peek();
      if (is_keyword(after, "then")) {
        lex_.next();
        SourcePos start;
        body.ontology.extension = lex_.raw_until_close(start, open.pos);
        body.ontology.extension_pos = start;
      } else if (after.kind != Tok::rbrace) {
        fail(after, {"'then'", "'}'"});
      }
      expect(Tok::rbrace, "'}'");
    } else {
      Token ref = lex_.raw_reference();
      body.ontology.base = {ref.text, ref.pos};
    }

    while (!is_keyword(lex_.peek(), "end")) {
      body.statements.push_back(chain());
    }
    lex_.next();
    decl.body = std::move(body);
    return decl;
  }

  ast::NodeRef node_ref() {
    Token first = lex_.next();
    if (first.kind != Tok::ident) fail(first, {"a class name", "'end'"});
    if (kReserved.contains(first.text)) {
      throw Error(ErrorKind::syntax, first.pos,
                  "expected a class name but found keyword '" + first.text + "'");
    }
    ast::NodeRef ref;
    if (lex_.peek().kind == Tok::colon) {
      lex_.next();
      ref.id = ast::Name{first.text, first.pos};
      ref.cls = name("a class name");
    } else {
      ref.cls = {first.text, first.pos};
    }
    return ref;
  }

  ast::Chain chain() {
    ast::Chain c;
    c.refs.push_back(node_ref());
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::arrow) {
        lex_.next();
        c.refs.push_back(node_ref());
      } else if (t.kind == Tok::semicolon) {
        lex_.next();
        return c;
      } else {
        fail(t, {"'->'", "';'"});
      }
    }
  }

  ast::RefinementDecl refinement() {
    ast::RefinementDecl decl;
    decl.pos = expect_keyword("refinement").pos;
    decl.name = name("a refinement name");
    expect(Tok::equals, "'='");
    decl.source = name("a pattern name");
    expect_keyword("refined");
    expect_keyword("to");
    decl.target = name("a pattern name");
    if (is_keyword(lex_.peek(), "via")) {
      lex_.next();
      std::vector<ast::MapEntry> entries;
      for (;;) {
        ast::MapEntry e;
        e.from = name("a source node id");
        expect(Tok::maps_to, "'|->'");
        e.to = name("a target node id");
        entries.push_back(std::move(e));
        if (lex_.peek().kind != Tok::comma) break;
        lex_.next();
      }
      decl.explicit_map = std::move(entries);
    }
    const Token& t = lex_.peek();
    if (!is_keyword(t, "end")) {
      if (decl.explicit_map) {
        fail(t, {"','", "'end'"});
      }
      fail(t, {"'via'", "'end'"});
    }
    lex_.next();
    return decl;
  }

  ast::NetworkDecl network() {
    ast::NetworkDecl decl;
    decl.pos = expect_keyword("network").pos;
    decl.name = name("a network name");
    expect(Tok::equals, "'='");
    decl.members.push_back(name("a pattern or refinement name"));
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::comma) {
        lex_.next();
        decl.members.push_back(name("a pattern or refinement name"));
      } else if (is_keyword(t, "end")) {
        lex_.next();
        return decl;
      } else {
        fail(t, {"','", "'end'"});
      }
    }
  }

  Lexer lex_;
};

}  // namespace

ast::Document parse(std::string_view text) { return Parser(text).document(); }

}  // namespace nesy
