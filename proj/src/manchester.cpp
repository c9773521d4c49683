// Reader for the class-hierarchy subset of OWL2 Manchester syntax.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "nesy/taxonomy.hpp"

namespace nesy {
namespace {

enum class Tok { word, iri, string, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourcePos pos;
};

const std::set<std::string, std::less<>> kFrameKeywords = {
    "Class:",          "ObjectProperty:",     "DataProperty:",
    "AnnotationProperty:", "Individual:",     "Datatype:",
    "DisjointClasses:", "EquivalentClasses:", "DisjointProperties:",
    "EquivalentProperties:", "SameIndividual:", "DifferentIndividuals:",
    "Prefix:",         "Ontology:",           "Import:",
    "Rule:"};

const std::set<std::string, std::less<>> kSectionKeywords = {
    "SubClassOf:",    "EquivalentTo:",   "DisjointWith:", "DisjointUnionOf:",
    "HasKey:",        "Annotations:",    "Domain:",       "Range:",
    "Characteristics:", "SubPropertyOf:", "InverseOf:",   "SubPropertyChain:",
    "Types:",         "Facts:",          "SameAs:",       "DifferentFrom:"};

class Lexer {
 public:
  Lexer(std::string_view text, SourcePos origin) : text_(text), origin_(origin) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.pos = position();
    if (i_ >= text_.size()) return t;
    char c = text_[i_];
    if (c == '<') {
      std::size_t close = text_.find('>', i_);
      if (close == std::string_view::npos) {
        throw Error(ErrorKind::syntax, t.pos, "unterminated IRI");
      }
      t.kind = Tok::iri;
      t.text = std::string(text_.substr(i_ + 1, close - i_ - 1));
      advance(close + 1 - i_);
      return t;
    }
    if (c == '"') {
      advance(1);
      t.kind = Tok::string;
      while (i_ < text_.size() && text_[i_] != '"') {
        if (text_[i_] == '\\' && i_ + 1 < text_.size()) advance(1);
        t.text += text_[i_];
        advance(1);
      }
      if (i_ >= text_.size()) {
        throw Error(ErrorKind::syntax, t.pos, "unterminated string literal");
      }
      advance(1);
      return t;
    }
    if (std::string_view("(),{}[]").find(c) != std::string_view::npos) {
      t.kind = Tok::punct;
      t.text = std::string(1, c);
      advance(1);
      return t;
    }
    t.kind = Tok::word;
    while (i_ < text_.size()) {
      char d = text_[i_];
      if (std::isspace(static_cast<unsigned char>(d)) ||
          std::string_view("(),{}[]\"<").find(d) != std::string_view::npos) {
        break;
      }
      t.text += d;
      advance(1);
    }
    return t;
  }

 private:
  void skip_space_and_comments() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && i_ < text_.size(); ++k, ++i_) {
      if (text_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  SourcePos position() const {
    if (line_ == 1) return {origin_.line, origin_.column + col_ - 1};
    return {origin_.line + line_ - 1, col_};
  }

  std::string_view text_;
  SourcePos origin_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_frame(const Token& t) {
  return t.kind == Tok::word && kFrameKeywords.contains(t.text);
}
bool is_section(const Token& t) {
  return t.kind == Tok::word && kSectionKeywords.contains(t.text);
}

class Reader {
 public:
  Reader(std::string_view text, SourcePos origin, Diagnostics* sink,
         const Taxonomy* base)
      : lex_(text, origin), origin_(origin), sink_(sink), base_(base) {
    prefixes_["owl:"] = "http://www.w3.org/2002/07/owl#";
    prefixes_["rdf:"] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    prefixes_["rdfs:"] = "http://www.w3.org/2000/01/rdf-schema#";
    prefixes_["xsd:"] = "http://www.w3.org/2001/XMLSchema#";
    if (base_) builder_.emplace(*base_);
    shift();
  }

  Taxonomy run() {
    while (cur_.kind != Tok::end) {
      if (cur_.kind == Tok::word && cur_.text == "Prefix:") {
        parse_prefix();
      } else if (cur_.kind == Tok::word && cur_.text == "Ontology:") {
        parse_ontology();
      } else if (cur_.kind == Tok::word &&
                 (cur_.text == "Class:" || cur_.text == "Class")) {
        parse_class();
      } else if (is_frame(cur_) || is_section(cur_)) {
        Token kw = cur_;
        shift();
        skip_until_frame();
        warn(kw.pos, "'" + kw.text + "' entries are not interpreted; skipped");
      } else {
        throw Error(ErrorKind::syntax, cur_.pos,
                    "expected a frame (Prefix:, Ontology:, Class:, ...) but "
                    "found '" +
                        describe(cur_) + "'");
      }
    }
    auto& b = builder();
    for (const auto& [iri, pos] : referenced_) {
      if (declared_.contains(iri)) continue;
      if (base_ && base_->index_of_iri(iri)) continue;
      auto c = b.find_iri(iri);
      if (c && c == b.top()) continue;
      if (base_) {
        throw Error(ErrorKind::unknown_class, pos,
                    "class '" + (c ? c->local_name : iri) +
                        "' is neither in the base taxonomy nor declared in "
                        "the extension");
      }
      warn(pos, "class '" + (c ? c->local_name : iri) +
                    "' is used without a Class frame; declared implicitly");
    }
    try {
      return b.build();
    } catch (const Error& e) {
      if (e.has_position()) throw;
      throw e.with_position(origin_);
    }
  }

 private:
  void shift() { cur_ = lex_.next(); }

  static std::string describe(const Token& t) {
    return t.kind == Tok::end ? std::string("end of input") : t.text;
  }

  void warn(SourcePos pos, std::string msg) {
    if (sink_) sink_->warning(ErrorKind::skipped_entry, pos, std::move(msg));
  }

  TaxonomyBuilder& builder() {
    if (!builder_) {
      builder_.emplace(ontology_iri_.empty() ? std::string("urn:nesy:ontology")
                                             : ontology_iri_);
    }
    return *builder_;
  }

  void skip_until_frame() {
    while (cur_.kind != Tok::end && !is_frame(cur_) &&
           !(cur_.kind == Tok::word && cur_.text == "Class")) {
      shift();
    }
  }

  void parse_prefix() {
    shift();
    if (cur_.kind != Tok::word || cur_.text.empty() || cur_.text.back() != ':') {
      throw Error(ErrorKind::syntax, cur_.pos,
                  "expected a prefix name ending in ':' after 'Prefix:'");
    }
    std::string name = cur_.text;
    shift();
    if (cur_.kind != Tok::iri) {
      throw Error(ErrorKind::syntax, cur_.pos,
                  "expected <IRI> for prefix '" + name + "'");
    }
    prefixes_[name] = cur_.text;
    shift();
  }

  void parse_ontology() {
    shift();
    if (cur_.kind == Tok::iri) {
      if (!base_ && !builder_) {
        ontology_iri_ = cur_.text;
      } else {
        warn(cur_.pos, "ontology header inside an extension; IRI ignored");
      }
      shift();
      if (cur_.kind == Tok::iri) shift();  // version IRI
    }
  }

  bool is_name_token(const Token& t) const {
    if (t.kind == Tok::iri) return true;
    if (t.kind != Tok::word || t.text.empty()) return false;
    if (is_frame(t) || is_section(t) || t.text.back() == ':') return false;
    static const std::set<std::string, std::less<>> kOperators = {
        "some", "only", "value", "min", "max", "exactly", "and", "or",
        "not", "that", "inverse", "Self"};
    return !kOperators.contains(t.text);
  }

  ClassRef resolve_name(const Token& t) {
    auto& b = builder();
    std::string iri;
    if (t.kind == Tok::iri) {
      iri = t.text;
    } else if (auto colon = t.text.find(':'); colon != std::string::npos) {
      std::string prefix = t.text.substr(0, colon + 1);
      auto it = prefixes_.find(prefix);
      if (it == prefixes_.end()) {
        if (prefix == ":") {
          iri = b.ontology_iri() + "#" + t.text.substr(1);
        } else {
          throw Error(ErrorKind::syntax, t.pos,
                      "undeclared prefix '" + prefix + "'");
        }
      } else {
        iri = it->second + t.text.substr(colon + 1);
      }
    } else {
      if (t.text == kTopLocalName) return b.top();
      if (auto existing = b.find_local(t.text)) return *existing;
      if (auto it = prefixes_.find(":"); it != prefixes_.end()) {
        iri = it->second + t.text;
      } else {
        b.add_class(t.text);
        return *b.find_local(t.text);
      }
    }
    if (iri == "http://www.w3.org/2002/07/owl#Thing") return b.top();
    std::string local = local_name_of(iri);
    if (local == kTopLocalName) return b.top();
    if (auto existing = b.find_iri(iri)) return *existing;
    return ClassRef{iri, local};
  }

  void parse_class() {
    shift();
    if (!is_name_token(cur_)) {
      throw Error(ErrorKind::syntax, cur_.pos,
                  "expected a class name after 'Class' but found '" +
                      describe(cur_) + "'");
    }
    ClassRef cls = resolve_name(cur_);
    builder().add_class(cls);
    declared_.insert(cls.iri);
    shift();

    while (cur_.kind != Tok::end && !is_frame(cur_) &&
           !(cur_.kind == Tok::word && cur_.text == "Class")) {
      if (!is_section(cur_)) {
        throw Error(ErrorKind::syntax, cur_.pos,
                    "expected a frame section (SubClassOf:, ...) in class '" +
                        cls.local_name + "' but found '" + describe(cur_) +
                        "'");
      }
      Token section = cur_;
      shift();
      if (section.text == "SubClassOf:") {
        parse_superclasses(cls);
      } else {
        while (cur_.kind != Tok::end && !is_frame(cur_) && !is_section(cur_) &&
               !(cur_.kind == Tok::word && cur_.text == "Class")) {
          shift();
        }
        warn(section.pos, "'" + section.text + "' in class '" +
                              cls.local_name + "' is not interpreted; skipped");
      }
    }
  }

  void parse_superclasses(const ClassRef& cls) {
    for (;;) {
      std::vector<Token> expr;
      int depth = 0;
      while (cur_.kind != Tok::end) {
        if (depth == 0 && (is_frame(cur_) || is_section(cur_) ||
                           (cur_.kind == Tok::word && cur_.text == "Class") ||
                           (cur_.kind == Tok::punct && cur_.text == ","))) {
          break;
        }
        if (cur_.kind == Tok::punct) {
          if (cur_.text == "(" || cur_.text == "{" || cur_.text == "[") ++depth;
          if (cur_.text == ")" || cur_.text == "}" || cur_.text == "]") {
            if (--depth < 0) {
              throw Error(ErrorKind::syntax, cur_.pos,
                          "unbalanced '" + cur_.text + "'");
            }
          }
        }
        expr.push_back(cur_);
        shift();
      }
      if (depth != 0) {
        throw Error(ErrorKind::syntax, cur_.pos,
                    "unbalanced brackets in class expression");
      }
      if (expr.empty()) {
        throw Error(ErrorKind::syntax, cur_.pos,
                    "expected a class expression after 'SubClassOf:' in "
                    "class '" +
                        cls.local_name + "'");
      }
      if (expr.size() == 1 && is_name_token(expr.front())) {
        ClassRef super = resolve_name(expr.front());
        builder().add_edge(cls, super);
        referenced_.emplace(super.iri, expr.front().pos);
      } else {
        warn(expr.front().pos, "complex class expression in SubClassOf of '" +
                                   cls.local_name + "' is not interpreted; "
                                   "skipped");
      }
      if (cur_.kind == Tok::punct && cur_.text == ",") {
        shift();
        continue;
      }
      break;
    }
  }

  Lexer lex_;
  SourcePos origin_;
  Diagnostics* sink_;
  const Taxonomy* base_;
  Token cur_;
  std::optional<TaxonomyBuilder> builder_;
  std::string ontology_iri_;
  std::map<std::string, std::string> prefixes_;
  std::set<std::string> declared_;
  std::map<std::string, SourcePos> referenced_;
};

}  // namespace

Taxonomy parse_taxonomy(std::string_view text, Diagnostics* sink,
                        SourcePos origin) {
  return Reader(text, origin, sink, nullptr).run();
}

Taxonomy extend(const Taxonomy& base, std::string_view fragment,
                Diagnostics* sink, SourcePos origin) {
  auto ext = Reader(fragment, origin, sink, &base).run();
  std::string trimmed(fragment);
  auto first = trimmed.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return base;
  auto last = trimmed.find_last_not_of(" \t\r\n");
  TaxonomySource src = base.source();
  src.extensions.push_back(trimmed.substr(first, last - first + 1));
  return ext.with_source(std::move(src));
}

std::string_view default_taxonomy_source() {
  return R"(Prefix: : <https://ontohub.org/meta/NeSyPatterns#>
Ontology: <https://ontohub.org/meta/NeSyPatterns>

Class: NeSy_Pattern_Element

Class: Instance
    SubClassOf: NeSy_Pattern_Element
Class: Model
    SubClassOf: NeSy_Pattern_Element
Class: Process
    SubClassOf: NeSy_Pattern_Element
Class: Actor
    SubClassOf: NeSy_Pattern_Element

Class: Data
    SubClassOf: Instance
Class: Symbol
    SubClassOf: Instance

Class: Statistical_Model
    SubClassOf: Model
Class: Semantic_Model
    SubClassOf: Model

Class: Training
    SubClassOf: Process
Class: Deduction
    SubClassOf: Process
Class: Transformation
    SubClassOf: Process
)";
}

const Taxonomy& default_taxonomy() {
  static const Taxonomy t = parse_taxonomy(default_taxonomy_source())
                                .with_source({std::string(kDefaultOntologySource), {}});
  return t;
}

}  // namespace nesy
