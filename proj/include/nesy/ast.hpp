#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nesy/diagnostics.hpp"

namespace nesy::ast {

struct Name {
  std::string text;
  SourcePos pos;
};

/// `[id :] Class`
struct NodeRef {
  std::optional<Name> id;
  Name cls;
};

/// `a -> b -> c ;`
struct Chain {
  std::vector<NodeRef> refs;
};

/// `data base` or `data { base then <manchester fragment> }`
struct OntRef {
  Name base;
  std::optional<std::string> extension;
  SourcePos extension_pos;
};

struct DataBody {
  OntRef ontology;
  std::vector<Chain> statements;
};

struct CombineBody {
  Name network;
};

struct PatternDecl {
  Name name;
  SourcePos pos;
  std::variant<DataBody, CombineBody> body;

  bool is_combine() const { return std::holds_alternative<CombineBody>(body); }
};

struct MapEntry {
  Name from;
  Name to;
};

struct RefinementDecl {
  Name name;
  SourcePos pos;
  Name source;
  Name target;
  std::optional<std::vector<MapEntry>> explicit_map;
};

struct NetworkDecl {
  Name name;
  SourcePos pos;
  std::vector<Name> members;
};

using Declaration = std::variant<PatternDecl, RefinementDecl, NetworkDecl>;

struct Document {
  std::vector<Declaration> declarations;
};

}  // namespace nesy::ast
