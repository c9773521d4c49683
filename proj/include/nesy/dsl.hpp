#pragma once

#include <string>
#include <string_view>

#include "nesy/ast.hpp"
#include "nesy/catalog.hpp"
#include "nesy/library.hpp"

namespace nesy {

/// Parses a pattern document:
///
///   document   := "logic" "NeSyPatterns" decl*
///   pattern    := "pattern" NAME "=" ("combine" NAME | data chain*) "end"
///   data       := "data" (ONT | "{" ONT ("then" MANCHESTER)? "}")
///   chain      := node ("->" node)* ";"
///   node       := (NAME ":")? CLASS
///   refinement := "refinement" NAME "=" NAME "refined" "to" NAME
///                 ("via" NAME "|->" NAME ("," NAME "|->" NAME)*)? "end"
///   network    := "network" NAME "=" NAME ("," NAME)* "end"
///
/// `%%` starts a comment. Throws SyntaxError naming the expected tokens.
ast::Document parse(std::string_view text);

/// Resolves names, ontologies and node references; infers or checks every
/// refinement whose endpoints are available. Errors are collected in `diags`
/// and the failing declaration (and anything depending on it) is dropped.
Library resolve(const ast::Document& doc, const Catalog& catalog,
                Diagnostics& diags);

/// Throwing form: raises the first error.
Library resolve(const ast::Document& doc, const Catalog& catalog);

/// parse + resolve + evaluate_combines, throwing on the first error.
Library load_library(std::string_view text, const Catalog& catalog = {});

/// Canonical document text for `lib`.
std::string emit_dsl(const Library& lib);

/// A standalone document holding just `p`.
std::string emit_dsl(const Pattern& p);

}  // namespace nesy
