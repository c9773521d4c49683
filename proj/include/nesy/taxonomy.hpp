#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nesy/diagnostics.hpp"

namespace nesy {

/// An ontology class. Identity is the IRI; `local_name` is the DSL-facing
/// token (IRI fragment, spaces replaced by underscores).
struct ClassRef {
  std::string iri;
  std::string local_name;

  friend bool operator==(const ClassRef& a, const ClassRef& b) {
    return a.iri == b.iri;
  }
  friend std::strong_ordering operator<=>(const ClassRef& a,
                                          const ClassRef& b) {
    return a.iri <=> b.iri;
  }
};

/// Derives a local name from an IRI: the fragment after '#', else the last
/// path segment; percent-escapes decoded, whitespace mapped to '_'.
std::string local_name_of(std::string_view iri);

inline constexpr std::string_view kTopLocalName = "NeSy_Pattern_Element";
inline constexpr std::string_view kDefaultOntologyIri =
    "https://ontohub.org/meta/NeSyPatterns";
inline constexpr std::string_view kDefaultOntologySource =
    "https://ontohub.org/meta/NeSyPatterns.omn";

/// Where a taxonomy came from: the ontology reference it was resolved from
/// plus any inline extension fragments applied on top. Not part of identity.
struct TaxonomySource {
  std::string iri;
  std::vector<std::string> extensions;
};

/// Immutable subclass DAG with a single top class. Copies share state.
class Taxonomy {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // (sub, super)

  std::span<const ClassRef> classes() const;
  std::size_t size() const;
  const ClassRef& top() const;
  const ClassRef& at(std::size_t index) const;
  /// Ontology IRI used to mint class IRIs for bare names.
  const std::string& ontology_iri() const;
  const TaxonomySource& source() const;
  Taxonomy with_source(TaxonomySource source) const;

  /// Direct subclass edges as (sub, super) index pairs, sorted.
  std::span<const Edge> edges() const;

  std::optional<std::size_t> index_of(const ClassRef& c) const;
  std::optional<std::size_t> index_of_iri(std::string_view iri) const;
  /// Lookup by DSL token (local name, case-sensitive). Throws UnknownClass
  /// if the name is ambiguous.
  std::optional<ClassRef> find_local(std::string_view local_name) const;
  /// Like find_local, but throws UnknownClass when absent.
  ClassRef get(std::string_view local_name) const;
  bool contains(const ClassRef& c) const { return index_of(c).has_value(); }

  /// Index form of leq; no bounds checks.
  bool leq_index(std::size_t a, std::size_t b) const;

  /// Same classes and the same direct subclass edges.
  bool same_hierarchy(const Taxonomy& other) const;

 private:
  struct Data;
  explicit Taxonomy(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class TaxonomyBuilder;
};

/// Accumulates classes and edges, then validates into a Taxonomy.
class TaxonomyBuilder {
 public:
  /// Starts an empty hierarchy whose top is `ontology_iri#NeSy_Pattern_Element`.
  explicit TaxonomyBuilder(std::string ontology_iri);
  /// Starts from an existing taxonomy (for extension).
  explicit TaxonomyBuilder(const Taxonomy& base);

  /// Adds a class if absent; returns its index.
  std::size_t add_class(const ClassRef& c);
  std::size_t add_class(std::string_view local_name);
  void add_edge(const ClassRef& sub, const ClassRef& super);
  void add_edge(std::string_view sub_local, std::string_view super_local);
  /// Designates an existing class as top (default: the minted top).
  void set_top(const ClassRef& top);
  void set_source(TaxonomySource source);

  const std::string& ontology_iri() const { return ontology_iri_; }
  std::optional<ClassRef> find_local(std::string_view local_name) const;
  std::optional<ClassRef> find_iri(std::string_view iri) const;
  const ClassRef& top() const { return classes_[top_]; }
  bool has_superclass(const ClassRef& c) const;

  /// Adds top edges for parentless classes, checks acyclicity (CycleError)
  /// and builds the reachability closure.
  Taxonomy build() const;

 private:
  std::string ontology_iri_;
  TaxonomySource source_;
  std::vector<ClassRef> classes_;
  std::vector<Taxonomy::Edge> edges_;
  std::size_t top_ = 0;
};

/// true iff `b` is reachable from `a` (reflexive-transitive). Throws
/// UnknownClass if either argument is not a class of `t`.
bool leq(const Taxonomy& t, const ClassRef& a, const ClassRef& b);

/// Greatest common lower bound of `labels` (top when empty), or nullopt when
/// the common lower bounds have zero or several maximal elements. Throws
/// UnknownClass.
std::optional<ClassRef> infimum(const Taxonomy& t,
                                std::span<const ClassRef> labels);

/// The bundled hierarchy: top, Instance/Model/Process/Actor, and their
/// text-attested children.
const Taxonomy& default_taxonomy();

/// Manchester source for default_taxonomy().
std::string_view default_taxonomy_source();

/// Parses the Prefix/Ontology/Class/SubClassOf subset of Manchester syntax.
/// Unsupported entries become warnings in `sink` (if given). `origin` shifts
/// reported positions when the text is embedded in another document.
Taxonomy parse_taxonomy(std::string_view text, Diagnostics* sink = nullptr,
                        SourcePos origin = {});

/// Returns `base` plus the fragment's classes and edges.
Taxonomy extend(const Taxonomy& base, std::string_view fragment,
                Diagnostics* sink = nullptr, SourcePos origin = {});

}  // namespace nesy
