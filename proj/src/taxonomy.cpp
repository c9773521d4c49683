#include "nesy/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace nesy {

struct Taxonomy::Data {
  std::string ontology_iri;
  TaxonomySource source;
  std::vector<ClassRef> classes;
  std::vector<Edge> edges;
  std::size_t top = 0;
  std::map<std::string, std::size_t, std::less<>> by_iri;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_local;
  // reach[a * n + b] != 0 iff a <= b
  std::vector<unsigned char> reach;
};

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string mint_iri(std::string_view ontology_iri, std::string_view local) {
  std::string iri(ontology_iri);
  if (iri.empty() || (iri.back() != '#' && iri.back() != '/')) iri += '#';
  iri += local;
  return iri;
}

}  // namespace

std::string local_name_of(std::string_view iri) {
  std::string_view tail = iri;
  if (auto hash = iri.rfind('#'); hash != std::string_view::npos) {
    tail = iri.substr(hash + 1);
  } else if (auto slash = iri.rfind('/'); slash != std::string_view::npos) {
    tail = iri.substr(slash + 1);
  }
  if (tail.empty()) tail = iri;
  std::string out;
  out.reserve(tail.size());
  for (std::size_t i = 0; i < tail.size(); ++i) {
    char c = tail[i];
    if (c == '%' && i + 2 < tail.size() && hex_value(tail[i + 1]) >= 0 && hex_value(tail[i + 2]) >= 0) {
      c = static_cast<char>(hex_value(tail[i + 1]) * 16 + hex_value(tail[i + 2]));
      i += 2;
    }
    out += std::isspace(static_cast<unsigned char>(c)) ? '_' : c;
  }
  return out;
}

// ---------------------------------------------------------------- Taxonomy

std::span<const ClassRef> Taxonomy::classes() const { return d_->classes; }
std::size_t Taxonomy::size() const { return d_->classes.size(); }
const ClassRef& Taxonomy::top() const { return d_->classes[d_->top]; }
const ClassRef& Taxonomy::at(std::size_t index) const {
  return d_->classes.at(index);
}
const std::string& Taxonomy::ontology_iri() const { return d_->ontology_iri; }
const TaxonomySource& Taxonomy::source() const { return d_->source; }
std::span<const Taxonomy::Edge> Taxonomy::edges() const { return d_->edges; }

Taxonomy Taxonomy::with_source(TaxonomySource source) const {
  auto copy = std::make_shared<Data>(*d_);
  copy->source = std::move(source);
  return Taxonomy(std::move(copy));
}

std::optional<std::size_t> Taxonomy::index_of(const ClassRef& c) const {
  return index_of_iri(c.iri);
}

std::optional<std::size_t> Taxonomy::index_of_iri(std::string_view iri) const {
  auto it = d_->by_iri.find(iri);
  if (it == d_->by_iri.end()) return std::nullopt;
  return it->second;
}

std::optional<ClassRef> Taxonomy::find_local(std::string_view local_name) const {
  auto it = d_->by_local.find(local_name);
  if (it == d_->by_local.end()) return std::nullopt;
  if (it->second.size() > 1) {
    throw Error(ErrorKind::unknown_class,
                "class name '" + std::string(local_name) +
                    "' is ambiguous (" + d_->classes[it->second[0]].iri +
                    ", " + d_->classes[it->second[1]].iri + ")");
  }
  return d_->classes[it->second.front()];
}

ClassRef Taxonomy::get(std::string_view local_name) const {
  auto c = find_local(local_name);
  if (!c) {
    throw Error(ErrorKind::unknown_class,
                "unknown class '" + std::string(local_name) + "'");
  }
  return *c;
}

bool Taxonomy::leq_index(std::size_t a, std::size_t b) const {
  return d_->reach[a * d_->classes.size() + b] != 0;
}

bool Taxonomy::same_hierarchy(const Taxonomy& other) const {
  if (d_ == other.d_) return true;
  if (size() != other.size() || d_->edges.size() != other.d_->edges.size()) {
    return false;
  }
  for (const auto& c : d_->classes) {
    if (!other.index_of(c)) return false;
  }
  // Compare edges by IRI, since indices may differ.
  auto edge_iris = [](const Taxonomy& t) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(t.edges().size());
    for (auto [s, p] : t.edges()) out.emplace_back(t.at(s).iri, t.at(p).iri);
    std::sort(out.begin(), out.end());
    return out;
  };
  return edge_iris(*this) == edge_iris(other) && top() == other.top();
}

// --------------------------------------------------------- TaxonomyBuilder

TaxonomyBuilder::TaxonomyBuilder(std::string ontology_iri)
    : ontology_iri_(std::move(ontology_iri)) {
  source_.iri = ontology_iri_;
  std::string iri = mint_iri(ontology_iri_, kTopLocalName);
  classes_.push_back({iri, std::string(kTopLocalName)});
  top_ = 0;
}

TaxonomyBuilder::TaxonomyBuilder(const Taxonomy& base)
    : ontology_iri_(base.ontology_iri()), source_(base.source()) {
  classes_.assign(base.classes().begin(), base.classes().end());
  edges_.assign(base.edges().begin(), base.edges().end());
  top_ = *base.index_of(base.top());
}

std::size_t TaxonomyBuilder::add_class(const ClassRef& c) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i] == c) return i;
  }
  classes_.push_back(c);
  return classes_.size() - 1;
}

std::size_t TaxonomyBuilder::add_class(std::string_view local_name) {
  if (auto existing = find_local(local_name)) return add_class(*existing);
  return add_class(ClassRef{mint_iri(ontology_iri_, local_name),
                            std::string(local_name)});
}

void TaxonomyBuilder::add_edge(const ClassRef& sub, const ClassRef& super) {
  Taxonomy::Edge e{add_class(sub), add_class(super)};
  if (std::find(edges_.begin(), edges_.end(), e) == edges_.end()) {
    edges_.push_back(e);
  }
}

void TaxonomyBuilder::add_edge(std::string_view sub_local,
                               std::string_view super_local) {
  std::size_t s = add_class(sub_local);
  std::size_t p = add_class(super_local);
  Taxonomy::Edge e{s, p};
  if (std::find(edges_.begin(), edges_.end(), e) == edges_.end()) {
    edges_.push_back(e);
  }
}

void TaxonomyBuilder::set_top(const ClassRef& top) { top_ = add_class(top); }

void TaxonomyBuilder::set_source(TaxonomySource source) {
  source_ = std::move(source);
}

std::optional<ClassRef> TaxonomyBuilder::find_local(
    std::string_view local_name) const {
  for (const auto& c : classes_) {
    if (c.local_name == local_name) return c;
  }
  return std::nullopt;
}

std::optional<ClassRef> TaxonomyBuilder::find_iri(std::string_view iri) const {
  for (const auto& c : classes_) {
    if (c.iri == iri) return c;
  }
  return std::nullopt;
}

bool TaxonomyBuilder::has_superclass(const ClassRef& c) const {
  for (auto [s, p] : edges_) {
    if (classes_[s] == c) return true;
  }
  return false;
}

Taxonomy TaxonomyBuilder::build() const {
  auto d = std::make_shared<Taxonomy::Data>();
  d->ontology_iri = ontology_iri_;
  d->source = source_;
  d->classes = classes_;
  d->edges = edges_;
  d->top = top_;
  const std::size_t n = d->classes.size();

  std::vector<bool> has_parent(n, false);
  for (auto [s, p] : d->edges) has_parent[s] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != d->top && !has_parent[i]) d->edges.emplace_back(i, d->top);
  }
  std::sort(d->edges.begin(), d->edges.end());
  d->edges.erase(std::unique(d->edges.begin(), d->edges.end()), d->edges.end());

  std::vector<std::vector<std::size_t>> supers(n);
  for (auto [s, p] : d->edges) {
    if (s == p) {
      throw Error(ErrorKind::cycle, "class '" + d->classes[s].local_name +
                                        "' is declared a subclass of itself");
    }
    supers[s].push_back(p);
  }

  // Depth-first search; post-order gives supers before subs.
  enum class Mark { none, active, done };
  std::vector<Mark> mark(n, Mark::none);
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> path;
  auto visit = [&](auto&& self, std::size_t v) -> void {
    mark[v] = Mark::active;
    path.push_back(v);
    for (std::size_t w : supers[v]) {
      if (mark[w] == Mark::active) {
        std::string cycle;
        auto from = std::find(path.begin(), path.end(), w);
        for (auto it = from; it != path.end(); ++it) {
          cycle += d->classes[*it].local_name + " SubClassOf ";
        }
        cycle += d->classes[w].local_name;
        throw Error(ErrorKind::cycle, "subclass cycle: " + cycle);
      }
      if (mark[w] == Mark::none) self(self, w);
    }
    path.pop_back();
    mark[v] = Mark::done;
    order.push_back(v);
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (mark[v] == Mark::none) visit(visit, v);
  }

  d->reach.assign(n * n, 0);
  for (std::size_t v : order) {
    auto* row = &d->reach[v * n];
    row[v] = 1;
    for (std::size_t w : supers[v]) {
      const auto* up = &d->reach[w * n];
      for (std::size_t k = 0; k < n; ++k) row[k] |= up[k];
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = d->classes[i];
    if (c.local_name.empty()) {
      throw Error(ErrorKind::syntax, "class IRI '" + c.iri +
                                         "' yields an empty local name");
    }
    d->by_iri.emplace(c.iri, i);
    d->by_local[c.local_name].push_back(i);
  }
  return Taxonomy(std::move(d));
}

// -------------------------------------------------------------- operations

namespace {
std::size_t require_index(const Taxonomy& t, const ClassRef& c) {
  auto i = t.index_of(c);
  if (!i) {
    throw Error(ErrorKind::unknown_class,
                "class '" + c.local_name + "' <" + c.iri +
                    "> is not in the taxonomy");
  }
  return *i;
}
}  // namespace

bool leq(const Taxonomy& t, const ClassRef& a, const ClassRef& b) {
  return t.leq_index(require_index(t, a), require_index(t, b));
}

std::optional<ClassRef> infimum(const Taxonomy& t,
                                std::span<const ClassRef> labels) {
  // Every class bounds the empty set from below; the greatest is top.
  if (labels.empty()) return t.top();
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(require_index(t, l));

  const std::size_t n = t.size();
  std::vector<std::size_t> lower;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::all_of(idx.begin(), idx.end(),
                    [&](std::size_t x) { return t.leq_index(c, x); })) {
      lower.push_back(c);
    }
  }
  std::optional<std::size_t> best;
  for (std::size_t c : lower) {
    bool maximal = std::none_of(lower.begin(), lower.end(), [&](std::size_t d) {
      return d != c && t.leq_index(c, d);
    });
    if (!maximal) continue;
    if (best) return std::nullopt;
    best = c;
  }
  if (!best) return std::nullopt;
  return t.at(*best);
}

}  // namespace nesy
