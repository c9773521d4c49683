#include "nesy/diagnostics.hpp"

#include <algorithm>

namespace nesy {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "SyntaxError";
    case ErrorKind::cycle: return "CycleError";
    case ErrorKind::unknown_class: return "UnknownClass";
    case ErrorKind::unknown_label: return "UnknownLabel";
    case ErrorKind::unknown_node: return "UnknownNode";
    case ErrorKind::self_loop: return "SelfLoop";
    case ErrorKind::duplicate_node: return "DuplicateNode";
    case ErrorKind::unknown_name: return "UnknownName";
    case ErrorKind::duplicate_name: return "DuplicateName";
    case ErrorKind::label_mismatch: return "LabelMismatch";
    case ErrorKind::catalog_miss: return "CatalogMiss";
    case ErrorKind::catalog_error: return "CatalogError";
    case ErrorKind::io_error: return "IOError";
    case ErrorKind::taxonomy_mismatch: return "TaxonomyMismatch";
    case ErrorKind::no_refinement: return "NoRefinement";
    case ErrorKind::ambiguous_refinement: return "AmbiguousRefinement";
    case ErrorKind::invalid_refinement: return "InvalidRefinement";
    case ErrorKind::type_error: return "TypeError";
    case ErrorKind::undefined_colimit: return "UndefinedColimit";
    case ErrorKind::degenerate_loop: return "DegenerateLoop";
    case ErrorKind::cyclic_combine: return "CyclicCombine";
    case ErrorKind::skipped_entry: return "SkippedEntry";
    case ErrorKind::connected_to: return "ConnectedTo";
  }
  return "Error";
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::note: return "note";
  }
  return "error";
}

namespace {
std::string format_what(ErrorKind kind, const std::string& detail) {
  std::string s(to_string(kind));
  s += ": ";
  s += detail;
  return s;
}
}  // namespace

Error::Error(ErrorKind kind, std::string message)
    : std::runtime_error(format_what(kind, message)),
      kind_(kind),
      detail_(std::move(message)) {}

Error::Error(ErrorKind kind, SourcePos pos, std::string message)
    : std::runtime_error(format_what(kind, message)),
      kind_(kind),
      has_pos_(true),
      pos_(pos),
      detail_(std::move(message)) {}

Error Error::with_position(SourcePos pos) const {
  return Error(kind_, pos, detail_);
}

Error Error::with_prefix(std::string_view prefix) const {
  std::string msg(prefix);
  msg += ": ";
  msg += detail_;
  return has_pos_ ? Error(kind_, pos_, std::move(msg))
                  : Error(kind_, std::move(msg));
}

void Diagnostics::error(ErrorKind kind, SourcePos pos, std::string message) {
  items_.push_back({Severity::error, kind, pos, std::move(message)});
}

void Diagnostics::warning(ErrorKind kind, SourcePos pos, std::string message) {
  items_.push_back({Severity::warning, kind, pos, std::move(message)});
}

void Diagnostics::error(const Error& e, SourcePos fallback) {
  items_.push_back({Severity::error, e.kind(),
                    e.has_position() ? e.position() : fallback, e.detail()});
}

bool Diagnostics::has_errors() const noexcept {
  return error_count() > 0;
}

std::size_t Diagnostics::error_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [](const Diagnostic& d) {
        return d.severity == Severity::error;
      }));
}

void print_diagnostics(std::ostream& os, std::string_view file,
                       const Diagnostics& diags) {
  for (const auto& d : diags.items()) {
    os << file << ':' << d.pos.line << ':' << d.pos.column << ": "
       << to_string(d.severity) << ": ";
    if (d.severity == Severity::error) os << to_string(d.kind) << ": ";
    os << d.message << '\n';
  }
}

}  // namespace nesy
