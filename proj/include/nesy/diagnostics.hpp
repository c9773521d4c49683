#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nesy {

/// 1-based line/column into a source text.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class Severity { error, warning, note };

enum class ErrorKind {
  syntax,
  cycle,
  unknown_class,
  unknown_label,
  unknown_node,
  self_loop,
  duplicate_node,
  unknown_name,
  duplicate_name,
  label_mismatch,
  catalog_miss,
  catalog_error,
  io_error,
  taxonomy_mismatch,
  no_refinement,
  ambiguous_refinement,
  invalid_refinement,
  type_error,
  undefined_colimit,
  degenerate_loop,
  cyclic_combine,
  skipped_entry,
  connected_to,
};

std::string_view to_string(ErrorKind kind);
std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::error;
  ErrorKind kind = ErrorKind::syntax;
  SourcePos pos;
  std::string message;
};

/// The single exception type thrown by the library. `has_position()` is false
/// for errors raised by operations that have no source text (e.g. building a
/// pattern programmatically).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message);
  Error(ErrorKind kind, SourcePos pos, std::string message);

  ErrorKind kind() const noexcept { return kind_; }
  bool has_position() const noexcept { return has_pos_; }
  SourcePos position() const noexcept { return pos_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

  Error with_position(SourcePos pos) const;
  Error with_prefix(std::string_view prefix) const;

 private:
  ErrorKind kind_;
  bool has_pos_ = false;
  SourcePos pos_;
  std::string detail_;
};

/// Collects diagnostics in emission order.
class Diagnostics {
 public:
  void add(Diagnostic d) { items_.push_back(std::move(d)); }
  void error(ErrorKind kind, SourcePos pos, std::string message);
  void warning(ErrorKind kind, SourcePos pos, std::string message);
  /// Records a caught Error; `fallback` is used when it carries no position.
  void error(const Error& e, SourcePos fallback);

  const std::vector<Diagnostic>& items() const noexcept { return items_; }
  bool has_errors() const noexcept;
  std::size_t error_count() const noexcept;
  bool empty() const noexcept { return items_.empty(); }

 private:
  std::vector<Diagnostic> items_;
};

/// Writes `file:line:col: severity: message` lines.
void print_diagnostics(std::ostream& os, std::string_view file,
                       const Diagnostics& diags);

}  // namespace nesy
