#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mesml/model.hpp"

namespace mesml {

struct SourceSpan {
  std::string file;
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorCategory { Syntax, UnknownKey, BadEnum, DuplicateId, DanglingRef, MissingSubmodel };

std::string_view category_name(ParseErrorCategory category);

struct ParseError {
  SourceSpan span;
  ParseErrorCategory category{};
  std::string message;
};

/// Either a fully resolved spec or the collected errors, never both.
struct ParseResult {
  std::optional<MesSpec> spec;
  std::vector<ParseError> errors;
  bool ok() const { return spec.has_value(); }
};

/// Parses one interchange document (.mesml). All problems are collected in a
/// single pass; there is no fail-fast. Parsing enforces presence of the four
/// sub-models, id uniqueness, enum spellings and reference existence. Semantic
/// well-formedness (gateway arity, link typing, ...) is the validator's job.
/// The returned spec is normalized.
ParseResult parse_spec(std::string_view document, std::string file = "<input>");

/// Canonical, deterministic serialization: fixed key order, elements sorted by
/// id, normalized enum spellings. parse_spec(serialize_spec(s)) == s for every
/// normalized spec.
std::string serialize_spec(const MesSpec& spec);

/// `file:line:col: category: message` lines. A missing or duplicated sub-model
/// is the parse surface of catalog rule W-SPEC-01 and is rendered with that code.
std::string render_parse_errors(const std::vector<ParseError>& errors);

}  // namespace mesml
