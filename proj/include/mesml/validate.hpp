#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mesml/index.hpp"
#include "mesml/links.hpp"

namespace mesml {

enum class Severity { Error, Warning, Lint };

std::string_view severity_name(Severity s);  // "error" | "warning" | "lint"

/// The well-formedness rule catalog. Codes are stable across releases.
enum class Rule {
  WSpec01,  // missing/duplicated sub-model
  WTs01,    // empty area/unit/signal sets
  WTs02,    // signal not under a unit
  WTs03,    // TS hierarchy cycle or multi-parent (repeated node id)
  WPp01,    // flow-object count < 3
  WPp02,    // event count < 2
  WPp03,    // connecting-object count < 2
  WPp04,    // no activities
  WMes01,   // pools < 1 or lanes < 1
  WGw01,    // exclusive/parallel split arity
  WGw02,    // inclusive split arity
  WGw03,    // merge arity
  WGw04,    // gateway with information flows
  WRef01,   // reference with unresolved or wrong-kind target
  WRef02,   // reference target in the wrong model
  WRef03,   // reference/target name mismatch
  WRef04,   // reference without an equivalence link
  WLk01,    // never-linkable endpoint kind
  WLk02,    // same-view link
  WLk03,    // illegal data-transfer endpoint
  WLk04,    // illegal equivalence endpoints
  WLk05,    // equivalence name mismatch
  WLk06,    // illegal deployment direction or target
  WLk07,    // empty link model
  WSub01,   // subprocess containment cycle
  LAct01,   // declared vs computed degree mismatch
  LPp01,    // diagram lacking start or stop event
};

inline constexpr int kRuleCount = 27;

std::array<Rule, kRuleCount> all_rules();
std::string_view rule_code(Rule rule);           // "W-GW-01", "L-PP-01", ...
Severity rule_severity(Rule rule);
std::optional<Rule> rule_from_code(std::string_view code);

/// One validation finding. `subject` is "view:id" for elements, a model path
/// ("ts", "pp", "mes", "links") for model-level findings, or "links/<id>" for
/// links. `related` optionally names a peer element in the same syntax.
struct Diagnostic {
  Rule rule{};
  std::string subject;
  std::string message;
  std::string related;

  Severity severity() const { return rule_severity(rule); }
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Runs every catalog rule. Pure and idempotent; diagnostics are ordered by
/// (severity, rule code, subject, message). Empty result means the spec
/// satisfies every Error- and Warning-level rule.
std::vector<Diagnostic> validate_spec(const SpecIndex& index);
std::vector<Diagnostic> validate_spec(const MesSpec& spec);

/// W-GW-01..04 for one gateway. Throws NotFoundError for an unknown id.
std::vector<Diagnostic> check_gateway(const ElementId& gateway, const SpecIndex& index);

/// W-REF-01..04 for every reference element of one process model, including
/// nested fragments. `model` must be Mes or Pp.
std::vector<Diagnostic> check_references(View model, const SpecIndex& index);

/// Text rendering: one `SEVERITY CODE subject: message` line per finding.
std::string render_text(const std::vector<Diagnostic>& diagnostics);
/// Machine-readable JSON array with the same fields, deterministic key order.
std::string render_structured(const std::vector<Diagnostic>& diagnostics);

Severity worst_severity(const std::vector<Diagnostic>& diagnostics, bool* any = nullptr);

/// Thrown by query operations when the rules they depend on are violated.
struct PreconditionError : std::runtime_error {
  std::vector<Diagnostic> blocking;
  explicit PreconditionError(std::vector<Diagnostic> diagnostics);
};

}  // namespace mesml
