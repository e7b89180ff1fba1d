#include "mesml/validate.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace mesml {

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Lint: return "lint";
  }
  return "?";
}

std::array<Rule, kRuleCount> all_rules() {
  return {Rule::WSpec01, Rule::WTs01, Rule::WTs02, Rule::WTs03,  Rule::WPp01, Rule::WPp02,
          Rule::WPp03,   Rule::WPp04, Rule::WMes01, Rule::WGw01, Rule::WGw02, Rule::WGw03,
          Rule::WGw04,   Rule::WRef01, Rule::WRef02, Rule::WRef03, Rule::WRef04, Rule::WLk01,
          Rule::WLk02,   Rule::WLk03, Rule::WLk04,  Rule::WLk05, Rule::WLk06, Rule::WLk07,
          Rule::WSub01,  Rule::LAct01, Rule::LPp01};
}

std::string_view rule_code(Rule rule) {
  switch (rule) {
    case Rule::WSpec01: return "W-SPEC-01";
    case Rule::WTs01: return "W-TS-01";
    case Rule::WTs02: return "W-TS-02";
    case Rule::WTs03: return "W-TS-03";
    case Rule::WPp01: return "W-PP-01";
    case Rule::WPp02: return "W-PP-02";
    case Rule::WPp03: return "W-PP-03";
    case Rule::WPp04: return "W-PP-04";
    case Rule::WMes01: return "W-MES-01";
    case Rule::WGw01: return "W-GW-01";
    case Rule::WGw02: return "W-GW-02";
    case Rule::WGw03: return "W-GW-03";
    case Rule::WGw04: return "W-GW-04";
    case Rule::WRef01: return "W-REF-01";
    case Rule::WRef02: return "W-REF-02";
    case Rule::WRef03: return "W-REF-03";
    case Rule::WRef04: return "W-REF-04";
    case Rule::WLk01: return "W-LK-01";
    case Rule::WLk02: return "W-LK-02";
    case Rule::WLk03: return "W-LK-03";
    case Rule::WLk04: return "W-LK-04";
    case Rule::WLk05: return "W-LK-05";
    case Rule::WLk06: return "W-LK-06";
    case Rule::WLk07: return "W-LK-07";
    case Rule::WSub01: return "W-SUB-01";
    case Rule::LAct01: return "L-ACT-01";
    case Rule::LPp01: return "L-PP-01";
  }
  return "?";
}

Severity rule_severity(Rule rule) {
  switch (rule) {
    case Rule::WRef04:
    case Rule::WLk07:
      return Severity::Warning;
    case Rule::LAct01:
    case Rule::LPp01:
      return Severity::Lint;
    default:
      return Severity::Error;
  }
}

std::optional<Rule> rule_from_code(std::string_view code) {
  for (Rule rule : all_rules()) {
    if (rule_code(rule) == code) return rule;
  }
  return std::nullopt;
}

PreconditionError::PreconditionError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error("query precondition violated: " +
                         (diagnostics.empty() ? std::string("(no diagnostics)")
                                              : std::string(rule_code(diagnostics.front().rule)) +
                                                    " " + diagnostics.front().subject)),
      blocking(std::move(diagnostics)) {}

namespace {

struct Collector {
  const SpecIndex& index;
  std::vector<Diagnostic> out;

  void add(Rule rule, std::string subject, std::string message, std::string related = "") {
    out.push_back(Diagnostic{rule, std::move(subject), std::move(message), std::move(related)});
  }
};

std::string element_subject(View view, const ElementId& id) {
  return std::string(view_name(view)) + ":" + id;
}

void check_ts(Collector& c) {
  const TsNode& plant = c.index.spec().ts_model.plant;
  int areas = 0, units = 0, signals = 0;
  std::unordered_set<ElementId> seen;
  std::vector<ElementId> repeated;

  // depth-first over the hierarchy, tracking parent kinds and repeated ids
  struct Frame {
    const TsNode* node;
    const TsNode* parent;
  };
  std::vector<Frame> stack{{&plant, nullptr}};
  while (!stack.empty()) {
    auto [node, parent] = stack.back();
    stack.pop_back();
    if (!seen.insert(node->id).second) repeated.push_back(node->id);
    switch (node->kind) {
      case TsKind::Area: areas++; break;
      case TsKind::Unit: units++; break;
      case TsKind::Signal:
        signals++;
        if (!parent || parent->kind != TsKind::Unit) {
          c.add(Rule::WTs02, element_subject(View::Ts, node->id),
                "signals are attributes of units; '" + node->name + "' is not under a unit");
        }
        break;
      case TsKind::Plant:
      case TsKind::UserDefinedLayer:
        break;
    }
    for (const TsNode& child : node->children) stack.push_back({&child, node});
  }

  if (areas < 1 || units < 1 || signals < 1) {
    c.add(Rule::WTs01, "ts",
          "the technical system needs at least one area, one unit and one signal (areas=" +
              std::to_string(areas) + ", units=" + std::to_string(units) +
              ", signals=" + std::to_string(signals) + ")");
  }
  std::sort(repeated.begin(), repeated.end());
  repeated.erase(std::unique(repeated.begin(), repeated.end()), repeated.end());
  for (const ElementId& id : repeated) {
    c.add(Rule::WTs03, element_subject(View::Ts, id),
          "node '" + id + "' appears more than once in the hierarchy");
  }
}

struct ContentTotals {
  int activities = 0;
  int events = 0;
  int gateways = 0;
  int refs = 0;
  int flows = 0;
  int flow_objects() const { return activities + events + gateways + refs; }
};

ContentTotals top_level_totals(const ProcessContent& content) {
  ContentTotals t;
  t.activities = static_cast<int>(content.activities.size());
  t.events = static_cast<int>(content.events.size());
  t.gateways = static_cast<int>(content.gateways.size());
  t.refs = static_cast<int>(content.activity_refs.size() + content.signal_refs.size());
  t.flows = static_cast<int>(content.flows.size());
  return t;
}

// Top-level minima of a process model. Subprocess fragments are exempt.
void check_model_minima(Collector& c, const ProcessModel& model) {
  std::string subject{view_name(model.role)};
  ContentTotals t = top_level_totals(model.content);
  if (t.activities < 1) {
    c.add(Rule::WPp04, subject, "a process model needs at least one activity");
  }
  if (t.events < 2) {
    c.add(Rule::WPp02, subject,
          "a process model needs at least two events (found " + std::to_string(t.events) + ")");
  }
  if (t.flow_objects() < 3) {
    c.add(Rule::WPp01, subject, "a process model needs at least three flow objects (found " +
                                    std::to_string(t.flow_objects()) + ")");
  }
  if (t.flows < 2) {
    c.add(Rule::WPp03, subject, "a process model needs at least two connecting objects (found " +
                                    std::to_string(t.flows) + ")");
  }
  if (model.role == View::Mes) {
    int lanes = 0;
    for (const Pool& p : model.pools) lanes += static_cast<int>(p.lanes.size());
    if (model.pools.empty() || lanes < 1) {
      c.add(Rule::WMes01, subject,
            "the MES model needs at least one pool and one lane (pools=" +
                std::to_string(model.pools.size()) + ", lanes=" + std::to_string(lanes) + ")");
    }
  }
}

void gateway_rules(Collector& c, View view, const Gateway& g) {
  DegreeVector d = c.index.degrees(g.id);
  std::string subject = element_subject(view, g.id);
  if (g.behavior == GatewayBehavior::Split &&
      (g.exec == GatewayExec::Exclusive || g.exec == GatewayExec::Parallel)) {
    if (!(d.in_sf == 1 && d.out_sf >= 2)) {
      c.add(Rule::WGw01, subject,
            std::string(keyword(g.exec)) + " split needs exactly one incoming and at least two "
                                           "outgoing sequence flows (in=" +
                std::to_string(d.in_sf) + ", out=" + std::to_string(d.out_sf) + ")");
    }
  }
  if (g.behavior == GatewayBehavior::Split && g.exec == GatewayExec::Inclusive) {
    if (!(d.in_sf == 1 && d.out_sf >= 3)) {
      c.add(Rule::WGw02, subject,
            "inclusive split needs exactly one incoming and at least three outgoing sequence "
            "flows (in=" +
                std::to_string(d.in_sf) + ", out=" + std::to_string(d.out_sf) + ")");
    }
  }
  if (g.behavior == GatewayBehavior::Merge) {
    if (!(d.in_sf >= 2 && d.out_sf == 1)) {
      c.add(Rule::WGw03, subject,
            "merge needs at least two incoming and exactly one outgoing sequence flow (in=" +
                std::to_string(d.in_sf) + ", out=" + std::to_string(d.out_sf) + ")");
    }
  }
  if (d.in_mf != 0 || d.out_mf != 0 || d.in_df != 0 || d.out_df != 0) {
    c.add(Rule::WGw04, subject, "gateways must not have message or data flows attached");
  }
}

// True when the reference element participates in at least one equivalence link.
bool has_equivalence_link(const SpecIndex& index, const ElementId& ref_id) {
  for (const Link& link : index.spec().link_model.links) {
    if (link.type != LinkType::Equivalence) continue;
    if (link.source.id == ref_id || link.target.id == ref_id) return true;
  }
  return false;
}

void reference_rules(Collector& c, View view, const ElementId& id, const std::string& name,
                     const ElementId& target, bool is_activity_ref) {
  std::string subject = element_subject(view, id);
  const ElementInfo* target_info = c.index.find(target);
  const char* wanted = is_activity_ref ? "activity" : "signal";

  if (!target_info) {
    c.add(Rule::WRef01, subject, "reference target '" + target + "' does not resolve");
  } else if ((is_activity_ref && target_info->kind != ElementKind::Activity) ||
             (!is_activity_ref && target_info->kind != ElementKind::Signal)) {
    c.add(Rule::WRef01, subject,
          "reference target '" + target + "' is a " + std::string(kind_name(target_info->kind)) +
              ", expected a " + wanted,
          element_subject(target_info->view, target));
  } else {
    View expected = is_activity_ref ? (view == View::Mes ? View::Pp : View::Mes) : View::Ts;
    if (target_info->view != expected) {
      c.add(Rule::WRef02, subject,
            "reference target '" + target + "' lives in the " +
                std::string(view_name(target_info->view)) + " model, expected " +
                std::string(view_name(expected)),
            element_subject(target_info->view, target));
    } else if (target_info->name != name) {
      c.add(Rule::WRef03, subject,
            "reference is named '" + name + "' but its target is named '" + target_info->name +
                "'",
            element_subject(target_info->view, target));
    }
  }

  if (!has_equivalence_link(c.index, id)) {
    c.add(Rule::WRef04, subject,
          std::string(wanted) + " reference '" + id + "' has no equivalence link");
  }
}

void check_content(Collector& c, View view, const ProcessContent& content,
                   std::vector<ElementId>& containment_path) {
  for (const Gateway& g : content.gateways) gateway_rules(c, view, g);

  for (const ActivityRef& r : content.activity_refs) {
    reference_rules(c, view, r.id, r.name, r.target, true);
  }
  for (const SignalRef& r : content.signal_refs) {
    reference_rules(c, view, r.id, r.name, r.target, false);
  }

  for (const Activity& a : content.activities) {
    if (a.declared_degrees) {
      DegreeVector computed = c.index.degrees(a.id);
      if (!(*a.declared_degrees == computed)) {
        c.add(Rule::LAct01, element_subject(view, a.id),
              "declared degrees do not match the computed ones");
      }
    }
    if (a.subprocess) {
      if (std::find(containment_path.begin(), containment_path.end(), a.id) !=
          containment_path.end()) {
        c.add(Rule::WSub01, element_subject(view, a.id),
              "subprocess of '" + a.id + "' transitively contains itself");
        continue;  // do not recurse into the cycle
      }
      containment_path.push_back(a.id);
      check_content(c, view, *a.subprocess, containment_path);
      containment_path.pop_back();
    }
  }

  bool has_start = false, has_stop = false;
  for (const Event& e : content.events) {
    has_start = has_start || e.exec == EventExec::Start;
    has_stop = has_stop || e.exec == EventExec::Stop;
  }
  if (!has_start || !has_stop) {
    // subject: the diagram's owner when nested, the model otherwise
    std::string subject{view_name(view)};
    if (!containment_path.empty()) subject = element_subject(view, containment_path.back());
    c.add(Rule::LPp01, subject, "diagram has no " +
                                    std::string(!has_start ? "start" : "stop") + " event");
  }
}

void check_links(Collector& c) {
  const LinkModel& links = c.index.spec().link_model;
  if (links.links.empty()) {
    c.add(Rule::WLk07, "links", "the link model is empty");
    return;
  }
  for (const Link& link : links.links) {
    std::string subject = "links/" + link.id;
    const ElementInfo* source = c.index.find(link.source);
    const ElementInfo* target = c.index.find(link.target);
    if (!source || !target) {
      const ElementRef& bad = !source ? link.source : link.target;
      c.add(Rule::WLk01, subject,
            "link endpoint '" + to_string(bad) + "' does not resolve to a linkable element");
      continue;
    }
    LinkLegality verdict = check_link(link, c.index);
    if (!verdict.allowed) {
      Rule rule = rule_from_code(verdict.rule).value_or(Rule::WLk01);
      c.add(rule, subject, verdict.reason, to_string(link.source) + " -> " +
                                               to_string(link.target));
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate_spec(const SpecIndex& index) {
  Collector c{index, {}};

  check_ts(c);
  check_model_minima(c, index.spec().pp_model);
  check_model_minima(c, index.spec().mes_model);

  std::vector<ElementId> path;
  check_content(c, View::Pp, index.spec().pp_model.content, path);
  path.clear();
  check_content(c, View::Mes, index.spec().mes_model.content, path);

  check_links(c);

  std::sort(c.out.begin(), c.out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    auto key = [](const Diagnostic& d) {
      return std::tuple(static_cast<int>(d.severity()), rule_code(d.rule), d.subject, d.message);
    };
    return key(a) < key(b);
  });
  return c.out;
}

std::vector<Diagnostic> validate_spec(const MesSpec& spec) {
  SpecIndex index(spec);
  return validate_spec(index);
}

std::vector<Diagnostic> check_gateway(const ElementId& gateway, const SpecIndex& index) {
  const ElementInfo* info = index.find(gateway);
  if (!info || info->kind != ElementKind::Gateway) {
    throw NotFoundError("no gateway with id '" + gateway + "'");
  }
  Collector c{index, {}};
  gateway_rules(c, info->view, *info->gateway);
  return std::move(c.out);
}

std::vector<Diagnostic> check_references(View model, const SpecIndex& index) {
  const ProcessModel& pm = model == View::Mes ? index.spec().mes_model : index.spec().pp_model;
  Collector c{index, {}};

  struct Walker {
    Collector& c;
    View view;
    void walk(const ProcessContent& content) {
      for (const ActivityRef& r : content.activity_refs) {
        reference_rules(c, view, r.id, r.name, r.target, true);
      }
      for (const SignalRef& r : content.signal_refs) {
        reference_rules(c, view, r.id, r.name, r.target, false);
      }
      for (const Activity& a : content.activities) {
        if (a.subprocess) walk(*a.subprocess);
      }
    }
  } walker{c, model};
  walker.walk(pm.content);
  return std::move(c.out);
}

std::string render_text(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    std::string severity{severity_name(d.severity())};
    std::transform(severity.begin(), severity.end(), severity.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    out += severity;
    out += ' ';
    out += rule_code(d.rule);
    out += ' ';
    out += d.subject;
    out += ": ";
    out += d.message;
    if (!d.related.empty()) {
      out += " [";
      out += d.related;
      out += ']';
    }
    out += '\n';
  }
  return out;
}

std::string render_structured(const std::vector<Diagnostic>& diagnostics) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Diagnostic& d : diagnostics) {
    nlohmann::ordered_json item;
    item["rule"] = std::string(rule_code(d.rule));
    item["severity"] = std::string(severity_name(d.severity()));
    item["subject"] = d.subject;
    item["message"] = d.message;
    if (d.related.empty()) {
      item["related"] = nullptr;
    } else {
      item["related"] = d.related;
    }
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

Severity worst_severity(const std::vector<Diagnostic>& diagnostics, bool* any) {
  if (any) *any = !diagnostics.empty();
  Severity worst = Severity::Lint;
  for (const Diagnostic& d : diagnostics) {
    if (static_cast<int>(d.severity()) < static_cast<int>(worst)) worst = d.severity();
  }
  return worst;
}

}  // namespace mesml
