#include "mesml/model.hpp"

#include <algorithm>

namespace mesml {

std::array<ElementKind, kElementKindCount> all_element_kinds() {
  return {ElementKind::Activity,     ElementKind::Event,       ElementKind::Gateway,
          ElementKind::ActivityRef,  ElementKind::SignalRef,   ElementKind::DataObject,
          ElementKind::Pool,         ElementKind::Lane,        ElementKind::Group,
          ElementKind::TextAnnotation, ElementKind::SequenceFlow, ElementKind::MessageFlow,
          ElementKind::DataFlow,     ElementKind::Association, ElementKind::Plant,
          ElementKind::Area,         ElementKind::Unit,        ElementKind::Signal,
          ElementKind::UserDefinedLayer};
}

std::string_view view_name(View view) {
  switch (view) {
    case View::Mes: return "mes";
    case View::Pp: return "pp";
    case View::Ts: return "ts";
  }
  return "?";
}

std::optional<View> view_from_name(std::string_view name) {
  if (name == "mes") return View::Mes;
  if (name == "pp") return View::Pp;
  if (name == "ts") return View::Ts;
  return std::nullopt;
}

std::string_view kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::Activity: return "activity";
    case ElementKind::Event: return "event";
    case ElementKind::Gateway: return "gateway";
    case ElementKind::ActivityRef: return "activity_ref";
    case ElementKind::SignalRef: return "signal_ref";
    case ElementKind::DataObject: return "data_object";
    case ElementKind::Pool: return "pool";
    case ElementKind::Lane: return "lane";
    case ElementKind::Group: return "group";
    case ElementKind::TextAnnotation: return "annotation";
    case ElementKind::SequenceFlow: return "sequence_flow";
    case ElementKind::MessageFlow: return "message_flow";
    case ElementKind::DataFlow: return "data_flow";
    case ElementKind::Association: return "association";
    case ElementKind::Plant: return "plant";
    case ElementKind::Area: return "area";
    case ElementKind::Unit: return "unit";
    case ElementKind::Signal: return "signal";
    case ElementKind::UserDefinedLayer: return "udl";
  }
  return "?";
}

std::string to_string(const ElementRef& ref) {
  std::string out{view_name(ref.view)};
  out += ':';
  out += ref.id;
  return out;
}

std::string_view keyword(ExecType v) {
  switch (v) {
    case ExecType::Undefined: return "undefined";
    case ExecType::Manual: return "manual";
    case ExecType::Automatic: return "automatic";
  }
  return "?";
}

std::string_view keyword(Repetition v) {
  switch (v) {
    case Repetition::None: return "none";
    case Repetition::Sequential: return "sequential";
    case Repetition::Parallel: return "parallel";
  }
  return "?";
}

std::string_view keyword(ReqStatus v) {
  switch (v) {
    case ReqStatus::ToImplement: return "to_implement";
    case ReqStatus::Implemented: return "implemented";
    case ReqStatus::Excluded: return "excluded";
  }
  return "?";
}

std::string_view keyword(EventExec v) {
  switch (v) {
    case EventExec::Start: return "start";
    case EventExec::Stop: return "stop";
    case EventExec::IntermediateInterrupting: return "intermediate_interrupting";
    case EventExec::IntermediateNonInterrupting: return "intermediate_non_interrupting";
  }
  return "?";
}

std::string_view keyword(EventBehavior v) {
  switch (v) {
    case EventBehavior::Timer: return "timer";
    case EventBehavior::Error: return "error";
    case EventBehavior::Link: return "link";
  }
  return "?";
}

std::string_view keyword(GatewayExec v) {
  switch (v) {
    case GatewayExec::Exclusive: return "exclusive";
    case GatewayExec::Inclusive: return "inclusive";
    case GatewayExec::Parallel: return "parallel";
  }
  return "?";
}

std::string_view keyword(GatewayBehavior v) {
  switch (v) {
    case GatewayBehavior::Split: return "split";
    case GatewayBehavior::Merge: return "merge";
  }
  return "?";
}

std::string_view keyword(DataObjectKind v) {
  switch (v) {
    case DataObjectKind::Single: return "single";
    case DataObjectKind::Multi: return "multi";
    case DataObjectKind::Store: return "store";
  }
  return "?";
}

std::string_view keyword(FlowKind v) {
  switch (v) {
    case FlowKind::Sequence: return "sequence";
    case FlowKind::Message: return "message";
    case FlowKind::Data: return "data";
    case FlowKind::Association: return "association";
  }
  return "?";
}

std::string_view keyword(TsKind v) {
  switch (v) {
    case TsKind::Plant: return "plant";
    case TsKind::Area: return "area";
    case TsKind::Unit: return "unit";
    case TsKind::Signal: return "signal";
    case TsKind::UserDefinedLayer: return "udl";
  }
  return "?";
}

std::string_view keyword(LinkType v) {
  switch (v) {
    case LinkType::DataTransfer: return "data_transfer";
    case LinkType::Equivalence: return "equivalence";
    case LinkType::Deployment: return "deployment";
  }
  return "?";
}

std::optional<ExecType> parse_exec_type(std::string_view s) {
  if (s == "undefined") return ExecType::Undefined;
  if (s == "manual") return ExecType::Manual;
  if (s == "automatic") return ExecType::Automatic;
  return std::nullopt;
}

std::optional<Repetition> parse_repetition(std::string_view s) {
  if (s == "none") return Repetition::None;
  if (s == "sequential") return Repetition::Sequential;
  if (s == "parallel") return Repetition::Parallel;
  return std::nullopt;
}

std::optional<ReqStatus> parse_req_status(std::string_view s) {
  if (s == "to_implement") return ReqStatus::ToImplement;
  if (s == "implemented") return ReqStatus::Implemented;
  if (s == "excluded") return ReqStatus::Excluded;
  return std::nullopt;
}

std::optional<EventExec> parse_event_exec(std::string_view s) {
  if (s == "start") return EventExec::Start;
  if (s == "stop" || s == "end") return EventExec::Stop;
  if (s == "intermediate_interrupting") return EventExec::IntermediateInterrupting;
  if (s == "intermediate_non_interrupting") return EventExec::IntermediateNonInterrupting;
  return std::nullopt;
}

std::optional<EventBehavior> parse_event_behavior(std::string_view s) {
  if (s == "timer") return EventBehavior::Timer;
  if (s == "error") return EventBehavior::Error;
  if (s == "link") return EventBehavior::Link;
  return std::nullopt;
}

std::optional<GatewayExec> parse_gateway_exec(std::string_view s) {
  if (s == "exclusive" || s == "exclusiv") return GatewayExec::Exclusive;
  if (s == "inclusive" || s == "inclusiv") return GatewayExec::Inclusive;
  if (s == "parallel") return GatewayExec::Parallel;
  return std::nullopt;
}

std::optional<GatewayBehavior> parse_gateway_behavior(std::string_view s) {
  if (s == "split") return GatewayBehavior::Split;
  if (s == "merge") return GatewayBehavior::Merge;
  return std::nullopt;
}

std::optional<DataObjectKind> parse_data_object_kind(std::string_view s) {
  if (s == "single") return DataObjectKind::Single;
  if (s == "multi") return DataObjectKind::Multi;
  if (s == "store") return DataObjectKind::Store;
  return std::nullopt;
}

std::optional<FlowKind> parse_flow_kind(std::string_view s) {
  if (s == "sequence") return FlowKind::Sequence;
  if (s == "message") return FlowKind::Message;
  if (s == "data") return FlowKind::Data;
  if (s == "association") return FlowKind::Association;
  return std::nullopt;
}

std::optional<LinkType> parse_link_type(std::string_view s) {
  if (s == "data_transfer") return LinkType::DataTransfer;
  if (s == "equivalence") return LinkType::Equivalence;
  if (s == "deployment") return LinkType::Deployment;
  return std::nullopt;
}

Connector Connector::from_name(std::string_view name) {
  static constexpr std::string_view canonical[] = {"OPC", "File", "Database", "WebService"};
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (std::string_view c : canonical) {
    std::string want(c);
    std::transform(want.begin(), want.end(), want.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lowered == want) return Connector{true, std::string(c)};
  }
  return Connector{false, std::string(name)};
}

namespace {

template <typename T>
void sort_by_id(std::vector<T>& items) {
  std::sort(items.begin(), items.end(), [](const T& a, const T& b) { return a.id < b.id; });
}

void normalize_ts(TsNode& node) {
  sort_by_id(node.children);
  std::sort(node.attrs.begin(), node.attrs.end(),
            [](const SignalAttr& a, const SignalAttr& b) { return a.key < b.key; });
  for (TsNode& child : node.children) normalize_ts(child);
}

}  // namespace

void normalize(ProcessContent& content) {
  sort_by_id(content.activities);
  sort_by_id(content.events);
  sort_by_id(content.gateways);
  sort_by_id(content.activity_refs);
  sort_by_id(content.signal_refs);
  sort_by_id(content.data_objects);
  sort_by_id(content.flows);
  sort_by_id(content.annotations);
  sort_by_id(content.groups);
  for (Group& g : content.groups) std::sort(g.members.begin(), g.members.end());
  for (Activity& a : content.activities) {
    if (a.subprocess) normalize(*a.subprocess);
  }
}

void normalize(MesSpec& spec) {
  normalize_ts(spec.ts_model.plant);
  normalize(spec.pp_model.content);
  normalize(spec.mes_model.content);
  sort_by_id(spec.mes_model.pools);
  for (Pool& p : spec.mes_model.pools) sort_by_id(p.lanes);
  sort_by_id(spec.pp_model.pools);
  sort_by_id(spec.link_model.links);
}

}  // namespace mesml
