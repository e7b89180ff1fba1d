#pragma once

#include <array>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mesml {

// Element ids are author-supplied strings, unique across one MesSpec.
using ElementId = std::string;

enum class View { Mes, Pp, Ts };

enum class ElementKind {
  Activity,
  Event,
  Gateway,
  ActivityRef,
  SignalRef,
  DataObject,
  Pool,
  Lane,
  Group,
  TextAnnotation,
  SequenceFlow,
  MessageFlow,
  DataFlow,
  Association,
  Plant,
  Area,
  Unit,
  Signal,
  UserDefinedLayer,
};

inline constexpr int kElementKindCount = 19;

std::array<ElementKind, kElementKindCount> all_element_kinds();

/// A view-qualified element id; resolves only if the element lives in that view.
struct ElementRef {
  View view{};
  ElementId id;
  friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

std::string_view view_name(View view);                       // "mes" | "pp" | "ts"
std::optional<View> view_from_name(std::string_view name);
std::string_view kind_name(ElementKind kind);                // "activity", "sequence_flow", ...
std::string to_string(const ElementRef& ref);                // "pp:pp.start"

enum class ExecType { Undefined, Manual, Automatic };
enum class Repetition { None, Sequential, Parallel };
enum class ReqStatus { ToImplement, Implemented, Excluded };
enum class EventExec { Start, Stop, IntermediateInterrupting, IntermediateNonInterrupting };
enum class EventBehavior { Timer, Error, Link };
enum class GatewayExec { Exclusive, Inclusive, Parallel };
enum class GatewayBehavior { Split, Merge };
enum class DataObjectKind { Single, Multi, Store };
enum class FlowKind { Sequence, Message, Data, Association };
enum class TsKind { Plant, Area, Unit, Signal, UserDefinedLayer };
enum class LinkType { DataTransfer, Equivalence, Deployment };

// Canonical interchange keywords. The parse_* helpers also accept the
// documented input aliases (end -> stop, exclusiv -> exclusive, inclusiv -> inclusive).
std::string_view keyword(ExecType v);
std::string_view keyword(Repetition v);
std::string_view keyword(ReqStatus v);
std::string_view keyword(EventExec v);
std::string_view keyword(EventBehavior v);
std::string_view keyword(GatewayExec v);
std::string_view keyword(GatewayBehavior v);
std::string_view keyword(DataObjectKind v);
std::string_view keyword(FlowKind v);
std::string_view keyword(TsKind v);
std::string_view keyword(LinkType v);

std::optional<ExecType> parse_exec_type(std::string_view s);
std::optional<Repetition> parse_repetition(std::string_view s);
std::optional<ReqStatus> parse_req_status(std::string_view s);
std::optional<EventExec> parse_event_exec(std::string_view s);
std::optional<EventBehavior> parse_event_behavior(std::string_view s);
std::optional<GatewayExec> parse_gateway_exec(std::string_view s);
std::optional<GatewayBehavior> parse_gateway_behavior(std::string_view s);
std::optional<DataObjectKind> parse_data_object_kind(std::string_view s);
std::optional<FlowKind> parse_flow_kind(std::string_view s);
std::optional<LinkType> parse_link_type(std::string_view s);

/// Attached connecting objects per kind and direction. Degrees are always
/// derived from the owning diagram's edges, never stored on the element;
/// associations are not counted.
struct DegreeVector {
  int in_sf = 0, out_sf = 0;
  int in_mf = 0, out_mf = 0;
  int in_df = 0, out_df = 0;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

struct ProcessContent;

struct Activity {
  ElementId id;
  std::string name;
  ExecType exec = ExecType::Undefined;
  Repetition repetition = Repetition::None;
  ReqStatus status = ReqStatus::ToImplement;
  std::optional<ElementId> swimlane;             // pool or lane id; MES model only
  std::optional<DegreeVector> declared_degrees;  // author-declared counts, cross-checked by L-ACT-01
  std::unique_ptr<ProcessContent> subprocess;    // nested diagram, same structure as the model content

  Activity();
  Activity(Activity&&) noexcept;
  Activity& operator=(Activity&&) noexcept;
  ~Activity();
  friend bool operator==(const Activity& a, const Activity& b);
};

struct Event {
  ElementId id;
  std::string name;  // may be empty
  EventExec exec = EventExec::Start;
  std::optional<EventBehavior> behavior;
  friend bool operator==(const Event&, const Event&) = default;
};

struct Gateway {
  ElementId id;
  GatewayExec exec = GatewayExec::Exclusive;
  GatewayBehavior behavior = GatewayBehavior::Split;
  friend bool operator==(const Gateway&, const Gateway&) = default;
};

struct ActivityRef {
  ElementId id;
  std::string name;
  ElementId target;  // an Activity in the other process model
  friend bool operator==(const ActivityRef&, const ActivityRef&) = default;
};

struct SignalRef {
  ElementId id;
  std::string name;
  ElementId target;  // a Signal node in the TS model
  friend bool operator==(const SignalRef&, const SignalRef&) = default;
};

struct DataObject {
  ElementId id;
  std::string name;
  DataObjectKind kind = DataObjectKind::Single;
  friend bool operator==(const DataObject&, const DataObject&) = default;
};

/// In-model edge. Source and target always reside in the same diagram;
/// cross-view interaction is expressed only by links.
struct ConnectingObject {
  ElementId id;
  FlowKind kind = FlowKind::Sequence;
  ElementId source;
  ElementId target;
  friend bool operator==(const ConnectingObject&, const ConnectingObject&) = default;
};

struct TextAnnotation {
  ElementId id;
  std::string text;
  friend bool operator==(const TextAnnotation&, const TextAnnotation&) = default;
};

struct Group {
  ElementId id;
  std::vector<ElementId> members;  // non-empty, all within the owning model
  friend bool operator==(const Group&, const Group&) = default;
};

struct Lane {
  ElementId id;
  std::string name;
  int rank = 0;  // vertical position within the pool
  friend bool operator==(const Lane&, const Lane&) = default;
};

struct Pool {
  ElementId id;
  std::string name;
  int rank = 0;  // vertical position, automation-hierarchy level
  std::vector<Lane> lanes;
  friend bool operator==(const Pool&, const Pool&) = default;
};

/// One diagram's worth of elements: the top level of a process model or a
/// subprocess fragment. Fragments are exempt from the top-level minima.
struct ProcessContent {
  std::vector<Activity> activities;
  std::vector<Event> events;
  std::vector<Gateway> gateways;
  std::vector<ActivityRef> activity_refs;
  std::vector<SignalRef> signal_refs;
  std::vector<DataObject> data_objects;
  std::vector<ConnectingObject> flows;
  std::vector<TextAnnotation> annotations;
  std::vector<Group> groups;
  friend bool operator==(const ProcessContent&, const ProcessContent&) = default;
};

inline Activity::Activity() = default;
inline Activity::Activity(Activity&&) noexcept = default;
inline Activity& Activity::operator=(Activity&&) noexcept = default;
inline Activity::~Activity() = default;

inline bool operator==(const Activity& a, const Activity& b) {
  if (a.id != b.id || a.name != b.name || a.exec != b.exec || a.repetition != b.repetition ||
      a.status != b.status || a.swimlane != b.swimlane ||
      a.declared_degrees != b.declared_degrees) {
    return false;
  }
  if (static_cast<bool>(a.subprocess) != static_cast<bool>(b.subprocess)) return false;
  return !a.subprocess || *a.subprocess == *b.subprocess;
}

struct ProcessModel {
  View role = View::Pp;
  ProcessContent content;
  std::vector<Pool> pools;  // role == Mes only; PP models carry no swimlanes
  friend bool operator==(const ProcessModel&, const ProcessModel&) = default;
};

struct SignalAttr {
  std::string key;
  std::string value;
  friend bool operator==(const SignalAttr&, const SignalAttr&) = default;
};

struct TsNode {
  ElementId id;
  TsKind kind = TsKind::Plant;
  std::string name;
  std::vector<TsNode> children;
  std::vector<SignalAttr> attrs;  // kind == Signal only
  friend bool operator==(const TsNode&, const TsNode&) = default;
};

struct TechnicalSystemModel {
  TsNode plant;  // unique root
  friend bool operator==(const TechnicalSystemModel&, const TechnicalSystemModel&) = default;
};

/// Interface type of a data-transfer link. OPC, File, Database and WebService
/// are predefined; everything else is a custom name.
struct Connector {
  bool predefined = false;
  std::string name;
  static Connector from_name(std::string_view name);  // canonicalizes predefined spellings
  friend bool operator==(const Connector&, const Connector&) = default;
};

struct Link {
  ElementId id;
  LinkType type = LinkType::DataTransfer;
  std::optional<Connector> connector;
  ElementRef source;  // alpha: authored start
  ElementRef target;  // beta: authored end
  friend bool operator==(const Link&, const Link&) = default;
};

struct LinkModel {
  std::vector<Link> links;
  friend bool operator==(const LinkModel&, const LinkModel&) = default;
};

struct MesSpec {
  ProcessModel mes_model{View::Mes, {}, {}};
  ProcessModel pp_model{View::Pp, {}, {}};
  TechnicalSystemModel ts_model;
  LinkModel link_model;
  friend bool operator==(const MesSpec&, const MesSpec&) = default;
};

/// Puts the spec into canonical order: every element collection sorted by id
/// (recursively, including TS children and subprocess fragments), signal attrs
/// by key, group members ascending. The parser returns normalized specs;
/// serialize + parse is an exact round trip on normalized specs.
void normalize(MesSpec& spec);
void normalize(ProcessContent& content);

}  // namespace mesml
