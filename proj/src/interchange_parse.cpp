#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mesml/index.hpp"
#include "mesml/interchange.hpp"

namespace mesml {

std::string_view category_name(ParseErrorCategory category) {
  switch (category) {
    case ParseErrorCategory::Syntax: return "syntax";
    case ParseErrorCategory::UnknownKey: return "unknown_key";
    case ParseErrorCategory::BadEnum: return "bad_enum";
    case ParseErrorCategory::DuplicateId: return "duplicate_id";
    case ParseErrorCategory::DanglingRef: return "dangling_ref";
    case ParseErrorCategory::MissingSubmodel: return "missing_submodel";
  }
  return "?";
}

std::string render_parse_errors(const std::vector<ParseError>& errors) {
  std::string out;
  for (const ParseError& e : errors) {
    out += e.span.file;
    out += ':';
    out += std::to_string(e.span.line);
    out += ':';
    out += std::to_string(e.span.column);
    out += ": ";
    out += category_name(e.category);
    if (e.category == ParseErrorCategory::MissingSubmodel) out += " (W-SPEC-01)";
    out += ": ";
    out += e.message;
    out += '\n';
  }
  return out;
}

namespace {

struct Pair {
  std::string key;
  std::string value;
  bool quoted = false;
  SourceSpan span;
};

struct Line {
  int number = 0;
  int indent = 0;       // leading spaces
  std::string record;   // first bare word; section openers keep the trailing ':'
  SourceSpan record_span;
  std::vector<Pair> pairs;
};

bool bare_id_ok(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
          c == '/')) {
      return false;
    }
  }
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  ParseResult run() {
    split_lines();
    for (const Line& line : lines_) handle_line(line);
    finish_sections();
    if (errors_.empty()) resolve();
    if (!errors_.empty()) {
      std::stable_sort(errors_.begin(), errors_.end(), [](const ParseError& a, const ParseError& b) {
        return std::tie(a.span.line, a.span.column) < std::tie(b.span.line, b.span.column);
      });
      return ParseResult{std::nullopt, std::move(errors_)};
    }
    normalize(spec_);
    return ParseResult{std::move(spec_), {}};
  }

 private:
  enum class Ctx { Root, TsSection, TsNodeCtx, Diagram, ActivityCtx, PoolCtx, LinksSection };

  struct Frame {
    Ctx ctx;
    int child_level;       // indentation level of this frame's children
    TsNode* ts_node = nullptr;
    ProcessContent* content = nullptr;
    View view = View::Pp;
    bool top_level = false;  // Diagram frames: top level of a model
    Activity* activity = nullptr;
    Pool* pool = nullptr;
  };

  // ---- lexing ------------------------------------------------------------

  void split_lines() {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      std::string_view raw =
          eol == std::string_view::npos ? text_.substr(pos) : text_.substr(pos, eol - pos);
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      lex_line(raw, number);
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
    }
  }

  void lex_line(std::string_view raw, int number) {
    std::size_t i = 0;
    while (i < raw.size() && raw[i] == ' ') ++i;
    if (i < raw.size() && raw[i] == '\t') {
      error(ParseErrorCategory::Syntax, span(number, static_cast<int>(i) + 1, 1),
            "tab characters are not allowed in indentation");
      return;
    }
    if (i >= raw.size() || raw[i] == '#') return;  // blank or comment

    Line line;
    line.number = number;
    line.indent = static_cast<int>(i);

    // first token: record type or section opener
    std::size_t start = i;
    while (i < raw.size() && raw[i] != ' ') ++i;
    line.record = std::string(raw.substr(start, i - start));
    line.record_span = span(number, static_cast<int>(start) + 1, static_cast<int>(i - start));

    // the document header carries the version as a bare token
    if (line.indent == 0 && line.record == "mesml") {
      while (i < raw.size() && raw[i] == ' ') ++i;
      std::size_t vstart = i;
      while (i < raw.size() && raw[i] != ' ') ++i;
      std::string version(raw.substr(vstart, i - vstart));
      while (i < raw.size() && raw[i] == ' ') ++i;
      if (version != "1" || i < raw.size()) {
        error(ParseErrorCategory::Syntax, line.record_span,
              "unsupported header, expected 'mesml 1'");
        return;
      }
      lines_.push_back(std::move(line));
      return;
    }

    while (i < raw.size()) {
      while (i < raw.size() && raw[i] == ' ') ++i;
      if (i >= raw.size()) break;
      std::size_t key_start = i;
      while (i < raw.size() && raw[i] != '=' && raw[i] != ' ') ++i;
      if (i >= raw.size() || raw[i] != '=') {
        error(ParseErrorCategory::Syntax,
              span(number, static_cast<int>(key_start) + 1, static_cast<int>(i - key_start)),
              "expected key=value, got '" + std::string(raw.substr(key_start, i - key_start)) +
                  "'");
        return;
      }
      Pair pair;
      pair.key = std::string(raw.substr(key_start, i - key_start));
      ++i;  // '='
      if (i < raw.size() && raw[i] == '"') {
        ++i;
        std::string value;
        bool closed = false;
        while (i < raw.size()) {
          char c = raw[i];
          if (c == '\\') {
            if (i + 1 >= raw.size()) break;
            char esc = raw[i + 1];
            if (esc == 'n') value += '\n';
            else if (esc == '"') value += '"';
            else if (esc == '\\') value += '\\';
            else {
              error(ParseErrorCategory::Syntax, span(number, static_cast<int>(i) + 1, 2),
                    std::string("unknown escape '\\") + esc + "'");
            }
            i += 2;
            continue;
          }
          if (c == '"') {
            closed = true;
            ++i;
            break;
          }
          value += c;
          ++i;
        }
        if (!closed) {
          error(ParseErrorCategory::Syntax, span(number, static_cast<int>(key_start) + 1, 1),
                "unterminated string");
          return;
        }
        pair.value = std::move(value);
        pair.quoted = true;
      } else {
        std::size_t value_start = i;
        while (i < raw.size() && raw[i] != ' ') ++i;
        pair.value = std::string(raw.substr(value_start, i - value_start));
        pair.quoted = false;
      }
      pair.span = span(number, static_cast<int>(key_start) + 1,
                       static_cast<int>(i - key_start));
      line.pairs.push_back(std::move(pair));
    }
    lines_.push_back(std::move(line));
  }

  SourceSpan span(int line, int column, int length) const {
    return SourceSpan{file_, line, column, length};
  }

  void error(ParseErrorCategory category, SourceSpan where, std::string message) {
    errors_.push_back(ParseError{std::move(where), category, std::move(message)});
  }

  // ---- record helpers ----------------------------------------------------

  struct Record {
    const Line* line;
    Parser* parser;
    std::set<std::string> consumed;

    const Pair* find(const std::string& key) const {
      for (const Pair& p : line->pairs) {
        if (p.key == key) return &p;
      }
      return nullptr;
    }

    std::optional<std::string> required(const std::string& key, bool non_empty = true) {
      consumed.insert(key);
      const Pair* p = find(key);
      if (!p) {
        parser->error(ParseErrorCategory::Syntax, line->record_span,
                      "record '" + line->record + "' is missing required key '" + key + "'");
        return std::nullopt;
      }
      if (non_empty && p->value.empty()) {
        parser->error(ParseErrorCategory::Syntax, p->span, "'" + key + "' must be non-empty");
        return std::nullopt;
      }
      return p->value;
    }

    std::optional<std::string> optional(const std::string& key) {
      consumed.insert(key);
      const Pair* p = find(key);
      if (!p) return std::nullopt;
      return p->value;
    }

    const Pair* pair_of(const std::string& key) const { return find(key); }

    // flag unknown and duplicated keys once all known ones were pulled
    void finish() {
      std::set<std::string> seen;
      for (const Pair& p : line->pairs) {
        if (!consumed.count(p.key)) {
          parser->error(ParseErrorCategory::UnknownKey, p.span,
                        "unknown key '" + p.key + "' on record '" + line->record + "'");
        }
        if (!seen.insert(p.key).second) {
          parser->error(ParseErrorCategory::Syntax, p.span, "duplicate key '" + p.key + "'");
        }
      }
    }
  };

  std::optional<ElementId> take_id(Record& r) {
    auto id = r.required("id");
    if (!id) return std::nullopt;
    if (!bare_id_ok(*id)) {
      error(ParseErrorCategory::Syntax, r.pair_of("id")->span,
            "id '" + *id + "' must match [A-Za-z0-9_./-]+");
    }
    auto [it, inserted] = first_seen_.emplace(*id, r.line->record_span);
    if (!inserted) {
      error(ParseErrorCategory::DuplicateId, r.pair_of("id")->span,
            "id '" + *id + "' already declared at line " + std::to_string(it->second.line));
    }
    return id;
  }

  template <typename T>
  std::optional<T> take_enum(Record& r, const std::string& key,
                             std::optional<T> (*parse)(std::string_view), bool required) {
    const Pair* p = nullptr;
    if (required) {
      auto v = r.required(key);
      if (!v) return std::nullopt;
      p = r.pair_of(key);
    } else {
      auto v = r.optional(key);
      if (!v) return std::nullopt;
      p = r.pair_of(key);
    }
    std::optional<T> parsed = parse(p->value);
    if (!parsed) {
      error(ParseErrorCategory::BadEnum, p->span,
            "'" + p->value + "' is not a valid value for '" + key + "'");
    }
    return parsed;
  }

  std::optional<int> take_int(Record& r, const std::string& key, int fallback) {
    auto v = r.optional(key);
    if (!v) return fallback;
    const Pair* p = r.pair_of(key);
    try {
      std::size_t used = 0;
      int parsed = std::stoi(*v, &used);
      if (used != v->size() || parsed < 0) throw std::invalid_argument("range");
      return parsed;
    } catch (const std::exception&) {
      error(ParseErrorCategory::Syntax, p->span, "'" + key + "' must be a non-negative integer");
      return std::nullopt;
    }
  }

  // ---- structure ----------------------------------------------------------

  void handle_line(const Line& line) {
    if (line.indent % 2 != 0) {
      error(ParseErrorCategory::Syntax, line.record_span, "indentation must be a multiple of two");
      return;
    }
    int level = line.indent / 2;

    if (stack_.empty()) stack_.push_back(Frame{Ctx::Root, 0});
    while (stack_.size() > 1 && stack_.back().child_level > level) stack_.pop_back();
    if (stack_.back().child_level != level) {
      error(ParseErrorCategory::Syntax, line.record_span, "unexpected indentation");
      return;
    }

    dispatch(line, stack_.back());
  }

  void dispatch(const Line& line, Frame frame) {
    switch (frame.ctx) {
      case Ctx::Root: root_record(line); break;
      case Ctx::TsSection: ts_record(line, nullptr, 1); break;
      case Ctx::TsNodeCtx: ts_record(line, frame.ts_node, frame.child_level); break;
      case Ctx::Diagram: diagram_record(line, frame); break;
      case Ctx::ActivityCtx: activity_child(line, frame); break;
      case Ctx::PoolCtx: pool_child(line, frame); break;
      case Ctx::LinksSection: link_record(line); break;
    }
  }

  void root_record(const Line& line) {
    if (line.record == "mesml") {
      if (header_seen_ || !sections_seen_.empty()) {
        error(ParseErrorCategory::Syntax, line.record_span, "header must come first");
      }
      header_seen_ = true;
      return;
    }
    static const std::map<std::string, int> sections = {{"ts:", 0}, {"pp:", 1}, {"mes:", 2},
                                                        {"links:", 3}};
    auto it = sections.find(line.record);
    if (it == sections.end()) {
      error(ParseErrorCategory::Syntax, line.record_span,
            "expected one of ts:, pp:, mes:, links:, got '" + line.record + "'");
      return;
    }
    if (!line.pairs.empty()) {
      error(ParseErrorCategory::Syntax, line.record_span, "section openers take no attributes");
    }
    std::string name = line.record.substr(0, line.record.size() - 1);
    if (sections_seen_.count(name)) {
      error(ParseErrorCategory::MissingSubmodel, line.record_span,
            "section '" + name + "' declared more than once; each sub-model has cardinality 1");
      return;
    }
    sections_seen_.insert(name);
    switch (it->second) {
      case 0: stack_.push_back(Frame{Ctx::TsSection, 1}); break;
      case 1: {
        Frame f{Ctx::Diagram, 1};
        f.content = &spec_.pp_model.content;
        f.view = View::Pp;
        f.top_level = true;
        stack_.push_back(f);
        break;
      }
      case 2: {
        Frame f{Ctx::Diagram, 1};
        f.content = &spec_.mes_model.content;
        f.view = View::Mes;
        f.top_level = true;
        stack_.push_back(f);
        break;
      }
      case 3: stack_.push_back(Frame{Ctx::LinksSection, 1}); break;
    }
  }

  void ts_record(const Line& line, TsNode* parent, int level) {
    Record r{&line, this, {}};
    if (line.record == "attr") {
      if (!parent || parent->kind != TsKind::Signal) {
        error(ParseErrorCategory::Syntax, line.record_span,
              "attr records are only allowed under signals");
        return;
      }
      auto key = r.required("key");
      auto value = r.required("value", /*non_empty=*/false);
      r.finish();
      if (key && value) parent->attrs.push_back(SignalAttr{*key, *value});
      return;
    }

    TsKind kind;
    if (line.record == "plant") kind = TsKind::Plant;
    else if (line.record == "area") kind = TsKind::Area;
    else if (line.record == "unit") kind = TsKind::Unit;
    else if (line.record == "signal") kind = TsKind::Signal;
    else if (line.record == "udl") kind = TsKind::UserDefinedLayer;
    else {
      error(ParseErrorCategory::Syntax, line.record_span,
            "unknown record '" + line.record + "' in the ts section");
      return;
    }

    if (!parent && kind != TsKind::Plant) {
      error(ParseErrorCategory::Syntax, line.record_span,
            "the ts section starts with a single plant record");
      return;
    }
    if (parent && kind == TsKind::Plant) {
      error(ParseErrorCategory::Syntax, line.record_span, "plant appears only at the root");
      return;
    }
    if (!parent && plant_seen_) {
      error(ParseErrorCategory::Syntax, line.record_span, "only one plant is allowed");
      return;
    }
    if (parent && parent->kind == TsKind::Signal) {
      error(ParseErrorCategory::Syntax, line.record_span, "signals cannot contain child nodes");
      return;
    }

    auto id = take_id(r);
    auto name = r.required("name");
    r.finish();
    if (!id || !name) return;

    TsNode node;
    node.id = *id;
    node.kind = kind;
    node.name = *name;

    TsNode* stored;
    if (!parent) {
      plant_seen_ = true;
      spec_.ts_model.plant = std::move(node);
      stored = &spec_.ts_model.plant;
    } else {
      parent->children.push_back(std::move(node));
      stored = &parent->children.back();
    }
    Frame f{Ctx::TsNodeCtx, level + 1};
    f.ts_node = stored;
    stack_.push_back(f);
  }

  void diagram_record(const Line& line, const Frame& frame) {
    Record r{&line, this, {}};
    ProcessContent& content = *frame.content;
    View view = frame.view;

    if (line.record == "activity") {
      auto id = take_id(r);
      auto name = r.required("name");
      auto exec = take_enum<ExecType>(r, "exec", parse_exec_type, false);
      auto repetition = take_enum<Repetition>(r, "repetition", parse_repetition, false);
      auto status = take_enum<ReqStatus>(r, "status", parse_req_status, false);
      auto swimlane = r.optional("swimlane");
      auto degrees = r.optional("degrees");
      r.finish();
      if (!id || !name) return;

      Activity a;
      a.id = *id;
      a.name = *name;
      a.exec = exec.value_or(ExecType::Undefined);
      a.repetition = repetition.value_or(Repetition::None);
      a.status = status.value_or(ReqStatus::ToImplement);
      if (swimlane) {
        if (view != View::Mes) {
          error(ParseErrorCategory::Syntax, r.pair_of("swimlane")->span,
                "swimlanes exist only in the mes model");
        } else {
          a.swimlane = *swimlane;
          pending_.push_back(Pending{Pending::Swimlane, r.pair_of("swimlane")->span, *id,
                                     *swimlane, view, nullptr});
        }
      }
      if (degrees) {
        std::istringstream in(*degrees);
        DegreeVector d;
        if (in >> d.in_sf >> d.out_sf >> d.in_mf >> d.out_mf >> d.in_df >> d.out_df &&
            in.eof() && d.in_sf >= 0 && d.out_sf >= 0 && d.in_mf >= 0 && d.out_mf >= 0 &&
            d.in_df >= 0 && d.out_df >= 0) {
          a.declared_degrees = d;
        } else {
          error(ParseErrorCategory::Syntax, r.pair_of("degrees")->span,
                "degrees must be six non-negative integers \"isf osf imf omf idf odf\"");
        }
      }
      content.activities.push_back(std::move(a));
      Frame f{Ctx::ActivityCtx, frame.child_level + 1};
      f.activity = &content.activities.back();
      f.view = view;
      stack_.push_back(f);
      return;
    }

    if (line.record == "event") {
      auto id = take_id(r);
      auto name = r.optional("name");
      auto exec = take_enum<EventExec>(r, "exec", parse_event_exec, true);
      auto behavior = take_enum<EventBehavior>(r, "behavior", parse_event_behavior, false);
      r.finish();
      if (!id || !exec) return;
      Event e;
      e.id = *id;
      e.name = name.value_or("");
      e.exec = *exec;
      e.behavior = behavior;
      content.events.push_back(std::move(e));
      return;
    }

    if (line.record == "gateway") {
      auto id = take_id(r);
      auto exec = take_enum<GatewayExec>(r, "exec", parse_gateway_exec, true);
      auto behavior = take_enum<GatewayBehavior>(r, "behavior", parse_gateway_behavior, true);
      r.finish();
      if (!id || !exec || !behavior) return;
      content.gateways.push_back(Gateway{*id, *exec, *behavior});
      return;
    }

    if (line.record == "activity_ref" || line.record == "signal_ref") {
      auto id = take_id(r);
      auto name = r.required("name");
      auto target = r.required("target");
      r.finish();
      if (!id || !name || !target) return;
      pending_.push_back(
          Pending{Pending::RefTarget, r.pair_of("target")->span, *id, *target, view, nullptr});
      if (line.record == "activity_ref") {
        content.activity_refs.push_back(ActivityRef{*id, *name, *target});
      } else {
        content.signal_refs.push_back(SignalRef{*id, *name, *target});
      }
      return;
    }

    if (line.record == "data_object") {
      auto id = take_id(r);
      auto name = r.required("name");
      auto kind = take_enum<DataObjectKind>(r, "kind", parse_data_object_kind, true);
      r.finish();
      if (!id || !name || !kind) return;
      content.data_objects.push_back(DataObject{*id, *name, *kind});
      return;
    }

    if (line.record == "flow") {
      auto id = take_id(r);
      auto kind = take_enum<FlowKind>(r, "kind", parse_flow_kind, true);
      auto source = r.required("source");
      auto target = r.required("target");
      r.finish();
      if (!id || !kind || !source || !target) return;
      if (*kind == FlowKind::Sequence && *source == *target) {
        error(ParseErrorCategory::Syntax, r.pair_of("target")->span,
              "a sequence flow cannot connect an element to itself");
        return;
      }
      pending_.push_back(
          Pending{Pending::FlowEndpoint, r.pair_of("source")->span, *id, *source, view, &content});
      pending_.push_back(
          Pending{Pending::FlowEndpoint, r.pair_of("target")->span, *id, *target, view, &content});
      content.flows.push_back(ConnectingObject{*id, *kind, *source, *target});
      return;
    }

    if (line.record == "annotation") {
      auto id = take_id(r);
      auto text = r.required("text", /*non_empty=*/false);
      r.finish();
      if (!id || !text) return;
      content.annotations.push_back(TextAnnotation{*id, *text});
      return;
    }

    if (line.record == "group") {
      auto id = take_id(r);
      auto members = r.required("members");
      r.finish();
      if (!id || !members) return;
      Group g;
      g.id = *id;
      std::istringstream in(*members);
      std::string member;
      while (in >> member) {
        pending_.push_back(
            Pending{Pending::GroupMember, r.pair_of("members")->span, *id, member, view, nullptr});
        g.members.push_back(std::move(member));
      }
      if (g.members.empty()) {
        error(ParseErrorCategory::Syntax, r.pair_of("members")->span,
              "a group needs at least one member");
        return;
      }
      content.groups.push_back(std::move(g));
      return;
    }

    if (line.record == "pool") {
      if (view != View::Mes || !frame.top_level) {
        error(ParseErrorCategory::Syntax, line.record_span,
              "pools are only allowed at the top level of the mes section");
        return;
      }
      auto id = take_id(r);
      auto name = r.required("name");
      auto rank = take_int(r, "rank", 0);
      r.finish();
      if (!id || !name || !rank) return;
      spec_.mes_model.pools.push_back(Pool{*id, *name, *rank, {}});
      Frame f{Ctx::PoolCtx, frame.child_level + 1};
      f.pool = &spec_.mes_model.pools.back();
      stack_.push_back(f);
      return;
    }

    error(ParseErrorCategory::Syntax, line.record_span,
          "unknown record '" + line.record + "' in a process model");
  }

  void activity_child(const Line& line, const Frame& frame) {
    if (line.record != "subprocess:") {
      error(ParseErrorCategory::Syntax, line.record_span,
            "only a subprocess: block may be nested under an activity");
      return;
    }
    if (!line.pairs.empty()) {
      error(ParseErrorCategory::Syntax, line.record_span, "subprocess: takes no attributes");
      return;
    }
    if (frame.activity->subprocess) {
      error(ParseErrorCategory::Syntax, line.record_span,
            "an activity has at most one subprocess block");
      return;
    }
    frame.activity->subprocess = std::make_unique<ProcessContent>();
    Frame f{Ctx::Diagram, frame.child_level + 1};
    f.content = frame.activity->subprocess.get();
    f.view = frame.view;
    f.top_level = false;
    stack_.push_back(f);
  }

  void pool_child(const Line& line, const Frame& frame) {
    if (line.record != "lane") {
      error(ParseErrorCategory::Syntax, line.record_span,
            "only lane records may be nested under a pool");
      return;
    }
    Record r{&line, this, {}};
    auto id = take_id(r);
    auto name = r.required("name");
    auto rank = take_int(r, "rank", 0);
    r.finish();
    if (!id || !name || !rank) return;
    frame.pool->lanes.push_back(Lane{*id, *name, *rank});
  }

  void link_record(const Line& line) {
    if (line.record != "link") {
      error(ParseErrorCategory::Syntax, line.record_span,
            "unknown record '" + line.record + "' in the links section");
      return;
    }
    Record r{&line, this, {}};
    auto id = take_id(r);
    auto type = take_enum<LinkType>(r, "type", parse_link_type, true);
    auto connector = r.optional("connector");
    auto source = r.required("source");
    auto target = r.required("target");
    r.finish();
    if (!id || !type || !source || !target) return;

    Link link;
    link.id = *id;
    link.type = *type;
    if (connector) {
      if (connector->empty()) {
        error(ParseErrorCategory::Syntax, r.pair_of("connector")->span,
              "connector names must be non-empty");
      } else {
        link.connector = Connector::from_name(*connector);
      }
    }
    auto parse_endpoint = [&](const std::string& value, const SourceSpan& where)
        -> std::optional<ElementRef> {
      std::size_t colon = value.find(':');
      if (colon == std::string::npos) {
        error(ParseErrorCategory::Syntax, where,
              "link endpoints are written view:id, got '" + value + "'");
        return std::nullopt;
      }
      auto view = view_from_name(value.substr(0, colon));
      if (!view) {
        error(ParseErrorCategory::BadEnum, where,
              "'" + value.substr(0, colon) + "' is not a view (ts, pp, mes)");
        return std::nullopt;
      }
      return ElementRef{*view, value.substr(colon + 1)};
    };
    auto src = parse_endpoint(*source, r.pair_of("source")->span);
    auto dst = parse_endpoint(*target, r.pair_of("target")->span);
    if (!src || !dst) return;
    link.source = *src;
    link.target = *dst;
    pending_.push_back(Pending{Pending::LinkEndpoint, r.pair_of("source")->span, *id, src->id,
                               src->view, nullptr});
    pending_.push_back(Pending{Pending::LinkEndpoint, r.pair_of("target")->span, *id, dst->id,
                               dst->view, nullptr});
    spec_.link_model.links.push_back(std::move(link));
  }

  void finish_sections() {
    for (const char* name : {"ts", "pp", "mes", "links"}) {
      if (!sections_seen_.count(name)) {
        error(ParseErrorCategory::MissingSubmodel, span(1, 1, 0),
              std::string("document has no '") + name + ":' section");
      }
    }
    if (sections_seen_.count("ts") && !plant_seen_) {
      error(ParseErrorCategory::MissingSubmodel, span(1, 1, 0),
            "the ts section contains no plant");
    }
  }

  // ---- reference resolution -----------------------------------------------

  struct Pending {
    enum What { FlowEndpoint, RefTarget, Swimlane, GroupMember, LinkEndpoint } what;
    SourceSpan where;
    ElementId referer;
    ElementId target;
    View view;
    const ProcessContent* diagram;
  };

  void resolve() {
    SpecIndex index(spec_);
    for (const Pending& p : pending_) {
      const ElementInfo* info = index.find(p.target);
      switch (p.what) {
        case Pending::FlowEndpoint:
          if (!info || info->diagram != p.diagram || info->is_connecting_object()) {
            error(ParseErrorCategory::DanglingRef, p.where,
                  "flow '" + p.referer + "' endpoint '" + p.target +
                      "' is not an element of the same diagram");
          }
          break;
        case Pending::RefTarget:
          if (!info) {
            error(ParseErrorCategory::DanglingRef, p.where,
                  "reference '" + p.referer + "' target '" + p.target + "' does not exist");
          }
          break;
        case Pending::Swimlane:
          if (!info || info->view != View::Mes ||
              (info->kind != ElementKind::Pool && info->kind != ElementKind::Lane)) {
            error(ParseErrorCategory::DanglingRef, p.where,
                  "activity '" + p.referer + "' is assigned to '" + p.target +
                      "', which is not a pool or lane");
          }
          break;
        case Pending::GroupMember:
          if (!info || info->view != p.view || info->is_ts_node()) {
            error(ParseErrorCategory::DanglingRef, p.where,
                  "group '" + p.referer + "' member '" + p.target +
                      "' does not exist in the same model");
          }
          break;
        case Pending::LinkEndpoint:
          if (!info || info->view != p.view) {
            error(ParseErrorCategory::DanglingRef, p.where,
                  "link '" + p.referer + "' endpoint '" + std::string(view_name(p.view)) + ":" +
                      p.target + "' does not resolve");
          }
          break;
      }
    }
  }

  std::string_view text_;
  std::string file_;
  std::vector<Line> lines_;
  std::vector<ParseError> errors_;
  std::vector<Frame> stack_;
  std::vector<Pending> pending_;
  std::unordered_map<ElementId, SourceSpan> first_seen_;
  std::set<std::string> sections_seen_;
  bool header_seen_ = false;
  bool plant_seen_ = false;
  MesSpec spec_;
};

}  // namespace

ParseResult parse_spec(std::string_view document, std::string file) {
  Parser parser(document, std::move(file));
  return parser.run();
}

}  // namespace mesml
