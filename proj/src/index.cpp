#include "mesml/index.hpp"

namespace mesml {

SpecIndex::SpecIndex(const MesSpec& spec) : spec_(&spec) {
  index_ts(spec.ts_model.plant);

  index_content(spec.pp_model.content, View::Pp, nullptr, "", 0);
  index_content(spec.mes_model.content, View::Mes, nullptr, "", 0);

  for (const Pool& pool : spec.mes_model.pools) {
    ElementInfo info;
    info.kind = ElementKind::Pool;
    info.view = View::Mes;
    info.name = pool.name;
    info.pool = &pool;
    add(pool.id, std::move(info));
    for (const Lane& lane : pool.lanes) {
      ElementInfo laneinfo;
      laneinfo.kind = ElementKind::Lane;
      laneinfo.view = View::Mes;
      laneinfo.name = lane.name;
      laneinfo.lane = &lane;
      laneinfo.lane_pool = &pool;
      add(lane.id, std::move(laneinfo));
    }
  }
}

void SpecIndex::add(const ElementId& id, ElementInfo info) {
  ++element_count_;
  auto [it, inserted] = by_id_.emplace(id, std::move(info));
  if (!inserted) duplicates_.push_back(id);
}

void SpecIndex::index_ts(const TsNode& node) {
  ElementInfo info;
  switch (node.kind) {
    case TsKind::Plant: info.kind = ElementKind::Plant; break;
    case TsKind::Area: info.kind = ElementKind::Area; break;
    case TsKind::Unit: info.kind = ElementKind::Unit; break;
    case TsKind::Signal: info.kind = ElementKind::Signal; break;
    case TsKind::UserDefinedLayer: info.kind = ElementKind::UserDefinedLayer; break;
  }
  info.view = View::Ts;
  info.name = node.name;
  info.ts_node = &node;
  add(node.id, std::move(info));
  for (const TsNode& child : node.children) index_ts(child);
}

void SpecIndex::index_content(const ProcessContent& content, View view, const Activity* owner,
                              const std::string& path, int level) {
  diagrams_.push_back(DiagramInfo{view, &content, owner, path, level});

  auto put = [&](const ElementId& id, ElementKind kind, std::string name) {
    ElementInfo info;
    info.kind = kind;
    info.view = view;
    info.name = std::move(name);
    info.diagram = &content;
    return std::pair<const ElementId&, ElementInfo>(id, std::move(info));
  };

  for (const Activity& a : content.activities) {
    auto [id, info] = put(a.id, ElementKind::Activity, a.name);
    info.activity = &a;
    add(id, std::move(info));
  }
  for (const Event& e : content.events) {
    auto [id, info] = put(e.id, ElementKind::Event, e.name);
    info.event = &e;
    add(id, std::move(info));
  }
  for (const Gateway& g : content.gateways) {
    auto [id, info] = put(g.id, ElementKind::Gateway, "");
    info.gateway = &g;
    add(id, std::move(info));
  }
  for (const ActivityRef& r : content.activity_refs) {
    auto [id, info] = put(r.id, ElementKind::ActivityRef, r.name);
    info.activity_ref = &r;
    add(id, std::move(info));
  }
  for (const SignalRef& r : content.signal_refs) {
    auto [id, info] = put(r.id, ElementKind::SignalRef, r.name);
    info.signal_ref = &r;
    add(id, std::move(info));
  }
  for (const DataObject& d : content.data_objects) {
    auto [id, info] = put(d.id, ElementKind::DataObject, d.name);
    info.data_object = &d;
    add(id, std::move(info));
  }
  for (const ConnectingObject& f : content.flows) {
    ElementKind kind = ElementKind::SequenceFlow;
    switch (f.kind) {
      case FlowKind::Sequence: kind = ElementKind::SequenceFlow; break;
      case FlowKind::Message: kind = ElementKind::MessageFlow; break;
      case FlowKind::Data: kind = ElementKind::DataFlow; break;
      case FlowKind::Association: kind = ElementKind::Association; break;
    }
    auto [id, info] = put(f.id, kind, "");
    info.flow = &f;
    add(id, std::move(info));

    // Degrees are diagram-local; associations are not counted.
    switch (f.kind) {
      case FlowKind::Sequence:
        degrees_[f.source].out_sf++;
        degrees_[f.target].in_sf++;
        break;
      case FlowKind::Message:
        degrees_[f.source].out_mf++;
        degrees_[f.target].in_mf++;
        break;
      case FlowKind::Data:
        degrees_[f.source].out_df++;
        degrees_[f.target].in_df++;
        break;
      case FlowKind::Association: break;
    }
  }
  for (const TextAnnotation& t : content.annotations) {
    auto [id, info] = put(t.id, ElementKind::TextAnnotation, "");
    info.annotation = &t;
    add(id, std::move(info));
  }
  for (const Group& g : content.groups) {
    auto [id, info] = put(g.id, ElementKind::Group, "");
    info.group = &g;
    add(id, std::move(info));
  }

  for (const Activity& a : content.activities) {
    if (a.subprocess) {
      std::string child_path = path.empty() ? a.name : path + "/" + a.name;
      index_content(*a.subprocess, view, &a, child_path, level + 1);
    }
  }
}

const ElementInfo* SpecIndex::find(const ElementId& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &it->second;
}

const ElementInfo* SpecIndex::find(const ElementRef& ref) const {
  const ElementInfo* info = find(ref.id);
  if (!info || info->view != ref.view) return nullptr;
  return info;
}

const ElementInfo& SpecIndex::at(const ElementRef& ref) const {
  const ElementInfo* info = find(ref);
  if (!info) {
    throw NotFoundError("no element '" + ref.id + "' in view '" + std::string(view_name(ref.view)) +
                        "'");
  }
  return *info;
}

DegreeVector SpecIndex::degrees(const ElementId& id) const {
  auto it = degrees_.find(id);
  return it == degrees_.end() ? DegreeVector{} : it->second;
}

ElementKind kind_of(const ElementRef& ref, const SpecIndex& index) { return index.at(ref).kind; }

View view_of(const ElementRef& ref, const SpecIndex& index) { return index.at(ref).view; }

DegreeVector compute_degrees(const ElementRef& ref, const SpecIndex& index) {
  const ElementInfo& info = index.at(ref);
  if (!info.is_flow_object() && info.kind != ElementKind::DataObject) {
    throw UnsupportedKindError("degrees are defined for flow objects and data objects, not '" +
                               std::string(kind_name(info.kind)) + "' (" + ref.id + ")");
  }
  return index.degrees(ref.id);
}

ElementKind kind_of(const ElementRef& ref, const MesSpec& spec) {
  return kind_of(ref, SpecIndex(spec));
}

View view_of(const ElementRef& ref, const MesSpec& spec) { return view_of(ref, SpecIndex(spec)); }

DegreeVector compute_degrees(const ElementRef& ref, const MesSpec& spec) {
  return compute_degrees(ref, SpecIndex(spec));
}

}  // namespace mesml
