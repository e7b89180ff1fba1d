#include "mesml/links.hpp"

namespace mesml {

namespace {

// Gateways, connecting objects, text annotations and the plant root can never
// be an endpoint of any link. Link events are barred per-instance.
bool never_linkable(ElementKind kind) {
  switch (kind) {
    case ElementKind::Gateway:
    case ElementKind::SequenceFlow:
    case ElementKind::MessageFlow:
    case ElementKind::DataFlow:
    case ElementKind::Association:
    case ElementKind::TextAnnotation:
    case ElementKind::Plant:
      return true;
    default:
      return false;
  }
}

bool ts_linkable_kind(ElementKind kind) {
  return kind == ElementKind::Area || kind == ElementKind::Unit || kind == ElementKind::Signal ||
         kind == ElementKind::UserDefinedLayer;
}

// Views an element of this kind can live in.
struct ViewSet {
  bool mes = false, pp = false, ts = false;
};

ViewSet possible_views(ElementKind kind) {
  switch (kind) {
    case ElementKind::Pool:
    case ElementKind::Lane:
      return {true, false, false};
    case ElementKind::Plant:
    case ElementKind::Area:
    case ElementKind::Unit:
    case ElementKind::Signal:
    case ElementKind::UserDefinedLayer:
      return {false, false, true};
    default:
      return {true, true, false};
  }
}

bool distinct_views_possible(ElementKind a, ElementKind b) {
  ViewSet va = possible_views(a);
  ViewSet vb = possible_views(b);
  if (va.mes && (vb.pp || vb.ts)) return true;
  if (va.pp && (vb.mes || vb.ts)) return true;
  if (va.ts && (vb.mes || vb.pp)) return true;
  return false;
}

bool data_transfer_endpoint(ElementKind kind) {
  switch (kind) {
    case ElementKind::Activity:
    case ElementKind::Event:
    case ElementKind::DataObject:
    case ElementKind::Pool:
    case ElementKind::Lane:
      return true;
    default:
      return ts_linkable_kind(kind);
  }
}

bool equivalence_pair(ElementKind a, ElementKind b) {
  if (a == ElementKind::Activity && b == ElementKind::ActivityRef) return true;
  if (a == ElementKind::ActivityRef && b == ElementKind::Activity) return true;
  if (a == ElementKind::Signal && b == ElementKind::SignalRef) return true;
  if (a == ElementKind::SignalRef && b == ElementKind::Signal) return true;
  return false;
}

LinkLegality type_rules(ElementKind source, ElementKind target, LinkType type) {
  switch (type) {
    case LinkType::DataTransfer: {
      bool group_pair = source == ElementKind::Group && target == ElementKind::Group;
      if (group_pair) return LinkLegality::ok();
      if (!data_transfer_endpoint(source) || !data_transfer_endpoint(target)) {
        return LinkLegality::forbid(
            "W-LK-03", "data transfer links connect activities, events, data objects, swimlanes, "
                       "technical system elements, or group to group");
      }
      return LinkLegality::ok();
    }
    case LinkType::Equivalence: {
      if (!equivalence_pair(source, target)) {
        return LinkLegality::forbid(
            "W-LK-04", "equivalence links pair an activity with an activity reference or a signal "
                       "with a signal reference");
      }
      return LinkLegality::ok();
    }
    case LinkType::Deployment: {
      if (source != ElementKind::Activity) {
        return LinkLegality::forbid("W-LK-06",
                                    "only activities can be deployed to the technical system");
      }
      if (target != ElementKind::Area && target != ElementKind::Unit &&
          target != ElementKind::UserDefinedLayer) {
        return LinkLegality::forbid(
            "W-LK-06", "deployment targets must be areas, units or user-defined layers");
      }
      return LinkLegality::ok();
    }
  }
  return LinkLegality::forbid("W-LK-01", "unknown link type");
}

}  // namespace

LinkLegality kind_pair_legality(ElementKind source, ElementKind target, LinkType type) {
  if (never_linkable(source)) {
    return LinkLegality::forbid("W-LK-01", std::string(kind_name(source)) +
                                               " elements cannot be linked to elements in other "
                                               "models");
  }
  if (never_linkable(target)) {
    return LinkLegality::forbid("W-LK-01", std::string(kind_name(target)) +
                                               " elements cannot be linked to elements in other "
                                               "models");
  }
  if (!distinct_views_possible(source, target)) {
    return LinkLegality::forbid("W-LK-02", "only elements from different models can be linked");
  }
  return type_rules(source, target, type);
}

LinkLegality check_link(const Link& link, const SpecIndex& index) {
  const ElementInfo& source = index.at(link.source);
  const ElementInfo& target = index.at(link.target);

  for (const ElementInfo* endpoint : {&source, &target}) {
    if (never_linkable(endpoint->kind)) {
      return LinkLegality::forbid("W-LK-01",
                                  std::string(kind_name(endpoint->kind)) +
                                      " elements cannot be linked to elements in other models");
    }
    if (endpoint->kind == ElementKind::Event && endpoint->event->behavior == EventBehavior::Link) {
      return LinkLegality::forbid("W-LK-01",
                                  "link events cannot be linked to elements in other models");
    }
  }

  if (source.view == target.view) {
    return LinkLegality::forbid("W-LK-02", "only elements from different models can be linked");
  }

  LinkLegality kinds = type_rules(source.kind, target.kind, link.type);
  if (!kinds.allowed) return kinds;

  if (link.type == LinkType::Equivalence && source.name != target.name) {
    return LinkLegality::forbid("W-LK-05", "equivalence-linked elements must have the same name ('" +
                                               source.name + "' vs '" + target.name + "')");
  }
  return LinkLegality::ok();
}

LinkLegality check_link(const Link& link, const MesSpec& spec) {
  return check_link(link, SpecIndex(spec));
}

std::vector<LegalityRow> legality_table() {
  std::vector<LegalityRow> rows;
  rows.reserve(static_cast<std::size_t>(kElementKindCount) * kElementKindCount * 3);
  for (ElementKind source : all_element_kinds()) {
    for (ElementKind target : all_element_kinds()) {
      for (LinkType type : all_link_types()) {
        rows.push_back(LegalityRow{source, target, type, kind_pair_legality(source, target, type)});
      }
    }
  }
  return rows;
}

}  // namespace mesml
