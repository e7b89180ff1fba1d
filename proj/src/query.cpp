#include "mesml/query.hpp"

#include <algorithm>

namespace mesml {

namespace {

// Blocking diagnostics for all links of one type, from the instance predicate.
std::vector<Diagnostic> blocking_for(const SpecIndex& index, LinkType type) {
  std::vector<Diagnostic> out;
  for (const Link& link : index.spec().link_model.links) {
    if (link.type != type) continue;
    std::string subject = "links/" + link.id;
    if (!index.find(link.source) || !index.find(link.target)) {
      out.push_back(Diagnostic{Rule::WLk01, subject, "link endpoint does not resolve", ""});
      continue;
    }
    LinkLegality verdict = check_link(link, index);
    if (!verdict.allowed) {
      Rule rule = rule_from_code(verdict.rule).value_or(Rule::WLk01);
      out.push_back(Diagnostic{rule, subject, verdict.reason,
                               to_string(link.source) + " -> " + to_string(link.target)});
    }
  }
  return out;
}

void require_clean(const SpecIndex& index, LinkType type) {
  std::vector<Diagnostic> blocking = blocking_for(index, type);
  if (!blocking.empty()) throw PreconditionError(std::move(blocking));
}

}  // namespace

std::vector<Link> links_of(const ElementRef& ref, const SpecIndex& index) {
  index.at(ref);  // throws NotFoundError for unknown elements
  std::vector<Link> out;
  for (const Link& link : index.spec().link_model.links) {
    if (link.source == ref || link.target == ref) out.push_back(link);
  }
  return out;
}

std::vector<EquivalencePair> equivalence_pairs(const SpecIndex& index) {
  require_clean(index, LinkType::Equivalence);
  std::vector<EquivalencePair> out;
  for (const Link& link : index.spec().link_model.links) {
    if (link.type != LinkType::Equivalence) continue;
    ElementKind source_kind = index.at(link.source).kind;
    bool source_is_original =
        source_kind == ElementKind::Activity || source_kind == ElementKind::Signal;
    EquivalencePair pair;
    pair.original = source_is_original ? link.source : link.target;
    pair.reference = source_is_original ? link.target : link.source;
    pair.link = link.id;
    out.push_back(std::move(pair));
  }
  return out;
}

DeploymentMap deployment_map(const SpecIndex& index) {
  require_clean(index, LinkType::Deployment);
  DeploymentMap map;
  for (const Link& link : index.spec().link_model.links) {
    if (link.type != LinkType::Deployment) continue;
    map.entries.push_back(DeploymentEntry{link.source, link.target, link.id});
  }
  std::sort(map.entries.begin(), map.entries.end(),
            [](const DeploymentEntry& a, const DeploymentEntry& b) {
              return std::tie(a.ts_target.id, a.link) < std::tie(b.ts_target.id, b.link);
            });
  return map;
}

std::vector<InterfaceEntry> data_interfaces(const SpecIndex& index) {
  require_clean(index, LinkType::DataTransfer);
  std::vector<InterfaceEntry> out;
  for (const Link& link : index.spec().link_model.links) {
    if (link.type != LinkType::DataTransfer) continue;
    out.push_back(InterfaceEntry{link.id, link.connector, link.source, link.target});
  }
  return out;
}

std::vector<Link> links_of(const ElementRef& ref, const MesSpec& spec) {
  return links_of(ref, SpecIndex(spec));
}

std::vector<EquivalencePair> equivalence_pairs(const MesSpec& spec) {
  return equivalence_pairs(SpecIndex(spec));
}

DeploymentMap deployment_map(const MesSpec& spec) { return deployment_map(SpecIndex(spec)); }

std::vector<InterfaceEntry> data_interfaces(const MesSpec& spec) {
  return data_interfaces(SpecIndex(spec));
}

}  // namespace mesml
