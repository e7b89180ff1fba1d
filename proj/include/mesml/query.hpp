#pragma once

#include <vector>

#include "mesml/validate.hpp"

namespace mesml {

/// One equivalence link with normalized orientation: `original` is the
/// activity or signal, `reference` the reference element, regardless of how
/// the link was authored.
struct EquivalencePair {
  ElementRef original;
  ElementRef reference;
  ElementId link;
  friend bool operator==(const EquivalencePair&, const EquivalencePair&) = default;
};

struct DeploymentEntry {
  ElementRef process_element;
  ElementRef ts_target;  // Area, Unit or UserDefinedLayer
  ElementId link;
  friend bool operator==(const DeploymentEntry&, const DeploymentEntry&) = default;
};

/// Plant-part-centric view of the deployment links, sorted by TS target.
struct DeploymentMap {
  std::vector<DeploymentEntry> entries;
  friend bool operator==(const DeploymentMap&, const DeploymentMap&) = default;
};

/// One data-transfer link: an implemented or required software interface.
struct InterfaceEntry {
  ElementId link;
  std::optional<Connector> connector;
  ElementRef source;
  ElementRef target;
  friend bool operator==(const InterfaceEntry&, const InterfaceEntry&) = default;
};

/// All links touching the element, in document (canonical) order. Throws
/// NotFoundError when the ref does not resolve.
std::vector<Link> links_of(const ElementRef& ref, const SpecIndex& index);
std::vector<Link> links_of(const ElementRef& ref, const MesSpec& spec);

/// One pair per equivalence link. Throws PreconditionError naming the
/// offending links when any equivalence link violates W-LK-01/02/04/05.
std::vector<EquivalencePair> equivalence_pairs(const SpecIndex& index);
std::vector<EquivalencePair> equivalence_pairs(const MesSpec& spec);

/// One entry per deployment link, sorted by (ts_target, link). Throws
/// PreconditionError when any deployment link violates W-LK-01/02/06.
DeploymentMap deployment_map(const SpecIndex& index);
DeploymentMap deployment_map(const MesSpec& spec);

/// One entry per data-transfer link, carrying its connector type. Throws
/// PreconditionError when any data-transfer link violates W-LK-01/02/03.
std::vector<InterfaceEntry> data_interfaces(const SpecIndex& index);
std::vector<InterfaceEntry> data_interfaces(const MesSpec& spec);

}  // namespace mesml
