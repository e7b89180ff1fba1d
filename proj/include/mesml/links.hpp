#pragma once

#include <array>
#include <string>
#include <vector>

#include "mesml/index.hpp"

namespace mesml {

/// Verdict of the link legality predicate. Forbidden always names the
/// violated catalog rule.
struct LinkLegality {
  bool allowed = true;
  std::string rule;    // "W-LK-01" .. "W-LK-06" when forbidden
  std::string reason;  // human-readable explanation

  static LinkLegality ok() { return {}; }
  static LinkLegality forbid(std::string rule, std::string reason) {
    return LinkLegality{false, std::move(rule), std::move(reason)};
  }
  friend bool operator==(const LinkLegality&, const LinkLegality&) = default;
};

/// Instance-level legality of one link: never-linkable endpoints (including
/// link events), same-view linkage, per-type endpoint kinds, equivalence name
/// equality and deployment direction. Throws NotFoundError when an endpoint
/// does not resolve in its declared view.
LinkLegality check_link(const Link& link, const SpecIndex& index);
LinkLegality check_link(const Link& link, const MesSpec& spec);

/// Kind-level verdict: Allowed iff some placement of the two kinds into views
/// can make the link legal. Name equality and target residency are
/// per-instance and outside this table.
LinkLegality kind_pair_legality(ElementKind source, ElementKind target, LinkType type);

struct LegalityRow {
  ElementKind source{};
  ElementKind target{};
  LinkType type{};
  LinkLegality verdict;
};

/// The full kind-level table: all 19 x 19 x 3 ordered combinations.
std::vector<LegalityRow> legality_table();

inline constexpr std::array<LinkType, 3> all_link_types() {
  return {LinkType::DataTransfer, LinkType::Equivalence, LinkType::Deployment};
}

}  // namespace mesml
