#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mesml/model.hpp"

namespace mesml {

struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedKindError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Classification of one resolved element. Exactly one of the typed pointers
/// is set, matching `kind`; `diagram` points at the owning diagram for
/// process-model elements (null for TS nodes, pools and lanes).
struct ElementInfo {
  ElementKind kind{};
  View view{};
  std::string name;  // empty when the element carries none
  const ProcessContent* diagram = nullptr;
  const Activity* activity = nullptr;
  const Event* event = nullptr;
  const Gateway* gateway = nullptr;
  const ActivityRef* activity_ref = nullptr;
  const SignalRef* signal_ref = nullptr;
  const DataObject* data_object = nullptr;
  const ConnectingObject* flow = nullptr;
  const TextAnnotation* annotation = nullptr;
  const Group* group = nullptr;
  const Pool* pool = nullptr;
  const Lane* lane = nullptr;
  const Pool* lane_pool = nullptr;  // owning pool when kind == Lane
  const TsNode* ts_node = nullptr;

  bool is_flow_object() const {
    return kind == ElementKind::Activity || kind == ElementKind::Event ||
           kind == ElementKind::Gateway || kind == ElementKind::ActivityRef ||
           kind == ElementKind::SignalRef;
  }
  bool is_connecting_object() const { return flow != nullptr; }
  bool is_ts_node() const { return ts_node != nullptr; }
};

/// One diagram: the top-level content of a process model or a subprocess
/// fragment, addressed by the slash-joined names of the owning activities.
struct DiagramInfo {
  View view{};
  const ProcessContent* content = nullptr;
  const Activity* owner = nullptr;  // null at the top level
  std::string path;                 // "" at the top level
  int level = 0;
};

/// Read-only lookup structure over an immutable MesSpec: id resolution,
/// derived degrees, and the diagram inventory. Elements inside subprocess
/// fragments inherit the fragment root's view.
class SpecIndex {
 public:
  explicit SpecIndex(const MesSpec& spec);

  SpecIndex(const SpecIndex&) = delete;
  SpecIndex& operator=(const SpecIndex&) = delete;

  const MesSpec& spec() const { return *spec_; }

  const ElementInfo* find(const ElementId& id) const;
  /// Resolves only if the element exists and lives in the view the ref names.
  const ElementInfo* find(const ElementRef& ref) const;
  const ElementInfo& at(const ElementRef& ref) const;  // throws NotFoundError

  /// Derived in/out degrees within the owning diagram; zero vector for
  /// elements with nothing attached.
  DegreeVector degrees(const ElementId& id) const;

  /// All process diagrams, PP first then MES, pre-order within each model.
  const std::vector<DiagramInfo>& diagrams() const { return diagrams_; }

  /// Ids that occur more than once across the spec (first occurrence wins in
  /// lookups). Always empty for parsed documents.
  const std::vector<ElementId>& duplicate_ids() const { return duplicates_; }

  std::size_t element_count() const { return element_count_; }

 private:
  void add(const ElementId& id, ElementInfo info);
  void index_content(const ProcessContent& content, View view, const Activity* owner,
                     const std::string& path, int level);
  void index_ts(const TsNode& node);

  const MesSpec* spec_;
  std::unordered_map<ElementId, ElementInfo> by_id_;
  std::unordered_map<ElementId, DegreeVector> degrees_;
  std::vector<DiagramInfo> diagrams_;
  std::vector<ElementId> duplicates_;
  std::size_t element_count_ = 0;
};

/// Concrete kind of the referenced element. Throws NotFoundError when the ref
/// does not resolve in its declared view.
ElementKind kind_of(const ElementRef& ref, const SpecIndex& index);
ElementKind kind_of(const ElementRef& ref, const MesSpec& spec);

/// View owning the referenced element (MES, PP or TS).
View view_of(const ElementRef& ref, const SpecIndex& index);
View view_of(const ElementRef& ref, const MesSpec& spec);

/// Degrees for a flow object or data object. Throws UnsupportedKindError for
/// TS nodes, connecting objects, swimlanes and artifacts.
DegreeVector compute_degrees(const ElementRef& ref, const SpecIndex& index);
DegreeVector compute_degrees(const ElementRef& ref, const MesSpec& spec);

}  // namespace mesml
