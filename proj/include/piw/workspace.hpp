#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "piw/char_table.hpp"
#include "piw/element_set.hpp"
#include "piw/pi_config.hpp"
#include "piw/pi_partial.hpp"
#include "piw/pi_structure.hpp"
#include "piw/subgroups.hpp"

namespace piw {

class Workspace;

/// A vertex of one member of I_pi(H) with the witness that produced it.
struct VertexAssignment {
  std::size_t phi = 0;           // index in I_pi(H)
  std::size_t vertex_class = 0;  // index into H's subgroup classes
  ElementSet vertex;             // the class representative, root coordinates
  ElementSet witness_subgroup;   // U, root coordinates
  std::size_t witness_theta = 0; // index in I_pi(U)
  std::size_t witnesses = 0;     // (U-class, theta) pairs inducing phi
};

/// A subgroup H of the workspace root together with lazily computed data.
/// Sets are given either in root coordinates (indices of root elements) or in
/// local coordinates (indices of H's own element list).
class Node {
 public:
  Node(Workspace& ws, ElementSet root_set);

  const ElementSet& set() const { return set_; }
  const GroupPtr& group() const { return group_; }
  std::uint64_t order() const { return group_->order(); }
  Workspace& workspace() const { return *ws_; }

  std::size_t root_index(std::size_t local) const { return to_root_[local]; }
  /// Local index of a root element; throws DomainError if it is not in H.
  std::size_t local_index(std::size_t root) const;
  ElementSet to_root(const ElementSet& local) const;
  ElementSet to_local(const ElementSet& root_set) const;

  const CharacterTable& table() const;
  const SubgroupClassList& subgroups() const;
  /// Local coordinates, sorted by order.
  const std::vector<ElementSet>& normal_subgroups() const;
  const std::vector<ElementSet>& chief_series() const;
  const SubnormalData& subnormal() const;
  /// Fusion of this node's classes into another node containing it.
  std::vector<std::size_t> fusion_into(const Node& bigger) const;

  const PiClassPtr& pi_classes(const PiConfig& pi) const;
  const PartialBasis& basis(const PiConfig& pi) const;
  /// One assignment per member of I_pi(H), by exhaustive witness search.
  const std::vector<VertexAssignment>& vertices(const PiConfig& pi) const;
  /// Subgroup class in H of a subgroup given in root coordinates.
  std::size_t subgroup_class(const ElementSet& root_set) const;
  /// I(H|Q): indices of members of I_pi(H) with vertex H-conjugate to Q (root coordinates).
  std::vector<std::size_t> with_vertex(const PiConfig& pi, const ElementSet& q_root) const;

 private:
  struct PiData {
    PiClassPtr classes;
    std::unique_ptr<PartialBasis> basis;
    std::optional<std::vector<VertexAssignment>> vertices;
  };
  PiData& pi_data(const PiConfig& pi) const;
  std::vector<VertexAssignment> compute_vertices(const PiConfig& pi) const;

  Workspace* ws_;
  ElementSet set_;
  GroupPtr group_;
  std::vector<std::size_t> to_root_;
  std::unordered_map<std::size_t, std::size_t> from_root_;

  mutable std::unique_ptr<CharacterTable> table_;
  mutable std::unique_ptr<SubgroupClassList> subgroups_;
  mutable std::optional<std::vector<ElementSet>> normals_;
  mutable std::optional<std::vector<ElementSet>> chief_;
  mutable std::unique_ptr<SubnormalData> subnormal_;
  mutable std::map<PiConfig, PiData> pi_;
};

/// A quotient H/K of a node, realised as the root of its own workspace.
struct QuotientView {
  const Node* source = nullptr;
  ElementSet kernel;  // root coordinates of the parent workspace
  std::shared_ptr<QuotientGroup> map;
  std::shared_ptr<Workspace> workspace;
  /// Parent-root subset of H to quotient-root subset.
  ElementSet image(const ElementSet& root_set) const;
  /// Quotient-root index of the image of a parent-root element of H.
  std::size_t image_index(std::size_t root_element) const;
};

/// Cache of everything computed about one root group and its subgroups and
/// quotients. All character values use one conductor. Not thread-safe: use one
/// workspace per task.
class Workspace {
 public:
  struct Options {
    std::uint64_t subgroup_limit = 2000;
    /// 0 means the exponent of the root.
    std::uint64_t conductor = 0;
    std::uint64_t seed = 1;
  };

  explicit Workspace(GroupPtr root) : Workspace(std::move(root), Options{}) {}
  Workspace(GroupPtr root, Options options);

  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const GroupPtr& root() const { return root_; }
  const Options& options() const { return options_; }
  std::uint64_t conductor() const { return options_.conductor; }

  const Node& node(const ElementSet& root_set);
  const Node& root_node() { return node(root_->full_set()); }
  /// H/K for K (root coordinates) normal in H.
  const QuotientView& quotient(const Node& h, const ElementSet& kernel);

  /// N_H(S) in root coordinates, for S <= H.
  ElementSet normalizer_in(const Node& h, const ElementSet& s);
  /// C_S(T): elements of S commuting with every element of T (root coordinates).
  ElementSet centralizer_in(const ElementSet& s, const ElementSet& t) const;
  /// A Hall sigma-subgroup of a node, root coordinates.
  ElementSet hall(const Node& h, const PiConfig& sigma);
  /// Subgroup generated by two root-coordinate sets.
  ElementSet join(const ElementSet& a, const ElementSet& b) const;

 private:
  GroupPtr root_;
  Options options_;
  std::unordered_map<ElementSet, std::unique_ptr<Node>, ElementSetHash> nodes_;
  std::map<std::pair<ElementSet, ElementSet>, QuotientView> quotients_;
};

}  // namespace piw
