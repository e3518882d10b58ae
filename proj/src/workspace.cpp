#include "piw/workspace.hpp"

#include <algorithm>
#include <set>

#include "piw/errors.hpp"

namespace piw {

Node::Node(Workspace& ws, ElementSet root_set) : ws_(&ws), set_(std::move(root_set)) {
  const GroupPtr& root = ws.root();
  group_ = set_.count() == root->order() ? root : make_finite_group(root->to_group(set_));
  to_root_.reserve(group_->elements().size());
  for (std::size_t i = 0; i < group_->elements().size(); ++i) {
    const std::size_t r = root->index(group_->element(i));
    to_root_.push_back(r);
    from_root_.emplace(r, i);
  }
}

std::size_t Node::local_index(std::size_t root) const {
  auto it = from_root_.find(root);
  if (it == from_root_.end()) throw DomainError("element is not in the subgroup");
  return it->second;
}

ElementSet Node::to_root(const ElementSet& local) const {
  ElementSet out(ws_->root()->elements().size());
  for (auto i : local.indices()) out.set(to_root_[i]);
  return out;
}

ElementSet Node::to_local(const ElementSet& root_set) const {
  ElementSet out(group_->elements().size());
  for (auto i : root_set.indices()) out.set(local_index(i));
  return out;
}

const CharacterTable& Node::table() const {
  if (!table_) table_ = std::make_unique<CharacterTable>(character_table(group_, ws_->conductor()));
  return *table_;
}

const SubgroupClassList& Node::subgroups() const {
  if (!subgroups_) {
    subgroups_ = std::make_unique<SubgroupClassList>(subgroups_up_to_conjugacy(group_, ws_->options().subgroup_limit));
  }
  return *subgroups_;
}

const std::vector<ElementSet>& Node::normal_subgroups() const {
  if (!normals_) normals_ = piw::normal_subgroups(*group_);
  return *normals_;
}

const std::vector<ElementSet>& Node::chief_series() const {
  if (!chief_) chief_ = piw::chief_series(*group_);
  return *chief_;
}

const SubnormalData& Node::subnormal() const {
  if (!subnormal_) subnormal_ = std::make_unique<SubnormalData>(group_, ws_->conductor());
  return *subnormal_;
}

std::vector<std::size_t> Node::fusion_into(const Node& bigger) const {
  return class_fusion(*group_, *bigger.group());
}

Node::PiData& Node::pi_data(const PiConfig& pi) const {
  auto it = pi_.find(pi);
  if (it == pi_.end()) {
    PiData data;
    data.classes = make_pi_class_data(group_, pi);
    it = pi_.emplace(pi, std::move(data)).first;
  }
  return it->second;
}

const PiClassPtr& Node::pi_classes(const PiConfig& pi) const { return pi_data(pi).classes; }

const PartialBasis& Node::basis(const PiConfig& pi) const {
  PiData& data = pi_data(pi);
  if (!data.basis) data.basis = std::make_unique<PartialBasis>(table(), data.classes);
  return *data.basis;
}

const std::vector<VertexAssignment>& Node::vertices(const PiConfig& pi) const {
  PiData& data = pi_data(pi);
  if (!data.vertices) {
    auto computed = compute_vertices(pi);
    pi_data(pi).vertices = std::move(computed);
  }
  return *pi_data(pi).vertices;
}

std::size_t Node::subgroup_class(const ElementSet& root_set) const {
  auto cls = subgroups().class_of(to_local(root_set));
  if (!cls) throw TheoryViolation("subgroup missing from the enumerated subgroup classes");
  return *cls;
}

std::vector<std::size_t> Node::with_vertex(const PiConfig& pi, const ElementSet& q_root) const {
  if (!q_root.is_subset_of(set_)) return {};
  const std::size_t cls = subgroup_class(q_root);
  std::vector<std::size_t> out;
  for (const auto& v : vertices(pi)) {
    if (v.vertex_class == cls) out.push_back(v.phi);
  }
  return out;
}

std::vector<VertexAssignment> Node::compute_vertices(const PiConfig& pi) const {
  const PartialBasis& b = basis(pi);
  const PiClassPtr& classes = pi_classes(pi);
  std::set<std::uint64_t> degrees;
  for (const auto& phi : b.members()) degrees.insert(phi.degree());
  const SubgroupClassList& subs = subgroups();
  const PiConfig pi_prime = pi.complement();

  std::vector<std::optional<VertexAssignment>> found(b.size());
  for (std::size_t cls = subs.size(); cls-- > 0;) {
    const std::uint64_t index = order() / subs[cls].order;
    if (std::none_of(degrees.begin(), degrees.end(), [&](std::uint64_t d) { return d % index == 0; })) continue;
    const ElementSet u_root = to_root(subs[cls].elements);
    const Node& u = ws_->node(u_root);
    const PartialBasis& ub = u.basis(pi);
    const auto fusion = u.fusion_into(*this);
    std::optional<std::size_t> hall_class;
    for (std::size_t t = 0; t < ub.size(); ++t) {
      const std::uint64_t td = ub[t].degree();
      if (!pi.is_number(td) || !degrees.count(td * index)) continue;
      const std::size_t f = b.index_of(induce_partial(ub[t], classes, fusion));
      if (f == b.size()) continue;
      if (!hall_class) hall_class = subgroup_class(ws_->hall(u, pi_prime));
      if (!found[f]) {
        VertexAssignment v;
        v.phi = f;
        v.vertex_class = *hall_class;
        v.vertex = to_root(subs[*hall_class].elements);
        v.witness_subgroup = u_root;
        v.witness_theta = t;
        found[f] = std::move(v);
      } else if (found[f]->vertex_class != *hall_class) {
        throw TheoryViolation("two witnesses give non-conjugate vertices for " + b[f].to_string());
      }
      ++found[f]->witnesses;
    }
  }
  std::vector<VertexAssignment> out;
  for (std::size_t f = 0; f < found.size(); ++f) {
    if (!found[f]) throw TheoryViolation("no vertex witness for " + b[f].to_string());
    out.push_back(std::move(*found[f]));
  }
  return out;
}

// ---------------------------------------------------------------------------

ElementSet QuotientView::image(const ElementSet& root_set) const {
  ElementSet out(workspace->root()->elements().size());
  for (auto x : root_set.indices()) out.set(image_index(x));
  return out;
}

std::size_t QuotientView::image_index(std::size_t root_element) const {
  return workspace->root()->index(map->image(source->local_index(root_element)));
}

Workspace::Workspace(GroupPtr root, Options options) : root_(std::move(root)), options_(options) {
  if (options_.conductor == 0) options_.conductor = root_->exponent();
  if (options_.conductor % root_->exponent() != 0) {
    throw DomainError("Workspace: conductor must be a multiple of the group exponent");
  }
}

const Node& Workspace::node(const ElementSet& root_set) {
  auto it = nodes_.find(root_set);
  if (it == nodes_.end()) it = nodes_.emplace(root_set, std::make_unique<Node>(*this, root_set)).first;
  return *it->second;
}

const QuotientView& Workspace::quotient(const Node& h, const ElementSet& kernel) {
  auto key = std::make_pair(h.set(), kernel);
  auto it = quotients_.find(key);
  if (it != quotients_.end()) return it->second;
  const ElementSet local = h.to_local(kernel);
  if (!is_normal(*h.group(), local)) throw DomainError("quotient: kernel is not normal");
  QuotientView view;
  view.source = &h;
  view.kernel = kernel;
  view.map = std::make_shared<QuotientGroup>(h.group(), local);
  Options sub = options_;
  view.workspace = std::make_shared<Workspace>(make_finite_group(view.map->group()), sub);
  return quotients_.emplace(key, std::move(view)).first->second;
}

ElementSet Workspace::normalizer_in(const Node& h, const ElementSet& s) {
  const FiniteGroup& g = *h.group();
  const PermutationGroup n = normalizer(g.perm(), g.to_group(h.to_local(s)));
  return h.to_root(g.set_of(n));
}

ElementSet Workspace::centralizer_in(const ElementSet& s, const ElementSet& t) const {
  const FiniteGroup& g = *root_;
  const auto gens = g.generators_of(t);
  ElementSet out(g.elements().size());
  for (auto x : s.indices()) {
    bool commutes = true;
    for (auto y : gens) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.set(x);
  }
  return out;
}

ElementSet Workspace::hall(const Node& h, const PiConfig& sigma) {
  return h.to_root(hall_subgroup_set(*h.group(), sigma, options_.seed));
}

ElementSet Workspace::join(const ElementSet& a, const ElementSet& b) const {
  auto gens = root_->generators_of(a);
  auto more = root_->generators_of(b);
  gens.insert(gens.end(), more.begin(), more.end());
  return root_->generated(gens);
}

}  // namespace piw
