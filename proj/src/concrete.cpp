#include "setshare/concrete.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "setshare/error.hpp"

namespace setshare {

RationalSolvedForm::RationalSolvedForm(std::map<std::string, Term> bindings) {
  for (auto& [var, term] : bindings) {
    if (term.is_variable() && term.name() == var) continue;
    bindings_.emplace(var, std::move(term));
  }
  for (const auto& [start, term] : bindings_) {
    std::set<std::string> seen{start};
    const Term* t = &term;
    while (t->is_variable()) {
      if (!seen.insert(t->name()).second) {
        throw PreconditionError("bindings contain a variable-variable cycle through '" + start + "'");
      }
      t = binding(t->name());
      if (t == nullptr) break;
    }
  }
}

const Term* RationalSolvedForm::binding(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Unification

namespace {

class TermGraph {
 public:
  int add(const Term& t) {
    if (t.is_variable()) {
      auto [it, inserted] = var_nodes_.emplace(t.name(), 0);
      if (inserted) it->second = make_node(t.name(), {}, true);
      return it->second;
    }
    std::vector<int> children;
    for (const auto& a : t.args()) children.push_back(add(a));
    return make_node(t.name(), std::move(children), false);
  }

  bool unify(int a, int b) {
    std::vector<std::pair<int, int>> work{{a, b}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      int rx = find(x);
      int ry = find(y);
      if (rx == ry) continue;
      if (ry < rx) std::swap(rx, ry);
      const int sx = structure_[rx];
      const int sy = structure_[ry];
      if (sx >= 0 && sy >= 0) {
        const Node& nx = nodes_[sx];
        const Node& ny = nodes_[sy];
        if (nx.name != ny.name || nx.children.size() != ny.children.size()) return false;
        for (std::size_t i = 0; i < nx.children.size(); ++i) {
          work.emplace_back(nx.children[i], ny.children[i]);
        }
      }
      parent_[ry] = rx;
      if (sx < 0) structure_[rx] = sy;
    }
    return true;
  }

  RationalSolvedForm solved_form() {
    // Each class is named by its first variable in creation order, or by a
    // fresh variable when it holds only functor nodes.
    std::unordered_map<int, std::string> class_name;
    int fresh = 0;
    for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
      const int root = find(id);
      if (nodes_[id].is_var && !class_name.contains(root)) class_name[root] = nodes_[id].name;
    }
    for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
      const int root = find(id);
      if (!class_name.contains(root)) class_name[root] = "_G" + std::to_string(++fresh);
    }

    std::map<std::string, Term> bindings;
    std::set<int> bound_classes;
    for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
      const int root = find(id);
      const std::string& name = class_name[root];
      if (nodes_[id].is_var && nodes_[id].name != name) {
        bindings.emplace(nodes_[id].name, Term::variable(name));
      }
      const int s = structure_[root];
      if (s >= 0 && bound_classes.insert(root).second) {
        std::vector<Term> args;
        for (int child : nodes_[s].children) args.push_back(Term::variable(class_name[find(child)]));
        bindings.emplace(name, Term::compound(nodes_[s].name, std::move(args)));
      }
    }
    return RationalSolvedForm(std::move(bindings));
  }

 private:
  struct Node {
    std::string name;
    std::vector<int> children;
    bool is_var;
  };

  int make_node(std::string name, std::vector<int> children, bool is_var) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({std::move(name), std::move(children), is_var});
    parent_.push_back(id);
    structure_.push_back(is_var ? -1 : id);
    return id;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::vector<Node> nodes_;
  std::vector<int> parent_;
  std::vector<int> structure_;  // per root: a functor node of the class, or -1
  std::map<std::string, int> var_nodes_;
};

std::map<std::string, int> occurrence_counts(const Term& t) {
  std::map<std::string, int> counts;
  auto walk = [&](auto& self, const Term& u) -> void {
    if (u.is_variable()) {
      ++counts[u.name()];
      return;
    }
    for (const auto& a : u.args()) self(self, a);
  };
  walk(walk, t);
  return counts;
}

// Walk counting for multiplicity. Counts saturate at 2.
class WalkCounter {
 public:
  explicit WalkCounter(const RationalSolvedForm& rsf) : rsf_(rsf) {}

  Multiplicity run(const std::string& x) {
    if (!reaches_leaf(x)) return Multiplicity::kGround;
    const Counts* counts = count(x);
    if (counts == nullptr) return Multiplicity::kNonLinear;  // cycle on a walk to a leaf
    for (const auto& [leaf, n] : *counts) {
      if (n >= 2) return Multiplicity::kNonLinear;
    }
    return Multiplicity::kLinear;
  }

 private:
  using Counts = std::map<std::string, int>;
  enum class Mark { kActive, kDone };

  bool reaches_leaf(const std::string& v) {
    if (!reaches_computed_) compute_reaches();
    return !rsf_.is_bound(v) || reaches_.contains(v);
  }

  // Least fixpoint: a bound variable reaches a leaf when some variable of its
  // binding does.
  void compute_reaches() {
    reaches_computed_ = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [v, t] : rsf_.bindings()) {
        if (reaches_.contains(v)) continue;
        for (const auto& w : vars(t)) {
          if (!rsf_.is_bound(w) || reaches_.contains(w)) {
            reaches_.insert(v);
            changed = true;
            break;
          }
        }
      }
    }
  }

  // nullptr signals a cycle among vertices that reach a leaf.
  const Counts* count(const std::string& v) {
    if (auto it = marks_.find(v); it != marks_.end()) {
      return it->second == Mark::kActive ? nullptr : &memo_[v];
    }
    marks_[v] = Mark::kActive;
    Counts result;
    const Term* t = rsf_.binding(v);
    if (t == nullptr) {
      result[v] = 1;
    } else {
      for (const auto& [w, mult] : occurrence_counts(*t)) {
        if (!reaches_leaf(w)) continue;
        const Counts* sub = count(w);
        if (sub == nullptr) return nullptr;
        for (const auto& [leaf, n] : *sub) {
          int& slot = result[leaf];
          slot = std::min(2, slot + std::min(2, n * mult));
        }
      }
    }
    marks_[v] = Mark::kDone;
    return &(memo_[v] = std::move(result));
  }

  const RationalSolvedForm& rsf_;
  bool reaches_computed_ = false;
  std::set<std::string> reaches_;
  std::map<std::string, Mark> marks_;
  std::map<std::string, Counts> memo_;
};

void require_vars_in(const EquationSet& equations, const VariableUniverse& universe) {
  for (const auto& v : vars(equations)) {
    if (!universe.contains(v)) {
      throw PreconditionError("equation variable '" + v + "' is not in the universe");
    }
  }
}

}  // namespace

std::optional<RationalSolvedForm> unify(const EquationSet& equations) {
  TermGraph graph;
  std::vector<std::pair<int, int>> roots;
  for (const auto& e : equations) roots.emplace_back(graph.add(e.lhs), graph.add(e.rhs));
  for (auto [a, b] : roots) {
    if (!graph.unify(a, b)) return std::nullopt;
  }
  return graph.solved_form();
}

// ---------------------------------------------------------------------------
// Queries on the binding graph

std::set<std::string> reachable_vars(const RationalSolvedForm& rsf, const std::string& u) {
  std::set<std::string> leaves;
  std::set<std::string> visited{u};
  std::vector<std::string> stack{u};
  while (!stack.empty()) {
    const std::string v = std::move(stack.back());
    stack.pop_back();
    const Term* t = rsf.binding(v);
    if (t == nullptr) {
      leaves.insert(v);
      continue;
    }
    for (const auto& w : vars(*t)) {
      if (visited.insert(w).second) stack.push_back(w);
    }
  }
  return leaves;
}

VarSet occ(const RationalSolvedForm& rsf, const std::string& y, const VariableUniverse& universe) {
  VarSet out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (reachable_vars(rsf, universe.name(i)).contains(y)) out.insert(i);
  }
  return out;
}

GroupSet alpha_sh(const RationalSolvedForm& rsf, const VariableUniverse& universe) {
  std::map<std::string, VarSet> by_leaf;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (const auto& leaf : reachable_vars(rsf, universe.name(i))) by_leaf[leaf].insert(i);
  }
  std::vector<VarSet> groups{VarSet{}};
  for (const auto& [leaf, group] : by_leaf) groups.push_back(group);
  return GroupSet(std::move(groups));
}

PosFormula alpha_pos(const RationalSolvedForm& rsf, const VariableUniverse& universe) {
  // Bound variables outside X occur only on the left of their own
  // biconditional (reachable sets hold unbound variables only), so their
  // elimination yields `true`. Unbound variables outside X that X reaches
  // are eliminated by enumeration.
  struct Constraint {
    std::size_t lhs;
    VarSet rhs_x;
    std::vector<std::size_t> rhs_extra;
  };
  std::vector<std::string> extra;
  std::map<std::string, std::size_t> extra_index;
  std::vector<Constraint> constraints;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!rsf.is_bound(universe.name(i))) continue;
    Constraint c{i, {}, {}};
    for (const auto& leaf : reachable_vars(rsf, universe.name(i))) {
      if (auto j = universe.index_of(leaf)) {
        c.rhs_x.insert(*j);
        continue;
      }
      auto [it, inserted] = extra_index.emplace(leaf, extra.size());
      if (inserted) extra.push_back(leaf);
      c.rhs_extra.push_back(it->second);
    }
    constraints.push_back(std::move(c));
  }
  if (extra.size() > 16) {
    throw LimitError("too many unbound variables outside X to eliminate from the groundness formula");
  }
  const std::uint64_t extra_count = std::uint64_t{1} << extra.size();
  return PosFormula::from_predicate(universe, [&](VarSet m) {
    for (std::uint64_t e = 0; e < extra_count; ++e) {
      const bool ok = std::all_of(constraints.begin(), constraints.end(), [&](const Constraint& c) {
        bool rhs = c.rhs_x.subset_of(m);
        for (std::size_t j : c.rhs_extra) rhs = rhs && ((e >> j) & 1U);
        return m.contains(c.lhs) == rhs;
      });
      if (ok) return true;
    }
    return false;
  });
}

bool is_free(const RationalSolvedForm& rsf, const std::string& x) {
  const Term* t = rsf.binding(x);
  while (t != nullptr) {
    if (!t->is_variable()) return false;
    t = rsf.binding(t->name());
  }
  return true;
}

Multiplicity multiplicity(const RationalSolvedForm& rsf, const std::string& x) {
  return WalkCounter(rsf).run(x);
}

SharingTriple abstract_triple(const RationalSolvedForm& rsf, const VariableUniverse& universe) {
  VarSet free;
  VarSet linear;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const std::string& x = universe.name(i);
    if (is_free(rsf, x)) free.insert(i);
    if (multiplicity(rsf, x) != Multiplicity::kNonLinear) linear.insert(i);
  }
  return SharingTriple(universe, alpha_sh(rsf, universe), free, linear);
}

bool satisfies(const RationalSolvedForm& rsf, const SharingTriple& triple) {
  const VariableUniverse& x = triple.universe();
  if (!alpha_sh(rsf, x).subset_of(triple.sharing())) return false;
  for (std::size_t i : triple.free()) {
    if (!is_free(rsf, x.name(i))) return false;
  }
  for (std::size_t i : triple.linear()) {
    if (multiplicity(rsf, x.name(i)) == Multiplicity::kNonLinear) return false;
  }
  return true;
}

bool in_gamma_sfl(const EquationSet& equations, const SharingTriple& triple) {
  require_vars_in(equations, triple.universe());
  const auto rsf = unify(equations);
  return rsf.has_value() && satisfies(*rsf, triple);
}

bool in_gamma_pos(const EquationSet& equations, const PosFormula& f) {
  require_vars_in(equations, f.universe());
  const auto rsf = unify(equations);
  return rsf.has_value() && entails(alpha_pos(*rsf, f.universe()), f);
}

}  // namespace setshare
