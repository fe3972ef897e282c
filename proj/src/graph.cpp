// Copyright 2026 The umv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umv/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace umv {

NodeId RawGraph::add_leaf(int64_t value) {
  nodes_.push_back(GraphNode{LeafInt{value}});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId RawGraph::add_block(uint32_t mark, std::vector<NodeId> children) {
  nodes_.push_back(GraphNode{BlockNode{mark, std::move(children)}});
  return static_cast<NodeId>(nodes_.size() - 1);
}

void RawGraph::set_child(NodeId block, size_t index, NodeId child) {
  auto& b = std::get<BlockNode>(nodes_.at(block).node);
  b.children.at(index) = child;
}

void RawGraph::validate() const {
  if (nodes_.empty()) throw UsageError("graph has no nodes");
  if (root_ >= nodes_.size()) throw UsageError("graph root out of range");
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<NodeId> stack{root_};
  seen[root_] = 1;
  size_t visited = 0;
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    ++visited;
    if (nodes_[n].is_leaf()) continue;
    const auto& b = nodes_[n].block();
    if (b.mark == 0 && b.children.size() < 2)
      throw UsageError("tuple block with arity < 2");
    if (b.mark >= 1 && b.children.size() != 1)
      throw UsageError("constructor block with arity != 1");
    for (NodeId c : b.children) {
      if (c >= nodes_.size()) throw UsageError("child id out of range");
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  if (visited != nodes_.size())
    throw UsageError("graph has nodes unreachable from the root");
}

std::vector<std::vector<NodeId>> tarjan_scc(const RawGraph& g) {
  const size_t n = g.size();
  std::vector<uint32_t> index(n, 0), lowlink(n, 0);
  std::vector<char> on_stack(n, 0), visited(n, 0);
  std::vector<NodeId> scc_stack;
  std::vector<std::vector<NodeId>> out;
  uint32_t counter = 1;

  struct Frame {
    NodeId node;
    size_t next_child;
  };
  std::vector<Frame> dfs;
  auto run_from = [&](NodeId start) {
    if (visited[start]) return;
    dfs.push_back({start, 0});
    visited[start] = 1;
    index[start] = lowlink[start] = counter++;
    scc_stack.push_back(start);
    on_stack[start] = 1;
    while (!dfs.empty()) {
      Frame& f = dfs.back();
      const GraphNode& gn = g.node(f.node);
      size_t nchildren = gn.is_leaf() ? 0 : gn.block().children.size();
      if (f.next_child < nchildren) {
        NodeId c = gn.block().children[f.next_child++];
        if (!visited[c]) {
          visited[c] = 1;
          index[c] = lowlink[c] = counter++;
          scc_stack.push_back(c);
          on_stack[c] = 1;
          dfs.push_back({c, 0});
        } else if (on_stack[c]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[c]);
        }
      } else {
        NodeId v = f.node;
        dfs.pop_back();
        if (!dfs.empty())
          lowlink[dfs.back().node] = std::min(lowlink[dfs.back().node], lowlink[v]);
        if (lowlink[v] == index[v]) {
          std::vector<NodeId> comp;
          for (;;) {
            NodeId w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          out.push_back(std::move(comp));
        }
      }
    }
  };
  run_from(g.root());
  for (NodeId i = 0; i < n; ++i) run_from(i);  // unreachable leftovers, if any
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// linearize
// ---------------------------------------------------------------------------

struct FixGroup {
  std::vector<NodeId> members;  // sorted for membership tests
  std::vector<NodeId> roots;    // binder order (graph preorder)
  uint32_t ext_refs = 0;        // references from outside the member set
};

struct LinAnalysis {
  const RawGraph& g;
  std::vector<uint32_t> refcount;            // in-degree, +1 for the root
  std::vector<std::vector<NodeId>> preds;    // block predecessors
  std::vector<int> group_of_root;            // gid if n is a fix root, else -1
  std::vector<int> inner_group;              // innermost group membership
  std::vector<uint32_t> preorder;            // DFS discovery rank
  std::vector<FixGroup> groups;

  explicit LinAnalysis(const RawGraph& graph) : g(graph) {}
};

bool member_of(const FixGroup& grp, NodeId n) {
  return std::binary_search(grp.members.begin(), grp.members.end(), n);
}

// Tarjan restricted to an induced node subset.
std::vector<std::vector<NodeId>> sccs_within(const RawGraph& g,
                                             const std::vector<NodeId>& subset) {
  std::set<NodeId> in(subset.begin(), subset.end());
  std::map<NodeId, uint32_t> index, lowlink;
  std::set<NodeId> on_stack;
  std::vector<NodeId> stack;
  std::vector<std::vector<NodeId>> out;
  uint32_t counter = 1;
  struct Frame {
    NodeId node;
    size_t next_child;
  };
  std::vector<Frame> dfs;
  for (NodeId start : subset) {
    if (index.count(start)) continue;
    dfs.push_back({start, 0});
    index[start] = lowlink[start] = counter++;
    stack.push_back(start);
    on_stack.insert(start);
    while (!dfs.empty()) {
      Frame& f = dfs.back();
      const GraphNode& gn = g.node(f.node);
      size_t nchildren = gn.is_leaf() ? 0 : gn.block().children.size();
      bool descended = false;
      while (f.next_child < nchildren) {
        NodeId c = gn.block().children[f.next_child++];
        if (!in.count(c)) continue;
        if (!index.count(c)) {
          index[c] = lowlink[c] = counter++;
          stack.push_back(c);
          on_stack.insert(c);
          dfs.push_back({c, 0});
          descended = true;
          break;
        }
        if (on_stack.count(c))
          lowlink[f.node] = std::min(lowlink[f.node], index[c]);
      }
      if (descended) continue;
      if (f.next_child >= nchildren) {
        NodeId v = f.node;
        dfs.pop_back();
        if (!dfs.empty())
          lowlink[dfs.back().node] = std::min(lowlink[dfs.back().node], lowlink[v]);
        if (lowlink[v] == index[v]) {
          std::vector<NodeId> comp;
          for (;;) {
            NodeId w = stack.back();
            stack.pop_back();
            on_stack.erase(w);
            comp.push_back(w);
            if (w == v) break;
          }
          out.push_back(std::move(comp));
        }
      }
    }
  }
  return out;
}

bool nontrivial_scc(const RawGraph& g, const std::vector<NodeId>& comp) {
  if (comp.size() > 1) return true;
  NodeId n = comp[0];
  const GraphNode& gn = g.node(n);
  if (gn.is_leaf()) return false;
  for (NodeId c : gn.block().children)
    if (c == n) return true;
  return false;
}

// Peel externally referenced roots off each cyclic component, recursively,
// recording one fix group per level.
void decompose(LinAnalysis& a, const std::vector<NodeId>& subset) {
  for (auto& comp : sccs_within(a.g, subset)) {
    if (!nontrivial_scc(a.g, comp)) continue;
    std::vector<NodeId> members = comp;
    std::sort(members.begin(), members.end());
    FixGroup grp;
    grp.members = members;
    for (NodeId n : comp) {
      bool external = (n == a.g.root());
      for (NodeId u : a.preds[n])
        if (!std::binary_search(members.begin(), members.end(), u)) {
          external = true;
          break;
        }
      if (external) grp.roots.push_back(n);
    }
    // Binder order follows first-discovery order of the plain DFS.
    std::sort(grp.roots.begin(), grp.roots.end(), [&](NodeId x, NodeId y) {
      return a.preorder[x] < a.preorder[y];
    });
    uint32_t ext = (std::find(grp.roots.begin(), grp.roots.end(), a.g.root()) !=
                    grp.roots.end())
                       ? 1u
                       : 0u;
    for (NodeId n : grp.roots)
      for (NodeId u : a.preds[n])
        if (!member_of(grp, u)) ++ext;
    grp.ext_refs = ext;

    int gid = static_cast<int>(a.groups.size());
    a.groups.push_back(grp);
    for (NodeId n : grp.members) a.inner_group[n] = gid;
    for (NodeId n : grp.roots) a.group_of_root[n] = gid;

    std::vector<NodeId> rest;
    for (NodeId n : members)
      if (a.group_of_root[n] != gid) rest.push_back(n);
    if (!rest.empty()) decompose(a, rest);
  }
}

LinAnalysis analyze(const RawGraph& g) {
  LinAnalysis a(g);
  const size_t n = g.size();
  a.refcount.assign(n, 0);
  a.preds.assign(n, {});
  a.group_of_root.assign(n, -1);
  a.inner_group.assign(n, -1);
  a.preorder.assign(n, 0);
  a.refcount[g.root()] += 1;
  for (NodeId u = 0; u < n; ++u) {
    const GraphNode& gn = g.node(u);
    if (gn.is_leaf()) continue;
    for (NodeId c : gn.block().children) {
      a.refcount[c] += 1;
      a.preds[c].push_back(u);
    }
  }
  // Plain DFS preorder for deterministic binder ordering.
  {
    uint32_t rank = 1;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{g.root()};
    seen[g.root()] = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      a.preorder[v] = rank++;
      const GraphNode& gn = g.node(v);
      if (gn.is_leaf()) continue;
      const auto& ch = gn.block().children;
      for (auto it = ch.rbegin(); it != ch.rend(); ++it)
        if (!seen[*it]) {
          seen[*it] = 1;
          stack.push_back(*it);
        }
    }
  }
  std::vector<NodeId> all(n);
  for (NodeId i = 0; i < n; ++i) all[i] = i;
  decompose(a, all);

  // Nested groups override inner_group for their members; redo innermost
  // assignment by group size (smaller member sets are deeper).
  std::vector<int> order(a.groups.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a.groups[x].members.size() > a.groups[y].members.size();
  });
  for (int gid : order)
    for (NodeId m : a.groups[gid].members) a.inner_group[m] = gid;
  return a;
}

class Linearizer {
 public:
  explicit Linearizer(const RawGraph& g) : g_(g), a_(analyze(g)) {
    const size_t n = g.size();
    share_name_.assign(n, "");
    rec_name_.assign(n, "");
    pending_node_.assign(n, 0);
    for (NodeId i = 0; i < n; ++i) pending_node_[i] = a_.refcount[i];
    pending_group_.clear();
    group_active_.assign(a_.groups.size(), 0);
    for (const auto& grp : a_.groups) pending_group_.push_back(grp.ext_refs);
    region_parent_.assign(a_.groups.size(), -2);  // -2 = unset
  }

  ValueRef run() {
    regions_[0];  // create the top region
    ValueRef body = resolve(g_.root());
    return drain_and_wrap(0, body);
  }

 private:
  struct WrapItem {
    std::vector<std::string> binders;
    ValueRef bound;
  };
  struct Unit {
    bool is_group;
    uint32_t id;
  };
  struct Region {
    std::deque<Unit> queue;
    std::vector<WrapItem> wraps;
  };

  // Region ids: 0 is the top level, gid+1 is the body of group gid.
  int region_of_group(int gid) { return gid + 1; }

  int region_parent(int region) {
    if (region == 0) return -1;
    int gid = region - 1;
    if (region_parent_[gid] != -2) return region_parent_[gid];
    // The capsule of a group wraps at the join of all its external
    // reference sites.
    const FixGroup& grp = a_.groups[gid];
    int lca = -1;
    if (std::find(grp.roots.begin(), grp.roots.end(), g_.root()) !=
        grp.roots.end())
      lca = 0;
    for (NodeId n : grp.roots)
      for (NodeId u : a_.preds[n])
        if (!member_of(grp, u)) lca = join(lca, node_region(u));
    if (lca < 0) lca = 0;
    region_parent_[gid] = lca;
    return lca;
  }

  int node_region(NodeId u) {
    int gid = a_.inner_group[u];
    return gid < 0 ? 0 : region_of_group(gid);
  }

  int region_depth(int region) {
    int d = 0;
    for (int r = region; r != 0; r = region_parent(r)) ++d;
    return d;
  }

  int join(int r1, int r2) {
    if (r1 < 0) return r2;
    if (r2 < 0) return r1;
    int d1 = region_depth(r1), d2 = region_depth(r2);
    while (d1 > d2) { r1 = region_parent(r1); --d1; }
    while (d2 > d1) { r2 = region_parent(r2); --d2; }
    while (r1 != r2) {
      r1 = region_parent(r1);
      r2 = region_parent(r2);
    }
    return r1;
  }

  int wrap_region_of_node(NodeId m) {
    int lca = (m == g_.root()) ? 0 : -1;
    for (NodeId u : a_.preds[m]) lca = join(lca, node_region(u));
    return lca < 0 ? 0 : lca;
  }

  std::string fresh_share() { return "p" + std::to_string(p_counter_++); }
  std::string fresh_rec() { return "r" + std::to_string(r_counter_++); }

  ValueRef resolve(NodeId n) {
    int gid = a_.group_of_root[n];
    if (gid >= 0 && group_active_[gid]) return v_rec(rec_name_[n]);
    if (gid >= 0) {
      const FixGroup& grp = a_.groups[gid];
      if (grp.ext_refs == 1) return build_fix(gid);  // sole reference: inline
      if (share_name_[n].empty()) share_name_[n] = fresh_share();
      ValueRef occ = v_share(share_name_[n]);
      if (--pending_group_[gid] == 0)
        regions_.at(region_parent(region_of_group(gid)))
            .queue.push_back(Unit{true, static_cast<uint32_t>(gid)});
      return occ;
    }
    if (a_.refcount[n] > 1) {
      if (share_name_[n].empty()) share_name_[n] = fresh_share();
      ValueRef occ = v_share(share_name_[n]);
      if (--pending_node_[n] == 0)
        regions_.at(wrap_region_of_node(n)).queue.push_back(Unit{false, n});
      return occ;
    }
    return expand(n);
  }

  ValueRef expand(NodeId n) {
    const GraphNode& gn = g_.node(n);
    if (gn.is_leaf()) return v_int(gn.leaf().value);
    const BlockNode& b = gn.block();
    std::vector<ValueRef> fields;
    fields.reserve(b.children.size());
    for (NodeId c : b.children) fields.push_back(resolve(c));
    return v_block(b.mark, std::move(fields));
  }

  ValueRef build_fix(int gid) {
    const FixGroup& grp = a_.groups[gid];
    group_active_[gid] = 1;
    std::vector<std::string> binders;
    for (NodeId n : grp.roots) {
      rec_name_[n] = fresh_rec();
      binders.push_back(rec_name_[n]);
    }
    int region = region_of_group(gid);
    regions_[region];  // activate
    std::vector<ValueRef> contents;
    contents.reserve(grp.roots.size());
    for (NodeId n : grp.roots) contents.push_back(expand(n));
    ValueRef body = contents.size() == 1 ? contents[0]
                                         : v_block(0, std::move(contents));
    body = drain_and_wrap(region, body);
    regions_.erase(region);
    group_active_[gid] = 0;
    return v_fix(std::move(binders), std::move(body));
  }

  ValueRef drain_and_wrap(int region, ValueRef primary) {
    Region& r = regions_.at(region);
    while (!r.queue.empty()) {
      Unit u = r.queue.front();
      r.queue.pop_front();
      if (u.is_group) {
        const FixGroup& grp = a_.groups[u.id];
        std::vector<std::string> binders;
        for (NodeId n : grp.roots) binders.push_back(share_name_[n]);
        ValueRef bound = build_fix(static_cast<int>(u.id));
        r.wraps.push_back(WrapItem{std::move(binders), std::move(bound)});
      } else {
        NodeId m = u.id;
        r.wraps.push_back(WrapItem{{share_name_[m]}, expand(m)});
      }
    }
    // A wrap is queued once all its references have been seen, so anything a
    // bound mentions completes later; later wraps therefore nest outermost.
    ValueRef out = std::move(primary);
    for (auto& w : r.wraps) out = v_let(w.binders, w.bound, out);
    return out;
  }

  const RawGraph& g_;
  LinAnalysis a_;
  std::vector<std::string> share_name_, rec_name_;
  std::vector<uint32_t> pending_node_, pending_group_;
  std::vector<char> group_active_;
  std::vector<int> region_parent_;
  std::map<int, Region> regions_;
  int p_counter_ = 0, r_counter_ = 0;
};

}  // namespace

ValueRef linearize(const RawGraph& g) {
  g.validate();
  return Linearizer(g).run();
}

// ---------------------------------------------------------------------------
// delinearize
// ---------------------------------------------------------------------------

namespace {

class Delinearizer {
 public:
  RawGraph run(const ValueRef& v) {
    NodeId root = build(v);
    g_.set_root(root);
    return std::move(g_);
  }

 private:
  NodeId lookup(const std::string& name) {
    auto it = env_.find(name);
    if (it == env_.end())
      throw UsageError("delinearize: unbound variable " + name);
    return it->second;
  }

  NodeId build(const ValueRef& v) {
    const auto& n = v->node;
    if (const auto* i = std::get_if<VInt>(&n)) return g_.add_leaf(i->value);
    if (const auto* s = std::get_if<VShare>(&n)) return lookup(s->name);
    if (const auto* r = std::get_if<VRec>(&n)) return lookup(r->name);
    if (const auto* b = std::get_if<VBlock>(&n)) {
      std::vector<NodeId> children;
      children.reserve(b->fields.size());
      for (const auto& f : b->fields) children.push_back(build(f));
      return g_.add_block(b->mark, std::move(children));
    }
    if (const auto* l = std::get_if<VLet>(&n)) {
      bind_let(*l);
      return build(l->body);
    }
    const auto& f = std::get<VFix>(n);
    std::vector<NodeId> ids = build_fix(f.binders, f.body);
    if (ids.size() == 1) return ids[0];
    return g_.add_block(0, std::move(ids));
  }

  void bind_let(const VLet& l) {
    if (l.binders.size() == 1) {
      env_[l.binders[0]] = build(l.bound);
      return;
    }
    // A multi-binder let destructures its bound tuple; the tuple itself is
    // not a graph node.
    const auto& bn = l.bound->node;
    if (const auto* f = std::get_if<VFix>(&bn)) {
      if (f->binders.size() != l.binders.size())
        throw UsageError("delinearize: let/fix binder count mismatch");
      std::vector<NodeId> ids = build_fix(f->binders, f->body);
      for (size_t i = 0; i < l.binders.size(); ++i) env_[l.binders[i]] = ids[i];
      return;
    }
    if (const auto* b = std::get_if<VBlock>(&bn);
        b && b->mark == 0 && b->fields.size() == l.binders.size()) {
      for (size_t i = 0; i < l.binders.size(); ++i)
        env_[l.binders[i]] = build(b->fields[i]);
      return;
    }
    throw UsageError("delinearize: multi-binder let needs a tuple or fix bound");
  }

  std::vector<NodeId> build_fix(const std::vector<std::string>& binders,
                                ValueRef body) {
    // Peel sharing introduced inside the cycle before the components are
    // known, then pre-allocate the component blocks so back edges resolve.
    std::vector<const VLet*> lets;
    while (const auto* l = std::get_if<VLet>(&body->node)) {
      lets.push_back(l);
      body = l->body;
    }
    std::vector<ValueRef> components;
    if (binders.size() == 1) {
      components.push_back(body);
    } else {
      const auto* b = std::get_if<VBlock>(&body->node);
      if (!b || b->mark != 0 || b->fields.size() != binders.size())
        throw UsageError("delinearize: fix body must be a matching tuple");
      components = b->fields;
    }
    std::vector<NodeId> ids;
    ids.reserve(components.size());
    for (const auto& c : components) {
      if (const auto* b = std::get_if<VBlock>(&c->node)) {
        ids.push_back(g_.add_block(b->mark,
                                   std::vector<NodeId>(b->fields.size(), 0)));
      } else if (const auto* i = std::get_if<VInt>(&c->node)) {
        ids.push_back(g_.add_leaf(i->value));
      } else {
        throw UsageError("delinearize: fix component must be a block");
      }
    }
    for (size_t i = 0; i < binders.size(); ++i) env_[binders[i]] = ids[i];
    for (const auto* l : lets) bind_let(*l);
    for (size_t i = 0; i < components.size(); ++i) {
      const auto* b = std::get_if<VBlock>(&components[i]->node);
      if (!b) continue;  // leaf component, already built
      for (size_t j = 0; j < b->fields.size(); ++j)
        g_.set_child(ids[i], j, build(b->fields[j]));
    }
    return ids;
  }

  RawGraph g_;
  std::map<std::string, NodeId> env_;
};

}  // namespace

RawGraph delinearize(const ValueRef& v) {
  WfReport wf = well_formed(v, /*require_closed=*/true);
  if (!wf.ok())
    throw UsageError(std::string("delinearize: ill-formed term: ") +
                     to_string(*wf.violation));
  RawGraph g = Delinearizer().run(v);
  g.validate();
  return g;
}

bool rooted_equal(const RawGraph& a, const RawGraph& b) {
  std::map<NodeId, NodeId> fwd, bwd;
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    auto [na, nb] = stack.back();
    stack.pop_back();
    const GraphNode& ga = a.node(na);
    const GraphNode& gb = b.node(nb);
    if (ga.is_leaf() != gb.is_leaf()) return false;
    if (ga.is_leaf()) {
      if (ga.leaf().value != gb.leaf().value) return false;
      continue;
    }
    auto itf = fwd.find(na);
    auto itb = bwd.find(nb);
    if (itf != fwd.end() || itb != bwd.end()) {
      if (itf == fwd.end() || itb == bwd.end()) return false;
      if (itf->second != nb || itb->second != na) return false;
      continue;  // pair already checked
    }
    const BlockNode& ba = ga.block();
    const BlockNode& bb = gb.block();
    if (ba.mark != bb.mark || ba.children.size() != bb.children.size())
      return false;
    fwd[na] = nb;
    bwd[nb] = na;
    for (size_t i = 0; i < ba.children.size(); ++i)
      stack.emplace_back(ba.children[i], bb.children[i]);
  }
  return true;
}

}  // namespace umv
