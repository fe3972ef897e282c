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

#ifndef UMV_GRAPH_HPP
#define UMV_GRAPH_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "umv/value.hpp"

namespace umv {

using NodeId = uint32_t;

struct LeafInt {
  int64_t value;
};
struct BlockNode {
  uint32_t mark;
  std::vector<NodeId> children;
};

struct GraphNode {
  std::variant<LeafInt, BlockNode> node;
  bool is_leaf() const { return std::holds_alternative<LeafInt>(node); }
  const BlockNode& block() const { return std::get<BlockNode>(node); }
  const LeafInt& leaf() const { return std::get<LeafInt>(node); }
};

/// A rooted, possibly cyclic memory graph of integer leaves and marked blocks.
class RawGraph {
 public:
  RawGraph() = default;
  RawGraph(std::vector<GraphNode> nodes, NodeId root)
      : nodes_(std::move(nodes)), root_(root) {}

  NodeId add_leaf(int64_t value);
  NodeId add_block(uint32_t mark, std::vector<NodeId> children);
  void set_child(NodeId block, size_t index, NodeId child);
  void set_root(NodeId root) { root_ = root; }

  NodeId root() const { return root_; }
  size_t size() const { return nodes_.size(); }
  const GraphNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<GraphNode>& nodes() const { return nodes_; }

  /// Child ids in range, all nodes reachable from the root, block mark/arity
  /// discipline. Throws UsageError on violation.
  void validate() const;

 private:
  std::vector<GraphNode> nodes_;
  NodeId root_ = 0;
};

/// Strongly connected components in dependency-topological order: each
/// component appears after every component it references.
std::vector<std::vector<NodeId>> tarjan_scc(const RawGraph& g);

/// Depth-first linearization into a value term: multiply referenced acyclic
/// blocks become let bindings wrapping the context explored when their last
/// reference is reached; cycles become fix constructions over the nodes the
/// surrounding context references. Binder names p0,p1,.../r0,r1,... are
/// assigned deterministically in traversal order.
ValueRef linearize(const RawGraph& g);

/// Inverse of linearize: rebuild the graph, turning let/fix bindings into
/// shared nodes and back edges. Requires a closed, well-formed term.
RawGraph delinearize(const ValueRef& v);

/// Ordered rooted graph equivalence: parallel traversal with a consistent
/// block-node bijection; leaves compare by integer value.
bool rooted_equal(const RawGraph& a, const RawGraph& b);

}  // namespace umv

#endif  // UMV_GRAPH_HPP
