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

#include "doctest.h"
#include "test_support.hpp"

using namespace umv;
using namespace umv::test;

TEST_CASE("validate enforces reachability and block discipline") {
  RawGraph g;
  NodeId l = g.add_leaf(1);
  g.add_leaf(2);  // unreachable
  NodeId b = g.add_block(0, {l, l});
  g.set_root(b);
  CHECK_THROWS_AS(g.validate(), UsageError);

  RawGraph g2;
  NodeId a = g2.add_leaf(1);
  NodeId bad = g2.add_block(2, {a, a});  // unary mark, arity 2
  g2.set_root(bad);
  CHECK_THROWS_AS(g2.validate(), UsageError);

  CHECK_THROWS_AS(RawGraph{}.validate(), UsageError);
}

TEST_CASE("tarjan emits components after their references") {
  // Diamond DAG: root -> {x, y} -> z, all acyclic.
  RawGraph g;
  NodeId z = g.add_block(0, {0, 0});
  NodeId lz1 = g.add_leaf(1), lz2 = g.add_leaf(2);
  g.set_child(z, 0, lz1);
  g.set_child(z, 1, lz2);
  NodeId x = g.add_block(1, {z});
  NodeId y = g.add_block(1, {z});
  NodeId root = g.add_block(0, {x, y});
  g.set_root(root);
  g.validate();

  auto sccs = tarjan_scc(g);
  CHECK(sccs.size() == 6);  // four blocks plus two leaves, all trivial
  std::map<NodeId, size_t> pos;
  for (size_t i = 0; i < sccs.size(); ++i)
    for (NodeId n : sccs[i]) pos[n] = i;
  CHECK(pos[z] < pos[x]);
  CHECK(pos[z] < pos[y]);
  CHECK(pos[x] < pos[root]);
  CHECK(pos[y] < pos[root]);
}

TEST_CASE("tarjan agrees with the brute-force mutual-reachability oracle") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 60; ++iter) {
    RawGraph g = random_graph(rng, 2 + iter % 20);
    auto sccs = tarjan_scc(g);
    std::set<std::set<NodeId>> got;
    for (const auto& c : sccs) got.insert(std::set<NodeId>(c.begin(), c.end()));
    CHECK(got == brute_sccs(g));
    // Emission order: every child edge leaving a component points backward.
    std::map<NodeId, size_t> pos;
    for (size_t i = 0; i < sccs.size(); ++i)
      for (NodeId n : sccs[i]) pos[n] = i;
    for (NodeId u = 0; u < g.size(); ++u) {
      const GraphNode& gn = g.node(u);
      if (gn.is_leaf()) continue;
      for (NodeId c : gn.block().children) CHECK(pos[c] <= pos[u]);
    }
  }
}

TEST_CASE("linearize: shared leaf becomes a let binding") {
  RawGraph g;
  NodeId l = g.add_leaf(1);
  NodeId b = g.add_block(0, {l, l});
  g.set_root(b);
  ValueRef v = linearize(g);
  CHECK(value_equal(
      v, v_let({"p0"}, v_int(1), v_block(0, {v_share("p0"), v_share("p0")}))));
}

TEST_CASE("linearize: self-loop becomes a fix") {
  RawGraph g;
  NodeId b = g.add_block(1, {0});
  g.set_child(b, 0, b);
  g.set_root(b);
  ValueRef v = linearize(g);
  CHECK(value_equal(v, v_fix({"r0"}, v_block(1, {v_rec("r0")}))));
}

TEST_CASE("linearize: two-node cycle referenced from both sides") {
  // root -> (x, y), x -> y, y -> x: both cycle nodes externally named.
  RawGraph g;
  NodeId x = g.add_block(1, {0});
  NodeId y = g.add_block(1, {x});
  g.set_child(x, 0, y);
  NodeId root = g.add_block(0, {x, y});
  g.set_root(root);
  ValueRef v = linearize(g);
  // A two-root fix bound by a multi-binder let.
  const auto* l = std::get_if<VLet>(&v->node);
  REQUIRE(l);
  REQUIRE(l->binders.size() == 2);
  const auto* f = std::get_if<VFix>(&l->bound->node);
  REQUIRE(f);
  CHECK(f->binders.size() == 2);
  CHECK(well_formed(v).ok());
  CHECK(rooted_equal(delinearize(v), g));
}

TEST_CASE("linearize/delinearize round trip on random graphs") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    RawGraph g = random_graph(rng, 1 + iter % 40);
    ValueRef v = linearize(g);
    WfReport wf = well_formed(v);
    CHECK(wf.ok());
    RawGraph back = delinearize(v);
    CHECK(rooted_equal(back, g));
    CHECK(rooted_equal(g, back));
  }
}

TEST_CASE("linearize round trip on larger graphs") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 10; ++iter) {
    RawGraph g = random_graph(rng, 200);
    CHECK(rooted_equal(delinearize(linearize(g)), g));
  }
}

TEST_CASE("rooted_equal: sharing is distinguished from duplication") {
  RawGraph shared;
  {
    NodeId l1 = shared.add_leaf(5);
    NodeId c = shared.add_block(1, {l1});
    NodeId r = shared.add_block(0, {c, c});
    shared.set_root(r);
  }
  RawGraph dup;
  {
    NodeId l1 = dup.add_leaf(5), l2 = dup.add_leaf(5);
    NodeId c1 = dup.add_block(1, {l1});
    NodeId c2 = dup.add_block(1, {l2});
    NodeId r = dup.add_block(0, {c1, c2});
    dup.set_root(r);
  }
  CHECK_FALSE(rooted_equal(shared, dup));
  CHECK_FALSE(rooted_equal(dup, shared));
  CHECK(rooted_equal(shared, shared));

  // Same structure under a different node numbering is equal.
  RawGraph renum;
  {
    NodeId r = renum.add_block(0, {0, 0});
    NodeId c = renum.add_block(1, {0});
    NodeId l = renum.add_leaf(5);
    renum.set_child(c, 0, l);
    renum.set_child(r, 0, c);
    renum.set_child(r, 1, c);
    renum.set_root(r);
  }
  CHECK(rooted_equal(shared, renum));
}

TEST_CASE("rooted_equal compares leaves by value") {
  RawGraph a;
  NodeId al = a.add_leaf(1);
  a.set_root(a.add_block(0, {al, al}));
  RawGraph b;
  NodeId b1 = b.add_leaf(1), b2 = b.add_leaf(1);
  b.set_root(b.add_block(0, {b1, b2}));
  CHECK(rooted_equal(a, b));  // leaf sharing is not observable
  RawGraph c;
  NodeId c1 = c.add_leaf(1), c2 = c.add_leaf(2);
  c.set_root(c.add_block(0, {c1, c2}));
  CHECK_FALSE(rooted_equal(a, c));
}

TEST_CASE("delinearize rejects ill-formed terms") {
  CHECK_THROWS_AS(delinearize(v_share("p")), UsageError);
  CHECK_THROWS_AS(delinearize(v_let({"p"}, v_int(1), v_int(2))), UsageError);
}

TEST_CASE("nested cycles linearize to nested fixes") {
  // outer: a -> b -> a; b also -> inner self-loop c -> c.
  RawGraph g;
  NodeId a = g.add_block(1, {0});
  NodeId c = g.add_block(1, {0});
  g.set_child(c, 0, c);
  NodeId b = g.add_block(0, {a, c});
  g.set_child(a, 0, b);
  g.set_root(a);
  g.validate();
  ValueRef v = linearize(g);
  CHECK(well_formed(v).ok());
  CHECK(rooted_equal(delinearize(v), g));
  const auto* f = std::get_if<VFix>(&v->node);
  REQUIRE(f);
}
