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

TEST_CASE("univ replaces every variable by Top") {
  TypeScheme s{{"a"},
               ttuple({tcon("List", {tvar("a")}), tcon("List", {tvar("a")})})};
  GroundRef g = univ(s);
  CHECK(ground_equal(
      g, gtuple({gcon("List", {gtop()}), gcon("List", {gtop()})})));
  CHECK(ground_equal(univ(TypeScheme{{}, tint()}), gint()));
  CHECK(ground_equal(univ(TypeScheme{{"a"}, tvar("a")}), gtop()));
}

TEST_CASE("schema freshens each Top occurrence independently") {
  TypeScheme s = schema(gtuple({gtop(), gtop()}));
  REQUIRE(s.bound.size() == 2);
  CHECK(s.bound[0] != s.bound[1]);
  const auto& t = std::get<TTuple>(s.body->node());
  CHECK(std::get<TVar>(t.parts[0]->node()).name == s.bound[0]);
  CHECK(std::get<TVar>(t.parts[1]->node()).name == s.bound[1]);
}

TEST_CASE("univ of schema is the identity on the ground universe") {
  for (const auto& g : ground_universe(2))
    CHECK(ground_equal(univ(schema(g)), g));
}

TEST_CASE("instance_le first-order matching") {
  TypeScheme pair_same{{"a"}, ttuple({tvar("a"), tvar("a")})};
  CHECK(instance_le(ttuple({tint(), tint()}), pair_same));
  // (Int x Bool) is not an instance of forall a. (a x a).
  CHECK_FALSE(instance_le(ttuple({tint(), tcon("Bool")}), pair_same));
  TypeScheme any_list{{"a"}, tcon("List", {tvar("a")})};
  CHECK(instance_le(tcon("List", {tint()}), any_list));
  CHECK(instance_le(tcon("List", {tcon("List", {tint()})}), any_list));
  CHECK_FALSE(instance_le(tint(), any_list));
  // Unquantified variables must match themselves only.
  TypeScheme rigid{{}, tvar("b")};
  CHECK(instance_le(tvar("b"), rigid));
  CHECK_FALSE(instance_le(tint(), rigid));
}

TEST_CASE("closed_le wildcard matching") {
  CHECK(closed_le(gint(), gtop()));
  CHECK(closed_le(gtop(), gtop()));
  CHECK_FALSE(closed_le(gtop(), gint()));
  CHECK(closed_le(gcon("Nest", {gtuple({gint(), gint()})}),
                  gcon("Nest", {gtop()})));
  CHECK_FALSE(closed_le(gcon("Nest", {gtop()}),
                        gcon("Nest", {gtuple({gint(), gint()})})));
  CHECK_FALSE(closed_le(gcon("List", {gint()}), gcon("Nest", {gint()})));
  for (const auto& g : ground_universe(2)) CHECK(closed_le(g, g));
}

TEST_CASE("anti-unification base equations") {
  GroundRef li = gcon("List", {gint()});
  GroundRef lb = gcon("List", {gcon("Bool")});
  CHECK(ground_equal(anti_unify(gint(), gint()), gint()));
  CHECK(ground_equal(anti_unify(li, lb), gcon("List", {gtop()})));
  CHECK(ground_equal(anti_unify(gint(), lb), gtop()));
  CHECK(ground_equal(anti_unify(gtop(), gint()), gtop()));
  CHECK(ground_equal(anti_unify(gtuple({gint(), gint()}),
                                gtuple({gint(), lb})),
                     gtuple({gint(), gtop()})));
  // Arity conflicts collapse to Top.
  CHECK(ground_equal(anti_unify(gtuple({gint(), gint()}),
                                gtuple({gint(), gint(), gint()})),
                     gtop()));
  // Bottom is neutral.
  CHECK(ground_equal(anti_unify(EnvType::bottom(), lb), lb));
  CHECK(ground_equal(anti_unify(EnvType(li), lb), gcon("List", {gtop()})));
}

TEST_CASE("anti-unification is an upper bound w.r.t. closed_le") {
  auto uni = ground_universe(1);
  for (const auto& a : uni)
    for (const auto& b : uni) {
      GroundRef c = anti_unify(a, b);
      CHECK(closed_le(a, c));
      CHECK(closed_le(b, c));
      CHECK(ground_equal(c, anti_unify(b, a)));
    }
}

TEST_CASE("TypeDefs rejects duplicate constructors and bad payloads") {
  TypeDefs defs;
  TypeDecl d1;
  d1.constants = {"C"};
  defs.add("T", std::move(d1));
  TypeDecl d2;
  d2.constants = {"C"};
  CHECK_THROWS_AS(defs.add("U", std::move(d2)), DefsError);

  TypeDefs bad;
  TypeDecl d3;
  d3.params = {"a"};
  d3.unary = {{"F", tcon("Missing", {tvar("a")})}};
  bad.add("V", std::move(d3));
  CHECK_THROWS_AS(bad.validate(), DefsError);

  TypeDefs badvar;
  TypeDecl d4;
  d4.constants = {"K"};
  d4.unary = {{"G", tvar("zz")}};
  badvar.add("W", std::move(d4));
  CHECK_THROWS_AS(badvar.validate(), DefsError);
}

TEST_CASE("instantiate_def substitutes ground arguments") {
  TypeDefs defs = make_defs();
  InstantiatedDecl inst = instantiate_def(defs, "List", {gint()});
  REQUIRE(inst.constants == std::vector<std::string>{"Nil"});
  REQUIRE(inst.unary.size() == 1);
  CHECK(inst.unary[0].first == "Cons");
  CHECK(ground_equal(inst.unary[0].second,
                     gtuple({gint(), gcon("List", {gint()})})));

  InstantiatedDecl nest = instantiate_def(defs, "Nest", {gtop()});
  CHECK(ground_equal(nest.unary[0].second,
                     gcon("Nest", {gtuple({gtop(), gtop()})})));

  CHECK_THROWS_AS(instantiate_def(defs, "List", {}), DefsError);
  CHECK_THROWS_AS(instantiate_def(defs, "NoSuch", {gint()}), DefsError);
}

TEST_CASE("ctor lookup carries 1-based ranks per kind") {
  TypeDefs defs = make_defs();
  const auto* nil = defs.ctor("Nil");
  REQUIRE(nil);
  CHECK(nil->constant);
  CHECK(nil->rank == 1);
  const auto* t = defs.ctor("True");
  REQUIRE(t);
  CHECK(t->rank == 2);
  const auto* cons = defs.ctor("Cons");
  REQUIRE(cons);
  CHECK_FALSE(cons->constant);
  CHECK(cons->rank == 1);
  CHECK(defs.ctor("NoSuch") == nullptr);
}

TEST_CASE("gen quantifies exactly the variables absent from the environment") {
  TypeEnv env;
  env.bind(VarKind::Shared, "x", TypeScheme{{}, tcon("List", {tvar("a")})});
  TypeScheme s = gen(env, ttuple({tvar("a"), tvar("b")}));
  CHECK(s.bound == std::vector<std::string>{"b"});
  TypeScheme s2 = gen(TypeEnv{}, ttuple({tvar("a"), tvar("b")}));
  CHECK(s2.bound == std::vector<std::string>{"a", "b"});
}

TEST_CASE("apply_subst substitutes and leaves other variables alone") {
  Subst s{{"a", tint()}};
  TypeRef t = apply_subst(s, ttuple({tvar("a"), tvar("b")}));
  CHECK(type_equal(t, ttuple({tint(), tvar("b")})));
}

TEST_CASE("tuples require at least two parts") {
  CHECK_THROWS_AS(ttuple({tint()}), UsageError);
  CHECK_THROWS_AS(gtuple({gint()}), UsageError);
}
