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

#include "umv/oracles.hpp"

#include <memory>
#include <random>

namespace umv {

namespace {

// ---------------------------------------------------------------------------
// Unification engine shared by hm_infer and mlrec_check.
// ---------------------------------------------------------------------------

struct IType;
using ITRef = std::shared_ptr<IType>;

struct IType {
  ITRef link;  // union-find forwarding
  enum Kind { Var, Int, Tuple, Con } kind = Var;
  std::string name;         // constructor name, or source name of a free var
  std::vector<ITRef> args;  // tuple parts or constructor arguments
  int id = 0;
};

struct InferFail {
  std::string message;
};

ITRef find(ITRef t) {
  while (t->link) {
    if (t->link->link) t->link = t->link->link;
    t = t->link;
  }
  return t;
}

bool occurs(const ITRef& var, ITRef t) {
  t = find(t);
  if (t == var) return true;
  for (const auto& a : t->args)
    if (occurs(var, a)) return true;
  return false;
}

void unify(ITRef a, ITRef b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a->kind == IType::Var) {
    if (occurs(a, b)) throw InferFail{"occurs check"};
    a->link = b;
    return;
  }
  if (b->kind == IType::Var) {
    unify(b, a);
    return;
  }
  if (a->kind != b->kind || a->name != b->name ||
      a->args.size() != b->args.size())
    throw InferFail{"constructor clash"};
  for (size_t i = 0; i < a->args.size(); ++i) unify(a->args[i], b->args[i]);
}

struct InfScheme {
  std::vector<ITRef> qvars;  // var nodes to instantiate afresh on use
  ITRef body;
};

class Infer {
 public:
  Infer(const TypeDefs& defs, const TypeEnv& env, const FixAnnotation* ann)
      : defs_(defs), ann_(ann) {
    for (const auto& e : env.entries())
      env_.push_back({e.name, from_scheme(e.scheme)});
  }

  ITRef fresh() {
    auto t = std::make_shared<IType>();
    t->id = next_id_++;
    return t;
  }

  ITRef named_var(const std::string& name) {
    auto it = named_.find(name);
    if (it != named_.end()) return it->second;
    ITRef v = fresh();
    v->name = name;
    named_[name] = v;
    return v;
  }

  ITRef make(IType::Kind kind, std::string name, std::vector<ITRef> args) {
    ITRef t = fresh();
    t->kind = kind;
    t->name = std::move(name);
    t->args = std::move(args);
    return t;
  }

  ITRef from_type(const TypeRef& t, const std::map<std::string, ITRef>& bound) {
    const auto& n = t->node();
    if (const auto* v = std::get_if<TVar>(&n)) {
      auto it = bound.find(v->name);
      return it != bound.end() ? it->second : named_var(v->name);
    }
    if (std::holds_alternative<TInt>(n)) return make(IType::Int, "", {});
    if (const auto* tp = std::get_if<TTuple>(&n)) {
      std::vector<ITRef> parts;
      for (const auto& p : tp->parts) parts.push_back(from_type(p, bound));
      return make(IType::Tuple, "", std::move(parts));
    }
    const auto& c = std::get<TCon>(n);
    std::vector<ITRef> args;
    for (const auto& a : c.args) args.push_back(from_type(a, bound));
    return make(IType::Con, c.name, std::move(args));
  }

  InfScheme from_scheme(const TypeScheme& s) {
    std::map<std::string, ITRef> bound;
    std::vector<ITRef> qvars;
    for (const auto& b : s.bound) {
      ITRef v = fresh();
      bound[b] = v;
      qvars.push_back(v);
    }
    return InfScheme{std::move(qvars), from_type(s.body, bound)};
  }

  ITRef instantiate(const InfScheme& s) {
    std::map<const IType*, ITRef> m;
    for (const auto& q : s.qvars) m[find(q).get()] = fresh();
    return inst_copy(s.body, m);
  }

  ITRef inst_copy(ITRef t, const std::map<const IType*, ITRef>& m) {
    t = find(t);
    if (t->kind == IType::Var) {
      auto it = m.find(t.get());
      return it != m.end() ? it->second : t;
    }
    std::vector<ITRef> args;
    for (const auto& a : t->args) args.push_back(inst_copy(a, m));
    return make(t->kind, t->name, std::move(args));
  }

  void unbound_vars(ITRef t, std::vector<ITRef>& out) const {
    t = find(t);
    if (t->kind == IType::Var) {
      for (const auto& v : out)
        if (v == t) return;
      out.push_back(t);
      return;
    }
    for (const auto& a : t->args) unbound_vars(a, out);
  }

  InfScheme generalize(const ITRef& t) const {
    std::vector<ITRef> mono;
    for (const auto& e : env_) {
      std::vector<ITRef> vs;
      unbound_vars(e.scheme.body, vs);
      for (const auto& v : vs) {
        bool is_q = false;
        for (const auto& q : e.scheme.qvars)
          if (find(q) == v) is_q = true;
        if (!is_q) mono.push_back(v);
      }
    }
    for (const auto& [_, v] : named_) mono.push_back(find(v));
    std::vector<ITRef> tvs, qvars;
    unbound_vars(t, tvs);
    for (const auto& v : tvs) {
      bool in_mono = false;
      for (const auto& m : mono)
        if (m == v) in_mono = true;
      if (!in_mono) qvars.push_back(v);
    }
    return InfScheme{std::move(qvars), t};
  }

  TypeScheme to_scheme(const InfScheme& s) const {
    std::map<const IType*, std::string> qnames;
    std::vector<std::string> bound;
    for (const auto& q : s.qvars) {
      std::string nm = "a" + std::to_string(qnames.size());
      qnames[find(q).get()] = nm;
      bound.push_back(nm);
    }
    return TypeScheme{std::move(bound), to_typeref(s.body, qnames)};
  }

  TypeRef to_typeref(ITRef t,
                     const std::map<const IType*, std::string>& qnames) const {
    t = find(t);
    switch (t->kind) {
      case IType::Var: {
        auto it = qnames.find(t.get());
        if (it != qnames.end()) return tvar(it->second);
        if (!t->name.empty()) return tvar(t->name);
        return tvar("_u" + std::to_string(t->id));
      }
      case IType::Int:
        return tint();
      case IType::Tuple: {
        std::vector<TypeRef> parts;
        for (const auto& a : t->args) parts.push_back(to_typeref(a, qnames));
        return ttuple(std::move(parts));
      }
      case IType::Con: {
        std::vector<TypeRef> args;
        for (const auto& a : t->args) args.push_back(to_typeref(a, qnames));
        return tcon(t->name, std::move(args));
      }
    }
    throw std::logic_error("unreachable");
  }

  const InfScheme& lookup(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->name == name) return it->scheme;
    throw UsageError("hm_infer: unbound variable " + name);
  }

  ITRef ctor_result(const TypeDefs::CtorInfo& info,
                    std::map<std::string, ITRef>& params_out) {
    const TypeDecl& d = defs_.decl(info.type_name);
    std::vector<ITRef> args;
    for (const auto& p : d.params) {
      ITRef v = fresh();
      params_out[p] = v;
      args.push_back(v);
    }
    return make(IType::Con, info.type_name, std::move(args));
  }

  ITRef infer(const ExprRef& e) {
    const auto& n = e->node;
    if (const auto* i = std::get_if<EInt>(&n)) {
      (void)i;
      return make(IType::Int, "", {});
    }
    if (const auto* s = std::get_if<EShare>(&n)) return instantiate(lookup(s->name));
    if (const auto* r = std::get_if<ERec>(&n)) return instantiate(lookup(r->name));
    if (const auto* t = std::get_if<ETuple>(&n)) {
      std::vector<ITRef> parts;
      for (const auto& p : t->parts) parts.push_back(infer(p));
      return make(IType::Tuple, "", std::move(parts));
    }
    if (const auto* c = std::get_if<EConst>(&n)) {
      const auto* info = defs_.ctor(c->ctor);
      if (!info || !info->constant)
        throw InferFail{"not a constant constructor: " + c->ctor};
      std::map<std::string, ITRef> params;
      return ctor_result(*info, params);
    }
    if (const auto* a = std::get_if<EApply>(&n)) {
      const auto* info = defs_.ctor(a->ctor);
      if (!info || info->constant)
        throw InferFail{"not a unary constructor: " + a->ctor};
      std::map<std::string, ITRef> params;
      ITRef result = ctor_result(*info, params);
      const TypeDecl& d = defs_.decl(info->type_name);
      ITRef payload = from_type(d.unary[info->rank - 1].second, params);
      unify(infer(a->arg), payload);
      return result;
    }
    if (const auto* l = std::get_if<ELet>(&n)) {
      ITRef tb = infer(l->bound);
      std::vector<ITRef> comps;
      if (l->binders.size() == 1) {
        comps.push_back(tb);
      } else {
        for (size_t i = 0; i < l->binders.size(); ++i) comps.push_back(fresh());
        unify(tb, make(IType::Tuple, "", comps));
      }
      for (size_t i = 0; i < l->binders.size(); ++i)
        env_.push_back({l->binders[i], generalize(comps[i])});
      ITRef out = infer(l->body);
      env_.resize(env_.size() - l->binders.size());
      return out;
    }
    const auto& f = std::get<EFix>(n);
    if (ann_) return infer_fix_annotated(f);
    std::vector<ITRef> taus;
    for (const auto& b : f.binders) {
      ITRef v = fresh();
      taus.push_back(v);
      env_.push_back({b, InfScheme{{}, v}});
    }
    ITRef tb = infer(f.body);
    unify(tb, taus.size() == 1 ? taus[0] : make(IType::Tuple, "", taus));
    env_.resize(env_.size() - f.binders.size());
    return tb;
  }

  ITRef infer_fix_annotated(const EFix& f) {
    for (const auto& b : f.binders) {
      auto it = ann_->find(b);
      if (it == ann_->end())
        throw UsageError("mlrec_check: missing annotation for " + b);
      env_.push_back({b, from_scheme(it->second)});
    }
    ITRef tb = infer(f.body);
    std::vector<ITRef> comps;
    if (f.binders.size() == 1) {
      comps.push_back(tb);
    } else {
      for (size_t i = 0; i < f.binders.size(); ++i) comps.push_back(fresh());
      unify(tb, make(IType::Tuple, "", comps));
    }
    env_.resize(env_.size() - f.binders.size());
    // Side condition: each annotation must be an instance of what the body
    // actually supports once generalized over the outer environment.
    std::vector<ITRef> results;
    for (size_t i = 0; i < f.binders.size(); ++i) {
      InfScheme g = generalize(comps[i]);
      TypeScheme gs = to_scheme(g);
      const TypeScheme& s = ann_->at(f.binders[i]);
      if (!instance_le(s.body, gs)) throw InferFail{"fix annotation mismatch"};
      results.push_back(instantiate(g));
    }
    return results.size() == 1 ? results[0]
                               : make(IType::Tuple, "", std::move(results));
  }

 private:
  struct EnvEntry {
    std::string name;
    InfScheme scheme;
  };
  const TypeDefs& defs_;
  const FixAnnotation* ann_;
  std::vector<EnvEntry> env_;
  std::map<std::string, ITRef> named_;
  int next_id_ = 0;
};

}  // namespace

std::variant<TypeScheme, InferenceFailure> hm_infer(const TypeDefs& defs,
                                                    const TypeEnv& env,
                                                    const ExprRef& e) {
  try {
    Infer inf(defs, env, nullptr);
    ITRef t = inf.infer(e);
    return inf.to_scheme(inf.generalize(t));
  } catch (const InferFail& f) {
    return InferenceFailure{f.message};
  }
}

bool mlrec_check(const TypeDefs& defs, const TypeEnv& env, const ExprRef& e,
                 const TypeRef& goal, const FixAnnotation& ann) {
  try {
    Infer inf(defs, env, &ann);
    ITRef t = inf.infer(e);
    TypeScheme s = inf.to_scheme(inf.generalize(t));
    return instance_le(goal, s);
  } catch (const InferFail&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// top_check: derivability over expressions, no code shared with the checker.
// ---------------------------------------------------------------------------

namespace {

class TopCheck {
 public:
  TopCheck(const TypeDefs& defs, CheckEnv env)
      : defs_(defs), env_(std::move(env)) {}

  bool run(const ExprRef& e, const GroundRef& goal) {
    const auto& n = e->node;
    const auto& gn = goal->node();

    if (const auto* i = std::get_if<EInt>(&n)) {
      if (std::holds_alternative<GInt>(gn)) return true;
      if (const auto* c = std::get_if<GCon>(&gn)) {
        InstantiatedDecl inst = instantiate_def(defs_, c->name, c->args);
        return i->value >= 1 &&
               i->value <= static_cast<int64_t>(inst.constants.size());
      }
      return false;
    }
    if (const auto* c = std::get_if<EConst>(&n)) {
      const auto* gc = std::get_if<GCon>(&gn);
      const auto* info = defs_.ctor(c->ctor);
      return gc && info && info->constant && info->type_name == gc->name;
    }
    if (const auto* a = std::get_if<EApply>(&n)) {
      const auto* gc = std::get_if<GCon>(&gn);
      const auto* info = defs_.ctor(a->ctor);
      if (!gc || !info || info->constant || info->type_name != gc->name)
        return false;
      InstantiatedDecl inst = instantiate_def(defs_, gc->name, gc->args);
      return run(a->arg, inst.unary[info->rank - 1].second);
    }
    if (const auto* t = std::get_if<ETuple>(&n)) {
      const auto* gt = std::get_if<GTuple>(&gn);
      if (!gt || gt->parts.size() != t->parts.size()) return false;
      for (size_t i = 0; i < t->parts.size(); ++i)
        if (!run(t->parts[i], gt->parts[i])) return false;
      return true;
    }
    if (const auto* s = std::get_if<EShare>(&n)) {
      CheckEnv::Entry* e2 = env_.find(s->name);
      if (!e2 || e2->kind != VarKind::Shared)
        throw UsageError("top_check: unbound shared variable " + s->name);
      e2->ty = EnvType(anti_unify(e2->ty, goal));
      return true;
    }
    if (const auto* r = std::get_if<ERec>(&n)) {
      const CheckEnv::Entry* e2 = env_.find(r->name);
      if (!e2 || e2->kind != VarKind::Recursive)
        throw UsageError("top_check: unbound recursive variable " + r->name);
      return closed_le(goal, e2->ty.ground());
    }
    if (const auto* l = std::get_if<ELet>(&n)) {
      for (const auto& b : l->binders)
        env_.bind(VarKind::Shared, b, EnvType::bottom());
      if (!run(l->body, goal)) return false;
      std::vector<GroundRef> goals;
      for (const auto& b : l->binders) {
        CheckEnv::Entry* e2 = env_.find(b);
        if (e2->ty.is_bottom()) return false;  // unused binder: no derivation
        goals.push_back(e2->ty.ground());
      }
      env_.remove(l->binders);
      return run(l->bound,
                 goals.size() == 1 ? goals[0] : gtuple(std::move(goals)));
    }
    const auto& f = std::get<EFix>(n);
    std::vector<GroundRef> comps;
    if (f.binders.size() == 1) {
      comps.push_back(goal);
    } else {
      const auto* gt = std::get_if<GTuple>(&gn);
      if (!gt || gt->parts.size() != f.binders.size()) return false;
      comps = gt->parts;
    }
    for (size_t i = 0; i < f.binders.size(); ++i)
      env_.bind(VarKind::Recursive, f.binders[i], EnvType(comps[i]));
    bool ok = run(f.body, goal);
    env_.remove(f.binders);
    return ok;
  }

 private:
  const TypeDefs& defs_;
  CheckEnv env_;
};

}  // namespace

bool top_check(const TypeDefs& defs, const CheckEnv& env, const ExprRef& e,
               const GroundRef& goal) {
  return TopCheck(defs, env).run(e, goal);
}

// ---------------------------------------------------------------------------
// gen_typed_program
// ---------------------------------------------------------------------------

namespace {

class Gen {
 public:
  Gen(uint64_t seed, int budget, const TypeDefs& defs)
      : rng_(seed), budget_(budget), defs_(defs) {}

  std::pair<ExprRef, TypeRef> run() {
    if (budget_ <= 2) return {e_int(pick(20)), tint()};
    TypeRef t = gen_type(3);
    return {gen_term(t, 5), t};
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(int pct) { return pick(100) < pct; }
  std::string fresh_name(const char* stem) {
    return std::string(stem) + std::to_string(name_counter_++);
  }

  // Only types with at least one constant constructor are grown, so every
  // target has a cheap inhabitant.
  TypeRef gen_type(int depth) {
    std::vector<std::string> cons;
    for (const auto& [name, d] : defs_.decls())
      if (!d.constants.empty()) cons.push_back(name);
    int n_choices = 1 + (depth > 0 ? 1 : 0) + (depth > 0 ? (int)cons.size() : 0);
    int c = pick(n_choices);
    if (c == 0 || budget_ < 4) return tint();
    if (c == 1) {
      int width = 2 + pick(3);
      std::vector<TypeRef> parts;
      for (int i = 0; i < width; ++i) parts.push_back(gen_type(depth - 1));
      return ttuple(std::move(parts));
    }
    const std::string& name = cons[c - 2];
    std::vector<TypeRef> args;
    for (size_t i = 0; i < defs_.decl(name).params.size(); ++i)
      args.push_back(gen_type(depth - 1));
    return tcon(name, std::move(args));
  }

  static TypeRef inst_payload(const TypeDecl& d, const TypeRef& payload,
                              const std::vector<TypeRef>& args) {
    Subst s;
    for (size_t i = 0; i < d.params.size(); ++i) s[d.params[i]] = args[i];
    return apply_subst(s, payload);
  }

  // Tuple-component paths in u whose type equals target.
  void plant_paths(const TypeRef& u, const TypeRef& target,
                   std::vector<uint32_t>& path,
                   std::vector<std::vector<uint32_t>>& out) const {
    if (type_equal(u, target)) out.push_back(path);
    if (const auto* t = std::get_if<TTuple>(&u->node()))
      for (size_t i = 0; i < t->parts.size(); ++i) {
        path.push_back(static_cast<uint32_t>(i));
        plant_paths(t->parts[i], target, path, out);
        path.pop_back();
      }
  }

  struct Plant {
    std::string ctor;
    TypeRef payload;  // instantiated
    std::vector<std::vector<uint32_t>> paths;
  };

  // Unary constructors of t = T(args) whose payload contains t itself at a
  // tuple position: a fix can tie the knot there monomorphically.
  std::vector<Plant> plants(const TypeRef& t) const {
    std::vector<Plant> out;
    const auto* c = std::get_if<TCon>(&t->node());
    if (!c) return out;
    const TypeDecl& d = defs_.decl(c->name);
    for (const auto& [name, payload] : d.unary) {
      TypeRef p = inst_payload(d, payload, c->args);
      std::vector<uint32_t> path;
      Plant pl{name, p, {}};
      plant_paths(p, t, path, pl.paths);
      if (!pl.paths.empty()) out.push_back(std::move(pl));
    }
    return out;
  }

  ExprRef gen_with_plant(const TypeRef& u, const std::vector<uint32_t>& path,
                         size_t at, const std::string& rec, int depth) {
    if (at == path.size()) return e_rec(rec);
    const auto& t = std::get<TTuple>(u->node());
    std::vector<ExprRef> parts;
    for (size_t i = 0; i < t.parts.size(); ++i)
      parts.push_back(i == path[at]
                          ? gen_with_plant(t.parts[i], path, at + 1, rec, depth)
                          : gen_term(t.parts[i], depth));
    return e_tuple(std::move(parts));
  }

  ExprRef plant_ctor_term(const Plant& pl, const std::string& rec, int depth) {
    const auto& path = pl.paths[pick(static_cast<int>(pl.paths.size()))];
    return e_apply(pl.ctor, gen_with_plant(pl.payload, path, 0, rec, depth));
  }

  ExprRef gen_term(const TypeRef& t, int depth) {
    --budget_;
    const auto& n = t->node();
    if (std::holds_alternative<TInt>(n)) return e_int(pick(20) - 5);
    if (std::holds_alternative<TVar>(n))
      throw UsageError("gen_typed_program: open target type");

    if (const auto* tp = std::get_if<TTuple>(&n)) {
      // Mutual fix over a pair of equally typed cyclic components.
      if (tp->parts.size() == 2 && type_equal(tp->parts[0], tp->parts[1]) &&
          fix_depth_ < 4 && budget_ > 8 && chance(25)) {
        auto pls = plants(tp->parts[0]);
        if (!pls.empty()) {
          std::string r1 = fresh_name("f"), r2 = fresh_name("f");
          ++fix_depth_;
          ExprRef c0 = plant_ctor_term(pls[pick((int)pls.size())], r2, depth - 1);
          ExprRef c1 = plant_ctor_term(pls[pick((int)pls.size())], r1, depth - 1);
          --fix_depth_;
          return e_fix({r1, r2}, e_tuple({c0, c1}));
        }
      }
      // Let-shared component used at two equal positions.
      if (budget_ > 6 && chance(30)) {
        for (size_t i = 0; i < tp->parts.size(); ++i)
          for (size_t j = i + 1; j < tp->parts.size(); ++j)
            if (type_equal(tp->parts[i], tp->parts[j])) {
              std::string p = fresh_name("x");
              ExprRef bound = gen_term(tp->parts[i], depth - 1);
              std::vector<ExprRef> parts;
              for (size_t k = 0; k < tp->parts.size(); ++k)
                parts.push_back(k == i || k == j
                                    ? e_share(p)
                                    : gen_term(tp->parts[k], depth - 1));
              return e_let({p}, std::move(bound), e_tuple(std::move(parts)));
            }
      }
      // Polymorphic sharing: one constant used at two instantiations of the
      // same declared type.
      if (budget_ > 6 && chance(25)) {
        for (size_t i = 0; i < tp->parts.size(); ++i)
          for (size_t j = i + 1; j < tp->parts.size(); ++j) {
            const auto* ci = std::get_if<TCon>(&tp->parts[i]->node());
            const auto* cj = std::get_if<TCon>(&tp->parts[j]->node());
            if (!ci || !cj || ci->name != cj->name) continue;
            const TypeDecl& d = defs_.decl(ci->name);
            if (d.constants.empty()) continue;
            std::string p = fresh_name("x");
            std::vector<ExprRef> parts;
            for (size_t k = 0; k < tp->parts.size(); ++k)
              parts.push_back(k == i || k == j
                                  ? e_share(p)
                                  : gen_term(tp->parts[k], depth - 1));
            return e_let({p},
                         e_const(d.constants[pick((int)d.constants.size())]),
                         e_tuple(std::move(parts)));
          }
      }
      std::vector<ExprRef> parts;
      for (const auto& p : tp->parts) parts.push_back(gen_term(p, depth - 1));
      return e_tuple(std::move(parts));
    }

    const auto& c = std::get<TCon>(n);
    const TypeDecl& d = defs_.decl(c.name);
    bool cheap = budget_ <= 0 || depth <= 0;
    if (!cheap && fix_depth_ < 4 && budget_ > 5 && chance(20)) {
      auto pls = plants(t);
      if (!pls.empty()) {
        std::string r = fresh_name("f");
        ++fix_depth_;
        ExprRef body = plant_ctor_term(pls[pick((int)pls.size())], r, depth - 1);
        --fix_depth_;
        return e_fix({r}, body);
      }
    }
    if (!cheap && !d.unary.empty() && chance(55)) {
      int k = pick((int)d.unary.size());
      TypeRef payload = inst_payload(d, d.unary[k].second, c.args);
      return e_apply(d.unary[k].first, gen_term(payload, depth - 1));
    }
    if (!d.constants.empty())
      return e_const(d.constants[pick((int)d.constants.size())]);
    // No constant constructor: forced through a unary one.
    int k = pick((int)d.unary.size());
    TypeRef payload = inst_payload(d, d.unary[k].second, c.args);
    return e_apply(d.unary[k].first, gen_term(payload, depth - 1));
  }

  std::mt19937_64 rng_;
  int budget_;
  const TypeDefs& defs_;
  int name_counter_ = 0;
  int fix_depth_ = 0;
};

}  // namespace

std::pair<ExprRef, TypeRef> gen_typed_program(uint64_t seed, int budget,
                                              const TypeDefs& defs) {
  return Gen(seed, budget, defs).run();
}

}  // namespace umv
