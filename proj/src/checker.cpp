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

#include "umv/checker.hpp"

#include <algorithm>

namespace umv {

void CheckEnv::bind(VarKind kind, std::string name, EnvType ty) {
  if (find(name)) throw UsageError("CheckEnv: duplicate binder " + name);
  entries_.push_back(Entry{kind, std::move(name), std::move(ty)});
}

CheckEnv::Entry* CheckEnv::find(const std::string& name) {
  for (auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CheckEnv::Entry* CheckEnv::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

void CheckEnv::remove(const std::vector<std::string>& names) {
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                [&](const Entry& e) {
                                  return std::find(names.begin(), names.end(),
                                                   e.name) != names.end();
                                }),
                 entries_.end());
}

const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::TopConstraintOnValue: return "TopConstraintOnValue";
    case FailureReason::ConstantOutOfRange: return "ConstantOutOfRange";
    case FailureReason::UnaryMarkOutOfRange: return "UnaryMarkOutOfRange";
    case FailureReason::TupleArityMismatch: return "TupleArityMismatch";
    case FailureReason::ShapeMismatch: return "ShapeMismatch";
    case FailureReason::RecursiveInstanceMismatch:
      return "RecursiveInstanceMismatch";
  }
  return "UnknownFailure";
}

std::string to_string(const CheckFailure& f) {
  std::string p;
  for (size_t i = 0; i < f.path.size(); ++i) {
    if (i) p += ".";
    p += std::to_string(f.path[i]);
  }
  if (p.empty()) p = "<root>";
  return "at value path " + p + ": " + to_string(f.reason);
}

namespace {

// Work items for the explicit machine. Children of a node are scheduled in
// reverse so they run left to right; path steps are pushed and popped by
// dedicated items so the failure path is exact at any depth.
struct FCheck {
  GroundRef goal;
  ValueRef v;
};
struct FPushPath {
  uint32_t step;
};
struct FPopPath {};
struct FBuildTuple {
  size_t n;
};
struct FBuildApply {
  std::string ctor;
};
struct FLetBound {
  std::vector<std::string> binders;
  ValueRef bound;
};
struct FLetFinish {
  std::vector<std::string> binders;
};
struct FFixFinish {
  std::vector<std::string> binders;
};

using Frame = std::variant<FCheck, FPushPath, FPopPath, FBuildTuple,
                           FBuildApply, FLetBound, FLetFinish, FFixFinish>;

class Machine {
 public:
  Machine(const TypeDefs& defs, CheckEnv env, CheckStats* stats)
      : defs_(defs), env_(std::move(env)), stats_(stats) {}

  std::variant<CheckSuccess, CheckFailure> run(const GroundRef& goal,
                                               const ValueRef& v) {
    frames_.push_back(FCheck{goal, v});
    while (!frames_.empty()) {
      Frame f = std::move(frames_.back());
      frames_.pop_back();
      bool ok = std::visit([&](auto& fr) { return step(fr); }, f);
      if (!ok) return CheckFailure{reason_, path_};
    }
    return CheckSuccess{results_.back(), std::move(env_)};
  }

 private:
  bool fail(FailureReason r) {
    reason_ = r;
    return false;
  }

  void schedule_child(uint32_t step, GroundRef goal, ValueRef v) {
    frames_.push_back(FPopPath{});
    frames_.push_back(FCheck{std::move(goal), std::move(v)});
    frames_.push_back(FPushPath{step});
  }

  bool step(FPushPath& f) {
    path_.push_back(f.step);
    return true;
  }
  bool step(FPopPath&) {
    path_.pop_back();
    return true;
  }

  bool step(FBuildTuple& f) {
    std::vector<ExprRef> parts(f.n);
    for (size_t i = f.n; i-- > 0;) {
      parts[i] = std::move(results_.back());
      results_.pop_back();
    }
    results_.push_back(e_tuple(std::move(parts)));
    return true;
  }

  bool step(FBuildApply& f) {
    ExprRef arg = std::move(results_.back());
    results_.pop_back();
    results_.push_back(e_apply(f.ctor, std::move(arg)));
    return true;
  }

  bool step(FLetBound& f) {
    // The body has been checked; each binder's accumulated constraint is the
    // goal its bound value must meet.
    std::vector<GroundRef> goals;
    for (const auto& name : f.binders) {
      CheckEnv::Entry* e = env_.find(name);
      if (!e || e->kind != VarKind::Shared)
        throw UsageError("check: lost let binder " + name);
      if (e->ty.is_bottom())
        throw UsageError("check: useless binder " + name);
      goals.push_back(e->ty.ground());
    }
    env_.remove(f.binders);  // the bound value is outside the binders' scope
    GroundRef goal = goals.size() == 1 ? goals[0] : gtuple(std::move(goals));
    frames_.push_back(FLetFinish{f.binders});
    schedule_child(1, std::move(goal), f.bound);
    return true;
  }

  bool step(FLetFinish& f) {
    ExprRef bound = std::move(results_.back());
    results_.pop_back();
    ExprRef body = std::move(results_.back());
    results_.pop_back();
    results_.push_back(e_let(f.binders, std::move(bound), std::move(body)));
    return true;
  }

  bool step(FFixFinish& f) {
    ExprRef body = std::move(results_.back());
    results_.pop_back();
    env_.remove(f.binders);
    results_.push_back(e_fix(f.binders, std::move(body)));
    return true;
  }

  bool step(FCheck& f) {
    const auto& vn = f.v->node;
    const auto& gn = f.goal->node();

    if (const auto* i = std::get_if<VInt>(&vn)) {
      if (std::holds_alternative<GInt>(gn)) {
        results_.push_back(e_int(i->value));
        return true;
      }
      if (const auto* c = std::get_if<GCon>(&gn)) {
        InstantiatedDecl inst = instantiate_def(defs_, c->name, c->args);
        if (i->value < 1 ||
            i->value > static_cast<int64_t>(inst.constants.size()))
          return fail(FailureReason::ConstantOutOfRange);
        results_.push_back(e_const(inst.constants[i->value - 1]));
        return true;
      }
      if (std::holds_alternative<GTop>(gn))
        return fail(FailureReason::TopConstraintOnValue);
      return fail(FailureReason::ShapeMismatch);
    }

    if (const auto* b = std::get_if<VBlock>(&vn)) {
      if (stats_) ++stats_->block_visits;
      if (std::holds_alternative<GTop>(gn))
        return fail(FailureReason::TopConstraintOnValue);
      if (b->mark == 0) {
        const auto* t = std::get_if<GTuple>(&gn);
        if (!t) return fail(FailureReason::ShapeMismatch);
        if (t->parts.size() != b->fields.size())
          return fail(FailureReason::TupleArityMismatch);
        frames_.push_back(FBuildTuple{b->fields.size()});
        for (size_t i = b->fields.size(); i-- > 0;)
          schedule_child(static_cast<uint32_t>(i), t->parts[i], b->fields[i]);
        return true;
      }
      const auto* c = std::get_if<GCon>(&gn);
      if (!c || b->fields.size() != 1)
        return fail(FailureReason::ShapeMismatch);
      InstantiatedDecl inst = instantiate_def(defs_, c->name, c->args);
      if (b->mark > inst.unary.size())
        return fail(FailureReason::UnaryMarkOutOfRange);
      const auto& [ctor, payload] = inst.unary[b->mark - 1];
      frames_.push_back(FBuildApply{ctor});
      schedule_child(0, payload, b->fields[0]);
      return true;
    }

    if (const auto* s = std::get_if<VShare>(&vn)) {
      CheckEnv::Entry* e = env_.find(s->name);
      if (!e || e->kind != VarKind::Shared)
        throw UsageError("check: unbound shared variable " + s->name);
      e->ty = EnvType(anti_unify(e->ty, f.goal));
      results_.push_back(e_share(s->name));
      return true;
    }

    if (const auto* r = std::get_if<VRec>(&vn)) {
      const CheckEnv::Entry* e = env_.find(r->name);
      if (!e || e->kind != VarKind::Recursive)
        throw UsageError("check: unbound recursive variable " + r->name);
      if (!closed_le(f.goal, e->ty.ground()))
        return fail(FailureReason::RecursiveInstanceMismatch);
      results_.push_back(e_rec(r->name));
      return true;
    }

    if (const auto* l = std::get_if<VLet>(&vn)) {
      for (const auto& name : l->binders)
        env_.bind(VarKind::Shared, name, EnvType::bottom());
      frames_.push_back(FLetBound{l->binders, l->bound});
      schedule_child(0, f.goal, l->body);
      return true;
    }

    const auto& fx = std::get<VFix>(vn);
    std::vector<GroundRef> comp;
    if (fx.binders.size() == 1) {
      comp.push_back(f.goal);
    } else {
      if (std::holds_alternative<GTop>(gn))
        return fail(FailureReason::TopConstraintOnValue);
      const auto* t = std::get_if<GTuple>(&gn);
      if (!t) return fail(FailureReason::ShapeMismatch);
      if (t->parts.size() != fx.binders.size())
        return fail(FailureReason::TupleArityMismatch);
      comp = t->parts;
    }
    for (size_t i = 0; i < fx.binders.size(); ++i)
      env_.bind(VarKind::Recursive, fx.binders[i], EnvType(comp[i]));
    frames_.push_back(FFixFinish{fx.binders});
    schedule_child(0, f.goal, fx.body);
    return true;
  }

  const TypeDefs& defs_;
  CheckEnv env_;
  CheckStats* stats_;
  std::vector<Frame> frames_;
  std::vector<ExprRef> results_;
  std::vector<uint32_t> path_;
  FailureReason reason_ = FailureReason::ShapeMismatch;
};

}  // namespace

std::variant<CheckSuccess, CheckFailure> check(const TypeDefs& defs,
                                               const CheckEnv& env,
                                               const GroundRef& goal,
                                               const ValueRef& v,
                                               CheckStats* stats) {
  return Machine(defs, env, stats).run(goal, v);
}

std::variant<CheckSuccess, CheckFailure> check_root(const TypeDefs& defs,
                                                    const TypeScheme& scheme,
                                                    const ValueRef& v,
                                                    CheckStats* stats) {
  return check(defs, CheckEnv{}, univ(scheme), v, stats);
}

}  // namespace umv
