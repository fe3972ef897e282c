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

#include "umv/value.hpp"

#include <algorithm>

namespace umv {

ExprRef e_int(int64_t v) { return std::make_shared<Expr>(Expr{EInt{v}}); }
ExprRef e_share(std::string n) {
  return std::make_shared<Expr>(Expr{EShare{std::move(n)}});
}
ExprRef e_rec(std::string n) {
  return std::make_shared<Expr>(Expr{ERec{std::move(n)}});
}
ExprRef e_tuple(std::vector<ExprRef> parts) {
  if (parts.size() < 2) throw UsageError("tuple arity must be >= 2");
  return std::make_shared<Expr>(Expr{ETuple{std::move(parts)}});
}
ExprRef e_const(std::string ctor) {
  return std::make_shared<Expr>(Expr{EConst{std::move(ctor)}});
}
ExprRef e_apply(std::string ctor, ExprRef arg) {
  return std::make_shared<Expr>(Expr{EApply{std::move(ctor), std::move(arg)}});
}
ExprRef e_let(std::vector<std::string> binders, ExprRef bound, ExprRef body) {
  if (binders.empty()) throw UsageError("let needs at least one binder");
  return std::make_shared<Expr>(
      Expr{ELet{std::move(binders), std::move(bound), std::move(body)}});
}
ExprRef e_fix(std::vector<std::string> binders, ExprRef body) {
  if (binders.empty()) throw UsageError("fix needs at least one binder");
  return std::make_shared<Expr>(Expr{EFix{std::move(binders), std::move(body)}});
}

ValueRef v_int(int64_t v) {
  return std::make_shared<ValueTerm>(ValueTerm{VInt{v}});
}
ValueRef v_share(std::string n) {
  return std::make_shared<ValueTerm>(ValueTerm{VShare{std::move(n)}});
}
ValueRef v_rec(std::string n) {
  return std::make_shared<ValueTerm>(ValueTerm{VRec{std::move(n)}});
}
ValueRef v_block(uint32_t mark, std::vector<ValueRef> fields) {
  return std::make_shared<ValueTerm>(ValueTerm{VBlock{mark, std::move(fields)}});
}
ValueRef v_let(std::vector<std::string> binders, ValueRef bound, ValueRef body) {
  if (binders.empty()) throw UsageError("let needs at least one binder");
  return std::make_shared<ValueTerm>(
      ValueTerm{VLet{std::move(binders), std::move(bound), std::move(body)}});
}
ValueRef v_fix(std::vector<std::string> binders, ValueRef body) {
  if (binders.empty()) throw UsageError("fix needs at least one binder");
  return std::make_shared<ValueTerm>(
      ValueTerm{VFix{std::move(binders), std::move(body)}});
}

bool expr_equal(const ExprRef& a, const ExprRef& b) {
  if (a.get() == b.get()) return true;
  const auto& na = a->node;
  const auto& nb = b->node;
  if (na.index() != nb.index()) return false;
  if (const auto* i = std::get_if<EInt>(&na))
    return i->value == std::get<EInt>(nb).value;
  if (const auto* s = std::get_if<EShare>(&na))
    return s->name == std::get<EShare>(nb).name;
  if (const auto* r = std::get_if<ERec>(&na))
    return r->name == std::get<ERec>(nb).name;
  if (const auto* t = std::get_if<ETuple>(&na)) {
    const auto& tb = std::get<ETuple>(nb);
    if (t->parts.size() != tb.parts.size()) return false;
    for (size_t i = 0; i < t->parts.size(); ++i)
      if (!expr_equal(t->parts[i], tb.parts[i])) return false;
    return true;
  }
  if (const auto* c = std::get_if<EConst>(&na))
    return c->ctor == std::get<EConst>(nb).ctor;
  if (const auto* ap = std::get_if<EApply>(&na)) {
    const auto& apb = std::get<EApply>(nb);
    return ap->ctor == apb.ctor && expr_equal(ap->arg, apb.arg);
  }
  if (const auto* l = std::get_if<ELet>(&na)) {
    const auto& lb = std::get<ELet>(nb);
    return l->binders == lb.binders && expr_equal(l->bound, lb.bound) &&
           expr_equal(l->body, lb.body);
  }
  const auto& f = std::get<EFix>(na);
  const auto& fb = std::get<EFix>(nb);
  return f.binders == fb.binders && expr_equal(f.body, fb.body);
}

bool value_equal(const ValueRef& a, const ValueRef& b) {
  if (a.get() == b.get()) return true;
  const auto& na = a->node;
  const auto& nb = b->node;
  if (na.index() != nb.index()) return false;
  if (const auto* i = std::get_if<VInt>(&na))
    return i->value == std::get<VInt>(nb).value;
  if (const auto* s = std::get_if<VShare>(&na))
    return s->name == std::get<VShare>(nb).name;
  if (const auto* r = std::get_if<VRec>(&na))
    return r->name == std::get<VRec>(nb).name;
  if (const auto* bl = std::get_if<VBlock>(&na)) {
    const auto& bb = std::get<VBlock>(nb);
    if (bl->mark != bb.mark || bl->fields.size() != bb.fields.size())
      return false;
    for (size_t i = 0; i < bl->fields.size(); ++i)
      if (!value_equal(bl->fields[i], bb.fields[i])) return false;
    return true;
  }
  if (const auto* l = std::get_if<VLet>(&na)) {
    const auto& lb = std::get<VLet>(nb);
    return l->binders == lb.binders && value_equal(l->bound, lb.bound) &&
           value_equal(l->body, lb.body);
  }
  const auto& f = std::get<VFix>(na);
  const auto& fb = std::get<VFix>(nb);
  return f.binders == fb.binders && value_equal(f.body, fb.body);
}

namespace {

void collect_free(const ExprRef& e, FreeVars& out) {
  const auto& n = e->node;
  if (const auto* s = std::get_if<EShare>(&n)) {
    out.shared.insert(s->name);
  } else if (const auto* r = std::get_if<ERec>(&n)) {
    out.recursive.insert(r->name);
  } else if (const auto* t = std::get_if<ETuple>(&n)) {
    for (const auto& p : t->parts) collect_free(p, out);
  } else if (const auto* ap = std::get_if<EApply>(&n)) {
    collect_free(ap->arg, out);
  } else if (const auto* l = std::get_if<ELet>(&n)) {
    collect_free(l->bound, out);
    FreeVars body;
    collect_free(l->body, body);
    for (const auto& b : l->binders) body.shared.erase(b);
    out.shared.insert(body.shared.begin(), body.shared.end());
    out.recursive.insert(body.recursive.begin(), body.recursive.end());
  } else if (const auto* f = std::get_if<EFix>(&n)) {
    FreeVars body;
    collect_free(f->body, body);
    for (const auto& b : f->binders) body.recursive.erase(b);
    out.shared.insert(body.shared.begin(), body.shared.end());
    out.recursive.insert(body.recursive.begin(), body.recursive.end());
  }
}

void collect_free(const ValueRef& v, FreeVars& out) {
  const auto& n = v->node;
  if (const auto* s = std::get_if<VShare>(&n)) {
    out.shared.insert(s->name);
  } else if (const auto* r = std::get_if<VRec>(&n)) {
    out.recursive.insert(r->name);
  } else if (const auto* b = std::get_if<VBlock>(&n)) {
    for (const auto& f : b->fields) collect_free(f, out);
  } else if (const auto* l = std::get_if<VLet>(&n)) {
    collect_free(l->bound, out);
    FreeVars body;
    collect_free(l->body, body);
    for (const auto& bn : l->binders) body.shared.erase(bn);
    out.shared.insert(body.shared.begin(), body.shared.end());
    out.recursive.insert(body.recursive.begin(), body.recursive.end());
  } else if (const auto* f = std::get_if<VFix>(&n)) {
    FreeVars body;
    collect_free(f->body, body);
    for (const auto& bn : f->binders) body.recursive.erase(bn);
    out.shared.insert(body.shared.begin(), body.shared.end());
    out.recursive.insert(body.recursive.begin(), body.recursive.end());
  }
}

}  // namespace

FreeVars free_vars(const ExprRef& e) {
  FreeVars out;
  collect_free(e, out);
  return out;
}

FreeVars free_vars(const ValueRef& v) {
  FreeVars out;
  collect_free(v, out);
  return out;
}

ValueRef translate(const TypeDefs& defs, const ExprRef& e) {
  const auto& n = e->node;
  if (const auto* i = std::get_if<EInt>(&n)) return v_int(i->value);
  if (const auto* s = std::get_if<EShare>(&n)) return v_share(s->name);
  if (const auto* r = std::get_if<ERec>(&n)) return v_rec(r->name);
  if (const auto* t = std::get_if<ETuple>(&n)) {
    std::vector<ValueRef> fields;
    fields.reserve(t->parts.size());
    for (const auto& p : t->parts) fields.push_back(translate(defs, p));
    return v_block(0, std::move(fields));
  }
  if (const auto* c = std::get_if<EConst>(&n)) {
    const auto* info = defs.ctor(c->ctor);
    if (!info || !info->constant)
      throw DefsError("unknown constant constructor: " + c->ctor);
    return v_int(info->rank);
  }
  if (const auto* ap = std::get_if<EApply>(&n)) {
    const auto* info = defs.ctor(ap->ctor);
    if (!info || info->constant)
      throw DefsError("unknown unary constructor: " + ap->ctor);
    return v_block(static_cast<uint32_t>(info->rank),
                   {translate(defs, ap->arg)});
  }
  if (const auto* l = std::get_if<ELet>(&n))
    return v_let(l->binders, translate(defs, l->bound),
                 translate(defs, l->body));
  const auto& f = std::get<EFix>(n);
  return v_fix(f.binders, translate(defs, f.body));
}

namespace {

struct WfState {
  WfReport report;
  std::set<std::string> all_binders;
  std::vector<uint32_t> path;

  bool fail(WfViolation v, std::string detail) {
    report.violation = v;
    report.path = path;
    report.detail = std::move(detail);
    return false;
  }

  bool note_binders(const std::vector<std::string>& binders) {
    std::set<std::string> local;
    for (const auto& b : binders) {
      if (!local.insert(b).second || !all_binders.insert(b).second)
        return fail(WfViolation::DuplicateBinder, b);
    }
    return true;
  }
};

bool wf_expr(const ExprRef& e, const TypeDefs& defs, WfState& st) {
  const auto& n = e->node;
  if (const auto* t = std::get_if<ETuple>(&n)) {
    for (size_t i = 0; i < t->parts.size(); ++i) {
      st.path.push_back(static_cast<uint32_t>(i));
      if (!wf_expr(t->parts[i], defs, st)) return false;
      st.path.pop_back();
    }
    return true;
  }
  if (const auto* c = std::get_if<EConst>(&n)) {
    const auto* info = defs.ctor(c->ctor);
    if (!info || !info->constant)
      return st.fail(WfViolation::UnknownConstructor, c->ctor);
    return true;
  }
  if (const auto* ap = std::get_if<EApply>(&n)) {
    const auto* info = defs.ctor(ap->ctor);
    if (!info || info->constant)
      return st.fail(WfViolation::UnknownConstructor, ap->ctor);
    st.path.push_back(0);
    if (!wf_expr(ap->arg, defs, st)) return false;
    st.path.pop_back();
    return true;
  }
  if (const auto* l = std::get_if<ELet>(&n)) {
    if (!st.note_binders(l->binders)) return false;
    FreeVars body_fv = free_vars(l->body);
    for (const auto& b : l->binders)
      if (!body_fv.shared.count(b)) return st.fail(WfViolation::UselessBinder, b);
    st.path.push_back(0);
    if (!wf_expr(l->body, defs, st)) return false;
    st.path.back() = 1;
    if (!wf_expr(l->bound, defs, st)) return false;
    st.path.pop_back();
    return true;
  }
  if (const auto* f = std::get_if<EFix>(&n)) {
    if (!st.note_binders(f->binders)) return false;
    FreeVars body_fv = free_vars(f->body);
    for (const auto& b : f->binders)
      if (!body_fv.recursive.count(b))
        return st.fail(WfViolation::UselessBinder, b);
    st.path.push_back(0);
    if (!wf_expr(f->body, defs, st)) return false;
    st.path.pop_back();
    return true;
  }
  return true;  // leaf
}

bool wf_value(const ValueRef& v, WfState& st) {
  const auto& n = v->node;
  if (const auto* b = std::get_if<VBlock>(&n)) {
    if (b->mark == 0 && b->fields.size() < 2)
      return st.fail(WfViolation::BadTupleArity, "");
    if (b->mark >= 1 && b->fields.size() != 1)
      return st.fail(WfViolation::BadUnaryArity, "");
    for (size_t i = 0; i < b->fields.size(); ++i) {
      st.path.push_back(static_cast<uint32_t>(i));
      if (!wf_value(b->fields[i], st)) return false;
      st.path.pop_back();
    }
    return true;
  }
  if (const auto* l = std::get_if<VLet>(&n)) {
    if (!st.note_binders(l->binders)) return false;
    FreeVars body_fv = free_vars(l->body);
    for (const auto& bn : l->binders)
      if (!body_fv.shared.count(bn))
        return st.fail(WfViolation::UselessBinder, bn);
    st.path.push_back(0);
    if (!wf_value(l->body, st)) return false;
    st.path.back() = 1;
    if (!wf_value(l->bound, st)) return false;
    st.path.pop_back();
    return true;
  }
  if (const auto* f = std::get_if<VFix>(&n)) {
    if (!st.note_binders(f->binders)) return false;
    FreeVars body_fv = free_vars(f->body);
    for (const auto& bn : f->binders)
      if (!body_fv.recursive.count(bn))
        return st.fail(WfViolation::UselessBinder, bn);
    st.path.push_back(0);
    if (!wf_value(f->body, st)) return false;
    st.path.pop_back();
    return true;
  }
  return true;
}

}  // namespace

WfReport well_formed(const ExprRef& e, const TypeDefs& defs,
                     bool require_closed) {
  WfState st;
  if (wf_expr(e, defs, st) && require_closed) {
    FreeVars fv = free_vars(e);
    if (!fv.empty())
      st.fail(WfViolation::FreeVariable,
              fv.shared.empty() ? *fv.recursive.begin() : *fv.shared.begin());
  }
  return st.report;
}

WfReport well_formed(const ValueRef& v, bool require_closed) {
  WfState st;
  if (wf_value(v, st) && require_closed) {
    FreeVars fv = free_vars(v);
    if (!fv.empty())
      st.fail(WfViolation::FreeVariable,
              fv.shared.empty() ? *fv.recursive.begin() : *fv.shared.begin());
  }
  return st.report;
}

const char* to_string(WfViolation v) {
  switch (v) {
    case WfViolation::UselessBinder: return "UselessBinder";
    case WfViolation::DuplicateBinder: return "DuplicateBinder";
    case WfViolation::BadTupleArity: return "BadTupleArity";
    case WfViolation::BadUnaryArity: return "BadUnaryArity";
    case WfViolation::FreeVariable: return "FreeVariable";
    case WfViolation::UnknownConstructor: return "UnknownConstructor";
  }
  return "?";
}

}  // namespace umv
