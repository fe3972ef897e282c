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

#include "umv/types.hpp"

#include <algorithm>
#include <sstream>

namespace umv {

TypeRef tvar(std::string name) {
  return std::make_shared<TypeExpr>(TVar{std::move(name)});
}

TypeRef tint() {
  static const TypeRef inst = std::make_shared<TypeExpr>(TInt{});
  return inst;
}

TypeRef ttuple(std::vector<TypeRef> parts) {
  if (parts.size() < 2) throw UsageError("tuple arity must be >= 2");
  return std::make_shared<TypeExpr>(TTuple{std::move(parts)});
}

TypeRef tcon(std::string name, std::vector<TypeRef> args) {
  return std::make_shared<TypeExpr>(TCon{std::move(name), std::move(args)});
}

bool type_equal(const TypeRef& a, const TypeRef& b) {
  if (a.get() == b.get()) return true;
  const auto& na = a->node();
  const auto& nb = b->node();
  if (na.index() != nb.index()) return false;
  if (const auto* va = std::get_if<TVar>(&na))
    return va->name == std::get<TVar>(nb).name;
  if (std::holds_alternative<TInt>(na)) return true;
  if (const auto* ta = std::get_if<TTuple>(&na)) {
    const auto& tb = std::get<TTuple>(nb);
    if (ta->parts.size() != tb.parts.size()) return false;
    for (size_t i = 0; i < ta->parts.size(); ++i)
      if (!type_equal(ta->parts[i], tb.parts[i])) return false;
    return true;
  }
  const auto& ca = std::get<TCon>(na);
  const auto& cb = std::get<TCon>(nb);
  if (ca.name != cb.name || ca.args.size() != cb.args.size()) return false;
  for (size_t i = 0; i < ca.args.size(); ++i)
    if (!type_equal(ca.args[i], cb.args[i])) return false;
  return true;
}

void free_type_vars(const TypeRef& t, std::vector<std::string>& out) {
  const auto& n = t->node();
  if (const auto* v = std::get_if<TVar>(&n)) {
    out.push_back(v->name);
  } else if (const auto* tu = std::get_if<TTuple>(&n)) {
    for (const auto& p : tu->parts) free_type_vars(p, out);
  } else if (const auto* c = std::get_if<TCon>(&n)) {
    for (const auto& a : c->args) free_type_vars(a, out);
  }
}

std::set<std::string> free_type_vars(const TypeRef& t) {
  std::vector<std::string> vs;
  free_type_vars(t, vs);
  return {vs.begin(), vs.end()};
}

namespace {

void print_type(const TypeRef& t, std::ostream& os, bool parens_tuple) {
  const auto& n = t->node();
  if (const auto* v = std::get_if<TVar>(&n)) {
    os << v->name;
  } else if (std::holds_alternative<TInt>(n)) {
    os << "Int";
  } else if (const auto* tu = std::get_if<TTuple>(&n)) {
    if (parens_tuple) os << '(';
    for (size_t i = 0; i < tu->parts.size(); ++i) {
      if (i) os << " * ";
      print_type(tu->parts[i], os, true);
    }
    if (parens_tuple) os << ')';
  } else {
    const auto& c = std::get<TCon>(n);
    os << c.name;
    if (!c.args.empty()) {
      os << '(';
      for (size_t i = 0; i < c.args.size(); ++i) {
        if (i) os << ", ";
        print_type(c.args[i], os, false);
      }
      os << ')';
    }
  }
}

void print_ground(const GroundRef& g, std::ostream& os, bool parens_tuple) {
  const auto& n = g->node();
  if (std::holds_alternative<GTop>(n)) {
    os << "Top";
  } else if (std::holds_alternative<GInt>(n)) {
    os << "Int";
  } else if (const auto* tu = std::get_if<GTuple>(&n)) {
    if (parens_tuple) os << '(';
    for (size_t i = 0; i < tu->parts.size(); ++i) {
      if (i) os << " * ";
      print_ground(tu->parts[i], os, true);
    }
    if (parens_tuple) os << ')';
  } else {
    const auto& c = std::get<GCon>(n);
    os << c.name;
    if (!c.args.empty()) {
      os << '(';
      for (size_t i = 0; i < c.args.size(); ++i) {
        if (i) os << ", ";
        print_ground(c.args[i], os, false);
      }
      os << ')';
    }
  }
}

}  // namespace

std::string to_string(const TypeRef& t) {
  std::ostringstream os;
  print_type(t, os, false);
  return os.str();
}

std::string to_string(const TypeScheme& s) {
  std::ostringstream os;
  if (!s.bound.empty()) {
    os << "forall";
    for (const auto& v : s.bound) os << ' ' << v;
    os << ". ";
  }
  print_type(s.body, os, false);
  return os.str();
}

GroundRef gtop() {
  static const GroundRef inst = std::make_shared<GroundType>(GTop{});
  return inst;
}

GroundRef gint() {
  static const GroundRef inst = std::make_shared<GroundType>(GInt{});
  return inst;
}

GroundRef gtuple(std::vector<GroundRef> parts) {
  if (parts.size() < 2) throw UsageError("tuple arity must be >= 2");
  return std::make_shared<GroundType>(GTuple{std::move(parts)});
}

GroundRef gcon(std::string name, std::vector<GroundRef> args) {
  return std::make_shared<GroundType>(GCon{std::move(name), std::move(args)});
}

bool ground_equal(const GroundRef& a, const GroundRef& b) {
  if (a.get() == b.get()) return true;
  const auto& na = a->node();
  const auto& nb = b->node();
  if (na.index() != nb.index()) return false;
  if (std::holds_alternative<GTop>(na) || std::holds_alternative<GInt>(na))
    return true;
  if (const auto* ta = std::get_if<GTuple>(&na)) {
    const auto& tb = std::get<GTuple>(nb);
    if (ta->parts.size() != tb.parts.size()) return false;
    for (size_t i = 0; i < ta->parts.size(); ++i)
      if (!ground_equal(ta->parts[i], tb.parts[i])) return false;
    return true;
  }
  const auto& ca = std::get<GCon>(na);
  const auto& cb = std::get<GCon>(nb);
  if (ca.name != cb.name || ca.args.size() != cb.args.size()) return false;
  for (size_t i = 0; i < ca.args.size(); ++i)
    if (!ground_equal(ca.args[i], cb.args[i])) return false;
  return true;
}

std::string to_string(const GroundRef& g) {
  std::ostringstream os;
  print_ground(g, os, false);
  return os.str();
}

void TypeDefs::add(std::string name, TypeDecl decl) {
  if (decls_.count(name)) throw DefsError("duplicate type declaration: " + name);
  for (size_t i = 0; i < decl.constants.size(); ++i) {
    const auto& c = decl.constants[i];
    if (ctors_.count(c)) throw DefsError("duplicate constructor: " + c);
    ctors_[c] = CtorInfo{name, true, static_cast<int>(i + 1)};
  }
  for (size_t i = 0; i < decl.unary.size(); ++i) {
    const auto& c = decl.unary[i].first;
    if (ctors_.count(c)) throw DefsError("duplicate constructor: " + c);
    ctors_[c] = CtorInfo{name, false, static_cast<int>(i + 1)};
  }
  decls_.emplace(std::move(name), std::move(decl));
}

namespace {

void check_payload(const TypeDefs& defs, const TypeDecl& decl,
                   const TypeRef& t) {
  const auto& n = t->node();
  if (const auto* v = std::get_if<TVar>(&n)) {
    if (std::find(decl.params.begin(), decl.params.end(), v->name) ==
        decl.params.end())
      throw DefsError("payload mentions undeclared parameter: " + v->name);
  } else if (const auto* tu = std::get_if<TTuple>(&n)) {
    for (const auto& p : tu->parts) check_payload(defs, decl, p);
  } else if (const auto* c = std::get_if<TCon>(&n)) {
    if (!defs.has_type(c->name))
      throw DefsError("payload mentions unknown type: " + c->name);
    if (defs.decl(c->name).params.size() != c->args.size())
      throw DefsError("arity mismatch for type " + c->name);
    for (const auto& a : c->args) check_payload(defs, decl, a);
  }
}

}  // namespace

void TypeDefs::validate() const {
  for (const auto& [name, decl] : decls_) {
    if (decl.constants.empty() && decl.unary.empty())
      throw DefsError("type " + name + " declares no constructors");
    for (const auto& [cname, payload] : decl.unary)
      check_payload(*this, decl, payload);
  }
}

bool TypeDefs::has_type(const std::string& name) const {
  return decls_.count(name) != 0;
}

const TypeDecl& TypeDefs::decl(const std::string& name) const {
  auto it = decls_.find(name);
  if (it == decls_.end()) throw DefsError("unknown type: " + name);
  return it->second;
}

const TypeDefs::CtorInfo* TypeDefs::ctor(const std::string& name) const {
  auto it = ctors_.find(name);
  return it == ctors_.end() ? nullptr : &it->second;
}

TypeRef apply_subst(const Subst& s, const TypeRef& t) {
  const auto& n = t->node();
  if (const auto* v = std::get_if<TVar>(&n)) {
    auto it = s.find(v->name);
    return it == s.end() ? t : it->second;
  }
  if (std::holds_alternative<TInt>(n)) return t;
  if (const auto* tu = std::get_if<TTuple>(&n)) {
    std::vector<TypeRef> parts;
    parts.reserve(tu->parts.size());
    for (const auto& p : tu->parts) parts.push_back(apply_subst(s, p));
    return ttuple(std::move(parts));
  }
  const auto& c = std::get<TCon>(n);
  std::vector<TypeRef> args;
  args.reserve(c.args.size());
  for (const auto& a : c.args) args.push_back(apply_subst(s, a));
  return tcon(c.name, std::move(args));
}

void TypeEnv::bind(VarKind kind, std::string name, TypeScheme scheme) {
  for (const auto& e : entries_)
    if (e.name == name) throw UsageError("duplicate environment entry: " + name);
  entries_.push_back(Entry{kind, std::move(name), std::move(scheme)});
}

const TypeScheme* TypeEnv::lookup(VarKind kind, const std::string& name) const {
  for (const auto& e : entries_)
    if (e.kind == kind && e.name == name) return &e.scheme;
  return nullptr;
}

std::set<std::string> TypeEnv::free_vars() const {
  std::set<std::string> out;
  for (const auto& e : entries_) {
    auto fv = free_type_vars(e.scheme.body);
    for (const auto& b : e.scheme.bound) fv.erase(b);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

GroundRef univ(const TypeRef& t) {
  const auto& n = t->node();
  if (std::holds_alternative<TVar>(n)) return gtop();
  if (std::holds_alternative<TInt>(n)) return gint();
  if (const auto* tu = std::get_if<TTuple>(&n)) {
    std::vector<GroundRef> parts;
    parts.reserve(tu->parts.size());
    for (const auto& p : tu->parts) parts.push_back(univ(p));
    return gtuple(std::move(parts));
  }
  const auto& c = std::get<TCon>(n);
  std::vector<GroundRef> args;
  args.reserve(c.args.size());
  for (const auto& a : c.args) args.push_back(univ(a));
  return gcon(c.name, std::move(args));
}

GroundRef univ(const TypeScheme& s) { return univ(s.body); }

namespace {

TypeRef schema_body(const GroundRef& g, int& counter,
                    std::vector<std::string>& vars) {
  const auto& n = g->node();
  if (std::holds_alternative<GTop>(n)) {
    std::string name = "a" + std::to_string(counter++);
    vars.push_back(name);
    return tvar(std::move(name));
  }
  if (std::holds_alternative<GInt>(n)) return tint();
  if (const auto* tu = std::get_if<GTuple>(&n)) {
    std::vector<TypeRef> parts;
    parts.reserve(tu->parts.size());
    for (const auto& p : tu->parts) parts.push_back(schema_body(p, counter, vars));
    return ttuple(std::move(parts));
  }
  const auto& c = std::get<GCon>(n);
  std::vector<TypeRef> args;
  args.reserve(c.args.size());
  for (const auto& a : c.args) args.push_back(schema_body(a, counter, vars));
  return tcon(c.name, std::move(args));
}

// First-order matching: pattern over match-variables against a type
// expression; non-match variables must coincide exactly.
bool match_type(const TypeRef& pattern, const TypeRef& target,
                const std::set<std::string>& match_vars, Subst& binding) {
  const auto& pn = pattern->node();
  if (const auto* v = std::get_if<TVar>(&pn)) {
    if (match_vars.count(v->name)) {
      auto it = binding.find(v->name);
      if (it == binding.end()) {
        binding.emplace(v->name, target);
        return true;
      }
      return type_equal(it->second, target);
    }
    const auto* tv = std::get_if<TVar>(&target->node());
    return tv && tv->name == v->name;
  }
  const auto& tn = target->node();
  if (pn.index() != tn.index()) return false;
  if (std::holds_alternative<TInt>(pn)) return true;
  if (const auto* pt = std::get_if<TTuple>(&pn)) {
    const auto& tt = std::get<TTuple>(tn);
    if (pt->parts.size() != tt.parts.size()) return false;
    for (size_t i = 0; i < pt->parts.size(); ++i)
      if (!match_type(pt->parts[i], tt.parts[i], match_vars, binding))
        return false;
    return true;
  }
  const auto& pc = std::get<TCon>(pn);
  const auto& tc = std::get<TCon>(tn);
  if (pc.name != tc.name || pc.args.size() != tc.args.size()) return false;
  for (size_t i = 0; i < pc.args.size(); ++i)
    if (!match_type(pc.args[i], tc.args[i], match_vars, binding)) return false;
  return true;
}

}  // namespace

TypeScheme schema(const GroundRef& g) {
  int counter = 0;
  std::vector<std::string> vars;
  TypeRef body = schema_body(g, counter, vars);
  return TypeScheme{std::move(vars), std::move(body)};
}

bool instance_le(const TypeRef& t, const TypeScheme& s) {
  std::set<std::string> mv(s.bound.begin(), s.bound.end());
  Subst binding;
  return match_type(s.body, t, mv, binding);
}

bool closed_le(const GroundRef& a, const GroundRef& b) {
  const auto& nb = b->node();
  if (std::holds_alternative<GTop>(nb)) return true;
  const auto& na = a->node();
  if (na.index() != nb.index()) return false;
  if (std::holds_alternative<GInt>(na)) return true;
  if (const auto* ta = std::get_if<GTuple>(&na)) {
    const auto& tb = std::get<GTuple>(nb);
    if (ta->parts.size() != tb.parts.size()) return false;
    for (size_t i = 0; i < ta->parts.size(); ++i)
      if (!closed_le(ta->parts[i], tb.parts[i])) return false;
    return true;
  }
  const auto& ca = std::get<GCon>(na);
  const auto& cb = std::get<GCon>(nb);
  if (ca.name != cb.name || ca.args.size() != cb.args.size()) return false;
  for (size_t i = 0; i < ca.args.size(); ++i)
    if (!closed_le(ca.args[i], cb.args[i])) return false;
  return true;
}

GroundRef anti_unify(const GroundRef& a, const GroundRef& b) {
  const auto& na = a->node();
  const auto& nb = b->node();
  if (std::holds_alternative<GInt>(na) && std::holds_alternative<GInt>(nb))
    return gint();
  if (const auto* ta = std::get_if<GTuple>(&na)) {
    if (const auto* tb = std::get_if<GTuple>(&nb);
        tb && ta->parts.size() == tb->parts.size()) {
      std::vector<GroundRef> parts;
      parts.reserve(ta->parts.size());
      for (size_t i = 0; i < ta->parts.size(); ++i)
        parts.push_back(anti_unify(ta->parts[i], tb->parts[i]));
      return gtuple(std::move(parts));
    }
  }
  if (const auto* ca = std::get_if<GCon>(&na)) {
    if (const auto* cb = std::get_if<GCon>(&nb);
        cb && ca->name == cb->name && ca->args.size() == cb->args.size()) {
      std::vector<GroundRef> args;
      args.reserve(ca->args.size());
      for (size_t i = 0; i < ca->args.size(); ++i)
        args.push_back(anti_unify(ca->args[i], cb->args[i]));
      return gcon(ca->name, std::move(args));
    }
  }
  return gtop();
}

GroundRef anti_unify(const EnvType& a, const GroundRef& b) {
  if (a.is_bottom()) return b;
  return anti_unify(a.ground(), b);
}

namespace {

GroundRef instantiate_ground(const TypeRef& payload,
                             const std::map<std::string, GroundRef>& args) {
  const auto& n = payload->node();
  if (const auto* v = std::get_if<TVar>(&n)) {
    auto it = args.find(v->name);
    if (it == args.end())
      throw DefsError("payload mentions undeclared parameter: " + v->name);
    return it->second;
  }
  if (std::holds_alternative<TInt>(n)) return gint();
  if (const auto* tu = std::get_if<TTuple>(&n)) {
    std::vector<GroundRef> parts;
    parts.reserve(tu->parts.size());
    for (const auto& p : tu->parts)
      parts.push_back(instantiate_ground(p, args));
    return gtuple(std::move(parts));
  }
  const auto& c = std::get<TCon>(n);
  std::vector<GroundRef> cargs;
  cargs.reserve(c.args.size());
  for (const auto& a : c.args) cargs.push_back(instantiate_ground(a, args));
  return gcon(c.name, std::move(cargs));
}

}  // namespace

InstantiatedDecl instantiate_def(const TypeDefs& defs, const std::string& name,
                                 const std::vector<GroundRef>& args) {
  const TypeDecl& d = defs.decl(name);
  if (d.params.size() != args.size())
    throw DefsError("arity mismatch for type " + name);
  std::map<std::string, GroundRef> binding;
  for (size_t i = 0; i < args.size(); ++i) binding[d.params[i]] = args[i];
  InstantiatedDecl out;
  out.constants = d.constants;
  out.unary.reserve(d.unary.size());
  for (const auto& [cname, payload] : d.unary)
    out.unary.emplace_back(cname, instantiate_ground(payload, binding));
  return out;
}

TypeRef instantiate_payload(const TypeDecl& decl, const TypeRef& payload,
                            const std::vector<TypeRef>& args) {
  if (decl.params.size() != args.size())
    throw DefsError("arity mismatch instantiating payload");
  Subst s;
  for (size_t i = 0; i < args.size(); ++i) s[decl.params[i]] = args[i];
  return apply_subst(s, payload);
}

TypeScheme gen(const TypeEnv& env, const TypeRef& t) {
  std::set<std::string> env_fv = env.free_vars();
  std::vector<std::string> occ;
  free_type_vars(t, occ);
  std::vector<std::string> bound;
  std::set<std::string> seen;
  for (const auto& v : occ) {
    if (!env_fv.count(v) && seen.insert(v).second) bound.push_back(v);
  }
  return TypeScheme{std::move(bound), t};
}

}  // namespace umv
