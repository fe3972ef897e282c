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

#ifndef UMV_TYPES_HPP
#define UMV_TYPES_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace umv {

class TypeExpr;
using TypeRef = std::shared_ptr<const TypeExpr>;

struct TVar {
  std::string name;
};
struct TInt {};
struct TTuple {
  std::vector<TypeRef> parts;  // length >= 2
};
struct TCon {
  std::string name;
  std::vector<TypeRef> args;
};

/// A type expression: variables, Int, n-tuples (n >= 2) and applications of
/// declared type constructors.
class TypeExpr {
 public:
  using Node = std::variant<TVar, TInt, TTuple, TCon>;
  explicit TypeExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

TypeRef tvar(std::string name);
TypeRef tint();
TypeRef ttuple(std::vector<TypeRef> parts);
TypeRef tcon(std::string name, std::vector<TypeRef> args = {});

bool type_equal(const TypeRef& a, const TypeRef& b);
void free_type_vars(const TypeRef& t, std::vector<std::string>& out);
std::set<std::string> free_type_vars(const TypeRef& t);
std::string to_string(const TypeRef& t);

/// A (possibly vacuously) quantified type.
struct TypeScheme {
  std::vector<std::string> bound;
  TypeRef body;
};

std::string to_string(const TypeScheme& s);

class GroundType;
using GroundRef = std::shared_ptr<const GroundType>;

struct GTop {};
struct GInt {};
struct GTuple {
  std::vector<GroundRef> parts;  // length >= 2
};
struct GCon {
  std::string name;
  std::vector<GroundRef> args;
};

/// A closed type: every variable position replaced by Top.
class GroundType {
 public:
  using Node = std::variant<GTop, GInt, GTuple, GCon>;
  explicit GroundType(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

GroundRef gtop();
GroundRef gint();
GroundRef gtuple(std::vector<GroundRef> parts);
GroundRef gcon(std::string name, std::vector<GroundRef> args = {});

bool ground_equal(const GroundRef& a, const GroundRef& b);
std::string to_string(const GroundRef& g);

/// Environment entry type: either Bottom (the neutral element for
/// anti-unification, used only as the initial binding of a sharing variable)
/// or a ground type. Bottom is kept outside GroundType so it can never leak
/// into a goal handed to the checker.
class EnvType {
 public:
  EnvType() : ground_(nullptr) {}  // Bottom
  explicit EnvType(GroundRef g) : ground_(std::move(g)) {}
  static EnvType bottom() { return EnvType(); }
  bool is_bottom() const { return ground_ == nullptr; }
  const GroundRef& ground() const {
    if (!ground_) throw std::logic_error("EnvType: Bottom has no ground type");
    return ground_;
  }

 private:
  GroundRef ground_;
};

struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DefsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One algebraic type declaration: T(params) = [C1 | ... | Cn | F1(t1) | ...].
/// Constructors are constant or unary; n-ary payloads are tuples.
struct TypeDecl {
  std::vector<std::string> params;
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, TypeRef>> unary;
};

/// The mutually recursive declaration table. Constructor names are globally
/// unique across declarations.
class TypeDefs {
 public:
  struct CtorInfo {
    std::string type_name;
    bool constant = false;
    int rank = 0;  // 1-based within its kind
  };

  void add(std::string name, TypeDecl decl);
  // Checks payload references (known constructors, arities, params only).
  void validate() const;

  bool has_type(const std::string& name) const;
  const TypeDecl& decl(const std::string& name) const;
  const CtorInfo* ctor(const std::string& name) const;
  const std::map<std::string, TypeDecl>& decls() const { return decls_; }

 private:
  std::map<std::string, TypeDecl> decls_;
  std::map<std::string, CtorInfo> ctors_;
};

/// A finite substitution of type expressions for variables.
using Subst = std::map<std::string, TypeRef>;

TypeRef apply_subst(const Subst& s, const TypeRef& t);

enum class VarKind { Shared, Recursive };

/// Ordered typing environment over schemes (the oracles' Gamma).
class TypeEnv {
 public:
  struct Entry {
    VarKind kind;
    std::string name;
    TypeScheme scheme;
  };
  void bind(VarKind kind, std::string name, TypeScheme scheme);
  const TypeScheme* lookup(VarKind kind, const std::string& name) const;
  const std::vector<Entry>& entries() const { return entries_; }
  std::set<std::string> free_vars() const;

 private:
  std::vector<Entry> entries_;
};

// --- operations --------------------------------------------------------

/// univ: replace every variable occurrence by Top, dropping quantifiers.
GroundRef univ(const TypeScheme& s);
GroundRef univ(const TypeRef& t);

/// schema: replace each Top occurrence by a distinct fresh variable and
/// quantify them all; univ(schema(g)) == g.
TypeScheme schema(const GroundRef& g);

/// instance_le: t <= s, first-order matching of s's body against t binding
/// exactly the quantified variables of s.
bool instance_le(const TypeRef& t, const TypeScheme& s);

/// closed_le: a is-instance-of b over closed types; b's Top positions accept
/// anything. Equivalent to schema(a) being contained in schema(b).
bool closed_le(const GroundRef& a, const GroundRef& b);

/// Anti-unification (memoryless): Bottom is neutral, Top absorbing, conflicts
/// produce independent Top occurrences.
GroundRef anti_unify(const EnvType& a, const GroundRef& b);
GroundRef anti_unify(const GroundRef& a, const GroundRef& b);

/// A declaration instantiated at ground arguments.
struct InstantiatedDecl {
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, GroundRef>> unary;
};

/// Delta(T(args)): substitute args for the declared parameters.
/// Throws DefsError on unknown type or arity mismatch.
InstantiatedDecl instantiate_def(const TypeDefs& defs, const std::string& name,
                                 const std::vector<GroundRef>& args);

/// Same instantiation over type expressions (used by the oracles).
TypeRef instantiate_payload(const TypeDecl& decl, const TypeRef& payload,
                            const std::vector<TypeRef>& args);

/// gen(Gamma, t): quantify the variables free in t but not in Gamma.
TypeScheme gen(const TypeEnv& env, const TypeRef& t);

}  // namespace umv

#endif  // UMV_TYPES_HPP
