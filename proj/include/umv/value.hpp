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

#ifndef UMV_VALUE_HPP
#define UMV_VALUE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "umv/types.hpp"

namespace umv {

struct Expr;
using ExprRef = std::shared_ptr<const Expr>;

struct EInt {
  int64_t value;
};
struct EShare {
  std::string name;
};
struct ERec {
  std::string name;
};
struct ETuple {
  std::vector<ExprRef> parts;  // length >= 2
};
struct EConst {
  std::string ctor;
};
struct EApply {
  std::string ctor;
  ExprRef arg;
};
struct ELet {
  std::vector<std::string> binders;
  ExprRef bound;
  ExprRef body;
};
struct EFix {
  std::vector<std::string> binders;
  ExprRef body;
};

/// A Val-ML expression: the source language whose serializations the checker
/// disambiguates.
struct Expr {
  using Node =
      std::variant<EInt, EShare, ERec, ETuple, EConst, EApply, ELet, EFix>;
  Node node;
};

ExprRef e_int(int64_t v);
ExprRef e_share(std::string name);
ExprRef e_rec(std::string name);
ExprRef e_tuple(std::vector<ExprRef> parts);
ExprRef e_const(std::string ctor);
ExprRef e_apply(std::string ctor, ExprRef arg);
ExprRef e_let(std::vector<std::string> binders, ExprRef bound, ExprRef body);
ExprRef e_fix(std::vector<std::string> binders, ExprRef body);

bool expr_equal(const ExprRef& a, const ExprRef& b);

struct ValueTerm;
using ValueRef = std::shared_ptr<const ValueTerm>;

struct VInt {
  int64_t value;
};
struct VShare {
  std::string name;
};
struct VRec {
  std::string name;
};
struct VBlock {
  uint32_t mark;  // 0 = tuple (arity >= 2), i >= 1 = i-th unary ctor (arity 1)
  std::vector<ValueRef> fields;
};
struct VLet {
  std::vector<std::string> binders;
  ValueRef bound;
  ValueRef body;
};
struct VFix {
  std::vector<std::string> binders;
  ValueRef body;
};

/// A value term: integers, allocated blocks, and explicit sharing (let) and
/// cycle (fix) bindings.
struct ValueTerm {
  using Node = std::variant<VInt, VShare, VRec, VBlock, VLet, VFix>;
  Node node;
};

ValueRef v_int(int64_t v);
ValueRef v_share(std::string name);
ValueRef v_rec(std::string name);
ValueRef v_block(uint32_t mark, std::vector<ValueRef> fields);
ValueRef v_let(std::vector<std::string> binders, ValueRef bound, ValueRef body);
ValueRef v_fix(std::vector<std::string> binders, ValueRef body);

bool value_equal(const ValueRef& a, const ValueRef& b);

struct FreeVars {
  std::set<std::string> shared;
  std::set<std::string> recursive;
  bool empty() const { return shared.empty() && recursive.empty(); }
};

FreeVars free_vars(const ExprRef& e);
FreeVars free_vars(const ValueRef& v);

/// Translation [[.]] from expressions to value terms. Constant constructors
/// become their 1-based rank, unary constructors become blocks marked with
/// theirs. Throws DefsError on an unknown constructor.
ValueRef translate(const TypeDefs& defs, const ExprRef& e);

enum class WfViolation {
  UselessBinder,
  DuplicateBinder,
  BadTupleArity,
  BadUnaryArity,
  FreeVariable,
  UnknownConstructor,
};

struct WfReport {
  std::optional<WfViolation> violation;
  std::vector<uint32_t> path;  // child indexes from the root of the term
  std::string detail;          // offending name, when there is one
  bool ok() const { return !violation.has_value(); }
};

/// Structural well-formedness: useful and globally distinct binders, block
/// mark/arity discipline, and (when require_closed) no free variables.
WfReport well_formed(const ExprRef& e, const TypeDefs& defs,
                     bool require_closed = true);
WfReport well_formed(const ValueRef& v, bool require_closed = true);

const char* to_string(WfViolation v);

}  // namespace umv

#endif  // UMV_VALUE_HPP
