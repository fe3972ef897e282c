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

#ifndef UMV_CHECKER_HPP
#define UMV_CHECKER_HPP

#include <string>
#include <variant>
#include <vector>

#include "umv/types.hpp"
#include "umv/value.hpp"

namespace umv {

/// Checking environment: an ordered map from binder names to environment
/// types. Shared binders accumulate constraints by anti-unification from
/// bottom up; recursive binders hold a fixed closed type.
class CheckEnv {
 public:
  struct Entry {
    VarKind kind;
    std::string name;
    EnvType ty;
  };

  void bind(VarKind kind, std::string name, EnvType ty);
  Entry* find(const std::string& name);
  const Entry* find(const std::string& name) const;
  void remove(const std::vector<std::string>& names);
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

enum class FailureReason {
  TopConstraintOnValue,       // unconstrained goal reached a concrete value
  ConstantOutOfRange,         // integer outside the constant constructor range
  UnaryMarkOutOfRange,        // block mark outside the unary constructor range
  TupleArityMismatch,         // tuple value against a product of another width
  ShapeMismatch,              // value and goal disagree structurally
  RecursiveInstanceMismatch,  // back reference used at an incompatible type
};

const char* to_string(FailureReason r);

struct CheckFailure {
  FailureReason reason;
  std::vector<uint32_t> path;  // child steps from the root of the value term
};

std::string to_string(const CheckFailure& f);

struct CheckSuccess {
  ExprRef expr;   // the reconstructed expression
  CheckEnv env;   // final environment (input bindings, updated)
};

struct CheckStats {
  uint64_t block_visits = 0;
};

/// One-pass verification of a value term against a closed goal type. Runs on
/// an explicit work stack, so value depth is bounded only by memory. Throws
/// UsageError on unbound variables or useless binders; those are caller bugs,
/// not checkable input properties.
std::variant<CheckSuccess, CheckFailure> check(const TypeDefs& defs,
                                               const CheckEnv& env,
                                               const GroundRef& goal,
                                               const ValueRef& v,
                                               CheckStats* stats = nullptr);

/// Check a closed term against the universal closure of a scheme.
std::variant<CheckSuccess, CheckFailure> check_root(const TypeDefs& defs,
                                                    const TypeScheme& scheme,
                                                    const ValueRef& v,
                                                    CheckStats* stats = nullptr);

}  // namespace umv

#endif  // UMV_CHECKER_HPP
