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

#ifndef UMV_ORACLES_HPP
#define UMV_ORACLES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include "umv/checker.hpp"
#include "umv/types.hpp"
#include "umv/value.hpp"

namespace umv {

// Reference type systems used to cross-validate the checker. None of these
// share traversal code with it.

struct InferenceFailure {
  std::string message;
};

/// Hindley-Milner inference with let-generalization and monomorphic
/// recursion. Returns the principal scheme generalized over env.
std::variant<TypeScheme, InferenceFailure> hm_infer(const TypeDefs& defs,
                                                    const TypeEnv& env,
                                                    const ExprRef& e);

/// Schemes assumed for fix binders; checking against them makes polymorphic
/// recursion decidable.
using FixAnnotation = std::map<std::string, TypeScheme>;

/// Annotated checking with polymorphic recursion: fix binders take their
/// annotated schemes, the inferred body must generalize to them. Throws
/// UsageError on a missing annotation.
bool mlrec_check(const TypeDefs& defs, const TypeEnv& env, const ExprRef& e,
                 const TypeRef& goal, const FixAnnotation& ann);

/// Derivability of env |- e : goal in the closed-type system the checker
/// implements, decided syntax-directedly over the expression itself: sharing
/// binders accumulate occurrence constraints by anti-unification, recursive
/// binders take the goal type at their fix and occurrences must be instances.
bool top_check(const TypeDefs& defs, const CheckEnv& env, const ExprRef& e,
               const GroundRef& goal);

/// Deterministic type-directed generator of closed well-typed programs:
/// grows a target type, then a term inhabiting it, inserting let sharing and
/// fix cycles. hm_infer always accepts the result at the returned type.
std::pair<ExprRef, TypeRef> gen_typed_program(uint64_t seed, int budget,
                                              const TypeDefs& defs);

}  // namespace umv

#endif  // UMV_ORACLES_HPP
