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

#ifndef UMV_PARSE_HPP
#define UMV_PARSE_HPP

#include <string>

#include "umv/types.hpp"
#include "umv/value.hpp"

namespace umv {

/// Position-carrying parse failure. code is one of: ParseError,
/// DuplicateConstructor, UnknownTypeInPayload, UnknownType, ArityMismatch,
/// UnknownConstructor, UselessBinder.
struct ParseError {
  int line = 1;
  int col = 1;
  std::string code;
  std::string message;
};

/// Render as `<file>:<line>:<col>: <code>: <message>`.
std::string format_error(const std::string& file, const ParseError& e);

// Concrete syntax, by example:
//   declarations   type List(a) = Nil | Cons(a * List(a))
//   schemes        List(a) * List(a)      (free variables quantified)
//   literals       Cons(1, Nil)           (multi-argument sugar for a
//                                          tuple payload)
//                  let p = Nil in (p, p)
//                  fix r = B(r)           fix (r1, r2) = (F(r2), F(r1))
// Lowercase identifiers are variables, capitalized ones types/constructors.

TypeDefs parse_type_defs(const std::string& text);               // throws ParseError
TypeScheme parse_type_scheme(const std::string& text,
                             const TypeDefs& defs);              // throws ParseError
ExprRef parse_value_literal(const std::string& text,
                            const TypeDefs& defs);               // throws ParseError

/// Pretty-print in the literal syntax; parse_value_literal round-trips it.
std::string print_expr(const ExprRef& e);

}  // namespace umv

#endif  // UMV_PARSE_HPP
