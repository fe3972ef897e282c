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

#ifndef UMV_WIRE_HPP
#define UMV_WIRE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "umv/graph.hpp"

namespace umv {

// Binary layout, all integers little-endian:
//   magic "UMV1", then one value:
//     0x49 'I'  int64 payload (8 bytes, two's complement)
//     0x42 'B'  uint32 mark, uint32 arity (>= 1), then arity field values
//     0x52 'R'  uint32 back reference: 0-based index of a previously
//               started block, in header emission order. The target may
//               still be under construction, which is how cycles decode.
// Integer leaves are always emitted inline; only blocks are shared.

using WireBytes = std::vector<uint8_t>;

enum class DecodeErrorKind {
  BadMagic,
  Truncated,
  BackRefOutOfRange,
  TrailingBytes,
  BadArity,
  IntegerOverflow,
};

struct DecodeError {
  DecodeErrorKind kind;
  size_t offset;  // byte position the error was detected at
};

const char* to_string(DecodeErrorKind k);
std::string to_string(const DecodeError& e);

WireBytes encode(const RawGraph& g);

/// Total on arbitrary input: never throws, never reads out of bounds.
std::variant<RawGraph, DecodeError> decode(const WireBytes& bytes);

}  // namespace umv

#endif  // UMV_WIRE_HPP
