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

#include "umv/wire.hpp"

namespace umv {

namespace {

constexpr uint8_t kMagic[4] = {0x55, 0x4D, 0x56, 0x31};  // "UMV1"
constexpr uint8_t kTagInt = 0x49;
constexpr uint8_t kTagBlock = 0x42;
constexpr uint8_t kTagBackRef = 0x52;

void put_u32(WireBytes& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_i64(WireBytes& out, int64_t v) {
  auto u = static_cast<uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(u >> (8 * i)));
}

}  // namespace

const char* to_string(DecodeErrorKind k) {
  switch (k) {
    case DecodeErrorKind::BadMagic: return "BadMagic";
    case DecodeErrorKind::Truncated: return "Truncated";
    case DecodeErrorKind::BackRefOutOfRange: return "BackRefOutOfRange";
    case DecodeErrorKind::TrailingBytes: return "TrailingBytes";
    case DecodeErrorKind::BadArity: return "BadArity";
    case DecodeErrorKind::IntegerOverflow: return "IntegerOverflow";
  }
  return "UnknownDecodeError";
}

std::string to_string(const DecodeError& e) {
  return std::string(to_string(e.kind)) + " at byte offset " +
         std::to_string(e.offset);
}

WireBytes encode(const RawGraph& g) {
  g.validate();
  WireBytes out(kMagic, kMagic + 4);
  std::vector<int64_t> block_index(g.size(), -1);  // emission order or -1
  uint32_t next_index = 0;
  std::vector<NodeId> stack{g.root()};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    const GraphNode& gn = g.node(n);
    if (gn.is_leaf()) {
      out.push_back(kTagInt);
      put_i64(out, gn.leaf().value);
      continue;
    }
    if (block_index[n] >= 0) {
      out.push_back(kTagBackRef);
      put_u32(out, static_cast<uint32_t>(block_index[n]));
      continue;
    }
    block_index[n] = next_index++;
    const BlockNode& b = gn.block();
    out.push_back(kTagBlock);
    put_u32(out, b.mark);
    put_u32(out, static_cast<uint32_t>(b.children.size()));
    for (auto it = b.children.rbegin(); it != b.children.rend(); ++it)
      stack.push_back(*it);
  }
  return out;
}

std::variant<RawGraph, DecodeError> decode(const WireBytes& bytes) {
  size_t off = 0;
  auto fail = [&](DecodeErrorKind k, size_t at) {
    return std::variant<RawGraph, DecodeError>(DecodeError{k, at});
  };
  if (bytes.size() < 4 ||
      !std::equal(kMagic, kMagic + 4, bytes.begin()))
    return fail(DecodeErrorKind::BadMagic, 0);
  off = 4;

  auto need = [&](size_t n) { return bytes.size() - off >= n; };
  auto read_u32 = [&]() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<uint32_t>(bytes[off + i]) << (8 * i);
    off += 4;
    return v;
  };
  auto read_i64 = [&]() {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<uint64_t>(bytes[off + i]) << (8 * i);
    off += 8;
    return static_cast<int64_t>(v);
  };

  RawGraph g;
  std::vector<NodeId> started_blocks;
  struct Frame {
    NodeId id;
    uint32_t arity;
    uint32_t next = 0;
  };
  std::vector<Frame> frames;
  bool have_root = false;
  NodeId root = 0;

  auto deliver = [&](NodeId id) {
    while (true) {
      if (frames.empty()) {
        root = id;
        have_root = true;
        return;
      }
      Frame& f = frames.back();
      g.set_child(f.id, f.next++, id);
      if (f.next < f.arity) return;
      id = f.id;
      frames.pop_back();
    }
  };

  while (!have_root) {
    if (!need(1)) return fail(DecodeErrorKind::Truncated, off);
    size_t tag_off = off;
    uint8_t tag = bytes[off++];
    if (tag == kTagInt) {
      if (!need(8)) return fail(DecodeErrorKind::Truncated, off);
      deliver(g.add_leaf(read_i64()));
    } else if (tag == kTagBlock) {
      if (!need(8)) return fail(DecodeErrorKind::Truncated, off);
      uint32_t mark = read_u32();
      uint32_t arity = read_u32();
      if (arity == 0 || (mark == 0 && arity < 2) || (mark >= 1 && arity != 1))
        return fail(DecodeErrorKind::BadArity, tag_off);
      // Every field costs at least one byte, so an arity beyond the
      // remaining input can never complete.
      if (arity > bytes.size() - off)
        return fail(DecodeErrorKind::Truncated, off);
      NodeId id = g.add_block(mark, std::vector<NodeId>(arity, 0));
      started_blocks.push_back(id);
      frames.push_back(Frame{id, arity});
    } else if (tag == kTagBackRef) {
      if (!need(4)) return fail(DecodeErrorKind::Truncated, off);
      uint32_t idx = read_u32();
      if (idx >= started_blocks.size())
        return fail(DecodeErrorKind::BackRefOutOfRange, tag_off);
      deliver(started_blocks[idx]);
    } else {
      return fail(DecodeErrorKind::BadMagic, tag_off);
    }
  }
  if (off != bytes.size()) return fail(DecodeErrorKind::TrailingBytes, off);
  g.set_root(root);
  return g;
}

}  // namespace umv
