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

#include "doctest.h"
#include "test_support.hpp"
#include "umv/wire.hpp"

using namespace umv;
using namespace umv::test;

namespace {

const WireBytes kMagic{0x55, 0x4D, 0x56, 0x31};

WireBytes cat(std::initializer_list<WireBytes> parts) {
  WireBytes out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

DecodeError expect_error(const WireBytes& b) {
  auto res = decode(b);
  REQUIRE(std::holds_alternative<DecodeError>(res));
  return std::get<DecodeError>(res);
}

RawGraph expect_graph(const WireBytes& b) {
  auto res = decode(b);
  REQUIRE(std::holds_alternative<RawGraph>(res));
  return std::get<RawGraph>(std::move(res));
}

}  // namespace

TEST_CASE("single leaf encodes to the documented bytes") {
  RawGraph g;
  g.set_root(g.add_leaf(7));
  CHECK(encode(g) ==
        cat({kMagic, {0x49, 0x07, 0, 0, 0, 0, 0, 0, 0}}));
  RawGraph neg;
  neg.set_root(neg.add_leaf(-1));
  CHECK(encode(neg) ==
        cat({kMagic,
             {0x49, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF}}));
}

TEST_CASE("self-loop encodes as block plus back-reference") {
  RawGraph g;
  NodeId b = g.add_block(1, {0});
  g.set_child(b, 0, b);
  g.set_root(b);
  CHECK(encode(g) ==
        cat({kMagic, {0x42, 1, 0, 0, 0, 1, 0, 0, 0, 0x52, 0, 0, 0, 0}}));
  RawGraph back = expect_graph(encode(g));
  CHECK(rooted_equal(back, g));
}

TEST_CASE("decode error taxonomy") {
  CHECK(expect_error({}).kind == DecodeErrorKind::BadMagic);
  CHECK(expect_error({0x55, 0x4D, 0x56, 0x32}).kind ==
        DecodeErrorKind::BadMagic);

  // Back-reference before any block started, offset of the tag byte.
  DecodeError br = expect_error(cat({kMagic, {0x52, 0, 0, 0, 0}}));
  CHECK(br.kind == DecodeErrorKind::BackRefOutOfRange);
  CHECK(br.offset == 4);

  // Truncated integer payload.
  CHECK(expect_error(cat({kMagic, {0x49, 0x01}})).kind ==
        DecodeErrorKind::Truncated);
  // Missing value entirely.
  CHECK(expect_error(kMagic).kind == DecodeErrorKind::Truncated);

  // Unary mark with arity 2.
  CHECK(expect_error(cat({kMagic, {0x42, 1, 0, 0, 0, 2, 0, 0, 0}})).kind ==
        DecodeErrorKind::BadArity);
  // Tuple mark with arity 1.
  CHECK(expect_error(cat({kMagic, {0x42, 0, 0, 0, 0, 1, 0, 0, 0}})).kind ==
        DecodeErrorKind::BadArity);
  // Arity 0.
  CHECK(expect_error(cat({kMagic, {0x42, 3, 0, 0, 0, 0, 0, 0, 0}})).kind ==
        DecodeErrorKind::BadArity);

  // Trailing bytes after a complete value.
  DecodeError tr =
      expect_error(cat({kMagic, {0x49, 0, 0, 0, 0, 0, 0, 0, 0, 0x00}}));
  CHECK(tr.kind == DecodeErrorKind::TrailingBytes);
  CHECK(tr.offset == 13);
}

TEST_CASE("decode round trip on random graphs") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 200; ++iter) {
    RawGraph g = random_graph(rng, 1 + iter % 50);
    WireBytes b = encode(g);
    RawGraph back = expect_graph(b);
    CHECK(rooted_equal(back, g));
    // Canonical bytes re-encode byte-exactly.
    CHECK(encode(back) == b);
  }
}

TEST_CASE("encode distinguishes rooted_equal-distinct small graphs") {
  // A family of small graphs, pairwise compared: byte equality must coincide
  // with graph equivalence.
  std::vector<RawGraph> family;
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) family.push_back(random_graph(rng, 1 + i % 6));
  {
    RawGraph g;
    g.set_root(g.add_leaf(3));
    family.push_back(std::move(g));
  }
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = 0; j < family.size(); ++j) {
      bool same_bytes = encode(family[i]) == encode(family[j]);
      CHECK(same_bytes == rooted_equal(family[i], family[j]));
    }
}

TEST_CASE("decode is total on mutated and random byte strings") {
  std::mt19937_64 rng(2024);
  auto byte = [&]() {
    return static_cast<uint8_t>(
        std::uniform_int_distribution<int>(0, 255)(rng));
  };
  for (int iter = 0; iter < 5000; ++iter) {
    WireBytes b;
    if (iter % 2 == 0) {
      size_t len = std::uniform_int_distribution<size_t>(0, 64)(rng);
      for (size_t i = 0; i < len; ++i) b.push_back(byte());
    } else {
      RawGraph g = random_graph(rng, 1 + iter % 10);
      b = encode(g);
      int flips = 1 + iter % 4;
      for (int f = 0; f < flips && !b.empty(); ++f)
        b[std::uniform_int_distribution<size_t>(0, b.size() - 1)(rng)] = byte();
    }
    auto res = decode(b);
    if (const auto* g = std::get_if<RawGraph>(&res)) g->validate();
  }
}
