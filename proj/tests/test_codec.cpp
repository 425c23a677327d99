#include "doctest.h"

#include "pls/lex.hpp"
#include "pls/rng.hpp"

using namespace pls;

namespace {

Cluster random_cluster(Rng& rng, std::size_t size) {
  // ids with gaps
  Cluster c;
  NodeId id = rng.below(100);
  for (std::size_t i = 0; i < size; ++i) {
    c.push_back(id);
    id += 1 + rng.below(37);
  }
  return c;
}

BitString random_string(Rng& rng, std::size_t len) {
  BitString s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(rng.next_bool());
  return s;
}

Labeling encode_all(const Cluster& c, const BitString& s) {
  Labeling labels;
  for (NodeId v : c) labels[v] = lex_encode(c, s, v);
  return labels;
}

}  // namespace

TEST_CASE("lex examples") {
  Cluster single{7};
  BitString s = BitString::from_string("1101");
  // one node holds the whole padded string
  CHECK(lex_encode(single, s, 7).size() == 5);
  CHECK(*lex_decode(single, encode_all(single, s)) == s);

  // empty string: blocks are padding only, decode returns empty
  Cluster c3{1, 5, 9};
  auto labels = encode_all(c3, BitString());
  CHECK(*lex_decode(c3, labels) == BitString());

  // 7 bits over 3 nodes: three equal blocks of three bits
  BitString s7 = BitString::from_string("1011001");
  auto l7 = encode_all(c3, s7);
  for (NodeId v : c3) CHECK(l7.at(v).size() == 3);
  CHECK(*lex_decode(c3, l7) == s7);

  CHECK_THROWS_AS(lex_encode(c3, s7, 2), GraphError);  // node not in cluster
}

TEST_CASE("lex round trip across sizes and lengths") {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    Cluster c = random_cluster(rng, 1 + rng.below(12));
    BitString s = random_string(rng, rng.below(41));
    auto labels = encode_all(c, s);
    auto back = lex_decode(c, labels);
    REQUIRE(back.has_value());
    REQUIRE_MESSAGE(*back == s, "trial " << trial);
  }
}

TEST_CASE("lex decode failures") {
  Rng rng(23);
  Cluster c{2, 4, 6, 8};
  BitString s = random_string(rng, 13);
  auto labels = encode_all(c, s);

  // unequal block lengths
  auto bad = labels;
  bad[4].push_back(true);
  CHECK_FALSE(lex_decode(c, bad).has_value());

  // missing label
  auto missing = labels;
  missing.erase(6);
  CHECK_FALSE(lex_decode(c, missing).has_value());

  // all-zero concatenation has no padding marker
  Labeling zeros;
  for (NodeId v : c) zeros[v] = BitString::from_string("00");
  CHECK_FALSE(lex_decode(c, zeros).has_value());

  // zero-length blocks cannot carry the marker
  Labeling empties;
  for (NodeId v : c) empties[v] = BitString();
  CHECK_FALSE(lex_decode(c, empties).has_value());
}

TEST_CASE("permuted blocks decode to an error or a different string") {
  Rng rng(29);
  int changed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Cluster c = random_cluster(rng, 2 + rng.below(8));
    BitString s = random_string(rng, 1 + rng.below(30));
    auto labels = encode_all(c, s);
    std::size_t i = rng.below(c.size());
    std::size_t j = rng.below(c.size());
    if (i == j) continue;
    std::swap(labels[c[i]], labels[c[j]]);
    auto back = lex_decode(c, labels);
    if (!back || *back != s) ++changed;
    // swapping identical blocks legitimately decodes to the same string
    if (back && *back == s) CHECK(labels.at(c[i]) == labels.at(c[j]));
  }
  CHECK(changed > 150);
}
