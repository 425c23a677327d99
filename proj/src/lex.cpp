#include "pls/lex.hpp"

#include <algorithm>

namespace pls {

namespace {

BitString pad_to_multiple(const BitString& s, std::size_t k) {
  // smallest multiple of k strictly larger than |s|
  std::size_t target = (s.size() / k + 1) * k;
  BitString out = s;
  out.push_back(true);
  while (out.size() < target) out.push_back(false);
  return out;
}

std::optional<BitString> strip_pad(const BitString& padded) {
  std::size_t end = padded.size();
  while (end > 0 && !padded.bit(end - 1)) --end;
  if (end == 0) return std::nullopt;  // marker missing: not a padded string
  return padded.slice(0, end - 1);
}

}  // namespace

Label lex_encode(const Cluster& c, const BitString& s, NodeId v) {
  auto it = std::lower_bound(c.begin(), c.end(), v);
  if (it == c.end() || *it != v) throw GraphError("lex_encode: node not in cluster");
  std::size_t rank = std::size_t(it - c.begin());
  BitString padded = pad_to_multiple(s, c.size());
  std::size_t block = padded.size() / c.size();
  return padded.slice(rank * block, block);
}

std::optional<BitString> lex_decode(
    const Cluster& c, const std::function<std::optional<Label>(NodeId)>& label_of) {
  if (c.empty()) return std::nullopt;
  BitString concat;
  std::size_t block = 0;
  bool first = true;
  for (NodeId v : c) {  // clusters are id-sorted
    auto l = label_of(v);
    if (!l) return std::nullopt;
    if (first) {
      block = l->size();
      first = false;
    } else if (l->size() != block) {
      return std::nullopt;  // unequal block lengths
    }
    concat.append(*l);
  }
  if (concat.empty()) return std::nullopt;
  return strip_pad(concat);
}

std::optional<BitString> lex_decode(const Cluster& c, const Labeling& labels) {
  return lex_decode(c, [&](NodeId v) -> std::optional<Label> {
    auto it = labels.find(v);
    if (it == labels.end()) return std::nullopt;
    return it->second;
  });
}

}  // namespace pls
