#include "arcext/weights.hpp"

#include <algorithm>

#include "arcext/check.hpp"

namespace arcext {

int Weight::num_up() const {
  int c = 0;
  for (Label l : labels)
    if (l == Label::Up) ++c;
  return c;
}

int Weight::num_down() const { return size() - num_up(); }

std::string Weight::str() const {
  std::string s;
  s.reserve(labels.size());
  for (Label l : labels) s.push_back(l == Label::Up ? '^' : 'v');
  return s;
}

Weight Weight::parse(const std::string& s) {
  Weight w;
  w.labels.reserve(s.size());
  for (char c : s) {
    if (c == '^')
      w.labels.push_back(Label::Up);
    else if (c == 'v' || c == 'V')
      w.labels.push_back(Label::Down);
    else
      throw domain_error("weight string must be over {v,^}, got '" +
                         std::string(1, c) + "'");
  }
  if (w.labels.empty()) throw domain_error("empty weight string");
  return w;
}

std::vector<Weight> enumerate_weights(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1)
    throw domain_error("enumerate_weights: need m,n >= 0 and m+n >= 1");
  Weight w;
  w.labels.assign(static_cast<size_t>(m), Label::Down);
  w.labels.insert(w.labels.end(), static_cast<size_t>(n), Label::Up);
  std::sort(w.labels.begin(), w.labels.end());
  std::vector<Weight> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.labels.begin(), w.labels.end()));
  return out;
}

Weight zero_weight(int m, int n) {
  Weight w;
  w.labels.assign(static_cast<size_t>(n), Label::Up);
  w.labels.insert(w.labels.end(), static_cast<size_t>(m), Label::Down);
  return w;
}

int weight_length(const Weight& la) {
  int downs = 0, len = 0;
  for (int i = 0; i < la.size(); ++i) {
    if (la.down(i))
      ++downs;
    else
      len += downs;
  }
  return len;
}

bool bruhat_leq(const Weight& la, const Weight& mu) {
  if (la.size() != mu.size() || la.num_up() != mu.num_up())
    throw domain_error("bruhat_leq: weights from different blocks");
  int ua = 0, ub = 0;
  for (int i = 0; i < la.size(); ++i) {
    if (la.up(i)) ++ua;
    if (mu.up(i)) ++ub;
    if (ua > ub) return false;
  }
  return true;
}

int relative_length(int i, const Weight& la, const Weight& mu) {
  ARCEXT_CHECK(i >= 0 && i < la.size(), "relative_length: vertex out of range");
  int d = 0;
  for (int j = 0; j <= i; ++j) {
    if (la.down(j)) ++d;
    if (mu.down(j)) --d;
  }
  return d;
}

}  // namespace arcext
