#include "arcext/shelton.hpp"

#include "arcext/check.hpp"

namespace arcext {

RightMultResult right_multiply(const Weight& la, int i) {
  ARCEXT_CHECK(i >= 1 && i < la.size(), "simple reflection index out of range");
  RightMultResult r;
  r.weight = la;
  Label a = la.at(i - 1), b = la.at(i);
  if (a == b) {
    r.in_wp = false;
    r.longer = false;
    return r;
  }
  std::swap(r.weight.labels[static_cast<size_t>(i - 1)],
            r.weight.labels[static_cast<size_t>(i)]);
  r.in_wp = true;
  // an up moving right gains one down on its left
  r.longer = (a == Label::Up);
  return r;
}

SheltonOracle::SheltonOracle(int m, int n) : m_(m), n_(n) {
  weights_ = enumerate_weights(m, n);
  for (size_t i = 0; i < weights_.size(); ++i)
    index_[weights_[i]] = static_cast<int>(i);
}

int SheltonOracle::weight_index(const Weight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw domain_error("weight not in block: " + w.str());
  return it->second;
}

namespace {

// group order: x <= y iff la0.x >= la0.y in the weight order
bool group_leq(const Weight& x, const Weight& y) { return bruhat_leq(y, x); }
bool group_lt(const Weight& x, const Weight& y) {
  return x != y && group_leq(x, y);
}

void add_into(ExtDimVector& v, int k, long long c) {
  if (!c) return;
  auto it = v.find(k);
  if (it == v.end()) {
    v[k] = c;
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

}  // namespace

const ExtDimVector& SheltonOracle::dims(int x, int y) {
  return dims_impl(x, y, false);
}

const ExtDimVector& SheltonOracle::dims_impl(int x, int y, bool largest_s) {
  auto& memo = memo_[largest_s ? 1 : 0];
  auto it = memo.find({x, y});
  if (it != memo.end()) return it->second;
  ExtDimVector v = compute(x, y, largest_s);
  for (auto [k, c] : v) {
    ARCEXT_CHECK(c > 0, "Shelton recursion produced a negative dimension");
    ARCEXT_CHECK(k >= 0 && k <= weight_length(weights_[static_cast<size_t>(x)]) -
                                    weight_length(weights_[static_cast<size_t>(y)]),
                 "Shelton dimension outside the length window");
  }
  return memo.emplace(std::make_pair(x, y), std::move(v)).first->second;
}

ExtDimVector SheltonOracle::compute(int xi, int yi, bool largest_s) {
  const Weight& x = weights_[static_cast<size_t>(xi)];
  const Weight& y = weights_[static_cast<size_t>(yi)];

  // case 1: zero unless y <= x
  if (!group_leq(y, x)) return {};
  // case 2
  if (xi == yi) return {{0, 1}};

  // s with x > xs and xs in W^p: a down immediately left of an up in x
  int s = -1;
  if (!largest_s) {
    for (int i = 1; i < x.size(); ++i)
      if (x.down(i - 1) && x.up(i)) {
        s = i;
        break;
      }
  } else {
    for (int i = x.size() - 1; i >= 1; --i)
      if (x.down(i - 1) && x.up(i)) {
        s = i;
        break;
      }
  }
  ARCEXT_CHECK(s >= 0, "no admissible simple reflection for x != e");

  RightMultResult xs = right_multiply(x, s);
  RightMultResult ys = right_multiply(y, s);
  int xsi = weight_index(xs.weight);

  ExtDimVector out;
  if (!ys.in_wp) {
    // case 4: E^k(x,y) = E^{k-1}(xs,y)
    for (auto [k, c] : dims_impl(xsi, yi, largest_s)) add_into(out, k + 1, c);
    return out;
  }
  int ysi = weight_index(ys.weight);
  if (!ys.longer) {
    // case 3: E^k(x,y) = E^k(xs,ys)
    return dims_impl(xsi, ysi, largest_s);
  }
  if (!group_lt(ys.weight, xs.weight)) {
    // case 5: E^k(x,y) = E^{k-1}(xs,y) + E^k(xs,y)
    for (auto [k, c] : dims_impl(xsi, yi, largest_s)) {
      add_into(out, k + 1, c);
      add_into(out, k, c);
    }
    return out;
  }
  // case 6: x > xs > ys > y:
  // E^k(x,y) = E^{k-1}(xs,y) - E^{k+1}(xs,y) + E^k(xs,ys)
  for (auto [k, c] : dims_impl(xsi, yi, largest_s)) {
    add_into(out, k + 1, c);
    add_into(out, k - 1, -c);
  }
  for (auto [k, c] : dims_impl(xsi, ysi, largest_s)) add_into(out, k, c);
  return out;
}

long long SheltonOracle::total_dim() {
  long long t = 0;
  for (int x = 0; x < static_cast<int>(weights_.size()); ++x)
    for (int y = 0; y < static_cast<int>(weights_.size()); ++y)
      for (auto [k, c] : dims(x, y)) {
        (void)k;
        t += c;
      }
  return t;
}

bool SheltonOracle::invariant_under_s_choice() {
  for (int x = 0; x < static_cast<int>(weights_.size()); ++x)
    for (int y = 0; y < static_cast<int>(weights_.size()); ++y)
      if (dims_impl(x, y, false) != dims_impl(x, y, true)) return false;
  return true;
}

}  // namespace arcext
