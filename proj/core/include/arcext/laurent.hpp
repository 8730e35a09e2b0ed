#pragma once

// Integer Laurent polynomials in q, used for graded dimensions,
// q-decomposition numbers and Kazhdan-Lusztig polynomials.

#include <cstdint>
#include <map>
#include <string>

namespace arcext {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long long c) {
    if (c) coeffs_[0] = c;
  }
  static LaurentPoly q_power(int e, long long c = 1) {
    LaurentPoly p;
    if (c) p.coeffs_[e] = c;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  long long coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? 0 : it->second;
  }
  const std::map<int, long long>& coeffs() const { return coeffs_; }
  int min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  int max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  void add(int e, long long c) {
    if (!c) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (auto [e1, c1] : a.coeffs_)
      for (auto [e2, c2] : b.coeffs_) p.add(e1 + e2, c1 * c2);
    return p;
  }
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  long long eval_at_one() const {
    long long s = 0;
    for (auto [e, c] : coeffs_) {
      (void)e;
      s += c;
    }
    return s;
  }

  // "1+q^2", "q", "2q^-1", "0"; terms in ascending exponent.
  std::string str() const;

 private:
  std::map<int, long long> coeffs_;  // exponent -> coefficient, no zeros
};

}  // namespace arcext
