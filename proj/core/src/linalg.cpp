#include "arcext/linalg.hpp"

namespace arcext {

QVec RowBasis::reduce(QVec v) const {
  while (!v.empty()) {
    auto lead = v.begin();
    auto it = rows_.find(lead->first);
    if (it == rows_.end()) break;
    mpq_class c = -lead->second;
    vec_add(v, c, it->second);
  }
  return v;
}

bool RowBasis::insert(QVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  mpq_class inv = 1 / v.begin()->second;
  vec_scale(v, inv);
  int pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<QVec> kernel(const std::vector<QVec>& images) {
  std::vector<QVec> ker;
  std::map<int, std::pair<QVec, QVec>> rows;  // pivot -> (image, domain combo)
  for (size_t i = 0; i < images.size(); ++i) {
    QVec v = images[i];
    QVec combo{{static_cast<int>(i), mpq_class(1)}};
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = rows.find(lead->first);
      if (it == rows.end()) break;
      mpq_class c = -lead->second;
      vec_add(v, c, it->second.first);
      vec_add(combo, c, it->second.second);
    }
    if (v.empty()) {
      ker.push_back(std::move(combo));
    } else {
      mpq_class inv = 1 / v.begin()->second;
      vec_scale(v, inv);
      vec_scale(combo, inv);
      int pivot = v.begin()->first;
      rows.emplace(pivot, std::make_pair(std::move(v), std::move(combo)));
    }
  }
  return ker;
}

bool SolvBasis::insert(QVec v, int tag) {
  QVec combo{{tag, mpq_class(1)}};
  while (!v.empty()) {
    auto lead = v.begin();
    auto it = rows_.find(lead->first);
    if (it == rows_.end()) break;
    mpq_class c = -lead->second;
    vec_add(v, c, it->second.first);
    vec_add(combo, c, it->second.second);
  }
  if (v.empty()) return false;
  mpq_class inv = 1 / v.begin()->second;
  vec_scale(v, inv);
  vec_scale(combo, inv);
  int pivot = v.begin()->first;
  rows_.emplace(pivot, std::make_pair(std::move(v), std::move(combo)));
  return true;
}

bool SolvBasis::solve(QVec v, QVec& combo) const {
  combo.clear();
  while (!v.empty()) {
    auto lead = v.begin();
    auto it = rows_.find(lead->first);
    if (it == rows_.end()) return false;
    mpq_class c = lead->second;
    vec_add(combo, c, it->second.second);
    vec_add(v, -c, it->second.first);
  }
  return true;
}

}  // namespace arcext
