#pragma once

// Merkulov's minimal model on E = H*(hom(P_,P_)).  With Q lambda_1 = -Id and
//
//   lambda_n(a_1..a_n) =
//     - sum_{k+l=n} (-1)^{k+(l-1)(|a_1|+...+|a_k|)}
//         Q(lambda_k(a_1..a_k)) . Q(lambda_l(a_{k+1}..a_n)),
//
// the maps m_1 = 0 and m_n = Pi(lambda_n) give an A-infinity structure on
// the chosen cohomology representatives.  The recursion is evaluated by
// dynamic programming over contiguous subtuples: only tuples with a split
// into two nonzero Q(lambda) factors can contribute, so the support tables
// stay small and vanishing scans beyond the expected arity bound stay
// honest (nothing is pruned away by the bound being scanned for).

#include <map>
#include <vector>

#include "arcext/extdg.hpp"

namespace arcext {

struct AinftyModel {
  struct Elt {
    int la, mu, r, k;
  };
  DgExt* ext = nullptr;
  std::vector<Elt> basis;
  std::map<std::tuple<int, int, int, int>, int> index;
  int max_arity = 0;

  // tables[l]: composable tuple of basis ids -> m_l value in basis coords.
  std::map<int, std::map<std::vector<int>, QVec>> tables;
  // Q(lambda_l) support sizes per arity (diagnostic).
  std::map<int, size_t> qlambda_support;

  int deg(int id) const { return basis[static_cast<size_t>(id)].r; }
  // zero when absent; m_1 = 0 identically on the model.
  QVec m_value(int arity, const std::vector<int>& tuple) const {
    auto it = tables.find(arity);
    if (it == tables.end()) return {};
    auto jt = it->second.find(tuple);
    return jt == it->second.end() ? QVec{} : jt->second;
  }
};

AinftyModel minimal_model(DgExt& E, int max_arity);

struct StasheffReport {
  long long tuples_checked = 0;
  std::vector<std::vector<int>> violations;
  bool ok() const { return violations.empty(); }
};
// Verify sum (-1)^{r+st} m_{r+t+1}(Id^r (x) m_s (x) Id^t) = 0 on every
// composable basis tuple of total arity 2..max_total_arity, with the Koszul
// sign (-1)^{|m_s| (|a_1|+...+|a_r|)}, |m_s| = 2-s.
StasheffReport stasheff_check(const AinftyModel& M, int max_total_arity);

struct VanishingScan {
  int max_nonzero_arity = 0;  // largest l with m_l != 0
  std::vector<int> witness;
  std::map<int, size_t> nonzero_counts;
};
VanishingScan vanishing_scan(const AinftyModel& M);

}  // namespace arcext
