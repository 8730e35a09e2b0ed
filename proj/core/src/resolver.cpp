#include "arcext/resolver.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "arcext/check.hpp"
#include "arcext/linalg.hpp"

namespace arcext {

namespace {

// Q-basis bookkeeping for (+)_t P(w_t)<s_t>: flat index <-> (summand t,
// algebra basis element with cap weight w_t).
struct PSpace {
  const ArcAlgebra* A = nullptr;
  std::vector<Summand> summands;
  std::vector<int> offsets;
  std::vector<std::pair<int, int>> flat;        // flat -> (t, alg idx)
  std::vector<std::map<int, int>> pos_in_summand;  // t: alg idx -> local pos

  void build(const ArcAlgebra& alg, std::vector<Summand> s) {
    A = &alg;
    summands = std::move(s);
    offsets.clear();
    flat.clear();
    pos_in_summand.assign(summands.size(), {});
    for (size_t t = 0; t < summands.size(); ++t) {
      offsets.push_back(static_cast<int>(flat.size()));
      std::vector<int> pb;
      for (int a = 0; a < alg.num_weights(); ++a)
        for (int idx : alg.block(a, summands[t].weight)) pb.push_back(idx);
      std::sort(pb.begin(), pb.end());
      for (size_t k = 0; k < pb.size(); ++k) {
        pos_in_summand[t][pb[k]] = static_cast<int>(k);
        flat.emplace_back(static_cast<int>(t), pb[k]);
      }
    }
  }
  int dim() const { return static_cast<int>(flat.size()); }
  int index(int t, int alg_idx) const {
    return offsets[static_cast<size_t>(t)] +
           pos_in_summand[static_cast<size_t>(t)].at(alg_idx);
  }
  // left block weight and total internal degree of a flat basis vector
  int left_weight(int f) const {
    return A->diagram(flat[static_cast<size_t>(f)].second).cup_w;
  }
  int degree(int f) const {
    auto [t, b] = flat[static_cast<size_t>(f)];
    return A->diagram(b).degree + summands[static_cast<size_t>(t)].shift;
  }
};

// g . v for an algebra basis element g and a vector v in a PSpace.
QVec left_mult(const ArcAlgebra& A, const PSpace& P, int g, const QVec& v) {
  QVec out;
  for (const auto& [f, c] : v) {
    auto [t, b] = P.flat[static_cast<size_t>(f)];
    const AlgebraElement& prod = A.multiply(g, b);
    for (const auto& [k, ck] : prod) {
      int fo = P.index(t, k);
      auto it = out.find(fo);
      if (it == out.end()) {
        out.emplace(fo, c * ck);
      } else {
        it->second += c * ck;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace

int degree_one_generator(const ArcAlgebra& A, int la, int mu) {
  int found = -1;
  for (int idx : A.block(la, mu))
    if (A.diagram(idx).degree == 1) {
      ARCEXT_CHECK(found < 0, "degree-1 hom space has dimension > 1");
      found = idx;
    }
  return found;
}

ProjComplex resolve(const ArcAlgebra& A, int lambda) {
  ProjComplex C;
  C.lambda = lambda;
  C.terms.push_back({{lambda, 0}});

  PSpace cur;
  cur.build(A, C.terms[0]);

  // Kernel of the augmentation P(la) -> M(la): basis vectors whose middle
  // weight differs from la.  They all have positive degree.
  std::vector<QVec> ker;
  for (int f = 0; f < cur.dim(); ++f) {
    int b = cur.flat[static_cast<size_t>(f)].second;
    if (A.diagram(b).mid_w != lambda) ker.push_back(QVec{{f, mpq_class(1)}});
  }

  while (!ker.empty()) {
    for (const QVec& v : ker)
      for (const auto& [f, c] : v) {
        (void)c;
        ARCEXT_CHECK(cur.degree(f) > 0, "kernel not inside the radical");
      }

    // Split the kernel basis by (left weight, internal degree).
    std::map<std::pair<int, int>, std::vector<QVec>> cells;
    for (const QVec& v : ker) {
      int f0 = v.begin()->first;
      std::pair<int, int> cell{cur.degree(f0), cur.left_weight(f0)};
      for (const auto& [f, c] : v) {
        (void)c;
        ARCEXT_CHECK(cur.degree(f) == cell.first && cur.left_weight(f) == cell.second,
                     "kernel vector not homogeneous");
      }
      cells[cell].push_back(v);
    }

    // Radical of the kernel: positive-degree elements applied to it.
    std::map<std::pair<int, int>, RowBasis> rad;
    for (const QVec& v : ker) {
      int f0 = v.begin()->first;
      int beta = cur.left_weight(f0);
      int dv = cur.degree(f0);
      for (int gamma = 0; gamma < A.num_weights(); ++gamma)
        for (int g : A.block(gamma, beta)) {
          int dg = A.diagram(g).degree;
          if (dg == 0) continue;
          QVec w = left_mult(A, cur, g, v);
          if (!w.empty()) rad[{dv + dg, gamma}].insert(std::move(w));
        }
    }

    // Top of the kernel: generators modulo the radical, cells in degree
    // order; their lifts become the rows of the next differential.
    std::vector<Summand> next_summands;
    std::vector<QVec> gens;
    for (auto& [cell, vecs] : cells) {
      RowBasis r = rad.count(cell) ? rad[cell] : RowBasis{};
      for (QVec& v : vecs) {
        QVec red = r.reduce(v);
        if (red.empty()) continue;
        r.insert(std::move(red));
        next_summands.push_back({cell.second, cell.first});
        gens.push_back(v);
      }
    }
    ARCEXT_CHECK(!gens.empty(), "nonzero kernel with zero top");

    AlgMatrix D = AlgMatrix::zero(static_cast<int>(gens.size()),
                                  static_cast<int>(cur.summands.size()));
    for (size_t r = 0; r < gens.size(); ++r)
      for (const auto& [f, c] : gens[r]) {
        auto [t, b] = cur.flat[static_cast<size_t>(f)];
        ARCEXT_CHECK(A.diagram(b).cup_w == next_summands[r].weight,
                     "generator component in wrong block");
        auto& entry = D.at(static_cast<int>(r), t);
        auto it = entry.find(b);
        if (it == entry.end())
          entry.emplace(b, c);
        else
          it->second += c;
      }

    PSpace nxt;
    nxt.build(A, next_summands);

    // Kernel of the cover (+) P(w_r) -> ker, cell by cell.
    std::map<std::pair<int, int>, std::vector<int>> src_cells;
    for (int f = 0; f < nxt.dim(); ++f)
      src_cells[{nxt.degree(f), nxt.left_weight(f)}].push_back(f);

    std::vector<QVec> next_ker;
    long long image_rank = 0;
    for (auto& [cell, fs] : src_cells) {
      (void)cell;
      std::vector<QVec> images;
      for (int f : fs) {
        auto [t, b] = nxt.flat[static_cast<size_t>(f)];
        QVec img;
        for (int c = 0; c < D.cols; ++c) {
          const AlgebraElement& entry = D.at(t, c);
          if (entry.empty()) continue;
          const AlgebraElement prod = A.multiply(AlgebraElement{{b, mpq_class(1)}}, entry);
          for (const auto& [k, ck] : prod) {
            int fo = cur.index(c, k);
            auto it = img.find(fo);
            if (it == img.end()) {
              img.emplace(fo, ck);
            } else {
              it->second += ck;
              if (sgn(it->second) == 0) img.erase(it);
            }
          }
        }
        images.push_back(std::move(img));
      }
      std::vector<QVec> kv = kernel(images);
      image_rank += static_cast<long long>(fs.size()) - static_cast<long long>(kv.size());
      for (QVec& v : kv) {
        QVec flatv;
        for (const auto& [loc, c] : v) flatv.emplace(fs[static_cast<size_t>(loc)], c);
        next_ker.push_back(std::move(flatv));
      }
    }

    // Exactness at this step: the cover image must span the whole kernel.
    {
      RowBasis span;
      long long kr = 0;
      for (const QVec& v : ker)
        if (span.insert(v)) ++kr;
      ARCEXT_CHECK(image_rank == kr, "projective cover does not span the kernel");
    }

    C.terms.push_back(next_summands);
    C.diffs.push_back(std::move(D));
    cur = std::move(nxt);
    ker = std::move(next_ker);

    ARCEXT_CHECK(C.length() <= A.weight_len(lambda) + 1,
                 "resolution longer than the weight length");
  }

  ARCEXT_CHECK(C.length() <= A.weight_len(lambda),
               "resolution longer than the weight length");
  return C;
}

void normalize_chain_signs(const ArcAlgebra& A, ProjComplex& c) {
  // requires single summands everywhere
  for (const auto& t : c.terms)
    ARCEXT_CHECK(t.size() == 1, "normalize_chain_signs: complex is not a chain");
  mpq_class u_prev = 1;  // scaling of position p
  for (size_t p = 0; p + 1 < c.terms.size(); ++p) {
    AlgMatrix& D = c.diffs[p];
    AlgebraElement& entry = D.at(0, 0);
    ARCEXT_CHECK(entry.size() == 1, "chain differential entry not a monomial");
    int f = degree_one_generator(A, c.terms[p + 1][0].weight, c.terms[p][0].weight);
    ARCEXT_CHECK(f >= 0 && entry.count(f), "chain entry is not the distinguished morphism");
    mpq_class coef = entry.at(f);
    mpq_class want = (p % 2 == 0) ? 1 : -1;  // (-1)^p
    // new entry = (u_{p+1}/u_p) * coef = want
    mpq_class u_next = want * u_prev / coef;
    entry[f] = want;
    u_prev = u_next;
  }
}

BoundReport verify_bounds(const ArcAlgebra& A, const ProjComplex& c) {
  BoundReport rep;
  const int n = A.n();
  int lla = A.weight_len(c.lambda);
  for (size_t i = 0; i < c.terms.size(); ++i)
    for (const Summand& s : c.terms[i]) {
      int lnu = A.weight_len(s.weight);
      const ArcDiagram& cup = A.cup_of(s.weight);
      int nes2 = 0;
      for (int x : nesting_numbers(cup)) nes2 += 2 * x;
      int lo = lla - static_cast<int>(i) - (n * n - n - nes2);
      int hi = lla - static_cast<int>(i);
      if (!(lo <= lnu && lnu <= hi))
        rep.violations.push_back(
            {static_cast<int>(i), s.weight,
             "l(nu)=" + std::to_string(lnu) + " outside [" + std::to_string(lo) +
                 "," + std::to_string(hi) + "]"});
    }
  return rep;
}

ResolutionSet::ResolutionSet(const ArcAlgebra& A, int jobs) : A_(A) {
  const int W = A.num_weights();
  res_.resize(static_cast<size_t>(W));
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (int la = 0; la < W; ++la) res_[static_cast<size_t>(la)] = resolve(A, la);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t]() {
        for (int la = t; la < W; la += jobs)
          res_[static_cast<size_t>(la)] = resolve(A, la);
      });
    for (auto& th : pool) th.join();
  }
  if (A.n() == 1)
    for (int la = 0; la < W; ++la) normalize_chain_signs(A, res_[static_cast<size_t>(la)]);
}

int ResolutionSet::max_length() const {
  int m = 0;
  for (const auto& c : res_) m = std::max(m, c.length());
  return m;
}

}  // namespace arcext
