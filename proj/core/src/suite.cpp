#include "arcext/suite.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "arcext/ainfty.hpp"
#include "arcext/check.hpp"
#include "arcext/io.hpp"
#include "arcext/klpoly.hpp"
#include "arcext/modules.hpp"
#include "arcext/quiver.hpp"
#include "arcext/shelton.hpp"

namespace arcext {

using nlohmann::json;

namespace {

std::vector<std::pair<int, int>> range_pairs(int max_total) {
  std::vector<std::pair<int, int>> out;
  for (int total = 1; total <= max_total; ++total)
    for (int m = 0; m <= total; ++m) out.emplace_back(m, total - m);
  return out;
}

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t]() {
      for (int i = t; i < count; i += jobs) fn(i);
    });
  for (auto& th : pool) th.join();
}

int nes_twice(const ArcDiagram& c) {
  int s = 0;
  for (int x : nesting_numbers(c)) s += 2 * x;
  return s;
}

struct RangeScan {
  bool oracle_ok = true, betti_ok = true, bounds_ok = true;
  std::string oracle_detail, betti_detail, bounds_detail;
  long long pairs_checked = 0;
};

void scan_block(int m, int n, RangeScan& out) {
  ArcAlgebra A(m, n);
  ResolutionSet R(A, 1);
  DgExt E(R);
  SheltonOracle S(m, n);
  const int W = A.num_weights();

  // criterion 1: hom-complex Ext dims against Shelton
  for (int la = 0; la < W && out.oracle_ok; ++la)
    for (int mu = 0; mu < W && out.oracle_ok; ++mu) {
      const auto& dims = E.ext_dims(la, mu);
      int x = S.weight_index(A.weight(la));
      int y = S.weight_index(A.weight(mu));
      const ExtDimVector& sv = S.dims(x, y);
      bool same = static_cast<int>(sv.size()) == static_cast<int>(dims.size());
      if (same)
        for (auto [k, d] : dims)
          if (!sv.count(k) || sv.at(k) != d) same = false;
      if (!same) {
        out.oracle_ok = false;
        out.oracle_detail = "mismatch at (" + std::to_string(m) + "," +
                            std::to_string(n) + ") " + A.weight(la).str() + " vs " +
                            A.weight(mu).str();
      }
      ++out.pairs_checked;
    }

  // criterion 2: multiset of resolution summands against KL coefficients
  for (int la = 0; la < W && out.betti_ok; ++la) {
    const ProjComplex& C = R.of(la);
    int lmax = A.weight_len(la);
    for (int i = 0; i <= lmax && out.betti_ok; ++i) {
      std::map<int, long long> have;
      if (i < static_cast<int>(C.terms.size()))
        for (const Summand& s : C.terms[static_cast<size_t>(i)]) {
          if (s.shift != i) {
            out.betti_ok = false;
            out.betti_detail = "non-linear shift at (" + std::to_string(m) + "," +
                               std::to_string(n) + ") la=" + A.weight(la).str();
          }
          ++have[s.weight];
        }
      for (int mu = 0; mu < W; ++mu) {
        long long want = kl_coeff(A.weight(la), A.weight(mu), i);
        long long got = have.count(mu) ? have[mu] : 0;
        if (want != got) {
          out.betti_ok = false;
          out.betti_detail = "Betti!=KL at (" + std::to_string(m) + "," +
                             std::to_string(n) + ") la=" + A.weight(la).str() +
                             " mu=" + A.weight(mu).str() + " i=" + std::to_string(i);
        }
      }
    }
  }

  // criterion 4: vanishing bounds
  const int n2 = n * n;
  for (int la = 0; la < W && out.bounds_ok; ++la)
    for (int mu = 0; mu < W && out.bounds_ok; ++mu) {
      int ldiff = A.weight_len(la) - A.weight_len(mu);
      for (auto [k, d] : E.ext_dims(la, mu)) {
        (void)d;
        if (k < 0 || k > ldiff) {
          out.bounds_ok = false;
          out.bounds_detail = "Ext outside [0,l(la)-l(mu)] at (" +
                              std::to_string(m) + "," + std::to_string(n) + ")";
        }
      }
      for (int k = E.rmin(la, mu); k <= E.rmax(la, mu); ++k)
        if (A.weight_len(la) > A.weight_len(mu) + n2 + k &&
            E.block_dim(la, mu, k) != 0) {
          out.bounds_ok = false;
          out.bounds_detail = "hom^k nonzero beyond the length bound at (" +
                              std::to_string(m) + "," + std::to_string(n) + ")";
        }
      const ArcDiagram& cla = A.cup_of(la);
      bool d_nonzero = oriented_half(cla, A.weight(mu));
      if (d_nonzero) {
        // d_{la,mu} != 0 forces la <= mu, hence l(la) >= l(mu)
        int bound = n + nes_twice(cla);
        if (!(0 <= ldiff && ldiff <= bound && bound <= n2)) {
          out.bounds_ok = false;
          out.bounds_detail = "decomposition bound violated at (" +
                              std::to_string(m) + "," + std::to_string(n) + ")";
        }
      }
      if (!A.cartan_entry(la, mu).is_zero()) {
        int bound = n + nes_twice(cla);
        if (!(ldiff <= bound && bound <= n2)) {
          out.bounds_ok = false;
          out.bounds_detail = "Cartan bound violated at (" + std::to_string(m) +
                              "," + std::to_string(n) + ")";
        }
      }
    }
}

CriterionResult timed(int id, const std::string& name,
                      const std::function<std::pair<bool, std::string>()>& fn) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = fn();
    r.pass = ok;
    r.details = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.details = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  return r;
}

}  // namespace

SuiteConfig SuiteConfig::from_file(const std::string& path) {
  SuiteConfig cfg;
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open config file: " + path);
  std::string line;
  auto parse_pairs = [](const std::string& v) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ';')) {
      auto comma = item.find(',');
      if (comma == std::string::npos) throw domain_error("expected m,n pair: " + item);
      out.emplace_back(std::stoi(item.substr(0, comma)),
                       std::stoi(item.substr(comma + 1)));
    }
    return out;
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "max_total")
      cfg.max_total = std::stoi(val);
    else if (key == "assoc_max_total")
      cfg.assoc_max_total = std::stoi(val);
    else if (key == "jobs")
      cfg.jobs = std::stoi(val);
    else if (key == "seed")
      cfg.seed = std::stoull(val);
    else if (key == "stasheff_arity")
      cfg.stasheff_arity = std::stoi(val);
    else if (key == "stasheff_pair")
      cfg.stasheff_pair = parse_pairs(val).at(0);
    else if (key == "ainfty_pairs")
      cfg.ainfty_pairs = parse_pairs(val);
    else if (key == "quiver_n2")
      cfg.quiver_n2 = parse_pairs(val);
    else if (key == "quiver_n1") {
      cfg.quiver_n1.clear();
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.quiver_n1.push_back(std::stoi(item));
    } else {
      throw domain_error("unknown config key: " + key);
    }
  }
  return cfg;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  auto pairs = range_pairs(cfg.max_total);

  // shared scan for criteria 1, 2 and 4
  std::vector<RangeScan> scans(pairs.size());
  auto t0 = std::chrono::steady_clock::now();
  parallel_for(cfg.jobs, static_cast<int>(pairs.size()), [&](int i) {
    scan_block(pairs[static_cast<size_t>(i)].first,
               pairs[static_cast<size_t>(i)].second, scans[static_cast<size_t>(i)]);
  });
  double scan_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  {
    CriterionResult r;
    r.id = 1;
    r.name = "oracle-equivalence (Ext dims = Shelton recursion, m+n <= " +
             std::to_string(cfg.max_total) + ")";
    r.pass = true;
    long long pairs_checked = 0;
    for (const RangeScan& s : scans) {
      pairs_checked += s.pairs_checked;
      if (!s.oracle_ok) {
        r.pass = false;
        r.details = s.oracle_detail;
      }
    }
    if (r.pass) r.details = std::to_string(pairs_checked) + " weight pairs";
    r.seconds = scan_seconds;
    rep.criteria.push_back(r);
  }
  {
    CriterionResult r;
    r.id = 2;
    r.name = "Betti numbers = Kazhdan-Lusztig coefficients";
    r.pass = true;
    for (const RangeScan& s : scans)
      if (!s.betti_ok) {
        r.pass = false;
        r.details = s.betti_detail;
      }
    rep.criteria.push_back(r);
  }

  rep.criteria.push_back(timed(3, "KL fixtures (worked example and n=1 closed form)", [&]() {
    Weight la = Weight::parse("vvvv^^");
    Weight mu = Weight::parse("v^vv^v");
    LaurentPoly want;
    want.add(4, 1);
    want.add(2, 1);
    if (kl_poly(la, mu) != want)
      return std::make_pair(false, std::string("worked example p != q^4+q^2, got ") +
                                       kl_poly(la, mu).str());
    for (int N = 1; N <= 5; ++N) {
      auto ws = enumerate_weights(N, 1);
      for (const Weight& a : ws)
        for (const Weight& b : ws) {
          int j = weight_length(a), s = weight_length(b);
          LaurentPoly p = kl_poly(a, b);
          LaurentPoly q = (s <= j) ? LaurentPoly::q_power(j - s) : LaurentPoly();
          if (p != q)
            return std::make_pair(false, std::string("n=1 closed form failed at N=") +
                                             std::to_string(N));
        }
    }
    return std::make_pair(true, std::string("q^4+q^2 and q^{j-s} for N <= 5"));
  }));

  {
    CriterionResult r;
    r.id = 4;
    r.name = "vanishing bounds (Ext window, hom length bound, d and c bounds)";
    r.pass = true;
    for (const RangeScan& s : scans)
      if (!s.bounds_ok) {
        r.pass = false;
        r.details = s.bounds_detail;
      }
    rep.criteria.push_back(r);
  }

  rep.criteria.push_back(timed(5, "algebra sanity (associativity, grading, Cartan, C = D D^T)", [&]() {
    for (auto [m, n] : range_pairs(cfg.assoc_max_total)) {
      ArcAlgebra A(m, n);
      const int dim = A.dim();
      const int W = A.num_weights();
      // unit
      for (int x = 0; x < dim; ++x) {
        AlgebraElement left, right;
        for (int w = 0; w < W; ++w) {
          const AlgebraElement& p = A.multiply(A.idempotent(w), x);
          for (const auto& [k, c] : p) left[k] += c;
          const AlgebraElement& q = A.multiply(x, A.idempotent(w));
          for (const auto& [k, c] : q) right[k] += c;
        }
        AlgebraElement want{{x, mpq_class(1)}};
        if (left != want || right != want)
          return std::make_pair(false, std::string("unit failed at (") +
                                           std::to_string(m) + "," + std::to_string(n) + ")");
      }
      // degree additivity
      for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
          if (A.diagram(x).cap_w != A.diagram(y).cup_w) continue;
          const AlgebraElement& p = A.multiply(x, y);
          for (const auto& [k, c] : p) {
            (void)c;
            if (A.diagram(k).degree != A.diagram(x).degree + A.diagram(y).degree)
              return std::make_pair(false, std::string("degree additivity failed at (") +
                                               std::to_string(m) + "," +
                                               std::to_string(n) + ")");
          }
        }
      // associativity over compatible triples
      for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
          if (A.diagram(x).cap_w != A.diagram(y).cup_w) continue;
          const AlgebraElement xy = A.multiply(AlgebraElement{{x, mpq_class(1)}},
                                               AlgebraElement{{y, mpq_class(1)}});
          for (int z = 0; z < dim; ++z) {
            if (A.diagram(y).cap_w != A.diagram(z).cup_w) continue;
            AlgebraElement lhs = A.multiply(xy, AlgebraElement{{z, mpq_class(1)}});
            AlgebraElement yz = A.multiply(AlgebraElement{{y, mpq_class(1)}},
                                           AlgebraElement{{z, mpq_class(1)}});
            AlgebraElement rhs = A.multiply(AlgebraElement{{x, mpq_class(1)}}, yz);
            if (lhs != rhs)
              return std::make_pair(false, std::string("associativity failed at (") +
                                               std::to_string(m) + "," +
                                               std::to_string(n) + ")");
          }
        }
      // Cartan symmetry and BGG reciprocity C = D D^T
      DecompositionMatrix D = decomposition_matrix(A);
      for (int a = 0; a < W; ++a)
        for (int b = 0; b < W; ++b) {
          LaurentPoly c = A.cartan_entry(a, b);
          if (c != A.cartan_entry(b, a))
            return std::make_pair(false, std::string("Cartan not symmetric"));
          LaurentPoly sum;
          for (int nu = 0; nu < W; ++nu)
            sum += D.d[static_cast<size_t>(a)][static_cast<size_t>(nu)] *
                   D.d[static_cast<size_t>(b)][static_cast<size_t>(nu)];
          if (c != sum)
            return std::make_pair(false, std::string("C != D D^T at (") +
                                             std::to_string(m) + "," +
                                             std::to_string(n) + ")");
        }
      // graded module spot checks on associativity of the action
      if (m + n <= 3) {
        std::mt19937_64 rng(cfg.seed);
        for (int la = 0; la < W; ++la) {
          GradedModule P = projective_module(A, la);
          GradedModule M = cell_module(A, la);
          (void)M;
          auto apply = [&](const GradedModule& Mod, int g, const QVec& v) {
            QVec out;
            for (const auto& [row, col, c] : Mod.action[static_cast<size_t>(g)]) {
              auto it = v.find(col);
              if (it == v.end()) continue;
              out[row] += c * it->second;
              if (sgn(out[row]) == 0) out.erase(row);
            }
            return out;
          };
          for (int trial = 0; trial < 10; ++trial) {
            int g = static_cast<int>(rng() % static_cast<unsigned long long>(dim));
            int h = static_cast<int>(rng() % static_cast<unsigned long long>(dim));
            int vv = static_cast<int>(rng() %
                                      static_cast<unsigned long long>(P.basis.size()));
            QVec v{{vv, mpq_class(1)}};
            QVec lhs = apply(P, g, apply(P, h, v));
            AlgebraElement gh = A.multiply(g, h);
            QVec rhs;
            for (const auto& [k, c] : gh)
              for (const auto& [i2, c2] : apply(P, k, v)) {
                rhs[i2] += c * c2;
                if (sgn(rhs[i2]) == 0) rhs.erase(i2);
              }
            if (lhs != rhs)
              return std::make_pair(false,
                                    std::string("module action violates g(hv)=(gh)v"));
          }
        }
      }
    }
    return std::make_pair(true,
                          std::string("all blocks with m+n <= ") +
                              std::to_string(cfg.assoc_max_total));
  }));

  rep.criteria.push_back(timed(6, "n=1 quiver relations and path dimension (N+1)^2", [&]() {
    for (int N : cfg.quiver_n1) {
      ArcAlgebra A(N, 1);
      ResolutionSet R(A, cfg.jobs);
      DgExt E(R);
      QuiverReport qr;
      Quiver q = quiver_presentation(E, &qr);
      if (!qr.relations_ok)
        return std::make_pair(false, "relations failed at N=" + std::to_string(N));
      if (!q.arrows_generate)
        return std::make_pair(false, "arrows do not generate at N=" + std::to_string(N));
      long long want = static_cast<long long>(N + 1) * (N + 1);
      if (q.span_dim_with_idempotents != want)
        return std::make_pair(false, "dim E != (N+1)^2 at N=" + std::to_string(N) +
                                         ", got " +
                                         std::to_string(q.span_dim_with_idempotents));
    }
    return std::make_pair(true, std::string("N in {1..5}: F.F=0, Id.F=F.Id=F, dims match"));
  }));

  rep.criteria.push_back(timed(7, "n=2 quiver relations (grid patterns 1-8)", [&]() {
    for (auto [m, n] : cfg.quiver_n2) {
      ArcAlgebra A(m, n);
      ResolutionSet R(A, cfg.jobs);
      DgExt E(R);
      QuiverReport qr;
      Quiver q = quiver_presentation(E, &qr);
      (void)q;
      int applicable = 0;
      for (const SquareCheck& sc : qr.squares) {
        if (!sc.applicable) continue;
        ++applicable;
        if (!sc.ok)
          return std::make_pair(false, "pattern " + std::to_string(sc.pattern) +
                                           " failed at " + sc.at + " in (" +
                                           std::to_string(m) + "," + std::to_string(n) +
                                           "): " + sc.scalar);
      }
      if (applicable == 0)
        return std::make_pair(false, std::string("no applicable grid relations found"));
      if (!qr.gauge_consistent)
        return std::make_pair(false, std::string("gauge inconsistency: no rescaling "
                                                 "realizes (1) = -1 and (2)-(6) = +1"));
    }
    return std::make_pair(true, std::string("zero, commuting and anticommuting patterns verified"));
  }));

  rep.criteria.push_back(timed(8, "A-infinity vanishing (general bound, n=1 formality, n=2 m_3)", [&]() {
    std::string detail;
    for (auto [m, n] : cfg.ainfty_pairs) {
      ArcAlgebra A(m, n);
      ResolutionSet R(A, cfg.jobs);
      DgExt E(R);
      AinftyModel M = minimal_model(E, n * n + 3);
      for (const auto& [l, t] : M.tables)
        if (l > n * n + 2 && !t.empty())
          return std::make_pair(false, "m_" + std::to_string(l) + " != 0 at (" +
                                           std::to_string(m) + "," + std::to_string(n) + ")");
      if (n == 1) {
        for (const auto& [l, t] : M.tables)
          if (l >= 3 && !t.empty())
            return std::make_pair(false, "n=1 not formal at (" + std::to_string(m) +
                                             ",1): m_" + std::to_string(l) + " != 0");
      }
      if (n == 2) {
        if (!M.tables.count(3) || M.tables.at(3).empty())
          return std::make_pair(false, "no nonzero m_3 at (" + std::to_string(m) + ",2)");
        for (int l = 4; l <= 7; ++l)
          if (M.tables.count(l) && !M.tables.at(l).empty())
            return std::make_pair(false, "m_" + std::to_string(l) + " != 0 at (" +
                                             std::to_string(m) + ",2)");
        VanishingScan v = vanishing_scan(M);
        detail += "(" + std::to_string(m) + ",2): max arity " +
                  std::to_string(v.max_nonzero_arity) + ", " +
                  std::to_string(M.tables.at(3).size()) + " nonzero m_3; ";
      }
    }
    return std::make_pair(true, detail.empty() ? std::string("all pairs") : detail);
  }));

  rep.criteria.push_back(timed(9, "Stasheff identities (exact, total arity <= " +
                                      std::to_string(cfg.stasheff_arity) + ")", [&]() {
    auto [m, n] = cfg.stasheff_pair;
    ArcAlgebra A(m, n);
    ResolutionSet R(A, cfg.jobs);
    DgExt E(R);
    AinftyModel M = minimal_model(E, std::max(n * n + 3, cfg.stasheff_arity));
    StasheffReport sr = stasheff_check(M, cfg.stasheff_arity);
    if (!sr.ok())
      return std::make_pair(false, std::to_string(sr.violations.size()) +
                                       " violated tuples");
    return std::make_pair(true, std::to_string(sr.tuples_checked) + " tuples checked");
  }));

  rep.criteria.push_back(timed(10, "determinism (byte-identical serializations)", [&]() {
    auto snapshot = [&](int m, int n) {
      ArcAlgebra A(m, n);
      ResolutionSet R(A, cfg.jobs);
      DgExt E(R);
      SheltonOracle S(m, n);
      QuiverReport qr;
      Quiver q = quiver_presentation(E, &qr);
      std::string s;
      s += cartan_csv(A);
      s += kl_matrix_csv(m, n);
      for (int la = 0; la < A.num_weights(); ++la)
        s += resolve_json(A, R.of(la), true);
      s += ext_table_json(E, true, true);
      s += shelton_csv(S);
      s += emit_dot(A, q);
      s += quiver_json(A, q, qr);
      if (m + n <= 4) {
        AinftyModel M = minimal_model(E, n * n + 3);
        s += ainfty_json(M, true);
      }
      return s;
    };
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}}) {
      std::string a = snapshot(m, n);
      std::string b = snapshot(m, n);
      if (a != b)
        return std::make_pair(false, "outputs differ between runs at (" +
                                         std::to_string(m) + "," + std::to_string(n) + ")");
    }
    return std::make_pair(true, std::string("(2,1) and (2,2) snapshots identical"));
  }));

  return rep;
}

std::string SuiteReport::to_json() const {
  json j;
  json arr = json::array();
  for (const CriterionResult& c : criteria) {
    json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["details"] = c.details;
    e["seconds"] = c.seconds;
    arr.push_back(e);
  }
  j["criteria"] = arr;
  j["all_pass"] = all_pass();
  return j.dump(2) + "\n";
}

std::string SuiteReport::to_lines() const {
  std::string s;
  for (const CriterionResult& c : criteria) {
    char buf[32];
    snprintf(buf, sizeof(buf), "%6.2fs", c.seconds);
    s += "criterion " + std::to_string(c.id) + (c.id < 10 ? " " : "") + " " +
         (c.pass ? "PASS" : "FAIL") + " " + buf + "  " + c.name;
    if (!c.details.empty()) s += " -- " + c.details;
    s += "\n";
  }
  s += all_pass() ? "ALL CRITERIA PASS\n" : "FAILURES PRESENT\n";
  return s;
}

}  // namespace arcext
