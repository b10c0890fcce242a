// Hom/Ext solvers, endomorphism-ring analysis, free-summand stripping,
// isomorphism search and the seeded random-module sampler.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "homcat/grmodule.hpp"

namespace homcat {

namespace {

int common_horizon(const DegreewiseModule& M, const DegreewiseModule& N) {
  return std::min(M.horizon, N.horizon);
}

// Index layout for the per-degree matrices of a graded map M -> N.
struct MapLayout {
  struct Block {
    int degree;
    int rows, cols;  // N.dim(d) x M.dim(d)
    int offset;
  };
  std::vector<Block> blocks;
  std::map<int, int> block_of_degree;
  int total = 0;

  static MapLayout build(const DegreewiseModule& M, const DegreewiseModule& N) {
    MapLayout lay;
    if (M.is_zero() || N.is_zero()) return lay;
    for (int d = std::max(M.lo, N.lo); d <= std::min(M.hi(), N.hi()); ++d) {
      if (M.dim(d) == 0 || N.dim(d) == 0) continue;
      lay.block_of_degree[d] = static_cast<int>(lay.blocks.size());
      lay.blocks.push_back({d, N.dim(d), M.dim(d), lay.total});
      lay.total += N.dim(d) * M.dim(d);
    }
    return lay;
  }

  int index(int d, int r, int c) const {
    const Block& b = blocks[block_of_degree.at(d)];
    return b.offset + r * b.cols + c;
  }
  bool has(int d) const { return block_of_degree.count(d) > 0; }
};

GradedMap map_from_vector(const DegreewiseModule& M, const DegreewiseModule& N,
                          const MapLayout& lay, const std::vector<Rat>& v) {
  GradedMap f;
  f.source = M;
  f.target = N;
  for (const auto& b : lay.blocks) {
    RatMatrix m(b.rows, b.cols);
    bool nonzero = false;
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) {
        m.at(r, c) = v[b.offset + r * b.cols + c];
        if (m.at(r, c) != 0) nonzero = true;
      }
    if (nonzero) f.mats[b.degree] = std::move(m);
  }
  return f;
}

}  // namespace

Hom0Result hom0(const DegreewiseModule& M, const DegreewiseModule& N) {
  if (!(M.algebra == N.algebra)) throw input_error("hom0: algebra kind mismatch");
  Hom0Result out;
  const MapLayout lay = MapLayout::build(M, N);
  if (lay.total == 0) return out;
  const int horizon = common_horizon(M, N);

  std::vector<SparseVec> rows;
  const int dlo = std::min(M.lo, N.lo) - 1;
  const int dhi = std::max(M.hi(), N.hi());
  for (int d = dlo; d <= dhi; ++d) {
    if (horizon != kCompleteHorizon && d + 1 > horizon) break;
    if (M.dim(d) == 0 || N.dim(d + 1) == 0) continue;
    for (int j = 0; j < M.algebra.nvars; ++j) {
      const RatMatrix am = M.act(j, d);
      const RatMatrix an = N.act(j, d);
      for (int r = 0; r < N.dim(d + 1); ++r)
        for (int c = 0; c < M.dim(d); ++c) {
          std::map<int, Rat> coeffs;
          if (lay.has(d + 1)) {
            for (int m = 0; m < M.dim(d + 1); ++m)
              if (am.at(m, c) != 0) coeffs[lay.index(d + 1, r, m)] += am.at(m, c);
          }
          if (lay.has(d)) {
            for (int m = 0; m < N.dim(d); ++m)
              if (an.at(r, m) != 0) coeffs[lay.index(d, m, c)] -= an.at(r, m);
          }
          SparseVec row;
          for (auto& [idx, q] : coeffs)
            if (q != 0) row.nz.emplace_back(idx, std::move(q));
          if (!row.empty()) rows.push_back(std::move(row));
        }
    }
  }
  RatMatrix K = kernel_from_rows(rows, lay.total);
  out.dim = K.cols();
  out.basis.reserve(out.dim);
  for (int c = 0; c < K.cols(); ++c) out.basis.push_back(map_from_vector(M, N, lay, K.col(c)));
  return out;
}

namespace {

// Layout for extension cocycles: unknowns phi_j[d] with M.dim(d) > 0 and
// N.dim(d+1) > 0, ordered by degree then variable then row-major.
struct CocycleLayout {
  struct Block {
    int degree, var;
    int rows, cols;  // N.dim(d+1) x M.dim(d)
    int offset;
  };
  std::vector<Block> blocks;
  std::map<std::pair<int, int>, int> block_of;  // (degree, var) -> block
  int total = 0;

  static CocycleLayout build(const DegreewiseModule& M, const DegreewiseModule& N, int horizon) {
    CocycleLayout lay;
    if (M.is_zero() || N.is_zero()) return lay;
    for (int d = std::min(M.lo, N.lo - 1); d <= std::max(M.hi(), N.hi()); ++d) {
      if (horizon != kCompleteHorizon && d + 1 > horizon) break;
      if (M.dim(d) == 0 || N.dim(d + 1) == 0) continue;
      for (int j = 0; j < M.algebra.nvars; ++j) {
        lay.block_of[{d, j}] = static_cast<int>(lay.blocks.size());
        lay.blocks.push_back({d, j, N.dim(d + 1), M.dim(d), lay.total});
        lay.total += N.dim(d + 1) * M.dim(d);
      }
    }
    return lay;
  }

  bool has(int d) const { return block_of.count({d, 0}) > 0; }
  int index(int d, int j, int r, int c) const {
    const Block& b = blocks[block_of.at({d, j})];
    return b.offset + r * b.cols + c;
  }
};

struct Ext1Space {
  DegreewiseModule M, N;
  CocycleLayout lay;
  RatMatrix cocycles;          // lay.total x z kernel basis
  RowReducer coboundaries;     // span of coboundary vectors in phi-space
  int cob_rank = 0;

  Ext1Space(const DegreewiseModule& M_, const DegreewiseModule& N_)
      : M(M_), N(N_), coboundaries(0) {
    if (!(M.algebra == N.algebra)) throw input_error("ext1_0: algebra kind mismatch");
    const int horizon = common_horizon(M, N);
    lay = CocycleLayout::build(M, N, horizon);
    coboundaries = RowReducer(lay.total);
    if (lay.total == 0) {
      cocycles = RatMatrix(0, 0);
      return;
    }

    // Cocycle conditions: mixed relation residues vanish.
    std::vector<SparseVec> rows;
    for (const Relation& rel : relations(M.algebra)) {
      for (int d = std::min(M.lo, N.lo - 2); d <= std::max(M.hi(), N.hi()); ++d) {
        if (horizon != kCompleteHorizon && d + 2 > horizon) break;
        if (M.dim(d) == 0 || N.dim(d + 2) == 0) continue;
        for (int r = 0; r < N.dim(d + 2); ++r)
          for (int c = 0; c < M.dim(d); ++c) {
            std::map<int, Rat> coeffs;
            for (const RelationTerm& term : rel.terms) {
              // coef * ( A^N_first[d+1] * phi_second[d] + phi_first[d+1] * A^M_second[d] )
              if (lay.has(d)) {
                const RatMatrix an = N.act(term.first, d + 1);
                for (int m = 0; m < N.dim(d + 1); ++m)
                  if (an.at(r, m) != 0)
                    coeffs[lay.index(d, term.second, m, c)] += rat(term.coeff) * an.at(r, m);
              }
              if (lay.has(d + 1)) {
                const RatMatrix am = M.act(term.second, d);
                for (int m = 0; m < M.dim(d + 1); ++m)
                  if (am.at(m, c) != 0)
                    coeffs[lay.index(d + 1, term.first, r, m)] += rat(term.coeff) * am.at(m, c);
              }
            }
            SparseVec row;
            for (auto& [idx, q] : coeffs)
              if (q != 0) row.nz.emplace_back(idx, std::move(q));
            if (!row.empty()) rows.push_back(std::move(row));
          }
      }
    }
    cocycles = kernel_from_rows(rows, lay.total);

    // Coboundary span: phi_j[d] = A^N_j[d] psi_d - psi_{d+1} A^M_j[d] over all
    // degree-zero linear families psi.
    for (int e = std::max(M.lo, N.lo); e <= std::min(M.hi(), N.hi()); ++e) {
      if (M.dim(e) == 0 || N.dim(e) == 0) continue;
      for (int p = 0; p < N.dim(e); ++p)
        for (int q = 0; q < M.dim(e); ++q) {
          std::vector<Rat> v(lay.total);
          if (lay.has(e)) {
            for (int j = 0; j < M.algebra.nvars; ++j) {
              const RatMatrix an = N.act(j, e);
              for (int r = 0; r < N.dim(e + 1); ++r)
                if (an.at(r, p) != 0) v[lay.index(e, j, r, q)] += an.at(r, p);
            }
          }
          if (lay.has(e - 1)) {
            for (int j = 0; j < M.algebra.nvars; ++j) {
              const RatMatrix am = M.act(j, e - 1);
              for (int c = 0; c < M.dim(e - 1); ++c)
                if (am.at(q, c) != 0) v[lay.index(e - 1, j, p, c)] -= am.at(q, c);
            }
          }
          if (coboundaries.add_dense(v)) ++cob_rank;
        }
    }
  }

  ExtensionClass class_from_vector(const std::vector<Rat>& v) const {
    ExtensionClass e;
    e.source = M;
    e.target = N;
    for (const auto& b : lay.blocks) {
      auto it = e.cocycle.find(b.degree);
      if (it == e.cocycle.end()) {
        std::vector<RatMatrix> mats;
        for (int j = 0; j < M.algebra.nvars; ++j)
          mats.emplace_back(N.dim(b.degree + 1), M.dim(b.degree));
        it = e.cocycle.emplace(b.degree, std::move(mats)).first;
      }
      RatMatrix& m = it->second[b.var];
      for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) m.at(r, c) = v[b.offset + r * b.cols + c];
    }
    return e;
  }

  std::vector<Rat> vector_from_class(const ExtensionClass& e) const {
    std::vector<Rat> v(lay.total);
    for (const auto& b : lay.blocks) {
      const RatMatrix m = e.phi(b.var, b.degree);
      if (m.rows() != b.rows || m.cols() != b.cols)
        throw input_error("extension cocycle matrix has the wrong shape");
      for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) v[b.offset + r * b.cols + c] = m.at(r, c);
    }
    return v;
  }

  bool is_cocycle(const std::vector<Rat>& v) const {
    // Membership in the kernel span.
    RowReducer red(lay.total);
    for (int c = 0; c < cocycles.cols(); ++c) red.add_dense(cocycles.col(c));
    return red.contains(v);
  }
};

}  // namespace

Ext1Result ext1_0(const DegreewiseModule& M, const DegreewiseModule& N) {
  Ext1Result out;
  Ext1Space space(M, N);
  if (space.lay.total == 0) return out;
  out.dim = space.cocycles.cols() - space.cob_rank;
  // Quotient representatives: cocycle basis vectors that enlarge the
  // coboundary span.
  RowReducer red = space.coboundaries;
  for (int c = 0; c < space.cocycles.cols(); ++c) {
    std::vector<Rat> v = space.cocycles.col(c);
    if (red.add_dense(v)) out.basis.push_back(space.class_from_vector(v));
  }
  if (static_cast<int>(out.basis.size()) != out.dim)
    throw internal_error("ext1_0: coboundaries not contained in cocycles");
  return out;
}

bool extension_is_zero(const ExtensionClass& e) {
  Ext1Space space(e.source, e.target);
  if (space.lay.total == 0) return true;
  const std::vector<Rat> v = space.vector_from_class(e);
  if (!space.is_cocycle(v)) throw input_error("extension family violates the cocycle condition");
  return space.coboundaries.contains(v);
}

namespace {

// Multiplication table of End(M)_0 in a chosen hom basis.
struct EndAlgebra {
  std::vector<GradedMap> basis;
  int m = 0;
  std::vector<std::vector<std::vector<Rat>>> table;  // table[a][b] = coords of f_a ∘ f_b
  std::vector<Rat> id_coords;

  static std::vector<Rat> mult(const EndAlgebra& E, const std::vector<Rat>& x,
                               const std::vector<Rat>& y) {
    std::vector<Rat> out(E.m);
    for (int a = 0; a < E.m; ++a) {
      if (x[a] == 0) continue;
      for (int b = 0; b < E.m; ++b) {
        if (y[b] == 0) continue;
        const Rat c = x[a] * y[b];
        for (int e = 0; e < E.m; ++e)
          if (E.table[a][b][e] != 0) out[e] += c * E.table[a][b][e];
      }
    }
    return out;
  }
};

EndAlgebra end_algebra(const DegreewiseModule& M) {
  EndAlgebra E;
  Hom0Result H = hom0(M, M);
  E.basis = std::move(H.basis);
  E.m = H.dim;
  if (E.m == 0) return E;
  // Coordinate solver over the flattened basis.
  const size_t L = flatten_map(E.basis[0]).size();
  RatMatrix B(static_cast<int>(L), E.m);
  for (int a = 0; a < E.m; ++a) {
    std::vector<Rat> v = flatten_map(E.basis[a]);
    B.set_col(a, v);
  }
  Solver coords(B);
  auto coordinate = [&coords](const GradedMap& f) {
    auto x = coords.solve(flatten_map(f));
    if (!x) throw internal_error("endomorphism outside its own basis span");
    return *x;
  };
  E.table.assign(E.m, std::vector<std::vector<Rat>>(E.m));
  for (int a = 0; a < E.m; ++a)
    for (int b = 0; b < E.m; ++b) E.table[a][b] = coordinate(compose(E.basis[a], E.basis[b]));
  E.id_coords = coordinate(identity_map(M));
  return E;
}

// Minimal polynomial of x in the algebra; coefficients c with
// x^k = sum_{i<k} c_i x^i, returned as monic polynomial coefficient list
// p_0..p_k (p_k = 1).
std::vector<Rat> min_poly(const EndAlgebra& E, const std::vector<Rat>& x) {
  std::vector<std::vector<Rat>> powers;
  powers.push_back(E.id_coords);
  RatMatrix P(E.m, 1);
  P.set_col(0, E.id_coords);
  while (true) {
    std::vector<Rat> next = EndAlgebra::mult(E, powers.back(), x);
    Solver s(P);
    if (auto c = s.solve(next)) {
      std::vector<Rat> poly(powers.size() + 1);
      for (size_t i = 0; i < powers.size(); ++i) poly[i] = -(*c)[i];
      poly[powers.size()] = 1;
      return poly;
    }
    powers.push_back(next);
    P = P.hstack(RatMatrix(E.m, 1));
    P.set_col(static_cast<int>(powers.size()) - 1, next);
  }
}

// Rational roots of a rational-coefficient polynomial, via the integer
// rational-root sieve on the cleared form. Divisor enumeration falls back to a
// small candidate set if the endpoints do not factor quickly.
std::vector<Rat> rational_roots(const std::vector<Rat>& poly) {
  // Clear denominators.
  mpz_class lcm_den = 1;
  for (const Rat& q : poly) {
    mpz_class den = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  std::vector<mpz_class> ip;
  for (const Rat& q : poly) {
    Rat scaled = q * Rat(lcm_den);
    scaled.canonicalize();
    ip.push_back(scaled.get_num());
  }
  while (!ip.empty() && ip.back() == 0) ip.pop_back();
  if (ip.size() <= 1) return {};
  // x = 0 root?
  std::vector<Rat> roots;
  size_t low = 0;
  while (low < ip.size() && ip[low] == 0) ++low;
  if (low > 0) roots.push_back(rat(0));

  auto divisors_of = [](mpz_class n) {
    std::vector<mpz_class> divs;
    n = abs(n);
    if (n == 0) return divs;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class m = n;
    for (long p = 2; p <= 1000000; ++p) {
      if (m < static_cast<long>(p) * p) break;
      if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
          mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
          ++e;
        }
        factors.emplace_back(p, e);
      }
    }
    if (m > 1) {
      if (m > 1000000000000L) return divs;  // give up: caller uses fallback set
      factors.emplace_back(m, 1);
    }
    divs.push_back(1);
    for (const auto& [p, e] : factors) {
      const size_t base = divs.size();
      mpz_class pk = 1;
      for (int k = 1; k <= e; ++k) {
        pk *= p;
        for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      }
    }
    return divs;
  };

  auto eval_zero = [&ip](const Rat& x) {
    Rat acc = 0;
    for (size_t i = ip.size(); i-- > 0;) acc = acc * x + Rat(ip[i]);
    return acc == 0;
  };

  std::vector<Rat> candidates;
  const mpz_class a0 = ip[low], ak = ip.back();
  auto num_divs = divisors_of(a0);
  auto den_divs = divisors_of(ak);
  if (!num_divs.empty() && !den_divs.empty() && num_divs.size() * den_divs.size() <= 4096) {
    for (const mpz_class& p : num_divs)
      for (const mpz_class& q : den_divs) {
        Rat r(p, q);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
  } else {
    for (long v : {1, 2, 3, 4, 5, 6}) {
      candidates.push_back(rat(v));
      candidates.push_back(rat(-v));
      candidates.push_back(rat(1, v));
      candidates.push_back(rat(-1, v));
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Rat& a, const Rat& b) { return a < b; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rat& c : candidates)
    if (c != 0 && eval_zero(c)) roots.push_back(c);
  return roots;
}

// Kernel dimension of the stabilized power of a graded endomorphism; also
// reports per-degree kernel bases for the split.
std::map<int, RatMatrix> fitting_kernel(const DegreewiseModule& M, const GradedMap& g) {
  // Power the map until exponent >= total dimension.
  GradedMap p = g;
  long exp = 1;
  const long need = std::max<long>(1, M.total_dim());
  while (exp < need) {
    p = compose(p, p);
    exp *= 2;
  }
  std::map<int, RatMatrix> kernels;
  for (int d = M.lo; d <= M.hi(); ++d) {
    if (M.dim(d) == 0) continue;
    auto rk = rank_kernel(p.at(d));
    if (rk.kernel.dim() > 0) kernels[d] = rk.kernel.basis;
  }
  return kernels;
}

}  // namespace

LocalReport end0_is_local(const DegreewiseModule& M) {
  if (M.is_zero()) throw input_error("end0_is_local: zero module");
  LocalReport rep;
  EndAlgebra E = end_algebra(M);
  rep.end_dim = E.m;

  // Jacobson radical as the kernel of the trace form a |-> (b |-> tr L_{ab});
  // exact in characteristic zero.
  std::vector<Rat> trace_of_basis(E.m);
  for (int e = 0; e < E.m; ++e) {
    Rat t = 0;
    for (int a = 0; a < E.m; ++a) t += E.table[e][a][a];
    trace_of_basis[e] = t;
  }
  RatMatrix gram(E.m, E.m);
  for (int a = 0; a < E.m; ++a)
    for (int b = 0; b < E.m; ++b) {
      Rat t = 0;
      for (int e = 0; e < E.m; ++e)
        if (E.table[a][b][e] != 0) t += E.table[a][b][e] * trace_of_basis[e];
      gram.at(a, b) = t;
    }
  rep.radical_dim = rank_kernel(gram).kernel.dim();
  rep.residue_dim = E.m - rep.radical_dim;

  if (rep.residue_dim == 1) {
    rep.local = true;
    rep.note = "local with residue division algebra of Q-dimension 1";
    return rep;
  }

  // Search for a Fitting splitting along rational eigenvalues of a battery of
  // endomorphisms. A found splitting certifies decomposability; the converse
  // direction is exact whenever the residue algebra splits over Q.
  std::vector<std::vector<Rat>> battery;
  for (int a = 0; a < E.m; ++a) {
    std::vector<Rat> x(E.m);
    x[a] = 1;
    battery.push_back(std::move(x));
  }
  for (int a = 0; a < E.m && static_cast<int>(battery.size()) < 300; ++a)
    for (int b = a + 1; b < E.m; ++b) {
      std::vector<Rat> x(E.m);
      x[a] = 1;
      x[b] = 1;
      battery.push_back(x);
      x[b] = -1;
      battery.push_back(std::move(x));
    }
  for (int a = 0; a < E.m && static_cast<int>(battery.size()) < 360; ++a)
    for (int b = 0; b < E.m; ++b) battery.push_back(E.table[a][b]);
  Rng rng(0x10CA15EEDULL);
  for (int t = 0; t < 48; ++t) {
    std::vector<Rat> x(E.m);
    for (int a = 0; a < E.m; ++a) x[a] = rng.small_int(3);
    battery.push_back(std::move(x));
  }

  const long total = M.total_dim();
  for (const auto& x : battery) {
    const std::vector<Rat> poly = min_poly(E, x);
    for (const Rat& lambda : rational_roots(poly)) {
      GradedMap g;
      g.source = M;
      g.target = M;
      for (int a = 0; a < E.m; ++a)
        if (x[a] != 0) g = map_sum(g, map_scale(E.basis[a], x[a]));
      g = map_sum(g, map_scale(identity_map(M), -lambda));
      auto kernels = fitting_kernel(M, g);
      long kdim = 0;
      for (const auto& [d, k] : kernels) kdim += k.cols();
      if (kdim > 0 && kdim < total) {
        rep.local = false;
        std::ostringstream os;
        os << "split by Fitting decomposition at eigenvalue " << format_rat(lambda);
        rep.note = os.str();
        return rep;
      }
    }
  }

  rep.local = true;
  std::ostringstream os;
  os << "local with residue division algebra of Q-dimension " << rep.residue_dim
     << " (no splitting found by the eigenvalue battery)";
  rep.note = os.str();
  return rep;
}

StripResult strip_free_summands(const DegreewiseModule& M) {
  if (M.algebra.kind != Kind::exterior)
    throw input_error("strip_free_summands requires exterior kind");
  StripResult out;
  out.core = trimmed(M);
  bool changed = true;
  while (changed && !out.core.is_zero()) {
    changed = false;
    // Generator degrees: where the piece exceeds the radical.
    std::vector<int> candidates;
    for (int d = out.core.lo; d <= out.core.hi(); ++d) {
      if (out.core.dim(d) == 0) continue;
      RowReducer red(out.core.dim(d));
      int jm = 0;
      for (int j = 0; j < out.core.algebra.nvars; ++j) {
        const RatMatrix a = out.core.act(j, d - 1);
        for (int c = 0; c < a.cols(); ++c)
          if (red.add_dense(a.col(c))) ++jm;
      }
      if (jm < out.core.dim(d)) candidates.push_back(d);
    }
    for (int g : candidates) {
      const DegreewiseModule F = construct_free(out.core.algebra, {g});
      Hom0Result P = hom0(out.core, F);
      if (P.dim == 0) continue;
      Hom0Result I = hom0(F, out.core);
      if (I.dim == 0) continue;
      bool split = false;
      for (const GradedMap& p : P.basis) {
        for (const GradedMap& i : I.basis) {
          const GradedMap comp = compose(p, i);
          const Rat scalar = comp.at(g).at(0, 0);
          if (scalar == 0) continue;
          // p/scalar is a retraction of i; the complement is ker p.
          std::map<int, RatMatrix> kernels;
          for (int d = out.core.lo; d <= out.core.hi(); ++d) {
            if (out.core.dim(d) == 0) continue;
            auto rk = rank_kernel(p.at(d));
            if (rk.kernel.dim() > 0) kernels[d] = rk.kernel.basis;
          }
          out.core = submodule_from_bases(out.core, kernels);
          out.free_part.push_back(g);
          split = true;
          break;
        }
        if (split) break;
      }
      if (split) {
        changed = true;
        break;
      }
    }
  }
  std::sort(out.free_part.begin(), out.free_part.end());
  return out;
}

bool is_isomorphic_0(const DegreewiseModule& M0, const DegreewiseModule& N0) {
  if (!(M0.algebra == N0.algebra)) throw input_error("is_isomorphic_0: algebra kind mismatch");
  const DegreewiseModule M = trimmed(M0), N = trimmed(N0);
  if (M.is_zero() && N.is_zero()) return true;
  if (M.is_zero() != N.is_zero()) return false;
  if (M.lo != N.lo || M.dims != N.dims) return false;

  Hom0Result H = hom0(M, N);
  const int h = H.dim;
  if (h == 0) return false;

  std::vector<int> degrees;
  for (int d = M.lo; d <= M.hi(); ++d)
    if (M.dim(d) > 0) degrees.push_back(d);

  auto invertible = [&](const std::vector<Rat>& coeff) {
    for (int d : degrees) {
      RatMatrix f(M.dim(d), M.dim(d));
      for (int a = 0; a < h; ++a) {
        if (coeff[a] == 0) continue;
        const RatMatrix m = H.basis[a].at(d);
        for (int r = 0; r < m.rows(); ++r)
          for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) f.at(r, c) += coeff[a] * m.at(r, c);
      }
      if (rank_of(f) != M.dim(d)) return false;
    }
    return true;
  };

  // Seeded random phase.
  Rng rng(0xD15C0C0DEULL);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Rat> coeff(h);
    bool all_zero = true;
    for (int a = 0; a < h; ++a) {
      coeff[a] = rng.small_int(3 + trial / 8);
      if (coeff[a] != 0) all_zero = false;
    }
    if (all_zero) continue;
    if (invertible(coeff)) return true;
  }

  // Derandomized grid: the per-degree determinant product is a polynomial of
  // total degree at most D; when it is not identically zero it is nonzero
  // somewhere on a grid with more than D values per coordinate.
  const long D = M.total_dim();
  std::vector<Rat> grid_values;
  grid_values.push_back(rat(0));
  for (long v = 1; static_cast<long>(grid_values.size()) < D + 1; ++v) {
    grid_values.push_back(rat(v));
    if (static_cast<long>(grid_values.size()) < D + 1) grid_values.push_back(rat(-v));
  }
  double log_points = h * std::log2(static_cast<double>(grid_values.size()));
  if (log_points <= std::log2(200000.0)) {
    std::vector<size_t> odo(h, 0);
    while (true) {
      std::vector<Rat> coeff(h);
      bool all_zero = true;
      for (int a = 0; a < h; ++a) {
        coeff[a] = grid_values[odo[a]];
        if (coeff[a] != 0) all_zero = false;
      }
      if (!all_zero && invertible(coeff)) return true;
      int pos = 0;
      while (pos < h) {
        if (++odo[pos] < grid_values.size()) break;
        odo[pos] = 0;
        ++pos;
      }
      if (pos == h) break;
    }
    return false;  // certified: determinant polynomial vanishes identically
  }

  // Large hom space: extended random phase; a miss reports non-isomorphic.
  for (int trial = 0; trial < 512; ++trial) {
    std::vector<Rat> coeff(h);
    bool all_zero = true;
    for (int a = 0; a < h; ++a) {
      coeff[a] = rng.small_int(2 * D + 3);
      if (coeff[a] != 0) all_zero = false;
    }
    if (!all_zero && invertible(coeff)) return true;
  }
  return false;
}

DegreewiseModule random_module(const AlgebraKind& a, const std::map<int, int>& profile,
                               std::uint64_t seed) {
  Rng rng(seed);
  std::map<int, int> dims;
  for (const auto& [d, n] : profile)
    if (n > 0) dims[d] = n;
  ModuleBuilder b(a, a.kind == Kind::symmetric && !dims.empty() ? dims.rbegin()->first
                                                                : kCompleteHorizon);
  for (const auto& [d, n] : dims) b.set_dim(d, n);
  if (dims.empty()) return b.finalize();

  const int dlo = dims.begin()->first;
  const int dhi = dims.rbegin()->first;
  auto dim_at = [&dims](int d) {
    auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
  };

  std::map<int, std::vector<RatMatrix>> chosen;  // degree -> per-var maps out of it
  for (int d = dlo; d < dhi; ++d) {
    const int cols = dim_at(d), rows = dim_at(d + 1);
    std::vector<RatMatrix> mats(a.nvars, RatMatrix(rows, cols));
    if (cols == 0 || rows == 0) {
      chosen[d] = std::move(mats);
      continue;
    }
    const int prev_cols = dim_at(d - 1);
    const bool constrained = prev_cols > 0 && chosen.count(d - 1) > 0;
    const int unknowns = a.nvars * rows * cols;
    auto unknown_index = [&](int j, int r, int c) { return (j * rows + r) * cols + c; };
    if (!constrained) {
      for (int j = 0; j < a.nvars; ++j)
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c) mats[j].at(r, c) = rng.small_int(2);
    } else {
      // Relation residues landing in degree d+1 are linear in this stair.
      std::vector<SparseVec> eq;
      const auto& prev = chosen[d - 1];
      for (const Relation& rel : relations(a)) {
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < prev_cols; ++c) {
            std::map<int, Rat> coeffs;
            for (const RelationTerm& term : rel.terms) {
              const RatMatrix& inner = prev[term.second];
              for (int m = 0; m < cols; ++m)
                if (inner.at(m, c) != 0)
                  coeffs[unknown_index(term.first, r, m)] += rat(term.coeff) * inner.at(m, c);
            }
            SparseVec row;
            for (auto& [idx, q] : coeffs)
              if (q != 0) row.nz.emplace_back(idx, std::move(q));
            if (!row.empty()) eq.push_back(std::move(row));
          }
      }
      RatMatrix K = kernel_from_rows(eq, unknowns);
      if (K.cols() > 0) {
        std::vector<Rat> combo(K.cols());
        for (int k = 0; k < K.cols(); ++k) combo[k] = rng.small_int(2);
        std::vector<Rat> v = K.apply(combo);
        for (int j = 0; j < a.nvars; ++j)
          for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) mats[j].at(r, c) = v[unknown_index(j, r, c)];
      }
      // Kernel empty: every variable acts by zero on this stair (still valid).
    }
    chosen[d] = mats;
    for (int j = 0; j < a.nvars; ++j) b.set_action(j, d, mats[j]);
  }
  DegreewiseModule m = b.finalize();
  return m;
}

}  // namespace homcat
