#include "homcat/homres.hpp"

#include <algorithm>
#include <sstream>

namespace homcat {

namespace {

// Columns of M_d spanning a complement of J*M_d, i.e. generator
// representatives, as indices into the standard basis.
std::map<int, std::vector<int>> generator_positions(const DegreewiseModule& M) {
  std::map<int, std::vector<int>> gens;
  if (M.is_zero()) return gens;
  for (int d = M.lo; d <= M.hi(); ++d) {
    if (M.dim(d) == 0) continue;
    RatMatrix radical(M.dim(d), 0);
    for (int j = 0; j < M.algebra.nvars; ++j) radical = radical.hstack(M.act(j, d - 1));
    std::vector<int> kept = extend_span(column_space(radical), RatMatrix::identity(M.dim(d)));
    if (!kept.empty()) gens[d] = kept;
  }
  return gens;
}

}  // namespace

Cover projective_cover(const DegreewiseModule& M) {
  Cover out;
  const auto gens = generator_positions(M);
  std::vector<int> degrees;
  for (const auto& [d, idx] : gens)
    for (size_t k = 0; k < idx.size(); ++k) degrees.push_back(d);
  const FreeLayout layout(M.algebra, degrees, M.horizon);
  out.P = layout.build();
  out.gen_degrees = layout.gens();
  out.p.source = out.P;
  out.p.target = M;
  if (out.P.is_zero()) return out;

  // Generator images: the chosen complement representatives, in layout order.
  // FreeLayout sorts generator degrees; generator s is the s-th in that order,
  // which matches iterating the degree map in ascending order.
  std::map<int, RatMatrix> images_by_gen;  // generator index -> column in M_{g}
  {
    int s = 0;
    for (const auto& [d, idx] : gens)
      for (int col : idx) {
        RatMatrix v(M.dim(d), 1);
        v.at(col, 0) = 1;
        images_by_gen[s++] = std::move(v);
      }
  }

  // Extend degree by degree: p_{d} is determined on generator columns by the
  // chosen images and on x_j-multiples by the intertwining relation; the two
  // kinds of columns jointly span each free piece.
  for (int d = out.P.lo; d <= out.P.hi(); ++d) {
    if (out.P.dim(d) == 0) continue;
    // Assemble the spanning system S (columns of P_d expressed through lower
    // data) and its target values T.
    RatMatrix S(out.P.dim(d), 0), T(M.dim(d), 0);
    for (int j = 0; j < M.algebra.nvars; ++j) {
      const RatMatrix ap = out.P.act(j, d - 1);
      if (ap.cols() == 0) continue;
      S = S.hstack(ap);
      T = T.hstack(M.act(j, d - 1) * out.p.at(d - 1));
    }
    int s = 0;
    for (const auto& [g, idx] : gens) {
      for (size_t k = 0; k < idx.size(); ++k, ++s) {
        if (g != d) continue;
        RatMatrix e(out.P.dim(d), 1);
        e.at(layout.gen_column(s), 0) = 1;
        S = S.hstack(e);
        T = T.hstack(images_by_gen.at(s));
      }
    }
    // Solve X * S = T  <=>  S^T X^T = T^T.
    Solver solver(S.transposed());
    auto Xt = solver.solve_many(T.transposed());
    if (!Xt) throw internal_error("projective cover extension is inconsistent");
    RatMatrix X = Xt->transposed();
    if (!X.is_zero() || M.dim(d) > 0) out.p.mats[d] = std::move(X);
  }
  return out;
}

Resolution resolve(const DegreewiseModule& M, int length) {
  Resolution res;
  res.betti.bound = length;
  DegreewiseModule current = trimmed(M);
  for (int i = 0; i <= length; ++i) {
    ResolutionStep step;
    step.cover = projective_cover(current);
    for (size_t s = 0; s < step.cover.gen_degrees.size(); ++s)
      ++res.betti.beta[{i, step.cover.gen_degrees[s]}];
    if (step.cover.P.is_zero()) {
      step.next = step.cover.P;
      res.steps.push_back(std::move(step));
      break;
    }
    // Kernel of p, degreewise.
    const DegreewiseModule& P = step.cover.P;
    for (int d = P.lo; d <= P.hi(); ++d) {
      if (P.dim(d) == 0) continue;
      auto rk = rank_kernel(step.cover.p.at(d));
      if (rk.kernel.dim() > 0) step.kernel_bases[d] = rk.kernel.basis;
    }
    step.next = submodule_from_bases(P, step.kernel_bases);
    DegreewiseModule next = step.next;
    res.steps.push_back(std::move(step));
    current = std::move(next);
    if (current.is_zero() && i + 1 <= length) {
      // Resolution has terminated; remaining Betti numbers vanish.
      break;
    }
  }
  return res;
}

DegreewiseModule syzygy(const DegreewiseModule& M) {
  Resolution res = resolve(M, 0);
  return res.steps.empty() ? zero_module(M.algebra, M.horizon) : res.steps[0].next;
}

DegreewiseModule cosyzygy(const DegreewiseModule& M) {
  if (M.algebra.kind != Kind::exterior) throw input_error("cosyzygy requires exterior kind");
  return graded_dual(syzygy(graded_dual(M)));
}

BettiTable betti_table(const DegreewiseModule& M, int bound) {
  if (bound < 0) throw input_error("betti_table: bound must be nonnegative");
  return resolve(M, bound).betti;
}

LinearVerdict is_linear(const DegreewiseModule& M, int bound) {
  if (bound < 1) throw input_error("is_linear: bound must be at least 1");
  const auto gens = generator_positions(M);
  if (gens.size() > 1) {
    std::ostringstream os;
    os << "module is generated in degrees";
    for (const auto& [d, idx] : gens) os << " " << d;
    throw input_error(os.str());
  }
  LinearVerdict v;
  if (gens.empty()) {
    v.linear = true;  // zero module
    return v;
  }
  const int g = gens.begin()->first;
  const BettiTable t = betti_table(M, bound);
  for (int i = 0; i <= bound; ++i)
    for (const auto& [ij, count] : t.beta) {
      if (ij.first != i || count == 0) continue;
      if (ij.second != i + g) {
        v.linear = false;
        v.witness = std::make_pair(ij.first, ij.second);
        return v;
      }
    }
  v.linear = true;
  return v;
}

std::string render_betti(const BettiTable& t) {
  // Rows are j - i ("regularity strands"), columns are i.
  int row_min = 0, row_max = 0, col_max = t.bound;
  bool any = false;
  for (const auto& [ij, count] : t.beta) {
    if (count == 0) continue;
    const int strand = ij.second - ij.first;
    if (!any) {
      row_min = row_max = strand;
      any = true;
    }
    row_min = std::min(row_min, strand);
    row_max = std::max(row_max, strand);
  }
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= col_max; ++i) os << " " << i << "\t";
  os << "\n";
  for (int s = row_min; s <= row_max; ++s) {
    os << s << ":\t";
    for (int i = 0; i <= col_max; ++i) {
      const long b = t.at(i, i + s);
      if (b == 0)
        os << " .\t";
      else
        os << " " << b << "\t";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace homcat
