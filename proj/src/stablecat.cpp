#include "homcat/stablecat.hpp"

namespace homcat {

InjEnvelope injective_envelope(const DegreewiseModule& M) {
  if (M.algebra.kind != Kind::exterior) throw input_error("injective_envelope requires exterior kind");
  InjEnvelope out;
  const DegreewiseModule dual = graded_dual(M);
  const Cover cover = projective_cover(dual);
  out.I = graded_dual(cover.P);
  out.iota.source = M;
  out.iota.target = out.I;
  if (M.is_zero()) return out;
  for (int d = M.lo; d <= M.hi(); ++d) {
    if (M.dim(d) == 0 || out.I.dim(d) == 0) continue;
    out.iota.mats[d] = cover.p.at(-d).transposed();
  }
  return out;
}

StableHomReport stable_hom0(const DegreewiseModule& M, const DegreewiseModule& N) {
  if (M.algebra.kind != Kind::exterior || N.algebra.kind != Kind::exterior)
    throw input_error("stable_hom0 requires exterior kind");
  StableHomReport rep;
  Hom0Result H = hom0(M, N);
  rep.hom_dim = H.dim;
  if (H.dim == 0) return rep;

  const InjEnvelope env = injective_envelope(M);
  Hom0Result G = hom0(env.I, N);
  if (G.dim == 0) {
    rep.stable_dim = rep.hom_dim;
    return rep;
  }
  // Rank of { g ∘ iota : g in Hom(I, N)_0 } inside Hom(M, N)_0.
  const size_t L = flatten_map(H.basis[0]).size();
  RowReducer red(static_cast<int>(L));
  long rank = 0;
  for (const GradedMap& g : G.basis) {
    const GradedMap f = compose(g, env.iota);
    if (red.add_dense(flatten_map(f))) ++rank;
  }
  rep.proj_factoring_dim = rank;
  rep.stable_dim = rep.hom_dim - rank;
  return rep;
}

DegreewiseModule omega_power(const DegreewiseModule& M, int i) {
  DegreewiseModule core = strip_free_summands(M).core;
  for (int k = 0; k < i; ++k) core = syzygy(core);
  for (int k = 0; k > i; --k) core = cosyzygy(core);
  return core;
}

DegreewiseModule tau(const DegreewiseModule& M, int i) {
  if (M.algebra.kind != Kind::exterior) throw input_error("tau requires exterior kind");
  if (i < 1) throw input_error("tau requires a positive power");
  const int n = M.algebra.n();
  return shift(omega_power(M, 2 * i), n * i + i);
}

SerreCheck serre_check(const DegreewiseModule& X, const DegreewiseModule& Y, int m) {
  SerreCheck out;
  out.lhs_dim = stable_hom0(X, omega_power(Y, -m)).stable_dim;
  out.rhs_dim =
      stable_hom0(Y, shift(omega_power(X, m + 1), X.algebra.nvars)).stable_dim;
  out.equal = out.lhs_dim == out.rhs_dim;
  return out;
}

bool is_stably_isomorphic(const DegreewiseModule& M, const DegreewiseModule& N) {
  if (M.algebra.kind != Kind::exterior || N.algebra.kind != Kind::exterior)
    throw input_error("is_stably_isomorphic requires exterior kind");
  return is_isomorphic_0(strip_free_summands(M).core, strip_free_summands(N).core);
}

}  // namespace homcat
