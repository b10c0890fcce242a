#pragma once

#include "homcat/homres.hpp"

namespace homcat {

struct StableHomReport {
  long hom_dim = 0;
  long proj_factoring_dim = 0;
  long stable_dim = 0;
};

struct InjEnvelope {
  DegreewiseModule I;  // free (= injective) envelope
  GradedMap iota;      // embedding M -> I
};

/// Injective envelope over the self-injective exterior algebra: the dual of a
/// projective cover of the dual.
InjEnvelope injective_envelope(const DegreewiseModule& M);

/// Hom(M, N)_0 together with the subspace of maps factoring through a free
/// module (those extending along the injective envelope embedding).
StableHomReport stable_hom0(const DegreewiseModule& M, const DegreewiseModule& N);

/// Syzygy powers of the stripped core; negative powers are cosyzygies.
/// omega_power(M, 0) is the core itself.
DegreewiseModule omega_power(const DegreewiseModule& M, int i);

/// The translate Omega^{2i} M (ni + i) used on sheaf-side modules; i >= 1.
DegreewiseModule tau(const DegreewiseModule& M, int i);

struct SerreCheck {
  long lhs_dim = 0;
  long rhs_dim = 0;
  bool equal = false;
};

/// Dimension-level check of stable Serre duality:
///   dim Hom(X, Omega^{-m} Y)_0 vs dim Hom(Y, Omega^{m+1} X(n+1))_0.
SerreCheck serre_check(const DegreewiseModule& X, const DegreewiseModule& Y, int m);

/// Isomorphism of the stripped cores.
bool is_stably_isomorphic(const DegreewiseModule& M, const DegreewiseModule& N);

}  // namespace homcat
