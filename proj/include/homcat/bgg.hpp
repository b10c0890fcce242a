#pragma once

#include <optional>

#include "homcat/stablecat.hpp"

namespace homcat {

/// Homology dimensions of the left-multiplication complex of a degree-one
/// element: ... M_{i-1} -> M_i -> M_{i+1} -> ...
struct LxiHomology {
  std::vector<Rat> xi;      // the sampled point, length nvars, nonzero
  std::map<int, long> dims; // position i -> dim H_i
};

LxiHomology lxi_homology(const DegreewiseModule& M, const std::vector<Rat>& xi);

enum class NiceVerdict { nice_certified_randomized, not_nice, inconclusive };

struct NiceResult {
  NiceVerdict verdict = NiceVerdict::inconclusive;
  std::optional<std::vector<Rat>> witness;        // failing point, when not nice
  std::optional<int> concentration;               // common homology position, when one exists
};

/// Samples the coordinate points, all pairwise coordinate sums, and `trials`
/// random nonzero points; nice means homology concentrated in position 0 at
/// every sample. The verdict name is honest about the randomized gap.
NiceResult is_nice(const DegreewiseModule& M, int trials, std::uint64_t seed);

/// The twisted complex with terms O(i) ⊗ M_i and differential carrying the
/// variable actions as linear-form coefficient matrices.
struct PhiComplex {
  struct Term {
    int position;       // cohomological position = twist
    long multiplicity;  // dim M_i
  };
  std::vector<Term> terms;
  std::map<int, std::vector<RatMatrix>> coeff;  // position i -> per-variable C_j = A_j[i]
};

PhiComplex phi_complex(const DegreewiseModule& M);

/// The module whose image under the twisted-complex functor is the twist-t
/// line bundle: the (-t)-th syzygy power of the simple in degree t.
DegreewiseModule sheaf_module_for_twist(const AlgebraKind& a, int t);

struct CohomologyTable {
  int n = 0;  // dimension of the ambient projective space
  int dmin = 0, dmax = 0, qmin = 0, qmax = 0;
  std::map<std::pair<int, int>, long> h;  // (q, d) -> dimension

  long at(int q, int d) const {
    auto it = h.find({q, d});
    return it == h.end() ? 0 : it->second;
  }
};

/// Hypercohomology dimensions computed inside the stable category; the Euler
/// characteristic identity is verified for every column and a mismatch is an
/// internal error, never valid output.
CohomologyTable cohomology_table(const DegreewiseModule& M, int dmin, int dmax, int qmin,
                                 int qmax);

/// Generic fiber dimension of the degree-zero homology of the multiplication
/// complex; constant across samples for nice modules. Throws property_error
/// when samples disagree.
long sheaf_rank(const DegreewiseModule& M, int trials, std::uint64_t seed);

struct RigidityReport {
  long end_stable_dim = 0;
  std::map<int, long> ext_self;  // i -> dim of the i-th stable self-extension space
  bool indecomposable = false;
  int residue_dim = 0;
};

RigidityReport rigidity_report(const DegreewiseModule& M, int ext_bound);

enum class Thm15Verdict { verified, hypothesis_not_met, counterexample };

struct Thm15Result {
  Thm15Verdict verdict = Thm15Verdict::hypothesis_not_met;
  std::string reason;
  long end_stable_dim = 0;
  long ext1 = 0;
  int residue_dim = 0;
  std::optional<int> concentration;  // homology position of the sheaf (0 for honest sheaves)
};

/// Rigid indecomposable sheaf modules must have one-dimensional stable
/// endomorphisms. Accepts modules whose multiplication-complex homology is
/// concentrated in a single (possibly nonzero) position: those present shifted
/// sheaves, and the statement is shift-invariant.
Thm15Result theorem15_check(const DegreewiseModule& M);

struct ArVanishing {
  int i = 0;
  long stable_dim = 0;
  bool pass = false;
};

/// Stable Hom from translate powers of B to C; the expected verdict for sheaf
/// modules is all-zero. Requires n >= 2.
std::vector<ArVanishing> ar_vanishing_check(const DegreewiseModule& B, const DegreewiseModule& C,
                                            int imax);

struct ScanResult {
  bool same_component = false;
  int tau_power = -1;  // 0 when stably isomorphic, i when tau^i B ~ C
};

/// Translate-orbit scan; requires n >= 2 and nice indecomposable inputs.
ScanResult component_scan(const DegreewiseModule& B, const DegreewiseModule& C, int imax);

}  // namespace homcat
