#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcat/algebra.hpp"
#include "homcat/qlinalg.hpp"

namespace homcat {

/// Degree horizon marker: the module's data is valid in every degree (finite
/// modules, exterior and twostep kinds). Symmetric-kind windows carry the
/// degree up to which their pieces are certified.
inline constexpr int kCompleteHorizon = std::numeric_limits<int>::max();

/// A graded module given degreewise: finite-dimensional pieces and, for each
/// algebra generator, the action maps between consecutive pieces.
struct DegreewiseModule {
  AlgebraKind algebra;
  int lo = 0;              // degree of dims[0]; irrelevant when dims is empty
  std::vector<int> dims;   // piece dimensions on [lo, lo+size-1]; empty = zero module
  // action[j][t] : piece (lo+t) -> piece (lo+t+1), shape dims[t+1] x dims[t]
  std::vector<std::vector<RatMatrix>> action;
  int horizon = kCompleteHorizon;

  bool is_zero() const { return dims.empty(); }
  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  bool windowed() const { return horizon != kCompleteHorizon; }

  int dim(int d) const {
    if (dims.empty() || d < lo || d > hi()) return 0;
    return dims[static_cast<size_t>(d - lo)];
  }
  long total_dim() const {
    long t = 0;
    for (int d : dims) t += d;
    return t;
  }
  /// Action matrix of variable j from degree d to d+1 (zero-shaped when out of
  /// the stored range).
  RatMatrix act(int j, int d) const;
};

/// Convenience builder: collect dims/actions by degree, then finalize into a
/// shape-checked, trimmed module.
class ModuleBuilder {
 public:
  ModuleBuilder(const AlgebraKind& a, int horizon = kCompleteHorizon) : algebra_(a), horizon_(horizon) {}
  void set_dim(int degree, int dim);
  void set_action(int var, int degree, RatMatrix m);
  DegreewiseModule finalize() const;

 private:
  AlgebraKind algebra_;
  int horizon_;
  std::map<int, int> dims_;
  std::map<std::pair<int, int>, RatMatrix> action_;
};

/// Drops zero pieces at the window edges (keeps symmetric horizons intact).
DegreewiseModule trimmed(DegreewiseModule m);

/// The zero module over the given algebra.
DegreewiseModule zero_module(const AlgebraKind& a, int horizon = kCompleteHorizon);

struct Violation {
  std::string relation;
  int var_a = 0, var_b = 0;
  int degree = 0;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks shapes and all relation residues. Reports, never throws.
ValidationReport validate(const DegreewiseModule& m);

/// Free module layout: which (generator, monomial) pair sits in which column
/// of each graded piece. Kept separate so resolution code can address
/// generator columns and monomial rows deterministically.
class FreeLayout {
 public:
  FreeLayout(const AlgebraKind& a, std::vector<int> gen_degrees, int horizon = kCompleteHorizon);

  const AlgebraKind& algebra() const { return algebra_; }
  const std::vector<int>& gens() const { return gens_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }  // top stored degree (horizon-capped for symmetric)
  int horizon() const { return horizon_; }
  int piece_dim(int d) const;
  /// Column of generator s inside piece gens()[s] (the empty monomial).
  int gen_column(int s) const;
  /// Column of (generator s, monomial m) in piece d; monomial given as index
  /// into the degree-(d - gen_degree) monomial list.
  int column(int d, int s, int mono_index) const;
  /// Index of a monomial in the canonical list for its degree.
  int exterior_mono_index(int d_total, int s, const std::vector<int>& mono) const;

  DegreewiseModule build() const;

 private:
  AlgebraKind algebra_;
  std::vector<int> gens_;
  int lo_ = 0, hi_ = -1, horizon_ = kCompleteHorizon;
};

/// Free module on the given generator degrees. Symmetric kind requires a
/// finite horizon.
DegreewiseModule construct_free(const AlgebraKind& a, const std::vector<int>& gen_degrees,
                                int horizon = kCompleteHorizon);

/// One-dimensional piece in degree d, all actions zero.
DegreewiseModule construct_simple(const AlgebraKind& a, int d);

/// Graded shift: result piece in degree d is the source piece in degree d+i.
DegreewiseModule shift(const DegreewiseModule& m, int i);

/// Truncation: pieces below k dropped.
DegreewiseModule truncate(const DegreewiseModule& m, int k);

/// Shrinks a windowed module's data horizon to new_hi, dropping pieces above.
DegreewiseModule clip_window(const DegreewiseModule& m, int new_hi);

DegreewiseModule direct_sum(const DegreewiseModule& a, const DegreewiseModule& b);

/// Vector-space dual with reversed grading; exterior kind only.
DegreewiseModule graded_dual(const DegreewiseModule& m);

/// Degree-zero homomorphism between modules of the same kind.
struct GradedMap {
  DegreewiseModule source, target;
  std::map<int, RatMatrix> mats;  // degree -> target.dim(d) x source.dim(d); absent = zero

  RatMatrix at(int d) const;
  bool is_zero() const;
};

GradedMap compose(const GradedMap& second, const GradedMap& first);  // second ∘ first
GradedMap map_sum(const GradedMap& f, const GradedMap& g);
GradedMap map_scale(const GradedMap& f, const Rat& c);
GradedMap identity_map(const DegreewiseModule& m);
/// Exact check of the intertwining property.
bool is_module_map(const GradedMap& f);

struct Hom0Result {
  int dim = 0;
  std::vector<GradedMap> basis;
};

/// Basis of Hom(M, N)_0, the solution space of the intertwining system.
Hom0Result hom0(const DegreewiseModule& M, const DegreewiseModule& N);

/// Cocycle family for a degree-zero extension 0 -> N -> E -> M -> 0; the
/// block action on E is [[A^N, phi],[0, A^M]].
struct ExtensionClass {
  DegreewiseModule source;  // M
  DegreewiseModule target;  // N
  // cocycle[d][j] : source piece d -> target piece d+1
  std::map<int, std::vector<RatMatrix>> cocycle;

  RatMatrix phi(int j, int d) const;
};

struct Ext1Result {
  int dim = 0;
  std::vector<ExtensionClass> basis;
};

Ext1Result ext1_0(const DegreewiseModule& M, const DegreewiseModule& N);

/// The block module N ⊕ M carrying the extension action.
DegreewiseModule realize_extension(const ExtensionClass& e);

/// Whether the (already cocycle-valid) class is a coboundary, i.e. the
/// extension splits. Throws input_error if the family is not a cocycle.
bool extension_is_zero(const ExtensionClass& e);

struct LocalReport {
  bool local = false;       // End_0 is a local algebra <=> module indecomposable
  int end_dim = 0;          // dim End(M)_0
  int radical_dim = 0;      // dim of the Jacobson radical (trace-form kernel)
  int residue_dim = 0;      // dim of End/rad
  std::string note;
};

/// Indecomposability via the endomorphism algebra. Throws input_error on the
/// zero module.
LocalReport end0_is_local(const DegreewiseModule& M);

struct StripResult {
  DegreewiseModule core;
  std::vector<int> free_part;  // generator degrees of the split-off free summands, sorted
};

/// Splits off free direct summands until none remain; exterior kind only.
StripResult strip_free_summands(const DegreewiseModule& M);

/// Degree-zero isomorphism test: dims must agree and an invertible element of
/// Hom(M, N)_0 must exist (searched over seeded random and, when feasible, a
/// derandomized evaluation grid).
bool is_isomorphic_0(const DegreewiseModule& M, const DegreewiseModule& N);

/// Seed-deterministic random module on the given dimension profile: action
/// matrices are drawn degree by degree from the kernel of the linear
/// conditions the relations impose against the previous degree's maps.
DegreewiseModule random_module(const AlgebraKind& a, const std::map<int, int>& profile,
                               std::uint64_t seed);

/// Restriction of the module structure to a graded subspace; bases[d] columns
/// must be independent and jointly closed under the action.
DegreewiseModule submodule_from_bases(const DegreewiseModule& M, const std::map<int, RatMatrix>& bases);

/// Flattened coordinates of a graded map (canonical degree-then-row-major
/// order over the common support); used to compare map families.
std::vector<Rat> flatten_map(const GradedMap& f);

}  // namespace homcat
