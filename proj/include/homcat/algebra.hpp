#pragma once

#include <string>
#include <vector>

#include "homcat/errors.hpp"
#include "homcat/rational.hpp"

namespace homcat {

/// The three graded algebras in play: the exterior algebra on nvars
/// generators, the polynomial ring on the same generators, and the two-step
/// quotient where any product of two generators vanishes.
enum class Kind { exterior, symmetric, twostep };

struct AlgebraKind {
  Kind kind = Kind::exterior;
  int nvars = 2;  // n + 1 generators, n >= 1

  int n() const { return nvars - 1; }
  bool operator==(const AlgebraKind&) const = default;
};

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

/// Quadratic relation residue: sum of coeff * A_first ∘ A_second terms that
/// must vanish as a map M_d -> M_{d+2} for every degree d.
struct RelationTerm {
  int first = 0;   // applied second (outer)
  int second = 0;  // applied first (inner)
  int coeff = 1;
};

struct Relation {
  std::string name;  // "square-zero", "anticommute", "commute", "product-zero"
  int var_a = 0, var_b = 0;
  std::vector<RelationTerm> terms;
};

/// The defining quadratic relations of the algebra, covering all pairs.
std::vector<Relation> relations(const AlgebraKind& a);

/// Dimension of the algebra's graded piece in degree d.
long degree_dim(const AlgebraKind& a, long d);

long binomial(long top, long k);  // 0 when top < 0 or k < 0 or k > top

/// The binomial polynomial (e+1)(e+2)...(e+n)/n! evaluated at integer e; this
/// is the Euler characteristic of the twist-e line bundle on n-space and takes
/// signed values for negative e.
Rat binomial_poly(long e, int n);

/// Zero when the index sets meet; otherwise the Koszul sign of merging the
/// sorted set A followed by the sorted set B into one sorted word.
int monomial_sign(const std::vector<int>& A, const std::vector<int>& B);

/// Monomial bases, ordered deterministically (lexicographically).
/// Exterior: the d-element subsets of {0..nvars-1} as sorted index vectors.
std::vector<std::vector<int>> exterior_monomials(int nvars, int d);
/// Symmetric: exponent vectors of total degree d, lex order.
std::vector<std::vector<int>> symmetric_monomials(int nvars, int d);

}  // namespace homcat
