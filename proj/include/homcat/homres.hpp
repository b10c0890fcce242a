#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcat/grmodule.hpp"

namespace homcat {

/// Graded Betti numbers beta_{i,j} of a minimal free resolution, computed up
/// to homological degree `bound`.
struct BettiTable {
  int bound = 0;
  std::map<std::pair<int, int>, long> beta;  // (i, j) -> count

  long at(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
  }
};

struct Cover {
  DegreewiseModule P;           // minimal free cover
  GradedMap p;                  // surjection P -> M
  std::vector<int> gen_degrees; // sorted generator degrees (layout order)
};

/// Minimal projective cover: P is free on a basis of M/JM and p is onto with
/// kernel inside J·P.
Cover projective_cover(const DegreewiseModule& M);

/// Kernel of the projective cover, as a module in its own coordinates.
DegreewiseModule syzygy(const DegreewiseModule& M);

/// First cosyzygy over the exterior algebra (dual of the dual's syzygy).
DegreewiseModule cosyzygy(const DegreewiseModule& M);

/// One step of a minimal resolution, with the embedding of the kernel.
struct ResolutionStep {
  Cover cover;
  std::map<int, RatMatrix> kernel_bases;  // degree -> basis of ker p in P coordinates
  DegreewiseModule next;                  // the syzygy module in kernel coordinates
};

struct Resolution {
  std::vector<ResolutionStep> steps;  // steps[i] resolves the i-th syzygy
  BettiTable betti;
};

/// Minimal free resolution out to homological degree `length`.
Resolution resolve(const DegreewiseModule& M, int length);

BettiTable betti_table(const DegreewiseModule& M, int bound);

struct LinearVerdict {
  bool linear = false;
  std::optional<std::pair<int, int>> witness;  // first (i, j) with j != i + g
};

/// Linearity through the bound for a module generated in a single degree
/// (throws input_error otherwise, naming the offending degrees).
LinearVerdict is_linear(const DegreewiseModule& M, int bound);

/// Macaulay2-style grid (rows j - i, columns i).
std::string render_betti(const BettiTable& t);

}  // namespace homcat
