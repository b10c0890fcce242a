#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homcat/errors.hpp"
#include "homcat/rational.hpp"

namespace homcat {

/// Dense matrix over exact rationals. Empty shapes (0 x k, k x 0) are
/// first-class values; graded pieces are frequently zero and callers never
/// special-case them.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);
  /// Row-major integer initialization, handy in tests.
  static RatMatrix from_ints(int rows, int cols, const std::vector<long>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& c) const;
  bool operator==(const RatMatrix& rhs) const;

  std::vector<Rat> col(int c) const;
  std::vector<Rat> row(int r) const;
  void set_col(int c, const std::vector<Rat>& v);

  /// [this | rhs]
  RatMatrix hstack(const RatMatrix& rhs) const;
  /// [this ; rhs]
  RatMatrix vstack(const RatMatrix& rhs) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // matrix * column vector

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Linear subspace of Q^ambient given by independent basis columns.
struct Subspace {
  int ambient_dim = 0;
  RatMatrix basis;  // ambient_dim x dim, columns independent

  int dim() const { return basis.cols(); }
};

/// Sparse vector, indices strictly increasing, values nonzero.
struct SparseVec {
  std::vector<std::pair<int, Rat>> nz;

  bool empty() const { return nz.empty(); }
  int lead() const { return nz.front().first; }
  static SparseVec from_dense(const std::vector<Rat>& v);
  std::vector<Rat> to_dense(int n) const;
};

/// Incremental sparse row reduction: feed rows/vectors, query rank, pivots,
/// reductions. The pivot rows are kept with leading coefficient 1.
class RowReducer {
 public:
  explicit RowReducer(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Reduces v against the stored pivot rows in place.
  void reduce(SparseVec& v) const;
  /// Reduces; if a nonzero residue remains, stores it as a new pivot row and
  /// returns true.
  bool add(SparseVec v);
  bool add_dense(const std::vector<Rat>& v) { return add(SparseVec::from_dense(v)); }
  /// True iff v lies in the span of the added vectors.
  bool contains(const std::vector<Rat>& v) const;

  /// Back-reduces the pivot rows against each other (reduced echelon form).
  void back_reduce();
  const std::map<int, SparseVec>& pivots() const { return pivots_; }

 private:
  int ncols_;
  std::map<int, SparseVec> pivots_;  // leading column -> row
};

struct RankKernel {
  int rank = 0;
  Subspace kernel;
};

/// Rank and an exact kernel basis of A (kernel of x -> A x).
RankKernel rank_kernel(const RatMatrix& A);

/// Kernel basis (ncols x k matrix) of the linear system given by sparse
/// constraint rows.
RatMatrix kernel_from_rows(const std::vector<SparseVec>& rows, int ncols);

int rank_of(const RatMatrix& A);

/// One solution of A x = b, or nullopt when b is outside the column space.
/// Throws input_error on shape mismatch.
std::optional<std::vector<Rat>> solve(const RatMatrix& A, const std::vector<Rat>& b);

/// Reusable elimination of A for many right-hand sides.
class Solver {
 public:
  explicit Solver(const RatMatrix& A);
  /// One exact solution of A x = b, or nullopt when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  /// Columnwise solve A X = B; nullopt if any column is inconsistent.
  std::optional<RatMatrix> solve_many(const RatMatrix& B) const;

 private:
  RatMatrix a_;  // kept for the exact consistency check
  int nrows_, ncols_;
  std::vector<SparseVec> rows_;           // fully reduced rows spanning A's row space
  std::vector<std::vector<Rat>> combo_;   // same row as combination of original rows
  std::map<int, int> pivot_col_to_row_;
};

/// dim U - dim W after checking W is contained in U (same ambient).
/// Throws input_error on ambient mismatch or non-containment.
int quotient_dim(const Subspace& U, const Subspace& W);

/// Basis for the column space: the independent columns of A, in order.
RatMatrix column_space(const RatMatrix& A);

/// Indices of columns of `cand` that enlarge the span of `base` columns,
/// scanning left to right. Used to pick quotient-space representatives.
std::vector<int> extend_span(const RatMatrix& base, const RatMatrix& cand);

}  // namespace homcat
