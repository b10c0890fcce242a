#include "homcat/qlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace homcat {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw input_error("malformed rational literal: " + text);
  }
  try {
    Rat q(text);
    if (q.get_den() == 0) throw input_error("zero denominator in: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational literal: " + text);
  }
}

std::string format_rat(const Rat& q) { return q.get_str(); }

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_ints(int rows, int cols, const std::vector<long>& entries) {
  RatMatrix m(rows, cols);
  if (static_cast<int>(entries.size()) != rows * cols) throw input_error("from_ints: entry count mismatch");
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rat(entries[static_cast<size_t>(r) * cols + c]);
  return m;
}

bool RatMatrix::is_zero() const {
  for (const Rat& q : a_)
    if (q != 0) return false;
  return true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw input_error("matrix product shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) {
        const Rat& y = rhs.at(k, c);
        if (y == 0) continue;
        out.at(r, c) += x * y;
      }
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix sum shape mismatch");
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix difference shape mismatch");
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
  return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

std::vector<Rat> RatMatrix::col(int c) const {
  std::vector<Rat> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Rat> RatMatrix::row(int r) const {
  std::vector<Rat> v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void RatMatrix::set_col(int c, const std::vector<Rat>& v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

RatMatrix RatMatrix::hstack(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw input_error("hstack row mismatch");
  RatMatrix out(rows_, cols_ + rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (int c = 0; c < rhs.cols_; ++c) out.at(r, cols_ + c) = rhs.at(r, c);
  }
  return out;
}

RatMatrix RatMatrix::vstack(const RatMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw input_error("vstack col mismatch");
  RatMatrix out(rows_ + rhs.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
  for (int r = 0; r < rhs.rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(rows_ + r, c) = rhs.at(r, c);
  return out;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw input_error("apply: length mismatch");
  std::vector<Rat> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c) == 0 || v[c] == 0) continue;
      out[r] += at(r, c) * v[c];
    }
  return out;
}

SparseVec SparseVec::from_dense(const std::vector<Rat>& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) s.nz.emplace_back(i, v[i]);
  return s;
}

std::vector<Rat> SparseVec::to_dense(int n) const {
  std::vector<Rat> v(n);
  for (const auto& [i, q] : nz) v[i] = q;
  return v;
}

namespace {

// v -= c * w, assuming both sorted sparse.
void axpy(SparseVec& v, const Rat& c, const SparseVec& w) {
  if (c == 0) return;
  SparseVec out;
  out.nz.reserve(v.nz.size() + w.nz.size());
  size_t i = 0, j = 0;
  while (i < v.nz.size() || j < w.nz.size()) {
    if (j >= w.nz.size() || (i < v.nz.size() && v.nz[i].first < w.nz[j].first)) {
      out.nz.push_back(v.nz[i++]);
    } else if (i >= v.nz.size() || w.nz[j].first < v.nz[i].first) {
      out.nz.emplace_back(w.nz[j].first, -c * w.nz[j].second);
      ++j;
    } else {
      Rat q = v.nz[i].second - c * w.nz[j].second;
      if (q != 0) out.nz.emplace_back(v.nz[i].first, std::move(q));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

}  // namespace

void RowReducer::reduce(SparseVec& v) const {
  while (!v.empty()) {
    auto it = pivots_.find(v.lead());
    if (it == pivots_.end()) {
      // Leading term survives; interior terms may still reduce, which keeps
      // contains() exact. Reduce the rest of the vector too.
      bool touched = false;
      for (size_t k = 1; k < v.nz.size(); ++k) {
        auto jt = pivots_.find(v.nz[k].first);
        if (jt != pivots_.end()) {
          axpy(v, v.nz[k].second, jt->second);
          touched = true;
          break;
        }
      }
      if (!touched) return;
    } else {
      axpy(v, v.nz.front().second, it->second);
    }
  }
}

bool RowReducer::add(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  const Rat lead = v.nz.front().second;
  for (auto& [i, q] : v.nz) q /= lead;
  pivots_.emplace(v.lead(), std::move(v));
  return true;
}

bool RowReducer::contains(const std::vector<Rat>& v) const {
  SparseVec s = SparseVec::from_dense(v);
  reduce(s);
  return s.empty();
}

void RowReducer::back_reduce() {
  // From the highest pivot down, eliminate its column from all earlier rows.
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    for (auto jt = pivots_.begin(); jt != pivots_.end(); ++jt) {
      if (jt->first >= it->first) break;
      SparseVec& row = jt->second;
      for (const auto& [idx, val] : row.nz) {
        if (idx == it->first) {
          axpy(row, val, it->second);
          break;
        }
        if (idx > it->first) break;
      }
    }
  }
}

namespace {

RatMatrix kernel_of_reducer(RowReducer& red, int ncols) {
  red.back_reduce();
  std::vector<int> free_cols;
  std::vector<int> free_index(ncols, -1);
  for (int c = 0; c < ncols; ++c)
    if (!red.pivots().count(c)) {
      free_index[c] = static_cast<int>(free_cols.size());
      free_cols.push_back(c);
    }
  RatMatrix K(ncols, static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) K.at(free_cols[k], k) = 1;
  for (const auto& [lead, row] : red.pivots())
    for (const auto& [idx, val] : row.nz)
      if (idx != lead && free_index[idx] >= 0) K.at(lead, free_index[idx]) = -val;
  return K;
}

}  // namespace

RankKernel rank_kernel(const RatMatrix& A) {
  RowReducer red(A.cols());
  for (int r = 0; r < A.rows(); ++r) red.add(SparseVec::from_dense(A.row(r)));
  RankKernel out;
  out.rank = red.rank();
  out.kernel = Subspace{A.cols(), kernel_of_reducer(red, A.cols())};
  return out;
}

RatMatrix kernel_from_rows(const std::vector<SparseVec>& rows, int ncols) {
  RowReducer red(ncols);
  for (const SparseVec& r : rows) red.add(r);
  return kernel_of_reducer(red, ncols);
}

int rank_of(const RatMatrix& A) {
  RowReducer red(A.cols());
  for (int r = 0; r < A.rows(); ++r) red.add(SparseVec::from_dense(A.row(r)));
  return red.rank();
}

Solver::Solver(const RatMatrix& A) : a_(A), nrows_(A.rows()), ncols_(A.cols()) {
  for (int r = 0; r < nrows_; ++r) {
    SparseVec v = SparseVec::from_dense(A.row(r));
    std::vector<Rat> combo(nrows_);
    combo[r] = 1;
    // Reduce against existing rows, tracking the row combination.
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (const auto& [idx, val] : v.nz) {
        auto it = pivot_col_to_row_.find(idx);
        if (it != pivot_col_to_row_.end()) {
          const Rat c = val;
          axpy(v, c, rows_[it->second]);
          const auto& pc = combo_[it->second];
          for (int k = 0; k < nrows_; ++k)
            if (pc[k] != 0) combo[k] -= c * pc[k];
          changed = true;
          break;
        }
      }
    }
    if (v.empty()) continue;
    const Rat lead = v.nz.front().second;
    for (auto& [i, q] : v.nz) q /= lead;
    for (auto& q : combo) q /= lead;
    pivot_col_to_row_.emplace(v.lead(), static_cast<int>(rows_.size()));
    rows_.push_back(std::move(v));
    combo_.push_back(std::move(combo));
  }
  // Full back-reduction so each pivot column appears in exactly one row.
  for (auto it = pivot_col_to_row_.rbegin(); it != pivot_col_to_row_.rend(); ++it) {
    const int prow = it->second;
    for (auto jt = pivot_col_to_row_.begin(); jt != pivot_col_to_row_.end(); ++jt) {
      if (jt->first >= it->first) break;
      SparseVec& row = rows_[jt->second];
      for (const auto& [idx, val] : row.nz) {
        if (idx == it->first) {
          const Rat c = val;
          axpy(row, c, rows_[prow]);
          for (int k = 0; k < nrows_; ++k)
            if (combo_[prow][k] != 0) combo_[jt->second][k] -= c * combo_[prow][k];
          break;
        }
        if (idx > it->first) break;
      }
    }
  }
}

std::optional<std::vector<Rat>> Solver::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != nrows_) throw input_error("solve: rhs length mismatch");
  // The reduced rows R span A's row space with R = C*A. With unit, fully
  // reduced pivot columns, x_pivot := (C*b)_row and x_free := 0 solves R x = Cb,
  // which for a consistent system pins an exact solution of A x = b (kernels
  // agree); the final exact product check rejects inconsistent systems.
  std::vector<Rat> x(ncols_);
  std::vector<Rat> y(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (int k = 0; k < nrows_; ++k)
      if (combo_[r][k] != 0 && b[k] != 0) y[r] += combo_[r][k] * b[k];
  }
  for (const auto& [col, ridx] : pivot_col_to_row_) x[col] = y[ridx];
  std::vector<Rat> Ax = a_.apply(x);
  for (int r = 0; r < nrows_; ++r)
    if (Ax[r] != b[r]) return std::nullopt;
  return x;
}

std::optional<RatMatrix> Solver::solve_many(const RatMatrix& B) const {
  if (B.rows() != nrows_) throw input_error("solve_many: rhs rows mismatch");
  RatMatrix X(ncols_, B.cols());
  for (int c = 0; c < B.cols(); ++c) {
    auto x = solve(B.col(c));
    if (!x) return std::nullopt;
    X.set_col(c, *x);
  }
  return X;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& A, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw input_error("solve: rhs length mismatch");
  return Solver(A).solve(b);
}

int quotient_dim(const Subspace& U, const Subspace& W) {
  if (U.ambient_dim != W.ambient_dim) throw input_error("quotient_dim: ambient dimension mismatch");
  Solver s(U.basis);
  for (int c = 0; c < W.basis.cols(); ++c)
    if (!s.solve(W.basis.col(c))) throw input_error("quotient_dim: W is not contained in U");
  return U.dim() - W.dim();
}

RatMatrix column_space(const RatMatrix& A) {
  RowReducer red(A.rows());
  std::vector<int> kept;
  for (int c = 0; c < A.cols(); ++c)
    if (red.add(SparseVec::from_dense(A.col(c)))) kept.push_back(c);
  RatMatrix out(A.rows(), static_cast<int>(kept.size()));
  for (int k = 0; k < static_cast<int>(kept.size()); ++k) out.set_col(k, A.col(kept[k]));
  return out;
}

std::vector<int> extend_span(const RatMatrix& base, const RatMatrix& cand) {
  if (base.cols() > 0 && cand.cols() > 0 && base.rows() != cand.rows())
    throw input_error("extend_span: ambient mismatch");
  const int ambient = base.cols() > 0 ? base.rows() : cand.rows();
  RowReducer red(ambient);
  for (int c = 0; c < base.cols(); ++c) red.add(SparseVec::from_dense(base.col(c)));
  std::vector<int> kept;
  for (int c = 0; c < cand.cols(); ++c)
    if (red.add(SparseVec::from_dense(cand.col(c)))) kept.push_back(c);
  return kept;
}

}  // namespace homcat
