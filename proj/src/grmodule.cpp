#include "homcat/grmodule.hpp"

#include <algorithm>
#include <sstream>

namespace homcat {

RatMatrix DegreewiseModule::act(int j, int d) const {
  if (j < 0 || j >= algebra.nvars) throw input_error("act: variable index out of range");
  const int t = d - lo;
  if (!dims.empty() && t >= 0 && t + 1 < static_cast<int>(dims.size())) return action[j][t];
  return RatMatrix(dim(d + 1), dim(d));
}

void ModuleBuilder::set_dim(int degree, int dim) {
  if (dim < 0) throw input_error("negative piece dimension");
  dims_[degree] = dim;
}

void ModuleBuilder::set_action(int var, int degree, RatMatrix m) {
  action_[{var, degree}] = std::move(m);
}

DegreewiseModule ModuleBuilder::finalize() const {
  DegreewiseModule m;
  m.algebra = algebra_;
  m.horizon = horizon_;
  int lo = 0, hi = -1;
  for (const auto& [d, dim] : dims_)
    if (dim > 0) {
      if (hi < lo) lo = hi = d;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  if (hi < lo) return m;  // zero module
  if (horizon_ != kCompleteHorizon && hi > horizon_)
    throw input_error("module data extends beyond its window horizon");
  m.lo = lo;
  m.dims.assign(static_cast<size_t>(hi - lo + 1), 0);
  for (const auto& [d, dim] : dims_)
    if (d >= lo && d <= hi) m.dims[static_cast<size_t>(d - lo)] = dim;
  const int len = static_cast<int>(m.dims.size());
  m.action.assign(algebra_.nvars, {});
  for (int j = 0; j < algebra_.nvars; ++j) {
    m.action[j].reserve(std::max(0, len - 1));
    for (int t = 0; t + 1 < len; ++t) {
      auto it = action_.find({j, lo + t});
      if (it == action_.end()) {
        m.action[j].emplace_back(m.dims[t + 1], m.dims[t]);
      } else {
        if (it->second.rows() != m.dims[t + 1] || it->second.cols() != m.dims[t]) {
          std::ostringstream os;
          os << "action matrix shape mismatch: var " << j << " degree " << lo + t << " expected "
             << m.dims[t + 1] << "x" << m.dims[t] << " got " << it->second.rows() << "x"
             << it->second.cols();
          throw input_error(os.str());
        }
        m.action[j].push_back(it->second);
      }
    }
  }
  for (const auto& [key, mat] : action_) {
    const auto [j, d] = key;
    if (j < 0 || j >= algebra_.nvars) throw input_error("action variable index out of range");
    const int t = d - lo;
    if (t < 0 || t + 1 >= len) {
      if (!mat.is_zero()) throw input_error("nonzero action outside the module window");
    }
  }
  return trimmed(std::move(m));
}

DegreewiseModule zero_module(const AlgebraKind& a, int horizon) {
  DegreewiseModule m;
  m.algebra = a;
  m.horizon = horizon;
  m.action.assign(a.nvars, {});
  return m;
}

DegreewiseModule trimmed(DegreewiseModule m) {
  int a = 0, b = static_cast<int>(m.dims.size());
  while (a < b && m.dims[a] == 0) ++a;
  while (b > a && m.dims[b - 1] == 0) --b;
  if (a == b) {
    m.lo = 0;
    m.dims.clear();
    m.action.assign(m.algebra.nvars, {});
    return m;
  }
  if (a == 0 && b == static_cast<int>(m.dims.size())) return m;
  DegreewiseModule out;
  out.algebra = m.algebra;
  out.horizon = m.horizon;
  out.lo = m.lo + a;
  out.dims.assign(m.dims.begin() + a, m.dims.begin() + b);
  out.action.assign(m.algebra.nvars, {});
  for (int j = 0; j < m.algebra.nvars; ++j)
    for (int t = a; t + 1 < b; ++t) out.action[j].push_back(m.action[j][t]);
  return out;
}

ValidationReport validate(const DegreewiseModule& m) {
  ValidationReport rep;
  auto fail = [&rep](Violation v) {
    rep.ok = false;
    rep.violations.push_back(std::move(v));
  };
  if (m.algebra.nvars < 2) {
    fail({"nvars", 0, 0, 0, "nvars must be at least 2"});
    return rep;
  }
  if (static_cast<int>(m.action.size()) != m.algebra.nvars) {
    fail({"shape", 0, 0, 0, "one action family per variable required"});
    return rep;
  }
  const int len = static_cast<int>(m.dims.size());
  for (int j = 0; j < m.algebra.nvars; ++j) {
    if (static_cast<int>(m.action[j].size()) != std::max(0, len - 1)) {
      fail({"shape", j, j, 0, "action family has the wrong number of matrices"});
      return rep;
    }
    for (int t = 0; t + 1 < len; ++t) {
      const RatMatrix& a = m.action[j][t];
      if (a.rows() != m.dims[t + 1] || a.cols() != m.dims[t]) {
        fail({"shape", j, j, m.lo + t, "action matrix shape mismatch"});
        return rep;
      }
    }
  }
  // Relation residues M_d -> M_{d+2}; for windowed modules only degrees whose
  // target piece is still certified.
  for (const Relation& rel : relations(m.algebra)) {
    for (int t = 0; t + 2 < len; ++t) {
      const int d = m.lo + t;
      if (m.horizon != kCompleteHorizon && d + 2 > m.horizon) break;
      if (m.dims[t] == 0 || m.dims[t + 2] == 0) continue;
      RatMatrix residue(m.dims[t + 2], m.dims[t]);
      for (const RelationTerm& term : rel.terms) {
        RatMatrix prod = m.action[term.first][t + 1] * m.action[term.second][t];
        residue = residue + prod.scaled(rat(term.coeff));
      }
      if (!residue.is_zero()) {
        std::ostringstream os;
        os << "relation " << rel.name << " (x" << rel.var_a << ", x" << rel.var_b
           << ") fails at degree " << d;
        fail({rel.name, rel.var_a, rel.var_b, d, os.str()});
      }
    }
  }
  return rep;
}

FreeLayout::FreeLayout(const AlgebraKind& a, std::vector<int> gen_degrees, int horizon)
    : algebra_(a), gens_(std::move(gen_degrees)), horizon_(horizon) {
  std::sort(gens_.begin(), gens_.end());
  if (gens_.empty()) return;
  if (a.kind == Kind::symmetric) {
    if (horizon_ == kCompleteHorizon)
      throw input_error("symmetric free module needs a finite window horizon");
    lo_ = gens_.front();
    hi_ = horizon_;
    if (hi_ < lo_) throw input_error("window horizon below lowest generator degree");
  } else {
    lo_ = gens_.front();
    hi_ = gens_.back() + (a.kind == Kind::exterior ? a.nvars : 1);
    horizon_ = kCompleteHorizon;
  }
}

int FreeLayout::piece_dim(int d) const {
  if (gens_.empty() || d < lo_ || d > hi_) return 0;
  long total = 0;
  for (int g : gens_) total += degree_dim(algebra_, d - g);
  return static_cast<int>(total);
}

int FreeLayout::column(int d, int s, int mono_index) const {
  long off = 0;
  for (int s2 = 0; s2 < s; ++s2) off += degree_dim(algebra_, d - gens_[s2]);
  return static_cast<int>(off) + mono_index;
}

int FreeLayout::gen_column(int s) const { return column(gens_[s], s, 0); }

int FreeLayout::exterior_mono_index(int d_total, int s, const std::vector<int>& mono) const {
  const auto monos = exterior_monomials(algebra_.nvars, d_total - gens_[s]);
  for (int i = 0; i < static_cast<int>(monos.size()); ++i)
    if (monos[i] == mono) return i;
  throw internal_error("monomial not found in layout");
}

DegreewiseModule FreeLayout::build() const {
  ModuleBuilder b(algebra_, horizon_);
  if (gens_.empty()) return b.finalize();
  for (int d = lo_; d <= hi_; ++d) b.set_dim(d, piece_dim(d));
  for (int d = lo_; d < hi_; ++d) {
    const int rows = piece_dim(d + 1), cols = piece_dim(d);
    if (rows == 0 || cols == 0) continue;
    std::vector<RatMatrix> mats(algebra_.nvars, RatMatrix(rows, cols));
    for (int s = 0; s < static_cast<int>(gens_.size()); ++s) {
      const int g = gens_[s];
      const int deg = d - g;
      if (degree_dim(algebra_, deg) == 0) continue;
      if (algebra_.kind == Kind::exterior) {
        const auto monos = exterior_monomials(algebra_.nvars, deg);
        const auto monos_up = exterior_monomials(algebra_.nvars, deg + 1);
        for (int mi = 0; mi < static_cast<int>(monos.size()); ++mi) {
          for (int j = 0; j < algebra_.nvars; ++j) {
            const int sign = monomial_sign({j}, monos[mi]);
            if (sign == 0) continue;
            std::vector<int> up = monos[mi];
            up.push_back(j);
            std::sort(up.begin(), up.end());
            const auto it = std::find(monos_up.begin(), monos_up.end(), up);
            const int ui = static_cast<int>(it - monos_up.begin());
            mats[j].at(column(d + 1, s, ui), column(d, s, mi)) = rat(sign);
          }
        }
      } else if (algebra_.kind == Kind::symmetric) {
        const auto monos = symmetric_monomials(algebra_.nvars, deg);
        const auto monos_up = symmetric_monomials(algebra_.nvars, deg + 1);
        std::map<std::vector<int>, int> up_index;
        for (int i = 0; i < static_cast<int>(monos_up.size()); ++i) up_index[monos_up[i]] = i;
        for (int mi = 0; mi < static_cast<int>(monos.size()); ++mi) {
          for (int j = 0; j < algebra_.nvars; ++j) {
            std::vector<int> up = monos[mi];
            ++up[j];
            mats[j].at(column(d + 1, s, up_index.at(up)), column(d, s, mi)) = 1;
          }
        }
      } else {  // twostep: only the generator columns act, onto the variables
        if (deg == 0) {
          for (int j = 0; j < algebra_.nvars; ++j)
            mats[j].at(column(d + 1, s, j), column(d, s, 0)) = 1;
        }
      }
    }
    for (int j = 0; j < algebra_.nvars; ++j) b.set_action(j, d, std::move(mats[j]));
  }
  return b.finalize();
}

DegreewiseModule construct_free(const AlgebraKind& a, const std::vector<int>& gen_degrees,
                                int horizon) {
  return FreeLayout(a, gen_degrees, horizon).build();
}

DegreewiseModule construct_simple(const AlgebraKind& a, int d) {
  ModuleBuilder b(a);
  b.set_dim(d, 1);
  return b.finalize();
}

DegreewiseModule shift(const DegreewiseModule& m, int i) {
  DegreewiseModule out = m;
  out.lo = m.lo - i;
  if (m.horizon != kCompleteHorizon) out.horizon = m.horizon - i;
  return out;
}

DegreewiseModule truncate(const DegreewiseModule& m, int k) {
  if (m.is_zero() || k <= m.lo) return m;
  DegreewiseModule out;
  out.algebra = m.algebra;
  out.horizon = m.horizon;
  if (k > m.hi()) {
    out.action.assign(m.algebra.nvars, {});
    return out;
  }
  const int a = k - m.lo;
  out.lo = k;
  out.dims.assign(m.dims.begin() + a, m.dims.end());
  out.action.assign(m.algebra.nvars, {});
  for (int j = 0; j < m.algebra.nvars; ++j)
    for (int t = a; t + 1 < static_cast<int>(m.dims.size()); ++t)
      out.action[j].push_back(m.action[j][t]);
  return trimmed(std::move(out));
}

DegreewiseModule clip_window(const DegreewiseModule& m, int new_hi) {
  DegreewiseModule out = m;
  out.horizon = m.horizon == kCompleteHorizon ? new_hi : std::min(m.horizon, new_hi);
  if (!m.is_zero() && m.hi() > new_hi) {
    if (new_hi < m.lo) {
      out.dims.clear();
      out.lo = 0;
      out.action.assign(m.algebra.nvars, {});
    } else {
      out.dims.resize(static_cast<size_t>(new_hi - m.lo + 1));
      for (auto& fam : out.action) fam.resize(static_cast<size_t>(std::max(0, new_hi - m.lo)));
    }
  }
  return trimmed(std::move(out));
}

DegreewiseModule direct_sum(const DegreewiseModule& a, const DegreewiseModule& b) {
  if (!(a.algebra == b.algebra)) throw input_error("direct_sum: algebra kind mismatch");
  const int horizon = std::min(a.horizon, b.horizon);
  if (a.is_zero() || b.is_zero()) {
    DegreewiseModule out = a.is_zero() ? b : a;
    out.horizon = horizon;
    if (horizon != kCompleteHorizon && !out.is_zero() && out.hi() > horizon) {
      // Clip data beyond the common certified window.
      DegreewiseModule clipped = out;
      clipped.dims.resize(horizon - out.lo + 1);
      for (auto& fam : clipped.action) fam.resize(std::max(0, horizon - out.lo));
      return trimmed(std::move(clipped));
    }
    return out;
  }
  ModuleBuilder builder(a.algebra, horizon);
  const int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.hi(), b.hi());
  if (horizon != kCompleteHorizon) hi = std::min(hi, horizon);
  for (int d = lo; d <= hi; ++d) builder.set_dim(d, a.dim(d) + b.dim(d));
  for (int d = lo; d < hi; ++d) {
    for (int j = 0; j < a.algebra.nvars; ++j) {
      RatMatrix block(a.dim(d + 1) + b.dim(d + 1), a.dim(d) + b.dim(d));
      RatMatrix am = a.act(j, d), bm = b.act(j, d);
      for (int r = 0; r < am.rows(); ++r)
        for (int c = 0; c < am.cols(); ++c) block.at(r, c) = am.at(r, c);
      for (int r = 0; r < bm.rows(); ++r)
        for (int c = 0; c < bm.cols(); ++c) block.at(a.dim(d + 1) + r, a.dim(d) + c) = bm.at(r, c);
      builder.set_action(j, d, std::move(block));
    }
  }
  return builder.finalize();
}

DegreewiseModule graded_dual(const DegreewiseModule& m) {
  if (m.algebra.kind != Kind::exterior) throw input_error("graded_dual requires exterior kind");
  if (m.is_zero()) return m;
  DegreewiseModule out;
  out.algebra = m.algebra;
  const int len = static_cast<int>(m.dims.size());
  out.lo = -m.hi();
  out.dims.resize(len);
  for (int t = 0; t < len; ++t) out.dims[t] = m.dims[len - 1 - t];
  out.action.assign(m.algebra.nvars, {});
  for (int j = 0; j < m.algebra.nvars; ++j)
    for (int t = 0; t + 1 < len; ++t) out.action[j].push_back(m.action[j][len - 2 - t].transposed());
  return out;
}

RatMatrix GradedMap::at(int d) const {
  auto it = mats.find(d);
  if (it != mats.end()) return it->second;
  return RatMatrix(target.dim(d), source.dim(d));
}

bool GradedMap::is_zero() const {
  for (const auto& [d, m] : mats)
    if (!m.is_zero()) return false;
  return true;
}

GradedMap compose(const GradedMap& second, const GradedMap& first) {
  GradedMap out;
  out.source = first.source;
  out.target = second.target;
  const DegreewiseModule& mid = first.target;
  if (!mid.is_zero() && !out.source.is_zero()) {
    const int lo = std::max(out.source.lo, mid.lo);
    const int hi = std::min(out.source.is_zero() ? lo - 1 : out.source.hi(), mid.hi());
    for (int d = lo; d <= hi; ++d) {
      RatMatrix m = second.at(d) * first.at(d);
      if (!m.is_zero()) out.mats[d] = std::move(m);
    }
  }
  return out;
}

GradedMap map_sum(const GradedMap& f, const GradedMap& g) {
  GradedMap out = f;
  for (const auto& [d, m] : g.mats) {
    auto it = out.mats.find(d);
    if (it == out.mats.end())
      out.mats[d] = m;
    else
      it->second = it->second + m;
  }
  return out;
}

GradedMap map_scale(const GradedMap& f, const Rat& c) {
  GradedMap out = f;
  for (auto& [d, m] : out.mats) m = m.scaled(c);
  return out;
}

GradedMap identity_map(const DegreewiseModule& m) {
  GradedMap f;
  f.source = m;
  f.target = m;
  if (!m.is_zero())
    for (int d = m.lo; d <= m.hi(); ++d)
      if (m.dim(d) > 0) f.mats[d] = RatMatrix::identity(m.dim(d));
  return f;
}

bool is_module_map(const GradedMap& f) {
  const DegreewiseModule& M = f.source;
  const DegreewiseModule& N = f.target;
  if (M.is_zero() || N.is_zero()) return true;
  const int horizon = std::min(M.horizon, N.horizon);
  const int lo = std::min(M.lo, N.lo);
  const int hi = std::max(M.hi(), N.hi());
  for (int d = lo; d < hi; ++d) {
    if (horizon != kCompleteHorizon && d + 1 > horizon) break;
    for (int j = 0; j < M.algebra.nvars; ++j) {
      RatMatrix lhs = f.at(d + 1) * M.act(j, d);
      RatMatrix rhs = N.act(j, d) * f.at(d);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

RatMatrix ExtensionClass::phi(int j, int d) const {
  auto it = cocycle.find(d);
  if (it != cocycle.end()) return it->second[j];
  return RatMatrix(target.dim(d + 1), source.dim(d));
}

DegreewiseModule realize_extension(const ExtensionClass& e) {
  const DegreewiseModule& M = e.source;
  const DegreewiseModule& N = e.target;
  if (!(M.algebra == N.algebra)) throw input_error("extension endpoints have different algebras");
  const int horizon = std::min(M.horizon, N.horizon);
  ModuleBuilder b(M.algebra, horizon);
  if (M.is_zero() && N.is_zero()) return b.finalize();
  const int lo = std::min(M.is_zero() ? N.lo : M.lo, N.is_zero() ? M.lo : N.lo);
  int hi = std::max(M.is_zero() ? N.hi() : M.hi(), N.is_zero() ? M.hi() : N.hi());
  if (horizon != kCompleteHorizon) hi = std::min(hi, horizon);
  for (int d = lo; d <= hi; ++d) b.set_dim(d, N.dim(d) + M.dim(d));
  for (int d = lo; d < hi; ++d)
    for (int j = 0; j < M.algebra.nvars; ++j) {
      RatMatrix block(N.dim(d + 1) + M.dim(d + 1), N.dim(d) + M.dim(d));
      RatMatrix an = N.act(j, d), am = M.act(j, d), ph = e.phi(j, d);
      for (int r = 0; r < an.rows(); ++r)
        for (int c = 0; c < an.cols(); ++c) block.at(r, c) = an.at(r, c);
      for (int r = 0; r < ph.rows(); ++r)
        for (int c = 0; c < ph.cols(); ++c) block.at(r, N.dim(d) + c) = ph.at(r, c);
      for (int r = 0; r < am.rows(); ++r)
        for (int c = 0; c < am.cols(); ++c) block.at(N.dim(d + 1) + r, N.dim(d) + c) = am.at(r, c);
      b.set_action(j, d, std::move(block));
    }
  return b.finalize();
}

DegreewiseModule submodule_from_bases(const DegreewiseModule& M,
                                      const std::map<int, RatMatrix>& bases) {
  ModuleBuilder b(M.algebra, M.horizon);
  for (const auto& [d, basis] : bases) {
    if (basis.rows() != M.dim(d)) throw input_error("submodule basis ambient mismatch");
    b.set_dim(d, basis.cols());
  }
  auto basis_at = [&bases, &M](int d) -> RatMatrix {
    auto it = bases.find(d);
    if (it != bases.end()) return it->second;
    return RatMatrix(M.dim(d), 0);
  };
  for (const auto& [d, basis] : bases) {
    if (basis.cols() == 0) continue;
    RatMatrix next = basis_at(d + 1);
    Solver solver(next);
    for (int j = 0; j < M.algebra.nvars; ++j) {
      RatMatrix img = M.act(j, d) * basis;
      auto coords = solver.solve_many(img);
      if (!coords) throw internal_error("submodule bases are not closed under the action");
      if (!coords->is_zero() || next.cols() > 0) b.set_action(j, d, *coords);
    }
  }
  return b.finalize();
}

std::vector<Rat> flatten_map(const GradedMap& f) {
  std::vector<Rat> out;
  const DegreewiseModule& M = f.source;
  const DegreewiseModule& N = f.target;
  if (M.is_zero() || N.is_zero()) return out;
  for (int d = std::max(M.lo, N.lo); d <= std::min(M.hi(), N.hi()); ++d) {
    if (M.dim(d) == 0 || N.dim(d) == 0) continue;
    RatMatrix m = f.at(d);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  }
  return out;
}

}  // namespace homcat
