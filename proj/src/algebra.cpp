#include "homcat/algebra.hpp"

#include <algorithm>

namespace homcat {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::exterior: return "exterior";
    case Kind::symmetric: return "symmetric";
    case Kind::twostep: return "twostep";
  }
  return "?";
}

Kind kind_from_name(const std::string& name) {
  if (name == "exterior") return Kind::exterior;
  if (name == "symmetric") return Kind::symmetric;
  if (name == "twostep") return Kind::twostep;
  throw input_error("unknown algebra kind: " + name);
}

std::vector<Relation> relations(const AlgebraKind& a) {
  std::vector<Relation> out;
  const int v = a.nvars;
  switch (a.kind) {
    case Kind::exterior:
      for (int j = 0; j < v; ++j) out.push_back({"square-zero", j, j, {{j, j, 1}}});
      for (int j = 0; j < v; ++j)
        for (int k = j + 1; k < v; ++k)
          out.push_back({"anticommute", j, k, {{j, k, 1}, {k, j, 1}}});
      break;
    case Kind::symmetric:
      for (int j = 0; j < v; ++j)
        for (int k = j + 1; k < v; ++k)
          out.push_back({"commute", j, k, {{j, k, 1}, {k, j, -1}}});
      break;
    case Kind::twostep:
      for (int j = 0; j < v; ++j)
        for (int k = 0; k < v; ++k)
          out.push_back({"product-zero", j, k, {{j, k, 1}}});
      break;
  }
  return out;
}

long binomial(long top, long k) {
  if (top < 0 || k < 0 || k > top) return 0;
  k = std::min(k, top - k);
  long result = 1;
  for (long i = 1; i <= k; ++i) result = result * (top - k + i) / i;
  return result;
}

Rat binomial_poly(long e, int n) {
  Rat num = 1;
  for (int i = 1; i <= n; ++i) num *= rat(e + i);
  Rat den = 1;
  for (int i = 1; i <= n; ++i) den *= rat(i);
  Rat q = num / den;
  q.canonicalize();
  return q;
}

long degree_dim(const AlgebraKind& a, long d) {
  switch (a.kind) {
    case Kind::exterior: return binomial(a.nvars, d);
    case Kind::symmetric: return d < 0 ? 0 : binomial(a.n() + d, a.n());
    case Kind::twostep:
      if (d == 0) return 1;
      if (d == 1) return a.nvars;
      return 0;
  }
  return 0;
}

int monomial_sign(const std::vector<int>& A, const std::vector<int>& B) {
  long inversions = 0;
  for (int x : A)
    for (int y : B) {
      if (x == y) return 0;
      if (x > y) ++inversions;
    }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> exterior_monomials(int nvars, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0 || d > nvars) return out;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    if (d == 0) break;
    int i = d - 1;
    while (i >= 0 && idx[i] == nvars - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {
void symmetric_rec(int nvars, int pos, int remaining, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    symmetric_rec(nvars, pos + 1, remaining - e, cur, out);
  }
}
}  // namespace

std::vector<std::vector<int>> symmetric_monomials(int nvars, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> cur(nvars);
  symmetric_rec(nvars, 0, d, cur, out);
  return out;
}

}  // namespace homcat
