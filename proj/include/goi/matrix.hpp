#pragma once

// Localized adjacency matrices and the linear algebra behind the exact
// measurement and the exact (simplified) reduction.
//
// Row convention: entry (v, w) is the weight of v -> w, so the weight of a
// path is read off a product of matrices taken in path order.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "goi/error.hpp"
#include "goi/format.hpp"
#include "goi/graph.hpp"

namespace goi {

class LocalizedMatrix {
 public:
  LocalizedMatrix() = default;
  explicit LocalizedMatrix(std::vector<Vertex> index)
      : index_(std::move(index)), data_(index_.size() * index_.size(), 0.0) {
    for (std::size_t i = 1; i < index_.size(); ++i) {
      if (index_[i - 1] >= index_[i]) throw InvalidArgument("matrix index must be increasing");
    }
  }
  explicit LocalizedMatrix(const VertexSet& over)
      : LocalizedMatrix(std::vector<Vertex>(over.begin(), over.end())) {}

  static LocalizedMatrix identity(const std::vector<Vertex>& index) {
    LocalizedMatrix m(index);
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const noexcept { return index_.size(); }
  const std::vector<Vertex>& index() const noexcept { return index_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim() + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim() + j]; }

  std::size_t position(Vertex v) const {
    const auto it = std::lower_bound(index_.begin(), index_.end(), v);
    if (it == index_.end() || *it != v) {
      throw InvalidArgument("vertex " + std::to_string(v) + " is not indexed");
    }
    return static_cast<std::size_t>(it - index_.begin());
  }

  bool same_index(const LocalizedMatrix& o) const { return index_ == o.index_; }

 private:
  std::vector<Vertex> index_;
  std::vector<double> data_;
};

inline void require_same_index(const LocalizedMatrix& a, const LocalizedMatrix& b) {
  if (!a.same_index(b)) throw InvalidArgument("matrices are indexed over different carriers");
}

inline LocalizedMatrix operator*(const LocalizedMatrix& a, const LocalizedMatrix& b) {
  require_same_index(a, b);
  const std::size_t n = a.dim();
  LocalizedMatrix c(a.index());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

inline LocalizedMatrix operator+(const LocalizedMatrix& a, const LocalizedMatrix& b) {
  require_same_index(a, b);
  LocalizedMatrix c(a.index());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline LocalizedMatrix operator-(const LocalizedMatrix& a, const LocalizedMatrix& b) {
  require_same_index(a, b);
  LocalizedMatrix c(a.index());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline LocalizedMatrix transpose(const LocalizedMatrix& a) {
  LocalizedMatrix t(a.index());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
  return t;
}

inline double matrix_trace(const LocalizedMatrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

inline LocalizedMatrix adjacency_matrix(const SimpleGraph& s, const VertexSet& over) {
  if (!is_subset(s.vertices(), over)) {
    throw CarrierError("graph vertices are not contained in the matrix carrier");
  }
  LocalizedMatrix m(over);
  for (const auto& [key, w] : s.weights()) {
    if (!std::isfinite(w)) throw TotalityError("simple graph is not total");
    m(m.position(key.first), m.position(key.second)) = w;
  }
  return m;
}

inline LocalizedMatrix adjacency_matrix(const SimpleGraph& s) {
  return adjacency_matrix(s, s.vertices());
}

// Nonzero entries only; the vertex set is the matrix index.
inline SimpleGraph matrix_graph(const LocalizedMatrix& m) {
  SimpleGraph s(VertexSet(m.index().begin(), m.index().end()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m(i, j) != 0.0) s.set(m.index()[i], m.index()[j], m(i, j));
  return s;
}

// Partially pivoted LU factorisation, P A = L U with unit lower L stored
// below the diagonal.
struct LuFactorization {
  std::size_t n = 0;
  std::vector<double> lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;

  double at(std::size_t i, std::size_t j) const { return lu[i * n + j]; }
};

inline LuFactorization lu_factor(const LocalizedMatrix& a) {
  LuFactorization f;
  f.n = a.dim();
  f.lu.resize(f.n * f.n);
  f.perm.resize(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    f.perm[i] = i;
    for (std::size_t j = 0; j < f.n; ++j) f.lu[i * f.n + j] = a(i, j);
  }
  const std::size_t n = f.n;
  auto& lu = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu[i * n + k]) > best) {
        best = std::abs(lu[i * n + k]);
        p = i;
      }
    }
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[p * n + j]);
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = lu[i * n + k] / lu[k * n + k];
      lu[i * n + k] = m;
      if (m == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= m * lu[k * n + j];
    }
  }
  return f;
}

inline double determinant(const LocalizedMatrix& a) {
  const LuFactorization f = lu_factor(a);
  if (f.singular) return 0.0;
  double d = f.sign;
  for (std::size_t i = 0; i < f.n; ++i) d *= f.at(i, i);
  return d;
}

// Solves A x = b using a factorisation of A.
inline std::vector<double> lu_solve(const LuFactorization& f, const std::vector<double>& b) {
  if (f.singular) throw TotalityError("singular system");
  const std::size_t n = f.n;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.at(i, j) * x[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.at(i, j) * x[j];
    x[i] /= f.at(i, i);
  }
  return x;
}

// A^{-1} B, column by column.
inline LocalizedMatrix solve_matrix(const LocalizedMatrix& a, const LocalizedMatrix& b) {
  require_same_index(a, b);
  const LuFactorization f = lu_factor(a);
  LocalizedMatrix x(a.index());
  std::vector<double> col(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    for (std::size_t i = 0; i < a.dim(); ++i) col[i] = b(i, j);
    const std::vector<double> sol = lu_solve(f, col);
    for (std::size_t i = 0; i < a.dim(); ++i) x(i, j) = sol[i];
  }
  return x;
}

// Gauss-Jordan inversion with partial pivoting.
inline LocalizedMatrix gauss_jordan_inverse(const LocalizedMatrix& a) {
  const std::size_t n = a.dim();
  LocalizedMatrix w = a;
  LocalizedMatrix inv = LocalizedMatrix::identity(a.index());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(w(i, k)) > std::abs(w(p, k))) p = i;
    if (w(p, k) == 0.0) throw TotalityError("singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(k, j), w(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const double d = w(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      w(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0.0) continue;
      const double m = w(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= m * w(k, j);
        inv(i, j) -= m * inv(k, j);
      }
    }
  }
  return inv;
}

inline constexpr double kInfinityMargin = 1e-9;

// For entrywise nonnegative M: true iff rho(M) < 1 - margin. Uses the
// M-matrix criterion: I - M/(1-margin) has only positive pivots under
// elimination without pivoting.
inline bool is_subcritical(const LocalizedMatrix& m, double margin = kInfinityMargin) {
  const std::size_t n = m.dim();
  const double scale = 1.0 / (1.0 - margin);
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (i == j ? 1.0 : 0.0) - scale * m(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = a[k * n + k];
    if (!(pivot > 0.0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return true;
}

// -log det(1 - M) for nonnegative M; infinity when rho(M) >= 1 - margin.
inline double log_det_one_minus(const LocalizedMatrix& m, double margin = kInfinityMargin) {
  if (!is_subcritical(m, margin)) return kInfinity;
  const LocalizedMatrix one_minus = LocalizedMatrix::identity(m.index()) - m;
  const LuFactorization f = lu_factor(one_minus);
  if (f.singular) return kInfinity;
  double sum = 0.0;
  for (std::size_t i = 0; i < f.n; ++i) sum += std::log(std::abs(f.at(i, i)));
  return std::max(0.0, -sum);
}

// Partial sums of sum_{k<=K} Tr(M^k)/k.
inline std::vector<double> trace_series_partial(const LocalizedMatrix& m, std::size_t k_max) {
  if (k_max < 1) throw InvalidArgument("K must be at least 1");
  std::vector<double> out;
  out.reserve(k_max);
  LocalizedMatrix power = m;
  double sum = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) power = power * m;
    sum += matrix_trace(power) / static_cast<double>(k);
    out.push_back(sum);
  }
  return out;
}

struct PowerIterationOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 10000;
};

namespace detail {

// Strongly connected blocks of the support of m, as index lists.
inline std::vector<std::vector<std::size_t>> support_blocks(const LocalizedMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = m(i, j) != 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<bool> placed(n, false);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i] || !reach[i][i]) continue;
    std::vector<std::size_t> block;
    for (std::size_t j = i; j < n; ++j) {
      if (!placed[j] && reach[i][j] && reach[j][i]) {
        block.push_back(j);
        placed[j] = true;
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace detail

// Spectral radius of a nonnegative matrix. Each irreducible block is handled
// by power iteration on (block + I), which is primitive, with a
// Collatz-Wielandt bracket as the stopping rule.
inline double spectral_radius(const LocalizedMatrix& m, PowerIterationOptions opt = {}) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m(i, j) < 0.0) throw InvalidArgument("spectral_radius expects a nonnegative matrix");
  double rho = 0.0;
  for (const auto& block : detail::support_blocks(m)) {
    const std::size_t b = block.size();
    std::vector<double> x(b, 1.0 / static_cast<double>(b)), y(b);
    double lower = 0.0, upper = kInfinity;
    bool converged = false;
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
      for (std::size_t r = 0; r < b; ++r) {
        double acc = x[r];
        for (std::size_t c = 0; c < b; ++c) acc += m(block[r], block[c]) * x[c];
        y[r] = acc;
      }
      lower = kInfinity;
      upper = 0.0;
      double norm = 0.0;
      for (std::size_t r = 0; r < b; ++r) {
        const double ratio = y[r] / x[r];
        lower = std::min(lower, ratio);
        upper = std::max(upper, ratio);
        norm += y[r];
      }
      for (std::size_t r = 0; r < b; ++r) x[r] = y[r] / norm;
      if (upper - lower <= opt.tolerance * upper) {
        converged = true;
        break;
      }
    }
    const double estimate = 0.5 * (lower + upper) - 1.0;
    if (!converged) {
      throw ConvergenceError("power iteration did not converge", std::max(0.0, estimate));
    }
    rho = std::max(rho, std::max(0.0, estimate));
  }
  return rho;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> symmetric_eigenvalues(const LocalizedMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (m(i, j) + m(j, i));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

inline bool is_symmetric(const LocalizedMatrix& m, double tol = kDefaultTolerance) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

// Largest singular value.
inline double operator_norm(const LocalizedMatrix& m) {
  if (m.dim() == 0) return 0.0;
  if (is_symmetric(m, 0.0)) {
    const auto eig = symmetric_eigenvalues(m);
    return std::max(std::abs(eig.front()), std::abs(eig.back()));
  }
  const auto eig = symmetric_eigenvalues(transpose(m) * m);
  return std::sqrt(std::max(0.0, eig.back()));
}

inline bool is_operator_graph(const SimpleGraph& s, double tol = kDefaultTolerance) {
  if (!is_total(s) || !is_symmetric(s, tol)) return false;
  return operator_norm(adjacency_matrix(s)) <= 1.0 + tol;
}

namespace detail {

// Block selector: 1 on the diagonal entries whose vertex is in `part`.
inline LocalizedMatrix projection(const std::vector<Vertex>& index, const VertexSet& part) {
  LocalizedMatrix p(index);
  for (std::size_t i = 0; i < index.size(); ++i)
    if (part.count(index[i])) p(i, i) = 1.0;
  return p;
}

inline std::vector<std::vector<bool>> support(const LocalizedMatrix& m) {
  std::vector<std::vector<bool>> s(m.dim(), std::vector<bool>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) s[i][j] = m(i, j) != 0.0;
  return s;
}

inline std::vector<std::vector<bool>> bool_product(const std::vector<std::vector<bool>>& a,
                                                   const std::vector<std::vector<bool>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = true;
  return c;
}

inline std::vector<std::vector<bool>> reflexive_closure(std::vector<std::vector<bool>> r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

}  // namespace detail

// Solution of the feedback equation: the simplified reduction of F and G,
//   S = (p_F' M_F + p_G') (1 - M_G M_F)^{-1} (M_G p_G' + p_F'),
// restricted to the symmetric difference of the carriers. Entries are kept
// exactly where an alternating path exists.
inline SimpleGraph feedback_solve(const SimpleGraph& f, const SimpleGraph& g) {
  const VertexSet carrier = vertex_union(f.vertices(), g.vertices());
  const std::vector<Vertex> index(carrier.begin(), carrier.end());
  const VertexSet f_only = vertex_difference(f.vertices(), g.vertices());
  const VertexSet g_only = vertex_difference(g.vertices(), f.vertices());
  const LocalizedMatrix a = adjacency_matrix(f, carrier);
  const LocalizedMatrix b = adjacency_matrix(g, carrier);
  const LocalizedMatrix ba = b * a;
  if (!is_subcritical(ba)) throw TotalityError("the reduction is not total: <F,G> is infinite");

  const LocalizedMatrix pf = detail::projection(index, f_only);
  const LocalizedMatrix pg = detail::projection(index, g_only);
  const LocalizedMatrix one = LocalizedMatrix::identity(index);
  const LocalizedMatrix left = pf * a + pg;
  const LocalizedMatrix right = b * pg + pf;
  const LocalizedMatrix s = left * solve_matrix(one - ba, right);

  const auto sa = detail::support(a), sb = detail::support(b);
  const auto sx = detail::reflexive_closure(detail::bool_product(sb, sa));
  auto sum = [](std::vector<std::vector<bool>> x, const std::vector<std::vector<bool>>& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) x[i][j] = x[i][j] || y[i][j];
    return x;
  };
  const auto sl = sum(detail::support(pf * a), detail::support(pg));
  const auto sr = sum(detail::support(b * pg), detail::support(pf));
  const auto ss = detail::bool_product(detail::bool_product(sl, sx), sr);

  const VertexSet outer = symmetric_difference(f.vertices(), g.vertices());
  SimpleGraph out(outer);
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (!outer.count(index[i])) continue;
    for (std::size_t j = 0; j < index.size(); ++j) {
      if (!outer.count(index[j]) || !ss[i][j]) continue;
      if (s(i, j) > 0.0) out.set(index[i], index[j], s(i, j));
    }
  }
  return out;
}

inline SimpleGraph reduce_exact(const WeightedGraph& f, const WeightedGraph& g) {
  return feedback_solve(simplify(f), simplify(g));
}

// Recomputes the four blocks of the solution through the inverses of
// (1 - M_F M_G) and (1 - M_G M_F) and compares them with S entrywise.
inline bool check_feedback_equation(const SimpleGraph& f, const SimpleGraph& g,
                                    const SimpleGraph& s, double tol = kDefaultTolerance) {
  const VertexSet carrier = vertex_union(f.vertices(), g.vertices());
  const std::vector<Vertex> index(carrier.begin(), carrier.end());
  const VertexSet f_only = vertex_difference(f.vertices(), g.vertices());
  const VertexSet g_only = vertex_difference(g.vertices(), f.vertices());
  const LocalizedMatrix a = adjacency_matrix(f, carrier);
  const LocalizedMatrix b = adjacency_matrix(g, carrier);
  const LocalizedMatrix one = LocalizedMatrix::identity(index);
  const LocalizedMatrix inv_ab = gauss_jordan_inverse(one - a * b);
  const LocalizedMatrix inv_ba = gauss_jordan_inverse(one - b * a);
  const LocalizedMatrix ff = inv_ab * a;
  const LocalizedMatrix fg = inv_ab * a * b;
  const LocalizedMatrix gf = inv_ba * b * a;
  const LocalizedMatrix gg = inv_ba * b;

  if (s.vertices() != symmetric_difference(f.vertices(), g.vertices())) return false;
  for (std::size_t i = 0; i < index.size(); ++i) {
    const Vertex v = index[i];
    const bool vf = f_only.count(v) != 0, vg = g_only.count(v) != 0;
    if (!vf && !vg) continue;
    for (std::size_t j = 0; j < index.size(); ++j) {
      const Vertex w = index[j];
      const bool wf = f_only.count(w) != 0, wg = g_only.count(w) != 0;
      if (!wf && !wg) continue;
      const LocalizedMatrix& block = vf ? (wf ? ff : fg) : (wf ? gf : gg);
      if (std::abs(block(i, j) - s.weight(v, w)) > tol) return false;
    }
  }
  return true;
}

inline std::string dump_matrix(const LocalizedMatrix& m) {
  std::ostringstream out;
  out << "index";
  for (Vertex v : m.index()) out << ' ' << v;
  out << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out << ' ';
      out << format_decimal(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace goi
