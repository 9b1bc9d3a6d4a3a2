#include "vogelcas/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace vogelcas {

Rational dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

Vec operator+(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector sum: dimension mismatch");
  Vec out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

Vec operator-(const Vec& x) {
  Vec out(x);
  for (auto& c : out) c = -c;
  return out;
}

namespace {

Vec unit(std::size_t dim, std::size_t i, long c = 1) {
  Vec v(dim);
  v[i] = Rational(c);
  return v;
}

// c_i e_i + c_j e_j
Vec pair(std::size_t dim, std::size_t i, long ci, std::size_t j, long cj) {
  Vec v(dim);
  v[i] = Rational(ci);
  v[j] = Rational(cj);
  return v;
}

Vec of(std::initializer_list<Rational> xs) { return Vec(xs); }

// All +-e_i +- e_j, i < j.
void add_long_pairs(std::vector<Vec>& roots, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (long si : {1, -1})
        for (long sj : {1, -1}) roots.push_back(pair(dim, i, si, j, sj));
}

// e_i - e_{i+1} for i < count.
void add_chain(std::vector<Vec>& simple, std::size_t dim, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) simple.push_back(pair(dim, i, 1, i + 1, -1));
}

struct Realization {
  std::size_t dim = 0;
  std::vector<Vec> roots;
  std::vector<Vec> simple;
};

Realization type_a(std::size_t n) {
  Realization r{n + 1, {}, {}};
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (i != j) r.roots.push_back(pair(r.dim, i, 1, j, -1));
  add_chain(r.simple, r.dim, n);
  return r;
}

Realization type_b(std::size_t n) {
  Realization r{n, {}, {}};
  add_long_pairs(r.roots, n);
  for (std::size_t i = 0; i < n; ++i) {
    r.roots.push_back(unit(n, i));
    r.roots.push_back(unit(n, i, -1));
  }
  add_chain(r.simple, n, n - 1);
  r.simple.push_back(unit(n, n - 1));
  return r;
}

Realization type_c(std::size_t n) {
  Realization r{n, {}, {}};
  add_long_pairs(r.roots, n);
  for (std::size_t i = 0; i < n; ++i) {
    r.roots.push_back(unit(n, i, 2));
    r.roots.push_back(unit(n, i, -2));
  }
  add_chain(r.simple, n, n - 1);
  r.simple.push_back(unit(n, n - 1, 2));
  return r;
}

Realization type_d(std::size_t n) {
  Realization r{n, {}, {}};
  add_long_pairs(r.roots, n);
  add_chain(r.simple, n, n - 1);
  r.simple.push_back(pair(n, n - 2, 1, n - 1, 1));
  return r;
}

// In the plane x1 + x2 + x3 = 0 of R^3.
Realization type_g2() {
  Realization r{3, {}, {}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) r.roots.push_back(pair(3, i, 1, j, -1));
  for (std::size_t i = 0; i < 3; ++i) {
    Vec v(3, Rational(-1));
    v[i] = Rational(2);
    r.roots.push_back(v);
    r.roots.push_back(-v);
  }
  r.simple = {of({1, -1, 0}), of({-2, 1, 1})};
  return r;
}

Realization type_f4() {
  Realization r{4, {}, {}};
  add_long_pairs(r.roots, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    r.roots.push_back(unit(4, i));
    r.roots.push_back(unit(4, i, -1));
  }
  const Rational half(1, 2);
  for (int mask = 0; mask < 16; ++mask) {
    Vec v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -half : half;
    r.roots.push_back(v);
  }
  r.simple = {of({0, 1, -1, 0}), of({0, 0, 1, -1}), of({0, 0, 0, 1}),
              of({half, -half, -half, -half})};
  return r;
}

Realization type_e8() {
  Realization r{8, {}, {}};
  add_long_pairs(r.roots, 8);
  const Rational half(1, 2);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    Vec v(8);
    for (std::size_t i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -half : half;
    r.roots.push_back(v);
  }
  r.simple.push_back(of({half, -half, -half, -half, -half, -half, -half, half}));
  r.simple.push_back(pair(8, 0, 1, 1, 1));
  for (std::size_t i = 0; i < 6; ++i) r.simple.push_back(pair(8, i + 1, 1, i, -1));
  return r;
}

std::vector<Vec> invert(std::vector<Vec> m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("RootSystem: singular Gram matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational f = m[row][col];
      for (std::size_t k = col; k < 2 * n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  for (auto& row : m) row.erase(row.begin(), row.begin() + static_cast<long>(n));
  return m;
}

// Sub-system of E8 spanned by the first `rank` Bourbaki simple roots: the
// E8 roots whose simple coordinates vanish past index `rank`.
Realization type_e(std::size_t rank) {
  Realization e8 = type_e8();
  if (rank == 8) return e8;
  Realization r{8, {}, {}};
  r.simple.assign(e8.simple.begin(), e8.simple.begin() + static_cast<long>(rank));
  std::vector<Vec> gram(8, Vec(8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) gram[i][j] = dot(e8.simple[i], e8.simple[j]);
  const std::vector<Vec> gram_inv = invert(std::move(gram));
  for (const Vec& mu : e8.roots) {
    bool inside = true;
    for (std::size_t i = rank; i < 8 && inside; ++i) {
      Rational c;
      for (std::size_t j = 0; j < 8; ++j) c += gram_inv[i][j] * dot(e8.simple[j], mu);
      inside = c.is_zero();
    }
    if (inside) r.roots.push_back(mu);
  }
  return r;
}

}  // namespace

RootSystem RootSystem::build(const AlgebraId& id) {
  id.validate();
  const auto n = static_cast<std::size_t>(id.rank);
  Realization r;
  switch (id.family) {
    case Family::A: r = type_a(n); break;
    case Family::B: r = type_b(n); break;
    case Family::C: r = type_c(n); break;
    case Family::D: r = type_d(n); break;
    case Family::G2: r = type_g2(); break;
    case Family::F4: r = type_f4(); break;
    case Family::E6: r = type_e(6); break;
    case Family::E7: r = type_e(7); break;
    case Family::E8: r = type_e(8); break;
    case Family::SLSuper:
    case Family::OSPSuper:
      throw std::invalid_argument("RootSystem: no root data for superalgebra " + id.label());
  }
  return RootSystem(id, r.dim, std::move(r.roots), std::move(r.simple));
}

RootSystem::RootSystem(AlgebraId id, std::size_t ambient_dim, std::vector<Vec> roots,
                       std::vector<Vec> simple_roots)
    : id_(id), ambient_dim_(ambient_dim), roots_(std::move(roots)),
      simple_roots_(std::move(simple_roots)) {
  const std::size_t r = simple_roots_.size();
  std::vector<Vec> gram(r, Vec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(simple_roots_[i], simple_roots_[j]);
  gram_inverse_ = invert(std::move(gram));

  Rational max_square;
  Rational best_height(-1);
  std::size_t best_count = 0;
  rho_.assign(ambient_dim_, Rational(0));
  for (const Vec& mu : roots_) {
    max_square = std::max(max_square, dot(mu, mu));
    const Vec c = simple_coordinates(mu);
    const bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.sign() >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.sign() <= 0; });
    const bool integral = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer(); });
    if (!integral || nonneg == nonpos)
      throw std::logic_error("RootSystem: root outside the simple-root cone");
    if (!nonneg) continue;
    positive_.push_back(mu);
    rho_ = rho_ + mu;
    Rational height;
    for (const auto& x : c) height += x;
    if (height > best_height) {
      best_height = height;
      theta_ = mu;
      best_count = 1;
    } else if (height == best_height) {
      ++best_count;
    }
  }
  if (best_count != 1) throw std::logic_error("RootSystem: highest root is not unique");
  if (positive_.size() * 2 != roots_.size())
    throw std::logic_error("RootSystem: roots are not symmetric under negation");
  for (auto& x : rho_) x /= Rational(2);
  scale_ = Rational(2) / max_square;
}

Vec RootSystem::simple_coordinates(const Vec& x) const {
  const std::size_t r = simple_roots_.size();
  Vec rhs(r);
  for (std::size_t i = 0; i < r; ++i) rhs[i] = dot(simple_roots_[i], x);
  Vec c(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i] += gram_inverse_[i][j] * rhs[j];
  return c;
}

Rational RootSystem::b_form(const Vec& x, const Vec& y) const {
  if (x.size() != ambient_dim_ || y.size() != ambient_dim_)
    throw std::invalid_argument("b_form: vector dimension does not match the ambient space");
  return scale_ * dot(x, y);
}

Rational RootSystem::dual_coxeter() const { return Rational(1) + b_form(rho_, theta_); }

Rational RootSystem::weyl_adjoint_dim() const {
  const Vec shifted = theta_ + rho_;
  Rational out(1);
  for (const Vec& mu : positive_) out *= b_form(shifted, mu) / b_form(rho_, mu);
  return out;
}

}  // namespace vogelcas
