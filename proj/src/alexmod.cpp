#include "slicebound/alexmod.hpp"

#include <algorithm>
#include <numeric>

namespace slicebound {

PresentationMatrix present(const SeifertMatrix& s) { return PresentationMatrix{alexander_presentation(s)}; }

// ---------------------------------------------------------------------------
// Smith form

namespace {

// Positive rational multiple of v with integral coefficients of content 1;
// a unit rescaling that keeps coefficient growth in check.
void normalize_content(std::vector<LaurentPoly*> entries) {
  Integer den = 1, num = 0;
  for (const LaurentPoly* p : entries)
    for (const auto& c : p->coefficients()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
  for (const LaurentPoly* p : entries)
    for (const auto& c : p->coefficients()) {
      Integer n = c.get_num() * (den / c.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
  if (num == 0) return;
  const LaurentPoly scale(make_rational(den, num));
  for (LaurentPoly* p : entries) *p *= scale;
}

void normalize_row(PolyMatrix& a, std::size_t i) {
  std::vector<LaurentPoly*> v;
  for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(&a(i, j));
  normalize_content(v);
}

void normalize_col(PolyMatrix& a, std::size_t j) {
  std::vector<LaurentPoly*> v;
  for (std::size_t i = 0; i < a.rows(); ++i) v.push_back(&a(i, j));
  normalize_content(v);
}

// Diagonalizes a in place by Euclidean row and column operations and returns
// the nonzero diagonal entries (no divisibility guaranteed).
std::vector<LaurentPoly> diagonalize(PolyMatrix a) {
  std::vector<LaurentPoly> diag;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // Global pivot: smallest span, first in row-major order.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (!a(i, j).is_zero() && (pi == rows || a(i, j).span() < a(pi, pj).span())) pi = i, pj = j;
    if (pi == rows) break;
    a.swap_rows(k, pi);
    a.swap_cols(k, pj);
    while (true) {
      // Bring the smallest entry of row k / column k to (k, k).
      std::size_t bi = k, bj = k;
      for (std::size_t i = k + 1; i < rows; ++i)
        if (!a(i, k).is_zero() && a(i, k).span() < a(bi, bj).span()) bi = i, bj = k;
      for (std::size_t j = k + 1; j < cols; ++j)
        if (!a(k, j).is_zero() && a(k, j).span() < a(bi, bj).span()) bi = k, bj = j;
      a.swap_rows(k, bi);
      a.swap_cols(k, bj);
      bool clean = true;
      const LaurentPoly pivot = a(k, k);
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a(i, k).is_zero()) continue;
        const LaurentPoly q = divmod(a(i, k), pivot).first;
        for (std::size_t j = k; j < cols; ++j)
          if (!a(k, j).is_zero()) a(i, j) -= q * a(k, j);
        normalize_row(a, i);
        if (!a(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a(k, j).is_zero()) continue;
        const LaurentPoly q = divmod(a(k, j), pivot).first;
        for (std::size_t i = k; i < rows; ++i)
          if (!a(i, k).is_zero()) a(i, j) -= q * a(i, k);
        normalize_col(a, j);
        if (!a(k, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(a(k, k));
  }
  return diag;
}

// Connected components of the bipartite row/column graph of nonzero entries.
std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks(const PolyMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::size_t> parent(r + c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!m(i, j).is_zero()) parent[find(i)] = find(r + j);
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
  std::vector<std::size_t> index(r + c, SIZE_MAX);
  for (std::size_t x = 0; x < r + c; ++x) {
    const std::size_t root = find(x);
    if (index[root] == SIZE_MAX) {
      index[root] = out.size();
      out.emplace_back();
    }
    auto& blk = out[index[root]];
    (x < r ? blk.first : blk.second).push_back(x < r ? x : x - r);
  }
  return out;
}

LaurentPoly normalized(const LaurentPoly& p) { return p.is_unit() ? LaurentPoly(1) : primitive_associate(p); }

}  // namespace

std::vector<LaurentPoly> smith_diagonal(const PolyMatrix& m) {
  std::vector<LaurentPoly> diag;
  for (const auto& [rows, cols] : blocks(m)) {
    if (rows.empty() || cols.empty()) continue;
    PolyMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    for (auto& d : diagonalize(std::move(sub))) diag.push_back(normalized(d));
  }
  // diag(a, b) ~ diag(gcd, lcm) enforces the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i].is_unit()) break;
      const LaurentPoly g = gcd(diag[i], diag[j]);
      diag[j] = normalized(exact_div(diag[i] * diag[j], g));
      diag[i] = normalized(g);
    }
  return diag;
}

AlexanderModule smith_form(const PresentationMatrix& p) {
  if (!p.entries.is_square()) throw DomainError("smith_form: presentation is not square");
  const auto diag = smith_diagonal(p.entries);
  if (diag.size() < p.entries.rows())
    throw DomainError("smith_form: presentation is singular, the module is not torsion");
  AlexanderModule out;
  for (const auto& d : diag)
    if (!d.is_unit()) out.invariant_factors.push_back(d);
  return out;
}

std::size_t min_generators(const AlexanderModule& a) { return a.invariant_factors.size(); }

bool extension_gate(const AlexanderModule& a, std::size_t beta2) { return min_generators(a) > beta2; }

// ---------------------------------------------------------------------------
// Q(t) / Q[t, t^-1]

namespace {

LaurentPoly poly_mod(const LaurentPoly& p, const LaurentPoly& d) {
  return p.is_zero() ? p : polynomial_divmod(p, d).second;
}

}  // namespace

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : den_(1) {
  if (den.is_zero()) throw DomainError("RationalFunction: zero denominator");
  if (num.is_zero()) return;
  // Clear powers of t from the denominator; they are units.
  LaurentPoly n = num.shifted(-den.low());
  LaurentPoly d = den.shifted(-den.low());
  const LaurentPoly g = gcd(n, d);
  n = exact_div(n, g);
  d = exact_div(d, g);
  const LaurentPoly prim = primitive_associate(d);
  n *= LaurentPoly(prim.leading() / d.leading());
  d = prim;
  if (d.is_constant()) return;
  // t is invertible modulo d: t * e = -d(0) with e = (d - d(0)) / t.
  const long shift = n.low();
  LaurentPoly r = poly_mod(n.shifted(-shift), d);
  if (shift > 0) {
    for (long k = 0; k < shift; ++k) r = poly_mod(r * LaurentPoly::t(), d);
  } else if (shift < 0) {
    const Rational d0 = d.coeff(0);
    const LaurentPoly t_inv = (d - LaurentPoly(d0)).shifted(-1) * LaurentPoly(-1 / d0);
    for (long k = 0; k < -shift; ++k) r = poly_mod(r * t_inv, d);
  }
  num_ = r;
  if (!num_.is_zero()) den_ = d;
}

RationalFunction RationalFunction::involute() const { return RationalFunction(num_.involute(), den_.involute()); }

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

// ---------------------------------------------------------------------------
// Blanchfield form

namespace {

Rational rational_determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

LaurentPoly conj_dot(const ModuleElement& x, const std::vector<LaurentPoly>& v) {
  LaurentPoly acc;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !v[i].is_zero()) acc += x[i].involute() * v[i];
  return acc;
}

std::vector<LaurentPoly> apply(const PolyMatrix& m, const ModuleElement& x) {
  std::vector<LaurentPoly> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !x[j].is_zero()) out[i] += m(i, j) * x[j];
  return out;
}

void check_element(const BlanchfieldForm& f, const ModuleElement& x) {
  if (x.size() != f.size()) throw DomainError("module element has the wrong length");
}

// Column operations bringing m to lower echelon form; u tracks the
// unimodular transform (m_in * u = m_out) when non-null.  Returns the pivot
// row of each of the first `rank` columns; the remaining columns are zero.
std::vector<std::size_t> column_echelon(PolyMatrix& m, PolyMatrix* u) {
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  auto combine = [&](PolyMatrix& a, std::size_t c1, std::size_t c2, const LaurentPoly& p11, const LaurentPoly& p12,
                     const LaurentPoly& p21, const LaurentPoly& p22) {
    // (c1, c2) <- (p11 c1 + p21 c2, p12 c1 + p22 c2)
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const LaurentPoly x = a(i, c1), y = a(i, c2);
      if (x.is_zero() && y.is_zero()) continue;
      a(i, c1) = p11 * x + p21 * y;
      a(i, c2) = p12 * x + p22 * y;
    }
  };
  for (std::size_t row = 0; row < m.rows() && k < m.cols(); ++row) {
    for (std::size_t j = k + 1; j < m.cols(); ++j) {
      if (m(row, j).is_zero()) continue;
      if (m(row, k).is_zero()) {
        m.swap_cols(k, j);
        if (u) u->swap_cols(k, j);
        continue;
      }
      const LaurentPoly alpha = m(row, k), beta = m(row, j);
      const Bezout b = extended_gcd(alpha, beta);
      const LaurentPoly a_g = exact_div(alpha, b.g), b_g = exact_div(beta, b.g);
      combine(m, k, j, b.u, -b_g, b.v, a_g);
      if (u) combine(*u, k, j, b.u, -b_g, b.v, a_g);
    }
    if (!m(row, k).is_zero()) {
      pivots.push_back(row);
      ++k;
    }
  }
  return pivots;
}

}  // namespace

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw DomainError("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  long max_deg = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      if (m(i, j).low() < 0) throw DomainError("adjugate: negative exponent");
      max_deg = std::max(max_deg, m(i, j).high());
    }
  const std::size_t points = static_cast<std::size_t>(max_deg) * (n - 1) + 1;
  std::vector<Rational> xs;
  std::vector<RatMatrix> values;
  for (long x = 1; xs.size() < points; ++x) {
    if (x > static_cast<long>(points + n * static_cast<std::size_t>(max_deg) + 2))
      throw DomainError("adjugate: matrix is singular");
    RatMatrix at(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).eval(x);
    const Rational det = rational_determinant(at);
    if (det == 0) continue;
    xs.emplace_back(x);
    RatMatrix inv = inverse(at);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) *= det;
    values.push_back(std::move(inv));
  }
  PolyMatrix adj(n, n);
  std::vector<Rational> ys(points);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < points; ++k) ys[k] = values[k](i, j);
      adj(i, j) = interpolate(xs, ys);
    }
  return adj;
}

BlanchfieldForm blanchfield(const SeifertMatrix& s) {
  BlanchfieldForm f;
  f.presentation_ = present(s);
  const std::size_t n = s.size();
  f.det_ = n == 0 ? LaurentPoly(1) : determinant(f.presentation_.entries);
  if (f.det_.is_zero()) throw DomainError("blanchfield: Alexander polynomial vanishes");
  f.adjugate_ = adjugate(f.presentation_.entries);
  f.gram_ = Matrix<RationalFunction>(n, n);
  const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.gram_(i, j) = RationalFunction(one_minus_t * f.adjugate_(i, j), f.det_);
  return f;
}

RationalFunction BlanchfieldForm::pair(const ModuleElement& x, const ModuleElement& y) const {
  check_element(*this, x);
  check_element(*this, y);
  const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
  return RationalFunction(one_minus_t * conj_dot(x, apply(adjugate_, y)), det_);
}

bool BlanchfieldForm::is_zero_element(const ModuleElement& x) const {
  check_element(*this, x);
  for (const auto& c : apply(adjugate_, x))
    if (!divides(det_, c)) return false;
  return true;
}

bool BlanchfieldForm::contains(const Submodule& b, const ModuleElement& x) const {
  check_element(*this, x);
  const std::size_t n = size();
  PolyMatrix m(n, n + b.generators.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = presentation_.entries(i, j);
  for (std::size_t g = 0; g < b.generators.size(); ++g) {
    check_element(*this, b.generators[g]);
    for (std::size_t i = 0; i < n; ++i) m(i, n + g) = b.generators[g][i];
  }
  const auto pivots = column_echelon(m, nullptr);
  ModuleElement r = x;
  std::size_t c = 0;
  for (std::size_t row = 0; row < n; ++row) {
    if (c < pivots.size() && pivots[c] == row) {
      auto [q, rem] = divmod(r[row], m(row, c));
      if (!rem.is_zero()) return false;
      for (std::size_t i = row; i < n; ++i)
        if (!m(i, c).is_zero()) r[i] -= q * m(i, c);
      ++c;
    } else if (!r[row].is_zero()) {
      return false;
    }
  }
  return true;
}

bool BlanchfieldForm::is_proper(const Submodule& b) const {
  const std::size_t n = size();
  PolyMatrix m(n, n + b.generators.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = presentation_.entries(i, j);
  for (std::size_t g = 0; g < b.generators.size(); ++g) {
    check_element(*this, b.generators[g]);
    for (std::size_t i = 0; i < n; ++i) m(i, n + g) = b.generators[g][i];
  }
  const auto diag = smith_diagonal(m);
  return diag.size() < n || std::any_of(diag.begin(), diag.end(), [](const LaurentPoly& d) { return !d.is_unit(); });
}

Submodule perp(const BlanchfieldForm& form, const Submodule& b) {
  const std::size_t n = form.size();
  const LaurentPoly& delta = form.determinant();
  auto reduce = [&](const LaurentPoly& p) { return p.is_zero() ? p : divmod(p, delta).second; };
  Submodule out;
  if (b.generators.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      ModuleElement e(n);
      e[i] = 1;
      out.generators.push_back(std::move(e));
    }
    return out;
  }
  // Bl(b, y) = (1 - t) conj(b)^T adj(P) y / Delta and 1 - t is a unit modulo
  // Delta, so y is orthogonal to b iff conj(b)^T adj(P) y = 0 mod Delta.
  const std::size_t k = b.generators.size();
  PolyMatrix system(k, n + k);
  for (std::size_t g = 0; g < k; ++g) {
    check_element(form, b.generators[g]);
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly acc;
      for (std::size_t i = 0; i < n; ++i)
        if (!b.generators[g][i].is_zero()) acc += b.generators[g][i].involute() * form.adjugate()(i, j);
      system(g, j) = reduce(acc);
    }
    system(g, n + g) = delta;
  }
  PolyMatrix u = PolyMatrix::identity(n + k);
  const std::size_t rank = column_echelon(system, &u).size();
  for (std::size_t c = rank; c < n + k; ++c) {
    ModuleElement y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = reduce(u(i, c));
    if (!form.is_zero_element(y)) out.generators.push_back(std::move(y));
  }
  return out;
}

}  // namespace slicebound
