#include "slicebound/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slicebound {

namespace {

IntMatrix skew_part(const IntMatrix& s) { return s - s.transpose(); }

}  // namespace

SeifertMatrix::SeifertMatrix(IntMatrix entries, std::string name)
    : entries_(std::move(entries)), name_(std::move(name)) {
  if (!entries_.is_square())
    throw InvalidSeifertMatrix("Seifert matrix must be square, got " + std::to_string(entries_.rows()) + "x" +
                                   std::to_string(entries_.cols()),
                               std::nullopt);
  if (entries_.rows() % 2 != 0)
    throw InvalidSeifertMatrix("Seifert matrix must have even size, got " + std::to_string(entries_.rows()),
                               std::nullopt);
  Integer d = determinant(skew_part(entries_));
  if (d != 1 && d != -1)
    throw InvalidSeifertMatrix("det(S - S^T) = " + d.get_str() + ", expected +-1", d);
}

SeifertMatrix SeifertMatrix::renamed(std::string name) const {
  SeifertMatrix r = *this;
  r.name_ = std::move(name);
  return r;
}

PolyMatrix alexander_presentation(const SeifertMatrix& s) {
  const std::size_t n = s.size();
  PolyMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = LaurentPoly::monomial(Rational(s(i, j)), 1) - LaurentPoly(Rational(s(j, i)));
  return p;
}

UnitClass alexander_polynomial(const SeifertMatrix& s) {
  // det(tS - S^T) has degree <= n; interpolate from integer determinants
  // at t = 0..n instead of running elimination over Q[t].
  const std::size_t n = s.size();
  std::vector<Rational> xs, ys;
  const IntMatrix st = s.entries().transpose();
  for (std::size_t k = 0; k <= n; ++k) {
    const Integer tk(static_cast<unsigned long>(k));
    xs.emplace_back(tk);
    ys.emplace_back(determinant(tk * s.entries() - st));
  }
  return UnitClass(interpolate(xs, ys));
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  std::string name;
  if (a.size() == 0)
    name = b.name();
  else if (b.size() == 0)
    name = a.name();
  else if (!a.name().empty() || !b.name().empty())
    name = a.name() + " # " + b.name();
  return SeifertMatrix(block_diagonal(a.entries(), b.entries()), name);
}

SeifertMatrix block_sum(const std::vector<SeifertMatrix>& parts) {
  SeifertMatrix acc;
  for (const auto& p : parts) acc = block_sum(acc, p);
  return acc;
}

SeifertMatrix repeat(const SeifertMatrix& s, std::size_t k) {
  IntMatrix m;
  for (std::size_t i = 0; i < k; ++i) m = block_diagonal(m, s.entries());
  std::string name = k == 1 ? s.name() : std::to_string(k) + "x(" + s.name() + ")";
  return SeifertMatrix(m, k == 0 ? "unknot" : name);
}

SeifertMatrix concordance_inverse(const SeifertMatrix& s) {
  return SeifertMatrix(-s.entries(), s.name().empty() ? std::string{} : "-(" + s.name() + ")");
}

SeifertMatrix mirror(const SeifertMatrix& s) {
  return SeifertMatrix(-s.entries().transpose(), s.name().empty() ? std::string{} : "mirror(" + s.name() + ")");
}

SeifertMatrix congruent(const SeifertMatrix& s, const IntMatrix& p) {
  if (!p.is_square() || p.rows() != s.size()) throw DomainError("congruent: change of basis has the wrong shape");
  Integer d = determinant(p);
  if (d != 1 && d != -1) throw DomainError("congruent: change of basis is not unimodular");
  return SeifertMatrix(p.transpose() * s.entries() * p, s.name());
}

namespace {

Integer bilinear(const std::vector<Integer>& v, const IntMatrix& s, const std::vector<Integer>& w) {
  Integer acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < w.size(); ++j) row += s(i, j) * w[j];
    acc += v[i] * row;
  }
  return acc;
}

}  // namespace

bool metabolizer_check(const SeifertMatrix& s, const MetabolizerCertificate& m, SummandMode mode) {
  const std::size_t n = s.size();
  const std::size_t r = n / 2;
  if (m.basis.size() != r)
    throw DomainError("metabolizer basis has " + std::to_string(m.basis.size()) + " vectors, expected " +
                      std::to_string(r));
  IntMatrix basis(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    if (m.basis[j].size() != n)
      throw DomainError("metabolizer vector " + std::to_string(j) + " has length " +
                        std::to_string(m.basis[j].size()) + ", expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = m.basis[j][i];
  }
  if (rank(to_rational(basis)) != r) throw DomainError("metabolizer basis vectors are linearly dependent");

  for (const auto& v : m.basis)
    for (const auto& w : m.basis)
      if (bilinear(v, s.entries(), w) != 0) return false;

  if (mode == SummandMode::rational) return true;
  const auto divisors = elementary_divisors(basis);
  return divisors.size() == r && std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; });
}

MetabolizerCertificate diagonal_metabolizer(std::size_t n) {
  MetabolizerCertificate cert;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> v(2 * n, 0);
    v[i] = 1;
    v[n + i] = 1;
    cert.basis.push_back(std::move(v));
  }
  return cert;
}

bool fox_milnor_check(const UnitClass& delta, const LaurentPoly& f) {
  if (f.is_zero()) return false;
  return UnitClass(f * f.involute()) == delta;
}

namespace {

// Upper-left Hankel matrix B(i, j) = c_{i+j+1} (c_m = 1); C * B is symmetric
// for the companion matrix C of the monic polynomial with coefficients c.
IntMatrix hankel_symmetrizer(const std::vector<Integer>& c) {
  const std::size_t m = c.size() - 1;
  IntMatrix b(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j + 1 <= m; ++j) b(i, j) = c[i + j + 1];
  return b;
}

IntMatrix companion(const std::vector<Integer>& c) {
  const std::size_t m = c.size() - 1;
  IntMatrix cm(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) cm(i + 1, i) = 1;
  for (std::size_t i = 0; i < m; ++i) cm(i, m - 1) = -c[i];
  return cm;
}

IntMatrix integral_inverse(const IntMatrix& m) {
  RatMatrix inv = inverse(to_rational(m));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (inv(i, j).get_den() != 1) throw std::logic_error("integral_inverse: matrix is not unimodular");
      out(i, j) = inv(i, j).get_num();
    }
  return out;
}

}  // namespace

SeifertMatrix realize_alexander(const LaurentPoly& delta) {
  if (delta.is_zero()) throw DomainError("realize_alexander: zero polynomial");
  if (!delta.has_integer_coefficients())
    throw DomainError("realize_alexander: coefficients must be integers, got " + delta.to_string());
  if (!is_symmetric(delta))
    throw DomainError("realize_alexander: symmetry condition fails, " + delta.to_string() +
                      " is not +-t^k times its image under t -> t^-1");
  const Rational at_one = eval_at_one(delta);
  if (at_one != 1 && at_one != -1)
    throw DomainError("realize_alexander: normalization condition fails, value at t = 1 is " + at_one.get_str());

  LaurentPoly d = delta.shifted(-delta.low());
  if (at_one == -1) d = -d;
  const long degree = d.high();
  if (degree % 2 != 0) throw std::logic_error("realize_alexander: odd degree survived the symmetry check");
  const long m = degree / 2;
  if (m == 0) return SeifertMatrix(IntMatrix(), "unknot");

  const LaurentPoly x = LaurentPoly::t();
  const LaurentPoly p = trace_polynomial(d);
  // With u = x - 2 = (t - 1)^2 / t we need an integer matrix M with
  // det(I + u M) = q(u) = p(u + 2); then S = [[X, I], [0, Y]] with X, Y
  // symmetric and XY = M gives det(tS - S^T) = t^m det(I + u M).
  const LaurentPoly q = compose(p, x + LaurentPoly(2));
  if (q.coeff(0) != 1) throw std::logic_error("realize_alexander: q(0) != 1");
  // M = companion of lambda^m - q_1 lambda^(m-1) + q_2 lambda^(m-2) - ...
  std::vector<Integer> chi(static_cast<std::size_t>(m) + 1);
  for (long k = 0; k <= m; ++k) {
    Rational qk = q.coeff(k);
    if (k % 2 != 0) qk = -qk;
    chi[static_cast<std::size_t>(m - k)] = qk.get_num();
  }
  const IntMatrix cm = companion(chi);
  const IntMatrix b = hankel_symmetrizer(chi);
  const IntMatrix xs = cm * b;
  const IntMatrix ys = integral_inverse(b);

  const std::size_t mm = static_cast<std::size_t>(m);
  IntMatrix s(2 * mm, 2 * mm);
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) {
      s(i, j) = xs(i, j);
      s(mm + i, mm + j) = ys(i, j);
    }
  for (std::size_t i = 0; i < mm; ++i) s(i, mm + i) = 1;

  SeifertMatrix result(std::move(s), "realize(" + unit_normalize(delta).to_string() + ")");
  if (!(alexander_polynomial(result) == unit_normalize(delta)))
    throw std::logic_error("realize_alexander: postcondition failed for " + delta.to_string());
  return result;
}

namespace {

// Accepts "torus(2,5)" as well as name "torus" with params {2, 5}.
void split_call(std::string& name, std::vector<long>& params) {
  auto open = name.find('(');
  if (open == std::string::npos) return;
  if (name.back() != ')') throw DomainError("catalog: malformed name '" + name + "'");
  std::string inner = name.substr(open + 1, name.size() - open - 2);
  name = name.substr(0, open);
  std::stringstream ss(inner);
  std::string item;
  params.clear();
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw DomainError("catalog: bad parameter '" + item + "'");
      params.push_back(v);
    } catch (const std::logic_error&) {
      throw DomainError("catalog: bad parameter '" + item + "'");
    }
  }
}

IntMatrix band_matrix(std::size_t n) {
  IntMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = -1;
    if (i + 1 < n) s(i, i + 1) = 1;
  }
  return s;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"unknot", "trefoil", "figure-eight", "torus(2,q)", "twist(k)"}; }

SeifertMatrix catalog(const std::string& raw_name, const std::vector<long>& raw_params) {
  std::string name = raw_name;
  std::vector<long> params = raw_params;
  split_call(name, params);
  auto expect_params = [&](std::size_t n) {
    if (params.size() != n)
      throw DomainError("catalog: '" + name + "' takes " + std::to_string(n) + " parameter(s), got " +
                        std::to_string(params.size()));
  };
  if (name == "unknot") {
    expect_params(0);
    return SeifertMatrix(IntMatrix(), "unknot");
  }
  if (name == "trefoil") {
    expect_params(0);
    return SeifertMatrix(band_matrix(2), "trefoil");
  }
  if (name == "figure-eight" || name == "figure8") {
    expect_params(0);
    return SeifertMatrix(IntMatrix(2, 2, {1, 1, 0, -1}), "figure-eight");
  }
  if (name == "torus") {
    expect_params(2);
    if (params[0] != 2) throw DomainError("catalog: only (2,q) torus knots are available");
    const long q = params[1];
    if (q < 1 || q % 2 == 0) throw DomainError("catalog: torus(2,q) needs odd q >= 1");
    return SeifertMatrix(band_matrix(static_cast<std::size_t>(q - 1)),
                         "torus(2," + std::to_string(q) + ")");
  }
  if (name == "twist") {
    expect_params(1);
    return SeifertMatrix(IntMatrix(2, 2, {-1, 1, 0, params[0]}), "twist(" + std::to_string(params[0]) + ")");
  }
  throw DomainError("catalog: unknown knot '" + raw_name + "'");
}

std::size_t genus_from_matrix(const SeifertMatrix& s) { return s.size() / 2; }

}  // namespace slicebound
