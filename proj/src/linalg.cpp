#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hopfkit/error.hpp"

namespace hopfkit {

Matrix::Matrix(const LinearMap& m) : Matrix(m.rows(), m.cols()) {
  for (const auto& [k, v] : m.tensor().entries()) (*this)(k[0], k[1]) = v;
}

LinearMap Matrix::to_linear_map() const {
  LinearMap m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.set(r, c, (*this)(r, c));
  return m;
}

void Matrix::append_rows(const Matrix& o) {
  if (rows_ == 0 && cols_ == 0) cols_ = o.cols_;
  if (o.cols_ != cols_) throw Error(ErrorCode::DimMismatch, "stacking matrices of different width");
  data_.insert(data_.end(), o.data_.begin(), o.data_.end());
  rows_ += o.rows_;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const LinearMap& m) { return row_reduce(Matrix(m)).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> kernel_basis(const LinearMap& m) { return kernel_basis(Matrix(m)); }

LinearMap matrix_inverse(const LinearMap& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (const auto& [k, v] : m.tensor().entries()) aug(k[0], k[1]) = v;
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = 1;
  Echelon e = row_reduce(std::move(aug));
  std::size_t r = 0;
  while (r < e.pivots.size() && e.pivots[r] < n) ++r;
  if (r < n) throw Error(ErrorCode::Singular, "matrix has rank " + std::to_string(r) + " < " + std::to_string(n));
  LinearMap inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, e.reduced(i, n + j));
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimMismatch, "right-hand side length differs from row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = row_reduce(std::move(aug));
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

Poly charpoly(const Matrix& a) {
  // Faddeev-LeVerrier: exact in characteristic zero.
  std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::DimMismatch, "characteristic polynomial of a non-square matrix");
  Poly c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar s;
        for (std::size_t l = 0; l < n; ++l)
          if (!a(i, l).is_zero() && !m(l, j).is_zero()) s += a(i, l) * m(l, j);
        if (i == j) s += c[n - k + 1];
        next(i, j) = s;
      }
    m = std::move(next);
    Scalar tr;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (!a(i, l).is_zero() && !m(l, i).is_zero()) tr += a(i, l) * m(l, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

using ZPoly = std::vector<mpz_class>;

const mpz_class kFactorLimit("1000000000000");

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) return {};
  if (n > kFactorLimit)
    throw Error(ErrorCode::UnsupportedDimension, "coefficient " + n.get_str() + " too large for exact root search");
  std::vector<mpz_class> divs{1};
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::size_t base = divs.size();
    mpz_class pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  if (n > 1) {
    std::size_t base = divs.size();
    for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * n);
  }
  return divs;
}

mpz_class eval_z(const ZPoly& q, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class eval_q(const ZPoly& q, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Primitive integer multiple of a rational polynomial, trailing zeros dropped.
ZPoly to_zpoly(const std::vector<mpq_class>& p) {
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.get_den());
  ZPoly z;
  for (const auto& c : p) z.push_back(mpz_class(c * l));
  while (!z.empty() && z.back() == 0) z.pop_back();
  mpz_class g = 0;
  for (const auto& c : z) g = gcd(g, c);
  if (g > 1)
    for (auto& c : z) c /= g;
  return z;
}

// Divides q by (den*t - num), assuming exact divisibility.
ZPoly deflate(const ZPoly& q, const mpq_class& root) {
  std::vector<mpq_class> out(q.size() - 1);
  mpq_class carry = 0;
  for (std::size_t i = q.size() - 1; i-- > 0;) {
    carry = carry * root + q[i + 1];
    out[i] = carry;
  }
  return to_zpoly(out);
}

}  // namespace

std::vector<Scalar> roots_in_field(const Poly& p_in, const FieldSpec& field) {
  Poly p = p_in;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.size() <= 1) return {};
  for (const auto& c : p)
    if (!field.contains(c)) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient outside " + field.name());

  // Rational polynomial with the same roots in the field.
  bool rational = std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.is_rational(); });
  std::vector<mpq_class> qcoef;
  if (rational) {
    for (const auto& c : p) qcoef.push_back(c.rational_part());
  } else {
    Poly prod(2 * p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) prod[i + j] += p[i] * p[j].conjugate();
    for (const auto& c : prod) qcoef.push_back(c.rational_part());
  }
  ZPoly q = to_zpoly(qcoef);

  std::set<Scalar> candidates;
  while (q.size() > 1 && q[0] == 0) {
    candidates.insert(Scalar());
    q.erase(q.begin());
  }
  // Rational roots: num | constant term, den | leading term.
  if (q.size() > 1) {
    std::vector<mpq_class> found;
    for (const auto& num : positive_divisors(q.front()))
      for (const auto& den : positive_divisors(q.back()))
        for (int sign : {1, -1}) {
          mpq_class r(num * sign, den);
          r.canonicalize();
          if (eval_q(q, r) == 0) found.push_back(r);
        }
    for (const auto& r : found) {
      candidates.insert(Scalar(r));
      while (q.size() > 1 && eval_q(q, r) == 0) q = deflate(q, r);
    }
  }
  // Conjugate pairs: rational quadratic factors v t^2 + w t + z, located by
  // their values at 0, 1 and -1 (Kronecker), which must divide q's values there.
  if (field.d && q.size() > 2) {
    const mpz_class d = *field.d;
    mpz_class y0 = eval_z(q, 0), y1 = eval_z(q, 1), ym = eval_z(q, -1);
    auto d0 = positive_divisors(y0), d1 = positive_divisors(y1), dm = positive_divisors(ym);
    for (const auto& a0 : d0)
      for (int s0 : {1, -1})
        for (const auto& a1 : d1)
          for (int s1 : {1, -1})
            for (const auto& am : dm)
              for (int sm : {1, -1}) {
                mpz_class z = a0 * s0, f1 = a1 * s1, fm = am * sm;
                mpz_class w2 = f1 - fm, v2 = f1 + fm - 2 * z;
                if (w2 % 2 != 0 || v2 % 2 != 0) continue;
                mpz_class w = w2 / 2, v = v2 / 2;
                if (v <= 0) continue;
                mpz_class disc = w * w - 4 * v * z;
                mpz_class sq = disc * d;
                if (sq <= 0 || !mpz_perfect_square_p(sq.get_mpz_t())) continue;
                mpz_class root = sqrt(sq);
                // sqrt(disc) = (root/|d|) sqrt(d)
                mpq_class re(-w, 2 * v), im(root, 2 * v * abs(d));
                re.canonicalize();
                im.canonicalize();
                candidates.insert(Scalar(re, im, *field.d));
                candidates.insert(Scalar(re, -im, *field.d));
              }
  }
  std::vector<Scalar> roots;
  for (const auto& c : candidates)
    if (eval(p, c).is_zero()) roots.push_back(c);
  return roots;
}

}  // namespace hopfkit
