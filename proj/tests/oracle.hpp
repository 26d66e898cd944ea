#pragma once

// Reference computations written with plain nested loops over dense
// coordinates. They read structure tensors entry by entry and share no code
// with the composite engine, so they serve as an independent check.

#include <vector>

#include "hopfkit/heap.hpp"
#include "hopfkit/linalg.hpp"

namespace oracle {

using hopfkit::LinearMap;
using hopfkit::Scalar;
using hopfkit::Tensor;
using hopfkit::Vec;

// Element of V⊗V with coordinates m[j][k].
using Mat2 = std::vector<Vec>;

inline Vec basis(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

inline Vec apply(const LinearMap& f, const Vec& v) {
  Vec out(f.rows());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) out[r] += f.at(r, c) * v[c];
  return out;
}

inline Scalar counit(const Tensor& eps, const Vec& a) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += eps.at({i}) * a[i];
  return s;
}

inline Mat2 comul(const Tensor& d, const Vec& a) {
  std::size_t n = a.size();
  Mat2 m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m[j][k] += a[i] * d.at({i, j, k});
  return m;
}

inline Mat2 outer(const Vec& a, const Vec& b) {
  Mat2 m(a.size(), Vec(b.size()));
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < b.size(); ++k) m[j][k] = a[j] * b[k];
  return m;
}

inline Vec bracket(const Tensor& x, const Vec& a, const Vec& b, const Vec& c) {
  std::size_t n = a.size();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar w = a[i] * b[j] * c[k];
        if (w.is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) out[l] += w * x.at({i, j, k, l});
      }
  return out;
}

inline Vec mul(const Tensor& m, const Vec& a, const Vec& b) {
  std::size_t n = a.size();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar w = a[i] * b[j];
      if (w.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += w * m.at({i, j, k});
    }
  return out;
}

// Coordinates c[i][j][k] of (Δ⊗id)Δ(a).
inline std::vector<Mat2> comul3(const Tensor& d, const Vec& a) {
  std::size_t n = a.size();
  Mat2 m = comul(d, a);
  std::vector<Mat2> out(n, Mat2(n, Vec(n)));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t k = 0; k < n; ++k) {
      if (m[p][k].is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j][k] += m[p][k] * d.at({p, i, j});
    }
  return out;
}

inline Vec lin(const Vec& a, const Scalar& s, const Vec& b, const Scalar& t) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] + t * b[i];
  return out;
}

// Coordinates change y = q x applied to a coalgebra.
inline hopfkit::Coalgebra change_basis(const hopfkit::Coalgebra& c, const LinearMap& q) {
  std::size_t n = c.dim();
  LinearMap qi = hopfkit::matrix_inverse(q);
  Tensor d({n, n, n});
  Tensor e({n});
  for (std::size_t a = 0; a < n; ++a) {
    Vec old = qi.column(a);
    Mat2 m = comul(c.comul(), old);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        Scalar s;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) s += q.at(b, j) * q.at(cc, k) * m[j][k];
        d.set({a, b, cc}, s);
      }
    e.set({a}, counit(c.counit(), old));
  }
  return hopfkit::Coalgebra(c.field(), c.names(), d, e);
}

}  // namespace oracle
