#include "hopfkit/coalgebra.hpp"

#include <algorithm>
#include <set>

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

void check_in_field(const Tensor& t, const FieldSpec& field, const std::string& what) {
  for (const auto& [k, v] : t.entries())
    if (!field.contains(v)) throw Error(ErrorCode::FieldMismatch, what + " has coefficient " + v.str() + " outside " + field.name());
}

void check_in_field(const Vec& v, const FieldSpec& field, const std::string& what) {
  for (const auto& s : v)
    if (!field.contains(s)) throw Error(ErrorCode::FieldMismatch, what + " has coefficient " + s.str() + " outside " + field.name());
}

Coalgebra::Coalgebra(FieldSpec field, Names basis, Tensor comul, Tensor counit)
    : field_(std::move(field)), names_(std::move(basis)), comul_(std::move(comul)), counit_(std::move(counit)) {
  std::size_t n = names_.size();
  if (comul_.dims() != std::vector<std::size_t>{n, n, n})
    throw Error(ErrorCode::DimMismatch, "comultiplication must have shape n x n x n for n = " + std::to_string(n));
  if (counit_.dims() != std::vector<std::size_t>{n})
    throw Error(ErrorCode::DimMismatch, "counit must have length " + std::to_string(n));
  check_in_field(comul_, field_, "comultiplication");
  check_in_field(counit_, field_, "counit");
}

Scalar Coalgebra::counit_of(const Vec& x) const {
  if (x.size() != dim()) throw Error(ErrorCode::DimMismatch, "vector length differs from coalgebra dimension");
  Scalar s;
  for (const auto& [k, v] : counit_.entries()) s += v * x[k[0]];
  return s;
}

Coalgebra Coalgebra::with_field(const FieldSpec& field) const { return Coalgebra(field, names_, comul_, counit_); }

VerificationReport verify_coalgebra(const Coalgebra& c) {
  VerificationReport r;
  r.subject = "coalgebra";
  std::size_t n = c.dim();
  const Names* nm = &c.names();
  {
    Composite lhs({n}), rhs({n});
    lhs.apply(c.comul(), 1, {0}).apply(c.comul(), 1, {0});
    rhs.apply(c.comul(), 1, {0}).apply(c.comul(), 1, {1});
    r.add(compare("coalgebra.coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", lhs, rhs, {nm}, {nm, nm, nm}));
  }
  {
    Composite lhs({n}), id({n});
    lhs.apply(c.comul(), 1, {0}).apply(c.counit(), 1, {0});
    r.add(compare("coalgebra.counit-left", "(ε⊗id)Δ = id", lhs, id, {nm}, {nm}));
  }
  {
    Composite lhs({n}), id({n});
    lhs.apply(c.comul(), 1, {0}).apply(c.counit(), 1, {1});
    r.add(compare("coalgebra.counit-right", "(id⊗ε)Δ = id", lhs, id, {nm}, {nm}));
  }
  return r;
}

bool is_cocommutative(const Coalgebra& c) { return permute_legs(c.comul(), {0, 2, 1}) == c.comul(); }

Coalgebra opposite_coalgebra(const Coalgebra& c) {
  return Coalgebra(c.field(), c.names(), permute_legs(c.comul(), {0, 2, 1}), c.counit());
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  if (!(c.field() == d.field())) throw Error(ErrorCode::FieldMismatch, c.field().name() + " vs " + d.field().name());
  std::size_t m = d.dim();
  std::size_t n = c.dim() * m;
  Names names;
  for (const auto& a : c.names())
    for (const auto& h : d.names()) names.push_back(a + "⊗" + h);
  Tensor comul({n, n, n});
  for (const auto& [k1, v1] : c.comul().entries())
    for (const auto& [k2, v2] : d.comul().entries())
      comul.add({k1[0] * m + k2[0], k1[1] * m + k2[1], k1[2] * m + k2[2]}, v1 * v2);
  Tensor counit({n});
  for (const auto& [k1, v1] : c.counit().entries())
    for (const auto& [k2, v2] : d.counit().entries()) counit.add({k1[0] * m + k2[0]}, v1 * v2);
  return Coalgebra(c.field(), names, comul, counit);
}

bool is_grouplike(const Coalgebra& c, const Vec& x) {
  if (x.size() != c.dim()) return false;
  if (!c.counit_of(x).is_one()) return false;
  std::size_t n = c.dim();
  Tensor lhs({n, n}), rhs({n, n});
  for (const auto& [k, v] : c.comul().entries())
    if (!x[k[0]].is_zero()) lhs.add({k[1], k[2]}, v * x[k[0]]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rhs.add({i, j}, x[i] * x[j]);
  return lhs == rhs;
}

namespace {

// x is group-like iff eps(x) = 1 and L_i x = x_i x for L_i = (e^i (x) id) Delta,
// so group-likes are common eigenvectors of the L_i. The search splits
// invariant subspaces along eigenspaces until every L_i acts as a scalar.
class GrouplikeSearch {
 public:
  explicit GrouplikeSearch(const Coalgebra& c) : c_(c), n_(c.dim()) {
    for (std::size_t i = 0; i < n_; ++i) l_.emplace_back(n_, n_);
    for (const auto& [k, v] : c.comul().entries()) l_[k[1]](k[2], k[0]) = v;
  }

  std::vector<Vec> run() {
    Matrix w(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) w(i, i) = 1;
    search(w);
    return {found_.begin(), found_.end()};
  }

 private:
  static Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t l = 0; l < a.cols(); ++l) {
        if (a(i, l).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
          if (!b(l, j).is_zero()) out(i, j) += a(i, l) * b(l, j);
      }
    return out;
  }

  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  static Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
  }

  // Largest subspace of span(w) mapped into itself by every L_i.
  Matrix invariant_core(Matrix w) const {
    while (w.cols() > 0) {
      Matrix ann;
      for (const auto& v : kernel_basis(transpose(w))) {
        Matrix row(1, n_);
        for (std::size_t j = 0; j < n_; ++j) row(0, j) = v[j];
        ann.append_rows(row);
      }
      if (ann.rows() == 0) return w;
      Matrix stacked;
      for (const auto& li : l_) stacked.append_rows(multiply(ann, multiply(li, w)));
      auto ker = kernel_basis(stacked);
      if (ker.size() == w.cols()) return w;
      w = multiply(w, from_columns(ker, w.cols()));
    }
    return w;
  }

  // Matrix of L_i on span(w) in the coordinates of w's columns.
  Matrix restrict(const Matrix& li, const Matrix& w) const {
    Matrix img = multiply(li, w);
    Matrix r(w.cols(), w.cols());
    for (std::size_t j = 0; j < w.cols(); ++j) {
      Vec col(n_);
      for (std::size_t i = 0; i < n_; ++i) col[i] = img(i, j);
      auto y = solve(w, col);
      if (!y) throw Error(ErrorCode::ConstructionInvalid, "subspace is not invariant");
      for (std::size_t i = 0; i < w.cols(); ++i) r(i, j) = (*y)[i];
    }
    return r;
  }

  static std::optional<Scalar> scalar_value(const Matrix& r) {
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        if (i != j && !r(i, j).is_zero()) return std::nullopt;
    for (std::size_t i = 1; i < r.rows(); ++i)
      if (!(r(i, i) == r(0, 0))) return std::nullopt;
    return r(0, 0);
  }

  void search(const Matrix& w) {
    if (w.cols() == 0) return;
    std::vector<Matrix> restricted;
    for (const auto& li : l_) restricted.push_back(restrict(li, w));
    std::optional<std::size_t> split;
    Vec mu(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      auto s = scalar_value(restricted[i]);
      if (!s) {
        split = i;
        break;
      }
      mu[i] = *s;
    }
    if (!split) {
      if (is_grouplike(c_, mu)) found_.insert(mu);
      return;
    }
    const Matrix& r = restricted[*split];
    for (const auto& lambda : roots_in_field(charpoly(r), c_.field())) {
      Matrix shifted = r;
      for (std::size_t i = 0; i < r.rows(); ++i) shifted(i, i) -= lambda;
      auto ker = kernel_basis(shifted);
      Matrix sub = invariant_core(multiply(w, from_columns(ker, w.cols())));
      search(sub);
    }
  }

  const Coalgebra& c_;
  std::size_t n_;
  std::vector<Matrix> l_;
  std::set<Vec> found_;
};

}  // namespace

std::vector<Vec> find_grouplikes(const Coalgebra& c, const std::vector<Vec>& hints) {
  if (c.dim() > 4) {
    if (hints.empty()) throw Error(ErrorCode::UnsupportedDimension, "group-like search needs hints above dimension 4");
    std::set<Vec> ok;
    for (const auto& h : hints)
      if (is_grouplike(c, h)) ok.insert(h);
    return {ok.begin(), ok.end()};
  }
  return GrouplikeSearch(c).run();
}

}  // namespace hopfkit
