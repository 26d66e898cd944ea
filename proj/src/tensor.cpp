#include "hopfkit/tensor.hpp"

#include <algorithm>
#include <string>

#include "hopfkit/error.hpp"

namespace hopfkit {

Index::Index(std::initializer_list<std::size_t> idx) {
  for (auto i : idx) push_back(i);
}

void Index::push_back(std::size_t value) {
  if (n_ >= kMaxLegs) throw Error(ErrorCode::DimMismatch, "too many tensor legs");
  v_[n_++] = static_cast<std::uint8_t>(value);
}

Tensor::Tensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.size() > kMaxLegs) throw Error(ErrorCode::DimMismatch, "too many tensor legs");
  for (auto d : dims_)
    if (d > kMaxDim) throw Error(ErrorCode::DimMismatch, "leg dimension " + std::to_string(d) + " too large");
}

Tensor Tensor::one() {
  Tensor t;
  t.entries_.emplace(Index{}, Scalar(1));
  return t;
}

Tensor Tensor::vector(const Vec& v) {
  Tensor t({v.size()});
  for (std::size_t i = 0; i < v.size(); ++i) t.set({i}, v[i]);
  return t;
}

Tensor Tensor::basis_vector(std::size_t n, std::size_t i) {
  Tensor t({n});
  t.set({i}, 1);
  return t;
}

void Tensor::check_index(const Index& idx) const {
  if (idx.size() != dims_.size())
    throw Error(ErrorCode::DimMismatch,
                "index of length " + std::to_string(idx.size()) + " for a tensor with " + std::to_string(dims_.size()) + " legs");
  for (std::size_t l = 0; l < idx.size(); ++l)
    if (idx[l] >= dims_[l])
      throw Error(ErrorCode::DimMismatch,
                  "index " + std::to_string(idx[l]) + " out of range on a leg of dimension " + std::to_string(dims_[l]));
}

Scalar Tensor::at(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Scalar() : it->second;
}

void Tensor::set(const Index& idx, const Scalar& value) {
  check_index(idx);
  if (value.is_zero())
    entries_.erase(idx);
  else
    entries_[idx] = value;
}

void Tensor::add(const Index& idx, const Scalar& value) {
  if (value.is_zero()) return;
  check_index(idx);
  auto [it, inserted] = entries_.try_emplace(idx, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Tensor Tensor::scaled(const Scalar& s) const {
  Tensor r(dims_);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : entries_) r.entries_.emplace_hint(r.entries_.end(), k, v * s);
  return r;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (dims_ != o.dims_) throw Error(ErrorCode::DimMismatch, "adding tensors of different shapes");
  Tensor r = *this;
  for (const auto& [k, v] : o.entries_) r.add(k, v);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + o.scaled(-1); }

Vec Tensor::to_vec() const {
  if (arity() != 1) throw Error(ErrorCode::DimMismatch, "not a vector");
  Vec v(dims_[0]);
  for (const auto& [k, s] : entries_) v[k[0]] = s;
  return v;
}

Tensor contract(const Tensor& t1, const Tensor& t2, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<bool> used1(t1.arity(), false), used2(t2.arity(), false);
  for (auto [a, b] : pairs) {
    if (a >= t1.arity() || b >= t2.arity()) throw Error(ErrorCode::DimMismatch, "contraction leg out of range");
    if (used1[a] || used2[b]) throw Error(ErrorCode::DimMismatch, "contraction legs must be disjoint");
    if (t1.dim(a) != t2.dim(b)) throw Error(ErrorCode::DimMismatch, "contracted legs differ in dimension");
    used1[a] = used2[b] = true;
  }
  std::vector<std::size_t> free1, free2, dims;
  for (std::size_t l = 0; l < t1.arity(); ++l)
    if (!used1[l]) free1.push_back(l), dims.push_back(t1.dim(l));
  for (std::size_t l = 0; l < t2.arity(); ++l)
    if (!used2[l]) free2.push_back(l), dims.push_back(t2.dim(l));

  // Group t2 entries by their values on the paired legs.
  std::map<Index, std::vector<const Tensor::Entries::value_type*>> by_key;
  for (const auto& e : t2.entries()) {
    Index key;
    for (auto [a, b] : pairs) key.push_back(e.first[b]);
    by_key[key].push_back(&e);
  }
  Tensor out(dims);
  for (const auto& [k1, v1] : t1.entries()) {
    Index key;
    for (auto [a, b] : pairs) key.push_back(k1[a]);
    auto it = by_key.find(key);
    if (it == by_key.end()) continue;
    for (const auto* e2 : it->second) {
      Index k;
      for (auto l : free1) k.push_back(k1[l]);
      for (auto l : free2) k.push_back(e2->first[l]);
      out.add(k, v1 * e2->second);
    }
  }
  return out;
}

Tensor permute_legs(const Tensor& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.arity()) throw Error(ErrorCode::BadPermutation, "permutation length differs from arity");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw Error(ErrorCode::BadPermutation, "not a permutation");
    seen[p] = true;
  }
  std::vector<std::size_t> dims(t.arity());
  for (std::size_t l = 0; l < perm.size(); ++l) dims[perm[l]] = t.dim(l);
  Tensor out(dims);
  for (const auto& [k, v] : t.entries()) {
    Index nk = k;
    for (std::size_t l = 0; l < perm.size(); ++l) nk.set(perm[l], k[l]);
    out.set(nk, v);
  }
  return out;
}

Tensor tensor_product_t(const Tensor& t1, const Tensor& t2) { return contract(t1, t2, {}); }

LinearMap::LinearMap(Tensor t) : t_(std::move(t)) {
  if (t_.arity() != 2) throw Error(ErrorCode::DimMismatch, "a linear map needs a 2-leg tensor");
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

LinearMap LinearMap::diagonal(const Vec& d) {
  LinearMap m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

LinearMap LinearMap::from_rows(const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  LinearMap m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

LinearMap LinearMap::from_operator(const Tensor& op) { return LinearMap(permute_legs(op, {1, 0})); }

Tensor LinearMap::as_operator() const { return permute_legs(t_, {1, 0}); }

Vec LinearMap::apply(const Vec& v) const {
  if (v.size() != cols()) throw Error(ErrorCode::DimMismatch, "vector length differs from map domain");
  Vec out(rows());
  for (const auto& [k, s] : t_.entries())
    if (!v[k[1]].is_zero()) out[k[0]] += s * v[k[1]];
  return out;
}

Vec LinearMap::column(std::size_t c) const {
  Vec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
  return out;
}

LinearMap LinearMap::transpose() const { return LinearMap(permute_legs(t_, {1, 0})); }

LinearMap LinearMap::operator*(const LinearMap& o) const {
  if (cols() != o.rows()) throw Error(ErrorCode::DimMismatch, "composing maps with incompatible dimensions");
  return LinearMap(contract(t_, o.t_, {{1, 0}}));
}

LinearMap LinearMap::kron(const LinearMap& o) const {
  LinearMap m(rows() * o.rows(), cols() * o.cols());
  for (const auto& [k1, v1] : t_.entries())
    for (const auto& [k2, v2] : o.t_.entries())
      m.set(k1[0] * o.rows() + k2[0], k1[1] * o.cols() + k2[1], v1 * v2);
  return m;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "adding vectors of different length");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec scale(const Vec& a, const Scalar& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace hopfkit
