#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Vec = std::vector<Scalar>;

inline constexpr std::size_t kMaxLegs = 24;
inline constexpr std::size_t kMaxDim = 255;

// Multi-index with inline storage; compares lexicographically.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<std::size_t> idx);

  std::size_t size() const { return n_; }
  std::size_t operator[](std::size_t i) const { return v_[i]; }
  void set(std::size_t i, std::size_t value) { v_[i] = static_cast<std::uint8_t>(value); }
  void push_back(std::size_t value);

  auto operator<=>(const Index&) const = default;
  bool operator==(const Index&) const = default;

 private:
  std::array<std::uint8_t, kMaxLegs> v_{};
  std::uint8_t n_ = 0;
};

// Sparse tensor with per-leg dimensions. Zero entries are never stored.
class Tensor {
 public:
  using Entries = std::map<Index, Scalar>;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> dims);

  static Tensor one();
  static Tensor vector(const Vec& v);
  static Tensor basis_vector(std::size_t n, std::size_t i);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t arity() const { return dims_.size(); }
  std::size_t dim(std::size_t leg) const { return dims_.at(leg); }
  const Entries& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Scalar at(const Index& idx) const;
  void set(const Index& idx, const Scalar& value);
  void add(const Index& idx, const Scalar& value);

  Tensor scaled(const Scalar& s) const;
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  bool operator==(const Tensor& o) const { return dims_ == o.dims_ && entries_ == o.entries_; }

  // Coordinates of a 1-leg tensor.
  Vec to_vec() const;

 private:
  void check_index(const Index& idx) const;

  std::vector<std::size_t> dims_;
  Entries entries_;
};

// Sums over each (leg of t1, leg of t2) pair; remaining legs are t1's then t2's.
Tensor contract(const Tensor& t1, const Tensor& t2, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
// perm[l] is the new position of leg l.
Tensor permute_legs(const Tensor& t, const std::vector<std::size_t>& perm);
Tensor tensor_product_t(const Tensor& t1, const Tensor& t2);

// Matrix as a 2-leg tensor, leg 0 = output (row), leg 1 = input (column).
class LinearMap {
 public:
  LinearMap() : LinearMap(0, 0) {}
  LinearMap(std::size_t rows, std::size_t cols) : t_({rows, cols}) {}
  explicit LinearMap(Tensor t);

  static LinearMap identity(std::size_t n);
  static LinearMap diagonal(const Vec& d);
  static LinearMap from_rows(const std::vector<Vec>& rows);
  // Input-first tensor (in, out): the layout used for structure maps.
  static LinearMap from_operator(const Tensor& op);

  std::size_t rows() const { return t_.dim(0); }
  std::size_t cols() const { return t_.dim(1); }
  Scalar at(std::size_t r, std::size_t c) const { return t_.at({r, c}); }
  void set(std::size_t r, std::size_t c, const Scalar& v) { t_.set({r, c}, v); }
  const Tensor& tensor() const { return t_; }
  Tensor as_operator() const;

  Vec apply(const Vec& v) const;
  Vec column(std::size_t c) const;
  LinearMap transpose() const;
  // (*this) after o.
  LinearMap operator*(const LinearMap& o) const;
  LinearMap operator+(const LinearMap& o) const { return LinearMap(t_ + o.t_); }
  LinearMap operator-(const LinearMap& o) const { return LinearMap(t_ - o.t_); }
  LinearMap scaled(const Scalar& s) const { return LinearMap(t_.scaled(s)); }
  // Kronecker product: (A (x) B)(e_i (x) e_j) = A e_i (x) B e_j.
  LinearMap kron(const LinearMap& o) const;
  bool operator==(const LinearMap& o) const { return t_ == o.t_; }

 private:
  Tensor t_;
};

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
bool is_zero(const Vec& v);

}  // namespace hopfkit
