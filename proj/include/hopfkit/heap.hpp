#pragma once

#include <optional>

#include "hopfkit/coalgebra.hpp"

namespace hopfkit {

enum class Side { Left, Right };

// [e_i, e_j, e_k] = sum X[i][j][k][l] e_l.
class HopfHeap {
 public:
  HopfHeap() = default;
  HopfHeap(Coalgebra coalg, Tensor chi);

  const Coalgebra& coalgebra() const { return coalg_; }
  const Tensor& chi() const { return chi_; }
  std::size_t dim() const { return coalg_.dim(); }
  const Names& names() const { return coalg_.names(); }
  const FieldSpec& field() const { return coalg_.field(); }
  bool verified() const { return verified_; }

  Vec bracket(const Vec& a, const Vec& b, const Vec& c) const;
  HopfHeap with_field(const FieldSpec& field) const;

 private:
  friend HopfHeap certify(HopfHeap h);
  Coalgebra coalg_;
  Tensor chi_;
  bool verified_ = false;
};

// mul is input-first (a, b, ab); unit is group-like.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(Coalgebra coalg, Tensor mul, Vec unit, LinearMap antipode);

  const Coalgebra& coalgebra() const { return coalg_; }
  const Tensor& mul() const { return mul_; }
  const Vec& unit() const { return unit_; }
  const LinearMap& antipode() const { return antipode_; }
  std::size_t dim() const { return coalg_.dim(); }
  const Names& names() const { return coalg_.names(); }
  const FieldSpec& field() const { return coalg_.field(); }
  bool verified() const { return verified_; }

  Vec multiply(const Vec& a, const Vec& b) const;

 private:
  friend HopfAlgebra certify(HopfAlgebra h);
  Coalgebra coalg_;
  Tensor mul_;
  Vec unit_;
  LinearMap antipode_;
  bool verified_ = false;
};

// Return the argument flagged as verified, or throw ConstructionInvalid.
HopfHeap certify(HopfHeap h);
HopfAlgebra certify(HopfAlgebra h);
// Throw Unverified unless the object is flagged or passes verification now.
void require_verified(const HopfHeap& h);
void require_verified(const HopfAlgebra& h);

VerificationReport verify_hopf_heap(const HopfHeap& h);
VerificationReport verify_hopf_algebra(const HopfAlgebra& h);
bool is_commutative_heap(const HopfHeap& h);
bool is_commutative_algebra(const HopfAlgebra& h);

// [a,b,c] = a S(b) c.
HopfHeap heap_from_hopf(const HopfAlgebra& h);
// ab = [a,x,b], S(a) = [x,a,x], unit x.
HopfAlgebra hopf_from_heap(const HopfHeap& h, const Vec& x);
// Solves the left convolution identity for S; nothing if no antipode exists.
std::optional<LinearMap> find_antipode(const Coalgebra& c, const Tensor& mul, const Vec& unit);

// c -> [c1, [f1, c3, c2], f2] for eps(f) = 1.
LinearMap grunspan_map(const HopfHeap& h, const Vec& f);
// [[a,b,g(c)],d,h] = [a,[d,c,b],h].
Check check_grunspan_identity(const HopfHeap& h, const LinearMap& g);
// Right: c -> [c,a,b]. Left: c -> [a,b,c].
LinearMap translation_map(const HopfHeap& h, const Vec& a, const Vec& b, Side side);

VerificationReport verify_coalgebra_map(const LinearMap& f, const Coalgebra& from, const Coalgebra& to);
VerificationReport verify_heap_hom(const LinearMap& f, const HopfHeap& from, const HopfHeap& to);
VerificationReport verify_hopf_algebra_hom(const LinearMap& f, const HopfAlgebra& from, const HopfAlgebra& to);

HopfHeap tensor_heap(const HopfHeap& a, const HopfHeap& b);
HopfHeap opposite_heap(const HopfHeap& h);

// Identities of commutative heaps.
Check check_middle_associativity(const HopfHeap& h);
Check check_exchange_identity(const HopfHeap& h);

}  // namespace hopfkit
