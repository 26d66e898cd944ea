#pragma once

#include "hopfkit/module.hpp"

namespace hopfkit {

// Rota-Baxter operator (weight zero) on a Hopf heap.
class RBHeap {
 public:
  RBHeap() = default;
  RBHeap(HopfHeap heap, LinearMap b);

  const HopfHeap& heap() const { return heap_; }
  const LinearMap& B() const { return b_; }
  bool verified() const { return verified_; }

 private:
  friend RBHeap certify(RBHeap r);
  HopfHeap heap_;
  LinearMap b_;
  bool verified_ = false;
};

// Rota-Baxter co-operator on a commutative Hopf algebra; B is an algebra map.
class RBCooperator {
 public:
  RBCooperator() = default;
  RBCooperator(HopfAlgebra hopf, LinearMap b);

  const HopfAlgebra& hopf() const { return hopf_; }
  const LinearMap& B() const { return b_; }
  bool verified() const { return verified_; }

 private:
  friend RBCooperator certify(RBCooperator r);
  HopfAlgebra hopf_;
  LinearMap b_;
  bool verified_ = false;
};

// Right heap module over the heap of rb, with an operator T on the module.
class RBHeapModule {
 public:
  RBHeapModule() = default;
  RBHeapModule(HeapModule module, LinearMap t, RBHeap rb);

  const HeapModule& module() const { return module_; }
  const LinearMap& T() const { return t_; }
  const RBHeap& rb() const { return rb_; }
  bool verified() const { return verified_; }

 private:
  friend RBHeapModule certify(RBHeapModule m);
  HeapModule module_;
  LinearMap t_;
  RBHeap rb_;
  bool verified_ = false;
};

RBHeap certify(RBHeap r);
RBCooperator certify(RBCooperator r);
RBHeapModule certify(RBHeapModule m);
void require_verified(const RBHeap& r);

// B[a,b,c] = [Ba,Bb,Bc] and B(a1)⊗B(a2) = [y1, B(y4), B(y2)]⊗y3 with y = B(a).
VerificationReport verify_rb_heap(const HopfHeap& h, const LinearMap& b);
// Throws NotCommutativeAlgebra or NotAlgebraMap; otherwise reports
// B(a1)⊗B(a2) = y1 B(y2 S(y4))⊗y3 with y = B(a).
VerificationReport verify_rb_cooperator(const HopfAlgebra& h, const LinearMap& b);

RBHeap rb_heap_from_cooperator(const RBCooperator& r);
RBCooperator cooperator_from_rb_heap(const RBHeap& r, const Vec& x);
// psi B psi^-1 for a heap automorphism psi.
RBHeap conjugate_rb(const RBHeap& r, const LinearMap& psi);
// c -> [B(c), x, y].
RBHeap translate_rb(const RBHeap& r, const Vec& x, const Vec& y);
RBHeap tensor_rb(const RBHeap& a, const RBHeap& b);

// Δ'(a) = [a1, B(a4), B(a2)]⊗a3 on the same space, input-first.
Tensor descendent_comul(const RBHeap& r);

struct DescendentHeap {
  HopfHeap heap;  // (C, Δ', χ)
  LinearMap B;
  // Δ'B = (B⊗B)Δ, B as a heap map C -> C_B, and B as an operator on C_B.
  VerificationReport report;
};
DescendentHeap descendent_heap(const RBHeap& r);
// (ψ⊗ψ)Δ'_B = Δ'_{ψBψ^-1} ψ.
Check check_descendent_iso(const RBHeap& r, const LinearMap& psi);

struct CoBrace {
  HopfAlgebra first;   // (H_x, Δ)
  HopfAlgebra second;  // (H_x, Δ')
  VerificationReport report;
};
CoBrace cobrace_from_rb(const RBHeap& r, const Vec& x);

VerificationReport verify_rb_heap_module(const RBHeapModule& m);
// The free right module M⊗H with T(m⊗h) = F(m⊗h1)⊗B(h2); f is input-first (m, h, m').
RBHeapModule induced_rb_module(const RBHeap& r, const Tensor& f);
// The heap as a right module over itself with T = B.
RBHeapModule self_rb_module(const RBHeap& r);

struct RBStructureIso {
  StructureIso iso;
  // T(m⊗h) = P(T(m◁(x⊗h1)))⊗B(h2) on M^co⊗H.
  LinearMap t_hat;
  VerificationReport report;
};
RBStructureIso rb_structure_iso(const RBHeapModule& m, const Vec& x);

// Members of family that pass verify_rb_heap, in family order.
std::vector<RBHeap> search_rb_operators(const HopfHeap& h, const std::vector<LinearMap>& family);

}  // namespace hopfkit
