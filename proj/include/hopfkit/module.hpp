#pragma once

#include "hopfkit/heap.hpp"

namespace hopfkit {

// Left: action (c, d, m, out) for (c⊗d)▷m, coaction (m, h, m') for m(-1)⊗m(0).
// Right: action (m, c, d, out) for m◁(c⊗d), coaction (m, m', h) for m(0)⊗m(1).
class HeapModule {
 public:
  HeapModule() = default;
  HeapModule(HopfHeap parent, Side side, Names names, Tensor action, Tensor coaction);

  const HopfHeap& parent() const { return parent_; }
  Side side() const { return side_; }
  std::size_t dim() const { return names_.size(); }
  const Names& names() const { return names_; }
  const Tensor& action() const { return action_; }
  const Tensor& coaction() const { return coaction_; }
  bool verified() const { return verified_; }

 private:
  friend HeapModule certify(HeapModule m);
  HopfHeap parent_;
  Side side_ = Side::Left;
  Names names_;
  Tensor action_;
  Tensor coaction_;
  bool verified_ = false;
};

// Left: action (h, m, out) for h·m. Right: action (m, h, out) for m·h.
// Coaction layout as for HeapModule.
class HopfModule {
 public:
  HopfModule() = default;
  HopfModule(HopfAlgebra parent, Side side, Names names, Tensor action, Tensor coaction);

  const HopfAlgebra& parent() const { return parent_; }
  Side side() const { return side_; }
  std::size_t dim() const { return names_.size(); }
  const Names& names() const { return names_; }
  const Tensor& action() const { return action_; }
  const Tensor& coaction() const { return coaction_; }
  bool verified() const { return verified_; }

 private:
  friend HopfModule certify(HopfModule m);
  HopfAlgebra parent_;
  Side side_ = Side::Left;
  Names names_;
  Tensor action_;
  Tensor coaction_;
  bool verified_ = false;
};

HeapModule certify(HeapModule m);
HopfModule certify(HopfModule m);
void require_verified(const HeapModule& m);

VerificationReport verify_heap_module(const HeapModule& m);
VerificationReport verify_hopf_module(const HopfModule& m);

// The heap acting on itself by the bracket, with Δ as coaction.
HeapModule self_heap_module(const HopfHeap& h, Side side);
// Left: H⊗V, index h*dimV + v. Right: V⊗H, index v*dim(H) + h.
HeapModule free_heap_module(const HopfHeap& h, std::size_t dim_v, Side side);
// The Hopf algebra acting on itself by multiplication, with Δ as coaction.
HopfModule regular_hopf_module(const HopfAlgebra& h, Side side);

// Left: h·m = (h⊗x)▷m. Right: m·h = m◁(x⊗h). Over hopf_from_heap(parent, x).
HopfModule hopfmod_from_heapmod(const HeapModule& m, const Vec& x);
// Left: (a⊗b)▷m = (aS(b))·m. Right: m◁(a⊗b) = m·(S(a)b). Over heap_from_hopf(parent).
HeapModule heapmod_from_hopfmod(const HopfModule& m);

// Basis of {m : ρ(m) = x⊗m} (left) or {m : ρ(m) = m⊗x} (right), in kernel order.
std::vector<Vec> coinvariants(const HeapModule& m, const Vec& x);

struct StructureIso {
  std::vector<Vec> coinvariant_basis;
  // Free module on the coinvariants: H⊗M^co (left) or M^co⊗H (right).
  HeapModule free;
  LinearMap alpha;  // free -> M
  LinearMap beta;   // M -> free
  LinearMap projection;  // P: M -> M, image in the coinvariants
};
StructureIso structure_iso(const HeapModule& m, const Vec& x);

VerificationReport verify_module_hom(const LinearMap& f, const HeapModule& from, const HeapModule& to);
VerificationReport verify_hopf_module_hom(const LinearMap& f, const HopfModule& from, const HopfModule& to);

// Right modules over commutative heaps: m◁(a⊗[b,c,d]) = m◁([a,b,c]⊗d) and m◁(c1⊗c2) = m◁(c2⊗c1).
VerificationReport check_right_commutative_identities(const HeapModule& m);

}  // namespace hopfkit
