#pragma once

#include <optional>

#include "hopfkit/heap.hpp"

namespace hopfkit {

// Heap form: a Hopf heap with a nonunital bialgebra product circ (a, b, a∘b).
class HopfTruss {
 public:
  HopfTruss() = default;
  HopfTruss(HopfHeap heap, Tensor circ);

  const HopfHeap& heap() const { return heap_; }
  const Tensor& circ() const { return circ_; }
  std::size_t dim() const { return heap_.dim(); }
  bool verified() const { return verified_; }

 private:
  friend HopfTruss certify(HopfTruss t);
  HopfHeap heap_;
  Tensor circ_;
  bool verified_ = false;
};

// Cocycle form: a∘(bc) = (a1∘b)S(σ(a2))(a3∘c).
class CocycleTruss {
 public:
  CocycleTruss() = default;
  CocycleTruss(HopfAlgebra hopf, Tensor circ, LinearMap sigma);

  const HopfAlgebra& hopf() const { return hopf_; }
  const Tensor& circ() const { return circ_; }
  const LinearMap& sigma() const { return sigma_; }
  std::size_t dim() const { return hopf_.dim(); }
  bool verified() const { return verified_; }

 private:
  friend CocycleTruss certify(CocycleTruss t);
  HopfAlgebra hopf_;
  Tensor circ_;
  LinearMap sigma_;
  bool verified_ = false;
};

// Two Hopf algebras on one coalgebra with a∘(bc) = (a1∘b)S(a2)(a3∘c).
class HopfBrace {
 public:
  HopfBrace() = default;
  HopfBrace(HopfAlgebra dot, HopfAlgebra circ);

  const HopfAlgebra& dot() const { return dot_; }
  const HopfAlgebra& circ() const { return circ_; }
  std::size_t dim() const { return dot_.dim(); }
  bool verified() const { return verified_; }

 private:
  friend HopfBrace certify(HopfBrace b);
  HopfAlgebra dot_;
  HopfAlgebra circ_;
  bool verified_ = false;
};

HopfTruss certify(HopfTruss t);
CocycleTruss certify(CocycleTruss t);
HopfBrace certify(HopfBrace b);

VerificationReport verify_hopf_truss(const HopfTruss& t);
VerificationReport verify_truss_cocycle_form(const CocycleTruss& t);
VerificationReport verify_hopf_brace(const HopfBrace& b);

// a∘b = ε(a)ε(b)x.
HopfTruss trivial_truss(const HopfHeap& h, const Vec& x);

enum class AlphaVariant { First, Second };
// First: x·y = [x1, α(x2), y]. Second: x·y = [x, α(y1), y2].
HopfTruss alpha_truss(const HopfHeap& h, const LinearMap& alpha, AlphaVariant variant);

// a·_x b = aS(x)b, σ_x(a) = a∘x.
CocycleTruss shifted_truss(const CocycleTruss& t, const Vec& x);

// Heap form to cocycle form over H_x, with σ_x(a) = a∘x.
CocycleTruss cocycle_form(const HopfTruss& t, const Vec& x);
// Cocycle form to heap form over [a,b,c] = aS(b)c.
HopfTruss heap_form(const CocycleTruss& t);

// Two-sided unit of circ, if any.
std::optional<Vec> circ_unit(const Coalgebra& c, const Tensor& circ);
HopfTruss truss_from_brace(const HopfBrace& b);
// ab = [a,1,b], S(a) = [1,a,1] with 1 the ∘-unit; throws NoCircUnit.
HopfBrace brace_from_truss(const HopfTruss& t);

// x -> [α(x1), β(x2), γ(x3)].
LinearMap endo_bracket(const HopfHeap& h, const LinearMap& alpha, const LinearMap& beta, const LinearMap& gamma);

// 1∘a = a∘1 for the unit of ·; when it holds, a -> a∘1 is checked as a heap endomorphism.
VerificationReport check_central_unit(const CocycleTruss& t);

}  // namespace hopfkit
