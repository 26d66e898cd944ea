#pragma once

#include "hopfkit/truss.hpp"

namespace hopfkit::corpus {

// Basis (u, theta): Delta u = u⊗theta + theta⊗u, Delta theta = theta⊗theta - u⊗u,
// eps(u) = 0, eps(theta) = 1, [u,u,u] = -u, [theta,theta,theta] = theta.
Coalgebra trig_coalgebra(const FieldSpec& field = FieldSpec::quadratic(-1));
HopfHeap trig_heap(const FieldSpec& field = FieldSpec::quadratic(-1));
// theta ± sqrt(-1) u.
Vec trig_grouplike(int sign);
// u -> 0, theta -> theta.
LinearMap trig_b_proj();
// u -> -u, theta -> theta.
LinearMap trig_b_flip();

// Group algebra of Z/n with basis 1, g, g2, ...
HopfAlgebra cyclic_group_algebra(std::size_t n, const FieldSpec& field = FieldSpec::rationals());
// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Delta x = x⊗1 + g⊗x.
HopfAlgebra sweedler_algebra(const FieldSpec& field = FieldSpec::rationals());

// Group algebra of Z/4 with g^a ∘ g^b = g^(a+b+2ab); the ∘-group is Z/2 x Z/2.
HopfBrace z4_brace(const FieldSpec& field = FieldSpec::rationals());

struct Bialgebra {
  Coalgebra coalg;
  Tensor mul;
  Vec unit;
};
// Monoid {1, p} with p^2 = p: a bialgebra without antipode.
Bialgebra idempotent_monoid_bialgebra(const FieldSpec& field = FieldSpec::rationals());

}  // namespace hopfkit::corpus
