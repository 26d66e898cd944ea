#include "hopfkit/corpus.hpp"

namespace hopfkit::corpus {

namespace {

Coalgebra grouplike_basis_coalgebra(const Names& names, const FieldSpec& field) {
  std::size_t n = names.size();
  Tensor comul({n, n, n});
  Tensor counit({n});
  for (std::size_t i = 0; i < n; ++i) {
    comul.set({i, i, i}, 1);
    counit.set({i}, 1);
  }
  return Coalgebra(field, names, comul, counit);
}

}  // namespace

Coalgebra trig_coalgebra(const FieldSpec& field) {
  constexpr std::size_t u = 0, t = 1;
  Tensor comul({2, 2, 2});
  comul.set({u, u, t}, 1);
  comul.set({u, t, u}, 1);
  comul.set({t, t, t}, 1);
  comul.set({t, u, u}, -1);
  Tensor counit({2});
  counit.set({t}, 1);
  return Coalgebra(field, {"u", "theta"}, comul, counit);
}

HopfHeap trig_heap(const FieldSpec& field) {
  Tensor chi({2, 2, 2, 2});
  chi.set({0, 0, 0, 0}, -1);
  chi.set({1, 1, 1, 1}, 1);
  return HopfHeap(trig_coalgebra(field), chi);
}

Vec trig_grouplike(int sign) { return {Scalar::root(-1) * Scalar(sign), Scalar(1)}; }

LinearMap trig_b_proj() { return LinearMap::diagonal({0, 1}); }

LinearMap trig_b_flip() { return LinearMap::diagonal({-1, 1}); }

HopfAlgebra cyclic_group_algebra(std::size_t n, const FieldSpec& field) {
  Names names{"1", "g"};
  for (std::size_t k = 2; k < n; ++k) names.push_back("g" + std::to_string(k));
  names.resize(n);
  Coalgebra c = grouplike_basis_coalgebra(names, field);
  Tensor mul({n, n, n});
  LinearMap s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul.set({i, j, (i + j) % n}, 1);
    s.set((n - i) % n, i, 1);
  }
  return HopfAlgebra(c, mul, unit_vec(n, 0), s);
}

HopfAlgebra sweedler_algebra(const FieldSpec& field) {
  constexpr std::size_t e = 0, g = 1, x = 2, gx = 3;
  Tensor comul({4, 4, 4});
  comul.set({e, e, e}, 1);
  comul.set({g, g, g}, 1);
  comul.set({x, x, e}, 1);
  comul.set({x, g, x}, 1);
  comul.set({gx, gx, g}, 1);
  comul.set({gx, e, gx}, 1);
  Tensor counit({4});
  counit.set({e}, 1);
  counit.set({g}, 1);
  Coalgebra c(field, {"1", "g", "x", "gx"}, comul, counit);

  Tensor mul({4, 4, 4});
  for (std::size_t a = 0; a < 4; ++a) {
    mul.set({e, a, a}, 1);
    mul.set({a, e, a}, 1);
  }
  mul.set({g, g, e}, 1);
  mul.set({g, x, gx}, 1);
  mul.set({g, gx, x}, 1);
  mul.set({x, g, gx}, -1);
  mul.set({gx, g, x}, -1);
  LinearMap s(4, 4);
  s.set(e, e, 1);
  s.set(g, g, 1);
  s.set(gx, x, -1);
  s.set(x, gx, 1);
  return HopfAlgebra(c, mul, unit_vec(4, e), s);
}

HopfBrace z4_brace(const FieldSpec& field) {
  HopfAlgebra dot = cyclic_group_algebra(4, field);
  Tensor circ({4, 4, 4});
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) circ.set({a, b, (a + b + 2 * a * b) % 4}, 1);
  return HopfBrace(dot, HopfAlgebra(dot.coalgebra(), circ, unit_vec(4, 0), LinearMap::identity(4)));
}

Bialgebra idempotent_monoid_bialgebra(const FieldSpec& field) {
  Coalgebra c = grouplike_basis_coalgebra({"1", "p"}, field);
  Tensor mul({2, 2, 2});
  mul.set({0, 0, 0}, 1);
  mul.set({0, 1, 1}, 1);
  mul.set({1, 0, 1}, 1);
  mul.set({1, 1, 1}, 1);
  return {c, mul, unit_vec(2, 0)};
}

}  // namespace hopfkit::corpus
