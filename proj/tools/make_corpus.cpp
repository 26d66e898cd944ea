// Regenerates the bundles under corpus/ from the built-in reference structures.
#include <iostream>

#include "hopfkit/bundle.hpp"
#include "hopfkit/corpus.hpp"

using namespace hopfkit;

namespace {

LinearMap basis_map(const std::vector<std::size_t>& f) {
  LinearMap m(f.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) m.set(f[i], i, 1);
  return m;
}

void add_free_modules(Bundle& b, const std::string& heap) {
  const HopfHeap& h = b.heaps.at(heap).heap;
  b.modules["F_left"] = {heap, free_heap_module(h, 1, Side::Left)};
  b.modules["F_right"] = {heap, free_heap_module(h, 1, Side::Right)};
}

Bundle group_bundle(std::size_t n) {
  Bundle b;
  b.name = "z" + std::to_string(n);
  b.note = "Group algebra of the cyclic group of order " + std::to_string(n) + " and its Hopf heap.";
  HopfAlgebra a = corpus::cyclic_group_algebra(n);
  b.coalgebras["C"] = a.coalgebra();
  b.hopf_algebras["A"] = {"C", a};
  b.heaps["H"] = {"C", heap_from_hopf(a)};
  b.operators["B_id"] = {"H", LinearMap::identity(n)};
  add_free_modules(b, "H");
  return b;
}

Bundle trig() {
  Bundle b;
  b.name = "trig";
  b.note = "Two-dimensional coalgebra with basis u, theta and its commutative Hopf heap, "
           "with two weight-zero Rota-Baxter operators.";
  b.field = FieldSpec::quadratic(-1);
  HopfHeap h = corpus::trig_heap();
  b.coalgebras["C"] = h.coalgebra();
  b.heaps["H"] = {"C", h};
  b.operators["B_proj"] = {"H", corpus::trig_b_proj()};
  b.operators["B_flip"] = {"H", corpus::trig_b_flip()};
  b.operators["B_id"] = {"H", LinearMap::identity(2)};
  b.vectors["x_plus"] = {"C", corpus::trig_grouplike(1)};
  b.vectors["x_minus"] = {"C", corpus::trig_grouplike(-1)};
  b.modules["M_self"] = {"H", self_heap_module(h, Side::Right)};
  add_free_modules(b, "H");
  b.operators["T_flip"] = {"M_self", corpus::trig_b_flip()};
  b.rb_modules["R_self"] = {"M_self", "T_flip", "B_flip"};
  return b;
}

Bundle trig_corrupt() {
  Bundle b;
  b.name = "trig_corrupt";
  b.note = "Failing inputs: a heap with [theta,theta,theta] = 2 theta and an operator with u -> theta.";
  b.field = FieldSpec::quadratic(-1);
  HopfHeap h = corpus::trig_heap();
  Tensor chi = h.chi();
  chi.set({1, 1, 1, 1}, 2);
  b.coalgebras["C"] = h.coalgebra();
  b.heaps["H"] = {"C", h};
  b.heaps["H_bad"] = {"C", HopfHeap(h.coalgebra(), chi)};
  b.operators["B_bad"] = {"H", LinearMap::from_rows({{0, 0}, {1, 1}})};
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "corpus";
  save_bundle(trig(), dir + "/trig.json");
  save_bundle(trig_corrupt(), dir + "/trig_corrupt.json");

  Bundle z2 = group_bundle(2);
  z2.operators["B_one"] = {"H", basis_map({0, 0})};
  z2.operators["C_id"] = {"A", LinearMap::identity(2)};
  z2.operators["C_one"] = {"A", basis_map({0, 0})};
  z2.trusses["T_trivial"] = {"H", trivial_truss(z2.heaps.at("H").heap, unit_vec(2, 0))};
  save_bundle(z2, dir + "/z2.json");

  Bundle z3 = group_bundle(3);
  z3.operators["B_affine"] = {"H", basis_map({1, 0, 2})};
  z3.operators["C_inv"] = {"A", basis_map({0, 2, 1})};
  save_bundle(z3, dir + "/z3.json");

  Bundle z4 = group_bundle(4);
  z4.note += " The truss is the brace g^a∘g^b = g^(a+b+2ab).";
  z4.trusses["T_brace"] = {"H", truss_from_brace(corpus::z4_brace())};
  save_bundle(z4, dir + "/z4.json");

  Bundle z4_bad;
  z4_bad.name = "z4_corrupt";
  z4_bad.note = "Failing input: an operator sending g to g^3 while fixing g^3, so it misses the antipode.";
  z4_bad.coalgebras["C"] = z4.coalgebras.at("C");
  z4_bad.hopf_algebras["A"] = z4.hopf_algebras.at("A");
  z4_bad.operators["C_part"] = {"A", basis_map({0, 3, 2, 3})};
  save_bundle(z4_bad, dir + "/z4_corrupt.json");

  Bundle sw;
  sw.name = "sweedler";
  sw.note = "Sweedler's four-dimensional Hopf algebra and its noncommutative Hopf heap.";
  HopfAlgebra s = corpus::sweedler_algebra();
  sw.coalgebras["C"] = s.coalgebra();
  sw.hopf_algebras["A"] = {"C", s};
  sw.heaps["H"] = {"C", heap_from_hopf(s)};
  add_free_modules(sw, "H");
  save_bundle(sw, dir + "/sweedler.json");
  std::cout << "wrote corpus to " << dir << "\n";
}
