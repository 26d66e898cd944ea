#include <random>

#include "test_main.hpp"

#include "hopfkit/corpus.hpp"
#include "hopfkit/rota.hpp"
#include "oracle.hpp"
#include "rota_oracle.hpp"

using namespace hopfkit;

namespace {

using oracle::Mat2;
using oracle::comul_n;
using oracle::oracle_cooperator;
using oracle::oracle_descendent;
using oracle::oracle_rb;
using oracle::oracle_rb_module;

Vec e(std::size_t n, std::size_t i) { return oracle::basis(n, i); }

HopfHeap hp(std::size_t n, const FieldSpec& f = FieldSpec::rationals()) {
  return heap_from_hopf(corpus::cyclic_group_algebra(n, f));
}

LinearMap diag(int a, int b) { return LinearMap::diagonal({Scalar(a), Scalar(b)}); }

// Basis map e_i -> e_f(i).
LinearMap basis_map(const std::vector<std::size_t>& f) {
  LinearMap m(f.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) m.set(f[i], i, 1);
  return m;
}

std::vector<LinearMap> diagonal_family() {
  std::vector<LinearMap> out;
  for (int a : {-1, 0, 1})
    for (int b : {-1, 0, 1}) out.push_back(diag(a, b));
  return out;
}

// Bijective affine maps i -> s*i + t of Z/3 on the group basis.
std::vector<LinearMap> z3_affine_bijections() {
  std::vector<LinearMap> out;
  for (std::size_t s : {1, 2})
    for (std::size_t t = 0; t < 3; ++t) out.push_back(basis_map({t, (s + t) % 3, (2 * s + t) % 3}));
  return out;
}

}  // namespace

TEST_CASE("operators on the trigonometric heap") {
  HopfHeap h = corpus::trig_heap();
  for (const auto& b : {corpus::trig_b_proj(), corpus::trig_b_flip()}) {
    CHECK(verify_rb_heap(h, b).passed());
    CHECK(oracle_rb(h, b));
  }
  LinearMap bad = LinearMap::from_rows({{0, 0}, {1, 1}});  // u -> theta, theta -> theta
  auto r = verify_rb_heap(h, bad);
  const Check* c = r.find("rb.bracket");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  REQUIRE(c->witness.has_value());
  CHECK(c->witness->inputs == std::vector<std::string>{"u", "u", "u"});
  CHECK(c->witness->lhs == "-theta");
  CHECK(c->witness->rhs == "theta");
  CHECK_FALSE(oracle_rb(h, bad));
  CHECK(throws_code(ErrorCode::ConstructionInvalid, [&] { certify(RBHeap(h, bad)); }));
  CHECK(throws_code(ErrorCode::DimMismatch, [&] { verify_rb_heap(h, LinearMap::identity(3)); }));
}

TEST_CASE("verifier verdicts agree with the oracle") {
  HopfHeap trig = corpus::trig_heap();
  std::vector<LinearMap> family = diagonal_family();
  for (int a : {-1, 0, 1})
    for (int b : {-1, 0, 1}) family.push_back(LinearMap::from_rows({{Scalar(a), Scalar(1)}, {Scalar(0), Scalar(b)}}));
  family.push_back(LinearMap::from_rows({{0, 1}, {1, 0}}));
  for (const auto& b : family) CHECK(verify_rb_heap(trig, b).passed() == oracle_rb(trig, b));

  for (std::size_t n : {2, 3}) {
    HopfHeap h = hp(n);
    std::vector<std::size_t> f(n, 0);
    for (;;) {
      LinearMap b = basis_map(f);
      CHECK(verify_rb_heap(h, b).passed() == oracle_rb(h, b));
      std::size_t i = 0;
      while (i < n && ++f[i] == n) f[i++] = 0;
      if (i == n) break;
    }
  }
  HopfHeap sw = heap_from_hopf(corpus::sweedler_algebra());
  for (const auto& b : {LinearMap::identity(4), LinearMap(4, 4), basis_map({0, 0, 2, 2})})
    CHECK(verify_rb_heap(sw, b).passed() == oracle_rb(sw, b));
}

TEST_CASE("search over candidate families") {
  HopfHeap h = corpus::trig_heap();
  auto found = search_rb_operators(h, diagonal_family());
  auto has = [&](const LinearMap& b) {
    for (const auto& r : found)
      if (r.B() == b) return true;
    return false;
  };
  CHECK(has(diag(0, 1)));
  CHECK(has(diag(-1, 1)));
  CHECK(has(diag(1, 1)));
  for (const auto& r : found) CHECK(r.verified());
  std::size_t expected = 0;
  for (const auto& b : diagonal_family()) expected += oracle_rb(h, b) ? 1 : 0;
  CHECK(found.size() == expected);
  // Family order is kept.
  for (std::size_t i = 1; i < found.size(); ++i) {
    std::size_t a = 0, b = 0;
    auto fam = diagonal_family();
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (fam[j] == found[i - 1].B()) a = j;
      if (fam[j] == found[i].B()) b = j;
    }
    CHECK(a < b);
  }
  CHECK(search_rb_operators(h, {}).empty());

  HopfHeap z2 = hp(2);
  auto z2found = search_rb_operators(z2, {basis_map({0, 0}), basis_map({0, 1})});
  CHECK(z2found.size() == 2);
}

TEST_CASE("identity operator on cocommutative heaps") {
  std::vector<HopfHeap> heaps = {corpus::trig_heap(), hp(2), hp(3), hp(4)};
  for (const auto& h : heaps) {
    REQUIRE(is_cocommutative(h.coalgebra()));
    CHECK(verify_rb_heap(h, LinearMap::identity(h.dim())).passed());
  }
}

TEST_CASE("co-operators") {
  HopfAlgebra z2 = corpus::cyclic_group_algebra(2);
  LinearMap to_one = basis_map({0, 0});
  for (const auto& b : {LinearMap::identity(2), to_one}) {
    CHECK(verify_rb_cooperator(z2, b).passed());
    CHECK(oracle_cooperator(z2, b));
  }
  HopfAlgebra sw = corpus::sweedler_algebra();
  CHECK(throws_code(ErrorCode::NotCommutativeAlgebra, [&] { verify_rb_cooperator(sw, LinearMap::identity(4)); }));
  CHECK(throws_code(ErrorCode::NotAlgebraMap, [&] { verify_rb_cooperator(z2, LinearMap(2, 2)); }));

  // Every basis map of Z/3: algebra maps get the oracle verdict, the rest are rejected.
  HopfAlgebra z3 = corpus::cyclic_group_algebra(3);
  std::size_t algebra_maps = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        LinearMap m = basis_map({a, b, c});
        bool hom = a == 0 && c == (2 * b) % 3;
        if (!hom) {
          CHECK(throws_code(ErrorCode::NotAlgebraMap, [&] { verify_rb_cooperator(z3, m); }));
          continue;
        }
        ++algebra_maps;
        CHECK(verify_rb_cooperator(z3, m).passed() == oracle_cooperator(z3, m));
      }
  CHECK(algebra_maps == 3);
}

TEST_CASE("co-operators to heap operators") {
  HopfAlgebra z2 = corpus::cyclic_group_algebra(2);
  for (const auto& b : {LinearMap::identity(2), basis_map({0, 0})}) {
    RBHeap r = rb_heap_from_cooperator(RBCooperator(z2, b));
    CHECK(r.verified());
    CHECK(r.heap().chi() == heap_from_hopf(z2).chi());
    CHECK(r.B() == b);
  }
  HopfAlgebra z4 = corpus::cyclic_group_algebra(4);
  LinearMap part = basis_map({0, 3, 2, 3});
  CHECK(throws_code(ErrorCode::AntipodeCommutationFails, [&] { rb_heap_from_cooperator(RBCooperator(z4, part)); }));
  // Group homomorphisms commute with inversion; each passing one yields a heap operator.
  HopfAlgebra z3 = corpus::cyclic_group_algebra(3);
  for (std::size_t b = 0; b < 3; ++b) {
    LinearMap m = basis_map({0, b, (2 * b) % 3});
    if (!verify_rb_cooperator(z3, m).passed()) continue;
    RBHeap r = rb_heap_from_cooperator(RBCooperator(z3, m));
    CHECK(oracle_rb(r.heap(), m));
  }
}

TEST_CASE("heap operators to co-operators") {
  HopfHeap trig = corpus::trig_heap();
  Vec xp = corpus::trig_grouplike(1);
  RBCooperator c = cooperator_from_rb_heap(certify(RBHeap(trig, LinearMap::identity(2))), xp);
  CHECK(c.verified());
  CHECK(oracle_cooperator(c.hopf(), c.B()));
  RBHeap flip = certify(RBHeap(trig, corpus::trig_b_flip()));
  CHECK(throws_code(ErrorCode::FixedPointFails, [&] { cooperator_from_rb_heap(flip, xp); }));
  CHECK(flip.B().apply(xp) == corpus::trig_grouplike(-1));

  RBCooperator z2 = cooperator_from_rb_heap(certify(RBHeap(hp(2), LinearMap::identity(2))), e(2, 0));
  CHECK(z2.hopf().mul() == corpus::cyclic_group_algebra(2).mul());

  HopfHeap sw = heap_from_hopf(corpus::sweedler_algebra());
  RBHeap zero = certify(RBHeap(sw, LinearMap(4, 4)));
  CHECK(throws_code(ErrorCode::NotCommutative, [&] { cooperator_from_rb_heap(zero, e(4, 0)); }));
  CHECK(throws_code(ErrorCode::NotGroupLike, [&] {
    cooperator_from_rb_heap(certify(RBHeap(trig, LinearMap::identity(2))), e(2, 0));
  }));
}

TEST_CASE("conjugation by heap automorphisms") {
  HopfHeap trig = corpus::trig_heap();
  RBHeap proj = certify(RBHeap(trig, corpus::trig_b_proj()));
  CHECK(conjugate_rb(proj, LinearMap::identity(2)).B() == proj.B());
  CHECK(conjugate_rb(proj, diag(-1, 1)).B() == proj.B());
  CHECK(throws_code(ErrorCode::NotAutomorphism, [&] { conjugate_rb(proj, diag(0, 1)); }));
  CHECK(throws_code(ErrorCode::NotAutomorphism, [&] { conjugate_rb(proj, LinearMap::from_rows({{0, 1}, {1, 0}})); }));

  HopfHeap z3 = hp(3);
  for (const auto& b : z3_affine_bijections()) {
    RBHeap r = certify(RBHeap(z3, b));
    for (const auto& psi : z3_affine_bijections()) {
      RBHeap c = conjugate_rb(r, psi);
      CHECK(c.B() * psi == psi * b);
      CHECK(oracle_rb(z3, c.B()));
    }
  }
}

TEST_CASE("translated operators") {
  HopfHeap trig = corpus::trig_heap();
  Vec xp = corpus::trig_grouplike(1), xm = corpus::trig_grouplike(-1);
  RBHeap id = certify(RBHeap(trig, LinearMap::identity(2)));
  CHECK(translate_rb(id, xp, xp).B() == id.B());
  RBHeap t = translate_rb(id, xp, xm);
  CHECK(t.verified());
  CHECK(oracle_rb(trig, t.B()));
  for (std::size_t i = 0; i < 2; ++i) CHECK(t.B().column(i) == oracle::bracket(trig.chi(), e(2, i), xp, xm));

  RBHeap proj = certify(RBHeap(trig, corpus::trig_b_proj()));
  CHECK(throws_code(ErrorCode::ImageNotGroupLike, [&] { translate_rb(proj, xp, xm); }));
  RBHeap zero = certify(RBHeap(trig, LinearMap(2, 2)));
  CHECK(throws_code(ErrorCode::CounitCondFails, [&] { translate_rb(zero, xp, xm); }));
  HopfHeap sw = heap_from_hopf(corpus::sweedler_algebra());
  RBHeap swid = certify(RBHeap(sw, LinearMap(4, 4)));
  CHECK(throws_code(ErrorCode::NotCommutative, [&] { translate_rb(swid, e(4, 0), e(4, 1)); }));

  HopfHeap z3 = hp(3);
  for (const auto& b : z3_affine_bijections()) {
    RBHeap r = certify(RBHeap(z3, b));
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) CHECK(oracle_rb(z3, translate_rb(r, e(3, x), e(3, y)).B()));
  }
}

TEST_CASE("tensor products of operators") {
  FieldSpec qi = FieldSpec::quadratic(-1);
  HopfHeap trig = corpus::trig_heap();
  HopfHeap z2 = hp(2, qi);
  RBHeap flip = certify(RBHeap(trig, corpus::trig_b_flip()));
  RBHeap proj = certify(RBHeap(trig, corpus::trig_b_proj()));
  RBHeap id2 = certify(RBHeap(z2, LinearMap::identity(2)));
  RBHeap idt = certify(RBHeap(trig, LinearMap::identity(2)));

  RBHeap a = tensor_rb(flip, id2);
  CHECK(a.verified());
  CHECK(oracle_rb(a.heap(), a.B()));
  RBHeap ids = tensor_rb(idt, id2);
  CHECK(ids.B() == LinearMap::identity(4));
  RBHeap c = tensor_rb(proj, flip);
  CHECK(oracle_rb(c.heap(), c.B()));
  // Coordinates follow the tensor heap's i*m + j layout.
  CHECK(a.B().at(0, 0) == Scalar(-1));
  CHECK(a.B().at(3, 3) == Scalar(1));
  CHECK(throws_code(ErrorCode::FieldMismatch, [&] { tensor_rb(flip, certify(RBHeap(hp(2), LinearMap::identity(2)))); }));
}

TEST_CASE("descendent heaps") {
  HopfHeap trig = corpus::trig_heap();
  for (const auto& b : {corpus::trig_b_flip(), LinearMap::identity(2)}) {
    DescendentHeap d = descendent_heap(certify(RBHeap(trig, b)));
    CHECK(d.heap.verified());
    CHECK(d.heap.coalgebra().comul() == trig.coalgebra().comul());
    for (std::size_t a = 0; a < 2; ++a) CHECK(oracle_descendent(trig, b, a) == oracle::comul(trig.coalgebra().comul(), e(2, a)));
    CHECK(d.report.passed());
    CHECK(d.report.find("descendent.intertwines") != nullptr);
    CHECK(d.report.find("hom.map.bracket") != nullptr);
    CHECK(d.report.find("descendent-rb.comultiplication") != nullptr);
  }
  RBHeap proj = certify(RBHeap(trig, corpus::trig_b_proj()));
  try {
    descendent_heap(proj);
    FAIL("expected NotSurjective");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotSurjective);
    CHECK(std::string(err.what()).find("rank 1") != std::string::npos);
  }
  HopfHeap sw = heap_from_hopf(corpus::sweedler_algebra());
  CHECK(throws_code(ErrorCode::NotCommutative, [&] { descendent_heap(certify(RBHeap(sw, LinearMap(4, 4)))); }));

  // Group heap: every affine bijection is an operator and Δ' matches the direct formula.
  HopfHeap z3 = hp(3);
  for (const auto& b : z3_affine_bijections()) {
    RBHeap r = certify(RBHeap(z3, b));
    Tensor dp = descendent_comul(r);
    for (std::size_t a = 0; a < 3; ++a) {
      Mat2 o = oracle_descendent(z3, b, a);
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q) CHECK(dp.at({a, p, q}) == o[p][q]);
    }
    CHECK(descendent_heap(r).report.passed());
  }
}

TEST_CASE("descendents of conjugate operators are isomorphic") {
  HopfHeap trig = corpus::trig_heap();
  for (const auto& b : {corpus::trig_b_flip(), LinearMap::identity(2)}) {
    RBHeap r = certify(RBHeap(trig, b));
    for (const auto& psi : {LinearMap::identity(2), diag(-1, 1)}) CHECK(check_descendent_iso(r, psi).pass);
  }
  HopfHeap z3 = hp(3);
  for (const auto& b : z3_affine_bijections()) {
    RBHeap r = certify(RBHeap(z3, b));
    for (const auto& psi : z3_affine_bijections()) CHECK(check_descendent_iso(r, psi).pass);
  }
}

TEST_CASE("co-braces") {
  HopfHeap trig = corpus::trig_heap();
  Vec xp = corpus::trig_grouplike(1);
  CoBrace cb = cobrace_from_rb(certify(RBHeap(trig, LinearMap::identity(2))), xp);
  CHECK(cb.report.passed());
  CHECK(cb.first.verified());
  CHECK(cb.second.verified());
  CHECK(cb.first.coalgebra() == cb.second.coalgebra());
  const Check* c = cb.report.find("cobrace.compatibility");
  REQUIRE(c != nullptr);
  CHECK(c->pass);
  CHECK(throws_code(ErrorCode::FixedPointFails,
                    [&] { cobrace_from_rb(certify(RBHeap(trig, corpus::trig_b_flip())), xp); }));
  CHECK(throws_code(ErrorCode::NotSurjective,
                    [&] { cobrace_from_rb(certify(RBHeap(trig, corpus::trig_b_proj())), xp); }));

  // Z/3 bijections fixing the chosen group-like.
  HopfHeap z3 = hp(3);
  std::size_t built = 0;
  for (const auto& b : z3_affine_bijections())
    for (std::size_t x = 0; x < 3; ++x) {
      RBHeap r = certify(RBHeap(z3, b));
      if (b.column(x) != e(3, x)) {
        CHECK(throws_code(ErrorCode::FixedPointFails, [&] { cobrace_from_rb(r, e(3, x)); }));
        continue;
      }
      CHECK(cobrace_from_rb(r, e(3, x)).report.passed());
      ++built;
    }
  // Each x is fixed by the identity and by i -> 2x - i.
  CHECK(built == 6);
}

TEST_CASE("Rota-Baxter heap modules") {
  HopfHeap trig = corpus::trig_heap();
  RBHeap flip = certify(RBHeap(trig, corpus::trig_b_flip()));
  RBHeapModule self = self_rb_module(flip);
  CHECK(self.verified());
  CHECK(oracle_rb_module(self.module(), self.T(), flip.B()));

  // Both sides are linear in T, so scaling T keeps the identity.
  RBHeapModule twice(self.module(), flip.B().scaled(Scalar(2)), flip);
  CHECK(verify_rb_heap_module(twice).passed());
  CHECK(oracle_rb_module(twice.module(), twice.T(), flip.B()));

  for (const auto& t : {LinearMap::from_rows({{0, 1}, {1, 0}}), diag(1, 0), diag(0, 1), LinearMap::identity(2)}) {
    RBHeapModule m(self.module(), t, flip);
    CHECK(verify_rb_heap_module(m).passed() == oracle_rb_module(m.module(), t, flip.B()));
  }
  // On group-likes the identity reads T(g) ∈ span B(g); the identity map breaks it.
  RBHeapModule bad(self.module(), LinearMap::identity(2), flip);
  auto r = verify_rb_heap_module(bad);
  CHECK_FALSE(r.passed());
  CHECK(throws_code(ErrorCode::DimMismatch,
                    [&] { RBHeapModule(self_heap_module(trig, Side::Left), flip.B(), flip); }));
}

TEST_CASE("induced operators on free modules") {
  HopfHeap trig = corpus::trig_heap();
  RBHeap flip = certify(RBHeap(trig, corpus::trig_b_flip()));
  std::size_t n = 2, dm = 2;

  Tensor collapse({dm, n, dm});
  for (std::size_t m = 0; m < dm; ++m)
    for (std::size_t h = 0; h < n; ++h)
      if (Scalar c = trig.coalgebra().counit().at({h}); !c.is_zero()) collapse.set({m, h, m}, c);
  RBHeapModule a = induced_rb_module(flip, collapse);
  CHECK(a.verified());
  CHECK(a.T() == LinearMap::identity(dm).kron(flip.B()));

  RBHeapModule z = induced_rb_module(flip, Tensor({dm, n, dm}));
  CHECK(z.T() == LinearMap(dm * n, dm * n));

  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Scalar i = Scalar::root(-1);
  for (int trial = 0; trial < 3; ++trial) {
    Tensor f({dm, n, dm});
    for (std::size_t p = 0; p < dm; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t s = 0; s < dm; ++s)
          f.set({p, q, s}, Scalar::frac(num(rng), den(rng)) + Scalar::frac(num(rng), den(rng)) * i);
    RBHeapModule m = induced_rb_module(flip, f);
    CHECK(oracle_rb_module(m.module(), m.T(), flip.B()));
  }
  CHECK(throws_code(ErrorCode::DimMismatch, [&] { induced_rb_module(flip, Tensor({2, 3, 2})); }));
}

TEST_CASE("structure theorem with operators") {
  HopfHeap trig = corpus::trig_heap();
  Vec xp = corpus::trig_grouplike(1);
  RBHeap flip = certify(RBHeap(trig, corpus::trig_b_flip()));
  RBStructureIso s = rb_structure_iso(self_rb_module(flip), xp);
  for (const char* id : {"rb-iso.image", "rb-iso.alpha", "rb-iso.beta", "free.rb-module.identity"}) {
    const Check* c = s.report.find(id);
    REQUIRE(c != nullptr);
    CHECK(c->pass);
  }
  CHECK(s.iso.alpha * s.t_hat == flip.B() * s.iso.alpha);
  CHECK(s.t_hat * s.iso.beta == s.iso.beta * flip.B());
  CHECK(verify_module_hom(s.iso.alpha, s.iso.free, self_heap_module(trig, Side::Right)).passed());

  // With T = id and B = id the operator is m⊗h -> m⊗h, the collapse form.
  RBHeap id = certify(RBHeap(trig, LinearMap::identity(2)));
  CHECK(rb_structure_iso(self_rb_module(id), xp).t_hat == LinearMap::identity(2));

  RBHeap idz = certify(RBHeap(hp(2), LinearMap::identity(2)));
  CHECK(rb_structure_iso(self_rb_module(idz), e(2, 0)).report.passed());

  Tensor collapse({2, 2, 2});
  for (std::size_t m = 0; m < 2; ++m) collapse.set({m, 1, m}, 1);
  RBStructureIso free = rb_structure_iso(induced_rb_module(flip, collapse), xp);
  CHECK(free.report.passed());

  CHECK(throws_code(ErrorCode::NotGroupLike, [&] { rb_structure_iso(self_rb_module(flip), e(2, 0)); }));
  RBHeap zero = certify(RBHeap(trig, LinearMap(2, 2)));
  CHECK(throws_code(ErrorCode::CounitCondFails, [&] { rb_structure_iso(self_rb_module(zero), xp); }));
}
