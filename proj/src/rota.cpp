#include "hopfkit/rota.hpp"

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

namespace {

void check_operator(const LinearMap& b, std::size_t n, const FieldSpec& field, const std::string& what) {
  if (b.rows() != n || b.cols() != n)
    throw Error(ErrorCode::DimMismatch, what + " must be " + std::to_string(n) + " x " + std::to_string(n));
  check_in_field(b.tensor(), field, what);
}

bool preserves_counit(const Coalgebra& c, const LinearMap& b) {
  Vec eps = c.counit().to_vec();
  for (std::size_t j = 0; j < c.dim(); ++j)
    if (!(c.counit_of(b.column(j)) == eps[j])) return false;
  return true;
}

bool same_heap(const HopfHeap& a, const HopfHeap& b) {
  return a.coalgebra() == b.coalgebra() && a.chi() == b.chi();
}

void require_commutative(const HopfHeap& h) {
  if (!is_commutative_heap(h)) throw Error(ErrorCode::NotCommutative, "heap is not commutative");
}

void require_grouplike(const Coalgebra& c, const Vec& x) {
  if (!is_grouplike(c, x)) throw Error(ErrorCode::NotGroupLike, format_vec(x, c.names()) + " is not group-like");
}

void require_counit_preserved(const Coalgebra& c, const LinearMap& b) {
  if (!preserves_counit(c, b)) throw Error(ErrorCode::CounitCondFails, "ε∘B differs from ε");
}

void require_invertible(const LinearMap& b) {
  std::size_t r = rank(b);
  if (r < b.cols())
    throw Error(ErrorCode::NotSurjective, "B has rank " + std::to_string(r) + " < " + std::to_string(b.cols()));
}

}  // namespace

RBHeap::RBHeap(HopfHeap heap, LinearMap b) : heap_(std::move(heap)), b_(std::move(b)) {
  check_operator(b_, heap_.dim(), heap_.field(), "B");
}

RBCooperator::RBCooperator(HopfAlgebra hopf, LinearMap b) : hopf_(std::move(hopf)), b_(std::move(b)) {
  check_operator(b_, hopf_.dim(), hopf_.field(), "B");
}

RBHeapModule::RBHeapModule(HeapModule module, LinearMap t, RBHeap rb)
    : module_(std::move(module)), t_(std::move(t)), rb_(std::move(rb)) {
  if (module_.side() != Side::Right) throw Error(ErrorCode::DimMismatch, "Rota-Baxter modules are right modules");
  if (!same_heap(module_.parent(), rb_.heap()))
    throw Error(ErrorCode::DimMismatch, "module and operator live over different heaps");
  check_operator(t_, module_.dim(), module_.parent().field(), "T");
}

RBHeap certify(RBHeap r) {
  if (!r.verified_) {
    auto rep = verify_rb_heap(r.heap_, r.b_);
    if (!rep.passed()) throw Error(ErrorCode::ConstructionInvalid, "operator fails " + rep.first_failure()->id);
    r.heap_ = certify(r.heap_);
    r.verified_ = true;
  }
  return r;
}

RBCooperator certify(RBCooperator r) {
  if (!r.verified_) {
    auto rep = verify_rb_cooperator(r.hopf_, r.b_);
    if (!rep.passed()) throw Error(ErrorCode::ConstructionInvalid, "co-operator fails " + rep.first_failure()->id);
    r.hopf_ = certify(r.hopf_);
    r.verified_ = true;
  }
  return r;
}

RBHeapModule certify(RBHeapModule m) {
  if (!m.verified_) {
    auto rep = verify_rb_heap_module(m);
    if (!rep.passed()) throw Error(ErrorCode::ConstructionInvalid, "module operator fails " + rep.first_failure()->id);
    m.verified_ = true;
  }
  return m;
}

void require_verified(const RBHeap& r) {
  if (r.verified()) return;
  auto rep = verify_rb_heap(r.heap(), r.B());
  if (!rep.passed()) throw Error(ErrorCode::Unverified, "input operator fails " + rep.first_failure()->id);
}

VerificationReport verify_rb_heap(const HopfHeap& h, const LinearMap& b) {
  require_verified(h);
  check_operator(b, h.dim(), h.field(), "B");
  VerificationReport r;
  r.subject = "Rota-Baxter operator";
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  {
    Composite lhs({n, n, n}), rhs({n, n, n});
    lhs.apply(h.chi(), 3, {0, 1, 2}).apply(b, 0);
    rhs.apply(b, 0).apply(b, 1).apply(b, 2).apply(h.chi(), 3, {0, 1, 2});
    r.add(compare("rb.bracket", "B[a,b,c] = [Ba,Bb,Bc]", lhs, rhs, {nm, nm, nm}, {nm}));
  }
  {
    Tensor c4 = iterated_comul(h.coalgebra().comul(), 4);
    Composite lhs({n}), rhs({n});
    lhs.apply(h.coalgebra().comul(), 1, {0}).apply(b, 0).apply(b, 1);
    rhs.apply(b, 0).apply(c4, 1, {0}).apply(b, 3).apply(b, 1).apply(h.chi(), 3, {0, 3, 1});
    r.add(compare("rb.comultiplication", "B(a1)⊗B(a2) = [y1,B(y4),B(y2)]⊗y3, y = B(a)", lhs, rhs, {nm}, {nm, nm}));
  }
  return r;
}

VerificationReport verify_rb_cooperator(const HopfAlgebra& h, const LinearMap& b) {
  require_verified(h);
  check_operator(b, h.dim(), h.field(), "B");
  if (!is_commutative_algebra(h)) throw Error(ErrorCode::NotCommutativeAlgebra, "Hopf algebra is not commutative");
  VerificationReport r;
  r.subject = "Rota-Baxter co-operator";
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  {
    Composite lhs({n, n}), rhs({n, n});
    lhs.apply(h.mul(), 2, {0, 1}).apply(b, 0);
    rhs.apply(b, 0).apply(b, 1).apply(h.mul(), 2, {0, 1});
    Check c = compare("cooperator.multiplicative", "B(ab) = B(a)B(b)", lhs, rhs, {nm, nm}, {nm});
    if (!c.pass) throw Error(ErrorCode::NotAlgebraMap, "B(ab) differs from B(a)B(b)");
    r.add(c);
  }
  if (!(b.apply(h.unit()) == h.unit())) throw Error(ErrorCode::NotAlgebraMap, "B(1) differs from 1");
  r.add(condition("cooperator.unit", "B(1) = 1", true));
  {
    Tensor c4 = iterated_comul(h.coalgebra().comul(), 4);
    Composite lhs({n}), rhs({n});
    lhs.apply(h.coalgebra().comul(), 1, {0}).apply(b, 0).apply(b, 1);
    rhs.apply(b, 0).apply(c4, 1, {0}).apply(h.antipode(), 3).apply(h.mul(), 2, {1, 3}).apply(b, 1);
    rhs.apply(h.mul(), 2, {0, 1});
    r.add(compare("cooperator.comultiplication", "B(a1)⊗B(a2) = y1B(y2S(y4))⊗y3, y = B(a)", lhs, rhs, {nm},
                  {nm, nm}));
  }
  return r;
}

RBHeap rb_heap_from_cooperator(const RBCooperator& r) {
  const HopfAlgebra& h = r.hopf();
  if (!(h.antipode() * r.B() == r.B() * h.antipode()))
    throw Error(ErrorCode::AntipodeCommutationFails, "S∘B differs from B∘S");
  RBCooperator v = certify(r);
  return certify(RBHeap(heap_from_hopf(v.hopf()), v.B()));
}

RBCooperator cooperator_from_rb_heap(const RBHeap& r, const Vec& x) {
  require_verified(r);
  require_commutative(r.heap());
  require_grouplike(r.heap().coalgebra(), x);
  if (!(r.B().apply(x) == x))
    throw Error(ErrorCode::FixedPointFails,
                "B(x) = " + format_vec(r.B().apply(x), r.heap().names()) + " differs from x");
  return certify(RBCooperator(hopf_from_heap(r.heap(), x), r.B()));
}

RBHeap conjugate_rb(const RBHeap& r, const LinearMap& psi) {
  require_verified(r);
  const HopfHeap& h = r.heap();
  check_operator(psi, h.dim(), h.field(), "ψ");
  std::size_t k = rank(psi);
  if (k < h.dim()) throw Error(ErrorCode::NotAutomorphism, "ψ has rank " + std::to_string(k));
  auto rep = verify_heap_hom(psi, h, h);
  if (!rep.passed()) throw Error(ErrorCode::NotAutomorphism, "ψ fails " + rep.first_failure()->id);
  return certify(RBHeap(h, psi * r.B() * matrix_inverse(psi)));
}

RBHeap translate_rb(const RBHeap& r, const Vec& x, const Vec& y) {
  require_verified(r);
  const HopfHeap& h = r.heap();
  const Coalgebra& c = h.coalgebra();
  require_commutative(h);
  require_counit_preserved(c, r.B());
  require_grouplike(c, x);
  require_grouplike(c, y);
  Vec bx = r.B().apply(x);
  if (!is_grouplike(c, bx))
    throw Error(ErrorCode::ImageNotGroupLike, "B(x) = " + format_vec(bx, h.names()) + " is not group-like");
  return certify(RBHeap(h, translation_map(h, x, y, Side::Right) * r.B()));
}

RBHeap tensor_rb(const RBHeap& a, const RBHeap& b) {
  if (!(a.heap().field() == b.heap().field()))
    throw Error(ErrorCode::FieldMismatch, "operators over different fields");
  require_verified(a);
  require_verified(b);
  return certify(RBHeap(tensor_heap(a.heap(), b.heap()), a.B().kron(b.B())));
}

Tensor descendent_comul(const RBHeap& r) {
  const HopfHeap& h = r.heap();
  Composite d({h.dim()});
  d.apply(iterated_comul(h.coalgebra().comul(), 4), 1, {0}).apply(r.B(), 3).apply(r.B(), 1);
  d.apply(h.chi(), 3, {0, 3, 1});
  return d.tensor();
}

DescendentHeap descendent_heap(const RBHeap& r) {
  require_verified(r);
  const HopfHeap& h = r.heap();
  const Coalgebra& c = h.coalgebra();
  require_commutative(h);
  require_invertible(r.B());
  require_counit_preserved(c, r.B());

  std::size_t n = h.dim();
  const Names* nm = &h.names();
  Tensor dprime = descendent_comul(r);
  HopfHeap cb(Coalgebra(c.field(), c.names(), dprime, c.counit()), h.chi());
  DescendentHeap out{.heap = cb, .B = r.B(), .report = {}};
  out.report.subject = "descendent heap";
  out.report.merge(verify_hopf_heap(cb), "descendent.");
  if (!out.report.passed())
    throw Error(ErrorCode::ConstructionInvalid, "descendent fails " + out.report.first_failure()->id);
  out.heap = certify(cb);
  {
    Composite lhs({n}), rhs({n});
    lhs.apply(r.B(), 0).apply(dprime, 1, {0});
    rhs.apply(c.comul(), 1, {0}).apply(r.B(), 0).apply(r.B(), 1);
    out.report.add(compare("descendent.intertwines", "Δ'B = (B⊗B)Δ", lhs, rhs, {nm}, {nm, nm}));
  }
  out.report.merge(verify_heap_hom(r.B(), h, out.heap), "hom.");
  out.report.merge(verify_rb_heap(out.heap, r.B()), "descendent-");
  if (!out.report.passed())
    throw Error(ErrorCode::ConstructionInvalid, "descendent fails " + out.report.first_failure()->id);
  return out;
}

Check check_descendent_iso(const RBHeap& r, const LinearMap& psi) {
  RBHeap conj = conjugate_rb(r, psi);
  Tensor d1 = descendent_heap(r).heap.coalgebra().comul();
  Tensor d2 = descendent_heap(conj).heap.coalgebra().comul();
  std::size_t n = r.heap().dim();
  const Names* nm = &r.heap().names();
  Composite lhs({n}), rhs({n});
  lhs.apply(d1, 1, {0}).apply(psi, 0).apply(psi, 1);
  rhs.apply(psi, 0).apply(d2, 1, {0});
  return compare("descendent.conjugation", "(ψ⊗ψ)Δ'_B = Δ'_{ψBψ⁻¹}ψ", lhs, rhs, {nm}, {nm, nm});
}

CoBrace cobrace_from_rb(const RBHeap& r, const Vec& x) {
  DescendentHeap d = descendent_heap(r);
  const HopfHeap& h = r.heap();
  require_grouplike(h.coalgebra(), x);
  if (!(r.B().apply(x) == x))
    throw Error(ErrorCode::FixedPointFails, "B(x) = " + format_vec(r.B().apply(x), h.names()) + " differs from x");

  HopfAlgebra first = hopf_from_heap(h, x);
  const Coalgebra& c2 = d.heap.coalgebra();
  auto s2 = find_antipode(c2, first.mul(), x);
  if (!s2) throw Error(ErrorCode::NoAntipode, "(H_x, Δ') has no antipode");
  HopfAlgebra second(c2, first.mul(), x, *s2);

  CoBrace out;
  out.report.subject = "Hopf co-brace";
  out.report.merge(verify_hopf_algebra(first), "first.");
  out.report.merge(verify_hopf_algebra(second), "second.");
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  const Tensor& dp = c2.comul();
  Composite lhs({n}), rhs({n});
  lhs.apply(iterated_comul(h.coalgebra().comul(), 3), 1, {0}).apply(dp, 1, {0}).apply(dp, 1, {3});
  lhs.apply(first.antipode(), 2).apply(first.mul(), 2, {0, 2}).apply(first.mul(), 2, {0, 2});
  rhs.apply(dp, 1, {0}).apply(h.coalgebra().comul(), 1, {1});
  out.report.add(compare("cobrace.compatibility", "h11'S(h2)h31'⊗h12'⊗h32' = h1'⊗h2'1⊗h2'2", lhs, rhs, {nm},
                         {nm, nm, nm}));
  if (!out.report.passed())
    throw Error(ErrorCode::ConstructionInvalid, "co-brace fails " + out.report.first_failure()->id);
  out.first = certify(first);
  out.second = certify(second);
  return out;
}

VerificationReport verify_rb_heap_module(const RBHeapModule& m) {
  require_verified(m.module());
  require_verified(m.rb());
  VerificationReport r;
  r.subject = "Rota-Baxter heap module";
  const HeapModule& mod = m.module();
  const HopfHeap& h = mod.parent();
  std::size_t d = mod.dim();
  const Names* hn = &h.names();
  const Names* mn = &mod.names();
  const LinearMap& t = m.T();
  const LinearMap& b = m.rb().B();
  Composite lhs({d}), rhs({d});
  lhs.apply(mod.coaction(), 1, {0}).apply(t, 0).apply(b, 1);
  rhs.apply(t, 0).apply(mod.coaction(), 1, {0}).apply(iterated_comul(h.coalgebra().comul(), 3), 1, {1});
  rhs.apply(b, 3).apply(b, 1).apply(mod.action(), 3, {0, 3, 1});
  r.add(compare("rb-module.identity", "T(m(0))⊗B(m(1)) = n(0)◁(B(z3)⊗B(z1))⊗z2, n = T(m), z = Δ²(n(1))", lhs,
                rhs, {mn}, {mn, hn}));
  return r;
}

RBHeapModule induced_rb_module(const RBHeap& r, const Tensor& f) {
  require_verified(r);
  const HopfHeap& h = r.heap();
  std::size_t n = h.dim();
  if (f.arity() != 3 || f.dim(1) != n || f.dim(0) != f.dim(2))
    throw Error(ErrorCode::DimMismatch, "F must have shape m x " + std::to_string(n) + " x m");
  check_in_field(f, h.field(), "F");
  std::size_t dm = f.dim(0);
  HeapModule mod = free_heap_module(h, dm, Side::Right);
  Composite k({dm, n});
  k.apply(h.coalgebra().comul(), 1, {1}).apply(f, 2, {0, 1}).apply(r.B(), 1);
  LinearMap t(dm * n, dm * n);
  for (const auto& [i, v] : k.tensor().entries()) t.set(i[2] * n + i[3], i[0] * n + i[1], v);
  return certify(RBHeapModule(mod, t, r));
}

RBHeapModule self_rb_module(const RBHeap& r) {
  return certify(RBHeapModule(self_heap_module(r.heap(), Side::Right), r.B(), r));
}

RBStructureIso rb_structure_iso(const RBHeapModule& m, const Vec& x) {
  RBHeapModule v = certify(m);
  const HeapModule& mod = v.module();
  const HopfHeap& h = mod.parent();
  require_commutative(h);
  require_counit_preserved(h.coalgebra(), v.rb().B());
  require_grouplike(h.coalgebra(), x);

  RBStructureIso out{.iso = structure_iso(mod, x), .t_hat = {}, .report = {}};
  out.report.subject = "Rota-Baxter structure isomorphism";
  const auto& basis = out.iso.coinvariant_basis;
  std::size_t n = h.dim(), d = mod.dim(), k = basis.size();

  // (m, h) -> P(T(m◁(x⊗h1)))⊗B(h2) as a tensor (m, h, m', h').
  Composite g({d, n});
  g.apply(h.coalgebra().comul(), 1, {1}).insert(x, 1).apply(mod.action(), 3, {0, 1, 2}).apply(v.T(), 0);
  g.apply(out.iso.projection, 0).apply(v.rb().B(), 1);
  const Tensor& gt = g.tensor();

  Matrix kb(d, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < d; ++r) kb(r, j) = basis[j][r];
  out.t_hat = LinearMap(n * k, n * k);
  bool contained = true;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t hh = 0; hh < n; ++hh)
      for (std::size_t h2 = 0; h2 < n; ++h2) {
        Vec w = zero_vec(d);
        for (std::size_t mm = 0; mm < d; ++mm) {
          if (basis[j][mm].is_zero()) continue;
          for (std::size_t r = 0; r < d; ++r) w[r] = w[r] + basis[j][mm] * gt.at({mm, hh, r, h2});
        }
        if (is_zero(w)) continue;
        auto coords = solve(kb, w);
        if (!coords) {
          contained = false;
          continue;
        }
        for (std::size_t i = 0; i < k; ++i) out.t_hat.set(i * n + h2, j * n + hh, (*coords)[i]);
      }
  out.report.add(condition("rb-iso.image", "Im T̂ ⊂ M^co⊗H", contained));
  out.report.add(condition("rb-iso.alpha", "α∘T̂ = T∘α", out.iso.alpha * out.t_hat == v.T() * out.iso.alpha));
  out.report.add(condition("rb-iso.beta", "T̂∘β = β∘T", out.t_hat * out.iso.beta == out.iso.beta * v.T()));
  if (contained) {
    RBHeapModule free(out.iso.free, out.t_hat, v.rb());
    out.report.merge(verify_rb_heap_module(free), "free.");
  }
  if (!out.report.passed())
    throw Error(ErrorCode::ConstructionInvalid, "structure map fails " + out.report.first_failure()->id);
  return out;
}

std::vector<RBHeap> search_rb_operators(const HopfHeap& h, const std::vector<LinearMap>& family) {
  require_verified(h);
  std::vector<RBHeap> out;
  for (const auto& b : family) {
    if (b.rows() != h.dim() || b.cols() != h.dim()) continue;
    if (verify_rb_heap(h, b).passed()) out.push_back(certify(RBHeap(h, b)));
  }
  return out;
}

}  // namespace hopfkit
