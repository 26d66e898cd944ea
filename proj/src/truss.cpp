#include "hopfkit/truss.hpp"

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

namespace {

void check_circ(const Coalgebra& c, const Tensor& circ) {
  std::size_t n = c.dim();
  if (circ.dims() != std::vector<std::size_t>{n, n, n})
    throw Error(ErrorCode::DimMismatch, "∘ must have shape n x n x n for n = " + std::to_string(n));
  check_in_field(circ, c.field(), "∘");
}

// Associativity, comultiplicativity and counit of a product without unit.
void add_nonunital_checks(VerificationReport& r, const Coalgebra& c, const Tensor& circ) {
  std::size_t n = c.dim();
  const Names* nm = &c.names();
  {
    Composite lhs({n, n, n}), rhs({n, n, n});
    lhs.apply(circ, 2, {0, 1}).apply(circ, 2, {0, 1});
    rhs.apply(circ, 2, {1, 2}).apply(circ, 2, {0, 1});
    r.add(compare("truss.associativity", "(a∘b)∘c = a∘(b∘c)", lhs, rhs, {nm, nm, nm}, {nm}));
  }
  {
    Composite lhs({n, n}), rhs({n, n});
    lhs.apply(circ, 2, {0, 1}).apply(c.comul(), 1, {0});
    rhs.apply(c.comul(), 1, {0}).apply(c.comul(), 1, {2}).apply(circ, 2, {0, 2}).apply(circ, 2, {1, 2});
    r.add(compare("truss.comultiplicative", "Δ(a∘b) = a1∘b1⊗a2∘b2", lhs, rhs, {nm, nm}, {nm, nm}));
  }
  {
    Composite lhs({n, n}), rhs({n, n});
    lhs.apply(circ, 2, {0, 1}).apply(c.counit(), 1, {0});
    rhs.apply(c.counit(), 1, {0}).apply(c.counit(), 1, {0});
    r.add(compare("truss.counit", "ε(a∘b) = ε(a)ε(b)", lhs, rhs, {nm, nm}, {}));
  }
}

// (a1∘b) S(s(a2)) (a3∘c) as a composite in (a, b, c).
Composite cocycle_side(const HopfAlgebra& h, const Tensor& circ, const LinearMap& s) {
  std::size_t n = h.dim();
  Composite k({n, n, n});
  k.apply(iterated_comul(h.coalgebra().comul(), 3), 1, {0});
  k.apply(circ, 2, {0, 3}).apply(s, 1).apply(h.antipode(), 1).apply(circ, 2, {2, 3});
  k.apply(h.mul(), 2, {0, 1}).apply(h.mul(), 2, {0, 1});
  return k;
}

Check cocycle_check(const std::string& id, const std::string& law, const HopfAlgebra& h, const Tensor& circ,
                    const LinearMap& s) {
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  Composite lhs({n, n, n});
  lhs.apply(h.mul(), 2, {1, 2}).apply(circ, 2, {0, 1});
  return compare(id, law, lhs, cocycle_side(h, circ, s), {nm, nm, nm}, {nm});
}

LinearMap right_action(const Tensor& circ, const Vec& x) {
  Composite k({x.size()});
  k.insert(x, 1).apply(circ, 2, {0, 1});
  return LinearMap::from_operator(k.tensor());
}

void require_commutative_cocommutative(const HopfHeap& h) {
  if (!is_commutative_heap(h)) throw Error(ErrorCode::NotCommutative, "heap is not commutative");
  if (!is_cocommutative(h.coalgebra())) throw Error(ErrorCode::NotCommutative, "heap is not cocommutative");
}

}  // namespace

HopfTruss::HopfTruss(HopfHeap heap, Tensor circ) : heap_(std::move(heap)), circ_(std::move(circ)) {
  check_circ(heap_.coalgebra(), circ_);
}

CocycleTruss::CocycleTruss(HopfAlgebra hopf, Tensor circ, LinearMap sigma)
    : hopf_(std::move(hopf)), circ_(std::move(circ)), sigma_(std::move(sigma)) {
  check_circ(hopf_.coalgebra(), circ_);
  std::size_t n = hopf_.dim();
  if (sigma_.rows() != n || sigma_.cols() != n)
    throw Error(ErrorCode::DimMismatch, "σ must be " + std::to_string(n) + " x " + std::to_string(n));
  check_in_field(sigma_.tensor(), hopf_.field(), "σ");
}

HopfBrace::HopfBrace(HopfAlgebra dot, HopfAlgebra circ) : dot_(std::move(dot)), circ_(std::move(circ)) {
  if (!(dot_.coalgebra() == circ_.coalgebra()))
    throw Error(ErrorCode::DimMismatch, "the two Hopf algebras of a brace must share their coalgebra");
}

HopfTruss certify(HopfTruss t) {
  if (!t.verified_) {
    auto r = verify_hopf_truss(t);
    if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "truss fails " + r.first_failure()->id);
    t.verified_ = true;
  }
  return t;
}

CocycleTruss certify(CocycleTruss t) {
  if (!t.verified_) {
    auto r = verify_truss_cocycle_form(t);
    if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "truss fails " + r.first_failure()->id);
    t.verified_ = true;
  }
  return t;
}

HopfBrace certify(HopfBrace b) {
  if (!b.verified_) {
    auto r = verify_hopf_brace(b);
    if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "brace fails " + r.first_failure()->id);
    b.verified_ = true;
  }
  return b;
}

VerificationReport verify_hopf_truss(const HopfTruss& t) {
  const HopfHeap& h = t.heap();
  require_verified(h);
  VerificationReport r;
  r.subject = "hopf truss";
  add_nonunital_checks(r, h.coalgebra(), t.circ());
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  Composite lhs({n, n, n, n}), rhs({n, n, n, n});
  lhs.apply(h.chi(), 3, {1, 2, 3}).apply(t.circ(), 2, {0, 1});
  rhs.apply(iterated_comul(h.coalgebra().comul(), 3), 1, {0});
  rhs.apply(t.circ(), 2, {0, 3}).apply(t.circ(), 2, {1, 3}).apply(t.circ(), 2, {2, 3});
  rhs.apply(h.chi(), 3, {0, 1, 2});
  r.add(compare("truss.distributivity", "a∘[b,c,d] = [a1∘b, a2∘c, a3∘d]", lhs, rhs, {nm, nm, nm, nm}, {nm}));
  return r;
}

VerificationReport verify_truss_cocycle_form(const CocycleTruss& t) {
  const HopfAlgebra& h = t.hopf();
  require_verified(h);
  VerificationReport r;
  r.subject = "hopf truss (cocycle form)";
  r.merge(verify_coalgebra_map(t.sigma(), h.coalgebra(), h.coalgebra()), "sigma.");
  add_nonunital_checks(r, h.coalgebra(), t.circ());
  r.add(cocycle_check("truss.cocycle", "a∘(bc) = (a1∘b)S(σ(a2))(a3∘c)", h, t.circ(), t.sigma()));
  return r;
}

VerificationReport verify_hopf_brace(const HopfBrace& b) {
  VerificationReport r;
  r.subject = "hopf brace";
  r.merge(verify_hopf_algebra(b.dot()), "dot.");
  r.merge(verify_hopf_algebra(b.circ()), "circ.");
  r.add(cocycle_check("brace.compatibility", "a∘(bc) = (a1∘b)S(a2)(a3∘c)", b.dot(), b.circ().mul(),
                      LinearMap::identity(b.dim())));
  return r;
}

HopfTruss trivial_truss(const HopfHeap& h, const Vec& x) {
  require_verified(h);
  if (!is_grouplike(h.coalgebra(), x)) throw Error(ErrorCode::NotGroupLike, format_vec(x, h.names()) + " is not group-like");
  std::size_t n = h.dim();
  const Tensor& counit = h.coalgebra().counit();
  Composite k({n, n});
  k.apply(counit, 1, {0}).apply(counit, 1, {0}).insert(x, 0);
  return certify(HopfTruss(h, k.tensor()));
}

HopfTruss alpha_truss(const HopfHeap& h, const LinearMap& alpha, AlphaVariant variant) {
  require_verified(h);
  require_commutative_cocommutative(h);
  if (!verify_heap_hom(alpha, h, h).passed()) throw Error(ErrorCode::NotHeapEndo, "α is not a heap endomorphism");
  if (!(alpha * alpha == alpha)) throw Error(ErrorCode::NotIdempotent, "α∘α differs from α");
  std::size_t n = h.dim();
  Composite k({n, n});
  k.apply(h.coalgebra().comul(), 1, {variant == AlphaVariant::First ? 0u : 1u});
  k.apply(alpha, 1).apply(h.chi(), 3, {0, 1, 2});
  return certify(HopfTruss(h, k.tensor()));
}

CocycleTruss shifted_truss(const CocycleTruss& t, const Vec& x) {
  CocycleTruss v = certify(t);
  HopfHeap h = heap_from_hopf(v.hopf());
  HopfAlgebra hx = hopf_from_heap(h, x);
  return certify(CocycleTruss(hx, v.circ(), right_action(v.circ(), x)));
}

CocycleTruss cocycle_form(const HopfTruss& t, const Vec& x) {
  HopfAlgebra hx = hopf_from_heap(t.heap(), x);
  return CocycleTruss(hx, t.circ(), right_action(t.circ(), x));
}

HopfTruss heap_form(const CocycleTruss& t) { return HopfTruss(heap_from_hopf(t.hopf()), t.circ()); }

std::optional<Vec> circ_unit(const Coalgebra& c, const Tensor& circ) {
  std::size_t n = c.dim();
  // Unknown e: sum_j e_j circ[j][a][m] = δ_am and sum_j e_j circ[a][j][m] = δ_am.
  Matrix a(2 * n * n, n);
  Vec b(2 * n * n);
  for (const auto& [k, v] : circ.entries()) {
    a(k[1] * n + k[2], k[0]) += v;
    a(n * n + k[0] * n + k[2], k[1]) += v;
  }
  for (std::size_t i = 0; i < n; ++i) {
    b[i * n + i] = 1;
    b[n * n + i * n + i] = 1;
  }
  return solve(a, b);
}

HopfTruss truss_from_brace(const HopfBrace& b) {
  HopfBrace v = certify(b);
  return certify(HopfTruss(heap_from_hopf(v.dot()), v.circ().mul()));
}

HopfBrace brace_from_truss(const HopfTruss& t) {
  HopfTruss v = certify(t);
  const Coalgebra& c = v.heap().coalgebra();
  auto one = circ_unit(c, v.circ());
  if (!one) throw Error(ErrorCode::NoCircUnit, "∘ has no two-sided unit");
  HopfAlgebra dot = hopf_from_heap(v.heap(), *one);
  auto s = find_antipode(c, v.circ(), *one);
  if (!s) throw Error(ErrorCode::ConstructionInvalid, "∘ has no antipode");
  return certify(HopfBrace(dot, HopfAlgebra(c, v.circ(), *one, *s)));
}

LinearMap endo_bracket(const HopfHeap& h, const LinearMap& alpha, const LinearMap& beta, const LinearMap& gamma) {
  require_verified(h);
  require_commutative_cocommutative(h);
  for (const LinearMap* f : {&alpha, &beta, &gamma})
    if (!verify_heap_hom(*f, h, h).passed()) throw Error(ErrorCode::NotHeapEndo, "bracket argument is not a heap endomorphism");
  std::size_t n = h.dim();
  Composite k({n});
  k.apply(iterated_comul(h.coalgebra().comul(), 3), 1, {0});
  k.apply(alpha, 0).apply(beta, 1).apply(gamma, 2).apply(h.chi(), 3, {0, 1, 2});
  LinearMap out = LinearMap::from_operator(k.tensor());
  auto r = verify_heap_hom(out, h, h);
  if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "bracket fails " + r.first_failure()->id);
  return out;
}

VerificationReport check_central_unit(const CocycleTruss& t) {
  const HopfAlgebra& h = t.hopf();
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  VerificationReport r;
  r.subject = "central unit";
  Composite lhs({n}), rhs({n});
  lhs.insert(h.unit(), 0).apply(t.circ(), 2, {0, 1});
  rhs.insert(h.unit(), 1).apply(t.circ(), 2, {0, 1});
  Check central = compare("truss.unit-central", "1∘a = a∘1", lhs, rhs, {nm}, {nm});
  bool ok = central.pass;
  r.add(std::move(central));
  if (ok) {
    HopfHeap heap = heap_from_hopf(h);
    r.merge(verify_heap_hom(right_action(t.circ(), h.unit()), heap, heap), "unit-action.");
  }
  return r;
}

}  // namespace hopfkit
