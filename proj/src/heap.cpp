#include "hopfkit/heap.hpp"

#include <random>

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

HopfHeap::HopfHeap(Coalgebra coalg, Tensor chi) : coalg_(std::move(coalg)), chi_(std::move(chi)) {
  std::size_t n = coalg_.dim();
  if (chi_.dims() != std::vector<std::size_t>{n, n, n, n})
    throw Error(ErrorCode::DimMismatch, "bracket tensor must have shape n x n x n x n for n = " + std::to_string(n));
  check_in_field(chi_, coalg_.field(), "bracket");
}

Vec HopfHeap::bracket(const Vec& a, const Vec& b, const Vec& c) const {
  Composite k({});
  k.insert(a, 0).insert(b, 1).insert(c, 2).apply(chi_, 3, {0, 1, 2});
  return k.tensor().to_vec();
}

HopfHeap HopfHeap::with_field(const FieldSpec& field) const { return HopfHeap(coalg_.with_field(field), chi_); }

HopfAlgebra::HopfAlgebra(Coalgebra coalg, Tensor mul, Vec unit, LinearMap antipode)
    : coalg_(std::move(coalg)), mul_(std::move(mul)), unit_(std::move(unit)), antipode_(std::move(antipode)) {
  std::size_t n = coalg_.dim();
  if (mul_.dims() != std::vector<std::size_t>{n, n, n})
    throw Error(ErrorCode::DimMismatch, "multiplication must have shape n x n x n for n = " + std::to_string(n));
  if (unit_.size() != n) throw Error(ErrorCode::DimMismatch, "unit must have length " + std::to_string(n));
  if (antipode_.rows() != n || antipode_.cols() != n)
    throw Error(ErrorCode::DimMismatch, "antipode must be " + std::to_string(n) + " x " + std::to_string(n));
  check_in_field(mul_, coalg_.field(), "multiplication");
  check_in_field(unit_, coalg_.field(), "unit");
  check_in_field(antipode_.tensor(), coalg_.field(), "antipode");
}

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
  Composite k({});
  k.insert(a, 0).insert(b, 1).apply(mul_, 2, {0, 1});
  return k.tensor().to_vec();
}

HopfHeap certify(HopfHeap h) {
  if (!h.verified_) {
    auto r = verify_hopf_heap(h);
    if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "heap fails " + r.first_failure()->id);
    h.verified_ = true;
  }
  return h;
}

HopfAlgebra certify(HopfAlgebra h) {
  if (!h.verified_) {
    auto r = verify_hopf_algebra(h);
    if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "Hopf algebra fails " + r.first_failure()->id);
    h.verified_ = true;
  }
  return h;
}

void require_verified(const HopfHeap& h) {
  if (h.verified()) return;
  auto r = verify_hopf_heap(h);
  if (!r.passed()) throw Error(ErrorCode::Unverified, "input heap fails " + r.first_failure()->id);
}

void require_verified(const HopfAlgebra& h) {
  if (h.verified()) return;
  auto r = verify_hopf_algebra(h);
  if (!r.passed()) throw Error(ErrorCode::Unverified, "input Hopf algebra fails " + r.first_failure()->id);
}

VerificationReport verify_hopf_heap(const HopfHeap& h) {
  VerificationReport r = verify_coalgebra(h.coalgebra());
  r.subject = "hopf heap";
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  const Tensor& chi = h.chi();
  const Tensor& comul = h.coalgebra().comul();
  const Tensor& counit = h.coalgebra().counit();
  {
    Composite lhs({n, n, n, n, n}), rhs({n, n, n, n, n});
    lhs.apply(chi, 3, {0, 1, 2}).apply(chi, 3, {0, 1, 2});
    rhs.apply(chi, 3, {2, 3, 4}).apply(chi, 3, {0, 1, 2});
    r.add(compare("heap.associativity", "[[a,b,c],d,h] = [a,b,[c,d,h]]", lhs, rhs, {nm, nm, nm, nm, nm}, {nm}));
  }
  {
    Composite lhs({n, n}), rhs({n, n});
    lhs.apply(comul, 1, {0}).apply(chi, 3, {0, 1, 2});
    rhs.apply(counit, 1, {0});
    r.add(compare("heap.malcev-left", "[c1,c2,a] = ε(c)a", lhs, rhs, {nm, nm}, {nm}));
  }
  {
    Composite lhs({n, n}), rhs({n, n});
    lhs.apply(comul, 1, {1}).apply(chi, 3, {0, 1, 2});
    rhs.apply(counit, 1, {1});
    r.add(compare("heap.malcev-right", "[a,c1,c2] = ε(c)a", lhs, rhs, {nm, nm}, {nm}));
  }
  {
    Composite lhs({n, n, n}), rhs({n, n, n});
    lhs.apply(chi, 3, {0, 1, 2}).apply(comul, 1, {0});
    rhs.apply(comul, 1, {0}).apply(comul, 1, {2}).apply(comul, 1, {4});
    rhs.apply(chi, 3, {0, 3, 4}).apply(chi, 3, {1, 2, 3});
    r.add(compare("heap.comultiplicative", "Δ[a,b,c] = [a1,b2,c1]⊗[a2,b1,c2]", lhs, rhs, {nm, nm, nm}, {nm, nm}));
  }
  {
    Composite lhs({n, n, n}), rhs({n, n, n});
    lhs.apply(chi, 3, {0, 1, 2}).apply(counit, 1, {0});
    rhs.apply(counit, 1, {0}).apply(counit, 1, {0}).apply(counit, 1, {0});
    r.add(compare("heap.counit", "ε[a,b,c] = ε(a)ε(b)ε(c)", lhs, rhs, {nm, nm, nm}, {}));
  }
  return r;
}

VerificationReport verify_hopf_algebra(const HopfAlgebra& h) {
  VerificationReport r = verify_coalgebra(h.coalgebra());
  r.subject = "hopf algebra";
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  const Tensor& mul = h.mul();
  const Tensor& comul = h.coalgebra().comul();
  const Tensor& counit = h.coalgebra().counit();
  Tensor unit = Tensor::vector(h.unit());
  {
    Composite lhs({n, n, n}), rhs({n, n, n});
    lhs.apply(mul, 2, {0, 1}).apply(mul, 2, {0, 1});
    rhs.apply(mul, 2, {1, 2}).apply(mul, 2, {0, 1});
    r.add(compare("algebra.associativity", "(ab)c = a(bc)", lhs, rhs, {nm, nm, nm}, {nm}));
  }
  {
    Composite lhs({n}), id({n});
    lhs.insert(unit, 0).apply(mul, 2, {0, 1});
    r.add(compare("algebra.unit-left", "1a = a", lhs, id, {nm}, {nm}));
  }
  {
    Composite lhs({n}), id({n});
    lhs.insert(unit, 1).apply(mul, 2, {0, 1});
    r.add(compare("algebra.unit-right", "a1 = a", lhs, id, {nm}, {nm}));
  }
  {
    Composite lhs({n, n}), rhs({n, n});
    lhs.apply(mul, 2, {0, 1}).apply(comul, 1, {0});
    rhs.apply(comul, 1, {0}).apply(comul, 1, {2}).apply(mul, 2, {0, 2}).apply(mul, 2, {1, 2});
    r.add(compare("bialgebra.comul-multiplicative", "Δ(ab) = a1b1⊗a2b2", lhs, rhs, {nm, nm}, {nm, nm}));
  }
  {
    Composite lhs({n, n}), rhs({n, n});
    lhs.apply(mul, 2, {0, 1}).apply(counit, 1, {0});
    rhs.apply(counit, 1, {0}).apply(counit, 1, {0});
    r.add(compare("bialgebra.counit-multiplicative", "ε(ab) = ε(a)ε(b)", lhs, rhs, {nm, nm}, {}));
  }
  {
    Composite lhs({}), rhs({});
    lhs.insert(unit, 0).apply(comul, 1, {0});
    rhs.insert(unit, 0).insert(unit, 1);
    r.add(compare("bialgebra.comul-unit", "Δ(1) = 1⊗1", lhs, rhs, {}, {nm, nm}));
  }
  {
    Composite lhs({}), rhs({});
    lhs.insert(unit, 0).apply(counit, 1, {0});
    r.add(compare("bialgebra.counit-unit", "ε(1) = 1", lhs, rhs, {}, {}));
  }
  {
    Composite lhs({n}), rhs({n});
    lhs.apply(comul, 1, {0}).apply(h.antipode(), 0).apply(mul, 2, {0, 1});
    rhs.apply(counit, 1, {0}).insert(unit, 0);
    r.add(compare("antipode.left", "S(a1)a2 = ε(a)1", lhs, rhs, {nm}, {nm}));
  }
  {
    Composite lhs({n}), rhs({n});
    lhs.apply(comul, 1, {0}).apply(h.antipode(), 1).apply(mul, 2, {0, 1});
    rhs.apply(counit, 1, {0}).insert(unit, 0);
    r.add(compare("antipode.right", "a1S(a2) = ε(a)1", lhs, rhs, {nm}, {nm}));
  }
  return r;
}

bool is_commutative_heap(const HopfHeap& h) { return permute_legs(h.chi(), {2, 1, 0, 3}) == h.chi(); }

bool is_commutative_algebra(const HopfAlgebra& h) { return permute_legs(h.mul(), {1, 0, 2}) == h.mul(); }

HopfHeap heap_from_hopf(const HopfAlgebra& h) {
  require_verified(h);
  std::size_t n = h.dim();
  Composite k({n, n, n});
  k.apply(h.antipode(), 1).apply(h.mul(), 2, {0, 1}).apply(h.mul(), 2, {0, 1});
  return certify(HopfHeap(h.coalgebra(), k.tensor()));
}

HopfAlgebra hopf_from_heap(const HopfHeap& h, const Vec& x) {
  require_verified(h);
  if (!is_grouplike(h.coalgebra(), x)) throw Error(ErrorCode::NotGroupLike, format_vec(x, h.names()) + " is not group-like");
  std::size_t n = h.dim();
  Composite mul({n, n});
  mul.insert(x, 1).apply(h.chi(), 3, {0, 1, 2});
  Composite s({n});
  s.insert(x, 0).insert(x, 2).apply(h.chi(), 3, {0, 1, 2});
  return certify(HopfAlgebra(h.coalgebra(), mul.tensor(), x, LinearMap::from_operator(s.tensor())));
}

std::optional<LinearMap> find_antipode(const Coalgebra& c, const Tensor& mul, const Vec& unit) {
  std::size_t n = c.dim();
  // Unknown s[l][j] (S e_j = sum_l s[l][j] e_l) at column l*n + j; equation
  // (i, m): sum D[i][j][k] s[l][j] mu[l][k][m] = eps_i unit_m.
  std::vector<std::vector<std::pair<Index, Scalar>>> mul_by_first(n);
  for (const auto& [k, v] : mul.entries()) mul_by_first[k[0]].push_back({k, v});
  Matrix a(n * n, n * n);
  Vec b(n * n);
  for (const auto& [dk, dv] : c.comul().entries()) {
    std::size_t i = dk[0], j = dk[1], k = dk[2];
    for (std::size_t l = 0; l < n; ++l)
      for (const auto& [mk, mv] : mul_by_first[l])
        if (mk[1] == k) a(i * n + mk[2], l * n + j) += dv * mv;
  }
  for (const auto& [ek, ev] : c.counit().entries())
    for (std::size_t m = 0; m < n; ++m) b[ek[0] * n + m] = ev * unit[m];
  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  LinearMap s(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) s.set(l, j, (*sol)[l * n + j]);
  Composite lhs({n}), rhs({n});
  lhs.apply(c.comul(), 1, {0}).apply(s, 1).apply(mul, 2, {0, 1});
  rhs.apply(c.counit(), 1, {0}).insert(unit, 0);
  if (!(lhs.tensor() == rhs.tensor())) return std::nullopt;
  return s;
}

LinearMap grunspan_map(const HopfHeap& h, const Vec& f) {
  if (!h.coalgebra().counit_of(f).is_one())
    throw Error(ErrorCode::CounitNotOne, "ε(" + format_vec(f, h.names()) + ") is not 1");
  std::size_t n = h.dim();
  const Tensor& comul = h.coalgebra().comul();
  Composite k({n});
  k.apply(comul, 1, {0}).apply(comul, 1, {1}).insert(f, 3).apply(comul, 1, {3});
  k.apply(h.chi(), 3, {3, 2, 1}).apply(h.chi(), 3, {0, 1, 2});
  return LinearMap::from_operator(k.tensor());
}

Check check_grunspan_identity(const HopfHeap& h, const LinearMap& g) {
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  Composite lhs({n, n, n, n, n}), rhs({n, n, n, n, n});
  lhs.apply(g, 2).apply(h.chi(), 3, {0, 1, 2}).apply(h.chi(), 3, {0, 1, 2});
  rhs.apply(h.chi(), 3, {3, 2, 1}).apply(h.chi(), 3, {0, 1, 2});
  return compare("grunspan.defining-identity", "[[a,b,ϑ(c)],d,h] = [a,[d,c,b],h]", lhs, rhs,
                 {nm, nm, nm, nm, nm}, {nm});
}

LinearMap translation_map(const HopfHeap& h, const Vec& a, const Vec& b, Side side) {
  if (a.size() != h.dim() || b.size() != h.dim()) throw Error(ErrorCode::DimMismatch, "translation parameters");
  Composite k({h.dim()});
  if (side == Side::Right)
    k.insert(a, 1).insert(b, 2);
  else
    k.insert(a, 0).insert(b, 1);
  k.apply(h.chi(), 3, {0, 1, 2});
  return LinearMap::from_operator(k.tensor());
}

VerificationReport verify_coalgebra_map(const LinearMap& f, const Coalgebra& from, const Coalgebra& to) {
  if (f.cols() != from.dim() || f.rows() != to.dim()) throw Error(ErrorCode::DimMismatch, "map dimensions");
  VerificationReport r;
  r.subject = "coalgebra map";
  std::size_t n = from.dim();
  const Names* in = &from.names();
  const Names* out = &to.names();
  {
    Composite lhs({n}), rhs({n});
    lhs.apply(f, 0).apply(to.comul(), 1, {0});
    rhs.apply(from.comul(), 1, {0}).apply(f, 0).apply(f, 1);
    r.add(compare("map.comul", "Δf(a) = f(a1)⊗f(a2)", lhs, rhs, {in}, {out, out}));
  }
  {
    Composite lhs({n}), rhs({n});
    lhs.apply(f, 0).apply(to.counit(), 1, {0});
    rhs.apply(from.counit(), 1, {0});
    r.add(compare("map.counit", "ε(f(a)) = ε(a)", lhs, rhs, {in}, {}));
  }
  return r;
}

VerificationReport verify_heap_hom(const LinearMap& f, const HopfHeap& from, const HopfHeap& to) {
  VerificationReport r = verify_coalgebra_map(f, from.coalgebra(), to.coalgebra());
  r.subject = "heap homomorphism";
  std::size_t n = from.dim();
  const Names* in = &from.names();
  const Names* out = &to.names();
  Composite lhs({n, n, n}), rhs({n, n, n});
  lhs.apply(from.chi(), 3, {0, 1, 2}).apply(f, 0);
  rhs.apply(f, 0).apply(f, 1).apply(f, 2).apply(to.chi(), 3, {0, 1, 2});
  r.add(compare("map.bracket", "f[a,b,c] = [f(a),f(b),f(c)]", lhs, rhs, {in, in, in}, {out}));
  return r;
}

VerificationReport verify_hopf_algebra_hom(const LinearMap& f, const HopfAlgebra& from, const HopfAlgebra& to) {
  VerificationReport r = verify_coalgebra_map(f, from.coalgebra(), to.coalgebra());
  r.subject = "hopf algebra homomorphism";
  std::size_t n = from.dim();
  const Names* in = &from.names();
  const Names* out = &to.names();
  {
    Composite lhs({n, n}), rhs({n, n});
    lhs.apply(from.mul(), 2, {0, 1}).apply(f, 0);
    rhs.apply(f, 0).apply(f, 1).apply(to.mul(), 2, {0, 1});
    r.add(compare("map.multiplicative", "f(ab) = f(a)f(b)", lhs, rhs, {in, in}, {out}));
  }
  r.add(condition("map.unit", "f(1) = 1", f.apply(from.unit()) == to.unit()));
  return r;
}

HopfHeap tensor_heap(const HopfHeap& a, const HopfHeap& b) {
  Coalgebra c = tensor_coalgebra(a.coalgebra(), b.coalgebra());
  std::size_t m = b.dim();
  std::size_t n = c.dim();
  Tensor chi({n, n, n, n});
  for (const auto& [k1, v1] : a.chi().entries())
    for (const auto& [k2, v2] : b.chi().entries())
      chi.add({k1[0] * m + k2[0], k1[1] * m + k2[1], k1[2] * m + k2[2], k1[3] * m + k2[3]}, v1 * v2);
  return certify(HopfHeap(c, chi));
}

HopfHeap opposite_heap(const HopfHeap& h) {
  if (!is_cocommutative(h.coalgebra())) throw Error(ErrorCode::NotCocommutative, "opposite heap needs a cocommutative coalgebra");
  return certify(HopfHeap(h.coalgebra(), permute_legs(h.chi(), {2, 1, 0, 3})));
}

Check check_middle_associativity(const HopfHeap& h) {
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  Composite lhs({n, n, n, n, n}), rhs({n, n, n, n, n});
  lhs.apply(h.chi(), 3, {0, 1, 2}).apply(h.chi(), 3, {0, 1, 2});
  rhs.apply(h.chi(), 3, {1, 2, 3}).apply(h.chi(), 3, {0, 1, 2});
  return compare("heap.middle-associativity", "[[a,b,c],d,h] = [a,[b,c,d],h]", lhs, rhs, {nm, nm, nm, nm, nm}, {nm});
}

namespace {

constexpr std::size_t kExchangeFullDim = 4;
constexpr std::size_t kExchangeSamples = 256;

void exchange_sides(const HopfHeap& h, Composite& lhs, Composite& rhs) {
  const Tensor& chi = h.chi();
  lhs.apply(chi, 3, {0, 1, 2}).apply(chi, 3, {1, 2, 3}).apply(chi, 3, {2, 3, 4}).apply(chi, 3, {0, 1, 2});
  rhs.reorder({0, 3, 6, 1, 4, 7, 2, 5, 8});
  rhs.apply(chi, 3, {0, 1, 2}).apply(chi, 3, {1, 2, 3}).apply(chi, 3, {2, 3, 4}).apply(chi, 3, {0, 1, 2});
}

}  // namespace

Check check_exchange_identity(const HopfHeap& h) {
  const std::string id = "heap.exchange";
  const std::string law = "[[w,w',w''],[y,y',y''],[z,z',z'']] = [[w,y,z],[w',y',z'],[w'',y'',z'']]";
  std::size_t n = h.dim();
  const Names* nm = &h.names();
  if (n <= kExchangeFullDim) {
    std::vector<std::size_t> dims(9, n);
    Composite lhs(dims), rhs(dims);
    exchange_sides(h, lhs, rhs);
    return compare(id, law, lhs, rhs, std::vector<const Names*>(9, nm), {nm});
  }
  // Larger spaces: exact evaluation on a fixed pseudo-random set of basis tuples.
  std::mt19937 gen(20240611u);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < kExchangeSamples; ++s) {
    Composite lhs({}), rhs({});
    std::vector<std::string> tuple;
    for (std::size_t l = 0; l < 9; ++l) {
      std::size_t i = pick(gen);
      tuple.push_back(nm->at(i));
      lhs.insert(Tensor::basis_vector(n, i), l);
      rhs.insert(Tensor::basis_vector(n, i), l);
    }
    exchange_sides(h, lhs, rhs);
    if (!(lhs.tensor() == rhs.tensor())) {
      Check c = compare(id, law, lhs, rhs, {}, {nm});
      c.witness->inputs = tuple;
      return c;
    }
  }
  Check c{id, law, true, std::nullopt, std::to_string(kExchangeSamples) + " sampled basis tuples"};
  return c;
}

}  // namespace hopfkit
