#include "hopfkit/module.hpp"

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

namespace {

using Dims = std::vector<std::size_t>;

void check_shape(const Tensor& t, const Dims& dims, const std::string& what) {
  if (t.dims() != dims) throw Error(ErrorCode::DimMismatch, what + " has the wrong shape");
}

Names tensor_names(const Names& a, const Names& b) {
  Names out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "⊗" + y);
  return out;
}

void add_comodule_checks(VerificationReport& r, Side side, const Coalgebra& c, const Tensor& rho, const Names* mn) {
  std::size_t d = mn->size();
  const Names* hn = &c.names();
  if (side == Side::Left) {
    Composite lhs({d}), rhs({d}), id({d});
    lhs.apply(rho, 1, {0}).apply(c.comul(), 1, {0});
    rhs.apply(rho, 1, {0}).apply(rho, 1, {1});
    r.add(compare("comodule.coassociativity", "m(-1)1⊗m(-1)2⊗m(0) = m(-1)⊗m(0)(-1)⊗m(0)(0)", lhs, rhs, {mn},
                  {hn, hn, mn}));
    Composite cu({d});
    cu.apply(rho, 1, {0}).apply(c.counit(), 1, {0});
    r.add(compare("comodule.counit", "ε(m(-1))m(0) = m", cu, id, {mn}, {mn}));
  } else {
    Composite lhs({d}), rhs({d}), id({d});
    lhs.apply(rho, 1, {0}).apply(rho, 1, {0});
    rhs.apply(rho, 1, {0}).apply(c.comul(), 1, {1});
    r.add(compare("comodule.coassociativity", "m(0)(0)⊗m(0)(1)⊗m(1) = m(0)⊗m(1)1⊗m(1)2", lhs, rhs, {mn},
                  {mn, hn, hn}));
    Composite cu({d});
    cu.apply(rho, 1, {0}).apply(c.counit(), 1, {1});
    r.add(compare("comodule.counit", "m(0)ε(m(1)) = m", cu, id, {mn}, {mn}));
  }
}

// Matrix of the map M -> H⊗M (left) or M⊗H (right), m -> ρ(m) - x⊗m or ρ(m) - m⊗x.
LinearMap coinvariant_defect(Side side, const Tensor& rho, std::size_t n, std::size_t d, const Vec& x) {
  LinearMap f(n * d, d);
  for (const auto& [k, v] : rho.entries()) {
    if (side == Side::Left)
      f.set(k[1] * d + k[2], k[0], f.at(k[1] * d + k[2], k[0]) + v);
    else
      f.set(k[1] * n + k[2], k[0], f.at(k[1] * n + k[2], k[0]) + v);
  }
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t row = side == Side::Left ? h * d + m : m * n + h;
      f.set(row, m, f.at(row, m) - x[h]);
    }
  return f;
}

}  // namespace

HeapModule::HeapModule(HopfHeap parent, Side side, Names names, Tensor action, Tensor coaction)
    : parent_(std::move(parent)),
      side_(side),
      names_(std::move(names)),
      action_(std::move(action)),
      coaction_(std::move(coaction)) {
  std::size_t n = parent_.dim(), d = names_.size();
  if (side_ == Side::Left) {
    check_shape(action_, {n, n, d, d}, "left action");
    check_shape(coaction_, {d, n, d}, "left coaction");
  } else {
    check_shape(action_, {d, n, n, d}, "right action");
    check_shape(coaction_, {d, d, n}, "right coaction");
  }
  check_in_field(action_, parent_.field(), "action");
  check_in_field(coaction_, parent_.field(), "coaction");
}

HopfModule::HopfModule(HopfAlgebra parent, Side side, Names names, Tensor action, Tensor coaction)
    : parent_(std::move(parent)),
      side_(side),
      names_(std::move(names)),
      action_(std::move(action)),
      coaction_(std::move(coaction)) {
  std::size_t n = parent_.dim(), d = names_.size();
  if (side_ == Side::Left) {
    check_shape(action_, {n, d, d}, "left action");
    check_shape(coaction_, {d, n, d}, "left coaction");
  } else {
    check_shape(action_, {d, n, d}, "right action");
    check_shape(coaction_, {d, d, n}, "right coaction");
  }
  check_in_field(action_, parent_.field(), "action");
  check_in_field(coaction_, parent_.field(), "coaction");
}

HeapModule certify(HeapModule m) {
  if (!m.verified_) {
    auto r = verify_heap_module(m);
    if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "heap module fails " + r.first_failure()->id);
    m.verified_ = true;
  }
  return m;
}

HopfModule certify(HopfModule m) {
  if (!m.verified_) {
    auto r = verify_hopf_module(m);
    if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "Hopf module fails " + r.first_failure()->id);
    m.verified_ = true;
  }
  return m;
}

void require_verified(const HeapModule& m) {
  if (m.verified()) return;
  auto r = verify_heap_module(m);
  if (!r.passed()) throw Error(ErrorCode::Unverified, "input module fails " + r.first_failure()->id);
}

VerificationReport verify_heap_module(const HeapModule& m) {
  const HopfHeap& h = m.parent();
  require_verified(h);
  VerificationReport r;
  r.subject = m.side() == Side::Left ? "left heap module" : "right heap module";
  std::size_t n = h.dim(), d = m.dim();
  const Names* hn = &h.names();
  const Names* mn = &m.names();
  const Tensor& act = m.action();
  const Tensor& rho = m.coaction();
  const Tensor& comul = h.coalgebra().comul();
  add_comodule_checks(r, m.side(), h.coalgebra(), rho, mn);
  if (m.side() == Side::Left) {
    {
      Composite lhs({n, n, n, n, d}), rhs({n, n, n, n, d});
      lhs.apply(h.chi(), 3, {0, 1, 2}).apply(act, 3, {0, 1, 2});
      rhs.apply(act, 3, {2, 3, 4}).apply(act, 3, {0, 1, 2});
      r.add(compare("module.associativity", "([a,b,c]⊗d)▷m = (a⊗b)▷((c⊗d)▷m)", lhs, rhs, {hn, hn, hn, hn, mn}, {mn}));
    }
    {
      Composite lhs({n, d}), rhs({n, d});
      lhs.apply(comul, 1, {0}).apply(act, 3, {0, 1, 2});
      rhs.apply(h.coalgebra().counit(), 1, {0});
      r.add(compare("module.counit", "(c1⊗c2)▷m = ε(c)m", lhs, rhs, {hn, mn}, {mn}));
    }
    {
      Composite lhs({n, n, d}), rhs({n, n, d});
      lhs.apply(act, 3, {0, 1, 2}).apply(rho, 1, {0});
      rhs.apply(comul, 1, {0}).apply(comul, 1, {2}).apply(rho, 1, {4});
      rhs.apply(h.chi(), 3, {0, 3, 4}).apply(act, 3, {1, 2, 3});
      r.add(compare("module.coaction", "ρ((c⊗d)▷m) = [c1,d2,m(-1)]⊗(c2⊗d1)▷m(0)", lhs, rhs, {hn, hn, mn}, {hn, mn}));
    }
  } else {
    {
      Composite lhs({d, n, n, n, n}), rhs({d, n, n, n, n});
      lhs.apply(h.chi(), 3, {2, 3, 4}).apply(act, 3, {0, 1, 2});
      rhs.apply(act, 3, {0, 1, 2}).apply(act, 3, {0, 1, 2});
      r.add(compare("module.associativity", "m◁(a⊗[b,c,d]) = (m◁(a⊗b))◁(c⊗d)", lhs, rhs, {mn, hn, hn, hn, hn}, {mn}));
    }
    {
      Composite lhs({d, n}), rhs({d, n});
      lhs.apply(comul, 1, {1}).apply(act, 3, {0, 1, 2});
      rhs.apply(h.coalgebra().counit(), 1, {1});
      r.add(compare("module.counit", "m◁(c1⊗c2) = ε(c)m", lhs, rhs, {mn, hn}, {mn}));
    }
    {
      Composite lhs({d, n, n}), rhs({d, n, n});
      lhs.apply(act, 3, {0, 1, 2}).apply(rho, 1, {0});
      rhs.apply(rho, 1, {0}).apply(comul, 1, {2}).apply(comul, 1, {4});
      rhs.apply(act, 3, {0, 3, 4}).apply(h.chi(), 3, {1, 2, 3});
      r.add(compare("module.coaction", "ρ(m◁(c⊗d)) = m(0)◁(c2⊗d1)⊗[m(1),c1,d2]", lhs, rhs, {mn, hn, hn}, {mn, hn}));
    }
  }
  return r;
}

VerificationReport verify_hopf_module(const HopfModule& m) {
  const HopfAlgebra& h = m.parent();
  require_verified(h);
  VerificationReport r;
  r.subject = m.side() == Side::Left ? "left Hopf module" : "right Hopf module";
  std::size_t n = h.dim(), d = m.dim();
  const Names* hn = &h.names();
  const Names* mn = &m.names();
  const Tensor& act = m.action();
  const Tensor& rho = m.coaction();
  const Tensor& comul = h.coalgebra().comul();
  add_comodule_checks(r, m.side(), h.coalgebra(), rho, mn);
  if (m.side() == Side::Left) {
    {
      Composite lhs({n, n, d}), rhs({n, n, d});
      lhs.apply(act, 2, {1, 2}).apply(act, 2, {0, 1});
      rhs.apply(h.mul(), 2, {0, 1}).apply(act, 2, {0, 1});
      r.add(compare("module.associativity", "h·(g·m) = (hg)·m", lhs, rhs, {hn, hn, mn}, {mn}));
    }
    {
      Composite lhs({d}), id({d});
      lhs.insert(h.unit(), 0).apply(act, 2, {0, 1});
      r.add(compare("module.unit", "1·m = m", lhs, id, {mn}, {mn}));
    }
    {
      Composite lhs({n, d}), rhs({n, d});
      lhs.apply(act, 2, {0, 1}).apply(rho, 1, {0});
      rhs.apply(comul, 1, {0}).apply(rho, 1, {2}).apply(h.mul(), 2, {0, 2}).apply(act, 2, {1, 2});
      r.add(compare("module.compatibility", "ρ(h·m) = h1m(-1)⊗h2·m(0)", lhs, rhs, {hn, mn}, {hn, mn}));
    }
  } else {
    {
      Composite lhs({d, n, n}), rhs({d, n, n});
      lhs.apply(act, 2, {0, 1}).apply(act, 2, {0, 1});
      rhs.apply(h.mul(), 2, {1, 2}).apply(act, 2, {0, 1});
      r.add(compare("module.associativity", "(m·h)·g = m·(hg)", lhs, rhs, {mn, hn, hn}, {mn}));
    }
    {
      Composite lhs({d}), id({d});
      lhs.insert(h.unit(), 1).apply(act, 2, {0, 1});
      r.add(compare("module.unit", "m·1 = m", lhs, id, {mn}, {mn}));
    }
    {
      Composite lhs({d, n}), rhs({d, n});
      lhs.apply(act, 2, {0, 1}).apply(rho, 1, {0});
      rhs.apply(rho, 1, {0}).apply(comul, 1, {2}).apply(act, 2, {0, 2}).apply(h.mul(), 2, {1, 2});
      r.add(compare("module.compatibility", "ρ(m·h) = m(0)·h1⊗m(1)h2", lhs, rhs, {mn, hn}, {mn, hn}));
    }
  }
  return r;
}

HeapModule self_heap_module(const HopfHeap& h, Side side) {
  // Δ serves as both the left coaction (m, m(-1), m(0)) and the right one (m, m(0), m(1)).
  return certify(HeapModule(h, side, h.names(), h.chi(), h.coalgebra().comul()));
}

HeapModule free_heap_module(const HopfHeap& h, std::size_t dim_v, Side side) {
  require_verified(h);
  std::size_t n = h.dim(), d = n * dim_v;
  Names vn = default_names(dim_v, "v");
  Tensor act(side == Side::Left ? Dims{n, n, d, d} : Dims{d, n, n, d});
  Tensor rho(side == Side::Left ? Dims{d, n, d} : Dims{d, d, n});
  for (std::size_t v = 0; v < dim_v; ++v) {
    for (const auto& [k, c] : h.chi().entries()) {
      if (side == Side::Left)
        act.set({k[0], k[1], k[2] * dim_v + v, k[3] * dim_v + v}, c);
      else
        act.set({v * n + k[0], k[1], k[2], v * n + k[3]}, c);
    }
    for (const auto& [k, c] : h.coalgebra().comul().entries()) {
      if (side == Side::Left)
        rho.set({k[0] * dim_v + v, k[1], k[2] * dim_v + v}, c);
      else
        rho.set({v * n + k[0], v * n + k[1], k[2]}, c);
    }
  }
  Names names = side == Side::Left ? tensor_names(h.names(), vn) : tensor_names(vn, h.names());
  return certify(HeapModule(h, side, names, act, rho));
}

HopfModule regular_hopf_module(const HopfAlgebra& h, Side side) {
  require_verified(h);
  return certify(HopfModule(h, side, h.names(), h.mul(), h.coalgebra().comul()));
}

HopfModule hopfmod_from_heapmod(const HeapModule& m, const Vec& x) {
  require_verified(m);
  HopfAlgebra hx = hopf_from_heap(m.parent(), x);
  std::size_t n = hx.dim(), d = m.dim();
  Composite k(m.side() == Side::Left ? Dims{n, d} : Dims{d, n});
  k.insert(x, 1).apply(m.action(), 3, {0, 1, 2});
  return certify(HopfModule(hx, m.side(), m.names(), k.tensor(), m.coaction()));
}

HeapModule heapmod_from_hopfmod(const HopfModule& m) {
  HopfModule v = certify(m);
  const HopfAlgebra& h = v.parent();
  HopfHeap heap = heap_from_hopf(h);
  std::size_t n = h.dim(), d = v.dim();
  Composite k(v.side() == Side::Left ? Dims{n, n, d} : Dims{d, n, n});
  if (v.side() == Side::Left)
    k.apply(h.antipode(), 1).apply(h.mul(), 2, {0, 1}).apply(v.action(), 2, {0, 1});
  else
    k.apply(h.antipode(), 1).apply(h.mul(), 2, {1, 2}).apply(v.action(), 2, {0, 1});
  return certify(HeapModule(heap, v.side(), v.names(), k.tensor(), v.coaction()));
}

std::vector<Vec> coinvariants(const HeapModule& m, const Vec& x) {
  require_verified(m);
  const Coalgebra& c = m.parent().coalgebra();
  if (!is_grouplike(c, x)) throw Error(ErrorCode::NotGroupLike, format_vec(x, c.names()) + " is not group-like");
  return kernel_basis(coinvariant_defect(m.side(), m.coaction(), c.dim(), m.dim(), x));
}

StructureIso structure_iso(const HeapModule& m, const Vec& x) {
  StructureIso out;
  out.coinvariant_basis = coinvariants(m, x);
  const HopfHeap& h = m.parent();
  const auto& basis = out.coinvariant_basis;
  std::size_t n = h.dim(), d = m.dim(), k = basis.size();
  bool left = m.side() == Side::Left;
  out.free = free_heap_module(h, k, m.side());

  // P(m) = (x⊗m(-1))▷m(0) or m(0)◁(m(1)⊗x).
  Composite p({d});
  if (left)
    p.apply(m.coaction(), 1, {0}).insert(x, 0).apply(m.action(), 3, {0, 1, 2});
  else
    p.apply(m.coaction(), 1, {0}).insert(x, 2).apply(m.action(), 3, {0, 1, 2});
  out.projection = LinearMap::from_operator(p.tensor());

  out.alpha = LinearMap(d, n * k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t hh = 0; hh < n; ++hh) {
      Composite a({});
      if (left)
        a.insert(unit_vec(n, hh), 0).insert(x, 1).insert(basis[j], 2);
      else
        a.insert(basis[j], 0).insert(x, 1).insert(unit_vec(n, hh), 2);
      a.apply(m.action(), 3, {0, 1, 2});
      Vec col = a.tensor().to_vec();
      std::size_t c = left ? hh * k + j : j * n + hh;
      for (std::size_t r = 0; r < d; ++r) out.alpha.set(r, c, col[r]);
    }

  // β(m) = m(-1)⊗P(m(0)) or P(m(0))⊗m(1), then coordinates in the coinvariant basis.
  Composite b({d});
  b.apply(m.coaction(), 1, {0}).apply(out.projection, left ? 1 : 0);
  const Tensor& bt = b.tensor();  // (m, h, m') or (m, m', h)
  Matrix kb(d, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < d; ++r) kb(r, j) = basis[j][r];
  out.beta = LinearMap(n * k, d);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t hh = 0; hh < n; ++hh) {
      Vec v(d);
      for (std::size_t r = 0; r < d; ++r) v[r] = left ? bt.at({col, hh, r}) : bt.at({col, r, hh});
      if (is_zero(v)) continue;
      auto coords = solve(kb, v);
      if (!coords) throw Error(ErrorCode::ConstructionInvalid, "projection leaves the coinvariants");
      for (std::size_t j = 0; j < k; ++j) out.beta.set(left ? hh * k + j : j * n + hh, col, (*coords)[j]);
    }

  if (!(out.alpha * out.beta == LinearMap::identity(d)) || !(out.beta * out.alpha == LinearMap::identity(n * k)))
    throw Error(ErrorCode::ConstructionInvalid, "α and β are not mutually inverse");
  auto r = verify_module_hom(out.alpha, out.free, m);
  if (!r.passed()) throw Error(ErrorCode::ConstructionInvalid, "α fails " + r.first_failure()->id);
  return out;
}

namespace {

void add_comodule_map_check(VerificationReport& r, Side side, const LinearMap& f, const Tensor& rho_from,
                            const Tensor& rho_to, const Names* in, const Names* hn, const Names* out) {
  std::size_t d = in->size();
  Composite lhs({d}), rhs({d});
  lhs.apply(rho_from, 1, {0}).apply(f, side == Side::Left ? 1 : 0);
  rhs.apply(f, 0).apply(rho_to, 1, {0});
  if (side == Side::Left)
    r.add(compare("map.comodule", "m(-1)⊗f(m(0)) = ρ(f(m))", lhs, rhs, {in}, {hn, out}));
  else
    r.add(compare("map.comodule", "f(m(0))⊗m(1) = ρ(f(m))", lhs, rhs, {in}, {out, hn}));
}

}  // namespace

VerificationReport verify_module_hom(const LinearMap& f, const HeapModule& from, const HeapModule& to) {
  if (from.side() != to.side() || !(from.parent().chi() == to.parent().chi()) ||
      !(from.parent().coalgebra() == to.parent().coalgebra()))
    throw Error(ErrorCode::DimMismatch, "modules over different heaps or sides");
  if (f.cols() != from.dim() || f.rows() != to.dim()) throw Error(ErrorCode::DimMismatch, "map dimensions");
  VerificationReport r;
  r.subject = "heap module map";
  std::size_t n = from.parent().dim(), d = from.dim();
  const Names* hn = &from.parent().names();
  const Names* in = &from.names();
  const Names* out = &to.names();
  add_comodule_map_check(r, from.side(), f, from.coaction(), to.coaction(), in, hn, out);
  if (from.side() == Side::Left) {
    Composite lhs({n, n, d}), rhs({n, n, d});
    lhs.apply(from.action(), 3, {0, 1, 2}).apply(f, 0);
    rhs.apply(f, 2).apply(to.action(), 3, {0, 1, 2});
    r.add(compare("map.action", "f((a⊗b)▷m) = (a⊗b)▷f(m)", lhs, rhs, {hn, hn, in}, {out}));
  } else {
    Composite lhs({d, n, n}), rhs({d, n, n});
    lhs.apply(from.action(), 3, {0, 1, 2}).apply(f, 0);
    rhs.apply(f, 0).apply(to.action(), 3, {0, 1, 2});
    r.add(compare("map.action", "f(m◁(a⊗b)) = f(m)◁(a⊗b)", lhs, rhs, {in, hn, hn}, {out}));
  }
  return r;
}

VerificationReport verify_hopf_module_hom(const LinearMap& f, const HopfModule& from, const HopfModule& to) {
  if (from.side() != to.side() || !(from.parent().mul() == to.parent().mul()) ||
      !(from.parent().coalgebra() == to.parent().coalgebra()))
    throw Error(ErrorCode::DimMismatch, "modules over different Hopf algebras or sides");
  if (f.cols() != from.dim() || f.rows() != to.dim()) throw Error(ErrorCode::DimMismatch, "map dimensions");
  VerificationReport r;
  r.subject = "Hopf module map";
  std::size_t n = from.parent().dim(), d = from.dim();
  const Names* hn = &from.parent().names();
  const Names* in = &from.names();
  const Names* out = &to.names();
  add_comodule_map_check(r, from.side(), f, from.coaction(), to.coaction(), in, hn, out);
  if (from.side() == Side::Left) {
    Composite lhs({n, d}), rhs({n, d});
    lhs.apply(from.action(), 2, {0, 1}).apply(f, 0);
    rhs.apply(f, 1).apply(to.action(), 2, {0, 1});
    r.add(compare("map.action", "f(h·m) = h·f(m)", lhs, rhs, {hn, in}, {out}));
  } else {
    Composite lhs({d, n}), rhs({d, n});
    lhs.apply(from.action(), 2, {0, 1}).apply(f, 0);
    rhs.apply(f, 0).apply(to.action(), 2, {0, 1});
    r.add(compare("map.action", "f(m·h) = f(m)·h", lhs, rhs, {in, hn}, {out}));
  }
  return r;
}

VerificationReport check_right_commutative_identities(const HeapModule& m) {
  if (m.side() != Side::Right) throw Error(ErrorCode::DimMismatch, "identities apply to right modules");
  const HopfHeap& h = m.parent();
  if (!is_commutative_heap(h)) throw Error(ErrorCode::NotCommutative, "heap is not commutative");
  VerificationReport r;
  r.subject = "right module over a commutative heap";
  std::size_t n = h.dim(), d = m.dim();
  const Names* hn = &h.names();
  const Names* mn = &m.names();
  {
    Composite lhs({d, n, n, n, n}), rhs({d, n, n, n, n});
    lhs.apply(h.chi(), 3, {2, 3, 4}).apply(m.action(), 3, {0, 1, 2});
    rhs.apply(h.chi(), 3, {1, 2, 3}).apply(m.action(), 3, {0, 1, 2});
    r.add(compare("module.bracket-shift", "m◁(a⊗[b,c,d]) = m◁([a,b,c]⊗d)", lhs, rhs, {mn, hn, hn, hn, hn}, {mn}));
  }
  {
    Composite lhs({d, n}), rhs({d, n});
    lhs.apply(h.coalgebra().comul(), 1, {1}).apply(m.action(), 3, {0, 1, 2});
    rhs.apply(h.coalgebra().comul(), 1, {1}).reorder({0, 2, 1}).apply(m.action(), 3, {0, 1, 2});
    r.add(compare("module.counit-swap", "m◁(c1⊗c2) = m◁(c2⊗c1)", lhs, rhs, {mn, hn}, {mn}));
  }
  return r;
}

}  // namespace hopfkit
