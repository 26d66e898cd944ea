// Acceptance run: one PASS/FAIL line per criterion, every comparison exact.
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hopfkit/bundle.hpp"
#include "hopfkit/cli.hpp"
#include "hopfkit/corpus.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/rota.hpp"
#include "oracle.hpp"
#include "rota_oracle.hpp"

using namespace hopfkit;
using oracle::Mat2;

namespace {

const std::string kCorpus = HOPFKIT_CORPUS_DIR;
const std::vector<std::string> kReference = {"trig", "z2", "z3", "z4", "sweedler"};

class Ctx {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::map<std::string, Bundle>& bundles() {
  static std::map<std::string, Bundle> all = [] {
    std::map<std::string, Bundle> m;
    for (const auto& name : kReference) m[name] = load_bundle(kCorpus + "/" + name + ".json");
    m["trig_corrupt"] = load_bundle(kCorpus + "/trig_corrupt.json");
    return m;
  }();
  return all;
}

HopfHeap heap(const std::string& bundle) { return certify(bundles().at(bundle).heaps.at("H").heap); }
const LinearMap& op(const std::string& bundle, const std::string& name) { return bundles().at(bundle).operators.at(name).map; }
const HeapModule& module(const std::string& bundle, const std::string& name) {
  return bundles().at(bundle).modules.at(name).module;
}

Vec e(std::size_t n, std::size_t i) { return oracle::basis(n, i); }
Scalar I() { return Scalar::root(-1); }
Vec x_plus() { return {I(), 1}; }  // θ + i·u in the basis (u, θ)

std::vector<Vec> grouplikes(const HopfHeap& h) { return find_grouplikes(h.coalgebra()); }

bool dense_identity(const LinearMap& after, const LinearMap& before, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c)
    if (oracle::apply(after, oracle::apply(before, e(n, c))) != e(n, c)) return false;
  return true;
}

// Counit-one functionals: normalised basis vectors and two weighted sums.
std::vector<Vec> counit_one(const HopfHeap& h) {
  std::size_t n = h.dim();
  const Tensor& eps = h.coalgebra().counit();
  std::vector<Vec> out;
  auto push = [&](Vec v) {
    Scalar c = oracle::counit(eps, v);
    if (!c.is_zero()) out.push_back(scale(v, c.inverse()));
  };
  for (std::size_t i = 0; i < n; ++i) push(e(n, i));
  Vec w1(n), w2(n);
  for (std::size_t i = 0; i < n; ++i) {
    w1[i] = Scalar(static_cast<long>(i) + 1);
    w2[i] = Scalar::frac(2 * static_cast<long>(i) - 1, 3);
  }
  push(w1);
  push(w2);
  return out;
}

// Monomial matrices with entries ±1, and ±i when the field has them.
std::vector<LinearMap> monomials(std::size_t n, const FieldSpec& field) {
  std::vector<Scalar> units = {Scalar(1), Scalar(-1)};
  if (field == FieldSpec::quadratic(-1)) {
    units.push_back(I());
    units.push_back(Scalar(0) - I());
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LinearMap> out;
  do {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= units.size();
    for (std::size_t code = 0; code < total; ++code) {
      LinearMap m(n, n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= units.size()) m.set(perm[i], i, units[c % units.size()]);
      out.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<LinearMap> automorphisms(const HopfHeap& h) {
  std::vector<LinearMap> out;
  for (const auto& m : monomials(h.dim(), h.field()))
    if (verify_heap_hom(m, h, h).passed()) out.push_back(m);
  return out;
}

// Δ'(e_a) coordinates from the library tensor.
Mat2 comul_rows(const Tensor& d, std::size_t a, std::size_t n) {
  Mat2 m(n, Vec(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m[p][q] = d.at({a, p, q});
  return m;
}

// ------------------------------------------------------------------ criteria

void heap_example(Ctx& c) {
  HopfHeap h = bundles().at("trig").heaps.at("H").heap;
  c.expect(h.names() == Names{"u", "theta"}, "basis names");
  c.expect(verify_coalgebra(h.coalgebra()).passed(), "verify_coalgebra");
  c.expect(verify_hopf_heap(h).passed(), "verify_hopf_heap");
  c.expect(is_commutative_heap(h), "commutative");
}

void grouplike_search(Ctx& c) {
  Coalgebra trig = bundles().at("trig").coalgebras.at("C");
  c.expect(find_grouplikes(trig.with_field(FieldSpec::rationals())).empty(), "no group-likes over Q");

  // Elimination by hand: x = a·u + b·θ is group-like iff b = 1 and a² = -1.
  std::vector<Vec> expected = {{I(), 1}, {Scalar(0) - I(), 1}};
  std::vector<Vec> found = find_grouplikes(trig);
  c.expect(found.size() == 2, "two group-likes over Q(i)");
  for (const auto& x : expected)
    c.expect(std::find(found.begin(), found.end(), x) != found.end(), "expected group-like " + format_vec(x, trig.names()));
  for (const auto& x : found) {
    c.expect(is_grouplike(trig, x), "is_grouplike " + format_vec(x, trig.names()));
    c.expect(oracle::comul(trig.comul(), x) == oracle::outer(x, x), "dense Δx = x⊗x");
    c.expect(oracle::counit(trig.counit(), x) == Scalar(1), "dense ε(x) = 1");
  }
}

void rota_baxter_example(Ctx& c) {
  HopfHeap h = heap("trig");
  for (const char* name : {"B_proj", "B_flip"}) {
    c.expect(verify_rb_heap(h, op("trig", name)).passed(), std::string(name) + " verifies");
    c.expect(oracle::oracle_rb(h, op("trig", name)), std::string(name) + " oracle");
  }
  const Bundle& bad = bundles().at("trig_corrupt");
  LinearMap b_bad = bad.operators.at("B_bad").map;
  c.expect(b_bad == LinearMap::from_rows({{0, 0}, {1, 1}}), "B(u) = θ, B(θ) = θ");
  VerificationReport r = verify_rb_heap(certify(bad.heaps.at("H").heap), b_bad);
  const Check* br = r.find("rb.bracket");
  c.expect(br && !br->pass, "rb.bracket fails");
  c.expect(br && br->witness && br->witness->inputs == std::vector<std::string>{"u", "u", "u"}, "witness (u,u,u)");
  c.expect(!oracle::oracle_rb(h, b_bad), "oracle rejects");
}

void roundtrips(Ctx& c) {
  for (const auto& name : kReference) {
    HopfHeap h = heap(name);
    auto gl = grouplikes(h);
    c.expect(!gl.empty(), name + " has group-likes");
    for (const auto& x : gl) c.expect(heap_from_hopf(hopf_from_heap(h, x)).chi() == h.chi(), name + " Hp(H_x) chi");
  }
  for (const char* name : {"z2", "z3", "z4", "sweedler"}) {
    HopfAlgebra a = bundles().at(name).hopf_algebras.at("A").hopf;
    HopfAlgebra back = hopf_from_heap(heap_from_hopf(a), a.unit());
    c.expect(back.mul() == a.mul(), std::string(name) + " mul");
    c.expect(back.antipode() == a.antipode(), std::string(name) + " antipode");
    c.expect(back.unit() == a.unit(), std::string(name) + " unit");
  }
}

void grunspan(Ctx& c) {
  for (const auto& name : kReference) {
    HopfHeap h = heap(name);
    bool commutative = is_commutative_heap(h);
    c.expect(commutative == (name != "sweedler"), name + " commutativity");
    auto fs = counit_one(h);
    c.expect(fs.size() >= 2, name + " functionals");
    for (const auto& f : fs) {
      LinearMap g = grunspan_map(h, f);
      if (commutative) c.expect(g == LinearMap::identity(h.dim()), name + " grunspan = id");
      c.expect(check_grunspan_identity(h, g).pass, name + " five-leg identity");
    }
  }
}

void translations(Ctx& c) {
  for (const char* name : {"trig", "z2"}) {
    HopfHeap h = heap(name);
    std::size_t n = h.dim();
    const Tensor& chi = h.chi();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        LinearMap tau = translation_map(h, e(n, a), e(n, b), Side::Right);
        LinearMap sigma = translation_map(h, e(n, a), e(n, b), Side::Left);
        for (std::size_t x = 0; x < n; ++x) {
          c.expect(tau.column(x) == oracle::bracket(chi, e(n, x), e(n, a), e(n, b)), "tau columns");
          c.expect(sigma.column(x) == oracle::bracket(chi, e(n, a), e(n, b), e(n, x)), "sigma columns");
        }
        for (std::size_t cc = 0; cc < n; ++cc)
          for (std::size_t d = 0; d < n; ++d) {
            LinearMap tau_cd = translation_map(h, e(n, cc), e(n, d), Side::Right);
            Vec bcd = oracle::bracket(chi, e(n, b), e(n, cc), e(n, d));
            c.expect(tau_cd * tau == translation_map(h, e(n, a), bcd, Side::Right), std::string(name) + " tau law");
            LinearMap sigma_cd = translation_map(h, e(n, cc), e(n, d), Side::Left);
            Vec abc = oracle::bracket(chi, e(n, a), e(n, b), e(n, cc));
            c.expect(sigma * sigma_cd == translation_map(h, abc, e(n, d), Side::Left), std::string(name) + " sigma law");
          }
      }
  }
}

void trusses(Ctx& c) {
  struct Pair {
    std::string what;
    HopfHeap heap;
    Tensor circ;
  };
  std::vector<Pair> pairs;
  for (const char* name : {"trig", "z2", "z3"}) {
    HopfHeap h = heap(name);
    std::size_t n = h.dim();
    for (const auto& x : grouplikes(h)) {
      LinearMap collapse(n, n);  // a -> ε(a)x
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) collapse.set(r, col, x[r] * h.coalgebra().counit().at({col}));
      std::vector<std::pair<std::string, HopfTruss>> built = {
          {"trivial", trivial_truss(h, x)},
          {"alpha id first", alpha_truss(h, LinearMap::identity(n), AlphaVariant::First)},
          {"alpha id second", alpha_truss(h, LinearMap::identity(n), AlphaVariant::Second)},
          {"alpha collapse first", alpha_truss(h, collapse, AlphaVariant::First)},
          {"alpha collapse second", alpha_truss(h, collapse, AlphaVariant::Second)},
      };
      for (const auto& [what, t] : built) {
        c.expect(verify_hopf_truss(t).passed(), std::string(name) + " " + what);
        pairs.push_back({std::string(name) + " " + what, h, t.circ()});
      }
    }
  }

  HopfAlgebra z2 = bundles().at("z2").hopf_algebras.at("A").hopf;
  for (const auto& b : {certify(HopfBrace(z2, z2)), corpus::z4_brace()}) {
    HopfTruss t = truss_from_brace(b);
    HopfBrace back = brace_from_truss(t);
    c.expect(back.dot().mul() == b.dot().mul() && back.dot().unit() == b.dot().unit() &&
                 back.dot().antipode() == b.dot().antipode(),
             "brace dot roundtrip");
    c.expect(back.circ().mul() == b.circ().mul() && back.circ().unit() == b.circ().unit() &&
                 back.circ().antipode() == b.circ().antipode(),
             "brace circ roundtrip");
  }

  for (const char* name : {"z2", "z4"})
    for (const auto& [tname, t] : bundles().at(name).trusses) pairs.push_back({std::string(name) + " " + tname, t.truss.heap(), t.truss.circ()});
  // Negative pairs so both verdicts occur.
  const HopfTruss& z4 = bundles().at("z4").trusses.at("T_brace").truss;
  Tensor bent = z4.circ();
  bent.set({1, 1, 0}, 0);
  bent.set({1, 1, 3}, 1);
  pairs.push_back({"z4 bent", z4.heap(), bent});
  Tensor lone({2, 2, 2});
  lone.set({0, 0, 0}, 1);
  pairs.push_back({"trig single entry", heap("trig"), lone});

  std::size_t negatives = 0;
  for (const auto& p : pairs) {
    HopfTruss t(p.heap, p.circ);
    bool verdict = verify_hopf_truss(t).passed();
    negatives += !verdict;
    for (const auto& x : grouplikes(p.heap))
      c.expect(verify_truss_cocycle_form(cocycle_form(t, x)).passed() == verdict, p.what + " verdicts agree");
  }
  c.expect(negatives == 2, "negative pairs fail");
}

void structure_theorem(Ctx& c) {
  struct Case {
    std::string what;
    HeapModule m;
    Vec x;
  };
  HopfHeap trig = heap("trig"), z2 = heap("z2");
  std::vector<Case> cases = {
      {"trig self left", self_heap_module(trig, Side::Left), x_plus()},
      {"trig self right", module("trig", "M_self"), x_plus()},
      {"trig free left", module("trig", "F_left"), x_plus()},
      {"trig free right", module("trig", "F_right"), x_plus()},
      {"z2 self left", self_heap_module(z2, Side::Left), e(2, 0)},
      {"z2 self right", self_heap_module(z2, Side::Right), e(2, 0)},
      {"z2 free left", module("z2", "F_left"), e(2, 0)},
      {"z2 free right", module("z2", "F_right"), e(2, 0)},
  };
  c.expect(bundles().at("z2").heaps.at("H").heap.names()[0] == "1", "z2 basis starts at 1");
  for (const auto& k : cases) {
    StructureIso iso = structure_iso(k.m, k.x);
    std::size_t d = k.m.dim();
    c.expect(iso.free.dim() == d, k.what + " dimension");
    c.expect(dense_identity(iso.alpha, iso.beta, d), k.what + " α∘β = id");
    c.expect(dense_identity(iso.beta, iso.alpha, iso.free.dim()), k.what + " β∘α = id");
    c.expect(verify_module_hom(iso.alpha, iso.free, k.m).passed(), k.what + " α module map");
  }
}

void descendents(Ctx& c) {
  HopfHeap trig = heap("trig");
  std::size_t n = 2;
  for (const char* name : {"B_flip", "B_id"}) {
    const LinearMap& b = op("trig", name);
    DescendentHeap d = descendent_heap(certify(RBHeap(trig, b)));
    c.expect(d.report.passed(), std::string(name) + " descendent report");
    c.expect(d.heap.coalgebra().comul() == trig.coalgebra().comul(), std::string(name) + " Δ' = Δ");
    for (std::size_t a = 0; a < n; ++a)
      c.expect(oracle::oracle_descendent(trig, b, a) == oracle::comul(trig.coalgebra().comul(), e(n, a)),
               std::string(name) + " oracle Δ' = Δ");
  }
  try {
    descendent_heap(certify(RBHeap(trig, op("trig", "B_proj"))));
    c.expect(false, "B_proj accepted");
  } catch (const Error& err) {
    c.expect(err.code() == ErrorCode::NotSurjective, "B_proj rejected NotSurjective");
  }

  struct Source {
    std::string bundle, op;
  };
  std::vector<Source> sources = {{"trig", "B_flip"}, {"trig", "B_id"}, {"z2", "B_id"}, {"z3", "B_id"},
                                 {"z3", "B_affine"}, {"z4", "B_id"}};
  for (const auto& s : sources) {
    HopfHeap h = heap(s.bundle);
    std::size_t dim = h.dim();
    const LinearMap& b = op(s.bundle, s.op);
    RBHeap r = certify(RBHeap(h, b));
    DescendentHeap d = descendent_heap(r);
    std::string tag = s.bundle + " " + s.op;
    for (std::size_t a = 0; a < dim; ++a)
      c.expect(comul_rows(d.heap.coalgebra().comul(), a, dim) == oracle::oracle_descendent(h, b, a), tag + " Δ' oracle");
    c.expect(verify_heap_hom(b, h, d.heap).passed(), tag + " B heap map");
    c.expect(verify_rb_heap(d.heap, b).passed(), tag + " B operator on descendent");

    auto autos = automorphisms(h);
    c.expect(autos.size() >= 2, tag + " automorphisms");
    Tensor dp = descendent_comul(r);
    for (const auto& psi : autos) {
      c.expect(check_descendent_iso(r, psi).pass, tag + " conjugate iso");
      Tensor dq = descendent_comul(conjugate_rb(r, psi));
      for (std::size_t a = 0; a < dim; ++a) {
        Mat2 lhs(dim, Vec(dim)), rhs(dim, Vec(dim));
        for (std::size_t p = 0; p < dim; ++p)
          for (std::size_t q = 0; q < dim; ++q) {
            Scalar w = dp.at({a, p, q});
            if (!w.is_zero()) oracle::add_outer(lhs, w, psi.column(p), psi.column(q));
          }
        for (std::size_t k = 0; k < dim; ++k)
          if (Scalar w = psi.at(k, a); !w.is_zero())
            for (std::size_t p = 0; p < dim; ++p)
              for (std::size_t q = 0; q < dim; ++q) rhs[p][q] += w * dq.at({k, p, q});
        c.expect(lhs == rhs, tag + " (ψ⊗ψ)Δ' = Δ'ψ");
      }
    }
  }
}

void rb_modules(Ctx& c) {
  HopfHeap trig = heap("trig");
  RBHeap flip = certify(RBHeap(trig, op("trig", "B_flip")));
  const Bundle::RBModule& entry = bundles().at("trig").rb_modules.at("R_self");
  RBHeapModule self(module("trig", entry.module), op("trig", entry.t), flip);
  c.expect(verify_rb_heap_module(self).passed(), "self module (H, B_flip)");
  c.expect(oracle::oracle_rb_module(self.module(), self.T(), flip.B()), "self module oracle");
  c.expect(verify_rb_heap_module(self_rb_module(flip)).passed(), "self_rb_module");

  std::size_t n = 2, dm = 2;
  Tensor collapse({dm, n, dm});
  for (std::size_t m = 0; m < dm; ++m)
    for (std::size_t h = 0; h < n; ++h)
      if (Scalar w = trig.coalgebra().counit().at({h}); !w.is_zero()) collapse.set({m, h, m}, w);
  Tensor random({dm, n, dm});
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (std::size_t p = 0; p < dm; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < dm; ++s)
        random.set({p, q, s}, Scalar::frac(num(rng), den(rng)) + Scalar::frac(num(rng), den(rng)) * I());
  std::vector<std::pair<std::string, Tensor>> fs = {{"collapse", collapse}, {"zero", Tensor({dm, n, dm})}, {"random", random}};
  for (const auto& [what, f] : fs) {
    RBHeapModule m = induced_rb_module(flip, f);
    c.expect(verify_rb_heap_module(m).passed(), "induced " + what);
    c.expect(oracle::oracle_rb_module(m.module(), m.T(), flip.B()), "induced " + what + " oracle");
  }
  c.expect(induced_rb_module(flip, collapse).T() == LinearMap::identity(dm).kron(flip.B()), "collapse gives id⊗B");

  RBStructureIso s = rb_structure_iso(self, x_plus());
  for (const char* id : {"rb-iso.image", "rb-iso.alpha", "rb-iso.beta"}) {
    const Check* chk = s.report.find(id);
    c.expect(chk && chk->pass, id);
  }
  c.expect(s.iso.alpha * s.t_hat == self.T() * s.iso.alpha, "α∘T̂ = T∘α");
  c.expect(s.t_hat * s.iso.beta == s.iso.beta * self.T(), "T̂∘β = β∘T");
  c.expect(coinvariants(self.module(), x_plus()).size() == 1, "one coinvariant");
  for (std::size_t col = 0; col < self.module().dim(); ++col) {
    Vec p = oracle::apply(s.iso.projection, e(self.module().dim(), col));
    c.expect(oracle::apply(s.iso.projection, p) == p, "P idempotent");
  }
}

void commutative_identities(Ctx& c) {
  std::size_t modules = 0;
  for (const auto& name : kReference) {
    HopfHeap h = heap(name);
    if (!is_commutative_heap(h)) continue;
    Check ex = check_exchange_identity(h);
    c.expect(ex.pass, name + " exchange identity");
    c.expect(ex.note.empty(), name + " exchange identity checked in full");
    c.expect(check_middle_associativity(h).pass, name + " middle associativity");
    std::vector<HeapModule> right = {self_heap_module(h, Side::Right)};
    for (const auto& [mname, m] : bundles().at(name).modules)
      if (m.module.side() == Side::Right) right.push_back(m.module);
    for (const auto& m : right) {
      c.expect(check_right_commutative_identities(m).passed(), name + " right module identities");
      ++modules;
    }
  }
  c.expect(modules >= 9, "right modules covered");
}

int exit_status(const std::string& args) {
  std::string cmd = std::string(HOPFKIT_CLI) + " " + args + " > /dev/null 2>&1";
  int s = std::system(cmd.c_str());
  return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

void cli_contract(Ctx& c) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "hopfkit_acceptance";
  fs::create_directories(dir);
  std::ifstream in(kCorpus + "/trig.json");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string trig = ss.str();
  auto write = [&](const std::string& name, std::string text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  auto edit = [&](std::string text, const std::string& from, const std::string& to) {
    auto pos = text.find(from);
    if (pos == std::string::npos) throw std::runtime_error("fixture edit not found: " + from);
    return text.replace(pos, from.size(), to);
  };
  std::string malformed = write("malformed.json", trig.substr(0, trig.size() / 3));
  std::string bad_scalar = write("bad_scalar.json", edit(trig, "[1, \"1\"]", "[1, \"1/0\"]"));
  std::string dangling = write("dangling.json", edit(trig, "\"coalgebra\": \"C\"", "\"coalgebra\": \"Z\""));
  std::string out_of_range = write("range.json", edit(trig, "[0, 0, 0, 0, \"-1\"]", "[0, 0, 0, 7, \"-1\"]"));

  auto path = [&](const std::string& name) { return kCorpus + "/" + name + ".json"; };
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  std::vector<Case> matrix = {
      {{"verify", "coalgebra", path("trig")}, 0},
      {{"verify", "heap", path("trig")}, 0},
      {{"verify", "rb", path("trig")}, 0},
      {{"verify", "rbmodule", path("trig")}, 0},
      {{"descend", path("trig"), "--rb", "B_flip"}, 0},
      {{"grouplikes", path("trig"), "--field", "Q"}, 0},
      {{"structure", path("trig"), "--module", "M_self", "--grouplike", "x_plus"}, 0},
      {{"search", path("trig"), "--family", "diagonal"}, 0},
      {{"report", path("z3")}, 0},
      {{"verify", "heap", path("trig_corrupt"), "--name", "H_bad"}, 1},
      {{"verify", "rb", path("trig_corrupt"), "--rb", "B_bad"}, 1},
      {{"descend", path("trig"), "--rb", "B_proj"}, 1},
      {{"construct", "cooperator", path("trig"), "--rb", "B_flip", "--grouplike", "x_plus"}, 1},
      {{"construct", "rbheap", path("z4_corrupt"), "--rb", "C_part"}, 1},
      {{"verify", "heap", malformed}, 2},
      {{"verify", "heap", bad_scalar}, 2},
      {{"verify", "heap", dangling}, 2},
      {{"verify", "heap", out_of_range}, 2},
      {{"verify", "heap", path("missing")}, 2},
      {{"transmogrify", path("trig")}, 2},
      {{"verify", "heap", path("trig"), "--format", "yaml"}, 2},
      {{}, 2},
  };
  for (const auto& k : matrix) {
    std::string line;
    for (const auto& a : k.args) line += a + " ";
    CommandResult r = run_command(k.args);
    c.expect(r.exit_code == k.code, "exit " + std::to_string(k.code) + " for: " + line);
    std::vector<std::string> structured = k.args;
    structured.insert(structured.end(), {"--format", "structured"});
    if (k.code != 2) {
      CommandResult a = run_command(structured), b = run_command(structured);
      c.expect(a.exit_code == k.code, "structured exit for: " + line);
      c.expect(a.output == b.output && !a.output.empty(), "structured output stable for: " + line);
      nlohmann::json doc = nlohmann::json::parse(a.output);
      bool any_fail = !doc.at("errors").empty();
      for (const auto& section : doc.at("sections"))
        for (const auto& chk : section.at("checks")) {
          bool fail = chk.at("status") == "fail";
          any_fail = any_fail || fail;
          c.expect(fail == chk.contains("witness"), "witness present iff the check fails: " + line);
        }
      c.expect((doc.at("status") == "fail") == any_fail, "overall status for: " + line);
      c.expect(any_fail == (k.code == 1), "failures match exit code for: " + line);
    }
  }
  c.expect(exit_status("verify heap " + path("trig")) == 0, "binary exit 0");
  c.expect(exit_status("descend " + path("trig") + " --rb B_proj") == 1, "binary exit 1");
  c.expect(exit_status("verify heap " + malformed) == 2, "binary exit 2");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Ctx&)>>> criteria = {
      {"trigonometric heap verifies and is commutative", heap_example},
      {"group-likes over Q and Q(i)", grouplike_search},
      {"Rota-Baxter operators and the corrupted operator", rota_baxter_example},
      {"heap and Hopf algebra roundtrips", roundtrips},
      {"Grunspan map and five-leg identity", grunspan},
      {"translation composition laws", translations},
      {"truss suite", trusses},
      {"structure isomorphism", structure_theorem},
      {"descendent heaps", descendents},
      {"Rota-Baxter modules", rb_modules},
      {"exchange and right-module identities", commutative_identities},
      {"command-line exit codes and determinism", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Ctx ctx;
    std::string error;
    try {
      criteria[i].second(ctx);
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    bool ok = error.empty() && ctx.failed() == 0 && ctx.checks() > 0;
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << " (" << ctx.checks() << " checks)\n";
    if (!error.empty()) std::cout << "     exception: " << error << "\n";
    for (const auto& f : ctx.failures()) std::cout << "     failed: " << f << "\n";
    if (ctx.failed() > ctx.failures().size())
      std::cout << "     ... " << ctx.failed() - ctx.failures().size() << " more\n";
  }
  return failed == 0 ? 0 : 1;
}
