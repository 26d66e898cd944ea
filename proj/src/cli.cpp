#include "hopfkit/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <sstream>

#include "canonical_json.hpp"
#include "hopfkit/bundle.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

bool CliReport::passed() const {
  if (!errors.empty()) return false;
  for (const auto& s : sections)
    if (!s.passed()) return false;
  return true;
}

std::string emit_report(const CliReport& r, ReportFormat format) {
  if (format == ReportFormat::Structured) {
    nlohmann::json root = nlohmann::json::object();
    root["command"] = r.command;
    root["status"] = r.passed() ? "pass" : "fail";
    root["errors"] = r.errors;
    root["results"] = nlohmann::json::object();
    for (const auto& [k, v] : r.results) root["results"][k] = v;
    root["sections"] = nlohmann::json::array();
    for (const auto& s : r.sections) {
      nlohmann::json sec = {{"subject", s.subject}, {"checks", nlohmann::json::array()}};
      for (const auto& c : s.checks) {
        nlohmann::json cj = {{"id", c.id}, {"law", c.law}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.note.empty()) cj["note"] = c.note;
        if (!c.pass && c.witness)
          cj["witness"] = {{"inputs", c.witness->inputs}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
        sec["checks"].push_back(cj);
      }
      root["sections"].push_back(sec);
    }
    return detail::canonical(root);
  }
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  for (const auto& s : r.sections) {
    out << "== " << s.subject << "\n";
    for (const auto& c : s.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.law << "\n";
      if (!c.pass && c.witness) {
        std::string in;
        for (const auto& x : c.witness->inputs) in += (in.empty() ? "" : ", ") + x;
        out << "     at (" << in << "): lhs = " << c.witness->lhs << ", rhs = " << c.witness->rhs << "\n";
      }
      if (!c.note.empty()) out << "     note: " << c.note << "\n";
    }
  }
  for (const auto& [k, v] : r.results) {
    out << "-- " << k << (v.empty() ? " (none)" : "") << "\n";
    for (const auto& line : v) out << "   " << line << "\n";
  }
  for (const auto& e : r.errors) out << "error: " << e << "\n";
  out << "status: " << (r.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::DanglingReference || c == ErrorCode::DimMismatch ||
         c == ErrorCode::FieldMismatch;
}

struct Options {
  std::string format = "text";
  std::string field;
  std::string kind;
  std::string bundle;
  std::string name;
  std::string grouplike;
  std::string rb;
  std::string module;
  std::string rbmodule;
  std::string family;
  std::string heap;
  std::string out;
};

// Hypothesis failures become report errors; input errors propagate.
template <class F>
void attempt(CliReport& r, F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (is_input_error(e.code())) throw;
    r.errors.push_back(e.what());
  }
}

Bundle open_bundle(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path) && fs::exists(path + ".json")) return load_bundle(path + ".json");
  return load_bundle(path);
}

template <class Map>
std::vector<std::string> select(const Map& m, const std::string& name, const std::string& kind) {
  std::vector<std::string> out;
  if (name.empty()) {
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
  }
  if (!m.contains(name)) throw Error(ErrorCode::DanglingReference, "no " + kind + " named \"" + name + "\"");
  return {name};
}

// The named entry, or the only one when no name is given.
template <class Map>
std::string pick(const Map& m, const std::string& name, const std::string& kind, const std::string& flag) {
  if (name.empty()) {
    if (m.size() != 1) throw UsageError(flag + " is required: the bundle has " + std::to_string(m.size()) + " " + kind + "s");
    return m.begin()->first;
  }
  if (!m.contains(name)) throw Error(ErrorCode::DanglingReference, "no " + kind + " named \"" + name + "\"");
  return name;
}

const std::string& require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw UsageError(flag + " is required");
  return value;
}

// A bundle vector, or a basis element given by name.
Vec resolve_vector(const Bundle& b, const std::string& name, const Names& space) {
  if (auto it = b.vectors.find(name); it != b.vectors.end()) {
    if (it->second.value.size() != space.size())
      throw Error(ErrorCode::DimMismatch, "vector \"" + name + "\" lives in another space");
    return it->second.value;
  }
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space[i] == name) return unit_vec(space.size(), i);
  throw Error(ErrorCode::DanglingReference, "no vector or basis element named \"" + name + "\"");
}

const Bundle::Operator& find_operator(const Bundle& b, const std::string& name) {
  auto it = b.operators.find(name);
  if (it == b.operators.end()) throw Error(ErrorCode::DanglingReference, "no operator named \"" + name + "\"");
  return it->second;
}

RBHeap rb_on_heap(const Bundle& b, const std::string& op) {
  const auto& o = find_operator(b, op);
  auto it = b.heaps.find(o.space);
  if (it == b.heaps.end()) throw Error(ErrorCode::DimMismatch, "operator \"" + op + "\" does not act on a heap");
  return RBHeap(it->second.heap, o.map);
}

RBHeapModule rb_module(const Bundle& b, const std::string& name) {
  const auto& r = b.rb_modules.at(name);
  const HeapModule& m = b.modules.at(r.module).module;
  return RBHeapModule(m, find_operator(b, r.t).map, RBHeap(m.parent(), find_operator(b, r.b).map));
}

std::string matrix_str(const LinearMap& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m.at(r, c).str();
    out += "]";
  }
  return out + "]";
}

VerificationReport titled(VerificationReport r, const std::string& subject) {
  r.subject = subject;
  return r;
}

std::optional<FieldSpec> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return FieldSpec::parse(o.field);
}

void verify_kind(const Bundle& b, const Options& o, const std::string& kind, CliReport& r) {
  auto field = field_override(o);
  if (field && kind != "coalgebra" && kind != "heap") throw UsageError("--field applies to coalgebra and heap checks");
  std::string name = !o.rb.empty() && (kind == "rb" || kind == "cooperator") ? o.rb : o.name;
  if (kind == "coalgebra") {
    for (const auto& n : select(b.coalgebras, name, "coalgebra")) {
      Coalgebra c = field ? b.coalgebras.at(n).with_field(*field) : b.coalgebras.at(n);
      attempt(r, [&] { r.sections.push_back(titled(verify_coalgebra(c), "coalgebra " + n)); });
    }
  } else if (kind == "heap") {
    for (const auto& n : select(b.heaps, name, "heap")) {
      HopfHeap h = field ? b.heaps.at(n).heap.with_field(*field) : b.heaps.at(n).heap;
      attempt(r, [&] {
        r.sections.push_back(titled(verify_hopf_heap(h), "heap " + n));
        r.results["commutative"].push_back(n + ": " + (is_commutative_heap(h) ? "true" : "false"));
      });
    }
  } else if (kind == "hopf") {
    for (const auto& n : select(b.hopf_algebras, name, "Hopf algebra"))
      attempt(r, [&] { r.sections.push_back(titled(verify_hopf_algebra(b.hopf_algebras.at(n).hopf), "Hopf algebra " + n)); });
  } else if (kind == "truss") {
    for (const auto& n : select(b.trusses, name, "truss"))
      attempt(r, [&] { r.sections.push_back(titled(verify_hopf_truss(b.trusses.at(n).truss), "truss " + n)); });
  } else if (kind == "module") {
    for (const auto& n : select(b.modules, name, "module"))
      attempt(r, [&] { r.sections.push_back(titled(verify_heap_module(b.modules.at(n).module), "module " + n)); });
  } else if (kind == "rb") {
    for (const auto& n : select(b.operators, name, "operator")) {
      if (name.empty() && !b.heaps.contains(b.operators.at(n).space)) continue;
      RBHeap op = rb_on_heap(b, n);
      attempt(r, [&] { r.sections.push_back(titled(verify_rb_heap(op.heap(), op.B()), "operator " + n)); });
    }
  } else if (kind == "cooperator") {
    for (const auto& n : select(b.operators, name, "operator")) {
      const auto& op = b.operators.at(n);
      auto it = b.hopf_algebras.find(op.space);
      if (it == b.hopf_algebras.end()) {
        if (name.empty()) continue;
        throw Error(ErrorCode::DimMismatch, "operator \"" + n + "\" does not act on a Hopf algebra");
      }
      attempt(r, [&] { r.sections.push_back(titled(verify_rb_cooperator(it->second.hopf, op.map), "co-operator " + n)); });
    }
  } else if (kind == "rbmodule") {
    for (const auto& n : select(b.rb_modules, name, "Rota-Baxter module")) {
      RBHeapModule m = rb_module(b, n);
      attempt(r, [&] { r.sections.push_back(titled(verify_rb_heap_module(m), "Rota-Baxter module " + n)); });
    }
  }
}

void cmd_report(const Bundle& b, const Options& o, CliReport& r) {
  for (const char* kind : {"coalgebra", "heap", "hopf", "truss", "module", "rb", "cooperator", "rbmodule"})
    verify_kind(b, o, kind, r);
}

void cmd_construct(const Bundle& b, const Options& o, CliReport& r) {
  const std::string& kind = o.kind;
  if (!o.out.empty() && kind != "hopf" && kind != "heap") throw UsageError("--out applies to hopf and heap");
  if (kind == "hopf") {
    std::string hn = pick(b.heaps, o.name, "heap", "--name");
    const auto& entry = b.heaps.at(hn);
    Vec x = resolve_vector(b, require(o.grouplike, "--grouplike"), entry.heap.names());
    attempt(r, [&] {
      HopfAlgebra a = hopf_from_heap(entry.heap, x);
      r.sections.push_back(titled(verify_hopf_algebra(a), "Hopf algebra of " + hn + " at " + o.grouplike));
      const Names& nm = a.names();
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
          r.results["product"].push_back(nm[i] + "·" + nm[j] + " = " +
                                         format_vec(a.multiply(unit_vec(a.dim(), i), unit_vec(a.dim(), j)), nm));
      r.results["antipode"].push_back(matrix_str(a.antipode()));
      if (!o.out.empty()) {
        Bundle copy = b;
        copy.hopf_algebras[hn + "_" + o.grouplike] = {entry.coalgebra, a};
        save_bundle(copy, o.out);
      }
    });
  } else if (kind == "heap") {
    std::string an = pick(b.hopf_algebras, o.name, "Hopf algebra", "--name");
    const auto& entry = b.hopf_algebras.at(an);
    attempt(r, [&] {
      HopfHeap h = heap_from_hopf(entry.hopf);
      r.sections.push_back(titled(verify_hopf_heap(h), "heap of " + an));
      r.results["commutative"].push_back(is_commutative_heap(h) ? "true" : "false");
      if (!o.out.empty()) {
        Bundle copy = b;
        copy.heaps["Hp_" + an] = {entry.coalgebra, h};
        save_bundle(copy, o.out);
      }
    });
  } else if (kind == "cooperator") {
    RBHeap op = rb_on_heap(b, require(o.rb, "--rb"));
    Vec x = resolve_vector(b, require(o.grouplike, "--grouplike"), op.heap().names());
    attempt(r, [&] {
      RBCooperator c = cooperator_from_rb_heap(op, x);
      r.sections.push_back(titled(verify_rb_cooperator(c.hopf(), c.B()), "co-operator " + o.rb + " at " + o.grouplike));
    });
  } else if (kind == "rbheap") {
    const auto& op = find_operator(b, require(o.rb, "--rb"));
    auto it = b.hopf_algebras.find(op.space);
    if (it == b.hopf_algebras.end())
      throw Error(ErrorCode::DimMismatch, "operator \"" + o.rb + "\" does not act on a Hopf algebra");
    attempt(r, [&] {
      RBHeap h = rb_heap_from_cooperator(RBCooperator(it->second.hopf, op.map));
      r.sections.push_back(titled(verify_rb_heap(h.heap(), h.B()), "operator " + o.rb + " on the heap of " + op.space));
    });
  } else if (kind == "cobrace") {
    RBHeap op = rb_on_heap(b, require(o.rb, "--rb"));
    Vec x = resolve_vector(b, require(o.grouplike, "--grouplike"), op.heap().names());
    attempt(r, [&] { r.sections.push_back(titled(cobrace_from_rb(op, x).report, "co-brace of " + o.rb)); });
  }
}

void cmd_grouplikes(const Bundle& b, const Options& o, CliReport& r) {
  auto field = field_override(o);
  std::vector<std::string> names;
  if (!o.name.empty() && b.heaps.contains(o.name))
    names = {b.heaps.at(o.name).coalgebra};
  else
    names = select(b.coalgebras, o.name, "coalgebra");
  for (const auto& n : names) {
    Coalgebra c = field ? b.coalgebras.at(n).with_field(*field) : b.coalgebras.at(n);
    attempt(r, [&] {
      auto found = find_grouplikes(c);
      VerificationReport rep;
      rep.subject = "group-likes of " + n + " over " + c.field().name();
      auto& list = r.results["grouplikes " + n];
      for (std::size_t i = 0; i < found.size(); ++i) {
        std::string v = format_vec(found[i], c.names());
        list.push_back(v);
        rep.add(condition("grouplike." + std::to_string(i), "Δx = x⊗x, ε(x) = 1", is_grouplike(c, found[i]), v));
      }
      r.sections.push_back(rep);
    });
  }
}

void cmd_coinvariants(const Bundle& b, const Options& o, CliReport& r) {
  std::string mn = pick(b.modules, o.module, "module", "--module");
  const HeapModule& m = b.modules.at(mn).module;
  Vec x = resolve_vector(b, require(o.grouplike, "--grouplike"), m.parent().names());
  attempt(r, [&] {
    auto& list = r.results["coinvariants " + mn];
    for (const auto& v : coinvariants(m, x)) list.push_back(format_vec(v, m.names()));
  });
}

void cmd_structure(const Bundle& b, const Options& o, CliReport& r) {
  const std::string& xn = require(o.grouplike, "--grouplike");
  if (!o.rbmodule.empty()) {
    if (!b.rb_modules.contains(o.rbmodule))
      throw Error(ErrorCode::DanglingReference, "no Rota-Baxter module named \"" + o.rbmodule + "\"");
    RBHeapModule m = rb_module(b, o.rbmodule);
    Vec x = resolve_vector(b, xn, m.module().parent().names());
    attempt(r, [&] {
      RBStructureIso s = rb_structure_iso(m, x);
      r.sections.push_back(titled(s.report, "structure of " + o.rbmodule + " at " + xn));
      r.results["T-hat"].push_back(matrix_str(s.t_hat));
    });
    return;
  }
  std::string mn = pick(b.modules, o.module, "module", "--module");
  const HeapModule& m = b.modules.at(mn).module;
  Vec x = resolve_vector(b, xn, m.parent().names());
  attempt(r, [&] {
    StructureIso s = structure_iso(m, x);
    VerificationReport rep;
    rep.subject = "structure of " + mn + " at " + xn;
    std::size_t d = m.dim(), f = s.free.dim();
    rep.add(condition("iso.alpha-beta", "α∘β = id", s.alpha * s.beta == LinearMap::identity(d)));
    rep.add(condition("iso.beta-alpha", "β∘α = id", s.beta * s.alpha == LinearMap::identity(f)));
    rep.merge(verify_module_hom(s.alpha, s.free, m), "alpha.");
    r.sections.push_back(rep);
    auto& list = r.results["coinvariants"];
    for (const auto& v : s.coinvariant_basis) list.push_back(format_vec(v, m.names()));
  });
}

void cmd_descend(const Bundle& b, const Options& o, CliReport& r) {
  RBHeap op = rb_on_heap(b, require(o.rb, "--rb"));
  attempt(r, [&] {
    DescendentHeap d = descendent_heap(op);
    r.sections.push_back(titled(d.report, "descendent heap of " + o.rb));
    const Names& nm = op.heap().names();
    const Tensor& dp = d.heap.coalgebra().comul();
    for (std::size_t i = 0; i < nm.size(); ++i) {
      std::vector<std::pair<Index, Scalar>> terms;
      for (const auto& [k, v] : dp.entries())
        if (k[0] == i) terms.emplace_back(Index{k[1], k[2]}, v);
      r.results["comul'"].push_back("Δ'(" + nm[i] + ") = " + format_combination(terms, {&nm, &nm}));
    }
    r.results["comul' = comul"].push_back(dp == op.heap().coalgebra().comul() ? "true" : "false");
  });
}

// Scalars of height at most 2, in a fixed order.
std::vector<Scalar> small_scalars(bool with_zero) {
  std::vector<Scalar> out;
  if (with_zero) out.push_back(Scalar(0));
  for (const Scalar& s : {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar::frac(1, 2), Scalar::frac(-1, 2)})
    out.push_back(s);
  return out;
}

std::vector<LinearMap> diagonal_family(std::size_t n) {
  std::vector<Scalar> vals = small_scalars(true);
  std::vector<LinearMap> out;
  std::vector<std::size_t> pos(n, 0);
  for (;;) {
    Vec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = vals[pos[i]];
    out.push_back(LinearMap::diagonal(d));
    std::size_t i = n;
    while (i > 0 && ++pos[i - 1] == vals.size()) pos[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// Permutation matrices with signs.
std::vector<LinearMap> permutation_family(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<LinearMap> out;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      LinearMap m(n, n);
      for (std::size_t i = 0; i < n; ++i) m.set(perm[i], i, (mask >> i) & 1 ? Scalar(-1) : Scalar(1));
      out.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void cmd_search(const Bundle& b, const Options& o, CliReport& r) {
  std::string hn = pick(b.heaps, o.heap, "heap", "--heap");
  const HopfHeap& h = b.heaps.at(hn).heap;
  if (h.dim() > 4) throw UsageError("search families are generated up to dimension 4");
  auto family = o.family == "diagonal" ? diagonal_family(h.dim()) : permutation_family(h.dim());
  attempt(r, [&] {
    auto& list = r.results["operators on " + hn];
    for (const auto& op : search_rb_operators(h, family)) list.push_back(matrix_str(op.B()));
    r.results["candidates"].push_back(std::to_string(family.size()));
  });
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult res;
  Options o;
  CLI::App app{"Exact verification of Hopf heaps, trusses, heap modules and Rota-Baxter operators", "hopfkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--field", o.field, "Q, Q(sqrt:-1) or Q(sqrt:d)");

  auto* verify = app.add_subcommand("verify", "Check the axioms of bundle objects");
  verify->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"coalgebra", "heap", "hopf", "truss", "module", "rb", "cooperator", "rbmodule"}));
  verify->add_option("bundle", o.bundle)->required();
  verify->add_option("--name", o.name, "Only this object");
  verify->add_option("--rb", o.rb, "Only this operator");

  auto* construct = app.add_subcommand("construct", "Build a derived structure and verify it");
  construct->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"hopf", "heap", "cooperator", "rbheap", "cobrace"}));
  construct->add_option("bundle", o.bundle)->required();
  construct->add_option("--name", o.name, "Source heap or Hopf algebra");
  construct->add_option("--grouplike", o.grouplike, "Vector or basis name");
  construct->add_option("--rb", o.rb, "Operator name");
  construct->add_option("--out", o.out, "Write the bundle with the new object added");

  auto* grouplikes = app.add_subcommand("grouplikes", "List the group-like elements");
  grouplikes->add_option("bundle", o.bundle)->required();
  grouplikes->add_option("--name", o.name, "Coalgebra or heap");

  auto* coinv = app.add_subcommand("coinvariants", "Coinvariants of a heap module");
  coinv->add_option("bundle", o.bundle)->required();
  coinv->add_option("--module", o.module);
  coinv->add_option("--grouplike", o.grouplike);

  auto* structure = app.add_subcommand("structure", "Structure isomorphism of a heap module");
  structure->add_option("bundle", o.bundle)->required();
  structure->add_option("--module", o.module);
  structure->add_option("--rbmodule", o.rbmodule);
  structure->add_option("--grouplike", o.grouplike);

  auto* descend = app.add_subcommand("descend", "Descendent heap of a Rota-Baxter operator");
  descend->add_option("bundle", o.bundle)->required();
  descend->add_option("--rb", o.rb);

  auto* search = app.add_subcommand("search", "Filter a generated family through the operator identities");
  search->add_option("bundle", o.bundle)->required();
  search->add_option("--family", o.family)->required()->check(CLI::IsMember({"diagonal", "permutation"}));
  search->add_option("--heap", o.heap);

  auto* report = app.add_subcommand("report", "Verify every object in a bundle");
  report->add_option("bundle", o.bundle)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    res.output = out.str();
    res.diagnostics = err.str();
    res.exit_code = code == 0 ? 0 : 2;
    return res;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  CliReport r;
  r.command = verb + (o.kind.empty() ? "" : " " + o.kind);
  try {
    Bundle b = open_bundle(o.bundle);
    if (verb == "verify")
      verify_kind(b, o, o.kind, r);
    else if (verb == "construct")
      cmd_construct(b, o, r);
    else if (verb == "grouplikes")
      cmd_grouplikes(b, o, r);
    else if (verb == "coinvariants")
      cmd_coinvariants(b, o, r);
    else if (verb == "structure")
      cmd_structure(b, o, r);
    else if (verb == "descend")
      cmd_descend(b, o, r);
    else if (verb == "search")
      cmd_search(b, o, r);
    else
      cmd_report(b, o, r);
  } catch (const UsageError& e) {
    res.exit_code = 2;
    res.diagnostics = std::string("usage: ") + e.what() + "\n";
    return res;
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      res.exit_code = 2;
      res.diagnostics = std::string("error: ") + e.what() + "\n";
      return res;
    }
    r.errors.push_back(e.what());
  }
  res.output = emit_report(r, o.format == "structured" ? ReportFormat::Structured : ReportFormat::Text);
  res.exit_code = r.passed() ? 0 : 1;
  return res;
}

}  // namespace hopfkit
