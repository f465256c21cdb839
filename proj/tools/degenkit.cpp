// degenkit: verify algebra identities, invariants and degenerations from the command line.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"
#include "degenkit/json_io.hpp"
#include "degenkit/pierce.hpp"
#include "degenkit/suites.hpp"

using namespace degenkit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

// A JSON file, or a catalog reference "catalog:NAME(args)@n".
Algebra load_algebra(const std::string& ref) {
  if (ref.starts_with("catalog:")) return build(parse_catalog_reference(ref));
  return algebra_from_json(read_json_file(ref));
}

// A JSON file, or "witness:ID(key=value,...)@n".
Witness load_witness(const std::string& ref, WitnessInstance* inst_out = nullptr) {
  if (!ref.starts_with("witness:")) return witness_from_json(read_json_file(ref));
  std::string_view s(ref);
  s.remove_prefix(8);
  const auto at = s.rfind('@');
  if (at == std::string_view::npos) throw Error(ErrorCode::Parse, "witness reference needs @n");
  const std::size_t n = std::stoul(std::string(s.substr(at + 1)));
  s = s.substr(0, at);
  Params p;
  const auto open = s.find('(');
  std::string id(s.substr(0, open));
  if (open != std::string_view::npos) {
    if (s.back() != ')') throw Error(ErrorCode::Parse, "unbalanced parentheses in '" + ref + "'");
    p = Params::parse(s.substr(open + 1, s.size() - open - 2));
  }
  WitnessInstance inst = build_witness(id, n, p);
  if (inst_out) *inst_out = inst;
  return inst.witness;
}

Vec parse_vector(const std::string& text, std::size_t n) {
  Vec v = parse_scalar_list(text);
  if (v.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "vector has " + std::to_string(v.size()) + " entries, expected " +
                                                  std::to_string(n));
  return v;
}

void maybe_write(const std::string& path, const Json& j) {
  if (!path.empty()) write_json_file(path, j);
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

Params collect_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::Parse, "--param expects key=value, got " + it);
    p.set(it.substr(0, eq), it.substr(eq + 1));
  }
  return p;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of algebra degenerations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  app.add_option("--json", json_path, "Write a JSON report to this path");

  std::string file, variety;
  auto* check = app.add_subcommand("check", "Check the identities of a variety");
  check->add_option("file", file, "Algebra JSON or catalog reference")->required();
  check->add_option("--variety", variety, "associative|lie|jordan|commutative|anticommutative")->required();

  auto* inv = app.add_subcommand("invariants", "Print the invariant profile");
  inv->add_option("file", file, "Algebra JSON or catalog reference")->required();

  std::string witness_ref, target_ref;
  auto* deg = app.add_subcommand("degenerate", "Verify a witness");
  deg->add_option("source", file, "Algebra JSON or catalog reference")->required();
  deg->add_option("--witness", witness_ref, "Witness JSON or witness:ID(params)@n")->required();
  deg->add_option("--target", target_ref, "Algebra JSON or catalog reference (default: the witness target)");

  std::string idem, kind;
  auto* pierce = app.add_subcommand("pierce", "Pierce decomposition at an idempotent");
  pierce->add_option("file", file, "Algebra JSON or catalog reference")->required();
  pierce->add_option("--idempotent", idem, "Comma-separated exact scalars")->required();
  pierce->add_option("--kind", kind, "jordan|associative (default: jordan for commutative tables)");

  std::string other;
  auto* sep = app.add_subcommand("separate", "Invariant obstructions in both directions");
  sep->add_option("a", file, "Algebra JSON or catalog reference")->required();
  sep->add_option("b", other, "Algebra JSON or catalog reference")->required();

  auto* cat = app.add_subcommand("catalog", "Catalog entries and witnesses");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries and witnesses");
  std::string name;
  std::size_t n = 0;
  std::vector<std::string> params;
  auto* cat_emit = cat->add_subcommand("emit", "Write an algebra as JSON");
  cat_emit->add_option("name", name)->required();
  cat_emit->add_option("--n", n)->required();
  cat_emit->add_option("--param", params, "key=value (repeatable)");
  auto* cat_wit = cat->add_subcommand("witness", "Write a witness as JSON");
  cat_wit->add_option("id", name)->required();
  cat_wit->add_option("--n", n)->required();
  cat_wit->add_option("--param", params, "key=value (repeatable)");

  std::string suite;
  std::size_t n_min = 3, n_max = 6;
  std::uint64_t seed = 1;
  auto* vp = app.add_subcommand("verify-paper", "Run verification suites");
  vp->add_option("--suite", suite, "level1|jordan2|lie2|assoc2|pierce|separations|chains|all")->required();
  vp->add_option("--n-min", n_min);
  vp->add_option("--n-max", n_max);
  vp->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*check) {
      const Algebra a = load_algebra(file);
      const VarietyReport r = check_variety(a, parse_variety(variety));
      std::cout << to_string(r.variety) << ": " << (r.pass ? "pass" : "fail") << '\n';
      for (const auto& v : r.violations) {
        std::cout << "  " << v.identity << " at (";
        for (std::size_t i = 0; i < v.indices.size(); ++i) std::cout << (i ? "," : "") << v.indices[i];
        std::cout << ") residual " << vec_text(v.residual) << '\n';
      }
      maybe_write(json_path, variety_report_to_json(r));
      return r.pass ? kPass : kFail;
    }
    if (*inv) {
      const Algebra a = load_algebra(file);
      const InvariantProfile p = invariant_profile(a);
      std::cout << "dim " << p.dim << "\n"
                << "associative " << p.associative << "  lie " << p.lie << "  jordan " << p.jordan
                << "  commutative " << p.commutative << "  anticommutative " << p.anticommutative << "\n"
                << "nilpotent " << p.nilpotent;
      if (p.nilpotency_class) std::cout << " (class " << *p.nilpotency_class << ")";
      std::cout << "  solvable " << p.solvable;
      if (p.solvability_index) std::cout << " (index " << *p.solvability_index << ")";
      std::cout << "\nlower central " << dims_text(p.lower_central_dims) << "\nderived " << dims_text(p.derived_dims)
                << "\nplenary " << dims_text(p.plenary_dims) << "\ndim Der " << p.dim_der << "\ndim Ann "
                << p.dim_ann << "\ncoordinate abelian ideal " << p.coord_ab_dim << '\n';
      maybe_write(json_path, profile_to_json(p));
      return kPass;
    }
    if (*deg) {
      const Algebra a = load_algebra(file);
      const Witness w = load_witness(witness_ref);
      std::string tgt = target_ref.empty() ? w.target : target_ref;
      if (tgt.empty()) throw Error(ErrorCode::Parse, "no --target and the witness names none");
      const Algebra t = load_algebra(tgt);
      const WitnessVerdict v = verify_witness(a, w, t);
      std::cout << "limit exists: " << (v.limit_exists ? "yes" : "no");
      if (v.pole) std::cout << " (pole at " << (*v.pole)[0] << "," << (*v.pole)[1] << "," << (*v.pole)[2] << ")";
      std::cout << "\nlimit equals target: " << (v.limit_equals_target ? "yes" : "no")
                << "\nproper: " << (v.proper ? "yes" : "no") << "\ndim Der: " << v.source_dim_der << " -> "
                << v.target_dim_der << '\n';
      for (const auto& r : v.residuals)
        std::cout << "  c(" << r.i << "," << r.j << "," << r.k << "): got " << r.got << ", expected " << r.expected
                  << '\n';
      maybe_write(json_path, verdict_to_json(v));
      return v.pass() ? kPass : kFail;
    }
    if (*pierce) {
      const Algebra a = load_algebra(file);
      const Vec e = parse_vector(idem, a.dim());
      const bool jordan = kind.empty() ? a.is_commutative() : kind == "jordan";
      if (!kind.empty() && kind != "jordan" && kind != "associative")
        throw Error(ErrorCode::Parse, "--kind must be jordan or associative");
      const PierceSplit s = jordan ? pierce_jordan(a, e) : pierce_associative(a, e);
      for (const auto& c : s.components) {
        std::cout << c.name << " (dim " << c.space.dim() << "):";
        for (const auto& v : c.space.basis_vectors()) std::cout << ' ' << vec_text(v);
        std::cout << '\n';
      }
      for (const auto& r : s.rules) {
        std::cout << (r.holds ? "  holds  " : "  FAILS  ") << r.rule;
        if (r.offending)
          std::cout << "  " << vec_text(r.offending->left) << " * " << vec_text(r.offending->right) << " = "
                    << vec_text(r.offending->product);
        std::cout << '\n';
      }
      maybe_write(json_path, pierce_to_json(s));
      return s.all_rules_hold() ? kPass : kFail;
    }
    if (*sep) {
      const Algebra a = load_algebra(file), b = load_algebra(other);
      const auto ab = degeneration_obstructions(a, b);
      const auto ba = degeneration_obstructions(b, a);
      auto show = [](const char* dir, const std::vector<Obstruction>& os) {
        std::cout << dir << ":";
        if (os.empty()) std::cout << " no obstruction";
        for (const auto& o : os) std::cout << "\n  " << to_string(o.kind) << " (" << o.detail << ")";
        std::cout << '\n';
      };
      show("a -> b", ab);
      show("b -> a", ba);
      maybe_write(json_path, {{"forward", obstructions_to_json(ab)}, {"backward", obstructions_to_json(ba)},
                              {"separated", !ab.empty() && !ba.empty()}});
      return !ab.empty() && !ba.empty() ? kPass : kFail;
    }
    if (*cat_list) {
      Json entries = Json::array(), witnesses = Json::array();
      for (const auto& e : catalog_entries()) {
        std::vector<std::string> pnames;
        for (const auto& p : e.params) pnames.push_back(p.name + ": " + p.domain);
        std::cout << e.name << "  [" << to_string(e.role) << "] n >= " << e.n_min;
        if (e.n_max) std::cout << ", n <= " << e.n_max;
        if (!pnames.empty()) std::cout << "  params " << join(pnames);
        std::cout << "  (" << e.citation << ")\n";
        entries.push_back({{"name", e.name}, {"display", e.display}, {"role", std::string(to_string(e.role))},
                           {"n_min", e.n_min}, {"n_max", e.n_max}, {"params", pnames}, {"citation", e.citation},
                           {"note", e.note}});
      }
      for (const auto& w : witness_entries()) {
        std::cout << w.id << "  " << w.source << " -> " << w.target << "  (" << w.citation << ")\n";
        witnesses.push_back({{"id", w.id}, {"source", w.source}, {"target", w.target}, {"n_min", w.n_min},
                             {"from_proof", w.from_proof}, {"citation", w.citation}, {"anchor", w.anchor}});
      }
      maybe_write(json_path, {{"entries", entries}, {"witnesses", witnesses}});
      return kPass;
    }
    if (*cat_emit) {
      const Json j = algebra_to_json(build(name, n, collect_params(params)));
      std::cout << j.dump(2) << '\n';
      maybe_write(json_path, j);
      return kPass;
    }
    if (*cat_wit) {
      const Json j = witness_to_json(build_witness(name, n, collect_params(params)).witness);
      std::cout << j.dump(2) << '\n';
      maybe_write(json_path, j);
      return kPass;
    }
    if (*vp) {
      std::vector<std::string> ids = suite == "all" ? suite_ids() : std::vector<std::string>{suite};
      Json reports = Json::array();
      bool all = true;
      for (const auto& id : ids) {
        const SuiteReport r = run_suite(id, n_min, n_max, seed);
        std::cout << r.text();
        reports.push_back(r.to_json());
        all = all && r.pass();
      }
      maybe_write(json_path, ids.size() == 1 ? reports[0] : Json{{"suites", reports}, {"pass", all}});
      return all ? kPass : kFail;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
