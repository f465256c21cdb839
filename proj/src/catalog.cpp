#include "degenkit/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "degenkit/error.hpp"

namespace degenkit {

// ---------------------------------------------------------------- params

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  std::string item;
  auto flush = [&] {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::Parse, "empty list item in '" + std::string(text) + "'");
    out.push_back(Scalar::parse(item));
    item.clear();
  };
  for (char ch : text) {
    if (ch == ';' || ch == ',')
      flush();
    else
      item.push_back(ch);
  }
  if (!text.empty()) flush();
  return out;
}

std::string join_scalars(const std::vector<Scalar>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i].str();
  }
  return out;
}

std::string Params::text(const std::string& key, const std::string& fallback) const {
  auto it = items_.find(key);
  return it == items_.end() ? fallback : it->second;
}

Scalar Params::scalar(const std::string& key, const Scalar& fallback) const {
  auto it = items_.find(key);
  return it == items_.end() ? fallback : Scalar::parse(it->second);
}

long Params::integer(const std::string& key, long fallback) const {
  auto it = items_.find(key);
  if (it == items_.end()) return fallback;
  Scalar s = Scalar::parse(it->second);
  if (!s.is_real() || s.re().get_den() != 1 || !s.re().get_num().fits_slong_p())
    throw Error(ErrorCode::ParameterDomain, key + " must be an integer");
  return s.re().get_num().get_si();
}

std::vector<Scalar> Params::list(const std::string& key) const {
  auto it = items_.find(key);
  if (it == items_.end()) return {};
  return parse_scalar_list(it->second);
}

std::vector<long> Params::int_list(const std::string& key) const {
  std::vector<long> out;
  for (const auto& s : list(key)) {
    if (!s.is_real() || s.re().get_den() != 1 || !s.re().get_num().fits_slong_p())
      throw Error(ErrorCode::ParameterDomain, key + " must list integers");
    out.push_back(s.re().get_num().get_si());
  }
  return out;
}

Params Params::parse(std::string_view text) {
  Params p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw Error(ErrorCode::Parse, "expected key=value, got '" + std::string(item) + "'");
    p.set(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    pos = end + 1;
  }
  return p;
}

std::string Params::str() const {
  std::string out;
  for (const auto& [k, v] : items_) {
    if (!out.empty()) out += ',';
    out += k + "=" + v;
  }
  return out;
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::LevelOne: return "level_one";
    case Role::LevelTwo: return "level_two";
    case Role::ProofFamily: return "proof_family";
    case Role::Abelian: return "abelian";
  }
  return "unknown";
}

// ---------------------------------------------------------------- builders

namespace {

struct Table {
  std::vector<Product> p;
  void add(int i, int j, int k, const Scalar& c) {
    if (!c.is_zero()) p.push_back({i, j, k, c});
  }
};

[[noreturn]] void domain_error(const std::string& msg) { throw Error(ErrorCode::ParameterDomain, msg); }

int as_int(std::size_t n) { return static_cast<int>(n); }

const Scalar kHalf(1, 2);

std::vector<Scalar> exact_list(const Params& ps, const std::string& key, std::size_t len,
                               const std::vector<Scalar>& fallback) {
  std::vector<Scalar> xs = ps.has(key) ? ps.list(key) : fallback;
  if (xs.size() != len)
    domain_error(key + " needs " + std::to_string(len) + " entries, got " + std::to_string(xs.size()));
  return xs;
}

bool all_equal(const std::vector<Scalar>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
}

std::vector<Scalar> filled(std::size_t len, const Scalar& v) { return std::vector<Scalar>(len, v); }

const std::vector<Scalar>& scalar_samples() {
  static const std::vector<Scalar> s{Scalar(-1), Scalar(0), Scalar(1, 2), Scalar(2)};
  return s;
}

std::function<std::vector<Params>(std::size_t)> no_samples() {
  return [](std::size_t) { return std::vector<Params>{Params{}}; };
}

std::function<std::vector<Params>(std::size_t)> scalar_sampler(std::string key,
                                                                std::function<bool(const Scalar&)> ok) {
  return [key, ok](std::size_t) {
    std::vector<Params> out;
    for (const auto& s : scalar_samples())
      if (ok(s)) out.push_back(Params{{key, s.str()}});
    return out;
  };
}

std::string list_text(const std::vector<Scalar>& xs) { return join_scalars(xs, ";"); }

std::function<std::vector<Variety>(const Params&)> fixed(std::vector<Variety> v) {
  return [v](const Params&) { return v; };
}

const std::vector<Variety> kLie{Variety::Lie, Variety::Anticommutative};
const std::vector<Variety> kJordan{Variety::Jordan, Variety::Commutative};

// Level one.

Algebra build_p(std::size_t n, const Params&) {
  Table t;
  for (int i = 2; i <= as_int(n); ++i) t.add(1, i, i, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_n3(std::size_t n, const Params&) {
  Table t;
  t.add(1, 2, 3, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_lambda2(std::size_t n, const Params&) {
  Table t;
  t.add(1, 1, 2, 1);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

Algebra build_nu(std::size_t n, const Params& ps) {
  const Scalar a = ps.scalar("alpha", 0);
  Table t;
  t.add(1, 1, 1, 1);
  for (int i = 2; i <= as_int(n); ++i) {
    t.add(1, i, i, a);
    t.add(i, 1, i, Scalar(1) - a);
  }
  return make_algebra(n, t.p, Symmetry::None);
}

// Jordan.

Algebra build_j1(std::size_t n, const Params&) {
  Table t;
  t.add(1, 1, 1, 1);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

Algebra build_j2(std::size_t n, const Params&) {
  Table t;
  t.add(1, 1, 1, 1);
  for (int i = 2; i <= as_int(n); ++i) t.add(1, i, i, 1);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

Algebra build_j3(std::size_t n, const Params&) {
  Table t;
  t.add(1, 2, 3, 1);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

std::vector<Scalar> zeta_of(std::size_t n, const Params& ps) {
  std::vector<Scalar> z = exact_list(ps, "zeta", n - 1, {});
  for (const auto& v : z)
    if (!(v.is_zero() || v == kHalf || v.is_one())) domain_error("zeta entries must be 0, 1/2 or 1");
  if (all_equal(z)) domain_error("zeta entries must not all be equal");
  return z;
}

Algebra build_jzeta(std::size_t n, const Params& ps) {
  const auto z = zeta_of(n, ps);
  Table t;
  t.add(1, 1, 1, 1);
  for (int i = 2; i <= as_int(n); ++i) t.add(1, i, i, z[static_cast<std::size_t>(i - 2)]);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

std::vector<Params> zeta_samples(std::size_t n) {
  const std::size_t m = n - 1;
  std::vector<Scalar> a = filled(m, 0), b = filled(m, 0), c(m);
  a[0] = 1;
  b[1] = kHalf;
  for (std::size_t i = 0; i < m; ++i) c[i] = i % 2 ? Scalar(1) : kHalf;
  return {Params{{"zeta", list_text(a)}}, Params{{"zeta", list_text(b)}}, Params{{"zeta", list_text(c)}}};
}

// Lie.

Algebra build_r2(std::size_t n, const Params&) {
  Table t;
  t.add(1, 2, 2, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_r3(std::size_t n, const Params& ps) {
  Table t;
  t.add(1, 2, 2, 1);
  t.add(1, 3, 3, ps.scalar("alpha", 0));
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_n4(std::size_t n, const Params&) {
  Table t;
  t.add(1, 2, 3, 1);
  t.add(1, 3, 4, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_r3_1(std::size_t n, const Params&) {
  Table t;
  t.add(1, 2, 2, 1);
  t.add(1, 3, 3, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

bool g1_alpha_ok(const Scalar& a) { return !a.is_zero() && !a.is_one(); }

Algebra build_g1(std::size_t n, const Params& ps) {
  const Scalar a = ps.scalar("alpha", 2);
  if (!g1_alpha_ok(a)) domain_error("g1 needs alpha != 0, 1");
  Table t;
  t.add(1, 2, 2, a);
  for (int i = 3; i <= as_int(n); ++i) t.add(1, i, i, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_g2(std::size_t n, const Params&) {
  Table t;
  t.add(1, 2, 2, 1);
  t.add(1, 2, 3, 1);
  for (int i = 3; i <= as_int(n); ++i) t.add(1, i, i, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_n51(std::size_t n, const Params&) {
  Table t;
  t.add(1, 3, 5, 1);
  t.add(2, 4, 5, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_n52(std::size_t n, const Params&) {
  Table t;
  t.add(1, 2, 4, 1);
  t.add(1, 3, 5, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

Algebra build_g1fam(std::size_t n, const Params& ps) {
  const auto a = exact_list(ps, "alpha", n - 2, {});
  if (std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_one(); }))
    domain_error("g1fam needs some alpha_i != 1");
  Table t;
  t.add(1, 2, 2, 1);
  for (int i = 3; i <= as_int(n); ++i) t.add(1, i, i, a[static_cast<std::size_t>(i - 3)]);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

std::vector<Params> g1fam_samples(std::size_t n) {
  const std::size_t m = n - 2;
  std::vector<Scalar> mixed(m), last = filled(m, 1);
  for (std::size_t i = 0; i < m; ++i) mixed[i] = scalar_samples()[(i + 3) % 4];
  last[m - 1] = 2;
  return {Params{{"alpha", list_text(filled(m, 0))}}, Params{{"alpha", list_text(mixed)}},
          Params{{"alpha", list_text(last)}}};
}

std::size_t heisenberg_k(std::size_t n, const Params& ps) {
  const long k = ps.integer("k", 1);
  if (k < 1) domain_error("H needs k >= 1");
  if (static_cast<std::size_t>(2 * k + 1) > n)
    throw Error(ErrorCode::DimensionConstraint, "H(k) needs n >= 2k+1");
  return static_cast<std::size_t>(k);
}

// Basis x_1..x_k, y_1..y_k, z, then the abelian part.
Algebra build_heisenberg(std::size_t n, const Params& ps) {
  const int k = as_int(heisenberg_k(n, ps));
  Table t;
  for (int i = 1; i <= k; ++i) t.add(i, k + i, 2 * k + 1, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

std::vector<Params> heisenberg_samples(std::size_t n) {
  std::vector<Params> out{Params{{"k", "1"}}};
  if ((n - 1) / 2 > 1) out.push_back(Params{{"k", std::to_string((n - 1) / 2)}});
  return out;
}

// Associative.

Algebra build_a1(std::size_t n, const Params&) {
  Table t;
  t.add(1, 1, 1, 1);
  return make_algebra(n, t.p, Symmetry::None);
}

Algebra build_a_idem(std::size_t n, bool left, bool right) {
  Table t;
  t.add(1, 1, 1, 1);
  for (int i = 2; i <= as_int(n); ++i) {
    if (left) t.add(1, i, i, 1);
    if (right) t.add(i, 1, i, 1);
  }
  return make_algebra(n, t.p, Symmetry::None);
}

bool a5_ok(const Scalar& a) { return !(a.is_one() || (a + Scalar(1)).is_zero()); }

Algebra build_a5(std::size_t n, const Params& ps) {
  const Scalar a = ps.scalar("alpha", 0);
  if (!a5_ok(a)) domain_error("A5 needs alpha != 1, -1");
  Table t;
  t.add(2, 1, 3, 1);
  t.add(1, 2, 3, a);
  return make_algebra(n, t.p, Symmetry::None);
}

Algebra build_a6(std::size_t n, const Params&) {
  Table t;
  t.add(1, 1, 3, 1);
  t.add(2, 1, 3, 1);
  t.add(1, 2, 3, -1);
  return make_algebra(n, t.p, Symmetry::None);
}

// Proof-family sources.

// E11, E22, F = E12 + E21 under a.b = (ab + ba)/2.
void add_sym2(Table& t, int e11, int e22, int f) {
  t.add(e11, e11, e11, 1);
  t.add(e22, e22, e22, 1);
  t.add(f, f, e11, 1);
  t.add(f, f, e22, 1);
  t.add(e11, f, f, kHalf);
  t.add(e22, f, f, kHalf);
}

Algebra build_sym2(std::size_t n, const Params&) {
  Table t;
  add_sym2(t, 1, 2, 3);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

Algebra build_spin(std::size_t n, const Params&) {
  Table t;
  t.add(1, 1, 1, 1);
  for (int i = 2; i <= as_int(n); ++i) {
    t.add(1, i, i, 1);
    t.add(i, i, 1, 1);
  }
  return make_algebra(n, t.p, Symmetry::Commutative);
}

// Sym2 over the dual numbers: 1..3 plain, 4..6 times epsilon.
Algebra build_sym2_dual(std::size_t n, const Params&) {
  Table t;
  add_sym2(t, 1, 2, 3);
  const Algebra base = build_sym2(3, {});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) t.add(i + 3, j, k + 3, base.c(i, j, k));
  return make_algebra(n, t.p, Symmetry::Commutative);
}

std::size_t case_k(std::size_t n, const Params& ps, long fallback, long k_min) {
  const long k = ps.integer("k", fallback);
  if (k < k_min) domain_error("k must be >= " + std::to_string(k_min));
  if (static_cast<std::size_t>(k) + 2 > n) throw Error(ErrorCode::DimensionConstraint, "needs n >= k+2");
  return static_cast<std::size_t>(k);
}

// x1x1 = x_{k+1}, x1x2 = x_{k+2}, x2x2 = sum gamma_i x_i (i = k+1..n).
Algebra build_nil_wide(std::size_t n, const Params& ps) {
  const int k = as_int(case_k(n, ps, 2, 2));
  const auto g = exact_list(ps, "gamma", n - static_cast<std::size_t>(k), filled(n - k, 1));
  Table t;
  t.add(1, 1, k + 1, 1);
  t.add(1, 2, k + 2, 1);
  for (int i = k + 1; i <= as_int(n); ++i) t.add(2, 2, i, g[static_cast<std::size_t>(i - k - 1)]);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

// x1x1 = x_{k+1}, x1x2 = alpha2 x_{k+1}, x2x2 = x_{k+2}.
Algebra build_nil_wide_pre(std::size_t n, const Params& ps) {
  const int k = as_int(case_k(n, ps, 2, 2));
  Table t;
  t.add(1, 1, k + 1, 1);
  t.add(1, 2, k + 1, ps.scalar("alpha2", 1));
  t.add(2, 2, k + 2, 1);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

// x1x1 = x_{k+1}, x1x_{k+1} = x_{k+2}.
Algebra build_nil_narrow(std::size_t n, const Params& ps) {
  const int k = as_int(case_k(n, ps, 1, 1));
  Table t;
  t.add(1, 1, k + 1, 1);
  t.add(1, k + 1, k + 2, 1);
  return make_algebra(n, t.p, Symmetry::Commutative);
}

// x1x2 = xn, x1xi = alpha xn, x2xi = beta xn, xixj = gamma xn (3 <= i <= j < n).
Algebra build_nil_square1(std::size_t n, const Params& ps) {
  const Scalar a = ps.scalar("alpha", 1), b = ps.scalar("beta", 1), c = ps.scalar("gamma", 1);
  const int m = as_int(n);
  Table t;
  t.add(1, 2, m, 1);
  for (int i = 3; i < m; ++i) {
    t.add(1, i, m, a);
    t.add(2, i, m, b);
    for (int j = i; j < m; ++j) t.add(i, j, m, c);
  }
  return make_algebra(n, t.p, Symmetry::Commutative);
}

// [x1,x2] = x4, [x1,x3] = x5, [x2,x3] = g4 x4 + g5 x5 + g6 x6.
Algebra build_lie_nil_wide(std::size_t n, const Params& ps) {
  const Scalar g6 = ps.scalar("gamma6", 0);
  if (n < 6 && !g6.is_zero()) domain_error("gamma6 needs n >= 6");
  Table t;
  t.add(1, 2, 4, 1);
  t.add(1, 3, 5, 1);
  t.add(2, 3, 4, ps.scalar("gamma4", 1));
  t.add(2, 3, 5, ps.scalar("gamma5", 1));
  t.add(2, 3, 6, g6);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

std::vector<Scalar> default_codim2_a(std::size_t n) {
  std::vector<Scalar> a;
  for (std::size_t i = 0; i + 2 < n; ++i) a.push_back(Scalar(static_cast<long>(i + 1)));
  return a;
}

// [x1,xj] = a_j xj, [x2,xj] = b_j xj, j >= 3.
Algebra build_codim2(std::size_t n, const Params& ps) {
  const auto a = exact_list(ps, "a", n - 2, default_codim2_a(n));
  const auto b = exact_list(ps, "b", n - 2, filled(n - 2, 1));
  Table t;
  for (int j = 3; j <= as_int(n); ++j) {
    t.add(1, j, j, a[static_cast<std::size_t>(j - 3)]);
    t.add(2, j, j, b[static_cast<std::size_t>(j - 3)]);
  }
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

struct BlockForm {
  std::vector<long> blocks;
  std::vector<Scalar> eigen;
};

BlockForm block_form(std::size_t n, const Params& ps) {
  BlockForm f;
  f.blocks = ps.has("blocks") ? ps.int_list("blocks") : std::vector<long>(n - 1, 1);
  long total = 0;
  for (long b : f.blocks) {
    if (b < 1) domain_error("block sizes must be positive");
    total += b;
  }
  if (static_cast<std::size_t>(total) + 1 != n) domain_error("block sizes must sum to n-1");
  f.eigen = exact_list(ps, "eigen", f.blocks.size(), filled(f.blocks.size(), 1));
  return f;
}

// ad(x1) on N = span{x2..xn} in Jordan form: [x1, x_p] = l x_p + x_{p+1} inside a block.
Algebra build_jordan_form(std::size_t n, const Params& ps) {
  const BlockForm f = block_form(n, ps);
  Table t;
  int p = 2;
  for (std::size_t b = 0; b < f.blocks.size(); ++b)
    for (long m = 0; m < f.blocks[b]; ++m, ++p) {
      t.add(1, p, p, f.eigen[b]);
      if (m + 1 < f.blocks[b]) t.add(1, p, p + 1, 1);
    }
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

std::vector<Params> jordan_form_samples(std::size_t n) {
  std::vector<Params> out;
  std::vector<Scalar> ones = filled(n - 1, 1);
  std::vector<long> b21(n - 2, 1);
  b21[0] = 2;
  std::string b;
  for (std::size_t i = 0; i < b21.size(); ++i) b += (i ? ";" : "") + std::to_string(b21[i]);
  out.push_back(Params{{"blocks", b}, {"eigen", list_text(filled(b21.size(), 2))}});
  std::vector<Scalar> distinct;
  for (std::size_t i = 0; i + 1 < n; ++i) distinct.push_back(Scalar(static_cast<long>(i + 1)));
  out.push_back(Params{{"eigen", list_text(distinct)}});
  out.push_back(Params{{"blocks", std::to_string(n - 1)}, {"eigen", "-1"}});
  return out;
}

// x1 = h/2, x2 = e, x3 = f.
void add_sl2(Table& t) {
  t.add(1, 2, 2, 1);
  t.add(1, 3, 3, -1);
  t.add(2, 3, 1, 2);
}

Algebra build_sl2(std::size_t n, const Params&) {
  Table t;
  add_sl2(t);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

// sl2 acting on its two-dimensional module span{v1, v2} = span{x4, x5}.
Algebra build_sl2_v2(std::size_t n, const Params&) {
  Table t;
  add_sl2(t);
  t.add(1, 4, 4, kHalf);
  t.add(1, 5, 5, -kHalf);
  t.add(2, 5, 4, 1);
  t.add(3, 4, 5, 1);
  return make_algebra(n, t.p, Symmetry::Anticommutative);
}

std::vector<Variety> nu_varieties(const Params& ps) {
  const Scalar a = ps.scalar("alpha", 0);
  if (a == kHalf) return kJordan;
  if (a.is_zero() || a.is_one()) return {Variety::Associative};
  return {};
}

std::vector<CatalogEntry> make_entries() {
  using V = Variety;
  const ParamSpec alpha_any{"alpha", ParamKind::Scalar, "any scalar"};
  std::vector<CatalogEntry> e;
  auto add = [&](CatalogEntry c) {
    if (!c.samples) c.samples = no_samples();
    e.push_back(std::move(c));
  };
  // level one
  add({"p", "p_n", Role::LevelOne, 3, 0, {}, "level-one list", "", fixed(kLie), build_p, {}});
  add({"n3+a", "n_3+a_{n-3}", Role::LevelOne, 3, 0, {}, "level-one list", "",
       fixed({V::Lie, V::Anticommutative, V::Associative}), build_n3, {}});
  add({"lambda2+a", "lambda_2+a_{n-2}", Role::LevelOne, 3, 0, {}, "level-one list", "",
       fixed({V::Jordan, V::Commutative, V::Associative}), build_lambda2, {}});
  add({"nu", "nu_n(alpha)", Role::LevelOne, 3, 0, {alpha_any}, "level-one list",
       "Jordan at alpha = 1/2; coincides with A3 at alpha = 1 and A4 at alpha = 0", nu_varieties, build_nu,
       scalar_sampler("alpha", [](const Scalar&) { return true; })});
  // Jordan
  add({"J1", "J_1", Role::LevelTwo, 3, 0, {}, "Jordan level-two list", "",
       fixed({V::Jordan, V::Commutative, V::Associative}), build_j1, {}});
  add({"J2", "J_2", Role::LevelTwo, 3, 0, {}, "Jordan level-two list", "",
       fixed({V::Jordan, V::Commutative, V::Associative}), build_j2, {}});
  add({"J3", "J_3", Role::LevelTwo, 3, 0, {}, "Jordan level-two list", "",
       fixed({V::Jordan, V::Commutative, V::Associative}), build_j3, {}});
  add({"J", "J(zeta_2..zeta_n)", Role::ProofFamily, 3, 0,
       {{"zeta", ParamKind::List, "n-1 entries in {0, 1/2, 1}, not all equal"}}, "Jordan level-two proof", "",
       fixed(kJordan), build_jzeta, zeta_samples});
  add({"T4", "T_4", Role::LevelTwo, 3, 3, {}, "Jordan level-two proof", "same table as J3 at n = 3",
       fixed(kJordan), build_j3, {}});
  // Lie
  add({"r2+a", "r_2+a_{n-2}", Role::LevelTwo, 3, 0, {}, "Lie level-two lists", "", fixed(kLie), build_r2, {}});
  add({"r3", "r_3(alpha)", Role::LevelTwo, 3, 3, {alpha_any}, "Lie_3 level-two list",
       "|alpha| < 1 or alpha = -1, 1 for canonical forms, not enforced; alpha = 1 gives the table of p_3",
       fixed(kLie), build_r3, scalar_sampler("alpha", [](const Scalar&) { return true; })});
  add({"n4", "n_4", Role::LevelTwo, 4, 4, {}, "Lie_4 level-two list", "", fixed(kLie), build_n4, {}});
  add({"r3_1+a1", "r_3(1)+a_1", Role::LevelTwo, 4, 4, {}, "Lie_4 level-two list", "", fixed(kLie), build_r3_1,
       {}});
  add({"g1", "g_{n,1}(alpha)", Role::LevelTwo, 4, 0, {{"alpha", ParamKind::Scalar, "alpha != 0, 1"}},
       "Lie level-two lists", "", fixed(kLie), build_g1, scalar_sampler("alpha", g1_alpha_ok)});
  add({"g2", "g_{n,2}", Role::LevelTwo, 4, 0, {}, "Lie level-two lists", "", fixed(kLie), build_g2, {}});
  add({"n51+a", "n_{5,1}+a_{n-5}", Role::LevelTwo, 5, 0, {}, "Lie level-two list", "", fixed(kLie), build_n51,
       {}});
  add({"n52+a", "n_{5,2}+a_{n-5}", Role::LevelTwo, 5, 0, {}, "Lie level-two list", "", fixed(kLie), build_n52,
       {}});
  add({"g1fam", "g_{n,1}(alpha_3..alpha_n)", Role::ProofFamily, 3, 0,
       {{"alpha", ParamKind::List, "n-2 entries, not all 1"}}, "Lie level-two proof, solvable case", "",
       fixed(kLie), build_g1fam, g1fam_samples});
  add({"H", "H_{2k+1}+a", Role::ProofFamily, 3, 0, {{"k", ParamKind::Integer, "k >= 1, n >= 2k+1"}},
       "Lie level-two proof, nilpotent case", "basis x_1..x_k, y_1..y_k, z, rest", fixed(kLie),
       build_heisenberg, heisenberg_samples});
  // associative
  add({"A1", "A_1", Role::LevelTwo, 3, 0, {}, "associative level-two list", "", fixed({V::Associative}),
       build_a1, {}});
  add({"A2", "A_2", Role::LevelTwo, 3, 0, {}, "associative level-two list", "same table as J2",
       fixed({V::Associative, V::Jordan, V::Commutative}),
       [](std::size_t n, const Params&) { return build_a_idem(n, true, true); }, {}});
  add({"A3", "A_3", Role::LevelTwo, 3, 0, {}, "associative level-two list", "same table as nu(1)",
       fixed({V::Associative}), [](std::size_t n, const Params&) { return build_a_idem(n, true, false); }, {}});
  add({"A4", "A_4", Role::LevelTwo, 3, 0, {}, "associative level-two list", "same table as nu(0)",
       fixed({V::Associative}), [](std::size_t n, const Params&) { return build_a_idem(n, false, true); }, {}});
  add({"A5", "A_5(alpha)", Role::LevelTwo, 3, 0, {{"alpha", ParamKind::Scalar, "alpha != 1, -1"}},
       "associative level-two list", "", fixed({V::Associative}), build_a5, scalar_sampler("alpha", a5_ok)});
  add({"A6", "A_6", Role::LevelTwo, 3, 0, {}, "associative level-two list", "", fixed({V::Associative}),
       build_a6, {}});
  add({"a", "a_n", Role::Abelian, 1, 0, {}, "zero multiplication", "",
       fixed({V::Associative, V::Lie, V::Jordan, V::Commutative, V::Anticommutative}),
       [](std::size_t n, const Params&) { return abelian(n); }, {}});
  // proof-family sources for the witnesses
  add({"jordan_sym2+a", "Sym_2+a", Role::ProofFamily, 3, 0, {}, "Jordan proof, nonzero semisimple part",
       "basis E11, E22, F", fixed(kJordan), build_sym2, {}});
  add({"jordan_spin", "spin factor", Role::ProofFamily, 2, 0, {}, "Jordan proof, nonzero semisimple part",
       "unit e_1, e_i e_i = e_1", fixed(kJordan), build_spin, {}});
  add({"jordan_sym2_dual+a", "Sym_2 over dual numbers + a", Role::ProofFamily, 6, 0, {},
       "Jordan proof, nonzero semisimple part", "", fixed(kJordan), build_sym2_dual, {}});
  add({"jordan_nil_wide", "nilpotent Jordan, dim J^2/J^3 >= 2", Role::ProofFamily, 4, 0,
       {{"k", ParamKind::Integer, "k >= 2, n >= k+2"}, {"gamma", ParamKind::List, "n-k entries"}},
       "Jordan proof, nilpotent case", "", fixed(kJordan), build_nil_wide, {}});
  add({"jordan_nil_wide_pre", "nilpotent Jordan before the A-change", Role::ProofFamily, 4, 0,
       {{"k", ParamKind::Integer, "k >= 2, n >= k+2"}, {"alpha2", ParamKind::Scalar, "any"}},
       "Jordan proof, nilpotent case", "", fixed(kJordan), build_nil_wide_pre,
       scalar_sampler("alpha2", [](const Scalar&) { return true; })});
  add({"jordan_nil_narrow", "nilpotent Jordan, dim J^2/J^3 = 1", Role::ProofFamily, 3, 0,
       {{"k", ParamKind::Integer, "k >= 1, n >= k+2"}}, "Jordan proof, nilpotent case", "", fixed(kJordan),
       build_nil_narrow, {}});
  add({"jordan_nil_square1", "nilpotent Jordan, dim J^2 = 1", Role::ProofFamily, 3, 0,
       {{"alpha", ParamKind::Scalar, "any"}, {"beta", ParamKind::Scalar, "any"},
        {"gamma", ParamKind::Scalar, "any"}},
       "Jordan proof, nilpotent case", "", fixed(kJordan), build_nil_square1, {}});
  add({"lie_nil_wide", "nilpotent Lie, dim G^2 >= 2", Role::ProofFamily, 5, 0,
       {{"gamma4", ParamKind::Scalar, "any"}, {"gamma5", ParamKind::Scalar, "any"},
        {"gamma6", ParamKind::Scalar, "any; nonzero needs n >= 6"}},
       "Lie proof, nilpotent case", "", fixed(kLie), build_lie_nil_wide, {}});
  add({"lie_codim2", "solvable Lie, abelian nilradical of codim 2", Role::ProofFamily, 3, 0,
       {{"a", ParamKind::List, "n-2 entries"}, {"b", ParamKind::List, "n-2 entries"}},
       "Lie proof, solvable case", "", fixed(kLie), build_codim2, {}});
  add({"lie_jordan_form", "solvable Lie, ad(x_1) in Jordan form", Role::ProofFamily, 2, 0,
       {{"blocks", ParamKind::List, "positive, sum n-1"}, {"eigen", ParamKind::List, "one per block"}},
       "Lie proof, solvable case", "[x_1, x_p] = l x_p + x_{p+1} inside a block", fixed(kLie),
       build_jordan_form, jordan_form_samples});
  add({"sl2+a", "sl_2+a", Role::ProofFamily, 3, 0, {}, "Lie proof, semisimple case", "x_1 = h/2, x_2 = e, x_3 = f",
       fixed(kLie), build_sl2, {}});
  add({"sl2_V2", "sl_2 + V_2", Role::ProofFamily, 5, 5, {}, "Lie proof, semisimple case",
       "sl_2 with its 2-dimensional module", fixed(kLie), build_sl2_v2, {}});
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw Error(ErrorCode::UnknownName, "no catalog entry '" + std::string(name) + "'");
}

Algebra build(std::string_view name, std::size_t n, const Params& params) {
  const CatalogEntry& e = catalog_entry(name);
  if (n < e.n_min || (e.n_max != 0 && n > e.n_max)) {
    std::string range = e.n_max == 0 ? "n >= " + std::to_string(e.n_min)
                        : e.n_min == e.n_max ? "n = " + std::to_string(e.n_min)
                                             : std::to_string(e.n_min) + " <= n <= " + std::to_string(e.n_max);
    throw Error(ErrorCode::DimensionConstraint, e.name + " needs " + range + ", got n = " + std::to_string(n));
  }
  for (const auto& [key, value] : params.items()) {
    (void)value;
    bool known = std::any_of(e.params.begin(), e.params.end(), [&](const ParamSpec& s) { return s.name == key; });
    if (!known) throw Error(ErrorCode::ParameterDomain, e.name + " has no parameter '" + key + "'");
  }
  return e.builder(n, params);
}

std::string catalog_reference(std::string_view name, std::size_t n, const Params& params) {
  const CatalogEntry& e = catalog_entry(name);
  std::string out = "catalog:" + e.name;
  if (!params.items().empty()) {
    std::string args;
    if (e.params.size() == 1 && params.items().size() == 1) {
      args = params.items().begin()->second;
      std::replace(args.begin(), args.end(), ';', ',');
    } else {
      args = params.str();
    }
    out += "(" + args + ")";
  }
  return out + "@" + std::to_string(n);
}

CatalogRef parse_catalog_reference(std::string_view text, std::size_t default_n) {
  std::string_view s = text;
  if (s.starts_with("catalog:")) s.remove_prefix(8);
  CatalogRef ref;
  ref.n = default_n;
  auto at = s.rfind('@');
  if (at != std::string_view::npos && s.find(')', at) == std::string_view::npos) {
    const std::string num(s.substr(at + 1));
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::Parse, "bad dimension in reference '" + std::string(text) + "'");
    ref.n = std::stoul(num);
    s = s.substr(0, at);
  }
  if (ref.n == 0) throw Error(ErrorCode::Parse, "reference '" + std::string(text) + "' needs @n");
  auto open = s.find('(');
  if (open == std::string_view::npos) {
    ref.name = std::string(s);
  } else {
    if (s.back() != ')') throw Error(ErrorCode::Parse, "unbalanced parentheses in '" + std::string(text) + "'");
    ref.name = std::string(s.substr(0, open));
    std::string_view args = s.substr(open + 1, s.size() - open - 2);
    const CatalogEntry& e = catalog_entry(ref.name);
    if (args.find('=') == std::string_view::npos) {
      if (e.params.size() != 1)
        throw Error(ErrorCode::Parse, ref.name + " takes named parameters (key=value)");
      std::string v(args);
      std::replace(v.begin(), v.end(), ',', ';');
      ref.params.set(e.params.front().name, v);
    } else {
      ref.params = Params::parse(args);
    }
  }
  catalog_entry(ref.name);
  return ref;
}

Algebra build(const CatalogRef& ref) { return build(ref.name, ref.n, ref.params); }

// ---------------------------------------------------------------- witnesses

namespace {

const TPoly kT = TPoly::t_power(1);

ScalarMatrix permutation(std::size_t n, const std::vector<int>& order) {
  ScalarMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) m(static_cast<std::size_t>(order[c] - 1), c) = Scalar(1);
  return m;
}

// order with `front` first and the remaining indices ascending
std::vector<int> front_then_rest(std::size_t n, const std::vector<int>& front) {
  std::vector<int> order = front;
  for (int i = 1; i <= as_int(n); ++i)
    if (std::find(front.begin(), front.end(), i) == front.end()) order.push_back(i);
  return order;
}

// New-basis witness: the listed columns replace the first columns of the identity.
Witness new_basis(std::size_t n, const std::vector<std::vector<TPoly>>& cols) {
  Witness w = Witness::identity(n);
  w.kind = WitnessKind::GInverse;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) w.matrix(r, c) = r < cols[c].size() ? cols[c][r] : TPoly();
  return w;
}

struct Ends {
  CatalogRef source;
  CatalogRef target;
};

WitnessInstance finish(std::string id, Witness w, CatalogRef source, CatalogRef target, std::string anchor) {
  WitnessInstance inst;
  inst.id = std::move(id);
  inst.source_algebra = build(source);
  inst.target_algebra = build(target);
  w.source = catalog_reference(source.name, source.n, source.params);
  w.target = catalog_reference(target.name, target.n, target.params);
  w.anchor = std::move(anchor);
  inst.witness = std::move(w);
  inst.source = std::move(source);
  inst.target = std::move(target);
  return inst;
}

CatalogRef ref(std::string name, std::size_t n, Params p = {}) { return {std::move(name), std::move(p), n}; }

std::vector<std::int64_t> exps(std::size_t n, std::int64_t fill) { return std::vector<std::int64_t>(n, fill); }

void need_n(std::string_view id, std::size_t n, std::size_t n_min) {
  if (n < n_min)
    throw Error(ErrorCode::DimensionConstraint,
                std::string(id) + " needs n >= " + std::to_string(n_min) + ", got " + std::to_string(n));
}

WitnessInstance w0(std::size_t n, const Params& ps) {
  CatalogRef src = parse_catalog_reference(ps.text("source", "p"), n);
  src.n = n;
  Witness w = Witness::diagonal(exps(n, -1));
  return finish("W0-abelianize", w, src, ref("a", n), "scaling by t^-1");
}

WitnessInstance w1(std::size_t n, const Params& ps) {
  const std::string variant = ps.text("variant", "sym2");
  auto e = exps(n, -1);
  e[0] = 0;
  Witness w = Witness::diagonal(e);
  std::vector<Scalar> zeta = filled(n - 1, 0);
  CatalogRef src;
  if (variant == "sym2") {
    need_n("W1", n, 3);
    src = ref("jordan_sym2+a", n);
    zeta[1] = kHalf;
  } else if (variant == "spin") {
    src = ref("jordan_spin", n);
    return finish("W1", w, src, ref("J2", n), "unit fixed, Pierce components scaled by t^-1");
  } else if (variant == "sym2_dual") {
    need_n("W1", n, 6);
    src = ref("jordan_sym2_dual+a", n);
    zeta[1] = kHalf;
    zeta[2] = 1;
    zeta[4] = kHalf;
  } else {
    domain_error("W1 variant must be sym2, spin or sym2_dual");
  }
  return finish("W1", w, src, ref("J", n, Params{{"zeta", list_text(zeta)}}),
                "unit fixed, Pierce components scaled by t^-1");
}

WitnessInstance w2(std::size_t n, const Params& ps) {
  std::vector<Scalar> def = filled(n - 1, 0);
  def[0] = 1;
  const auto z = exact_list(ps, "zeta", n - 1, def);
  if (z[0] == z[1]) domain_error("W2 needs zeta_2 != zeta_3");
  Witness w = new_basis(n, {{kT, TPoly(), TPoly()},
                            {TPoly(), TPoly(1), TPoly(1)},
                            {TPoly(), kT * TPoly(z[0]), kT * TPoly(z[1])}});
  return finish("W2", w, ref("J", n, Params{{"zeta", list_text(z)}}), ref("J3", n),
                "g^-1(e_1) = t e_1, g^-1(e_2) = e_2 + e_3, g^-1(e_3) = t(zeta_2 e_2 + zeta_3 e_3)");
}

// Exponents x1, x2: -2; x_{k+2}: -4; others -3. Post change: (x1, x2 - g/2 x1, x_{k+2}, rest).
std::pair<std::vector<std::int64_t>, ScalarMatrix> nil_wide_maps(std::size_t n, int k, const Scalar& g) {
  auto e = exps(n, -3);
  e[0] = e[1] = -2;
  e[static_cast<std::size_t>(k + 1)] = -4;
  ScalarMatrix post = permutation(n, front_then_rest(n, {1, 2, k + 2}));
  post(0, 1) = -g * kHalf;
  return {e, post};
}

WitnessInstance w3(std::size_t n, const Params& ps) {
  need_n("W3", n, 4);
  const int k = as_int(case_k(n, ps, 2, 2));
  if (ps.text("variant", "plain") == "pre") {
    const Scalar a2 = ps.scalar("alpha2", 1);
    const Scalar A = ps.scalar("A", 1);
    if ((A * (Scalar(1) + A * a2)).is_zero()) domain_error("W3 pre-change needs A(1 + A alpha2) != 0");
    ScalarMatrix pre = ScalarMatrix::identity(n);
    const std::size_t k1 = static_cast<std::size_t>(k), k2 = k1 + 1;
    pre(1, 0) = A;
    pre(k1, k1) = Scalar(1) + Scalar(2) * A * a2;
    pre(k2, k1) = A * A;
    pre(k1, k2) = a2;
    pre(k2, k2) = A;
    Params sp{{"k", std::to_string(k)}, {"alpha2", a2.str()}};
    const Algebra changed = rewrite_in_basis(build("jordan_nil_wide_pre", n, sp), pre);
    auto [e, post] = nil_wide_maps(n, k, changed.c(2, 2, k + 2));
    Witness w = compose_witnesses(Witness::constant_basis(pre), Witness::diagonal(e));
    w.post_iso = post;
    return finish("W3", w, ref("jordan_nil_wide_pre", n, sp), ref("J3", n),
                  "A-change x1' = x1 + A x2 followed by the t^-2/t^-3/t^-4 scaling");
  }
  Params sp{{"k", std::to_string(k)}};
  if (ps.has("gamma")) sp.set("gamma", ps.text("gamma", ""));
  const Algebra src = build("jordan_nil_wide", n, sp);
  auto [e, post] = nil_wide_maps(n, k, src.c(2, 2, k + 2));
  Witness w = Witness::diagonal(e);
  w.post_iso = post;
  return finish("W3", w, ref("jordan_nil_wide", n, sp), ref("J3", n),
                "g(x_1) = t^-2 x_1, g(x_2) = t^-2 x_2, g(x_{k+2}) = t^-4 x_{k+2}, others t^-3");
}

WitnessInstance w4(std::size_t n, const Params& ps) {
  const int k = as_int(case_k(n, ps, 1, 1));
  auto e = exps(n, -3);
  e[0] = -2;
  e[static_cast<std::size_t>(k)] = -2;
  e[static_cast<std::size_t>(k + 1)] = -4;
  Witness w = Witness::diagonal(e);
  w.post_iso = permutation(n, front_then_rest(n, {1, k + 1, k + 2}));
  return finish("W4", w, ref("jordan_nil_narrow", n, Params{{"k", std::to_string(k)}}), ref("J3", n),
                "g(x_1) = t^-2 x_1, g(x_{k+1}) = t^-2 x_{k+1}, g(x_{k+2}) = t^-4 x_{k+2}, others t^-3");
}

WitnessInstance w5(std::size_t n, const Params& ps) {
  auto e = exps(n, -1);
  e[0] = e[1] = e[n - 1] = 0;
  Witness w = Witness::diagonal(e);
  w.post_iso = permutation(n, front_then_rest(n, {1, 2, as_int(n)}));
  Params sp{{"alpha", ps.text("alpha", "1")}, {"beta", ps.text("beta", "2")}, {"gamma", ps.text("gamma", "3")}};
  return finish("W5", w, ref("jordan_nil_square1", n, sp), ref("J3", n), "x_1, x_2, x_n fixed, others t^-1");
}

WitnessInstance w6(std::size_t n, const Params& ps) {
  need_n("W6", n, 5);
  const long k = ps.integer("k", 2);
  if (k < 2) domain_error("W6 needs k >= 2");
  Params sp{{"k", std::to_string(k)}};
  const int kk = static_cast<int>(k);
  heisenberg_k(n, sp);
  auto e = exps(n, 0);
  for (int i = 3; i <= kk; ++i) {
    e[static_cast<std::size_t>(i - 1)] = -1;
    e[static_cast<std::size_t>(kk + i - 1)] = -1;
  }
  Witness w = Witness::diagonal(e);
  w.post_iso = permutation(n, front_then_rest(n, {1, 2, kk + 1, kk + 2, 2 * kk + 1}));
  return finish("W6", w, ref("H", n, sp), ref("n51+a", n), "x_1, x_2, y_1, y_2, z fixed, other x_i, y_i by t^-1");
}

WitnessInstance w7(std::size_t n, const Params& ps) {
  need_n("W7", n, 5);
  const Scalar g4 = ps.scalar("gamma4", 1), g5 = ps.scalar("gamma5", 2);
  const Scalar g6 = ps.scalar("gamma6", n >= 6 ? 3 : 0);
  auto e = exps(n, -3);
  e[0] = e[1] = e[2] = -2;
  e[3] = e[4] = -4;
  Witness w = Witness::diagonal(e);
  ScalarMatrix post = ScalarMatrix::identity(n);
  post(0, 1) = -g5;
  post(0, 2) = g4;
  w.post_iso = post;
  Params sp{{"gamma4", g4.str()}, {"gamma5", g5.str()}, {"gamma6", g6.str()}};
  return finish("W7", w, ref("lie_nil_wide", n, sp), ref("n52+a", n),
                "g(x_1..x_3) = t^-2, g(x_4), g(x_5) = t^-4, others t^-3; then x_2 - gamma5 x_1, x_3 + gamma4 x_1");
}

WitnessInstance w8(std::size_t n, const Params& ps) {
  need_n("W8", n, 4);
  const auto a = exact_list(ps, "a", n - 2, default_codim2_a(n));
  const auto b = exact_list(ps, "b", n - 2, filled(n - 2, 1));
  if (!a[0].is_one()) domain_error("W8 needs a_3 = 1");
  auto e = exps(n, 0);
  e[1] = -1;
  Witness w = Witness::diagonal(e);
  std::vector<int> order{1};
  for (int i = 3; i <= as_int(n); ++i) order.push_back(i);
  order.push_back(2);
  w.post_iso = permutation(n, order);
  std::vector<Scalar> target(a.begin() + 1, a.end());
  target.push_back(0);
  return finish("W8", w, ref("lie_codim2", n, Params{{"a", list_text(a)}, {"b", list_text(b)}}),
                ref("g1fam", n, Params{{"alpha", list_text(target)}}),
                "complement x_2 scaled by t^-1, x_1 and nilradical fixed");
}

std::string block_text(const std::vector<long>& blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? ";" : "") + std::to_string(blocks[i]);
  return s;
}

std::vector<long> default_blocks(std::size_t n, long first) {
  std::vector<long> b{first};
  for (std::size_t used = static_cast<std::size_t>(first); used + 1 < n; ++used) b.push_back(1);
  return b;
}

// t^{i-1-k_j} on the i-th vector of block j (i = 2..k_j+1).
std::vector<std::int64_t> block_exponents(std::size_t n, const std::vector<long>& blocks) {
  auto e = exps(n, 0);
  std::size_t p = 1;
  for (long kj : blocks)
    for (long i = 2; i <= kj + 1; ++i, ++p) e[p] = i - 1 - kj;
  return e;
}

WitnessInstance w9(std::size_t n, const Params& ps) {
  need_n("W9", n, 3);
  const auto blocks = ps.has("blocks") ? ps.int_list("blocks") : default_blocks(n, 2);
  if (blocks.empty() || blocks[0] < 2) domain_error("W9 needs a first block of size >= 2");
  const Scalar l = ps.scalar("lambda", 2);
  if (l.is_zero()) domain_error("W9 needs a nonzero eigenvalue");
  auto e = block_exponents(n, blocks);
  e[1] = 2 - blocks[0];
  Witness w = Witness::diagonal(e);
  ScalarMatrix post = ScalarMatrix::identity(n);
  post(0, 0) = l.inverse();
  post(2, 2) = l.inverse();
  w.post_iso = post;
  Params sp{{"blocks", block_text(blocks)}, {"eigen", list_text(filled(blocks.size(), l))}};
  return finish("W9", w, ref("lie_jordan_form", n, sp), ref("g2", n),
                "g(x_2) = t^{2-k_1} x_2, g(x_i) = t^{i-1-k_j} x_i inside block j");
}

WitnessInstance w10(std::size_t n, const Params& ps) {
  need_n("W10", n, 3);
  const auto blocks = ps.has("blocks") ? ps.int_list("blocks") : default_blocks(n, 2);
  std::vector<Scalar> def;
  for (std::size_t j = 0; j < blocks.size(); ++j) def.push_back(Scalar(static_cast<long>(j + 1)));
  const auto eig = exact_list(ps, "eigen", blocks.size(), def);
  if (eig[0].is_zero()) domain_error("W10 needs a nonzero first eigenvalue");
  if (all_equal(eig)) domain_error("W10 needs different eigenvalues");
  Witness w = Witness::diagonal(block_exponents(n, blocks));
  ScalarMatrix post = ScalarMatrix::identity(n);
  post(0, 0) = eig[0].inverse();
  w.post_iso = post;
  std::vector<Scalar> ratios;
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (long i = 0; i < blocks[j]; ++i) ratios.push_back(eig[j] / eig[0]);
  ratios.erase(ratios.begin());
  Params sp{{"blocks", block_text(blocks)}, {"eigen", list_text(eig)}};
  return finish("W10", w, ref("lie_jordan_form", n, sp), ref("g1fam", n, Params{{"alpha", list_text(ratios)}}),
                "g(x_i) = t^{i-1-k_j} x_i inside block j");
}

WitnessInstance w11(std::size_t n, const Params& ps) {
  need_n("W11", n, 5);
  std::vector<Scalar> def;
  for (std::size_t i = 0; i + 2 < n; ++i) def.push_back(Scalar(static_cast<long>(i + 2)));
  const auto a = exact_list(ps, "alpha", n - 2, def);
  if (a[0].is_one()) domain_error("W11 needs alpha_3 != 1");
  if (a[1] == a[2]) domain_error("W11 needs alpha_4 != alpha_5");
  ScalarMatrix pre = ScalarMatrix::identity(n);
  pre(2, 1) = 1;         // e2 = x2 + x3
  pre(2, 2) = a[0];      // e3 = x2 + alpha3 x3
  pre(1, 2) = 1;
  pre(4, 3) = 1;         // e4 = x4 + x5
  pre(3, 4) = a[1];      // e5 = alpha4 x4 + alpha5 x5
  pre(4, 4) = a[2];
  auto e = exps(n, 0);
  e[0] = e[1] = e[3] = -1;
  e[2] = e[4] = -2;
  Witness w = compose_witnesses(Witness::constant_basis(pre), Witness::diagonal(e));
  w.post_iso = permutation(n, front_then_rest(n, {1, 2, 4, 3, 5}));
  return finish("W11", w, ref("g1fam", n, Params{{"alpha", list_text(a)}}), ref("n52+a", n),
                "e-basis change, then g(e_1), g(e_2), g(e_4) = t^-1, g(e_3), g(e_5) = t^-2");
}

WitnessInstance w12(std::size_t n, const Params& ps) {
  const std::string variant = ps.text("variant", "sl2");
  auto e = exps(n, -1);
  e[0] = 0;
  Witness w = Witness::diagonal(e);
  std::vector<Scalar> alpha = filled(n - 2, 0);
  alpha[0] = -1;
  CatalogRef src;
  if (variant == "sl2") {
    src = ref("sl2+a", n);
  } else if (variant == "sl2_V2") {
    if (n != 5) throw Error(ErrorCode::DimensionConstraint, "W12 sl2_V2 needs n = 5");
    src = ref("sl2_V2", n);
    alpha = {Scalar(-1), kHalf, -kHalf};
  } else {
    domain_error("W12 variant must be sl2 or sl2_V2");
  }
  return finish("W12", w, src, ref("g1fam", n, Params{{"alpha", list_text(alpha)}}),
                "x_1 fixed, others t^-1");
}

// Derived witnesses.

WitnessInstance d_idem_to_lambda(std::string id, std::size_t n, std::string src, bool two_sided) {
  // x1 = t e1 + e2, x2 = t^2 e1 (+ 2t e2 when e1 acts on e2)
  std::vector<TPoly> x2{kT * kT, two_sided ? TPoly(2) * kT : TPoly()};
  Witness w = new_basis(n, {{kT, TPoly(1)}, x2});
  return finish(std::move(id), w, ref(std::move(src), n), ref("lambda2+a", n), "x_1 = t e_1 + e_2, x_2 = x_1 x_1");
}

WitnessInstance d3(std::size_t n, const Params& ps) {
  const std::string src = ps.text("source", "J3");
  if (src != "J3" && src != "T4") domain_error("D3 source must be J3 or T4");
  Witness w = new_basis(n, {{TPoly(1), TPoly(1)}, {TPoly(), TPoly(), TPoly(2)}, {TPoly(), kT}});
  return finish("D3", w, ref(src, n), ref("lambda2+a", n), "x_1 = e_1 + e_2, x_2 = 2 e_3, x_3 = t e_2");
}

WitnessInstance d4(std::size_t n, const Params&) {
  Witness w = new_basis(n, {{kT}, {TPoly(), TPoly(1), TPoly(1)}, {TPoly(), kT}});
  return finish("D4", w, ref("r2+a", n), ref("n3+a", n), "x_1 = t e_1, x_2 = e_2 + e_3, x_3 = t e_2");
}

WitnessInstance d5(std::size_t n, const Params& ps) {
  const Scalar a = ps.scalar("alpha", 2);
  Witness w = new_basis(n, {{kT}, {TPoly(), TPoly(1), TPoly(1)}, {TPoly(), kT * TPoly(a), kT}});
  return finish("D5", w, ref("g1", n, Params{{"alpha", a.str()}}), ref("n3+a", n),
                "x_1 = t e_1, x_2 = e_2 + e_3, x_3 = [x_1, x_2]");
}

WitnessInstance d6(std::size_t n, const Params&) {
  Witness w = new_basis(n, {{kT}, {TPoly(), TPoly(1)}, {TPoly(), kT, kT}});
  return finish("D6", w, ref("g2", n), ref("n3+a", n), "x_1 = t e_1, x_2 = e_2, x_3 = t(e_2 + e_3)");
}

WitnessInstance d_nil(std::string id, std::size_t n, std::string src, int scaled, std::vector<int> order) {
  need_n(id, n, 5);
  auto e = exps(n, 0);
  e[static_cast<std::size_t>(scaled - 1)] = -1;
  Witness w = Witness::diagonal(e);
  w.post_iso = permutation(n, front_then_rest(n, order));
  return finish(std::move(id), w, ref(std::move(src), n), ref("n3+a", n),
                "g(e_" + std::to_string(scaled) + ") = t^-1 e_" + std::to_string(scaled));
}

WitnessInstance d10(std::size_t n, const Params& ps) {
  const Scalar a = ps.scalar("alpha", 0);
  Witness w = new_basis(n, {{TPoly(1), TPoly(1)}, {TPoly(), TPoly(), TPoly(Scalar(1) + a)}, {TPoly(), kT}});
  return finish("D10", w, ref("A5", n, Params{{"alpha", a.str()}}), ref("lambda2+a", n),
                "x_1 = e_1 + e_2, x_2 = (1 + alpha) e_3, x_3 = t e_2");
}

WitnessInstance d11(std::size_t n, const Params&) {
  Witness w = new_basis(n, {{TPoly(1)}, {TPoly(), TPoly(), TPoly(1)}, {TPoly(), kT}});
  return finish("D11", w, ref("A6", n), ref("lambda2+a", n), "x_1 = e_1, x_2 = e_3, x_3 = t e_2");
}

WitnessInstance d12(std::size_t n, const Params& ps) {
  const std::string src = ps.text("source", "A2");
  if (src == "A2") return d_idem_to_lambda("D12", n, "A2", true);
  if (src == "A3")
    return finish("D12", Witness::identity(n), ref("A3", n), ref("nu", n, Params{{"alpha", "1"}}),
                  "same table as nu(1)");
  if (src == "A4")
    return finish("D12", Witness::identity(n), ref("A4", n), ref("nu", n, Params{{"alpha", "0"}}),
                  "same table as nu(0)");
  domain_error("D12 source must be A2, A3 or A4");
}

WitnessInstance d13(std::size_t n, const Params&) {
  need_n("D13", n, 4);
  Witness w = Witness::diagonal({0, 0, 0, 1});
  return finish("D13", w, ref("n4", n), ref("n3+a", n), "g(e_4) = t e_4");
}

WitnessInstance d14(std::size_t n, const Params& ps) {
  const std::string src = ps.text("source", "r3");
  if (src == "r3") {
    const Scalar a = ps.scalar("alpha", 0);
    Params sp{{"alpha", a.str()}};
    if (a.is_one()) return finish("D14", Witness::identity(n), ref("r3", n, sp), ref("p", n), "same table as p_3");
    Witness w = new_basis(n, {{kT}, {TPoly(), TPoly(1), TPoly(1)}, {TPoly(), kT, kT * TPoly(a)}});
    return finish("D14", w, ref("r3", n, sp), ref("n3+a", n), "x_1 = t e_1, x_2 = e_2 + e_3, x_3 = [x_1, x_2]");
  }
  if (src == "r3_1+a1") {
    Witness w = new_basis(n, {{kT}, {TPoly(), TPoly(1), TPoly(), TPoly(1)}, {TPoly(), kT}, {TPoly(), TPoly(), TPoly(1)}});
    return finish("D14", w, ref("r3_1+a1", n), ref("n3+a", n), "x_1 = t e_1, x_2 = e_2 + e_4, x_3 = t e_2, x_4 = e_3");
  }
  domain_error("D14 source must be r3 or r3_1+a1");
}

using WitnessBuilder = std::function<WitnessInstance(std::size_t, const Params&)>;

struct WitnessDef {
  WitnessEntry entry;
  WitnessBuilder builder;
};

const std::vector<WitnessDef>& witness_defs() {
  static const std::vector<WitnessDef> defs = [] {
    const ParamSpec variant{"variant", ParamKind::Text, "see source"};
    std::vector<WitnessDef> d;
    auto add = [&](WitnessEntry e, WitnessBuilder b) { d.push_back({std::move(e), std::move(b)}); };
    add({"W0-abelianize", true, "any", "a", 1, {{"source", ParamKind::Text, "catalog reference without @n"}},
         "every algebra degenerates to the abelian one", "t^-1 identity"},
        w0);
    add({"W1", true, "jordan_sym2+a | jordan_spin | jordan_sym2_dual+a", "J | J2", 2, {variant},
         "Jordan proof, nonzero semisimple part", "unit fixed, Pierce components scaled by t^-1"},
        w1);
    add({"W2", true, "J", "J3", 3, {{"zeta", ParamKind::List, "zeta_2 != zeta_3"}},
         "Jordan proof, nonzero semisimple part", "g^-1(e_1) = t e_1, g^-1(e_2) = e_2 + e_3"},
        w2);
    add({"W3", true, "jordan_nil_wide | jordan_nil_wide_pre", "J3", 4,
         {{"k", ParamKind::Integer, "k >= 2"}, {"gamma", ParamKind::List, "n-k entries"}, variant,
          {"alpha2", ParamKind::Scalar, "variant pre"}, {"A", ParamKind::Scalar, "A(1 + A alpha2) != 0"}},
         "Jordan proof, nilpotent case, dim J^2/J^3 >= 2", "g(x_1) = t^-2 x_1, g(x_{k+2}) = t^-4 x_{k+2}"},
        w3);
    add({"W4", true, "jordan_nil_narrow", "J3", 3, {{"k", ParamKind::Integer, "k >= 1"}},
         "Jordan proof, nilpotent case, dim J^2/J^3 = 1", "g(x_{k+1}) = t^-2 x_{k+1}"},
        w4);
    add({"W5", true, "jordan_nil_square1", "J3", 3,
         {{"alpha", ParamKind::Scalar, "any"}, {"beta", ParamKind::Scalar, "any"}, {"gamma", ParamKind::Scalar, "any"}},
         "Jordan proof, nilpotent case, dim J^2 = 1", "x_1, x_2, x_n fixed"},
        w5);
    add({"W6", true, "H", "n51+a", 5, {{"k", ParamKind::Integer, "k >= 2"}}, "Lie proof, nilpotent case, dim G^2 = 1",
         "x_1, x_2, y_1, y_2, z fixed"},
        w6);
    add({"W7", true, "lie_nil_wide", "n52+a", 5,
         {{"gamma4", ParamKind::Scalar, "any"}, {"gamma5", ParamKind::Scalar, "any"},
          {"gamma6", ParamKind::Scalar, "any"}},
         "Lie proof, nilpotent case, dim G^2 >= 2", "g(x_4) = t^-4 x_4, g(x_5) = t^-4 x_5"},
        w7);
    add({"W8", true, "lie_codim2", "g1fam", 4, {{"a", ParamKind::List, "a_3 = 1"}, {"b", ParamKind::List, "any"}},
         "Lie proof, solvable case, nilradical of codim >= 2", "g(x_2) = t^-1 x_2"},
        w8);
    add({"W9", true, "lie_jordan_form", "g2", 3,
         {{"blocks", ParamKind::List, "first block >= 2"}, {"lambda", ParamKind::Scalar, "nonzero"}},
         "Lie proof, solvable case, single eigenvalue", "g(x_2) = t^{2-k_1} x_2"},
        w9);
    add({"W10", true, "lie_jordan_form", "g1fam", 3,
         {{"blocks", ParamKind::List, "sizes"}, {"eigen", ParamKind::List, "not all equal, first nonzero"}},
         "Lie proof, solvable case, several eigenvalues", "g(x_i) = t^{i-1-k_j} x_i"},
        w10);
    add({"W11", true, "g1fam", "n52+a", 5, {{"alpha", ParamKind::List, "alpha_3 != 1, alpha_4 != alpha_5"}},
         "Lie proof, solvable case", "g(x_3) = t^-2 x_3, g(x_5) = t^-2 x_5"},
        w11);
    add({"W12", true, "sl2+a | sl2_V2", "g1fam", 3, {variant}, "Lie proof, semisimple case", "g(x_i) = t^-1 x_i"}, w12);
    add({"D1", false, "J1", "lambda2+a", 3, {}, "derived", "x_1 = t e + e_2, x_2 = t^2 e"},
        [](std::size_t n, const Params&) { return d_idem_to_lambda("D1", n, "J1", false); });
    add({"D2", false, "J2", "lambda2+a", 3, {}, "derived", "x_1 = t e_1 + e_2, x_2 = t^2 e_1 + 2t e_2"},
        [](std::size_t n, const Params&) { return d_idem_to_lambda("D2", n, "J2", true); });
    add({"D3", false, "J3 | T4", "lambda2+a", 3, {{"source", ParamKind::Text, "J3 or T4"}}, "derived",
         "x_3 = t e_2"},
        d3);
    add({"D4", false, "r2+a", "n3+a", 3, {}, "derived", "x_1 = t e_1, x_2 = e_2 + e_3, x_3 = t e_2"}, d4);
    add({"D5", false, "g1", "n3+a", 4, {{"alpha", ParamKind::Scalar, "alpha != 0, 1"}}, "derived",
         "x_1 = t e_1, x_2 = e_2 + e_3"},
        d5);
    add({"D6", false, "g2", "n3+a", 4, {}, "derived", "x_1 = t e_1, x_3 = t(e_2 + e_3)"}, d6);
    add({"D7", false, "n51+a", "n3+a", 5, {}, "derived", "g(e_2) = t^-1 e_2"},
        [](std::size_t n, const Params&) { return d_nil("D7", n, "n51+a", 2, {1, 3, 5}); });
    add({"D8", false, "n52+a", "n3+a", 5, {}, "derived", "g(e_3) = t^-1 e_3"},
        [](std::size_t n, const Params&) { return d_nil("D8", n, "n52+a", 3, {1, 2, 4}); });
    add({"D9", false, "A1", "lambda2+a", 3, {}, "derived", "x_1 = t e_1 + e_2, x_2 = t^2 e_1"},
        [](std::size_t n, const Params&) { return d_idem_to_lambda("D9", n, "A1", false); });
    add({"D10", false, "A5", "lambda2+a", 3, {{"alpha", ParamKind::Scalar, "alpha != 1, -1"}}, "derived",
         "x_1 = e_1 + e_2, x_2 = (1 + alpha) e_3"},
        d10);
    add({"D11", false, "A6", "lambda2+a", 3, {}, "derived", "x_1 = e_1, x_2 = e_3, x_3 = t e_2"}, d11);
    add({"D12", false, "A2 | A3 | A4", "lambda2+a | nu", 3, {{"source", ParamKind::Text, "A2, A3 or A4"}},
         "derived", "A2 as D2; A3, A4 share tables with nu(1), nu(0)"},
        d12);
    add({"D13", false, "n4", "n3+a", 4, {}, "derived", "g(e_4) = t e_4"}, d13);
    add({"D14", false, "r3 | r3_1+a1", "n3+a | p", 3,
         {{"source", ParamKind::Text, "r3 or r3_1+a1"}, {"alpha", ParamKind::Scalar, "any"}}, "derived",
         "x_1 = t e_1, x_2 = e_2 + e_3"},
        d14);
    return d;
  }();
  return defs;
}

}  // namespace

const std::vector<WitnessEntry>& witness_entries() {
  static const std::vector<WitnessEntry> entries = [] {
    std::vector<WitnessEntry> out;
    for (const auto& d : witness_defs()) out.push_back(d.entry);
    return out;
  }();
  return entries;
}

WitnessInstance build_witness(std::string_view id, std::size_t n, const Params& params) {
  for (const auto& d : witness_defs()) {
    if (d.entry.id != id) continue;
    for (const auto& [key, value] : params.items()) {
      (void)value;
      const auto& ps = d.entry.params;
      if (std::none_of(ps.begin(), ps.end(), [&](const ParamSpec& s) { return s.name == key; }))
        throw Error(ErrorCode::ParameterDomain, d.entry.id + " has no parameter '" + key + "'");
    }
    need_n(id, n, d.entry.n_min);
    return d.builder(n, params);
  }
  throw Error(ErrorCode::UnknownWitness, "no witness '" + std::string(id) + "'");
}

}  // namespace degenkit
