#include "degenkit/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "degenkit/detail/tensor_transform.hpp"
#include "degenkit/error.hpp"

namespace degenkit {

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::None: return "none";
    case Symmetry::Commutative: return "commutative";
    case Symmetry::Anticommutative: return "anticommutative";
  }
  return "none";
}

std::string_view to_string(Variety v) {
  switch (v) {
    case Variety::Associative: return "associative";
    case Variety::Lie: return "lie";
    case Variety::Jordan: return "jordan";
    case Variety::Commutative: return "commutative";
    case Variety::Anticommutative: return "anticommutative";
  }
  return "associative";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "none") return Symmetry::None;
  if (text == "commutative") return Symmetry::Commutative;
  if (text == "anticommutative") return Symmetry::Anticommutative;
  throw Error(ErrorCode::Parse, "unknown symmetry '" + std::string(text) + "'");
}

Variety parse_variety(std::string_view text) {
  for (Variety v : {Variety::Associative, Variety::Lie, Variety::Jordan, Variety::Commutative,
                    Variety::Anticommutative}) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorCode::Parse, "unknown variety '" + std::string(text) + "'");
}

Algebra::Algebra(std::size_t n) : n_(n), data_(n * n * n) {
  if (n == 0) throw Error(ErrorCode::DimensionConstraint, "algebra dimension must be at least 1");
}

Vec unit_vector(std::size_t n, int index) {
  if (index < 1 || static_cast<std::size_t>(index) > n)
    throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(index));
  Vec v(n);
  v[index - 1] = Scalar(1);
  return v;
}

Vec Algebra::basis_product(int i, int j) const {
  Vec out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = c(i, j, static_cast<int>(k + 1));
  return out;
}

Vec Algebra::multiply(const Vec& u, const Vec& v) const {
  if (u.size() != n_ || v.size() != n_) throw Error(ErrorCode::AmbientMismatch, "vector length differs from dim");
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j].is_zero()) continue;
      Scalar uv = u[i] * v[j];
      const Scalar* row = &data_[(i * n_ + j) * n_];
      for (std::size_t k = 0; k < n_; ++k)
        if (!row[k].is_zero()) out[k] += uv * row[k];
    }
  }
  return out;
}

ScalarMatrix Algebra::left_operator(const Vec& a) const {
  ScalarMatrix m(n_, n_);
  for (std::size_t col = 0; col < n_; ++col) {
    Vec img = multiply(a, unit_vector(n_, static_cast<int>(col + 1)));
    for (std::size_t r = 0; r < n_; ++r) m(r, col) = img[r];
  }
  return m;
}

ScalarMatrix Algebra::right_operator(const Vec& a) const {
  ScalarMatrix m(n_, n_);
  for (std::size_t col = 0; col < n_; ++col) {
    Vec img = multiply(unit_vector(n_, static_cast<int>(col + 1)), a);
    for (std::size_t r = 0; r < n_; ++r) m(r, col) = img[r];
  }
  return m;
}

bool Algebra::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Algebra::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_real(); });
}

bool Algebra::is_commutative() const {
  const int n = static_cast<int>(n_);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (!(c(i, j, k) == c(j, i, k))) return false;
  return true;
}

bool Algebra::is_anticommutative() const {
  const int n = static_cast<int>(n_);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (!(c(i, j, k) == -c(j, i, k))) return false;
  return true;
}

std::vector<Product> Algebra::products(Symmetry listing) const {
  std::vector<Product> out;
  const int n = static_cast<int>(n_);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (listing == Symmetry::Commutative && j < i) continue;
      if (listing == Symmetry::Anticommutative && j <= i) continue;
      for (int k = 1; k <= n; ++k)
        if (!c(i, j, k).is_zero()) out.push_back({i, j, k, c(i, j, k)});
    }
  return out;
}

Algebra make_algebra(std::size_t n, const std::vector<Product>& products, Symmetry symmetry) {
  Algebra a(n);
  std::map<std::tuple<int, int, int>, Scalar> explicit_entries;
  auto conflict = [](const Product& p, const std::string& why) {
    return Error(ErrorCode::SymmetryConflict, why, {p.i, p.j, p.k});
  };
  for (const auto& p : products) {
    for (int idx : {p.i, p.j, p.k}) {
      if (idx < 1 || static_cast<std::size_t>(idx) > n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(idx) + " outside 1.." + std::to_string(n), {p.i, p.j, p.k});
    }
    auto [it, inserted] = explicit_entries.emplace(std::make_tuple(p.i, p.j, p.k), p.coeff);
    if (!inserted && !(it->second == p.coeff)) throw conflict(p, "duplicate entry with a different coefficient");
  }
  for (const auto& [key, coeff] : explicit_entries) {
    const auto [i, j, k] = key;
    const Product p{i, j, k, coeff};
    a.c(i, j, k) = coeff;
    if (symmetry == Symmetry::None || i == j) {
      if (symmetry == Symmetry::Anticommutative && !coeff.is_zero())
        throw conflict(p, "nonzero square in an anticommutative table");
      continue;
    }
    Scalar partner = symmetry == Symmetry::Commutative ? coeff : -coeff;
    auto other = explicit_entries.find(std::make_tuple(j, i, k));
    if (other != explicit_entries.end() && !(other->second == partner))
      throw conflict(p, "explicit entry contradicts the requested symmetry");
    a.c(j, i, k) = partner;
  }
  return a;
}

namespace {

/// Cached basis products plus vector-times-basis helpers for identity checks.
class ProductTable {
 public:
  explicit ProductTable(const Algebra& a) : a_(a), n_(static_cast<int>(a.dim())) {
    table_.reserve(static_cast<std::size_t>(n_ * n_));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) table_.push_back(a.basis_product(i, j));
  }

  const Vec& at(int i, int j) const { return table_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }

  /// u * e_j
  Vec right(const Vec& u, int j) const {
    Vec out(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) {
      const Scalar& ui = u[static_cast<std::size_t>(i - 1)];
      if (ui.is_zero()) continue;
      axpy(out, ui, at(i, j));
    }
    return out;
  }

  /// e_i * u
  Vec left(int i, const Vec& u) const {
    Vec out(static_cast<std::size_t>(n_));
    for (int j = 1; j <= n_; ++j) {
      const Scalar& uj = u[static_cast<std::size_t>(j - 1)];
      if (uj.is_zero()) continue;
      axpy(out, uj, at(i, j));
    }
    return out;
  }

  Vec mul(const Vec& u, const Vec& v) const { return a_.multiply(u, v); }

  static void axpy(Vec& out, const Scalar& f, const Vec& x) {
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) out[k] += f * x[k];
  }

 private:
  const Algebra& a_;
  int n_;
  std::vector<Vec> table_;
};

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec sub(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

Vec add(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

void check_commutative(const ProductTable& t, int n, VarietyReport& rep) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec r = sub(t.at(i, j), t.at(j, i));
      if (!is_zero_vec(r)) rep.violations.push_back({"commutativity", {i, j}, std::move(r)});
    }
}

void check_anticommutative(const ProductTable& t, int n, VarietyReport& rep) {
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Vec r = i == j ? t.at(i, i) : add(t.at(i, j), t.at(j, i));
      if (!is_zero_vec(r)) rep.violations.push_back({"anticommutativity", {i, j}, std::move(r)});
    }
}

void check_associative(const ProductTable& t, int n, VarietyReport& rep) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Vec r = sub(t.right(t.at(i, j), k), t.left(i, t.at(j, k)));
        if (!is_zero_vec(r)) rep.violations.push_back({"associativity", {i, j, k}, std::move(r)});
      }
}

void check_jacobi(const ProductTable& t, int n, VarietyReport& rep) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Vec r = t.left(i, t.at(j, k));
        r = add(std::move(r), t.left(j, t.at(k, i)));
        r = add(std::move(r), t.left(k, t.at(i, j)));
        if (!is_zero_vec(r)) rep.violations.push_back({"jacobi", {i, j, k}, std::move(r)});
      }
}

// Full linearization of (x^2 y) x = x^2 (y x): for basis a <= b <= c and y,
// sum over the pairings {p, q | r} of {a, b, c} of
// ((e_p e_q) e_y) e_r - (e_p e_q)(e_y e_r).
void check_jordan_identity(const ProductTable& t, int n, VarietyReport& rep) {
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int c = b; c <= n; ++c)
        for (int y = 1; y <= n; ++y) {
          Vec r(static_cast<std::size_t>(n));
          const int pairs[3][3] = {{a, b, c}, {a, c, b}, {b, c, a}};
          for (const auto& pr : pairs) {
            const Vec& pq = t.at(pr[0], pr[1]);
            if (is_zero_vec(pq)) continue;
            r = add(std::move(r), t.right(t.right(pq, y), pr[2]));
            r = sub(std::move(r), t.mul(pq, t.at(y, pr[2])));
          }
          if (!is_zero_vec(r)) rep.violations.push_back({"jordan", {a, b, c, y}, std::move(r)});
        }
}

}  // namespace

VarietyReport check_variety(const Algebra& a, Variety variety) {
  VarietyReport rep{variety, true, {}};
  ProductTable t(a);
  const int n = static_cast<int>(a.dim());
  switch (variety) {
    case Variety::Commutative: check_commutative(t, n, rep); break;
    case Variety::Anticommutative: check_anticommutative(t, n, rep); break;
    case Variety::Associative: check_associative(t, n, rep); break;
    case Variety::Lie:
      check_anticommutative(t, n, rep);
      check_jacobi(t, n, rep);
      break;
    case Variety::Jordan:
      check_commutative(t, n, rep);
      check_jordan_identity(t, n, rep);
      break;
  }
  std::stable_sort(rep.violations.begin(), rep.violations.end(),
                   [](const Violation& x, const Violation& y) { return x.indices < y.indices; });
  rep.pass = rep.violations.empty();
  return rep;
}

namespace {

Algebra from_tensor(std::size_t n, const std::vector<Scalar>& tensor) {
  Algebra out(n);
  const int nn = static_cast<int>(n);
  for (int i = 1; i <= nn; ++i)
    for (int j = 1; j <= nn; ++j)
      for (int k = 1; k <= nn; ++k) out.c(i, j, k) = tensor[((i - 1) * n + (j - 1)) * n + (k - 1)];
  return out;
}

void require_square(const Algebra& a, const ScalarMatrix& p) {
  if (p.rows() != a.dim() || p.cols() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "basis change must be " + std::to_string(a.dim()) + "x" +
                                                  std::to_string(a.dim()));
}

}  // namespace

Algebra apply_basis_change(const Algebra& a, const ScalarMatrix& p) {
  require_square(a, p);
  ScalarMatrix q = inverse(p);
  return from_tensor(a.dim(), detail::transform_tensor(a, p, q));
}

Algebra rewrite_in_basis(const Algebra& a, const ScalarMatrix& b) {
  require_square(a, b);
  ScalarMatrix p = inverse(b);
  return from_tensor(a.dim(), detail::transform_tensor(a, p, b));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const int na = static_cast<int>(a.dim());
  Algebra out(a.dim() + b.dim());
  for (const auto& p : a.products()) out.c(p.i, p.j, p.k) = p.coeff;
  for (const auto& p : b.products()) out.c(p.i + na, p.j + na, p.k + na) = p.coeff;
  return out;
}

Algebra abelian(std::size_t n) { return Algebra(n); }

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  if (u.ambient() != a.dim() || v.ambient() != a.dim())
    throw Error(ErrorCode::AmbientMismatch, "subspace ambient differs from algebra dimension");
  std::vector<Vec> spans;
  auto ub = u.basis_vectors();
  auto vb = v.basis_vectors();
  for (const auto& x : ub)
    for (const auto& y : vb) {
      spans.push_back(a.multiply(x, y));
      spans.push_back(a.multiply(y, x));
    }
  return Subspace::span(a.dim(), spans);
}

std::vector<Subspace> power_series(const Algebra& a, SeriesKind kind) {
  const std::size_t n = a.dim();
  const Subspace full = Subspace::full(n);
  std::vector<Subspace> series;
  switch (kind) {
    case SeriesKind::Derived: {
      Subspace cur = subspace_product(a, full, full);
      series.push_back(cur);
      while (!cur.is_zero()) {
        Subspace next = subspace_product(a, cur, cur);
        if (next == cur) break;
        series.push_back(next);
        cur = std::move(next);
      }
      break;
    }
    case SeriesKind::LowerCentral: {
      Subspace cur = full;
      series.push_back(cur);
      while (!cur.is_zero()) {
        Subspace next = subspace_product(a, full, cur);
        if (next == cur) break;
        series.push_back(next);
        cur = std::move(next);
      }
      break;
    }
    case SeriesKind::Plenary: {
      series.push_back(full);
      while (!series.back().is_zero()) {
        const std::size_t k = series.size() + 1;
        Subspace next(n);
        for (std::size_t i = 1; i < k; ++i)
          next = subspace_sum(next, subspace_product(a, series[i - 1], series[k - i - 1]));
        if (next == series.back()) break;
        series.push_back(std::move(next));
      }
      break;
    }
  }
  return series;
}

StructureFlags structure_flags(const Algebra& a) {
  StructureFlags f;
  auto lower = power_series(a, SeriesKind::LowerCentral);
  if (lower.back().is_zero()) {
    f.nilpotent = true;
    f.nilpotency_class = lower.size() - 1;
  }
  auto derived = power_series(a, SeriesKind::Derived);
  if (derived.back().is_zero()) {
    f.solvable = true;
    f.solvability_index = derived.size();
  }
  return f;
}

bool is_idempotent(const Algebra& a, const Vec& v) {
  if (is_zero_vec(v)) return false;
  return a.multiply(v, v) == v;
}

}  // namespace degenkit
