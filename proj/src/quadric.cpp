#include "quadrics/quadric.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace quadrics {

Fel LinearForm::evaluate(const Field& f, std::span<const Fel> v) const {
  if (v.size() != c.size()) throw std::invalid_argument("linear form length mismatch");
  Fel acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc = f.add(acc, f.mul(c[i], v[i]));
  return acc;
}

LinearForm LinearForm::normalized(const Field& f) const {
  LinearForm out = *this;
  canonicalize_in_place(f, out.c);
  return out;
}

std::string LinearForm::str(const Field& f) const {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += '+';
    if (c[i] != 1) {
      s += f.str(c[i]);
      s += '*';
    }
    s += 'x';
    s += std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

QuadraticForm::QuadraticForm(const Field& f, int n)
    : field_(&f), n_(n), c_(mono_count(n), 0) {
  if (n < 0) throw std::invalid_argument("ambient dimension must be >= 0");
}

bool QuadraticForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Fel v) { return v == 0; });
}

Fel QuadraticForm::evaluate_vector(std::span<const Fel> v) const {
  if (int(v.size()) != n_ + 1) throw std::invalid_argument("coordinate length mismatch");
  const Field& f = *field_;
  Fel acc = 0;
  int k = 0;
  for (int i = 0; i <= n_; ++i)
    for (int j = i; j <= n_; ++j, ++k) {
      if (c_[k] == 0) continue;
      acc = f.add(acc, f.mul(c_[k], f.mul(v[i], v[j])));
    }
  return acc;
}

Fel QuadraticForm::evaluate_point(const ProjPoint& p) const {
  if (int(p.coords.size()) != n_ + 1)
    throw std::invalid_argument("point dimension does not match the form");
  return evaluate_vector(p.coords);
}

const char* type_name(QuadricType t) {
  switch (t) {
    case QuadricType::Hyperbolic: return "hyperbolic";
    case QuadricType::Elliptic: return "elliptic";
    case QuadricType::Parabolic: return "parabolic";
  }
  return "?";
}

std::optional<QuadricType> type_from_name(std::string_view s) {
  if (s == "hyperbolic") return QuadricType::Hyperbolic;
  if (s == "elliptic") return QuadricType::Elliptic;
  if (s == "parabolic") return QuadricType::Parabolic;
  return std::nullopt;
}

namespace {

// Polar form matrix: B(u, v) = F(u+v) - F(u) - F(v), so B[i][j] = c_ij for
// i != j and B[i][i] = 2 c_ii.
linalg::Mat polar_matrix(const QuadraticForm& f) {
  const Field& k = f.field();
  const int n = f.n();
  linalg::Mat b(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    b.at(i, i) = k.add(f.coeff(i, i), f.coeff(i, i));
    for (int j = i + 1; j <= n; ++j) b.at(i, j) = b.at(j, i) = f.coeff(i, j);
  }
  return b;
}

}  // namespace

std::vector<std::vector<Fel>> vanishing_radical(const QuadraticForm& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero form has no quadric");
  const Field& k = f.field();
  auto ker = linalg::kernel_basis(k, polar_matrix(f));
  if (k.p() != 2 || ker.empty()) return ker;

  // Characteristic 2: on ker B the form is additive and F(s v) = s^2 F(v),
  // so F(sum l_i b_i) = (sum l_i sqrt(F(b_i)))^2 and the radical is the
  // kernel of one linear functional on ker B.
  linalg::Mat row(1, int(ker.size()));
  for (std::size_t i = 0; i < ker.size(); ++i)
    row.at(0, int(i)) = k.sqrt(f.evaluate_vector(ker[i]));  // every element is a square
  auto inner = linalg::kernel_basis(k, row);

  std::vector<std::vector<Fel>> out;
  out.reserve(inner.size());
  for (const auto& lam : inner) {
    std::vector<Fel> v(f.n() + 1, 0);
    for (std::size_t i = 0; i < ker.size(); ++i) {
      if (lam[i] == 0) continue;
      for (int j = 0; j <= f.n(); ++j)
        v[j] = k.add(v[j], k.mul(lam[i], ker[i][j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

int rank(const QuadraticForm& f) {
  return f.n() + 1 - int(vanishing_radical(f).size());
}

long long nondegenerate_count(int r, QuadricType t, long long q) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  if (r % 2 == 1) {
    if (t != QuadricType::Parabolic)
      throw std::invalid_argument("odd rank quadrics are parabolic");
    // (q^{r-1} - 1)/(q - 1)
    return pi(r - 2, q);
  }
  const int m = r / 2;
  long long qm1 = 1, qm = 1;
  for (int i = 0; i < m - 1; ++i) qm1 *= q;
  qm = qm1 * q;
  switch (t) {
    case QuadricType::Hyperbolic: return (qm1 + 1) * (qm - 1) / (q - 1);
    case QuadricType::Elliptic: return (qm1 - 1) * (qm + 1) / (q - 1);
    default: throw std::invalid_argument("even rank quadrics are hyperbolic or elliptic");
  }
}

namespace {

// Standard coordinates spanning a complement of the span of the given
// (independent) vectors: the non-pivot columns of their row echelon form.
std::vector<int> complement_coords(const Field& k, const std::vector<std::vector<Fel>>& basis,
                                   int dim) {
  std::vector<bool> is_pivot(dim, false);
  if (!basis.empty()) {
    linalg::Mat m(int(basis.size()), dim);
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (int c = 0; c < dim; ++c) m.at(int(r), c) = basis[r][c];
    for (int c : linalg::rref(k, m)) is_pivot[c] = true;
  }
  std::vector<int> out;
  for (int c = 0; c < dim; ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

// Restriction of f to the coordinate subspace spanned by coords (a
// complement of the radical): the subform on those variables.
QuadraticForm restrict_to(const QuadraticForm& f, const std::vector<int>& coords) {
  QuadraticForm g(f.field(), int(coords.size()) - 1);
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = a; b < coords.size(); ++b)
      g.set_coeff(int(a), int(b), f.coeff(coords[a], coords[b]));
  return g;
}

long long count_zeros_by_enumeration(const QuadraticForm& f) {
  long long count = 0;
  for_each_proj_point(f.field(), f.n(), [&](std::span<const Fel> v) {
    if (f.evaluate_vector(v) == 0) ++count;
  });
  return count;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

QuadricProfile classify(const QuadraticForm& f) {
  const Field& k = f.field();
  const int n = f.n();
  QuadricProfile prof;
  prof.vertex_basis = vanishing_radical(f);
  prof.rank = n + 1 - int(prof.vertex_basis.size());
  prof.vertex_dim = n - prof.rank;

  auto coords = complement_coords(k, prof.vertex_basis, n + 1);
  QuadraticForm base = restrict_to(f, coords);
  prof.base_count = count_zeros_by_enumeration(base);

  const long long q = k.q();
  if (prof.rank % 2 == 1) {
    if (prof.base_count != nondegenerate_count(prof.rank, QuadricType::Parabolic, q))
      throw std::logic_error("odd-rank base count does not match the parabolic count");
    prof.type = QuadricType::Parabolic;
  } else if (prof.base_count == nondegenerate_count(prof.rank, QuadricType::Hyperbolic, q)) {
    prof.type = QuadricType::Hyperbolic;
  } else if (prof.base_count == nondegenerate_count(prof.rank, QuadricType::Elliptic, q)) {
    prof.type = QuadricType::Elliptic;
  } else {
    throw std::logic_error("even-rank base count matches neither standard count");
  }
  prof.point_count = prof.base_count * ipow(q, n - prof.rank + 1) + pi(n - prof.rank, q);
  return prof;
}

std::array<Fel, 3> irreducible_binary_quadratic(const Field& f) {
  const int q = f.q();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (a == 0 || c == 0) continue;  // reducible: root (0:1) or (1:0)
        bool root = false;
        for (int t = 0; t < q && !root; ++t) {
          Fel v = f.add(f.add(Fel(a), f.mul(Fel(b), Fel(t))),
                        f.mul(Fel(c), f.mul(Fel(t), Fel(t))));
          root = v == 0;
        }
        if (!root) return {Fel(a), Fel(b), Fel(c)};
      }
  throw std::logic_error("no irreducible binary quadratic found");  // unreachable
}

QuadraticForm canonical_form(int rank, QuadricType type, int n, const Field& f) {
  if (rank < 1 || rank > n + 1)
    throw std::invalid_argument("rank must be between 1 and n+1");
  const bool odd = rank % 2 == 1;
  if (odd && type != QuadricType::Parabolic)
    throw std::invalid_argument("odd rank requires parabolic type");
  if (!odd && type == QuadricType::Parabolic)
    throw std::invalid_argument("even rank requires hyperbolic or elliptic type");

  QuadraticForm out(f, n);
  if (odd) {
    out.set_coeff(0, 0, 1);
    for (int i = 1; i + 1 < rank; i += 2) out.set_coeff(i, i + 1, 1);
  } else {
    for (int i = 0; i + 1 < rank - 2; i += 2) out.set_coeff(i, i + 1, 1);
    if (type == QuadricType::Hyperbolic) {
      out.set_coeff(rank - 2, rank - 1, 1);
    } else {
      auto [a, b, c] = irreducible_binary_quadratic(f);
      out.set_coeff(rank - 2, rank - 2, a);
      out.set_coeff(rank - 2, rank - 1, b);
      out.set_coeff(rank - 1, rank - 1, c);
    }
  }
  return out;
}

namespace {

// Rows of M^{-1} for the basis [complement coords | radical basis]: the
// first rows express the complement coordinates as linear forms in x.
std::vector<LinearForm> complement_coordinate_forms(const QuadraticForm& f,
                                                    const std::vector<std::vector<Fel>>& radical,
                                                    const std::vector<int>& coords) {
  const Field& k = f.field();
  const int dim = f.n() + 1;
  linalg::Mat m(dim, dim);
  for (std::size_t c = 0; c < coords.size(); ++c) m.at(coords[c], int(c)) = 1;
  for (std::size_t c = 0; c < radical.size(); ++c)
    for (int r = 0; r < dim; ++r) m.at(r, int(coords.size() + c)) = radical[c][r];
  auto inv = linalg::inverse(k, m);
  if (!inv) throw std::logic_error("basis change matrix is singular");
  std::vector<LinearForm> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out[i].c.resize(dim);
    for (int c = 0; c < dim; ++c) out[i].c[c] = inv->at(int(i), c);
  }
  return out;
}

LinearForm combine(const Field& k, Fel a, const LinearForm& u, Fel b, const LinearForm& v) {
  LinearForm out;
  out.c.resize(u.c.size());
  for (std::size_t i = 0; i < u.c.size(); ++i)
    out.c[i] = k.add(k.mul(a, u.c[i]), k.mul(b, v.c[i]));
  return out;
}

LinearForm scale(const Field& k, Fel s, const LinearForm& u) {
  LinearForm out = u;
  for (Fel& v : out.c) v = k.mul(s, v);
  return out;
}

}  // namespace

std::optional<std::pair<LinearForm, LinearForm>> split_linear_factors(const QuadraticForm& f) {
  const Field& k = f.field();
  auto radical = vanishing_radical(f);
  const int r = f.n() + 1 - int(radical.size());
  if (r > 2) return std::nullopt;

  auto coords = complement_coords(k, radical, f.n() + 1);
  auto yforms = complement_coordinate_forms(f, radical, coords);

  if (r == 1) {
    // f = a * y0^2 with y0 the coordinate form of the complement line.
    Fel a = f.coeff(coords[0], coords[0]);
    return std::make_pair(scale(k, a, yforms[0]), yforms[0]);
  }

  // Binary restriction g(y0, y1); roots in P^1 decide the split.
  Fel a = f.coeff(coords[0], coords[0]);
  Fel b = f.coeff(coords[0], coords[1]);
  Fel c = f.coeff(coords[1], coords[1]);
  std::vector<std::array<Fel, 2>> roots;
  for (int t = 0; t < k.q(); ++t) {  // points (1 : t)
    Fel v = k.add(k.add(a, k.mul(b, Fel(t))), k.mul(c, k.mul(Fel(t), Fel(t))));
    if (v == 0) roots.push_back({Fel(1), Fel(t)});
  }
  if (c == 0) roots.push_back({Fel(0), Fel(1)});
  if (roots.empty()) return std::nullopt;  // irreducible (elliptic)
  if (roots.size() != 2) throw std::logic_error("rank-2 binary form with one root");

  // g = s * L1 * L2 where L_i vanishes at root i.
  auto root_form = [&](const std::array<Fel, 2>& rt) {
    // beta*y0 - alpha*y1
    return combine(k, rt[1], yforms[0], k.neg(rt[0]), yforms[1]);
  };
  LinearForm l1 = root_form(roots[0]);
  LinearForm l2 = root_form(roots[1]);
  // Fix the scalar at a non-root point of P^1.
  for (int t = 0; t <= k.q(); ++t) {
    Fel y0 = t < k.q() ? Fel(1) : Fel(0);
    Fel y1 = t < k.q() ? Fel(t) : Fel(1);
    Fel gv = k.add(k.add(k.mul(a, k.mul(y0, y0)), k.mul(b, k.mul(y0, y1))),
                   k.mul(c, k.mul(y1, y1)));
    if (gv == 0) continue;
    Fel l1v = k.sub(k.mul(roots[0][1], y0), k.mul(roots[0][0], y1));
    Fel l2v = k.sub(k.mul(roots[1][1], y0), k.mul(roots[1][0], y1));
    Fel s = k.div(gv, k.mul(l1v, l2v));
    return std::make_pair(scale(k, s, l1), l2);
  }
  throw std::logic_error("split binary form vanishes on all of P^1");
}

QuadraticForm product(const Field& f, int n, const LinearForm& a, const LinearForm& b) {
  if (int(a.c.size()) != n + 1 || int(b.c.size()) != n + 1)
    throw std::invalid_argument("linear form length mismatch");
  QuadraticForm out(f, n);
  for (int i = 0; i <= n; ++i) {
    out.set_coeff(i, i, f.mul(a.c[i], b.c[i]));
    for (int j = i + 1; j <= n; ++j)
      out.set_coeff(i, j, f.add(f.mul(a.c[i], b.c[j]), f.mul(a.c[j], b.c[i])));
  }
  return out;
}

QuadraticForm substitute(const QuadraticForm& f, const linalg::Mat& m) {
  const Field& k = f.field();
  const int n = f.n();
  if (m.rows != n + 1 || m.cols != n + 1)
    throw std::invalid_argument("substitution matrix shape mismatch");
  QuadraticForm out(k, n);
  // (M x)_i (M x)_j expanded monomial by monomial.
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Fel cij = f.coeff(i, j);
      if (cij == 0) continue;
      for (int a = 0; a <= n; ++a) {
        Fel mia = m.at(i, a);
        if (mia == 0) continue;
        for (int b = 0; b <= n; ++b) {
          Fel v = k.mul(cij, k.mul(mia, m.at(j, b)));
          if (v == 0) continue;
          int lo = std::min(a, b), hi = std::max(a, b);
          out.set_coeff(lo, hi, k.add(out.coeff(lo, hi), v));
        }
      }
    }
  return out;
}

QuadraticForm embed(const QuadraticForm& f, int n) {
  if (f.n() >= n)
    throw std::invalid_argument("embedding requires a strictly larger ambient space");
  QuadraticForm out(f.field(), n);
  for (int i = 0; i <= f.n(); ++i)
    for (int j = i; j <= f.n(); ++j) out.set_coeff(i, j, f.coeff(i, j));
  return out;
}

}  // namespace quadrics
