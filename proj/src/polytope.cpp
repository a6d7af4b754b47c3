#include "mplab/polytope.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mplab/error.hpp"

namespace mplab {

namespace {

void check_dims(std::span<const RatVector> points, std::size_t dim) {
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionMismatch("hull: point of dimension " + std::to_string(p.size()) +
                                                 " in ambient dimension " + std::to_string(dim));
}

std::vector<RatVector> sorted_unique(std::span<const RatVector> points) {
  std::vector<RatVector> v(points.begin(), points.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

// Calls f on every size-k index subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Affine hull of a point set: origin + span(directions), directions in
// reduced echelon form so local coordinates are read off the pivot columns.
struct AffineFrame {
  RatVector origin;
  std::vector<RatVector> directions;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return directions.size(); }

  RatVector local(const RatVector& x) const {
    RatVector y(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) y[i] = x[pivots[i]] - origin[pivots[i]];
    return y;
  }
};

AffineFrame affine_frame(const std::vector<RatVector>& points, std::size_t dim) {
  AffineFrame f;
  f.origin = points.front();
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], f.origin));
  const RowEchelon e = rref(RatMatrix::from_rows(diffs, dim));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) f.directions.push_back(e.reduced.row(i));
  f.pivots = e.pivots;
  return f;
}

void normalize(Facet& f) {
  for (const auto& c : f.normal) {
    if (c == 0) continue;
    const Rational s = c < 0 ? Rational(-c) : c;
    for (auto& x : f.normal) x /= s;
    f.offset /= s;
    return;
  }
}

// Facets of a full-dimensional point set in Q^k (k >= 1), brute force over
// k-subsets: a hyperplane through k affinely independent points supports a
// facet iff every point lies on one side.
std::vector<Facet> facets_full_dim(const std::vector<RatVector>& pts, std::size_t k) {
  std::vector<Facet> out;
  for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVector> diffs;
    for (std::size_t j = 1; j < idx.size(); ++j) diffs.push_back(sub(pts[idx[j]], pts[idx[0]]));
    const auto ker = kernel(RatMatrix::from_rows(diffs, k));
    if (ker.size() != 1) return;
    const RatVector& n = ker.front();
    const Rational c = dot(n, pts[idx[0]]);
    bool all_le = true, all_ge = true;
    for (const auto& p : pts) {
      const Rational v = dot(n, p);
      if (v > c) all_le = false;
      if (v < c) all_ge = false;
    }
    if (!all_le && !all_ge) return;
    Facet f{n, c};
    if (!all_le) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    normalize(f);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Facet& g) {
      return g.normal == f.normal && g.offset == f.offset;
    });
    if (!seen) out.push_back(std::move(f));
  });
  return out;
}

struct LocalHull {
  AffineFrame frame;
  std::vector<RatVector> local_points;
  std::vector<Facet> facets;  // in local coordinates
};

LocalHull local_hull(const std::vector<RatVector>& pts, std::size_t dim) {
  LocalHull h;
  h.frame = affine_frame(pts, dim);
  for (const auto& p : pts) h.local_points.push_back(h.frame.local(p));
  if (h.frame.rank() > 0) h.facets = facets_full_dim(h.local_points, h.frame.rank());
  return h;
}

std::vector<RatVector> monotone_chain(std::vector<RatVector> pts) {
  if (pts.size() <= 2) return pts;
  auto cross = [](const RatVector& o, const RatVector& a, const RatVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<RatVector> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

LinearSubspace::LinearSubspace(std::size_t ambient_dim, std::span<const RatVector> spanning)
    : ambient_dim_(ambient_dim), basis_(span_basis(spanning, ambient_dim)) {}

LinearSubspace LinearSubspace::full(std::size_t ambient_dim) {
  std::vector<RatVector> e;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RatVector v(ambient_dim, Rational(0));
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return LinearSubspace(ambient_dim, e);
}

LinearSubspace LinearSubspace::zero(std::size_t ambient_dim) { return LinearSubspace(ambient_dim, {}); }

bool LinearSubspace::contains(const RatVector& x) const {
  if (x.size() != ambient_dim_) throw DimensionMismatch("LinearSubspace::contains: dimension mismatch");
  std::vector<RatVector> rows = basis_;
  rows.push_back(x);
  return rank(RatMatrix::from_rows(rows, ambient_dim_)) == basis_.size();
}

RationalPolytope RationalPolytope::point(RatVector p) {
  RationalPolytope out(p.size());
  out.vertices_.push_back(std::move(p));
  return out;
}

RationalPolytope RationalPolytope::interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) return empty(1);
  return hull({RatVector{lo}, RatVector{hi}});
}

namespace detail {

std::vector<RatVector> extreme_points_by_facets(std::span<const RatVector> points, std::size_t dim) {
  check_dims(points, dim);
  auto pts = sorted_unique(points);
  if (pts.size() <= 1) return pts;
  const LocalHull h = local_hull(pts, dim);
  const std::size_t k = h.frame.rank();
  if (k == 0) return {pts.front()};

  std::vector<RatVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<RatVector> tight;
    for (const auto& f : h.facets)
      if (dot(f.normal, h.local_points[i]) == f.offset) tight.push_back(f.normal);
    if (rank(RatMatrix::from_rows(tight, k)) == k) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace detail

RationalPolytope hull(std::span<const RatVector> points, std::size_t dim) {
  check_dims(points, dim);
  RationalPolytope out(dim);
  auto pts = sorted_unique(points);
  if (pts.empty()) return out;
  if (dim == 1) {
    out.vertices_.push_back(pts.front());
    if (pts.back() != pts.front()) out.vertices_.push_back(pts.back());
  } else if (dim == 2) {
    out.vertices_ = monotone_chain(std::move(pts));
  } else {
    out.vertices_ = detail::extreme_points_by_facets(pts, dim);
  }
  std::sort(out.vertices_.begin(), out.vertices_.end());
  return out;
}

RationalPolytope hull(std::initializer_list<RatVector> points) {
  if (points.size() == 0) throw std::invalid_argument("hull: ambient dimension unknown for empty list");
  const std::vector<RatVector> v(points);
  return hull(v, v.front().size());
}

HalfspaceForm RationalPolytope::halfspaces() const {
  if (is_empty()) throw std::logic_error("halfspaces: empty polytope has no implicit form");
  const LocalHull h = local_hull(vertices_, dim_);
  HalfspaceForm out;

  // x - origin must lie in span(directions): annihilated by its complement.
  const auto complement = kernel(RatMatrix::from_rows(h.frame.directions, dim_));
  out.equalities = RatMatrix::from_rows(complement, dim_);
  for (const auto& w : complement) out.eq_rhs.push_back(dot(w, h.frame.origin));

  for (const auto& f : h.facets) {
    RatVector n(dim_, Rational(0));
    for (std::size_t i = 0; i < h.frame.pivots.size(); ++i) n[h.frame.pivots[i]] = f.normal[i];
    out.facets.push_back({n, f.offset + dot(n, h.frame.origin)});
  }
  return out;
}

bool contains(const RationalPolytope& p, const RatVector& x) {
  if (x.size() != p.dim()) throw DimensionMismatch("contains: dimension mismatch");
  if (p.is_empty()) return false;
  const HalfspaceForm h = p.halfspaces();
  const RatVector lhs = h.equalities.apply(x);
  if (lhs != h.eq_rhs) return false;
  return std::all_of(h.facets.begin(), h.facets.end(),
                     [&](const Facet& f) { return dot(f.normal, x) <= f.offset; });
}

RationalPolytope intersect_subspace(const RationalPolytope& p, const LinearSubspace& l) {
  if (p.dim() != l.ambient_dim()) throw DimensionMismatch("intersect_subspace: dimension mismatch");
  const std::size_t d = p.dim();
  if (p.is_empty()) return RationalPolytope::empty(d);
  if (l.dim() == 0) {
    RatVector origin(d, Rational(0));
    return contains(p, origin) ? RationalPolytope::point(origin) : RationalPolytope::empty(d);
  }

  // x = basis * u; the constraints of p become constraints on u.
  const RatMatrix basis = RatMatrix::from_columns(l.basis(), d);
  const HalfspaceForm h = p.halfspaces();
  const RatMatrix eq = h.equalities * basis;

  // Solve the equalities: u = u0 + K z.
  const std::size_t m = l.dim();
  RatVector u0(m, Rational(0));
  std::vector<RatVector> free_dirs;
  if (eq.rows() > 0) {
    RatMatrix aug(eq.rows(), m + 1);
    for (std::size_t i = 0; i < eq.rows(); ++i) {
      for (std::size_t j = 0; j < m; ++j) aug(i, j) = eq(i, j);
      aug(i, m) = h.eq_rhs[i];
    }
    const RowEchelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m) return RationalPolytope::empty(d);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) u0[e.pivots[i]] = e.reduced(i, m);
    free_dirs = kernel(eq);
  } else {
    free_dirs = LinearSubspace::full(m).basis();
  }
  const std::size_t q = free_dirs.size();
  const RatMatrix kmat = RatMatrix::from_columns(free_dirs, m);

  // Inequalities a . z <= b in the free coordinates.
  std::vector<Facet> ineq;
  for (const auto& f : h.facets) {
    const RatVector nu = basis.transpose().apply(f.normal);
    Facet g{q ? kmat.transpose().apply(nu) : RatVector{}, f.offset - dot(nu, u0)};
    if (is_zero(g.normal)) {
      if (g.offset < 0) return RationalPolytope::empty(d);
      continue;
    }
    ineq.push_back(std::move(g));
  }

  auto to_ambient = [&](const RatVector& z) {
    RatVector u = u0;
    if (q) {
      const RatVector kz = kmat.apply(z);
      for (std::size_t i = 0; i < m; ++i) u[i] += kz[i];
    }
    return basis.apply(u);
  };
  auto feasible = [&](const RatVector& z) {
    return std::all_of(ineq.begin(), ineq.end(), [&](const Facet& f) { return dot(f.normal, z) <= f.offset; });
  };

  std::vector<RatVector> verts;
  if (q == 0) {
    if (feasible({})) verts.push_back(to_ambient({}));
  } else {
    // The section is bounded, so it is the hull of its basic feasible points.
    for_each_subset(ineq.size(), q, [&](const std::vector<std::size_t>& idx) {
      RatMatrix a(q, q);
      RatVector b(q);
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) a(i, j) = ineq[idx[i]].normal[j];
        b[i] = ineq[idx[i]].offset;
      }
      const auto z = solve_unique(a, b);
      if (z && feasible(*z)) verts.push_back(to_ambient(*z));
    });
  }
  return hull(verts, d);
}

bool equals(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("equals: dimension mismatch");
  return p == q;
}

}  // namespace mplab
