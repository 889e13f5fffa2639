// Exact rational convex geometry in the plane and in space: polytopes in
// V-representation, affine flats, hull joins, flat-polytope meets, 2D
// faces, and vertex minimality. No floating point anywhere.
//
// The workhorse is hyperplane sectioning: for a finite generator set G,
// conv(G) n H is generated by the members of G lying on H together with
// the H-crossings of all segments between members of G (every hull edge
// joins two generators, so all section vertices are covered). A flat is
// the intersection of the hyperplanes normal to a basis of its
// orthogonal complement, so flat meets, point containment, and line
// clipping all reduce to repeated sectioning.

#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stlat {

using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

class geometry_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class dimension_mismatch : public geometry_error {
 public:
  using geometry_error::geometry_error;
};

struct QPoint {
  RatVec coords;

  QPoint() = default;
  explicit QPoint(RatVec c) : coords(std::move(c)) {}
  QPoint(Rat x, Rat y) : coords{std::move(x), std::move(y)} {}
  QPoint(Rat x, Rat y, Rat z) : coords{std::move(x), std::move(y), std::move(z)} {}

  std::size_t dim() const { return coords.size(); }
  bool operator==(const QPoint&) const = default;
  bool operator<(const QPoint& o) const { return coords < o.coords; }
};

namespace geo {

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

inline RatVec sub(const QPoint& a, const QPoint& b) {
  RatVec r(a.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coords[i] - b.coords[i];
  return r;
}

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Row-reduces the given vectors (copies); returns the rank.
inline std::size_t rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Solves sum_i x_i basis[i] = target. Returns false when inconsistent.
inline bool solve_coords(const std::vector<RatVec>& basis, const RatVec& target, RatVec* out) {
  const std::size_t d = target.size(), f = basis.size();
  if (f == 0) {
    if (out) out->clear();
    return is_zero(target);
  }
  // Augmented system, unknowns are the coefficients.
  std::vector<RatVec> m(d, RatVec(f + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < f; ++c) m[r][c] = basis[c][r];
    m[r][f] = target[r];
  }
  std::vector<std::size_t> pivot_col(d, f + 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < f && r < d; ++c) {
    std::size_t piv = r;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat fac = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= f; ++j) m[i][j] -= fac * m[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (std::size_t i = r; i < d; ++i)
    if (m[i][f] != 0) return false;
  if (out) {
    out->assign(f, Rat(0));
    for (std::size_t i = 0; i < r; ++i) (*out)[pivot_col[i]] = m[i][f] / m[i][pivot_col[i]];
  }
  return true;
}

// Basis of the orthogonal complement of span(dirs) in R^d.
inline std::vector<RatVec> orthogonal_complement(std::size_t d, std::vector<RatVec> dirs) {
  // Row-reduce dirs, then read the nullspace of the coefficient matrix
  // (normals n with dirs . n = 0).
  std::vector<RatVec> rows = std::move(dirs);
  const std::size_t f = rows.size();
  std::vector<std::size_t> pivot_of_col(d, f + 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < f; ++c) {
    std::size_t piv = r;
    while (piv < f && rows[piv][c] == 0) ++piv;
    if (piv == f) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < f; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat fac = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < d; ++j) rows[i][j] -= fac * rows[r][j];
    }
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<RatVec> normals;
  for (std::size_t c = 0; c < d; ++c) {
    if (pivot_of_col[c] != f + 1) continue;  // pivot column
    RatVec n(d, Rat(0));
    n[c] = 1;
    for (std::size_t cc = 0; cc < d; ++cc) {
      std::size_t pr = pivot_of_col[cc];
      if (pr == f + 1) continue;
      n[cc] = -rows[pr][c] / rows[pr][cc];
    }
    normals.push_back(std::move(n));
  }
  return normals;
}

// conv(points) n {x : n.x = c} as a generator list: on-plane members
// plus all pairwise segment crossings.
inline std::vector<QPoint> section(const std::vector<QPoint>& points, const RatVec& normal,
                                   const Rat& offset) {
  std::vector<Rat> side(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    side[i] = dot(normal, points[i].coords) - offset;

  std::vector<QPoint> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (side[i] == 0) out.push_back(points[i]);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!((side[i] > 0 && side[j] < 0) || (side[i] < 0 && side[j] > 0))) continue;
      Rat t = side[i] / (side[i] - side[j]);
      RatVec c(points[i].dim());
      for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = points[i].coords[k] + t * (points[j].coords[k] - points[i].coords[k]);
      out.emplace_back(std::move(c));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// 2D cross product of (b-a) x (c-a).
inline Rat orient2d(const QPoint& a, const QPoint& b, const QPoint& c) {
  return (b.coords[0] - a.coords[0]) * (c.coords[1] - a.coords[1]) -
         (b.coords[1] - a.coords[1]) * (c.coords[0] - a.coords[0]);
}

// Monotone chain; returns the hull CCW with collinear points dropped.
// Degenerate inputs yield the two extreme points or a single point.
inline std::vector<QPoint> hull_2d_ccw(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<QPoint> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient2d(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && orient2d(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Affine basis of a point set: index of an origin plus independent
// difference vectors spanning the affine hull.
struct AffineBasis {
  std::size_t origin = 0;
  std::vector<RatVec> dirs;
};

inline AffineBasis affine_basis(const std::vector<QPoint>& pts) {
  AffineBasis b;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d = sub(pts[i], pts[b.origin]);
    if (is_zero(d)) continue;
    auto trial = b.dirs;
    trial.push_back(d);
    if (rank(trial) == trial.size()) b.dirs = std::move(trial);
  }
  return b;
}

// Coordinates of points relative to an affine basis (for handing a
// coplanar 3D set to the 2D hull).
inline std::vector<QPoint> to_basis_coords(const std::vector<QPoint>& pts,
                                           const AffineBasis& b) {
  std::vector<QPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    RatVec coeff;
    if (!solve_coords(b.dirs, sub(p, pts[b.origin]), &coeff))
      throw geometry_error("point outside affine basis span");
    out.emplace_back(std::move(coeff));
  }
  return out;
}

// Extreme points of conv(pts), exact, any ambient dimension up to 3.
inline std::vector<QPoint> extreme_points(std::vector<QPoint> pts);

// Shrinks a generator set to the extreme points of its hull; used
// between sections to keep candidate sets small.
inline std::vector<QPoint> reduce_generators(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  AffineBasis b = affine_basis(pts);
  if (b.dirs.empty()) return {pts[0]};
  if (b.dirs.size() == 1) {
    // Collinear: keep parameter extremes.
    std::size_t lo = 0, hi = 0;
    std::vector<QPoint> mapped = to_basis_coords(pts, b);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (mapped[i].coords[0] < mapped[lo].coords[0]) lo = i;
      if (mapped[i].coords[0] > mapped[hi].coords[0]) hi = i;
    }
    std::vector<QPoint> out = {pts[lo]};
    if (hi != lo) out.push_back(pts[hi]);
    std::sort(out.begin(), out.end());
    return out;
  }
  if (b.dirs.size() == 2) {
    std::vector<QPoint> mapped = to_basis_coords(pts, b);
    std::vector<QPoint> hull = hull_2d_ccw(mapped);
    std::vector<QPoint> out;
    for (const auto& h : hull)
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (mapped[i] == h) { out.push_back(pts[i]); break; }
    std::sort(out.begin(), out.end());
    return out;
  }
  return extreme_points(std::move(pts));  // full-dimensional in space
}

inline bool point_in_hull(const QPoint& p, const std::vector<QPoint>& gens) {
  if (gens.empty()) return false;
  std::vector<QPoint> cur = gens;
  // Section by the coordinate hyperplanes through p; the final set is
  // nonempty iff conv(gens) meets {p}.
  for (std::size_t axis = 0; axis < p.dim(); ++axis) {
    RatVec n(p.dim(), Rat(0));
    n[axis] = 1;
    cur = section(cur, n, p.coords[axis]);
    if (cur.empty()) return false;
    cur = reduce_generators(std::move(cur));
  }
  return !cur.empty();
}

inline std::vector<QPoint> extreme_points(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  if (pts[0].dim() == 2) {
    auto hull = hull_2d_ccw(pts);
    std::sort(hull.begin(), hull.end());
    return hull;
  }
  std::vector<QPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<QPoint> rest;
    rest.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    if (!point_in_hull(pts[i], rest)) out.push_back(pts[i]);
  }
  return out;  // already sorted
}

}  // namespace geo

/// Closed halfspace {x : normal . x <= offset}.
struct Halfspace {
  RatVec normal;
  Rat offset;
};

/// Affine flat: point + span(directions); directions must be linearly
/// independent and fewer than the ambient dimension.
class AffineFlat {
 public:
  AffineFlat(QPoint point, std::vector<RatVec> directions)
      : point_(std::move(point)), dirs_(std::move(directions)) {
    const std::size_t d = point_.dim();
    if (d != 2 && d != 3) throw dimension_mismatch("ambient dimension must be 2 or 3");
    for (const auto& v : dirs_)
      if (v.size() != d) throw dimension_mismatch("direction dimension mismatch");
    if (geo::rank(dirs_) != dirs_.size())
      throw geometry_error("flat directions are linearly dependent");
    if (dirs_.size() >= d) throw geometry_error("flat dimension must be below ambient");
  }

  std::size_t ambient_dim() const { return point_.dim(); }
  std::size_t flat_dim() const { return dirs_.size(); }
  const QPoint& point() const { return point_; }
  const std::vector<RatVec>& directions() const { return dirs_; }

  bool contains(const QPoint& p) const {
    if (p.dim() != ambient_dim()) throw dimension_mismatch("point dimension mismatch");
    return geo::solve_coords(dirs_, geo::sub(p, point_), nullptr);
  }

  /// Hyperplanes whose intersection is exactly this flat.
  std::vector<Halfspace> defining_hyperplanes() const {
    std::vector<Halfspace> out;
    for (auto& n : geo::orthogonal_complement(ambient_dim(), dirs_)) {
      Rat off = geo::dot(n, point_.coords);
      out.push_back({std::move(n), std::move(off)});
    }
    return out;
  }

 private:
  QPoint point_;
  std::vector<RatVec> dirs_;
};

/// Convex polytope as the hull of a finite generator list. The empty
/// polytope (no generators) is a first-class value. Vertices (the
/// canonical minimal generator list) are computed at construction.
class QPolytope {
 public:
  explicit QPolytope(std::size_t ambient_dim, std::vector<QPoint> generators = {})
      : dim_(ambient_dim), generators_(std::move(generators)) {
    if (dim_ != 2 && dim_ != 3) throw dimension_mismatch("ambient dimension must be 2 or 3");
    for (const auto& p : generators_)
      if (p.dim() != dim_) throw dimension_mismatch("generator dimension mismatch");
    vertices_ = geo::extreme_points(generators_);
  }

  std::size_t ambient_dim() const { return dim_; }
  bool is_empty() const { return generators_.empty(); }
  const std::vector<QPoint>& generators() const { return generators_; }
  /// Lexicographically sorted; equal hulls have equal vertex lists.
  const std::vector<QPoint>& vertices() const { return vertices_; }

  bool contains(const QPoint& p) const {
    if (p.dim() != dim_) throw dimension_mismatch("point dimension mismatch");
    return geo::point_in_hull(p, vertices_);
  }

  /// Hull equality (mutual containment reduces to equality of the
  /// canonical vertex lists).
  bool hull_equals(const QPolytope& o) const {
    return dim_ == o.dim_ && vertices_ == o.vertices_;
  }

  /// Hull vertices in counterclockwise polygon order (2D only).
  std::vector<QPoint> polygon_ccw() const {
    if (dim_ != 2) throw dimension_mismatch("polygon order is 2D only");
    return geo::hull_2d_ccw(vertices_);
  }

 private:
  std::size_t dim_;
  std::vector<QPoint> generators_;
  std::vector<QPoint> vertices_;
};

/// Lattice join in the lattice of convex sets: conv of the union.
inline QPolytope hull_join(const QPolytope& b, const QPolytope& c) {
  if (b.ambient_dim() != c.ambient_dim())
    throw dimension_mismatch("hull_join: ambient dimensions differ");
  std::vector<QPoint> gens = b.generators();
  gens.insert(gens.end(), c.generators().begin(), c.generators().end());
  return QPolytope(b.ambient_dim(), std::move(gens));
}

/// Lattice meet of an affine flat with a polytope: the V-representation
/// of flat n hull, computed by sectioning with the flat's defining
/// hyperplanes. May be empty.
inline QPolytope meet_with_flat(const AffineFlat& a, const QPolytope& p) {
  if (a.ambient_dim() != p.ambient_dim())
    throw dimension_mismatch("meet_with_flat: ambient dimensions differ");
  std::vector<QPoint> cur = p.vertices();
  for (const auto& h : a.defining_hyperplanes()) {
    cur = geo::section(cur, h.normal, h.offset);
    if (cur.empty()) break;
    cur = geo::reduce_generators(std::move(cur));
  }
  return QPolytope(p.ambient_dim(), std::move(cur));
}

class precondition_c_not_in_a : public geometry_error {
 public:
  using geometry_error::geometry_error;
};

/// Checks A n conv(B, C) = conv(A n B, C) for an affine flat A and
/// polytopes B, C with C inside A (throws precondition_c_not_in_a
/// otherwise). Returns the truth of the identity; a false return is a
/// counterexample to the theorem or to this implementation.
inline bool verify_affine_hull_identity(const AffineFlat& a, const QPolytope& b,
                                        const QPolytope& c) {
  for (const auto& g : c.generators())
    if (!a.contains(g))
      throw precondition_c_not_in_a("generator of C lies outside the flat A");
  QPolytope lhs = meet_with_flat(a, hull_join(b, c));
  QPolytope rhs = hull_join(meet_with_flat(a, b), c);
  return lhs.hull_equals(rhs);
}

namespace geo {

inline Rat parse_rational(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(tok));
    boost::multiprecision::cpp_int num(tok.substr(0, slash));
    boost::multiprecision::cpp_int den(tok.substr(slash + 1));
    if (den == 0) throw geometry_error("zero denominator: " + tok);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw geometry_error("bad rational: " + tok);
  }
}

inline std::string format_rational(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Whitespace-separated rationals; blank lines and '#' comments skipped.
inline std::vector<RatVec> parse_rows(std::istream& in) {
  std::vector<RatVec> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    RatVec row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace geo

/// One point per line, coordinates as `num` or `num/den`. An empty file
/// is the empty polytope, so the ambient dimension must be supplied.
inline QPolytope read_polytope(std::istream& in, std::size_t ambient_dim) {
  std::vector<QPoint> pts;
  for (auto& row : geo::parse_rows(in)) {
    if (row.size() != ambient_dim)
      throw dimension_mismatch("polytope point has wrong dimension");
    pts.emplace_back(std::move(row));
  }
  return QPolytope(ambient_dim, std::move(pts));
}

inline void write_polytope(std::ostream& out, const QPolytope& p) {
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.dim(); ++i)
      out << (i ? " " : "") << geo::format_rational(v.coords[i]);
    out << '\n';
  }
}

/// Flat spec: first row is the base point, each further row a direction
/// vector. A single row describes a point flat.
inline AffineFlat read_flat(std::istream& in) {
  auto rows = geo::parse_rows(in);
  if (rows.empty()) throw geometry_error("flat spec needs at least a base point");
  const std::size_t d = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != d) throw dimension_mismatch("flat spec rows have mixed dimensions");
  QPoint base(std::move(rows[0]));
  rows.erase(rows.begin());
  return AffineFlat(std::move(base), std::move(rows));
}

/// A face together with a witnessing supporting line.
struct Face2D {
  QPolytope poly;
  Halfspace support;  // hull lies in {x : normal.x <= offset}, face on equality
};

/// All supported faces of a 2D polytope: vertex faces then edge faces in
/// counterclockwise order. The improper face P itself is excluded unless
/// `include_self` is set (meaningful for lower-dimensional polytopes,
/// where a supporting line contains P entirely). A polygon with v >= 3
/// vertices has exactly 2v faces.
inline std::vector<Face2D> faces_2d(const QPolytope& p, bool include_self = false) {
  if (p.ambient_dim() != 2) throw dimension_mismatch("faces_2d: 2D only");
  std::vector<Face2D> out;
  if (p.is_empty()) return out;
  std::vector<QPoint> poly = p.polygon_ccw();
  const std::size_t v = poly.size();

  auto edge_halfspace = [](const QPoint& a, const QPoint& b) {
    // Outward normal of CCW edge a -> b.
    RatVec n = {b.coords[1] - a.coords[1], a.coords[0] - b.coords[0]};
    Rat off = geo::dot(n, a.coords);
    return Halfspace{std::move(n), std::move(off)};
  };

  if (v == 1) {
    if (include_self) out.push_back({QPolytope(2, poly), Halfspace{{Rat(1), Rat(0)},
                                                                   poly[0].coords[0]}});
    return out;
  }
  if (v == 2) {
    // Segment: endpoint faces supported by lines orthogonal... any line
    // through the endpoint keeping the other endpoint strictly inside;
    // the segment direction itself works as the normal.
    for (std::size_t i = 0; i < 2; ++i) {
      RatVec n = geo::sub(poly[i], poly[1 - i]);
      Rat off = geo::dot(n, poly[i].coords);
      out.push_back({QPolytope(2, {poly[i]}), Halfspace{std::move(n), std::move(off)}});
    }
    if (include_self) {
      RatVec d = geo::sub(poly[1], poly[0]);
      RatVec n = {d[1], -d[0]};  // line containing the segment
      Rat off = geo::dot(n, poly[0].coords);
      out.push_back({p, Halfspace{std::move(n), std::move(off)}});
    }
    return out;
  }

  for (std::size_t i = 0; i < v; ++i) {
    // Vertex face: sum of the two adjacent edge normals supports
    // strictly at the vertex.
    Halfspace h1 = edge_halfspace(poly[(i + v - 1) % v], poly[i]);
    Halfspace h2 = edge_halfspace(poly[i], poly[(i + 1) % v]);
    RatVec n = {h1.normal[0] + h2.normal[0], h1.normal[1] + h2.normal[1]};
    Rat off = geo::dot(n, poly[i].coords);
    out.push_back({QPolytope(2, {poly[i]}), Halfspace{std::move(n), std::move(off)}});
  }
  for (std::size_t i = 0; i < v; ++i) {
    const QPoint& a = poly[i];
    const QPoint& b = poly[(i + 1) % v];
    out.push_back({QPolytope(2, {a, b}), edge_halfspace(a, b)});
  }
  return out;
}

/// True iff the computed vertex list is minimal (no vertex is in the
/// hull of the others) and spans the same hull as the generators.
inline bool vertex_minimality(const QPolytope& p) {
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::vector<QPoint> rest;
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (j != i) rest.push_back(vs[j]);
    if (geo::point_in_hull(vs[i], rest)) return false;
  }
  for (const auto& g : p.generators())
    if (!geo::point_in_hull(g, vs)) return false;
  return true;
}

}  // namespace stlat
