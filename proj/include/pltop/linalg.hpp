#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pltop/rational.hpp"

namespace pltop {

// A point (or direction) in R^d with exact rational coordinates.
struct Point {
  std::vector<Rational> x;

  Point() = default;
  explicit Point(std::vector<Rational> coords) : x(std::move(coords)) {}

  int dim() const { return static_cast<int>(x.size()); }
  const Rational& operator[](int i) const { return x[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return x[static_cast<size_t>(i)]; }

  bool operator==(const Point& o) const { return x == o.x; }
  // Lexicographic; the canonical point order used for every deterministic
  // triangulation in the library.
  bool operator<(const Point& o) const {
    return std::lexicographical_compare(x.begin(), x.end(), o.x.begin(), o.x.end());
  }
};

inline Point operator-(const Point& a, const Point& b) {
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
  return r;
}

inline Point operator+(const Point& a, const Point& b) {
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
  return r;
}

inline Point operator*(const Rational& s, const Point& a) {
  Point r = a;
  for (auto& c : r.x) c *= s;
  return r;
}

inline Rational dot(const std::vector<Rational>& a, const Point& p) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * p.x[i];
  return s;
}

inline std::string point_str(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.dim(); ++i) os << (i ? "," : "") << rat_str(p[i]);
  os << ")";
  return os.str();
}

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form. Returns the rank; pivot columns get a
// unit pivot with zeros elsewhere. Deterministic (first nonzero pivot).
inline int rref(Matrix& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline int rank_of(Matrix m) { return rref(m); }

// Basis of { v : M v = 0 }.
inline std::vector<Row> nullspace(Matrix m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  const int rank = rref(m);
  std::vector<int> pivot_col_of_row(static_cast<size_t>(rank), -1);
  std::vector<bool> is_pivot(cols, false);
  for (int i = 0; i < rank; ++i) {
    for (size_t c = 0; c < cols; ++c) {
      if (m[static_cast<size_t>(i)][c] != 0) {
        pivot_col_of_row[static_cast<size_t>(i)] = static_cast<int>(c);
        is_pivot[c] = true;
        break;
      }
    }
  }
  std::vector<Row> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Row v(cols, Rational(0));
    v[free_c] = 1;
    for (int i = 0; i < rank; ++i) {
      const int pc = pivot_col_of_row[static_cast<size_t>(i)];
      v[static_cast<size_t>(pc)] = -m[static_cast<size_t>(i)][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// dim Aff(V) for a nonempty set of points of equal ambient dimension.
inline int affine_dim(const std::vector<Point>& pts) {
  if (pts.empty()) throw input_error("affine_dim of empty point set");
  const int d = pts[0].dim();
  for (const auto& p : pts)
    if (p.dim() != d) throw input_error("affine_dim: mixed ambient dimensions");
  Matrix dirs;
  for (size_t i = 1; i < pts.size(); ++i) dirs.push_back((pts[i] - pts[0]).x);
  if (dirs.empty()) return 0;
  return rref(dirs);
}

inline bool affinely_independent(const std::vector<Point>& pts) {
  return affine_dim(pts) == static_cast<int>(pts.size()) - 1;
}

// An affine flat stored as a canonical RREF system  A x = b  (rows are
// [a_1 .. a_d | b]). Equal flats have equal representations, so flats can be
// deduplicated by comparing rows. The empty "flat" is not representable;
// constructors return nullopt instead.
struct AffineFlat {
  int ambient = 0;
  Matrix eq;  // each row has ambient+1 entries; RREF, no zero rows

  int dim() const { return ambient - static_cast<int>(eq.size()); }

  bool contains(const Point& p) const {
    for (const auto& row : eq) {
      Rational s = 0;
      for (int i = 0; i < ambient; ++i) s += row[static_cast<size_t>(i)] * p[i];
      if (s != row[static_cast<size_t>(ambient)]) return false;
    }
    return true;
  }

  bool operator==(const AffineFlat& o) const { return ambient == o.ambient && eq == o.eq; }
  bool operator<(const AffineFlat& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    return eq < o.eq;
  }
};

// Normalizes an augmented system into a flat; nullopt when inconsistent.
inline std::optional<AffineFlat> flat_from_equations(int ambient, Matrix augmented) {
  rref(augmented);
  Matrix kept;
  for (auto& row : augmented) {
    bool zero_lhs = true;
    for (int i = 0; i < ambient; ++i)
      if (row[static_cast<size_t>(i)] != 0) {
        zero_lhs = false;
        break;
      }
    if (zero_lhs) {
      if (row[static_cast<size_t>(ambient)] != 0) return std::nullopt;  // 0 = b
      continue;
    }
    kept.push_back(std::move(row));
  }
  return AffineFlat{ambient, std::move(kept)};
}

inline AffineFlat whole_space(int ambient) { return AffineFlat{ambient, {}}; }

// Aff(V): functionals vanishing on all directions of V, anchored at V[0].
inline AffineFlat flat_from_points(const std::vector<Point>& pts) {
  if (pts.empty()) throw input_error("flat_from_points: empty set");
  const int d = pts[0].dim();
  Matrix dirs;
  for (size_t i = 1; i < pts.size(); ++i) dirs.push_back((pts[i] - pts[0]).x);
  Matrix augmented;
  if (dirs.empty()) {
    for (int i = 0; i < d; ++i) {  // single point: x_i = p_i
      Row row(static_cast<size_t>(d) + 1, Rational(0));
      row[static_cast<size_t>(i)] = 1;
      row[static_cast<size_t>(d)] = pts[0][i];
      augmented.push_back(std::move(row));
    }
  } else {
    for (const auto& n : nullspace(std::move(dirs))) {
      Row row = n;
      row.push_back(dot(n, pts[0]));
      augmented.push_back(std::move(row));
    }
  }
  auto f = flat_from_equations(d, std::move(augmented));
  return *f;  // always consistent: V[0] satisfies every equation
}

inline std::optional<AffineFlat> intersect_flats(const AffineFlat& a, const AffineFlat& b) {
  Matrix sys = a.eq;
  sys.insert(sys.end(), b.eq.begin(), b.eq.end());
  return flat_from_equations(a.ambient, std::move(sys));
}

// Unique solution of the flat's equations when dim == 0.
inline Point flat_point(const AffineFlat& f) {
  if (f.dim() != 0) throw input_error("flat_point: flat is not a single point");
  Point p(std::vector<Rational>(static_cast<size_t>(f.ambient), Rational(0)));
  for (const auto& row : f.eq) {
    int pc = -1;
    for (int i = 0; i < f.ambient; ++i)
      if (row[static_cast<size_t>(i)] != 0) {
        pc = i;
        break;
      }
    p[pc] = row[static_cast<size_t>(f.ambient)];
  }
  return p;
}

}  // namespace pltop
