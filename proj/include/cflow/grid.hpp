#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cflow {

/// 2D staggered (MAC) grid on a rectangle.
///
/// Scalar quantities live at cell centers, the x-velocity component at
/// vertical faces and the y-velocity component at horizontal faces:
///
///     u(i,j):  i in [0,nx],  j in [0,ny)    -> (nx+1)*ny values
///     v(i,j):  i in [0,nx),  j in [0,ny]    -> nx*(ny+1) values
///     c(i,j):  i in [0,nx),  j in [0,ny)    -> nx*ny values
///
/// Faces with i=0, i=nx (resp. j=0, j=ny) lie on the boundary and carry the
/// no-slip value 0.
struct StaggeredGrid {
  int nx = 0;
  int ny = 0;
  double hx = 0.0;
  double hy = 0.0;
  double origin_x = 0.0;
  double origin_y = 0.0;

  StaggeredGrid() = default;
  StaggeredGrid(int nx_, int ny_, double hx_, double hy_,
                double ox = 0.0, double oy = 0.0)
      : nx(nx_), ny(ny_), hx(hx_), hy(hy_), origin_x(ox), origin_y(oy) {
    if (nx < 2 || ny < 2)
      throw std::invalid_argument("StaggeredGrid: nx and ny must be >= 2");
    if (!(hx > 0.0) || !(hy > 0.0))
      throw std::invalid_argument("StaggeredGrid: cell widths must be positive");
  }

  /// Grid covering [0,lx] x [0,ly] with nx*ny cells.
  static StaggeredGrid unit_box(int nx_, int ny_, double lx = 1.0, double ly = 1.0) {
    if (nx_ < 2 || ny_ < 2)
      throw std::invalid_argument("StaggeredGrid: nx and ny must be >= 2");
    return StaggeredGrid(nx_, ny_, lx / nx_, ly / ny_);
  }

  int cell_count() const { return nx * ny; }
  int u_count() const { return (nx + 1) * ny; }
  int v_count() const { return nx * (ny + 1); }
  double cell_area() const { return hx * hy; }
  double length_x() const { return nx * hx; }
  double length_y() const { return ny * hy; }

  int cidx(int i, int j) const { return j * nx + i; }
  int uidx(int i, int j) const { return j * (nx + 1) + i; }
  int vidx(int i, int j) const { return j * nx + i; }

  double xc(int i) const { return origin_x + (i + 0.5) * hx; }
  double yc(int j) const { return origin_y + (j + 0.5) * hy; }
  double xu(int i) const { return origin_x + i * hx; }
  double yv(int j) const { return origin_y + j * hy; }

  bool same_as(const StaggeredGrid& o) const {
    return nx == o.nx && ny == o.ny && hx == o.hx && hy == o.hy &&
           origin_x == o.origin_x && origin_y == o.origin_y;
  }
};

inline void require_same_grid(const StaggeredGrid& a, const StaggeredGrid& b,
                              const char* where) {
  if (!a.same_as(b))
    throw std::invalid_argument(std::string(where) + ": fields live on different grids");
}

/// One real value per cell center.
struct ScalarField {
  StaggeredGrid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const StaggeredGrid& g, double fill = 0.0)
      : grid(g), values(static_cast<std::size_t>(g.cell_count()), fill) {}

  double& operator()(int i, int j) { return values[grid.cidx(i, j)]; }
  double operator()(int i, int j) const { return values[grid.cidx(i, j)]; }

  bool all_finite() const {
    for (double x : values)
      if (!std::isfinite(x)) return false;
    return true;
  }
};

/// Face-centered velocity samples (MAC layout).
struct VectorField {
  StaggeredGrid grid;
  std::vector<double> u;  // vertical faces, x-component
  std::vector<double> v;  // horizontal faces, y-component

  VectorField() = default;
  explicit VectorField(const StaggeredGrid& g, double fu = 0.0, double fv = 0.0)
      : grid(g),
        u(static_cast<std::size_t>(g.u_count()), fu),
        v(static_cast<std::size_t>(g.v_count()), fv) {}

  double& at_u(int i, int j) { return u[grid.uidx(i, j)]; }
  double at_u(int i, int j) const { return u[grid.uidx(i, j)]; }
  double& at_v(int i, int j) { return v[grid.vidx(i, j)]; }
  double at_v(int i, int j) const { return v[grid.vidx(i, j)]; }

  /// Zero the normal components on the boundary (membership in the
  /// no-slip velocity space).
  void apply_noslip() {
    for (int j = 0; j < grid.ny; ++j) {
      at_u(0, j) = 0.0;
      at_u(grid.nx, j) = 0.0;
    }
    for (int i = 0; i < grid.nx; ++i) {
      at_v(i, 0) = 0.0;
      at_v(i, grid.ny) = 0.0;
    }
  }

  bool noslip_satisfied(double tol = 0.0) const {
    for (int j = 0; j < grid.ny; ++j)
      if (std::abs(at_u(0, j)) > tol || std::abs(at_u(grid.nx, j)) > tol) return false;
    for (int i = 0; i < grid.nx; ++i)
      if (std::abs(at_v(i, 0)) > tol || std::abs(at_v(i, grid.ny)) > tol) return false;
    return true;
  }

  bool all_finite() const {
    for (double x : u)
      if (!std::isfinite(x)) return false;
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }
};

/// Extended-nonnegative-real obstacle samples at cell centers; +infinity is
/// an admissible value ordered above every finite sample.
struct ObstacleField {
  StaggeredGrid grid;
  std::vector<double> values;

  static constexpr double unbounded = std::numeric_limits<double>::infinity();

  ObstacleField() = default;
  explicit ObstacleField(const StaggeredGrid& g, double fill = unbounded)
      : grid(g), values(static_cast<std::size_t>(g.cell_count()), fill) {
    check_nonnegative(fill);
  }

  double& operator()(int i, int j) { return values[grid.cidx(i, j)]; }
  double operator()(int i, int j) const { return values[grid.cidx(i, j)]; }

  bool nonnegative() const {
    for (double x : values)
      if (std::isnan(x) || x < 0.0) return false;
    return true;
  }

  bool positive_everywhere() const {
    for (double x : values)
      if (!(x > 0.0)) return false;
    return true;
  }

  double min_value() const {
    double m = unbounded;
    for (double x : values) m = std::min(m, x);
    return m;
  }

 private:
  static void check_nonnegative(double x) {
    if (std::isnan(x) || x < 0.0)
      throw std::invalid_argument("ObstacleField: values must be >= 0");
  }
};

// ---- elementwise helpers used throughout the solvers ----

inline void axpy(double a, const ScalarField& x, ScalarField& y) {
  require_same_grid(x.grid, y.grid, "axpy");
  for (std::size_t k = 0; k < y.values.size(); ++k) y.values[k] += a * x.values[k];
}

inline void axpy(double a, const VectorField& x, VectorField& y) {
  require_same_grid(x.grid, y.grid, "axpy");
  for (std::size_t k = 0; k < y.u.size(); ++k) y.u[k] += a * x.u[k];
  for (std::size_t k = 0; k < y.v.size(); ++k) y.v[k] += a * x.v[k];
}

inline void scale(double a, ScalarField& x) {
  for (double& t : x.values) t *= a;
}

inline void scale(double a, VectorField& x) {
  for (double& t : x.u) t *= a;
  for (double& t : x.v) t *= a;
}

inline VectorField lincomb(double a, const VectorField& x, double b, const VectorField& y) {
  require_same_grid(x.grid, y.grid, "lincomb");
  VectorField r(x.grid);
  for (std::size_t k = 0; k < r.u.size(); ++k) r.u[k] = a * x.u[k] + b * y.u[k];
  for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] = a * x.v[k] + b * y.v[k];
  return r;
}

}  // namespace cflow
