#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pwlab/errors.hpp"

namespace pwlab {

using cd = std::complex<double>;

enum class Boundary : std::uint8_t { periodic = 0, reflecting = 1 };

// Rectangular uniform grid over configuration space, 1 to 3 axes.
//
// Periodic axes exclude the right endpoint (x_{n} wraps to x_0), reflecting
// axes include both endpoints and carry hard-wall semantics. Periodic axes
// must have power-of-two point counts so spectral derivatives apply.
struct GridSpec {
  int dims = 1;
  std::array<int, 3> n{1, 1, 1};
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> hi{1.0, 1.0, 1.0};
  std::array<Boundary, 3> bc{Boundary::periodic, Boundary::periodic,
                             Boundary::periodic};

  static GridSpec line(int n0, double lo0, double hi0,
                       Boundary b = Boundary::periodic);
  static GridSpec plane(int n0, int n1, double lo0, double hi0, double lo1,
                        double hi1, Boundary b0 = Boundary::periodic,
                        Boundary b1 = Boundary::periodic);

  double dx(int axis) const {
    return bc[axis] == Boundary::periodic
               ? (hi[axis] - lo[axis]) / n[axis]
               : (hi[axis] - lo[axis]) / (n[axis] - 1);
  }
  double length(int axis) const { return hi[axis] - lo[axis]; }
  double coord(int axis, int i) const { return lo[axis] + i * dx(axis); }

  std::size_t size() const {
    return static_cast<std::size_t>(n[0]) * n[1] * n[2];
  }
  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dims; ++a) v *= dx(a);
    return v;
  }
  std::size_t index(int i0, int i1 = 0, int i2 = 0) const {
    return (static_cast<std::size_t>(i0) * n[1] + i1) * n[2] + i2;
  }
  bool all_periodic() const {
    for (int a = 0; a < dims; ++a)
      if (bc[a] != Boundary::periodic) return false;
    return true;
  }

  void validate() const;  // throws std::invalid_argument on a malformed spec
  bool operator==(const GridSpec& o) const;
  bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

// Complex amplitudes sampled on a grid. `time_label` is the evolution
// parameter the state was produced at (natural units, hbar = 1).
struct WaveFunction {
  GridSpec grid;
  std::vector<cd> values;
  double time_label = 0.0;
};

struct RealField {
  GridSpec grid;
  std::vector<double> values;
};

// `dims` real components per grid point, stored component-major.
struct VectorField {
  GridSpec grid;
  std::vector<double> values;  // size = grid.dims * grid.size()

  double at(int comp, std::size_t idx) const {
    return values[comp * grid.size() + idx];
  }
  double* component(int comp) { return values.data() + comp * grid.size(); }
  const double* component(int comp) const {
    return values.data() + comp * grid.size();
  }
};

WaveFunction make_wave(const GridSpec& g, std::vector<cd> values,
                       double time_label = 0.0);
WaveFunction zero_wave(const GridSpec& g, double time_label = 0.0);

// Checks all entries finite; throws std::invalid_argument otherwise.
void check_finite(const WaveFunction& psi);

double norm(const WaveFunction& psi);
WaveFunction normalize(const WaveFunction& psi);

RealField density(const WaveFunction& psi);

// Spectral derivative on periodic axes, 4th-order central differences with
// one-sided closures on reflecting axes.
WaveFunction gradient(const WaveFunction& psi, int axis);

// j_k = Im(conj(psi) d_k psi) / m_k
VectorField current(const WaveFunction& psi,
                    const std::array<double, 3>& masses);

// <psi|phi> = sum conj(psi) phi dV; grids must match.
cd overlap(const WaveFunction& psi, const WaveFunction& phi);

// ---- off-grid evaluation ----------------------------------------------

// Four-point Lagrange stencil along one axis: exact on cubics, exact on
// grid nodes. Periodic axes wrap; reflecting axes shift the stencil inward
// and throw OutOfDomain outside [lo, hi].
struct AxisStencil {
  std::array<int, 4> idx;
  std::array<double, 4> w;
};

AxisStencil axis_stencil(const GridSpec& g, int axis, double q);

// Wraps periodic coordinates into [lo, hi); validates reflecting bounds.
double wrap_coord(const GridSpec& g, int axis, double q);

namespace detail {

template <class T>
T interpolate_raw(const GridSpec& g, const T* v,
                  const std::array<AxisStencil, 3>& st) {
  if (g.dims == 1) {
    T acc{};
    for (int a = 0; a < 4; ++a) acc += st[0].w[a] * v[st[0].idx[a]];
    return acc;
  }
  if (g.dims == 2) {
    T acc{};
    for (int a = 0; a < 4; ++a) {
      const std::size_t base = static_cast<std::size_t>(st[0].idx[a]) * g.n[1];
      T row{};
      for (int b = 0; b < 4; ++b) row += st[1].w[b] * v[base + st[1].idx[b]];
      acc += st[0].w[a] * row;
    }
    return acc;
  }
  T acc{};
  for (int a = 0; a < 4; ++a) {
    const std::size_t pa = static_cast<std::size_t>(st[0].idx[a]) * g.n[1];
    T plane{};
    for (int b = 0; b < 4; ++b) {
      const std::size_t base = (pa + st[1].idx[b]) * g.n[2];
      T row{};
      for (int c = 0; c < 4; ++c) row += st[2].w[c] * v[base + st[2].idx[c]];
      plane += st[1].w[b] * row;
    }
    acc += st[0].w[a] * plane;
  }
  return acc;
}

}  // namespace detail

// Builds the per-axis stencils for a point (wrapping/validating coordinates).
std::array<AxisStencil, 3> point_stencils(const GridSpec& g,
                                          const double* q);

double interpolate(const RealField& f, const double* q);
double interpolate(const VectorField& f, int comp, const double* q);
cd interpolate(const WaveFunction& f, const double* q);

}  // namespace pwlab
