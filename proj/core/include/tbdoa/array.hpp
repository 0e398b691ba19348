#pragma once

#include <optional>
#include <vector>

#include "tbdoa/rng.hpp"
#include "tbdoa/tensor.hpp"
#include "tbdoa/types.hpp"

namespace tbdoa {

// Element coordinates in half-wavelength units, one row per element
// (x, y, z). With that normalization every phase term is -j*pi*(pos . dircos).
struct ArrayGeometry {
  Eigen::Matrix<double, Eigen::Dynamic, 3> positions;

  Index element_count() const { return positions.rows(); }
  static ArrayGeometry ula(Index m);                 // x = 0..m-1
  static ArrayGeometry ura(Index mx, Index my);      // row-major (y slow, x fast)
  void validate() const;
};

enum class Axis { X = 0, Y = 1, Z = 2 };

struct Target {
  double azimuth_rad = 0.0;
  double elevation_rad = 0.0;  // planar case only
  double doppler = 0.0;        // normalized cycles/pulse, |f| <= 0.5
  double rcs_power = 1.0;
};

struct TargetSet {
  std::vector<Target> targets;
  bool planar = false;

  Index count() const { return static_cast<Index>(targets.size()); }
  void validate() const;
};

// Direction cosines (v, u, w): linear arrays use (sin az, 0, 0); planar
// targets use v = sin el * cos az, u = sin el * sin az, w = cos el.
Eigen::Vector3d direction_cosines(const Target& t, bool planar);

// One replication level of the transmit subarray hierarchy: phase-center
// offsets (half-wavelength units) of the S_r copies at this level.
struct SubarrayLevel {
  Eigen::Matrix<double, Eigen::Dynamic, 3> offsets;

  Index count() const { return offsets.rows(); }
  // Set when the level is a uniform progression along a single axis.
  std::optional<std::pair<Axis, int>> uniform_step() const;
};

// Transmit geometry: one reference subarray replicated by the level offsets.
// Levels are ordered 1..R; the overall steering matrix is the Khatri-Rao fold
// with the last level slowest, so the flat subarray index is
// s = (((s_R)*S_{R-1} + s_{R-1})...)*S_1 + s_1.
struct SubarrayLayout {
  ArrayGeometry reference;
  std::vector<SubarrayLevel> levels;

  Index subarray_count() const;
  Eigen::Vector3d subarray_offset(Index s) const;  // summed level offsets
  std::vector<Eigen::Vector3d> transmit_positions() const;  // deduplicated
  void validate() const;

  static SubarrayLayout ula_uniform(Index m0, Index s, int delta_m);
  static SubarrayLayout ula_offsets(Index m0, const std::vector<int>& first_element_indices);  // m_s values
  static SubarrayLayout ura_uniform(Index mx0, Index my0, Index i_count, Index j_count,
                                    int delta_mx, int delta_my);
};

// Unit-modulus phase-rotation generators for one integer shift: entry l is
// exp(-j*pi*step*c_l) with c_l the axis component of target l's direction
// cosines.
struct GeneratorVector {
  CVec generators;
  int step = 1;
};

CVec steering_vector(const ArrayGeometry& g, const Eigen::Vector3d& dircos);

// alpha(theta) for an M-element half-wavelength ULA; element m is
// exp(-j*(m-1)*pi*sin(theta)).
CVec ula_steering(double theta_rad, Index m);

// u(theta,phi) kron v(theta,phi) for an Mx x My half-wavelength URA.
CVec ura_steering(double theta_rad, double phi_rad, Index mx, Index my);

// Steering for arbitrary element coordinates (1-D geometries use sin(theta) only).
CVec receive_steering(const ArrayGeometry& g, const Target& t, bool planar);

CMat steering_matrix(const ArrayGeometry& g, const TargetSet& targets);

// Transmit subarray steering matrix (S x L): Khatri-Rao fold of the per-level
// phase-rotation matrices, last level slowest. A single uniform level yields a
// Vandermonde matrix; non-uniform offsets yield a generalized Vandermonde one.
CMat subarray_steering_matrix(const SubarrayLayout& layout, const TargetSet& targets);

GeneratorVector vandermonde_generators(int step, const TargetSet& targets, Axis axis = Axis::X);

// N receive elements drawn without replacement from the transmit element grid.
ArrayGeometry draw_receive_array(const SubarrayLayout& layout, Index n, Rng& rng);

}  // namespace tbdoa
