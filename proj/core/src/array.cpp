#include "tbdoa/array.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tbdoa {

ArrayGeometry ArrayGeometry::ula(Index m) {
  ArrayGeometry g;
  g.positions.setZero(m, 3);
  for (Index i = 0; i < m; ++i) g.positions(i, 0) = static_cast<double>(i);
  return g;
}

ArrayGeometry ArrayGeometry::ura(Index mx, Index my) {
  ArrayGeometry g;
  g.positions.setZero(mx * my, 3);
  for (Index j = 0; j < my; ++j)
    for (Index i = 0; i < mx; ++i) {
      g.positions(j * mx + i, 0) = static_cast<double>(i);
      g.positions(j * mx + i, 1) = static_cast<double>(j);
    }
  return g;
}

void ArrayGeometry::validate() const {
  if (positions.rows() < 1) throw std::invalid_argument("geometry must contain at least one element");
  if (!positions.allFinite()) throw std::invalid_argument("geometry positions must be finite");
}

void TargetSet::validate() const {
  if (targets.empty()) throw std::invalid_argument("target set must contain at least one target");
  for (const Target& t : targets) {
    if (std::abs(t.doppler) > 0.5 + 1e-12)
      throw std::invalid_argument("normalized Doppler must satisfy |f| <= 0.5");
    if (t.rcs_power < 0.0) throw std::invalid_argument("RCS power must be nonnegative");
  }
}

Eigen::Vector3d direction_cosines(const Target& t, bool planar) {
  if (!planar) return {std::sin(t.azimuth_rad), 0.0, 0.0};
  const double se = std::sin(t.elevation_rad);
  return {se * std::cos(t.azimuth_rad), se * std::sin(t.azimuth_rad), std::cos(t.elevation_rad)};
}

std::optional<std::pair<Axis, int>> SubarrayLevel::uniform_step() const {
  const Index s = count();
  if (s < 1) return std::nullopt;
  int axis = -1;
  for (int a = 0; a < 3; ++a) {
    if (offsets.col(a).cwiseAbs().maxCoeff() > 1e-12) {
      if (axis >= 0) return std::nullopt;  // offsets span more than one axis
      axis = a;
    }
  }
  if (axis < 0) axis = 0;  // single subarray at the origin
  if (s == 1) return std::make_pair(static_cast<Axis>(axis), 1);
  const double step = offsets(1, axis) - offsets(0, axis);
  const double rounded = std::round(step);
  if (std::abs(step - rounded) > 1e-9 || rounded < 1.0) return std::nullopt;
  for (Index i = 0; i < s; ++i) {
    if (std::abs(offsets(i, axis) - static_cast<double>(i) * step) > 1e-9) return std::nullopt;
  }
  return std::make_pair(static_cast<Axis>(axis), static_cast<int>(rounded));
}

Index SubarrayLayout::subarray_count() const {
  Index s = 1;
  for (const SubarrayLevel& lvl : levels) s *= lvl.count();
  return s;
}

Eigen::Vector3d SubarrayLayout::subarray_offset(Index s) const {
  // Flat index decomposes with level 1 fastest.
  Eigen::Vector3d off = Eigen::Vector3d::Zero();
  Index rem = s;
  for (const SubarrayLevel& lvl : levels) {
    const Index i = rem % lvl.count();
    rem /= lvl.count();
    off += lvl.offsets.row(i).transpose();
  }
  return off;
}

std::vector<Eigen::Vector3d> SubarrayLayout::transmit_positions() const {
  std::vector<Eigen::Vector3d> all;
  const Index s_total = subarray_count();
  all.reserve(static_cast<size_t>(s_total * reference.element_count()));
  for (Index s = 0; s < s_total; ++s) {
    const Eigen::Vector3d off = subarray_offset(s);
    for (Index m = 0; m < reference.element_count(); ++m)
      all.push_back(off + reference.positions.row(m).transpose());
  }
  std::sort(all.begin(), all.end(), [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
  });
  auto same_position = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return (a - b).cwiseAbs().maxCoeff() < 1e-9;
  };
  all.erase(std::unique(all.begin(), all.end(), same_position), all.end());
  return all;
}

void SubarrayLayout::validate() const {
  reference.validate();
  for (const SubarrayLevel& lvl : levels) {
    if (lvl.count() < 1) throw std::invalid_argument("subarray level must contain at least one phase center");
    if (!lvl.offsets.allFinite()) throw std::invalid_argument("level offsets must be finite");
  }
}

SubarrayLayout SubarrayLayout::ula_uniform(Index m0, Index s, int delta_m) {
  if (delta_m < 1) throw std::invalid_argument("subarray step must be >= 1");
  SubarrayLayout layout;
  layout.reference = ArrayGeometry::ula(m0);
  SubarrayLevel lvl;
  lvl.offsets.setZero(s, 3);
  for (Index i = 0; i < s; ++i) lvl.offsets(i, 0) = static_cast<double>(i * delta_m);
  layout.levels.push_back(std::move(lvl));
  return layout;
}

SubarrayLayout SubarrayLayout::ula_offsets(Index m0, const std::vector<int>& first_element_indices) {
  if (first_element_indices.empty()) throw std::invalid_argument("need at least one subarray");
  SubarrayLayout layout;
  layout.reference = ArrayGeometry::ula(m0);
  SubarrayLevel lvl;
  lvl.offsets.setZero(static_cast<Index>(first_element_indices.size()), 3);
  for (size_t i = 0; i < first_element_indices.size(); ++i) {
    if (i > 0 && first_element_indices[i] <= first_element_indices[i - 1])
      throw std::invalid_argument("subarray first-element indices must increase strictly");
    lvl.offsets(static_cast<Index>(i), 0) = static_cast<double>(first_element_indices[i] - 1);
  }
  layout.levels.push_back(std::move(lvl));
  return layout;
}

SubarrayLayout SubarrayLayout::ura_uniform(Index mx0, Index my0, Index i_count, Index j_count,
                                           int delta_mx, int delta_my) {
  SubarrayLayout layout;
  layout.reference = ArrayGeometry::ura(mx0, my0);
  SubarrayLevel x_level;  // level 1: fastest index
  x_level.offsets.setZero(i_count, 3);
  for (Index i = 0; i < i_count; ++i) x_level.offsets(i, 0) = static_cast<double>(i * delta_mx);
  SubarrayLevel y_level;  // level 2
  y_level.offsets.setZero(j_count, 3);
  for (Index j = 0; j < j_count; ++j) y_level.offsets(j, 1) = static_cast<double>(j * delta_my);
  layout.levels.push_back(std::move(x_level));
  layout.levels.push_back(std::move(y_level));
  return layout;
}

CVec steering_vector(const ArrayGeometry& g, const Eigen::Vector3d& dircos) {
  CVec v(g.element_count());
  for (Index n = 0; n < g.element_count(); ++n)
    v[n] = std::exp(-kJ * (kPi * g.positions.row(n).dot(dircos)));
  return v;
}

CVec ula_steering(double theta_rad, Index m) {
  if (m < 1) throw std::invalid_argument("ula_steering: need at least one element");
  Target t;
  t.azimuth_rad = theta_rad;
  return steering_vector(ArrayGeometry::ula(m), direction_cosines(t, false));
}

CVec ura_steering(double theta_rad, double phi_rad, Index mx, Index my) {
  if (mx < 1 || my < 1) throw std::invalid_argument("ura_steering: need at least one element per axis");
  Target t;
  t.azimuth_rad = theta_rad;
  t.elevation_rad = phi_rad;
  return steering_vector(ArrayGeometry::ura(mx, my), direction_cosines(t, true));
}

CVec receive_steering(const ArrayGeometry& g, const Target& t, bool planar) {
  g.validate();
  return steering_vector(g, direction_cosines(t, planar));
}

CMat steering_matrix(const ArrayGeometry& g, const TargetSet& targets) {
  CMat m(g.element_count(), targets.count());
  for (Index l = 0; l < targets.count(); ++l)
    m.col(l) = steering_vector(g, direction_cosines(targets.targets[static_cast<size_t>(l)], targets.planar));
  return m;
}

CMat subarray_steering_matrix(const SubarrayLayout& layout, const TargetSet& targets) {
  const Index l_count = targets.count();
  std::vector<CMat> per_level;
  per_level.reserve(layout.levels.size());
  for (const SubarrayLevel& lvl : layout.levels) {
    CMat g(lvl.count(), l_count);
    for (Index l = 0; l < l_count; ++l) {
      const Eigen::Vector3d d =
          direction_cosines(targets.targets[static_cast<size_t>(l)], targets.planar);
      for (Index s = 0; s < lvl.count(); ++s)
        g(s, l) = std::exp(-kJ * (kPi * lvl.offsets.row(s).dot(d)));
    }
    per_level.push_back(std::move(g));
  }
  if (per_level.empty()) return CMat::Ones(1, l_count);
  // Fold with the last level slowest: G = G^(R) (.) ... (.) G^(1).
  CMat g = per_level.back();
  for (size_t r = per_level.size() - 1; r-- > 0;) g = khatri_rao(g, per_level[r]);
  return g;
}

GeneratorVector vandermonde_generators(int step, const TargetSet& targets, Axis axis) {
  if (step < 1) throw std::invalid_argument("vandermonde_generators: step must be >= 1");
  GeneratorVector out;
  out.step = step;
  out.generators.resize(targets.count());
  for (Index l = 0; l < targets.count(); ++l) {
    const Eigen::Vector3d d =
        direction_cosines(targets.targets[static_cast<size_t>(l)], targets.planar);
    out.generators[l] = std::exp(-kJ * (kPi * static_cast<double>(step) * d[static_cast<int>(axis)]));
  }
  for (Index a = 0; a < out.generators.size(); ++a)
    for (Index b = a + 1; b < out.generators.size(); ++b) {
      const double sep = std::abs(std::arg(out.generators[a] / out.generators[b]));
      if (sep < 1e-9)
        throw std::invalid_argument("vandermonde_generators: generators not distinct (targets " +
                                    std::to_string(a) + " and " + std::to_string(b) + ")");
    }
  return out;
}

ArrayGeometry draw_receive_array(const SubarrayLayout& layout, Index n, Rng& rng) {
  const std::vector<Eigen::Vector3d> pool = layout.transmit_positions();
  if (n > static_cast<Index>(pool.size()))
    throw std::invalid_argument("draw_receive_array: more receive elements requested than transmit positions");
  const std::vector<int> sel = rng.sample_without_replacement(static_cast<int>(pool.size()),
                                                              static_cast<int>(n));
  ArrayGeometry g;
  g.positions.setZero(n, 3);
  for (Index i = 0; i < n; ++i) g.positions.row(i) = pool[static_cast<size_t>(sel[static_cast<size_t>(i)])].transpose();
  return g;
}

}  // namespace tbdoa
