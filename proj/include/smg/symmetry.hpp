#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "smg/embedding.hpp"
#include "smg/sphgeom.hpp"

namespace smg {

using Mat3 = Eigen::Matrix3d;

/// Chiral symmetry groups: rotations of the cube (order 24) and of the
/// icosahedron (order 60). The icosahedral group is taken in the frame
/// where the icosahedron has vertices (0, +-1, +-phi) and cyclic shifts.
enum class GroupName { O24, I60 };

const char* to_string(GroupName name);
GroupName group_from_string(const std::string& s);

class RotationGroup {
 public:
  RotationGroup(GroupName name, std::vector<Mat3> elements);

  GroupName name() const { return name_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Mat3& element(int i) const { return elements_[i]; }
  const std::vector<Mat3>& elements() const { return elements_; }

  int identity() const { return identity_; }
  /// Index of element(a) * element(b).
  int product(int a, int b) const { return table_[a * order() + b]; }
  int inverse(int a) const { return inverse_[a]; }
  /// Index of the element equal to m within 1e-9, or -1.
  int index_of(const Mat3& m) const;

 private:
  GroupName name_;
  std::vector<Mat3> elements_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// The group generated by two standard generators, closed under products,
/// with elements in canonical (lexicographic by entry) order. Built once
/// and cached.
const RotationGroup& group_elements(GroupName name);

/// Images of `seed` under every element, in element order, without
/// merging coincident points.
std::vector<UnitVector> orbit_images(const RotationGroup& group, const UnitVector& seed);

/// Orbit of `seed`, merging points closer than dedup_tol (Euclidean).
std::vector<UnitVector> orbit(const RotationGroup& group, const UnitVector& seed,
                              double dedup_tol = 1e-8);

/// Index of the element mapping each point onto a point of the set, as a
/// permutation per element. Throws InvalidInput if the set is not
/// invariant within tol.
std::vector<std::vector<int>> point_permutations(const RotationGroup& group,
                                                 const std::vector<UnitVector>& points,
                                                 double tol = 1e-9);

struct EdgeClasses {
  /// Each class sorted; classes ordered by their smallest edge.
  std::vector<std::vector<Edge>> classes;

  std::vector<int> sizes() const;
};

/// Partition of the edges into orbits under the group.
EdgeClasses edge_classes(const std::vector<UnitVector>& points, const std::vector<Edge>& edges,
                         const RotationGroup& group, double tol = 1e-9);

}  // namespace smg
