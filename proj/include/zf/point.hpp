#pragma once

#include <string>
#include <vector>

#include "zf/field.hpp"

namespace zf {

/// Homogeneous coordinate tuple, normalized so the first nonzero
/// coordinate equals 1.
struct ProjectivePoint {
  std::vector<FieldElement> coords;

  static ProjectivePoint make(std::vector<FieldElement> raw);

  const FieldPtr& field() const { return coords.front().field(); }
  int first_nonzero() const;

  bool operator==(const ProjectivePoint& other) const;
  std::string str() const;
};

}  // namespace zf
