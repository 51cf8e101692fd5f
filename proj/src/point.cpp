#include "zf/point.hpp"

namespace zf {

ProjectivePoint ProjectivePoint::make(std::vector<FieldElement> raw) {
  int pivot = -1;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!raw[i].is_zero()) {
      pivot = static_cast<int>(i);
      break;
    }
  }
  if (pivot < 0) throw std::invalid_argument("all-zero homogeneous coordinates");
  FieldElement inv = raw[pivot].inverse();
  for (auto& c : raw) c *= inv;
  return ProjectivePoint{std::move(raw)};
}

int ProjectivePoint::first_nonzero() const {
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

bool ProjectivePoint::operator==(const ProjectivePoint& other) const {
  if (coords.size() != other.coords.size()) return false;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!(coords[i] == other.coords[i])) return false;
  }
  return true;
}

std::string ProjectivePoint::str() const {
  std::string s = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += " : ";
    s += coords[i].str();
  }
  return s + ")";
}

}  // namespace zf
