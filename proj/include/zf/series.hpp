#pragma once

#include <cstdint>

#include "zf/fpgroup.hpp"
#include "zf/pencil.hpp"
#include "zf/plane.hpp"

namespace zf {

struct DegenerateAfterRetries : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateMember : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Provenance { direct_cpqk, series1_pullback, series2_plane_section };

struct CurveBundle {
  MultiPoly equation;  // plane curve, three variables
  int degree = 0;
  long expected_sing_count = 0;
  std::pair<int, int> expected_type{0, 0};
  Provenance provenance = Provenance::direct_cpqk;
};

/// A certified batch of singular points sharing one local type: either a
/// deck-symmetric fiber or a transversally cut point set, with aggregate
/// localized dimensions backing the per-point invariants.
struct SingularCluster {
  std::string description;
  long count = 0;
  int multiplicity = 0;
  long milnor = 0;
  long milnor_sum = 0;
  long tjurina_sum = 0;
  std::optional<std::string> representative;
  std::optional<LocalTypeEvidence> representative_evidence;
  std::vector<std::string> notes;
};

struct CurveVerification {
  bool passed = false;
  long singular_count = 0;
  std::vector<SingularCluster> clusters;
  std::vector<std::string> witnesses;
  std::vector<std::string> caveats;
};

struct BuiltCurve {
  CurveBundle bundle;
  CurveVerification verification;
  std::vector<ConditionReport> conditions;  // pencil checks for series builds
  std::uint64_t seed = 0;
  std::string t_text;  // pencil parameter for series builds
};

/// f^q + g^p from seeded general f, g; certifies the singular locus
/// through the transversality of (f, g) plus localized-dimension
/// accounting in every chart stratum.
BuiltCurve build_Cpqk(int p, int q, int k, std::uint64_t seed);

struct FamilyDerivation {
  FieldElement alpha;       // cube root of unity
  MultiPoly closed_form;    // over Q(omega) in X, Y, Z, A, B
  Pencil pencil_form;       // A = 1, parameter multiplying XYZ
  std::string tangency_point;
};

/// The three one-parameter cubic families cut out by the triple-tangency
/// conditions, derived stage by stage with exact completeness checks.
std::vector<FamilyDerivation> derive_cubic_family();

/// Kummer pullback of a general member of the omega family: a degree-3q
/// curve with 3q singular points of type (3, q), certified fiberwise.
BuiltCurve build_series1(int q, std::optional<FieldElement> t_value, std::uint64_t seed);

struct Prop5Report {
  std::vector<ConditionReport> conditions;
  bool q_irreducible = false;
  bool q_unique_common_component = false;
  std::string q_witness;
  bool double_quadric_unsatisfiable = false;
  std::vector<std::string> singular_points_t2;
  bool singular_points_match = false;
  int sing_dimension_t2 = -1;
  bool passed = false;
};

/// Full verification of the quartic-surface pencil: conditions (1)-(4),
/// the common quadric of the gradient pair, the impossibility of a double
/// quadric member, and the four singular points at t = 2.
Prop5Report verify_prop5();

/// Plane section of the q-th Kummer pullback of a quartic member: degree
/// 4q with 8q singular points of type (2, q), certified by the global
/// count certificate (Jacobian quotient dimension and squarefree
/// eliminant degree).
BuiltCurve build_series2(int q, std::optional<FieldElement> t_value, std::uint64_t seed);

struct PairReport {
  BuiltCurve c1;
  BuiltCurve c2;
  bool degrees_match = false;
  bool counts_match = false;
  bool types_match = false;
  Abelianization ab;
  std::optional<PermutationAssignment> witness;
  std::string c2_group_note;
  bool passed = false;
};

/// Builds both members of a pair and compares their certificates; attaches
/// the group invariants of the direct member's presentation.
PairReport verify_zariski_pair(int p, int q, int k, int series_selector, std::uint64_t seed);

}  // namespace zf
