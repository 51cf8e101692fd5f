#include "zf/report.hpp"

namespace zf {

Json to_json(const ConditionReport& rep) {
  Json j;
  j["condition"] = rep.condition_id;
  j["passed"] = rep.passed;
  j["witnesses"] = rep.witnesses;
  if (!rep.caveats.empty()) j["caveats"] = rep.caveats;
  if (!rep.divisors.empty()) {
    Json ds = Json::array();
    for (const auto& d : rep.divisors) {
      ds.push_back({{"hyperplane", d.i + 1}, {"divisor", d.d.str()}, {"multiplicity", d.p}});
    }
    j["divisors"] = ds;
  }
  if (!rep.exceptional.empty()) {
    Json es = Json::array();
    for (const auto& e : rep.exceptional) {
      Json one{{"t", e.t_text}, {"squarefree", e.squarefree}};
      if (!e.witness.empty()) one["witness"] = e.witness;
      es.push_back(one);
    }
    j["exceptional_values"] = es;
  }
  if (rep.sing_dimension) j["sing_dimension"] = *rep.sing_dimension;
  if (rep.t_sample_text) j["t_sample"] = *rep.t_sample_text;
  return j;
}

Json to_json(const SingularCluster& cluster) {
  Json j;
  j["description"] = cluster.description;
  j["count"] = cluster.count;
  j["multiplicity"] = cluster.multiplicity;
  j["milnor"] = cluster.milnor;
  j["milnor_sum"] = cluster.milnor_sum;
  j["tjurina_sum"] = cluster.tjurina_sum;
  if (cluster.representative) {
    j["representative"] = *cluster.representative;
    if (cluster.representative_evidence) {
      j["representative_evidence"] = {
          {"multiplicity", cluster.representative_evidence->multiplicity},
          {"milnor", cluster.representative_evidence->milnor},
          {"matches", cluster.representative_evidence->matches}};
    }
  }
  if (!cluster.notes.empty()) j["notes"] = cluster.notes;
  return j;
}

Json to_json(const CurveVerification& verification) {
  Json j;
  j["passed"] = verification.passed;
  j["singular_count"] = verification.singular_count;
  Json cs = Json::array();
  for (const auto& c : verification.clusters) cs.push_back(to_json(c));
  j["clusters"] = cs;
  if (!verification.witnesses.empty()) j["witnesses"] = verification.witnesses;
  if (!verification.caveats.empty()) j["caveats"] = verification.caveats;
  return j;
}

Json to_json(const BuiltCurve& curve) {
  Json j;
  j["equation"] = curve.bundle.equation.str();
  j["degree"] = curve.bundle.degree;
  j["expected_singular_count"] = curve.bundle.expected_sing_count;
  j["type"] = {curve.bundle.expected_type.first, curve.bundle.expected_type.second};
  switch (curve.bundle.provenance) {
    case Provenance::direct_cpqk: j["provenance"] = "direct"; break;
    case Provenance::series1_pullback: j["provenance"] = "series1-pullback"; break;
    case Provenance::series2_plane_section: j["provenance"] = "series2-plane-section"; break;
  }
  j["seed"] = curve.seed;
  if (!curve.t_text.empty()) j["t"] = curve.t_text;
  j["verification"] = to_json(curve.verification);
  if (!curve.conditions.empty()) {
    Json cs = Json::array();
    for (const auto& c : curve.conditions) cs.push_back(to_json(c));
    j["conditions"] = cs;
  }
  return j;
}

Json to_json(const Prop5Report& rep) {
  Json j;
  Json cs = Json::array();
  for (const auto& c : rep.conditions) cs.push_back(to_json(c));
  j["conditions"] = cs;
  j["common_quadric"] = rep.q_witness;
  j["quadric_irreducible_for_all_t"] = rep.q_irreducible;
  j["quadric_unique_common_component"] = rep.q_unique_common_component;
  j["double_quadric_member_unsatisfiable"] = rep.double_quadric_unsatisfiable;
  j["singular_points_at_t2"] = rep.singular_points_t2;
  j["singular_points_match"] = rep.singular_points_match;
  j["sing_dimension_at_t2"] = rep.sing_dimension_t2;
  j["passed"] = rep.passed;
  return j;
}

Json to_json(const FamilyDerivation& der) {
  Json j;
  j["alpha"] = der.alpha.str();
  j["closed_form"] = der.closed_form.str();
  j["pencil_f0"] = der.pencil_form.f0.str();
  j["third_tangency"] = der.tangency_point;
  return j;
}

Json to_json(const Abelianization& ab) {
  Json j;
  Json ds = Json::array();
  for (const auto& d : ab.divisors) ds.push_back(d.get_str());
  j["elementary_divisors"] = ds;
  j["free_rank"] = ab.free_rank;
  return j;
}

Json to_json(const PermutationAssignment& w, const FinitePresentation& pres) {
  Json j;
  j["degree"] = w.degree;
  Json imgs = Json::array();
  for (int g = 0; g < pres.generator_count; ++g) imgs.push_back(w.cycle_string(g));
  j["generator_images"] = imgs;
  return j;
}

Json to_json(const SingularLocus& locus) {
  Json j;
  Json pts = Json::array();
  for (const auto& rec : locus.records) {
    pts.push_back({{"point", rec.point.str()},
                   {"multiplicity", rec.multiplicity},
                   {"milnor", rec.milnor}});
  }
  j["points"] = pts;
  Json res = Json::array();
  for (const auto& r : locus.residual) res.push_back(r.str());
  if (!locus.residual.empty()) j["residual"] = res;
  j["complete"] = locus.complete;
  return j;
}

Json to_json(const PairReport& rep) {
  Json j;
  j["c1"] = to_json(rep.c1);
  j["c2"] = to_json(rep.c2);
  j["degrees_match"] = rep.degrees_match;
  j["counts_match"] = rep.counts_match;
  j["types_match"] = rep.types_match;
  j["abelianization"] = to_json(rep.ab);
  if (rep.witness) {
    Json w;
    w["degree"] = rep.witness->degree;
    Json imgs = Json::array();
    for (size_t g = 0; g < rep.witness->images.size(); ++g) {
      imgs.push_back(rep.witness->cycle_string(static_cast<int>(g)));
    }
    w["generator_images"] = imgs;
    j["nonabelian_witness"] = w;
  }
  j["c2_group"] = rep.c2_group_note;
  j["passed"] = rep.passed;
  return j;
}

Json make_report(const std::string& command, Json inputs, Json result, bool passed,
                 const std::vector<std::string>& caveats) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  j["passed"] = passed;
  j["caveats"] = caveats;
  return j;
}

}  // namespace zf
