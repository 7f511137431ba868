#pragma once

#include "triples/classify.hpp"
#include "triples/descriptor.hpp"
#include "triples/quiver.hpp"
#include "triples/regions.hpp"
#include "triples/serre.hpp"
#include "triples/support.hpp"

#include <json.hpp>

// JSON forms of the wire types.  Rationals travel as "p/q" strings; matrix
// entries are accepted as numbers or "p/q" strings and always written as
// strings.  Throws MalformedInput on bad shapes.

namespace triples {

using json = nlohmann::ordered_json;

Rat rat_from_json(const json& j);
json rat_to_json(const Rat& q);

CurveClass curve_class_from_json(const json& j);   // [r, d]
json curve_class_to_json(const CurveClass& x);
TripleClass triple_class_from_json(const json& j);  // [r1, d1, r2, d2]
json triple_class_to_json(const TripleClass& e);

Matrix2 matrix2_from_json(const json& j);  // [[a,b],[c,d]]
json matrix2_to_json(const Matrix2& m);

LiftedElement lifted_from_json(const json& j);  // {"T": ..., "branch": m}
json lifted_to_json(const LiftedElement& g);

RhoPoint rho_from_json(const json& j);
json rho_to_json(const RhoPoint& p);

GluedDescriptor glued_from_json(const json& j);
json glued_to_json(const GluedDescriptor& d);

StabDescriptor descriptor_from_json(const json& j);
json descriptor_to_json(const StabDescriptor& d);

GammaParams gamma_from_json(const json& j);  // {"A1": "p/q", ...}
json gamma_to_json(const GammaParams& p);

json verdict_to_json(const Verdict& v);

json quadform_to_json(const QuadForm4& q);  // row-major rational strings

oracle::QuiverRep rep_from_json(const json& j);
json rep_to_json(const oracle::QuiverRep& r);
oracle::DimCharge dim_charge_from_json(const json& j);  // {"z1":[re,im],...}
json dim_charge_to_json(const oracle::DimCharge& z);

PhaseProfile profile_from_json(const json& j);

json qc_to_json(const QC& z);

}  // namespace triples
