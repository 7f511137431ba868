#include "triples/json_io.hpp"

namespace triples {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw domain_error(errc::malformed_input, what);
}

long long int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

double real_from_json(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) return rat_from_double(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      const Int num(s.substr(0, slash));
      const Int den(s.substr(slash + 1));
      if (den == 0) bad("zero denominator");
      return Rat(num, den);
    } catch (const std::exception&) {
      bad("cannot parse rational '" + s + "'");
    }
  }
  bad("rational must be a number or 'p/q' string");
}

json rat_to_json(const Rat& q) { return rat_str(q); }

CurveClass curve_class_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("curve class must be [r, d]");
  return {int_from_json(j[0], "r"), int_from_json(j[1], "d")};
}

json curve_class_to_json(const CurveClass& x) { return json::array({x.r, x.d}); }

TripleClass triple_class_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    bad("triple class must be [r1, d1, r2, d2]");
  return {int_from_json(j[0], "r1"), int_from_json(j[1], "d1"),
          int_from_json(j[2], "r2"), int_from_json(j[3], "d2")};
}

json triple_class_to_json(const TripleClass& e) {
  return json::array({e.r1, e.d1, e.r2, e.d2});
}

Matrix2 matrix2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
      j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2)
    bad("matrix must be [[a,b],[c,d]]");
  return {rat_from_json(j[0][0]), rat_from_json(j[0][1]),
          rat_from_json(j[1][0]), rat_from_json(j[1][1])};
}

json matrix2_to_json(const Matrix2& m) {
  return json::array({json::array({rat_to_json(m.a), rat_to_json(m.b)}),
                      json::array({rat_to_json(m.c), rat_to_json(m.d)})});
}

LiftedElement lifted_from_json(const json& j) {
  if (!j.is_object() || !j.contains("T")) bad("element must have \"T\"");
  LiftedElement g;
  g.T = matrix2_from_json(j.at("T"));
  g.branch = j.contains("branch") ? int_from_json(j.at("branch"), "branch") : 0;
  return g;
}

json lifted_to_json(const LiftedElement& g) {
  return {{"T", matrix2_to_json(g.T)}, {"branch", g.branch}};
}

RhoPoint rho_from_json(const json& j) {
  if (!j.is_object()) bad("rho point must be an object");
  RhoPoint p;
  p.m0 = real_from_json(j.at("m0"), "m0");
  p.m1 = real_from_json(j.at("m1"), "m1");
  p.phi0 = real_from_json(j.at("phi0"), "phi0");
  p.phi1 = real_from_json(j.at("phi1"), "phi1");
  return p;
}

json rho_to_json(const RhoPoint& p) {
  return {{"m0", p.m0}, {"m1", p.m1}, {"phi0", p.phi0}, {"phi1", p.phi1}};
}

GluedDescriptor glued_from_json(const json& j) {
  if (!j.is_object()) bad("descriptor must be an object");
  GluedDescriptor d;
  d.sod = sod_from_id(static_cast<int>(int_from_json(j.at("sod"), "sod")));
  d.Z1 = CurveCharge{matrix2_from_json(j.at("Z1"))};
  d.Z2 = CurveCharge{matrix2_from_json(j.at("Z2"))};
  d.branch1 =
      j.contains("branch1") ? int_from_json(j.at("branch1"), "branch1") : 0;
  d.branch2 =
      j.contains("branch2") ? int_from_json(j.at("branch2"), "branch2") : 0;
  return d;
}

json glued_to_json(const GluedDescriptor& d) {
  return {{"sod", sod_id(d.sod)},
          {"Z1", matrix2_to_json(d.Z1.M)},
          {"Z2", matrix2_to_json(d.Z2.M)},
          {"branch1", d.branch1},
          {"branch2", d.branch2}};
}

StabDescriptor descriptor_from_json(const json& j) {
  StabDescriptor d;
  d.data = glued_from_json(j);
  if (j.contains("heart") && j.at("heart") == "tiltedGamma")
    d.kind = HeartKind::tilted_gamma;
  return d;
}

json descriptor_to_json(const StabDescriptor& d) {
  json j = glued_to_json(d.data);
  j["heart"] = heart_tag(d);
  return j;
}

GammaParams gamma_from_json(const json& j) {
  if (!j.is_object()) bad("gamma params must be an object");
  return {rat_from_json(j.at("A1")), rat_from_json(j.at("B1")),
          rat_from_json(j.at("C1")), rat_from_json(j.at("D1"))};
}

json gamma_to_json(const GammaParams& p) {
  return {{"A1", rat_to_json(p.A1)},
          {"B1", rat_to_json(p.B1)},
          {"C1", rat_to_json(p.C1)},
          {"D1", rat_to_json(p.D1)}};
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["tag"] = region_name(v.tag);
  for (const SignFact& f : v.certificates) j[f.name] = rat_str(f.value);
  return j;
}

json quadform_to_json(const QuadForm4& q) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < 4; ++j2) row.push_back(rat_str(q.m[i][j2]));
    rows.push_back(row);
  }
  return rows;
}

oracle::QuiverRep rep_from_json(const json& j) {
  if (!j.is_object()) bad("rep must be an object");
  oracle::QuiverRep r;
  r.p = static_cast<int>(int_from_json(j.at("p"), "p"));
  const json& dims = j.at("dims");
  if (!dims.is_array() || dims.size() != 2) bad("dims must be [n1, n2]");
  r.n1 = static_cast<int>(int_from_json(dims[0], "n1"));
  r.n2 = static_cast<int>(int_from_json(dims[1], "n2"));
  r.phi = oracle::FpMat::zero(r.p, r.n2, r.n1);
  const json& m = j.at("matrix");
  if (!m.is_array() || static_cast<int>(m.size()) != r.n2)
    bad("matrix must have n2 rows");
  for (int i = 0; i < r.n2; ++i) {
    if (!m[i].is_array() || static_cast<int>(m[i].size()) != r.n1)
      bad("matrix rows must have n1 entries");
    for (int c = 0; c < r.n1; ++c) {
      const long long e = int_from_json(m[i][c], "matrix entry");
      if (e < 0 || e >= r.p) bad("matrix entry out of field range");
      r.phi.at(i, c) = static_cast<uint8_t>(e);
    }
  }
  r.validate();
  return r;
}

json rep_to_json(const oracle::QuiverRep& r) {
  json m = json::array();
  for (int i = 0; i < r.n2; ++i) {
    json row = json::array();
    for (int c = 0; c < r.n1; ++c) row.push_back(static_cast<int>(r.phi.at(i, c)));
    m.push_back(row);
  }
  return {{"p", r.p}, {"dims", json::array({r.n1, r.n2})}, {"matrix", m}};
}

oracle::DimCharge dim_charge_from_json(const json& j) {
  if (!j.is_object()) bad("charge must be an object");
  auto qc = [](const json& v) {
    if (!v.is_array() || v.size() != 2) bad("charge value must be [re, im]");
    return QC{rat_from_json(v[0]), rat_from_json(v[1])};
  };
  oracle::DimCharge z{qc(j.at("z1")), qc(j.at("z2"))};
  z.validate();
  return z;
}

json dim_charge_to_json(const oracle::DimCharge& z) {
  return {{"z1", json::array({rat_to_json(z.z1.re), rat_to_json(z.z1.im)})},
          {"z2", json::array({rat_to_json(z.z2.re), rat_to_json(z.z2.im)})}};
}

PhaseProfile profile_from_json(const json& j) {
  if (!j.is_object()) bad("profile must be an object");
  PhaseProfile p;
  if (j.contains("phi")) {
    const json& arr = j.at("phi");
    if (!arr.is_array() || arr.size() != 6)
      bad("phi must be an array of six entries");
    for (int i = 0; i < 6; ++i)
      if (!arr[i].is_null()) p.phi[i] = real_from_json(arr[i], "phi");
  }
  if (j.contains("flags")) {
    const json& arr = j.at("flags");
    if (!arr.is_array() || arr.size() != 6)
      bad("flags must be an array of six entries");
    for (int i = 0; i < 6; ++i) {
      const std::string s = arr[i].get<std::string>();
      if (s == "stable")
        p.flag[i] = StabFlag::stable;
      else if (s == "semistable")
        p.flag[i] = StabFlag::semistable;
      else if (s == "unstable")
        p.flag[i] = StabFlag::unstable;
      else if (s == "unknown")
        p.flag[i] = StabFlag::unknown;
      else
        bad("unknown flag '" + s + "'");
    }
  }
  return p;
}

json qc_to_json(const QC& z) {
  return {{"re", rat_str(z.re)}, {"im", rat_str(z.im)}};
}

}  // namespace triples
