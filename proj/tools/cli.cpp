#include "cli.hpp"

#include "triples/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace triples::cli {

namespace {

json parse_json_arg(const std::string& arg) {
  try {
    if (!arg.empty() && arg[0] == '@') {
      std::ifstream in(arg.substr(1));
      if (!in) throw domain_error(errc::malformed_input,
                                  "cannot open " + arg.substr(1));
      return json::parse(in);
    }
    if (arg == "-") return json::parse(std::cin);
    return json::parse(arg);
  } catch (const json::parse_error& e) {
    throw domain_error(errc::malformed_input, e.what());
  }
}

std::string compact(const QC& z) { return qc_str(z); }

struct Ctx {
  bool machine = false;
  std::ostream* out = nullptr;

  void emit(const json& j, const std::string& text) const {
    if (machine)
      *out << j.dump() << "\n";
    else
      *out << text << "\n";
  }
};

// ---- subcommand bodies ----------------------------------------------------

void do_classify(const Ctx& ctx, const std::string& matrix,
                 const std::string& rho_i, const std::string& rho_j,
                 double f0) {
  ConditionStarData data;
  if (!rho_i.empty() || !rho_j.empty()) {
    if (rho_i.empty() || rho_j.empty())
      throw domain_error(errc::malformed_input,
                         "--rho-i and --rho-j go together");
    data = normalize(rho_from_json(parse_json_arg(rho_i)),
                     rho_from_json(parse_json_arg(rho_j)));
  } else if (!matrix.empty()) {
    data = {matrix2_from_json(parse_json_arg(matrix)), f0};
  } else {
    throw domain_error(errc::malformed_input,
                       "need --matrix or --rho-i/--rho-j");
  }
  const Verdict v = trichotomy(data);
  json j = verdict_to_json(v);
  j["f0"] = real_str(data.f0);
  std::ostringstream text;
  text << "region:      " << region_name(v.tag) << "\n";
  for (const SignFact& f : v.certificates)
    text << "  " << f.name << std::string(12 - f.name.size(), ' ') << "= "
         << rat_str_compact(f.value) << "\n";
  text << "  f0          = " << real_str(data.f0);
  ctx.emit(j, text.str());
}

void do_glue_check(const Ctx& ctx, int sod, double rA, double rB, bool has_r,
                   const std::string& r1, const std::string& r2,
                   const std::string& g1, const std::string& g2, double a) {
  json j;
  std::ostringstream text;
  if (!r1.empty() || !r2.empty()) {
    if (r1.empty() || r2.empty())
      throw domain_error(errc::malformed_input, "--r1 and --r2 go together");
    const RecollementVerdict v =
        jealousy(rat_from_json(json(r1)), rat_from_json(json(r2)));
    const bool admits = (v == RecollementVerdict::admits);
    j["jealousy"] = admits ? "admits" : "no_stability_function";
    text << "jealousy: " << (admits ? "admits" : "no stability function");
  } else if (!g1.empty() || !g2.empty()) {
    if (g1.empty() || g2.empty())
      throw domain_error(errc::malformed_input, "--g1 and --g2 go together");
    const bool in = in_S_a(lifted_from_json(parse_json_arg(g1)),
                           lifted_from_json(parse_json_arg(g2)), a);
    j["in_S_a"] = in;
    j["a"] = a;
    text << "S(" << real_str(a) << ") membership: " << (in ? "yes" : "no");
  } else if (has_r) {
    const bool ok = check_gluing(sod_from_id(sod), rA, rB);
    j["sod"] = sod;
    j["gluing"] = ok;
    text << "gluing for sod " << sod << ": " << (ok ? "holds" : "fails");
  } else {
    throw domain_error(errc::malformed_input,
                       "need --rA/--rB, --r1/--r2 or --g1/--g2");
  }
  ctx.emit(j, text.str());
}

void do_charge_eval(const Ctx& ctx, bool mu, const std::string& matrix,
                    const std::string& glued, const std::string& gamma,
                    bool weak, const std::string& cls) {
  const json jcls = parse_json_arg(cls);
  QC z;
  if (!glued.empty()) {
    const GluedDescriptor d = glued_from_json(parse_json_arg(glued));
    z = glued_charge(d, triple_class_from_json(jcls));
    // The charge is defined either way; non-glued data gets a warning.
    bool glues = true;
    try {
      glues = gluing_ok(d);
    } catch (const domain_error&) {
      glues = false;  // a degenerate constituent never glues
    }
    json j = qc_to_json(z);
    if (!glues) j["warning"] = "gluing inequality fails";
    ctx.emit(j, compact(z) + (glues ? "" : "   (warning: gluing fails)"));
    return;
  }
  if (!gamma.empty()) {
    const GammaParams p = gamma_from_json(parse_json_arg(gamma));
    const TripleClass e = triple_class_from_json(jcls);
    z = weak ? weak_charge(p, e) : zr_charge(p, e);
  } else {
    CurveCharge Z = CurveCharge::mu();
    if (!mu) {
      if (matrix.empty())
        throw domain_error(errc::malformed_input, "need --mu or --matrix");
      Z = CurveCharge{matrix2_from_json(parse_json_arg(matrix))};
    }
    z = charge_eval(Z, curve_class_from_json(jcls));
  }
  ctx.emit(qc_to_json(z), compact(z));
}

StabDescriptor regime_descriptor(const SupportRegime& regime) {
  if (const auto* r = std::get_if<StrongOrth>(&regime)) {
    GluedDescriptor d;
    d.sod = Sod::s12;
    d.Z1 = r->Z1;
    d.Z2 = r->Z2;
    return StabDescriptor::glued(d);
  }
  if (const auto* r = std::get_if<SameHeartUpper>(&regime)) {
    GluedDescriptor d;
    d.sod = Sod::s12;
    d.Z1 = CurveCharge{Matrix2{-r->A, r->B, 0, r->C}};
    d.Z2 = CurveCharge::mu();
    return StabDescriptor::glued(d);
  }
  if (const auto* r = std::get_if<GluedNegDisc>(&regime)) {
    GluedDescriptor d;
    d.sod = Sod::s12;
    d.Z1 = CurveCharge{Matrix2{-r->A, r->B, -r->D, r->C}};
    d.Z2 = CurveCharge::mu();
    return StabDescriptor::glued(d);
  }
  return StabDescriptor::tilted(std::get<GammaEuler>(regime).p);
}

SupportRegime parse_regime(const std::string& name, const std::string& matrix,
                           const std::string& m2, const std::string& abc,
                           int genus) {
  if (name == "strong-orth") {
    if (matrix.empty() || m2.empty())
      throw domain_error(errc::malformed_input,
                         "strong-orth needs --matrix and --m2");
    return StrongOrth{CurveCharge{matrix2_from_json(parse_json_arg(matrix))},
                      CurveCharge{matrix2_from_json(parse_json_arg(m2))}};
  }
  if (name == "same-heart") {
    const json j = parse_json_arg(abc);
    if (!j.is_array() || j.size() != 3)
      throw domain_error(errc::malformed_input, "--abc must be [A,B,C]");
    return SameHeartUpper{rat_from_json(j[0]), rat_from_json(j[1]),
                          rat_from_json(j[2])};
  }
  if (name == "neg-disc") {
    const Matrix2 M = matrix2_from_json(parse_json_arg(matrix));
    return GluedNegDisc{-M.a, M.b, M.d, -M.c};
  }
  if (name == "gamma-euler") {
    const Matrix2 M = matrix2_from_json(parse_json_arg(matrix));
    return GammaEuler{GammaParams{-M.a, M.b, M.d, -M.c}, genus};
  }
  throw domain_error(errc::malformed_input, "unknown regime " + name);
}

void do_support_check(const Ctx& ctx, const SupportRegime& regime) {
  const QuadForm4 Q = build_Q(regime);
  const StabDescriptor desc = regime_descriptor(regime);
  const KernelCertificate cert = kernel_negdef(Q, desc);

  json j;
  j["Q"] = quadform_to_json(Q);
  j["certified"] = cert.certified;
  json basis = json::array();
  for (const auto& v : cert.kernel_basis) {
    json row = json::array();
    for (const Rat& q : v) row.push_back(rat_str(q));
    basis.push_back(row);
  }
  j["kernel_basis"] = basis;
  j["minor1"] = rat_str(cert.minor1);
  j["minor2"] = rat_str(cert.minor2);
  json fams = json::array();
  for (const FamilyValue& f : q_on_distinguished(Q))
    fams.push_back({{"family", f.family},
                    {"rr", rat_str(f.c_rr)},
                    {"rd", rat_str(f.c_rd)},
                    {"dd", rat_str(f.c_dd)}});
  j["families"] = fams;
  if (cert.counterexample) {
    json ce = json::array();
    for (const Rat& q : *cert.counterexample) ce.push_back(rat_str(q));
    j["counterexample"] = ce;
  }

  std::ostringstream text;
  text << "kernel negative definite: " << (cert.certified ? "yes" : "NO")
       << "\n";
  text << "  minors of -G: " << rat_str_compact(cert.minor1) << ", "
       << rat_str_compact(cert.minor2);
  ctx.emit(j, text.str());
}

void do_support_scan(const Ctx& ctx, const std::string& regime_name,
                     int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  auto rnd = [&] { return Rat(num(rng), den(rng)); };

  int certified = 0, drawn = 0;
  while (drawn < samples) {
    SupportRegime regime;
    if (regime_name == "strong-orth") {
      Matrix2 a{rnd(), rnd(), rnd(), rnd()}, b{rnd(), rnd(), rnd(), rnd()};
      if (!(a.det() > 0) || !(b.det() > 0)) continue;
      regime = StrongOrth{CurveCharge{a}, CurveCharge{b}};
    } else if (regime_name == "same-heart") {
      Rat A = rnd(), B = rnd(), C = rnd();
      if (!(A < 0) || !(C > 0) || B == 0) continue;
      regime = SameHeartUpper{A, B, C};
    } else if (regime_name == "neg-disc") {
      Rat A = rnd(), B = rnd(), C = rnd(), D = rnd();
      if (!(B > 0) || !(D > 0)) continue;
      if (!((A + C) * (A + C) - 4 * B * D < 0)) continue;
      regime = GluedNegDisc{A, B, C, D};
    } else if (regime_name == "gamma-euler") {
      GammaParams p{rnd(), rnd(), rnd(), rnd()};
      if (!(p.D1 < 0) || !(p.det_M() > 0) || !(p.det_M_plus_I() > 0)) continue;
      const Matrix2 pm = p.M();
      if (!(pm.trace() * pm.trace() - 4 * pm.det() < 0)) continue;
      regime = GammaEuler{p, 1};
    } else {
      throw domain_error(errc::malformed_input, "unknown regime " + regime_name);
    }
    ++drawn;
    if (kernel_negdef(build_Q(regime), regime_descriptor(regime)).certified)
      ++certified;
  }
  json j{{"regime", regime_name},
         {"samples", samples},
         {"certified", certified}};
  std::ostringstream text;
  text << regime_name << ": " << certified << "/" << samples << " certified";
  ctx.emit(j, text.str());
}

void do_bounds(const Ctx& ctx, const std::string& abc, bool has_alpha,
               const Rat& alpha, const std::string& cls) {
  Rat A, B, C;
  if (has_alpha) {
    A = -1;
    B = -alpha;
    C = 1;
  } else {
    const json j = parse_json_arg(abc);
    if (!j.is_array() || j.size() != 3)
      throw domain_error(errc::malformed_input, "--abc must be [A,B,C]");
    A = rat_from_json(j[0]);
    B = rat_from_json(j[1]);
    C = rat_from_json(j[2]);
  }
  const TripleClass e = triple_class_from_json(parse_json_arg(cls));
  const SlopeInterval iv = cotassp_interval(A, B, C, e);
  const auto chain = necessary_chain(A, B, C, e);

  json j;
  j["lo"] = rat_str(iv.lo);
  j["hi"] = rat_str(iv.hi);
  j["contains_minus_B"] = iv.contains_minus_B;
  json ch = json::array();
  for (const auto& c : chain) ch.push_back({{"tag", c.tag}, {"holds", c.holds}});
  j["chain"] = ch;

  std::ostringstream text;
  text << "-B window: [" << rat_str_compact(iv.lo) << ", "
       << rat_str_compact(iv.hi) << "]"
       << (iv.contains_minus_B ? " (contains -B)" : " (excludes -B)") << "\n";
  for (const auto& c : chain)
    text << "  " << c.tag << ": " << (c.holds ? "holds" : "fails") << "\n";
  std::string s = text.str();
  s.pop_back();
  ctx.emit(j, s);
}

void do_serre(const Ctx& ctx, const std::string& cls, int times, int genus,
              bool show_matrix) {
  if (genus != 1)
    throw domain_error(errc::invalid_region,
                       "class-level Serre transport needs genus 1");
  if (show_matrix) {
    json rows = json::array();
    for (const auto& row : serre_matrix()) {
      json r = json::array();
      for (long long v : row) r.push_back(v);
      rows.push_back(r);
    }
    ctx.emit(rows, rows.dump());
    return;
  }
  TripleClass e = triple_class_from_json(parse_json_arg(cls));
  for (int k = 0; k < times; ++k) e = serre_class(e);
  ctx.emit(triple_class_to_json(e),
           "[" + std::to_string(e.r1) + "," + std::to_string(e.d1) + "," +
               std::to_string(e.r2) + "," + std::to_string(e.d2) + "]");
}

void do_dual(const Ctx& ctx, const std::string& cls, const std::string& matrix,
             double theta, const std::string& descriptor) {
  if (!descriptor.empty()) {
    const GluedDescriptor d =
        dual_triple_descriptor(glued_from_json(parse_json_arg(descriptor)));
    ctx.emit(glued_to_json(d), glued_to_json(d).dump());
    return;
  }
  if (!matrix.empty()) {
    const DualCurveCharge d = dual_curve_charge(
        CurveCharge{matrix2_from_json(parse_json_arg(matrix))}, theta);
    json j{{"M", matrix2_to_json(d.Z.M)},
           {"theta", d.theta},
           {"shift", d.shift}};
    ctx.emit(j, j.dump());
    return;
  }
  const TripleClass e = dual_class(triple_class_from_json(parse_json_arg(cls)));
  ctx.emit(triple_class_to_json(e),
           "[" + std::to_string(e.r1) + "," + std::to_string(e.d1) + "," +
               std::to_string(e.r2) + "," + std::to_string(e.d2) + "]");
}

void do_hn_triangle(const Ctx& ctx, const std::string& x,
                    const std::string& descriptor) {
  const CurveClass cc = curve_class_from_json(parse_json_arg(x));
  const StabDescriptor d = descriptor_from_json(parse_json_arg(descriptor));
  const HnTriangleReport rep = hn_triangle_i(cc, d);

  const char* kind = rep.kind == HnTriangleReport::Kind::semistable
                         ? "semistable"
                         : rep.kind == HnTriangleReport::Kind::jordan_holder
                               ? "jordan-holder"
                               : "filtration";
  json j;
  j["kind"] = kind;
  json fs = json::array();
  for (const auto& f : rep.factors)
    fs.push_back({{"class", triple_class_to_json(f.cls)},
                  {"phase", real_str(f.phase)}});
  j["factors"] = fs;

  std::ostringstream text;
  text << kind;
  for (const auto& f : rep.factors)
    text << "  [" << f.cls.r1 << "," << f.cls.d1 << "," << f.cls.r2 << ","
         << f.cls.d2 << "]@" << real_str(f.phase);
  ctx.emit(j, text.str());
}

void do_audit(const Ctx& ctx, const std::string& profile) {
  const PhaseProfile p = profile_from_json(parse_json_arg(profile));
  const auto violations = audit(p);
  json j = json::array();
  for (const auto& v : violations)
    j.push_back({{"rule", v.rule}, {"detail", v.detail}});
  std::ostringstream text;
  if (violations.empty()) {
    text << "no violations";
  } else {
    for (const auto& v : violations) text << "violated: " << v.rule << "\n";
  }
  std::string s = text.str();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  ctx.emit(j, s);
}

void do_region(const Ctx& ctx, const std::string& element,
               const std::string& rho_pt, const std::string& rho_i,
               const std::string& rho_j, const std::string& m1,
               const std::string& m2) {
  json j;
  std::ostringstream text;
  if (!element.empty()) {
    const LiftedElement g = lifted_from_json(parse_json_arg(element));
    const bool in = in_L12(g);
    j["in_L12"] = in;
    text << "L12 membership: " << (in ? "yes" : "no");
  } else if (!rho_i.empty() || !rho_j.empty()) {
    if (rho_i.empty() || rho_j.empty() || m1.empty() || m2.empty())
      throw domain_error(errc::malformed_input,
                         "P12 needs --rho-i, --rho-j, --m1, --m2");
    const bool in = in_P12(rho_from_json(parse_json_arg(rho_i)),
                           rho_from_json(parse_json_arg(rho_j)),
                           matrix2_from_json(parse_json_arg(m1)),
                           matrix2_from_json(parse_json_arg(m2)));
    j["in_P12"] = in;
    text << "P12 membership: " << (in ? "yes" : "no");
  } else if (!rho_pt.empty()) {
    const RhoPoint p = rho_from_json(parse_json_arg(rho_pt));
    const double d = delta(p);
    j["delta"] = real_str(d);
    j["in_Y"] = in_Y(p);
    text << "delta = " << real_str(d) << ", Y membership: "
         << (in_Y(p) ? "yes" : "no");
  } else {
    throw domain_error(errc::malformed_input,
                       "need --element, --rho or the P12 inputs");
  }
  ctx.emit(j, text.str());
}

void do_trace(const Ctx& ctx, const std::string& start, const std::string& end,
              int samples) {
  const StabDescriptor a = descriptor_from_json(parse_json_arg(start));
  const StabDescriptor b = descriptor_from_json(parse_json_arg(end));
  const auto events = trace_path(a, b, samples);
  for (const WallEvent& e : events) {
    json j{{"t", real_str(e.t)},
           {"wall", e.wall},
           {"left", e.left},
           {"right", e.right}};
    if (ctx.machine)
      *ctx.out << j.dump() << "\n";
    else
      *ctx.out << "t=" << real_str(e.t) << "  " << e.wall << "  " << e.left
               << " -> " << e.right << "\n";
  }
  if (!ctx.machine && events.empty()) *ctx.out << "no wall events\n";
}

void do_oracle_hn(const Ctx& ctx, const std::string& rep,
                  const std::string& charge) {
  const oracle::QuiverRep r = rep_from_json(parse_json_arg(rep));
  const oracle::DimCharge z = dim_charge_from_json(parse_json_arg(charge));
  const auto factors = oracle::hn_filtration(r, z);

  json j = json::array();
  std::ostringstream text;
  if (factors.size() == 1) text << "semistable: ";
  for (const auto& f : factors) {
    j.push_back({{"dims", json::array({f.n1, f.n2})},
                 {"z", qc_to_json(f.z)},
                 {"phase", real_str(phase_of(f.z))}});
    text << "(" << f.n1 << "," << f.n2 << ")@" << real_str(phase_of(f.z))
         << " ";
  }
  std::string s = text.str();
  if (!s.empty() && s.back() == ' ') s.pop_back();
  ctx.emit(j, s);
}

void do_oracle_torsion(const Ctx& ctx, int p, const std::string& dims,
                       const std::string& alpha, const std::string& charge) {
  const json jd = parse_json_arg(dims);
  if (!jd.is_array() || jd.size() != 2)
    throw domain_error(errc::malformed_input, "--dims must be [n1,n2]");
  const oracle::DimCharge z = dim_charge_from_json(parse_json_arg(charge));
  const Rat a = rat_from_json(json(alpha));
  const auto res = oracle::truncation_pair(p, jd[0].get<int>(),
                                           jd[1].get<int>(), z, a);
  json j;
  j["torsion"] = json::array();
  for (const auto& r : res.torsion) j["torsion"].push_back(rep_to_json(r));
  j["free"] = json::array();
  for (const auto& r : res.free) j["free"].push_back(rep_to_json(r));
  j["hom_axiom"] = res.hom_axiom;
  j["decomposition_axiom"] = res.decomposition_axiom;

  std::ostringstream text;
  text << "torsion side: " << res.torsion.size()
       << " reps, free side: " << res.free.size() << "\n"
       << "Hom(T,F) = 0: " << (res.hom_axiom ? "verified" : "FAILED") << "\n"
       << "decompositions: "
       << (res.decomposition_axiom ? "verified" : "FAILED");
  ctx.emit(j, text.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"stability conditions for holomorphic triples over a genus-1 "
               "curve"};
  app.require_subcommand(1);

  Ctx ctx;
  ctx.out = &out;
  app.add_flag("--json", ctx.machine, "machine-readable JSON output");

  // classify
  std::string matrix, rho_i, rho_j;
  double f0 = 0;
  auto* classify_cmd =
      app.add_subcommand("classify", "eigenvalue trichotomy of a charge matrix");
  classify_cmd->add_option("--matrix", matrix, "charge matrix [[-A,B],[-D,C]]");
  classify_cmd->add_option("--f0", f0, "heart parameter f1(0)");
  classify_cmd->add_option("--rho-i", rho_i, "rho data of the i-objects");
  classify_cmd->add_option("--rho-j", rho_j, "rho data of the j-objects");

  // glue-check
  int sod = 12;
  double rA = 0, rB = 0, s_a = 0.5;
  std::string jr1, jr2, g1, g2;
  auto* glue_cmd = app.add_subcommand("glue-check",
                                      "gluing inequalities and related gates");
  auto* optA = glue_cmd->add_option("--rA", rA, "first heart parameter");
  glue_cmd->add_option("--rB", rB, "second heart parameter");
  glue_cmd->add_option("--sod", sod, "decomposition: 12, 23 or 31");
  glue_cmd->add_option("--r1", jr1, "recollement parameter r1 (rational)");
  glue_cmd->add_option("--r2", jr2, "recollement parameter r2 (rational)");
  glue_cmd->add_option("--g1", g1, "first element JSON");
  glue_cmd->add_option("--g2", g2, "second element JSON");
  glue_cmd->add_option("--a", s_a, "S(a) parameter in (0,1)");

  // charge-eval
  bool mu = false, weak = false;
  std::string ce_matrix, ce_glued, ce_gamma, ce_class;
  auto* charge_cmd =
      app.add_subcommand("charge-eval", "evaluate a central charge on a class");
  charge_cmd->add_flag("--mu", mu, "slope charge Z_mu");
  charge_cmd->add_option("--matrix", ce_matrix, "curve charge matrix");
  charge_cmd->add_option("--glued", ce_glued, "glued descriptor JSON");
  charge_cmd->add_option("--gamma", ce_gamma, "tilted parameters JSON");
  charge_cmd->add_flag("--weak", weak, "use the weak charge");
  charge_cmd->add_option("--class", ce_class, "class [r,d] or [r1,d1,r2,d2]")
      ->required();

  // support-check
  std::string regime = "gamma-euler", sc_matrix, sc_m2, sc_abc;
  int genus = 1, samples = 0;
  unsigned seed = 1;
  auto* support_cmd = app.add_subcommand(
      "support-check", "support-property form and kernel certification");
  support_cmd->add_option("--regime", regime,
                          "strong-orth | same-heart | neg-disc | gamma-euler");
  support_cmd->add_option("--matrix", sc_matrix, "regime matrix");
  support_cmd->add_option("--m2", sc_m2, "second matrix (strong-orth)");
  support_cmd->add_option("--abc", sc_abc, "[A,B,C] (same-heart)");
  support_cmd->add_option("--genus", genus, "curve genus");
  support_cmd->add_option("--samples", samples, "randomized draws");
  support_cmd->add_option("--seed", seed, "random seed");

  // bounds
  std::string b_abc, b_class, b_alpha;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "semistable-existence window and inequality chain");
  bounds_cmd->add_option("--abc", b_abc, "[A,B,C]");
  bounds_cmd->add_option("--alpha", b_alpha, "alpha regime value (rational)");
  bounds_cmd->add_option("--class", b_class, "triple class")->required();

  // serre
  std::string serre_class_arg;
  int times = 1, serre_genus = 1;
  bool serre_show_matrix = false;
  auto* serre_cmd =
      app.add_subcommand("serre", "class-level Serre transport");
  serre_cmd->add_option("--class", serre_class_arg, "triple class");
  serre_cmd->add_option("--times", times, "iterations");
  serre_cmd->add_option("--genus", serre_genus, "curve genus");
  serre_cmd->add_flag("--show-matrix", serre_show_matrix,
                      "print the 4x4 class automorphism");

  // dual
  std::string d_class, d_matrix, d_desc;
  double d_theta = 0;
  auto* dual_cmd = app.add_subcommand("dual", "derived-dual transport");
  dual_cmd->add_option("--class", d_class, "triple class");
  dual_cmd->add_option("--matrix", d_matrix, "curve charge matrix");
  dual_cmd->add_option("--theta", d_theta, "heart parameter");
  dual_cmd->add_option("--descriptor", d_desc, "glued descriptor JSON");

  // hn-triangle
  std::string hn_x, hn_desc;
  auto* hn_cmd = app.add_subcommand(
      "hn-triangle", "filtration of an embedded class through the triangle");
  hn_cmd->add_option("--x", hn_x, "curve class [r,d]")->required();
  hn_cmd->add_option("--descriptor", hn_desc, "stability descriptor JSON")
      ->required();

  // audit
  std::string audit_profile;
  auto* audit_cmd =
      app.add_subcommand("audit", "phase-constraint audit of a profile");
  audit_cmd->add_option("--profile", audit_profile, "profile JSON")->required();

  // region
  std::string rg_element, rg_rho, rg_rho_i, rg_rho_j, rg_m1, rg_m2;
  auto* region_cmd =
      app.add_subcommand("region", "region predicates and the delta function");
  region_cmd->add_option("--element", rg_element, "lifted element JSON");
  region_cmd->add_option("--rho", rg_rho, "rho point JSON");
  region_cmd->add_option("--rho-i", rg_rho_i, "first rho point");
  region_cmd->add_option("--rho-j", rg_rho_j, "second rho point");
  region_cmd->add_option("--m1", rg_m1, "first matrix");
  region_cmd->add_option("--m2", rg_m2, "second matrix");

  // trace
  std::string tr_start, tr_end;
  int tr_samples = 64;
  auto* trace_cmd =
      app.add_subcommand("trace", "wall events along a descriptor segment");
  trace_cmd->add_option("--start", tr_start, "start descriptor JSON")
      ->required();
  trace_cmd->add_option("--end", tr_end, "end descriptor JSON")->required();
  trace_cmd->add_option("--samples", tr_samples, "sample count");

  // oracle-hn
  std::string or_rep, or_charge;
  auto* ohn_cmd = app.add_subcommand(
      "oracle-hn", "greedy filtration of a quiver representation");
  ohn_cmd->add_option("--rep", or_rep, "representation JSON")->required();
  ohn_cmd->add_option("--charge", or_charge, "dimension charge JSON")
      ->required();

  // oracle-torsion
  int ot_p = 2;
  std::string ot_dims = "[2,2]", ot_alpha = "0", ot_charge;
  auto* ot_cmd = app.add_subcommand(
      "oracle-torsion", "truncation torsion pair with axiom verification");
  ot_cmd->add_option("--p", ot_p, "field characteristic");
  ot_cmd->add_option("--dims", ot_dims, "[n1,n2]");
  ot_cmd->add_option("--alpha", ot_alpha, "slope threshold (rational)");
  ot_cmd->add_option("--charge", ot_charge, "dimension charge JSON")
      ->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*classify_cmd) {
      do_classify(ctx, matrix, rho_i, rho_j, f0);
    } else if (*glue_cmd) {
      do_glue_check(ctx, sod, rA, rB, optA->count() > 0, jr1, jr2, g1, g2, s_a);
    } else if (*charge_cmd) {
      do_charge_eval(ctx, mu, ce_matrix, ce_glued, ce_gamma, weak, ce_class);
    } else if (*support_cmd) {
      if (samples > 0)
        do_support_scan(ctx, regime, samples, seed);
      else
        do_support_check(ctx,
                         parse_regime(regime, sc_matrix, sc_m2, sc_abc, genus));
    } else if (*bounds_cmd) {
      Rat alpha;
      const bool has_alpha = !b_alpha.empty();
      if (has_alpha) alpha = rat_from_json(json(b_alpha));
      do_bounds(ctx, b_abc, has_alpha, alpha, b_class);
    } else if (*serre_cmd) {
      if (!serre_show_matrix && serre_class_arg.empty())
        throw domain_error(errc::malformed_input, "need --class");
      do_serre(ctx, serre_class_arg, times, serre_genus, serre_show_matrix);
    } else if (*dual_cmd) {
      do_dual(ctx, d_class, d_matrix, d_theta, d_desc);
    } else if (*hn_cmd) {
      do_hn_triangle(ctx, hn_x, hn_desc);
    } else if (*audit_cmd) {
      do_audit(ctx, audit_profile);
    } else if (*region_cmd) {
      do_region(ctx, rg_element, rg_rho, rg_rho_i, rg_rho_j, rg_m1, rg_m2);
    } else if (*trace_cmd) {
      do_trace(ctx, tr_start, tr_end, tr_samples);
    } else if (*ohn_cmd) {
      do_oracle_hn(ctx, or_rep, or_charge);
    } else if (*ot_cmd) {
      do_oracle_torsion(ctx, ot_p, ot_dims, ot_alpha, ot_charge);
    }
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::malformed_input ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace triples::cli
