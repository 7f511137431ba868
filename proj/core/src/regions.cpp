#include "triples/regions.hpp"

#include <algorithm>
#include <cmath>

namespace triples {

namespace {

constexpr double kPi = M_PI;

bool known_stable(const PhaseProfile& p, int i) {
  return p.flag[i] == StabFlag::stable;
}

void require_lt(std::vector<Violation>& out, const PhaseProfile& p, int i,
                int j, double off, const char* rule) {
  if (!p.phi[i] || !p.phi[j]) return;
  if (!(*p.phi[i] < *p.phi[j] + off)) out.push_back({rule, "phase order"});
}

}  // namespace

std::vector<Violation> audit(const PhaseProfile& p) {
  std::vector<Violation> out;

  // Morphism constraints among stable pairs of skyscraper images.
  if (known_stable(p, 0) && known_stable(p, 2) && known_stable(p, 4)) {
    require_lt(out, p, 2, 4, 0, "phi2 < phi4");
    require_lt(out, p, 4, 0, 0, "phi4 < phi0");
    require_lt(out, p, 0, 2, 1, "phi0 < phi2 + 1");
  }
  // Structure-sheaf images.
  if (known_stable(p, 1) && known_stable(p, 3) && known_stable(p, 5)) {
    require_lt(out, p, 3, 5, 0, "phi3 < phi5");
    require_lt(out, p, 5, 1, 0, "phi5 < phi1");
    require_lt(out, p, 1, 3, 1, "phi1 < phi3 + 1");
  }
  // Cross constraints inside each embedding and across the j-pair.
  if (known_stable(p, 1) && known_stable(p, 3))
    require_lt(out, p, 1, 3, 1, "phi1 < phi3 + 1");
  if (known_stable(p, 0) && known_stable(p, 1)) {
    require_lt(out, p, 1, 0, 0, "phi1 < phi0");
    require_lt(out, p, 0, 1, 1, "phi0 < phi1 + 1");
  }
  if (known_stable(p, 2) && known_stable(p, 3)) {
    require_lt(out, p, 3, 2, 0, "phi3 < phi2");
    require_lt(out, p, 2, 3, 1, "phi2 < phi3 + 1");
  }

  // Instability implications from the filtration triangle.
  if (p.flag[0] == StabFlag::unstable && p.phi[4] && p.phi[2]) {
    if (!(*p.phi[4] > *p.phi[2] + 1))
      out.push_back({"i unstable => phi4 > phi2 + 1", "phase order"});
  }
  if (p.flag[4] == StabFlag::unstable && p.phi[2] && p.phi[0]) {
    if (!(*p.phi[2] > *p.phi[0]))
      out.push_back({"l unstable => phi2 > phi0", "phase order"});
  }

  // At least two of the three embeddings carry full stable flags.
  bool all_known = true;
  for (int i = 0; i < 6; ++i)
    if (p.flag[i] == StabFlag::unknown) all_known = false;
  if (all_known) {
    auto pair_stable = [&](int a, int b) {
      return known_stable(p, a) && known_stable(p, a + 1) &&
             known_stable(p, b) && known_stable(p, b + 1);
    };
    const bool t12 = pair_stable(0, 2), t23 = pair_stable(2, 4),
               t31 = pair_stable(0, 4);
    if (!t12 && !t23 && !t31)
      out.push_back({"membership in Theta12 u Theta23 u Theta31",
                     "no fully stable embedding pair"});
  }
  return out;
}

bool in_P12(const RhoPoint& rho_i, const RhoPoint& rho_j, const Matrix2& M1,
            const Matrix2& M2) {
  if (!(rho_i.phi0 < rho_j.phi0 + 1)) return false;
  if (!(rho_i.phi1 < rho_j.phi1 + 1)) return false;
  if (rho_i.phi0 > rho_j.phi0) return (M1 + M2).det() > 0;
  return true;
}

bool in_L12(const LiftedElement& g) {
  const double f0 = lift_at_zero(g);
  if (!(f0 > -1)) return false;
  if (!(inverse_lift(g, 0.5) < 1.5)) return false;
  if (f0 < 0) {
    const Matrix2 M = g.T.inverse();
    return (M + Matrix2::identity()).det() > 0;
  }
  return true;
}

double delta(const RhoPoint& p) {
  return p.m0 * p.m1 * std::sin((p.phi0 - p.phi1) * kPi) -
         p.m0 * std::cos(p.phi0 * kPi) + p.m1 * std::sin(p.phi1 * kPi);
}

bool in_Y(const RhoPoint& p) {
  if (!(p.m0 > 0 && p.m1 > 0)) return false;
  if (!(p.phi0 < 2)) return false;
  if (!(p.phi1 < 1.5)) return false;
  if (!(p.phi1 < p.phi0 && p.phi0 < p.phi1 + 1)) return false;
  if (p.phi0 >= 1 && p.phi1 > 0) return delta(p) > -1;
  return true;
}

// ---------------------------------------------------------------------------
// Path tracing

namespace {

struct PhaseState {
  double t;
  // phi0, phi1, phi4, phi5, f0 of the first constituent; phi2 = 1 and
  // phi3 = 1/2 are pinned by the sigma_mu factor.
  std::array<double, 5> v;

  double phase(int idx) const {
    switch (idx) {
      case 0: return v[0];
      case 1: return v[1];
      case 2: return 1.0;
      case 3: return 0.5;
      case 4: return v[2];
      case 5: return v[3];
    }
    return 0;
  }
  double f0() const { return v[4]; }
};

struct Tracker {
  Matrix2 A1, B1;  // endpoint first-constituent matrices

  Matrix2 m1_at(const Rat& t) const {
    const Rat s = 1 - t;
    return {s * A1.a + t * B1.a, s * A1.b + t * B1.b, s * A1.c + t * B1.c,
            s * A1.d + t * B1.d};
  }

  // Directions whose tracked angles give the five values, at parameter t.
  std::array<std::array<double, 2>, 5> dirs(double t) const {
    const Matrix2 M = m1_at(rat_from_double(t));
    const double a = to_double(M.a), b = to_double(M.b), c = to_double(M.c),
                 d = to_double(M.d);
    return {{{-a, -c},          // charge of the i-skyscraper class
             {b, d},            // i-structure
             {-(a + 1), -c},    // l-skyscraper, matrix M + I
             {b, d + 1},        // l-structure
             {d, -c}}};         // first column direction of M^{-1}
  }

  // Advance by continuous angle tracking, halving steps that rotate fast.
  PhaseState advance(const PhaseState& from, double t_target, int depth = 0) const {
    const auto d0 = dirs(from.t);
    const auto d1 = dirs(t_target);
    std::array<double, 5> inc{};
    bool too_fast = false;
    for (int i = 0; i < 5; ++i) {
      const double a0 = std::atan2(d0[i][1], d0[i][0]);
      const double a1 = std::atan2(d1[i][1], d1[i][0]);
      double da = a1 - a0;
      while (da > kPi) da -= 2 * kPi;
      while (da <= -kPi) da += 2 * kPi;
      if (std::abs(da) > kPi / 2) too_fast = true;
      inc[i] = da / kPi;
    }
    if (too_fast && depth < 48) {
      const double mid = 0.5 * (from.t + t_target);
      return advance(advance(from, mid, depth + 1), t_target, depth + 1);
    }
    PhaseState out;
    out.t = t_target;
    for (int i = 0; i < 5; ++i) out.v[i] = from.v[i] + inc[i];
    return out;
  }
};

struct WallFn {
  std::string name;
  bool algebraic;
  int i, j, c;          // phase wall phi_i - phi_j - c
  int alg_kind;         // 0 disc, 1 trace, 2 trace+2, 3 det(M+I)
};

Rat alg_value(const Matrix2& M, int kind) {
  switch (kind) {
    case 0: return M.trace() * M.trace() - 4 * M.det();
    case 1: return M.trace();
    case 2: return M.trace() + 2;
    case 3: return M.det() + M.trace() + 1;
  }
  return 0;
}

std::string classify_side(const Tracker& trk, double t, double f0) {
  try {
    const Verdict v = trichotomy({trk.m1_at(rat_from_double(t)), f0});
    return region_name(v.tag);
  } catch (const domain_error& e) {
    return errc_name(e.code());
  }
}

}  // namespace

std::vector<WallEvent> trace_path(const StabDescriptor& a,
                                  const StabDescriptor& b, int samples) {
  for (const StabDescriptor* d : {&a, &b}) {
    if (d->data.sod != Sod::s12 || !(d->data.Z2 == CurveCharge::mu()) ||
        d->data.branch2 != 0)
      throw domain_error(errc::shape_violation,
                         "trace_path needs normalized 12-shape endpoints");
  }
  if (samples < 1)
    throw domain_error(errc::malformed_input, "samples must be positive");

  Tracker trk{a.data.Z1.M, b.data.Z1.M};

  // Degeneracy scan, exact.
  for (int k = 0; k <= samples; ++k) {
    const Rat t(k, samples);
    if (trk.m1_at(t).det() <= 0)
      throw domain_error(errc::degenerate_on_path,
                         "det(M1) <= 0 at t = " + rat_str(t));
  }

  // Initial phases from the start descriptor's branch conventions.
  const LiftedElement e1 = first_element(a.data);
  PhaseState st;
  st.t = 0.0;
  st.v[0] = inverse_lift(e1, 1.0);
  st.v[1] = inverse_lift(e1, 0.5);
  {
    const CurveCharge Z3{a.data.Z1.M + Matrix2::identity()};
    if (Z3.M.det() <= 0)
      throw domain_error(errc::degenerate_on_path,
                         "l-factor charge degenerate at the start point");
    LiftedElement e3 = element_from_charge(Z3, 0);
    const double lo = lift_at_zero(e1);
    const double v0 = lift_at_zero(e3);
    long long m = static_cast<long long>(std::ceil((lo - v0) / 2.0));
    if (2.0 * m + v0 >= lo + 2.0) --m;
    if (2.0 * m + v0 < lo) ++m;
    e3.branch = m;
    st.v[2] = inverse_lift(e3, 1.0);
    st.v[3] = inverse_lift(e3, 0.5);
  }
  st.v[4] = lift_at_zero(e1);

  std::vector<PhaseState> states{st};
  for (int k = 1; k <= samples; ++k)
    states.push_back(trk.advance(states.back(), double(k) / samples));

  // Wall function list.
  std::vector<WallFn> walls;
  walls.push_back({"disc", true, 0, 0, 0, 0});
  walls.push_back({"trace", true, 0, 0, 0, 1});
  walls.push_back({"trace+2", true, 0, 0, 0, 2});
  walls.push_back({"det(M+I)", true, 0, 0, 0, 3});
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      if (i < j)
        walls.push_back({"phi" + std::to_string(i) + "=phi" +
                             std::to_string(j),
                         false, i, j, 0, 0});
      walls.push_back({"phi" + std::to_string(i) + "=phi" +
                           std::to_string(j) + "+1",
                       false, i, j, 1, 0});
    }

  auto phase_wall_value = [&](const WallFn& w, const PhaseState& s) {
    return s.phase(w.i) - s.phase(w.j) - w.c;
  };

  std::vector<WallEvent> events;
  for (const WallFn& w : walls) {
    for (int k = 0; k < samples; ++k) {
      double t_ev = -1;
      if (w.algebraic) {
        Rat lo(k, samples), hi(k + 1, samples);
        Rat vlo = alg_value(trk.m1_at(lo), w.alg_kind);
        Rat vhi = alg_value(trk.m1_at(hi), w.alg_kind);
        if (vlo == 0) {
          // A sample sitting on the wall counts only when the path crosses.
          if (k > 0 &&
              sign(alg_value(trk.m1_at(Rat(k - 1, samples)), w.alg_kind)) *
                      sign(vhi) <
                  0)
            t_ev = to_double(lo);
        } else if (sign(vlo) * sign(vhi) < 0) {
          while (to_double(hi - lo) > 1e-9) {
            const Rat mid = (lo + hi) / 2;
            const Rat vm = alg_value(trk.m1_at(mid), w.alg_kind);
            if (vm == 0) {
              lo = hi = mid;
              break;
            }
            if (sign(vm) == sign(vlo))
              lo = mid, vlo = vm;
            else
              hi = mid;
          }
          t_ev = to_double((lo + hi) / 2);
        }
      } else {
        double vlo = phase_wall_value(w, states[k]);
        double vhi = phase_wall_value(w, states[k + 1]);
        if (vlo == 0) {
          if (k > 0 && phase_wall_value(w, states[k - 1]) * vhi < 0)
            t_ev = states[k].t;
        } else if (vlo * vhi < 0) {
          PhaseState left = states[k];
          double hi_t = states[k + 1].t;
          while (hi_t - left.t > 1e-9) {
            const double mid = 0.5 * (left.t + hi_t);
            const PhaseState mid_state = trk.advance(left, mid);
            const double vm = phase_wall_value(w, mid_state);
            if (vm == 0) {
              left = mid_state;
              hi_t = mid;
              break;
            }
            if (vm * vlo > 0) {
              left = mid_state;
              vlo = vm;
            } else {
              hi_t = mid;
            }
          }
          t_ev = 0.5 * (left.t + hi_t);
        }
      }
      if (t_ev >= 0) {
        const double h = std::max(1e-7, 1.0 / samples / 4.0);
        const double tl = std::max(0.0, t_ev - h);
        const double tr = std::min(1.0, t_ev + h);
        const double f0l = trk.advance(states[k], tl).f0();
        const double f0r = trk.advance(states[k], tr).f0();
        events.push_back({t_ev, w.name, classify_side(trk, tl, f0l),
                          classify_side(trk, tr, f0r)});
      }
    }
  }
  std::sort(events.begin(), events.end(), [](const WallEvent& x,
                                             const WallEvent& y) {
    if (x.t != y.t) return x.t < y.t;
    return x.wall < y.wall;
  });
  return events;
}

}  // namespace triples
