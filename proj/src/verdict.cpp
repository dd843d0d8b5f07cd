#include "curvpinch/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "curvpinch/errors.hpp"
#include "curvpinch/topology.hpp"
#include "curvpinch/ville.hpp"

namespace curvpinch {

double m_func(double x, double delta) { return std::min(1.0 - x, x - delta); }

double f_eval(double x1, double x2, double x3, double delta) {
  const double sum = x1 + x2 + x3;
  const double sq = x1 * x1 + x2 * x2 + x3 * x3;
  const double m1 = m_func(x1, delta), m2 = m_func(x2, delta), m3 = m_func(x3, delta);
  return (5.0 / 9.0) * sum * sum - (2.0 / 3.0) * sq - (m1 * m1 + m2 * m2 + m3 * m3);
}

CornerValues corner_values(double delta) {
  CornerValues c;
  c.delta = delta;
  c.at_ddd = f_eval(delta, delta, delta, delta);
  c.at_dd1 = f_eval(delta, delta, 1.0, delta);
  c.at_d11 = f_eval(delta, 1.0, 1.0, delta);
  c.at_111 = f_eval(1.0, 1.0, 1.0, delta);
  return c;
}

Vec3 hessian_inner_eigs() {
  Mat3 h;
  h << -2, 1, 1,
        1, -2, 1,
        1, 1, -2;
  return symmetric_eigen3(h).first;
}

std::string vertex_name(Vertex v) {
  switch (v) {
    case Vertex::DDD: return "(delta,delta,delta)";
    case Vertex::DD1: return "(delta,delta,1)";
    case Vertex::D11: return "(delta,1,1)";
    case Vertex::V111: return "(1,1,1)";
  }
  return "?";
}

EMinimum min_over_E(double delta) {
  const CornerValues c = corner_values(delta);
  EMinimum m{c.at_ddd, Vertex::DDD};
  if (c.at_dd1 < m.min_value) m = {c.at_dd1, Vertex::DD1};
  if (c.at_d11 < m.min_value) m = {c.at_d11, Vertex::D11};
  if (c.at_111 < m.min_value) m = {c.at_111, Vertex::V111};
  return m;
}

GridMinimum grid_min_over_E(double delta, int n) {
  n = std::max(n, 2);
  GridMinimum g;
  g.min_value = std::numeric_limits<double>::infinity();
  const double h = (1.0 - delta) / (n - 1);
  auto node = [&](int i) { return i == n - 1 ? 1.0 : delta + h * i; };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        const double x1 = node(i), x2 = node(j), x3 = node(k);
        const double v = f_eval(x1, x2, x3, delta);
        ++g.points;
        if (v < g.min_value) {
          g.min_value = v;
          g.argmin = Vec3(x1, x2, x3);
        }
      }
  return g;
}

double critical_delta_closed_form() { return (3.0 * std::sqrt(3.0) - 5.0) / 4.0; }

CriticalDelta critical_delta() {
  // The four vertex values are increasing in delta on [0, 1].
  double lo = 0.0, hi = 1.0;
  CriticalDelta out;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (min_over_E(mid).min_value >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++out.iterations;
  }
  out.numeric = hi;
  out.closed_form = critical_delta_closed_form();
  return out;
}

TheoremVerdict theorem1_verdict(const CurvatureDecomposition& dec, const PinchingReport& scan,
                                double tol) {
  const double k1_closed = k1perp_closed_form(dec);
  if (std::abs(scan.k1perp - k1_closed) > 1e3 * tol * std::max(1.0, std::abs(k1_closed))) {
    std::ostringstream os;
    os << "scan K1perp " << scan.k1perp << " disagrees with decomposition " << k1_closed;
    throw InconsistentInputs(os.str());
  }

  TheoremVerdict v;
  v.theorem = Theorem::One;
  v.computed_threshold = critical_delta_closed_form();
  v.margin = scan.k_min - v.computed_threshold;

  const double wm = std::sqrt(dec.wminus_sq());
  const double wp = std::sqrt(dec.wplus_sq());
  CurvatureDecomposition d = dec;
  std::ostringstream notes;
  if (wm > tol && wp <= tol) {
    d = dec.flipped();
    v.orientation_flipped = true;
    notes << "W+ = 0: orientation reversed so that W- = 0 (signature integrand negated). ";
  }
  const bool half_flat = wm <= tol || wp <= tol;
  const bool upper_ok = scan.k_max <= 1.0 + tol;
  const bool lower_ok = scan.k_min >= v.computed_threshold - tol;
  if (!half_flat) notes << "not half-conformally flat (|W+| = " << wp << ", |W-| = " << wm << "). ";
  if (!upper_ok) notes << "k_max = " << scan.k_max << " > 1. ";
  if (!lower_ok) notes << "k_min = " << scan.k_min << " < (3sqrt3-5)/4. ";

  v.hypotheses_hold = half_flat && upper_ok && lower_ok;
  if (v.hypotheses_hold) {
    v.claim_text = "topologically S4 or CP2";
    const double delta = std::min(scan.k_min, 1.0);
    const VilleData vd = ville_data(d, delta);
    v.fg_half = 0.5 * fg_value(d);
    v.f_at_v = f_eval(vd.v[0], vd.v[1], vd.v[2], delta);
    v.chain_upper_holds = *v.fg_half >= *v.f_at_v - tol;
    v.chain_lower_holds = *v.f_at_v >= -tol;
    if (!*v.chain_lower_holds) {
      notes << "f(v) = " << *v.f_at_v << " < 0 although the vertex values are nonnegative. ";
    }
  }
  v.notes = notes.str();
  return v;
}

double theorem2_threshold(double s, double lambda1) {
  if (!(s > 0.0) || !(lambda1 > 0.0)) {
    throw NonPositiveInput("theorem2_threshold needs s > 0 and lambda1 > 0");
  }
  return s * s / (24.0 * (3.0 * lambda1 + s));
}

double discriminant(double lambda1, double s, double k1perp, double a, double b) {
  return (4.0 / 9.0) * a * b * (-72.0 * lambda1 * k1perp + s * s - 24.0 * k1perp * s);
}

double p_quadratic(double t, Regime regime, double lambda1, double s, double k1perp, double a,
                   double b) {
  const double c = (s - 12.0 * k1perp) / 3.0;
  const double base = lambda1 + 4.0 * k1perp;
  const double lead_a = regime == Regime::A ? base - c : base + c;
  const double lead_b = regime == Regime::A ? base + c : base - c;
  return lead_a * a - 2.0 * lambda1 * std::sqrt(a * b) * t + lead_b * b * t * t;
}

TheoremVerdict theorem2_verdict(const CurvatureDecomposition& d, const PinchingReport& scan,
                                double lambda1, double tol) {
  if (!(d.s > 0.0)) {
    throw NonPositiveScalarCurvature("s = " + std::to_string(d.s));
  }
  if (!(lambda1 > 0.0)) throw NonPositiveInput("lambda1 must be positive");
  TheoremVerdict v;
  v.theorem = Theorem::Two;
  v.computed_threshold = theorem2_threshold(d.s, lambda1);
  v.margin = scan.k1perp - v.computed_threshold;
  v.hypotheses_hold = v.margin >= -tol;
  std::ostringstream notes;
  notes << "pointwise hypothesis with supplied lambda1 = " << lambda1 << ". ";
  if (v.hypotheses_hold) {
    v.claim_text =
        "intersection form definite; if simply connected, homeomorphic to a connected sum of "
        "b2 copies of CP2 (b2 > 0) or to S4 (b2 = 0)";
  } else {
    notes << "K1perp = " << scan.k1perp << " < " << v.computed_threshold << ". ";
  }
  v.notes = notes.str();
  return v;
}

}  // namespace curvpinch
