#include "curvpinch/planescan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

#include "curvpinch/errors.hpp"
#include "curvpinch/sampling.hpp"

namespace curvpinch {

double sectional(const CurvatureOperator& op, const Plane2& p) {
  return op.apply(p.form(), p.form());
}

double sectional(const RiemannTensor& r, const Plane2& p) {
  return sectional(operator_from_tensor(r), p);
}

double biorthogonal(const CurvatureOperator& op, const Plane2& p) {
  const Form2 c = p.complement_form();
  return 0.5 * (op.apply(p.form(), p.form()) + op.apply(c, c));
}

double biorthogonal(const RiemannTensor& r, const Plane2& p) {
  return biorthogonal(operator_from_tensor(r), p);
}

double k1perp_closed_form(const CurvatureDecomposition& d) {
  return 0.5 * (d.wp_eigs[0] + d.wm_eigs[0]) + d.s / 12.0;
}

double k3perp_closed_form(const CurvatureDecomposition& d) {
  return 0.5 * (d.wp_eigs[2] + d.wm_eigs[2]) + d.s / 12.0;
}

namespace {

using Point4 = std::array<double, 4>;

std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> pts;
  pts.reserve(n);
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    pts.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
  }
  return pts;
}

// Orthonormal pair spanning the tangent plane of S^2 at v.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& v) {
  const Vec3 seed = std::abs(v[0]) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 t1 = (seed - seed.dot(v) * v).normalized();
  return {t1, v.cross(t1)};
}

// Objective on S^2 x S^2 in the SD/ASD coordinates of the operator:
// with P = (h, k)/sqrt2, <M P, P> = (h.Ah + 2 h.Bk + k.Ck)/2 and the
// complement (h, -k)/sqrt2 flips the sign of the cross term.
struct PlaneObjective {
  Mat3 a, b, c;
  bool biorthogonal = false;
  double sign = 1.0;

  double operator()(const Vec3& h, const Vec3& k) const {
    const double diag = 0.5 * (h.dot(a * h) + k.dot(c * k));
    const double val = biorthogonal ? diag : diag + h.dot(b * k);
    return sign * val;
  }
};

struct Candidate {
  double value;
  Vec3 h, k;
};

// Minimise f over S^2 x S^2 near (h0, k0) with Nelder-Mead in a local chart
// (h0 + x0 t1 + x1 t2, k0 + x2 s1 + x3 s2), renormalised.
Candidate refine(const PlaneObjective& f, const Vec3& h0, const Vec3& k0, double step,
                 int max_iters) {
  Vec3 hc = h0, kc = k0;
  Candidate best{f(h0, k0), h0, k0};
  int iters_left = max_iters;

  while (iters_left > 0) {
    const auto [t1, t2] = tangent_basis(hc);
    const auto [s1, s2] = tangent_basis(kc);
    auto chart = [&](const Point4& x) {
      const Vec3 h = (hc + x[0] * t1 + x[1] * t2).normalized();
      const Vec3 k = (kc + x[2] * s1 + x[3] * s2).normalized();
      return std::pair<Vec3, Vec3>{h, k};
    };
    auto eval = [&](const Point4& x) {
      auto [h, k] = chart(x);
      return f(h, k);
    };

    std::array<Point4, 5> simplex{};
    std::array<double, 5> vals{};
    for (int i = 1; i < 5; ++i) simplex[i][i - 1] = step;
    for (int i = 0; i < 5; ++i) vals[i] = eval(simplex[i]);

    int it = 0;
    for (; it < iters_left; ++it) {
      std::array<int, 5> order;
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int x, int y) { return vals[x] < vals[y]; });
      std::array<Point4, 5> s2x;
      std::array<double, 5> v2x;
      for (int i = 0; i < 5; ++i) {
        s2x[i] = simplex[order[i]];
        v2x[i] = vals[order[i]];
      }
      simplex = s2x;
      vals = v2x;

      double size = 0.0;
      for (int i = 1; i < 5; ++i)
        for (int d = 0; d < 4; ++d) size = std::max(size, std::abs(simplex[i][d] - simplex[0][d]));
      if (size < 1e-10 || vals[4] - vals[0] < 1e-16 * (1.0 + std::abs(vals[0]))) break;

      Point4 centroid{};
      for (int i = 0; i < 4; ++i)
        for (int d = 0; d < 4; ++d) centroid[d] += simplex[i][d] / 4.0;
      auto along = [&](double t) {
        Point4 p;
        for (int d = 0; d < 4; ++d) p[d] = centroid[d] + t * (simplex[4][d] - centroid[d]);
        return p;
      };

      const Point4 xr = along(-1.0);
      const double fr = eval(xr);
      if (fr < vals[0]) {
        const Point4 xe = along(-2.0);
        const double fe = eval(xe);
        if (fe < fr) {
          simplex[4] = xe;
          vals[4] = fe;
        } else {
          simplex[4] = xr;
          vals[4] = fr;
        }
      } else if (fr < vals[3]) {
        simplex[4] = xr;
        vals[4] = fr;
      } else {
        const bool outside = fr < vals[4];
        const Point4 xc = along(outside ? -0.5 : 0.5);
        const double fc = eval(xc);
        if (fc < (outside ? fr : vals[4])) {
          simplex[4] = xc;
          vals[4] = fc;
        } else {
          for (int i = 1; i < 5; ++i) {
            for (int d = 0; d < 4; ++d)
              simplex[i][d] = simplex[0][d] + 0.5 * (simplex[i][d] - simplex[0][d]);
            vals[i] = eval(simplex[i]);
          }
        }
      }
    }
    iters_left -= std::max(it, 1);

    const int ib = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    auto [hb, kb] = chart(simplex[ib]);
    const bool improved = vals[ib] < best.value;
    if (improved) best = {vals[ib], hb, kb};
    // Recentre the chart on the incumbent and restart with a smaller simplex.
    hc = best.h;
    kc = best.k;
    step *= 0.1;
    if (step < 1e-9) break;
  }
  return best;
}

Candidate optimise(const PlaneObjective& f, const std::vector<Vec3>& sphere,
                   const ScanBudget& budget) {
  const int n = static_cast<int>(sphere.size());
  std::vector<double> vals(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vals[i * n + j] = f(sphere[i], sphere[j]);

  std::vector<int> idx(vals.size());
  std::iota(idx.begin(), idx.end(), 0);
  const int keep = std::min<int>(budget.top_cells, static_cast<int>(idx.size()));
  std::partial_sort(idx.begin(), idx.begin() + keep, idx.end(),
                    [&](int x, int y) { return vals[x] < vals[y] || (vals[x] == vals[y] && x < y); });

  const double spacing = std::sqrt(4.0 * M_PI / n);
  Candidate best{vals[idx[0]], sphere[idx[0] / n], sphere[idx[0] % n]};
  for (int c = 0; c < keep; ++c) {
    const int id = idx[c];
    const Candidate cand = refine(f, sphere[id / n], sphere[id % n], 0.5 * spacing,
                                  budget.refine_steps);
    if (cand.value < best.value) best = cand;
  }
  return best;
}

Plane2 plane_of(const Candidate& c) {
  return plane_from_sd_asd(from_sd_coords(c.h.normalized()), from_asd_coords(c.k.normalized()));
}

}  // namespace

PinchingReport scan_extremes(const RiemannTensor& r, const ScanBudget& budget) {
  if (budget.grid < ScanBudget::kMinGrid || budget.top_cells < ScanBudget::kMinTopCells ||
      budget.refine_steps < ScanBudget::kMinRefineSteps) {
    std::ostringstream os;
    os << "budget (grid " << budget.grid << ", top " << budget.top_cells << ", steps "
       << budget.refine_steps << ") below floor (grid " << ScanBudget::kMinGrid << ", top "
       << ScanBudget::kMinTopCells << ", steps " << ScanBudget::kMinRefineSteps << ")";
    throw BudgetTooSmall(os.str());
  }
  const CurvatureOperator op = operator_from_tensor(r);
  const Mat6& basis = sd_asd_basis();
  const Mat6 q = basis.transpose() * op.matrix * basis;

  PlaneObjective f;
  f.a = q.topLeftCorner<3, 3>();
  f.b = q.topRightCorner<3, 3>();
  f.c = q.bottomRightCorner<3, 3>();

  const auto sphere = fibonacci_sphere(budget.grid);
  PinchingReport rep;
  rep.budget = budget;

  auto run = [&](bool perp, double sign) {
    PlaneObjective g = f;
    g.biorthogonal = perp;
    g.sign = sign;
    return optimise(g, sphere, budget);
  };

  const Candidate kmin = run(false, 1.0);
  const Candidate kmax = run(false, -1.0);
  const Candidate pmin = run(true, 1.0);
  const Candidate pmax = run(true, -1.0);

  rep.argmin = plane_of(kmin);
  rep.argmax = plane_of(kmax);
  rep.argmin_perp = plane_of(pmin);
  rep.argmax_perp = plane_of(pmax);
  // Report values re-evaluated through the operator on the returned planes.
  rep.k_min = sectional(op, rep.argmin);
  rep.k_max = sectional(op, rep.argmax);
  rep.k1perp = biorthogonal(op, rep.argmin_perp);
  rep.k3perp = biorthogonal(op, rep.argmax_perp);
  if (rep.k_max > 0.0) rep.delta = rep.k_min / rep.k_max;
  return rep;
}

CheckReport seaman_check(const RiemannTensor& r, int n_frames, std::uint64_t seed, double tol) {
  const CurvatureDecomposition d = decompose(r);
  const CurvatureOperator op = operator_from_tensor(r);
  const double bound = (2.0 / 3.0) * (k3perp_closed_form(d) - k1perp_closed_form(d));

  CheckReport rep;
  rep.name = "seaman";
  rep.tol = tol;
  Rng rng(seed);
  for (int n = 0; n < n_frames; ++n) {
    const Frame4 fr = random_frame(rng);
    const double mixed =
        std::abs(op.apply(wedge(fr[0], fr[1]), wedge(fr[2], fr[3])));
    rep.record(mixed, bound);
    if (bound > 0.0) {
      rep.record_ratio(mixed / bound);
    } else if (mixed > tol) {
      rep.record_ratio(std::numeric_limits<double>::infinity());
    }
  }
  return rep;
}

}  // namespace curvpinch
