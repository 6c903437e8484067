#include "frcc/connection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frcc {

void validate_params(const NearnessParams& p) {
  if (!(p.alpha >= 0.0) || !(p.beta >= 0.0) || !std::isfinite(p.alpha) ||
      !std::isfinite(p.beta)) {
    throw std::invalid_argument("nearness parameters must be finite and >= 0");
  }
}

double nearness_value(const NearnessParams& p, double d) {
  if (d <= p.alpha) return 1.0;
  if (d > p.alpha + p.beta) return 0.0;
  return (p.alpha + p.beta - d) / p.beta;  // beta > 0 on this branch
}

Grade nearness(const NearnessParams& p, double d) {
  return Grade(nearness_value(p, d));
}

namespace {

void fill_memberships(SampledRegion& s, const FuzzyRegion& r) {
  s.memb.resize(static_cast<std::size_t>(s.rows) * s.cols);
  std::size_t k = 0;
  for (int row = 0; row < s.rows; ++row)
    for (int col = 0; col < s.cols; ++col)
      s.memb[k++] = membership_value(r, Point{s.xs[col], s.ys[row]});
}

// Exact-max double reduction over all lattice point pairs of
// T(R(d(p,q)), T(A(p), B(q))). Pairs that provably cannot exceed the
// running maximum are skipped, which leaves the exact result unchanged.
double connect_sampled(const SampledRegion& a, const SampledRegion& b,
                       const NearnessParams& np, TNormKind kind) {
  std::vector<double> row_max_b(b.rows, 0.0);
  for (int row = 0; row < b.rows; ++row) {
    double m = 0.0;
    for (int col = 0; col < b.cols; ++col) m = std::max(m, b.memb_at(row, col));
    row_max_b[row] = m;
  }

  double best = 0.0;
  for (int ra = 0; ra < a.rows; ++ra) {
    const double py = a.ys[ra];
    for (int ca = 0; ca < a.cols; ++ca) {
      const double ma = a.memb_at(ra, ca);
      if (ma <= best) continue;
      const double px = a.xs[ca];
      // A pair at distance d contributes at most R(d); beyond this radius it
      // cannot beat `best`.
      const double radius = np.beta > 0.0 ? np.alpha + (1.0 - best) * np.beta : np.alpha;
      const double radius2 = radius * radius;
      for (int rb = 0; rb < b.rows; ++rb) {
        if (row_max_b[rb] <= best) continue;
        const double dy = py - b.ys[rb];
        const double dy2 = dy * dy;
        if (np.beta > 0.0 ? dy2 >= radius2 : dy2 > radius2) continue;
        const std::size_t base = static_cast<std::size_t>(rb) * b.cols;
        for (int cb = 0; cb < b.cols; ++cb) {
          const double mb = b.memb[base + cb];
          if (mb <= best) continue;
          const double dx = px - b.xs[cb];
          const double d2 = dx * dx + dy2;
          if (np.beta > 0.0 ? d2 >= radius2 : d2 > radius2) continue;
          const double r = nearness_value(np, std::sqrt(d2));
          const double v = tnorm_value(kind, r, tnorm_value(kind, ma, mb));
          if (v > best) {
            best = v;
            if (best >= 1.0) return 1.0;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

SampledRegion SampledRegion::corners(const FuzzyRegion& r, int dd) {
  if (dd < 1) throw std::invalid_argument("sampling: dd must be >= 1");
  const BoundingBox bb = bounding_box(r.core);
  SampledRegion s;
  s.rows = s.cols = dd;
  s.xs.resize(dd);
  s.ys.resize(dd);
  for (int i = 0; i < dd; ++i) {
    s.xs[i] = bb.min_x + bb.width() * i / dd;
    s.ys[i] = bb.min_y + bb.height() * i / dd;
  }
  fill_memberships(s, r);
  return s;
}

SampledRegion SampledRegion::centers_inflated(const FuzzyRegion& r, int dd) {
  if (dd < 1) throw std::invalid_argument("sampling: dd must be >= 1");
  BoundingBox bb = bounding_box(r.core);
  bb.min_x -= r.support_radius;
  bb.min_y -= r.support_radius;
  bb.max_x += r.support_radius;
  bb.max_y += r.support_radius;
  SampledRegion s;
  s.rows = s.cols = dd;
  s.xs.resize(dd);
  s.ys.resize(dd);
  for (int i = 0; i < dd; ++i) {
    s.xs[i] = bb.min_x + bb.width() * (i + 0.5) / dd;
    s.ys[i] = bb.min_y + bb.height() * (i + 0.5) / dd;
  }
  fill_memberships(s, r);
  return s;
}

Grade connect_grid(const FuzzyRegion& a, const FuzzyRegion& b, const ConnectionConfig& cfg) {
  if (is_empty(a.core) || is_empty(b.core)) return Grade(0.0);
  validate_region(a);
  validate_region(b);
  validate_params(cfg.params);
  const SampledRegion sa = SampledRegion::corners(a, cfg.dd);
  const SampledRegion sb = SampledRegion::corners(b, cfg.dd);
  return Grade(connect_sampled(sa, sb, cfg.params, cfg.tnorm));
}

Grade connect_oracle(const FuzzyRegion& a, const FuzzyRegion& b, const NearnessParams& params,
                     TNormKind tnorm, int dd_fine) {
  if (is_empty(a.core) || is_empty(b.core)) return Grade(0.0);
  validate_region(a);
  validate_region(b);
  validate_params(params);
  const SampledRegion sa = SampledRegion::centers_inflated(a, dd_fine);
  const SampledRegion sb = SampledRegion::centers_inflated(b, dd_fine);
  return Grade(connect_sampled(sa, sb, params, tnorm));
}

double near_region_value(const FuzzyRegion& r, const Point& p, const NearnessParams& params,
                         TNormKind kind) {
  const double d = distance_point_geometry(p, r.core);
  if (d <= 0.0) return 1.0;
  const double sr = r.support_radius;
  if (sr == 0.0) return nearness_value(params, d);
  const double reach = params.alpha + params.beta;
  if (d >= reach + sr) return 0.0;

  // Feasible witnesses q satisfy d(p,q) + d(q,core) >= d, with equality
  // attained along the shortest path, so the supremum is over
  // h(t) = T(R(t), clamp(1 - (d - t)/sr)) for t in [0, d]. h is piecewise
  // linear except for the product t-norm's interior parabola; evaluating at
  // the breakpoints and interior optima is exact.
  const double candidates[7] = {
      0.0,
      d,
      params.alpha,
      reach,
      d - sr,
      0.5 * (d - sr + reach),                                 // product vertex
      (sr * params.alpha + params.beta * d) / (sr + params.beta),  // min crossing
  };
  double best = 0.0;
  for (double t : candidates) {
    t = std::clamp(t, 0.0, d);
    const double b = std::clamp(1.0 - (d - t) / sr, 0.0, 1.0);
    best = std::max(best, tnorm_value(kind, nearness_value(params, t), b));
  }
  return best;
}

}  // namespace frcc
