#include "frcc/rcc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace frcc {

namespace {

double overlap_sampled(const SampledRegion& sa, const FuzzyRegion& a, const FuzzyRegion& b,
                       const SampledRegion& sb, TNormKind kind) {
  double best = 0.0;
  std::size_t k = 0;
  for (int row = 0; row < sa.rows && best < 1.0; ++row)
    for (int col = 0; col < sa.cols; ++col, ++k) {
      const double ma = sa.memb[k];
      if (ma <= best) continue;
      const double v = tnorm_value(kind, ma, membership_value(b, sa.point_at(row, col)));
      if (v > best) best = v;
      if (best >= 1.0) break;
    }
  k = 0;
  for (int row = 0; row < sb.rows && best < 1.0; ++row)
    for (int col = 0; col < sb.cols; ++col, ++k) {
      const double mb = sb.memb[k];
      if (mb <= best) continue;
      const double v = tnorm_value(kind, mb, membership_value(a, sb.point_at(row, col)));
      if (v > best) best = v;
      if (best >= 1.0) break;
    }
  return best;
}

double part_of_sampled(const SampledRegion& sa, const FuzzyRegion& b,
                       const NearnessParams& params, TNormKind kind) {
  double worst = 1.0;
  std::size_t k = 0;
  for (int row = 0; row < sa.rows; ++row)
    for (int col = 0; col < sa.cols; ++col, ++k) {
      const double ma = sa.memb[k];
      if (ma <= 0.0) continue;  // vacuous: I_T(0, x) = 1
      const double near_b = near_region_value(b, sa.point_at(row, col), params, kind);
      worst = std::min(worst, residuum_value(kind, ma, near_b));
      if (worst <= 0.0) return 0.0;
    }
  return worst;
}

// Degree to which no point of a is near the complement of b's core: the
// non-tangentiality factor. A point's deepness inside b is the complement of
// the nearness of its interior depth.
double non_tangential_sampled(const SampledRegion& sa, const FuzzyRegion& b,
                              const NearnessParams& params, TNormKind kind) {
  double worst = 1.0;
  std::size_t k = 0;
  for (int row = 0; row < sa.rows; ++row)
    for (int col = 0; col < sa.cols; ++col, ++k) {
      const double ma = sa.memb[k];
      if (ma <= 0.0) continue;
      const double depth = interior_depth(b.core, sa.point_at(row, col));
      const double deep = 1.0 - nearness_value(params, depth);
      worst = std::min(worst, residuum_value(kind, ma, deep));
      if (worst <= 0.0) return 0.0;
    }
  return worst;
}

void check_inputs(const FuzzyRegion& a, const FuzzyRegion& b, const ConnectionConfig& cfg) {
  validate_region(a);
  validate_region(b);
  validate_params(cfg.params);
  if (cfg.dd < 1) throw std::invalid_argument("connection config: dd must be >= 1");
}

}  // namespace

Grade relation_component(const RelationVector& v, std::string_view name) {
  const Grade* fields[14] = {&v.c,  &v.dc,  &v.o,  &v.p,   &v.p_inv,   &v.eq,   &v.pp,
                             &v.pp_inv, &v.po, &v.ec, &v.tpp, &v.tpp_inv, &v.ntpp, &v.ntpp_inv};
  for (std::size_t i = 0; i < kRelationNames.size(); ++i)
    if (name == kRelationNames[i]) return *fields[i];
  throw std::invalid_argument("unknown relation name: " + std::string(name));
}

Grade overlap(const FuzzyRegion& a, const FuzzyRegion& b, const ConnectionConfig& cfg) {
  if (is_empty(a.core) || is_empty(b.core)) return Grade(0.0);
  check_inputs(a, b, cfg);
  const SampledRegion sa = SampledRegion::corners(a, cfg.dd);
  const SampledRegion sb = SampledRegion::corners(b, cfg.dd);
  return Grade(overlap_sampled(sa, a, b, sb, cfg.tnorm));
}

Grade part_of(const FuzzyRegion& a, const FuzzyRegion& b, const ConnectionConfig& cfg) {
  if (is_empty(a.core) || is_empty(b.core)) return Grade(0.0);
  check_inputs(a, b, cfg);
  const SampledRegion sa = SampledRegion::corners(a, cfg.dd);
  return Grade(part_of_sampled(sa, b, cfg.params, cfg.tnorm));
}

RelationVector relation_vector(const FuzzyRegion& a, const FuzzyRegion& b,
                               const ConnectionConfig& cfg) {
  if (is_empty(a.core) || is_empty(b.core)) {
    RelationVector v;
    v.dc = Grade(1.0);
    v.eq = Grade(0.0);
    return v;
  }
  check_inputs(a, b, cfg);
  const TNormKind t = cfg.tnorm;
  const SampledRegion sa = SampledRegion::corners(a, cfg.dd);
  const SampledRegion sb = SampledRegion::corners(b, cfg.dd);

  const double c = connect_grid(a, b, cfg).value();
  const double o = overlap_sampled(sa, a, b, sb, t);
  const double p = part_of_sampled(sa, b, cfg.params, t);
  const double p_inv = part_of_sampled(sb, a, cfg.params, t);
  const double nt_ab = non_tangential_sampled(sa, b, cfg.params, t);
  const double nt_ba = non_tangential_sampled(sb, a, cfg.params, t);

  const double eq = tnorm_value(t, p, p_inv);
  const double pp = tnorm_value(t, p, 1.0 - p_inv);
  const double pp_inv = tnorm_value(t, p_inv, 1.0 - p);
  const double po = tnorm_value(t, tnorm_value(t, o, 1.0 - p), 1.0 - p_inv);
  const double ec = tnorm_value(t, c, 1.0 - o);
  const double ntpp = tnorm_value(t, pp, nt_ab);
  const double ntpp_inv = tnorm_value(t, pp_inv, nt_ba);
  const double tpp = tnorm_value(t, pp, 1.0 - ntpp);
  const double tpp_inv = tnorm_value(t, pp_inv, 1.0 - ntpp_inv);

  RelationVector v;
  v.c = Grade(c);
  v.dc = Grade(1.0 - c);
  v.o = Grade(o);
  v.p = Grade(p);
  v.p_inv = Grade(p_inv);
  v.eq = Grade(eq);
  v.pp = Grade(pp);
  v.pp_inv = Grade(pp_inv);
  v.po = Grade(po);
  v.ec = Grade(ec);
  v.tpp = Grade(tpp);
  v.tpp_inv = Grade(tpp_inv);
  v.ntpp = Grade(ntpp);
  v.ntpp_inv = Grade(ntpp_inv);
  return v;
}

}  // namespace frcc
