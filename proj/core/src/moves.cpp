#include "nobeling/moves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "nobeling/errors.hpp"

namespace nobeling {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kIdentity:
      return "IDENTITY";
    case MoveKind::kPushAway:
      return "PUSH_AWAY";
    case MoveKind::kBump:
      return "BUMP";
    case MoveKind::kComposite:
      return "COMPOSITE";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Cylinder

Scalar Cylinder::diameter() const { return max(length(), 2 * radius); }

Box Cylinder::bounds() const {
  Box box{line.at(start), line.at(end)};
  for (std::size_t j = 0; j < line.dim(); ++j) {
    if (j == line.free_axis()) continue;
    box.lo[j] -= radius;
    box.hi[j] += radius;
  }
  return box;
}

Scalar Cylinder::profile(const Point& p) const {
  const Scalar& t = p[line.free_axis()];
  if (t <= start || t >= end) return 0;
  const Scalar axial = min(Scalar(1), min(t - start, end - t) / ramp);
  const Scalar rho = dist_point_line(p, line);
  if (rho >= radius) return 0;
  return min(axial, 1 - rho / radius);
}

// ---------------------------------------------------------------------------
// MoveMap

MoveMap::MoveMap(Params params, Scalar displacement_bound, Scalar inverse_modulus,
                 std::optional<Box> support)
    : params_(std::move(params)),
      displacement_bound_(std::move(displacement_bound)),
      inverse_modulus_(std::move(inverse_modulus)),
      support_(std::move(support)) {}

MoveMap MoveMap::composite(std::vector<MoveMap> children, Scalar displacement_bound,
                           Scalar inverse_modulus, std::optional<Box> support) {
  if (children.empty()) throw std::invalid_argument("composite move without children");
  Scalar bound_sum;
  Scalar modulus_product = 1;
  for (const MoveMap& c : children) {
    bound_sum += c.displacement_bound();
    modulus_product *= c.inverse_modulus();
  }
  if (displacement_bound.sign() < 0 || bound_sum < displacement_bound) {
    throw std::invalid_argument("composite displacement bound exceeds the sum of its parts");
  }
  if (inverse_modulus < 1 || modulus_product < inverse_modulus) {
    throw std::invalid_argument("composite inverse modulus outside [1, product of parts]");
  }
  return MoveMap(CompositeParams{std::move(children)}, std::move(displacement_bound),
                 std::move(inverse_modulus), std::move(support));
}

MoveKind MoveMap::kind() const {
  switch (params_.index()) {
    case 1:
      return MoveKind::kPushAway;
    case 2:
      return MoveKind::kBump;
    case 3:
      return MoveKind::kComposite;
    default:
      return MoveKind::kIdentity;
  }
}

std::optional<Scalar> MoveMap::support_radius() const {
  if (!support_) return std::nullopt;
  Scalar r;
  for (std::size_t i = 0; i < support_->lo.dim(); ++i) {
    r = max(r, (support_->hi[i] - support_->lo[i]) / 2);
  }
  return r;
}

std::span<const MoveMap> MoveMap::children() const {
  if (const auto* c = std::get_if<CompositeParams>(&params_)) return c->children;
  return {};
}

namespace {

void check_line_dim(const Point& p, const AxisLine& line) { require_same_dim(p, line.dim()); }

// Replace the normal part p - proj(p) by scale * (p - proj(p)).
Point rescale_normal(const Point& p, const AxisLine& line, const Scalar& scale) {
  Point out = p;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (j == line.free_axis()) continue;
    out[j] = line.fixed(j) + (p[j] - line.fixed(j)) * scale;
  }
  return out;
}

Point push_forward(const MoveMap::PushAwayParams& pa, const Point& p) {
  check_line_dim(p, pa.line);
  const Scalar r = dist_point_line(p, pa.line);
  if (r.is_zero()) throw DomainError("push away is undefined on its line");
  if (r >= pa.eps) return p;
  return rescale_normal(p, pa.line, push_away_radius(r, pa.eps) / r);
}

Point push_inverse(const MoveMap::PushAwayParams& pa, const Point& y) {
  check_line_dim(y, pa.line);
  const Scalar s = dist_point_line(y, pa.line);
  if (s >= pa.eps) return y;
  if (s * 2 <= pa.eps) throw DomainError("point is not in the image of push away");
  return rescale_normal(y, pa.line, push_away_radius_inverse(s, pa.eps) / s);
}

Point bump_forward(const MoveMap::BumpParams& b, const Point& p) {
  check_line_dim(p, b.cylinder.line);
  const Scalar w = b.cylinder.profile(p);
  if (w.is_zero()) return p;
  return p + (b.amplitude * w) * b.direction;
}

// Solve y = x + amplitude * profile(x) * direction for x. Along the ray
// x = y - mu * direction the residual mu - amplitude * profile(x) is strictly
// increasing and piecewise linear in mu; its kinks are where two of the
// linear pieces +-(nu_j - mu d_j) of the Chebyshev norm meet, or where the
// norm crosses one of the profile levels. Bracket the root between
// consecutive kinks and interpolate exactly.
Point bump_inverse(const MoveMap::BumpParams& b, const Point& y) {
  const Cylinder& cyl = b.cylinder;
  check_line_dim(y, cyl.line);
  const std::size_t a = cyl.line.free_axis();
  const Scalar& t = y[a];
  if (t <= cyl.start || t >= cyl.end) return y;
  const Scalar axial = min(Scalar(1), min(t - cyl.start, cyl.end - t) / cyl.ramp);

  std::vector<std::size_t> normal;
  for (std::size_t j = 0; j < y.dim(); ++j) {
    if (j != a) normal.push_back(j);
  }
  std::vector<Scalar> nu;
  for (std::size_t j : normal) nu.push_back(y[j] - cyl.line.fixed(j));

  std::vector<Scalar> knots{Scalar(0), b.amplitude};
  const Scalar levels[] = {cyl.radius * (1 - axial), cyl.radius};
  for (std::size_t u = 0; u < normal.size(); ++u) {
    const Scalar& du = b.direction[normal[u]];
    if (!du.is_zero()) {
      knots.push_back(nu[u] / du);
      for (const Scalar& level : levels) {
        knots.push_back((nu[u] - level) / du);
        knots.push_back((nu[u] + level) / du);
      }
    }
    for (std::size_t v = u + 1; v < normal.size(); ++v) {
      const Scalar& dv = b.direction[normal[v]];
      for (int sg : {1, -1}) {
        const Scalar den = du - sg * dv;
        if (!den.is_zero()) knots.push_back((nu[u] - sg * nu[v]) / den);
      }
    }
  }
  std::erase_if(knots, [&](const Scalar& m) { return m.sign() < 0 || b.amplitude < m; });
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto residual = [&](const Scalar& mu) {
    return mu - b.amplitude * cyl.profile(y - mu * b.direction);
  };
  Scalar lo = knots.front();
  Scalar h_lo = residual(lo);
  if (h_lo.is_zero()) return y - lo * b.direction;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const Scalar& hi = knots[i];
    const Scalar h_hi = residual(hi);
    if (h_hi.sign() >= 0) {
      const Scalar mu = lo - h_lo * (hi - lo) / (h_hi - h_lo);
      return y - mu * b.direction;
    }
    lo = hi;
    h_lo = h_hi;
  }
  throw std::logic_error("bump inverse failed to bracket a root");
}

}  // namespace

bool MoveMap::in_domain(const Point& p) const {
  return std::visit(
      [&](const auto& params) -> bool {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, PushAwayParams>) {
          return !dist_point_line(p, params.line).is_zero();
        } else if constexpr (std::is_same_v<T, CompositeParams>) {
          Point cur = p;
          for (const MoveMap& child : params.children) {
            if (!child.in_domain(cur)) return false;
            cur = child.forward(cur);
          }
          return true;
        } else {
          return true;
        }
      },
      params_);
}

Point MoveMap::forward(const Point& p) const {
  return std::visit(
      [&](const auto& params) -> Point {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, PushAwayParams>) {
          return push_forward(params, p);
        } else if constexpr (std::is_same_v<T, BumpParams>) {
          return bump_forward(params, p);
        } else if constexpr (std::is_same_v<T, CompositeParams>) {
          Point cur = p;
          for (const MoveMap& child : params.children) cur = child.forward(cur);
          return cur;
        } else {
          return p;
        }
      },
      params_);
}

Point MoveMap::inverse(const Point& p) const {
  return std::visit(
      [&](const auto& params) -> Point {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, PushAwayParams>) {
          return push_inverse(params, p);
        } else if constexpr (std::is_same_v<T, BumpParams>) {
          return bump_inverse(params, p);
        } else if constexpr (std::is_same_v<T, CompositeParams>) {
          Point cur = p;
          for (auto it = params.children.rbegin(); it != params.children.rend(); ++it) {
            cur = it->inverse(cur);
          }
          return cur;
        } else {
          return p;
        }
      },
      params_);
}

// ---------------------------------------------------------------------------
// Push away

Scalar push_away_radius(const Scalar& r, const Scalar& eps) {
  if (r.sign() <= 0) throw DomainError("push away radius must be positive");
  if (r >= eps) return r;
  return (eps + r) / 2;
}

Scalar push_away_radius_inverse(const Scalar& s, const Scalar& eps) {
  if (s >= eps) return s;
  if (s * 2 <= eps) throw DomainError("radius is not in the image of push away");
  return 2 * s - eps;
}

MoveMap push_away(const AxisLine& line, const Scalar& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("push away needs eps > 0");
  return MoveMap(MoveMap::PushAwayParams{line, eps}, eps / 2, Scalar(2), std::nullopt);
}

std::vector<double> push_away_euclidean(const AxisLine& line, double eps,
                                        std::span<const double> p) {
  if (p.size() != line.dim()) throw DimensionError("dimension mismatch");
  if (!(eps > 0)) throw std::invalid_argument("push away needs eps > 0");
  double r2 = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == line.free_axis()) continue;
    const double g = p[j] - line.fixed(j).to_double();
    r2 += g * g;
  }
  const double r = std::sqrt(r2);
  if (r == 0) throw DomainError("push away is undefined on its line");
  std::vector<double> out(p.begin(), p.end());
  if (r >= eps) return out;
  const double scale = 0.5 * (eps + r) / r;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == line.free_axis()) continue;
    const double q = line.fixed(j).to_double();
    out[j] = q + (p[j] - q) * scale;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bump

MoveMap bump_displacement(const Cylinder& cylinder, const Point& direction,
                          const Scalar& amplitude) {
  const AxisLine& line = cylinder.line;
  if (!(cylinder.start < cylinder.end)) throw std::invalid_argument("empty cylinder segment");
  if (cylinder.radius.sign() <= 0) throw std::invalid_argument("cylinder radius must be positive");
  if (cylinder.ramp.sign() <= 0 || cylinder.length() < 2 * cylinder.ramp) {
    throw std::invalid_argument("cylinder ramp must lie in (0, length/2]");
  }
  require_same_dim(direction, line.dim());
  if (!direction[line.free_axis()].is_zero() || max_norm(direction) != 1) {
    throw std::invalid_argument("bump direction must be a unit Chebyshev vector normal to the line");
  }
  if (amplitude.sign() <= 0) throw std::invalid_argument("bump amplitude must be positive");
  if (amplitude >= cylinder.radius) throw std::invalid_argument("bump amplitude must be below the cylinder radius");
  // The profile is (1/radius)-Lipschitz across the line and (1/ramp)-Lipschitz
  // along it, which bounds how much the inverse can stretch distances.
  const Scalar modulus = (1 + amplitude / cylinder.ramp) / (1 - amplitude / cylinder.radius);
  return MoveMap(MoveMap::BumpParams{cylinder, direction, amplitude}, amplitude, modulus,
                 cylinder.bounds());
}

// ---------------------------------------------------------------------------
// Compose

MoveMap compose(const MoveMap& outer, const MoveMap& inner, std::span<const Point> probe) {
  for (const Point& p : probe) {
    if (!outer.in_domain(inner.forward(p))) {
      throw DomainError("domain mismatch: inner image leaves the domain of the outer move");
    }
  }
  if (outer.kind() == MoveKind::kIdentity) return inner;
  if (inner.kind() == MoveKind::kIdentity) return outer;
  std::optional<Box> support;
  if (outer.support() && inner.support()) support = inner.support()->hull(*outer.support());
  return MoveMap::composite({inner, outer}, inner.displacement_bound() + outer.displacement_bound(),
                            inner.inverse_modulus() * outer.inverse_modulus(), std::move(support));
}

// ---------------------------------------------------------------------------
// Straighten

namespace {

struct BumpChoice {
  std::size_t reached = 0;  // members at or beyond the target clearance
  Scalar score{-1};         // smallest clearance among the members
  Point direction;
  Scalar amplitude;
};

// Pick axis, sign and amplitude maximising first the number of samples in
// the cylinder that reach the target, then the smallest post-move clearance.
// Iteration order gives the tie-breaks: lowest axis, positive sign, smallest
// amplitude.
BumpChoice choose_bump(const Cylinder& cyl, std::span<const Point> cur,
                       std::span<const std::size_t> members, const Scalar& clearance) {
  const AxisLine& line = cyl.line;
  const std::size_t n = line.dim();
  const std::size_t a = line.free_axis();

  struct Member {
    Scalar weight;              // profile value
    std::vector<Scalar> gaps;   // signed normal offsets, indexed by ambient axis
  };
  std::vector<Member> ms;
  for (std::size_t i : members) {
    Member m{cyl.profile(cur[i]), std::vector<Scalar>(n)};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != a) m.gaps[j] = cur[i][j] - line.fixed(j);
    }
    ms.push_back(std::move(m));
  }

  constexpr long kGrid = 32;
  BumpChoice best;
  for (std::size_t b = 0; b < n; ++b) {
    if (b == a) continue;
    // Clearance contributed by the coordinates the bump does not touch.
    std::vector<Scalar> rest;
    for (const Member& m : ms) {
      Scalar r;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != a && j != b) r = max(r, m.gaps[j].abs());
      }
      rest.push_back(r);
    }
    for (int sign : {1, -1}) {
      std::vector<Scalar> amps;
      for (long k = 1; k < kGrid; ++k) amps.push_back(cyl.radius * Scalar(k, kGrid));
      for (const Member& m : ms) {
        if (m.weight.is_zero()) continue;
        for (const Scalar& target : {Scalar(3, 2), Scalar(-3, 2), Scalar(17, 16), Scalar(-17, 16)}) {
          amps.push_back((target * clearance - m.gaps[b]) / (sign * m.weight));
        }
      }
      std::erase_if(amps, [&](const Scalar& s) { return s.sign() <= 0 || s >= cyl.radius; });
      std::sort(amps.begin(), amps.end());
      amps.erase(std::unique(amps.begin(), amps.end()), amps.end());

      for (const Scalar& amp : amps) {
        std::size_t reached = 0;
        Scalar score;
        for (std::size_t u = 0; u < ms.size(); ++u) {
          const Scalar moved = (ms[u].gaps[b] + sign * amp * ms[u].weight).abs();
          const Scalar c = max(moved, rest[u]);
          if (u == 0 || c < score) score = c;
          if (c >= clearance) ++reached;
        }
        if (reached > best.reached || (reached == best.reached && score > best.score)) {
          Point dir = Point::zero(n);
          dir[b] = sign;
          best = BumpChoice{reached, score, std::move(dir), amp};
        }
      }
    }
  }
  return best;
}

}  // namespace

MoveMap straighten(std::span<const Point> samples, const AxisLine& line, const Scalar& eps,
                   const Scalar& clearance) {
  if (samples.empty()) throw std::invalid_argument("straighten needs at least one sample");
  for (const Point& p : samples) require_same_dim(p, line.dim());
  if (eps.sign() <= 0 || clearance.sign() <= 0) {
    throw std::invalid_argument("straighten needs eps > 0 and clearance > 0");
  }
  const Scalar radius = eps / 4;
  const Scalar period = eps / 2;
  if (clearance >= radius) {
    throw InfeasibleError("clearance " + clearance.str() + " is not below the cylinder radius " +
                          radius.str() + " = eps/4");
  }

  std::vector<Point> cur(samples.begin(), samples.end());
  auto too_close = [&](const Point& p) { return dist_point_line(p, line) < clearance; };
  if (std::none_of(cur.begin(), cur.end(), too_close)) return MoveMap::identity();

  const std::size_t a = line.free_axis();

  // Positions along the line of every sample inside the tube. Bumps never
  // change this coordinate, so the list is fixed for all passes.
  std::vector<Scalar> proj;
  for (const Point& p : cur) {
    if (dist_point_line(p, line) < radius) proj.push_back(p[a]);
  }
  std::sort(proj.begin(), proj.end());
  proj.erase(std::unique(proj.begin(), proj.end()), proj.end());

  // Segment around position proj[k]: out to eps/4 on each side, cut at the
  // midpoints to the neighbouring positions. Segments are pairwise disjoint,
  // no longer than eps/2, and their endpoints miss every tube sample.
  auto segment = [&](std::size_t k) {
    const Scalar& t = proj[k];
    Scalar lo = t - period / 2;
    Scalar hi = t + period / 2;
    if (k > 0) lo = max(lo, (proj[k - 1] + t) / 2);
    if (k + 1 < proj.size()) hi = min(hi, (t + proj[k + 1]) / 2);
    return std::pair{lo, hi};
  };

  std::vector<MoveMap> bumps;
  Scalar total_bound;
  Scalar total_modulus = 1;
  std::optional<Box> support;
  constexpr int kMaxPasses = 3;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    std::map<std::size_t, std::vector<std::size_t>> members;  // by position
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const Scalar d = dist_point_line(cur[i], line);
      if (d >= radius) continue;
      const std::size_t k =
          static_cast<std::size_t>(std::lower_bound(proj.begin(), proj.end(), cur[i][a]) - proj.begin());
      members[k].push_back(i);
      if (d < clearance) active.push_back(k);
    }
    if (active.empty()) break;
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());

    Scalar pass_bound;
    Scalar pass_modulus = 1;
    for (std::size_t k : active) {
      const std::vector<std::size_t>& in_cyl = members[k];
      const auto [lo, hi] = segment(k);
      const Cylinder cyl{line, lo, hi, radius, min(proj[k] - lo, hi - proj[k])};
      const BumpChoice choice = choose_bump(cyl, cur, in_cyl, clearance);
      MoveMap bump = bump_displacement(cyl, choice.direction, choice.amplitude);
      for (std::size_t i : in_cyl) cur[i] = bump.forward(cur[i]);
      pass_bound = max(pass_bound, bump.displacement_bound());
      pass_modulus = max(pass_modulus, bump.inverse_modulus());
      support = support ? support->hull(*bump.support()) : *bump.support();
      bumps.push_back(std::move(bump));
    }
    // Supports inside one pass have disjoint interiors and bumps never change
    // the coordinate along the line, so each point feels at most one bump.
    total_bound += pass_bound;
    total_modulus *= pass_modulus;
  }

  if (std::any_of(cur.begin(), cur.end(), too_close)) {
    throw InfeasibleError("straighten could not reach clearance " + clearance.str() + " within " +
                          std::to_string(kMaxPasses) + " passes of radius " + radius.str());
  }
  return MoveMap::composite(std::move(bumps), total_bound, total_modulus, std::move(support));
}

}  // namespace nobeling
