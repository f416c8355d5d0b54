#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "nobeling/geometry.hpp"

namespace nobeling {

enum class MoveKind { kIdentity, kPushAway, kBump, kComposite };

const char* to_string(MoveKind kind);

/// Tube of Chebyshev radius `radius` around the core segment
/// {line.at(t) : start <= t <= end}.
///
/// `ramp` is the axial distance over which a bump living in the cylinder
/// fades from full strength to zero at the segment ends; ramp = length / 2
/// gives a tent profile peaking at the midpoint.
struct Cylinder {
  AxisLine line;
  Scalar start;
  Scalar end;
  Scalar radius;
  Scalar ramp;

  Point start_point() const { return line.at(start); }
  Point end_point() const { return line.at(end); }
  Scalar length() const { return end - start; }
  /// Chebyshev diameter of the closed cylinder.
  Scalar diameter() const;
  Box bounds() const;

  /// Bump profile in [0, 1]: min of the radial and axial tent falloffs.
  Scalar profile(const Point& p) const;

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

/// An invertible self-map of R^n (or of R^n minus a line) together with the
/// data that certifies it as a legal perturbation:
///  - displacement_bound: dist(p, forward(p)) <= bound on the whole domain,
///  - support: a box outside which the map is the identity (none if unbounded),
///  - inverse_modulus: a factor c with |inverse(y) - inverse(y')| <= c |y - y'|
///    in the Chebyshev norm (for push-away: along the radial coordinate).
///
/// All evaluation is exact; inverse(forward(p)) == p for every p in the domain.
class MoveMap {
 public:
  struct PushAwayParams {
    AxisLine line;
    Scalar eps;
    friend bool operator==(const PushAwayParams&, const PushAwayParams&) = default;
  };
  struct BumpParams {
    Cylinder cylinder;
    Point direction;
    Scalar amplitude;
    friend bool operator==(const BumpParams&, const BumpParams&) = default;
  };
  struct CompositeParams {
    std::vector<MoveMap> children;  // applied first to last
    friend bool operator==(const CompositeParams&, const CompositeParams&) = default;
  };

  MoveMap() = default;  // identity
  static MoveMap identity() { return MoveMap(); }

  /// Builds a composite from pre-validated children with explicitly recorded
  /// bounds. Bounds looser than the generic composition rule are rejected.
  static MoveMap composite(std::vector<MoveMap> children, Scalar displacement_bound,
                           Scalar inverse_modulus, std::optional<Box> support);

  MoveKind kind() const;
  const Scalar& displacement_bound() const { return displacement_bound_; }
  const Scalar& inverse_modulus() const { return inverse_modulus_; }
  const std::optional<Box>& support() const { return support_; }
  /// Half the largest side of the support box (none if unbounded).
  std::optional<Scalar> support_radius() const;

  const PushAwayParams* push_away_params() const { return std::get_if<PushAwayParams>(&params_); }
  const BumpParams* bump_params() const { return std::get_if<BumpParams>(&params_); }
  std::span<const MoveMap> children() const;

  bool in_domain(const Point& p) const;
  /// Throws DomainError outside the domain.
  Point forward(const Point& p) const;
  /// Throws DomainError outside the image.
  Point inverse(const Point& p) const;

  friend bool operator==(const MoveMap&, const MoveMap&) = default;

 private:
  friend MoveMap push_away(const AxisLine&, const Scalar&);
  friend MoveMap bump_displacement(const Cylinder&, const Point&, const Scalar&);

  using Params = std::variant<std::monostate, PushAwayParams, BumpParams, CompositeParams>;
  MoveMap(Params params, Scalar displacement_bound, Scalar inverse_modulus,
          std::optional<Box> support);

  Params params_;
  Scalar displacement_bound_{0};
  Scalar inverse_modulus_{1};
  std::optional<Box> support_;
};

/// Radial push away from `line`, defined on R^n minus the line.
///
/// Writing p = (component along the line, normal vector v) with r = |v|_inf,
/// the normal part is rescaled to norm xi(r), where xi(r) = (eps + r) / 2 for
/// r < eps and xi(r) = r otherwise. Images keep distance > eps/2 from the line.
MoveMap push_away(const AxisLine& line, const Scalar& eps);

/// The radial profile xi used by push_away and its inverse on (eps/2, inf).
Scalar push_away_radius(const Scalar& r, const Scalar& eps);
Scalar push_away_radius_inverse(const Scalar& s, const Scalar& eps);

/// Floating-point push away under the Euclidean norm. Demonstration only; the
/// exact Chebyshev map above is the one certificates are built from.
std::vector<double> push_away_euclidean(const AxisLine& line, double eps,
                                        std::span<const double> p);

/// p -> p + amplitude * profile(p) * direction inside the cylinder, identity
/// outside. `direction` must have unit Chebyshev norm and vanish on the
/// line's free axis; 0 < amplitude < radius.
MoveMap bump_displacement(const Cylinder& cylinder, const Point& direction,
                          const Scalar& amplitude);

/// outer o inner. When `probe` is given, every probe point's image under
/// `inner` must lie in the domain of `outer`.
MoveMap compose(const MoveMap& outer, const MoveMap& inner,
                std::span<const Point> probe = {});

/// Compactly supported homeomorphism of R^n, eps-close to the identity, that
/// moves every sample to Chebyshev distance >= clearance from `line`.
///
/// Every position along the line that carries a sample inside the tube of
/// radius eps/4 gets its own segment, at most eps/2 long and cut at the
/// midpoints to neighbouring positions. A segment holding a sample closer
/// than `clearance` gets one bump per pass, choosing axis, sign and amplitude
/// to clear as many samples as possible. Up to three passes are made.
///
/// Bumps translate, so samples at one position on opposite sides of the line
/// cannot both be pushed outward. Targets up to eps/8 (half the radius) are
/// reached on all tested fixtures; above that, InfeasibleError can occur.
MoveMap straighten(std::span<const Point> samples, const AxisLine& line, const Scalar& eps,
                   const Scalar& clearance);

}  // namespace nobeling
