#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gql/error.hpp"
#include "gql/finite_factor.hpp"
#include "gql/integer_poly.hpp"
#include "gql/multipoly.hpp"

namespace gql {

template <class F>
using Point3 = std::array<typename F::Elem, 3>;

/// A plane curve given by a nonzero homogeneous form with integer
/// coefficients.
class PlaneCurve {
public:
  /// Throws DomainError for the zero form or a non-homogeneous one.
  explicit PlaneCurve(MultiPoly form);

  const MultiPoly& form() const noexcept { return form_; }
  int degree() const noexcept { return degree_; }

private:
  MultiPoly form_;
  int degree_ = 0;
};

MultiPoly hessian(const PlaneCurve& curve);

/// Scales so the last nonzero coordinate is 1. Throws DomainError on (0,0,0).
template <class F>
Point3<F> normalize_point(const F& field, Point3<F> p) {
  for (int i = 2; i >= 0; --i) {
    const auto& v = p[static_cast<std::size_t>(i)];
    if (field.is_zero(v)) continue;
    const auto s = field.inv(v);
    for (auto& c : p) c = field.mul(c, s);
    return p;
  }
  throw DomainError("projective point with all coordinates zero");
}

template <class F>
bool is_zero_point(const F& field, const Point3<F>& p) {
  return field.is_zero(p[0]) && field.is_zero(p[1]) && field.is_zero(p[2]);
}

template <class F>
Point3<F> cross(const F& field, const Point3<F>& a, const Point3<F>& b) {
  return {field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1])),
          field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2])),
          field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0]))};
}

template <class F>
typename F::Elem dot(const F& field, const Point3<F>& a, const Point3<F>& b) {
  auto acc = field.mul(a[0], b[0]);
  acc = field.add(acc, field.mul(a[1], b[1]));
  return field.add(acc, field.mul(a[2], b[2]));
}

template <class F>
Point3<F> apply_matrix(const F& field, const IntMatrix3& m, const Point3<F>& p) {
  Point3<F> out{field.zero(), field.zero(), field.zero()};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out[i] = field.add(out[i], field.mul(field.from_int(BigInt(static_cast<long>(m[i][j]))), p[j]));
  return out;
}

template <class F>
bool proportional(const F& field, const Point3<F>& a, const Point3<F>& b) {
  return is_zero_point(field, cross(field, a, b));
}

template <class F>
Point3<F> gradient(const F& field, const MultiPoly& form, const Point3<F>& p) {
  return {form.derivative(0).evaluate(field, p), form.derivative(1).evaluate(field, p),
          form.derivative(2).evaluate(field, p)};
}

/// True iff the partials have no common zero over the algebraic closure of
/// F_p. When no coordinate change separates (0:0:1) from the partials the
/// answer is a conservative false. Throws DomainError when p is not prime or
/// divides the content of the form.
bool smoothness_check_mod_p(const PlaneCurve& curve, std::uint64_t p);

/// Member `attempt` of the seeded sequence of unimodular integer matrices;
/// attempt 0 is the identity.
IntMatrix3 coordinate_change(std::uint64_t seed, int attempt);

inline constexpr int kCoordinateRetryBudget = 20;

/// The flex eliminant in coordinates X = M X', together with what is needed
/// to lift its roots back to points.
struct FlexForm {
  ZPoly form;              // Res_z(C', H') at y = 1, primitive, degree 3 d (d - 2)
  ZPoly squarefree;        // its square-free part
  ZPoly lift_num;          // z = lift_num / lift_den at every root
  ZPoly lift_den;
  IntMatrix3 change;       // M
  MultiPoly transformed;   // C(M X')
  MultiPoly hessian;       // Hessian of the original curve
  int attempt = 0;
};

/// Tries successive coordinate changes until the curve and its Hessian avoid
/// (0:0:1), no flex lies on y = 0 or z = 0, and distinct flexes have distinct
/// x-coordinates. Requires degree >= 3. Throws DomainError listing the
/// failures once the retry budget is exhausted.
FlexForm flex_form(const PlaneCurve& curve, std::uint64_t seed = 0, int first_attempt = 0);

/// Gradient at P as line coefficients. Throws DomainError if P is not on the
/// curve or is singular.
template <class F>
Point3<F> tangent_line(const F& field, const PlaneCurve& curve, const Point3<F>& p) {
  if (!field.is_zero(curve.form().evaluate(field, p))) throw DomainError("point is not on the curve");
  auto g = gradient(field, curve.form(), p);
  if (is_zero_point(field, g)) throw DomainError("point is singular");
  return g;
}

/// A point of the line other than P.
template <class F>
Point3<F> second_point_on_line(const F& field, const Point3<F>& line, const Point3<F>& p) {
  for (std::size_t i = 0; i < 3; ++i) {
    Point3<F> e{field.zero(), field.zero(), field.zero()};
    e[i] = field.one();
    auto q = cross(field, line, e);
    if (!is_zero_point(field, q) && !proportional(field, q, p)) return q;
  }
  throw DomainError("degenerate line");
}

/// Order of vanishing at P of the curve restricted to the line.
template <class F>
int intersection_multiplicity(const F& field, const PlaneCurve& curve, const Point3<F>& line,
                              const Point3<F>& p) {
  if (!field.is_zero(dot(field, line, p))) throw DomainError("point is not on the line");
  if (!field.is_zero(curve.form().evaluate(field, p))) throw DomainError("point is not on the curve");
  const auto q = second_point_on_line(field, line, p);
  const auto f = curve.form().restrict_to_line(field, p, q);
  if (f.is_zero()) throw DomainError("line is a component of the curve");
  int k = 0;
  while (field.is_zero(f.c[static_cast<std::size_t>(k)])) ++k;
  return k;
}

/// Fourth intersection of the tangent at a flex P with a quartic; P itself
/// at a hyperflex. Throws DomainError if P is not a flex.
template <class F>
Point3<F> residual_point(const F& field, const PlaneCurve& curve, const Point3<F>& p) {
  if (curve.degree() != 4) throw DomainError("residual points are defined for quartics");
  const auto line = tangent_line(field, curve, p);
  const auto q = second_point_on_line(field, line, p);
  auto f = curve.form().restrict_to_line(field, p, q);
  f.c.resize(5, field.zero());
  if (!field.is_zero(f.c[2])) throw DomainError("point is not a flex");
  const auto& c3 = f.c[3];
  const auto& c4 = f.c[4];
  Point3<F> r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = field.sub(field.mul(c3, q[i]), field.mul(c4, p[i]));
  return normalize_point(field, r);
}

struct PrimeCheck {
  bool good = false;
  std::string reason;
};

/// Whether p is usable for reducing the flex computation.
PrimeCheck check_prime(const PlaneCurve& curve, const FlexForm& ff, std::uint64_t p);

/// A prime p not dividing the content with the curve smooth mod p, searched
/// below `bound`; smoothness mod such a p implies smoothness over Q. Throws
/// DomainError when there is none, which is the case for singular curves.
std::uint64_t certify_smooth(const PlaneCurve& curve, std::uint64_t bound = 1000);

/// First `count` good primes above `above`. Throws DomainError when the
/// search passes 2^20.
std::vector<std::uint64_t> good_primes(const PlaneCurve& curve, const FlexForm& ff,
                                       std::uint64_t above, int count);

/// Least k such that every flex is defined over F_{p^k}.
int splitting_degree(const FlexForm& ff, std::uint64_t p);

/// First good prime above `above` and below `limit` whose splitting degree is
/// at most max_ext. Throws DomainError when there is none.
std::uint64_t choose_flex_prime(const PlaneCurve& curve, const FlexForm& ff, int max_ext = 12,
                                std::uint64_t above = 100, std::uint64_t limit = 1000);

struct Flex {
  Point3<ExtField> point;
  int multiplicity = 1;
  int contact = 3;  // intersection multiplicity with the tangent
};

struct FlexSet {
  std::uint64_t prime;
  ExtField field;
  std::vector<Flex> flexes;

  int total_multiplicity() const;
  int hyperflex_count() const;
};

/// Flexes with coordinates in F_{p^k}, sorted by coordinates. Throws
/// DomainError when p is not a good prime.
FlexSet flexes_over(const PlaneCurve& curve, const FlexForm& ff, std::uint64_t p, int k,
                    std::uint64_t seed = 0);

enum class DistinctnessKind { Distinct, Inconclusive };

const char* to_string(DistinctnessKind kind);

struct DistinctnessVerdict {
  DistinctnessKind kind = DistinctnessKind::Inconclusive;
  std::uint64_t prime = 0;
  int ext_degree = 1;
  int flex_count = 0;
  int hyperflex_count = 0;
  int distinct_residual_count = 0;
  std::string reason;
};

struct ResidualSet {
  FlexSet flexes;
  std::vector<Point3<ExtField>> residuals;  // parallel to flexes.flexes
  DistinctnessVerdict verdict;
};

/// Distinct when all 3 d (d - 2) flexes are simple, none is a hyperflex and
/// their residual points are pairwise distinct over F_{p^k}. Throws
/// DomainError unless every flex is realized over F_{p^k}.
ResidualSet residual_distinctness(const PlaneCurve& curve, const FlexForm& ff, std::uint64_t p,
                                  int k, std::uint64_t seed = 0);

struct EliminantReport {
  FlexForm form;
  ZPoly eliminant;  // primitive, roots are the residual x-coordinates
  QPoly residual_x; // residual x-coordinate as a polynomial in x mod the flex form
  int gcd_degree_with_flex_form = 0;
  bool squarefree = false;
  std::vector<PrimePattern> patterns;
  std::optional<IrreducibilityVerdict> irreducibility;
  std::string note;
};

/// Eliminates the flex from the residual x-coordinate: the eliminant is the
/// characteristic polynomial of multiplication by the residual coordinate in
/// Q[x]/(flex form). Retries coordinate changes when a residual point lies
/// on y = 0.
EliminantReport residual_eliminant(const PlaneCurve& curve, std::uint64_t seed = 0);

struct RootCheck {
  std::uint64_t prime = 0;
  int ext_degree = 1;
  bool applicable = false;
  bool matched = false;
  std::string reason;
};

/// Compares the roots of the eliminant mod p with directly computed residual
/// x-coordinates in F_{p^k}, k the splitting degree.
RootCheck check_eliminant_roots(const PlaneCurve& curve, const EliminantReport& report,
                                std::uint64_t p, std::uint64_t seed = 0);

struct FlexOptions {
  std::optional<std::uint64_t> prime;
  std::optional<int> ext;
  std::uint64_t seed = 0;
  bool residuals = false;
};

struct FlexReport {
  FlexForm form;
  std::vector<PrimePattern> patterns;
  IrreducibilityVerdict flex_irreducibility;
  std::optional<FlexSet> flexes;
  std::vector<Point3<ExtField>> residuals;
  std::optional<DistinctnessVerdict> distinct_residuals;
};

/// Flex form, patterns at the first three good primes above 100, an
/// irreducibility attempt on the square-free flex form, and the flexes (and
/// optionally residuals) at the requested or an automatically chosen prime.
FlexReport analyze_flexes(const PlaneCurve& curve, const FlexOptions& options);

/// Primes 5 <= p <= bound.
std::vector<std::uint64_t> certificate_primes(std::uint64_t bound = 300);

}  // namespace gql
