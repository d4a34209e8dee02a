#include "gql/quartic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "gql/resultant.hpp"

namespace gql {

namespace {

const IntegerRing kZZ;
const RationalField kQQ;

bool divisible(const BigInt& v, std::uint64_t p) {
  return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

bool is_zero_mod(const MultiPoly& f, std::uint64_t p) {
  for (const auto& [e, c] : f.terms())
    if (!divisible(c, p)) return false;
  return true;
}

std::string matrix_string(const IntMatrix3& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < 3; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < 3; ++j) out << (j ? "," : "") << m[i][j];
    out << "]";
  }
  out << "]";
  return out.str();
}

/// Q[x] / (modulus) as a ring, for evaluating forms at a generic flex.
struct QuotientQ {
  using Elem = QPoly;
  QPoly modulus;

  Elem reduce(const QPoly& f) const { return poly::rem(kQQ, f, modulus); }
  Elem zero() const { return {}; }
  Elem one() const { return poly::one(kQQ); }
  Elem from_int(const BigInt& v) const { return poly::constant(kQQ, BigRational(v)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return poly::add(kQQ, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly::sub(kQQ, a, b); }
  Elem neg(const Elem& a) const { return poly::neg(kQQ, a); }
  Elem mul(const Elem& a, const Elem& b) const { return poly::mulmod(kQQ, a, b, modulus); }
  Elem inv(const Elem& a) const { return poly::inv_mod(kQQ, a, modulus); }
};

/// Characteristic polynomial by reduction to upper Hessenberg form.
QPoly charpoly(std::vector<std::vector<BigRational>> h) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t r = j + 1;
    while (r < n && h[r][j] == 0) ++r;
    if (r == n) continue;
    if (r != j + 1) {
      std::swap(h[r], h[j + 1]);
      for (auto& row : h) std::swap(row[r], row[j + 1]);
    }
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const BigRational u = h[i][j] / h[j + 1][j];
      for (std::size_t c = 0; c < n; ++c) h[i][c] -= u * h[j + 1][c];
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] += u * h[c][i];
    }
  }
  std::vector<QPoly> p(n + 1);
  p[0] = poly::one(kQQ);
  const QPoly t = poly::x(kQQ);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = poly::mul(kQQ, poly::sub(kQQ, t, poly::constant(kQQ, h[k - 1][k - 1])), p[k - 1]);
    BigRational prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h[i + 1][i];
      if (prod == 0) break;
      p[k] = poly::sub(kQQ, p[k], poly::scale(kQQ, p[i], prod * h[i][k - 1]));
    }
  }
  return p[n];
}

template <class F>
UniPoly<F> reduce_to(const F& field, const ZPoly& f) {
  return poly::map_coeffs(field, f, [&](const BigInt& v) { return field.from_int(v); });
}

bool point_less(const Point3<ExtField>& a, const Point3<ExtField>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& u, const auto& v) {
                                        return std::lexicographical_compare(
                                            u.rbegin(), u.rend(), v.rbegin(), v.rend());
                                      });
}

struct Attempt {
  std::optional<FlexForm> form;
  std::string failure;
};

Attempt try_change(const PlaneCurve& curve, const IntMatrix3& m, const MultiPoly& hess) {
  const int d = curve.degree();
  MultiPoly c = curve.form().substitute_linear(m);
  c = c.divided(c.content());
  MultiPoly h = hessian(c);
  if (c.coeff({0, 0, d}) == 0) return {std::nullopt, "curve passes through (0:0:1)"};
  if (h.coeff({0, 0, 3 * (d - 2)}) == 0) return {std::nullopt, "Hessian passes through (0:0:1)"};

  const PolyRing<IntegerRing> zx{kZZ};
  const auto a = c.dehomogenize_y_in_z(kZZ);
  const auto b = h.dehomogenize_y_in_z(kZZ);
  ZPoly r = resultant(zx, a, b);
  if (r.is_zero()) return {std::nullopt, "curve and Hessian share a component"};
  if (r.degree() != 3 * d * (d - 2)) return {std::nullopt, "flex on the line y = 0"};

  const ZPoly& a0 = a.c[0];
  const ZPoly& b0 = b.c[0];
  if (a0.is_zero() || b0.is_zero()) return {std::nullopt, "line z = 0 lies on the curve or Hessian"};
  if (poly::gcd(kQQ, to_rational(a0), to_rational(b0)).degree() > 0)
    return {std::nullopt, "flex on the line z = 0"};

  FlexForm ff;
  ff.form = primitive_part(r);
  ff.squarefree = squarefree_part_over_Q(ff.form);
  const auto sub = subresultant(zx, a, b, 1);
  ff.lift_num = poly::neg(kZZ, sub[0]);
  ff.lift_den = sub[1];
  if (ff.lift_den.is_zero() ||
      poly::gcd(kQQ, to_rational(ff.squarefree), to_rational(ff.lift_den)).degree() > 0)
    return {std::nullopt, "two flexes share an x-coordinate"};
  ff.change = m;
  ff.transformed = std::move(c);
  ff.hessian = hess;
  return {std::move(ff), ""};
}

}  // namespace

PlaneCurve::PlaneCurve(MultiPoly form) : form_(std::move(form)) {
  if (form_.is_zero()) throw DomainError("curve form is zero");
  const auto d = form_.homogeneous_degree();
  if (!d) throw DomainError("curve form is not homogeneous");
  if (*d < 1) throw DomainError("curve form must have positive degree");
  degree_ = *d;
}

MultiPoly hessian(const PlaneCurve& curve) { return hessian(curve.form()); }

IntMatrix3 coordinate_change(std::uint64_t seed, int attempt) {
  IntMatrix3 m = identity3();
  if (attempt <= 0) return m;
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(attempt));
  // Unit lower times unit upper triangular, off-diagonal entries in
  // {-3, ..., 3} \ {0}, so that M and its inverse have few zero entries.
  auto entry = [&] {
    const int v = static_cast<int>(rng() % 6) - 3;
    return static_cast<std::int64_t>(v >= 0 ? v + 1 : v);
  };
  IntMatrix3 lower = identity3(), upper = identity3();
  lower[1][0] = entry();
  lower[2][0] = entry();
  lower[2][1] = entry();
  upper[0][1] = entry();
  upper[0][2] = entry();
  upper[1][2] = entry();
  m = multiply(lower, upper);
  return m;
}

bool smoothness_check_mod_p(const PlaneCurve& curve, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (divisible(curve.form().content(), p))
    throw DomainError(std::to_string(p) + " divides the content of the curve");
  const int d = curve.degree();
  if (d == 1) return true;
  const bool wild = d % static_cast<int>(p) == 0;

  std::vector<MultiPoly> forms;
  for (int v = 0; v < 3; ++v) {
    auto f = curve.form().derivative(v);
    if (!is_zero_mod(f, p)) forms.push_back(std::move(f));
  }
  // Two forms of positive degree always meet in the plane.
  if (!wild && forms.size() < 3) return false;
  if (wild) forms.push_back(curve.form());
  if (forms.size() < 2) return false;

  const PrimeField field(p);
  auto avoids_origin = [&](const IntMatrix3& m) {
    const Point3<PrimeField> col{field.from_i64(m[0][2]), field.from_i64(m[1][2]),
                                 field.from_i64(m[2][2])};
    return std::all_of(forms.begin(), forms.end(), [&](const MultiPoly& f) {
      return !field.is_zero(f.evaluate(field, col));
    });
  };
  std::optional<IntMatrix3> change;
  for (int attempt = 0; attempt < 64 && !change; ++attempt) {
    const auto m = coordinate_change(p, attempt);
    if (avoids_origin(m)) change = m;
  }
  if (!change) return false;
  for (auto& f : forms) f = f.substitute_linear(*change);

  // Candidate x-coordinates in the chart y = 1 from pairwise z-resultants.
  const PolyRing<PrimeField> fx{field};
  FpPoly h;
  bool any = false;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      const auto r = resultant(fx, forms[i].dehomogenize_y_in_z(field),
                               forms[j].dehomogenize_y_in_z(field));
      if (r.is_zero()) {
        // A shared component meets the remaining partial.
        if (!wild) return false;
        continue;
      }
      h = poly::gcd(field, h, r);
      any = true;
    }
  if (!any) return false;

  auto common_z = [&](const auto& f, const auto& x0, const auto& y0) {
    using Poly = decltype(forms[0].slice_z(f, x0, y0));
    Poly g;
    for (const auto& form : forms) g = poly::gcd(f, g, form.slice_z(f, x0, y0));
    return g.is_zero() || g.degree() >= 1;
  };
  if (h.degree() >= 1)
    for (const auto& fac : ff::factor(field, h)) {
      const ExtField ext(field, fac.factor.c);
      if (common_z(ext, ext.generator(), ext.one())) return false;
    }
  return !common_z(field, field.one(), field.zero());
}

FlexForm flex_form(const PlaneCurve& curve, std::uint64_t seed, int first_attempt) {
  if (curve.degree() < 3) throw DomainError("flex form needs a curve of degree at least 3");
  const MultiPoly hess = hessian(curve.form());
  std::string failures;
  for (int attempt = first_attempt; attempt < kCoordinateRetryBudget; ++attempt) {
    const auto m = coordinate_change(seed, attempt);
    auto result = try_change(curve, m, hess);
    if (result.form) {
      result.form->attempt = attempt;
      return std::move(*result.form);
    }
    failures += (failures.empty() ? "" : "; ") + matrix_string(m) + ": " + result.failure;
  }
  throw DomainError("no coordinate change within the retry budget works: " + failures);
}

PrimeCheck check_prime(const PlaneCurve& curve, const FlexForm& ff, std::uint64_t p) {
  if (p <= 3) return {false, "p <= 3"};
  if (p >= (1ULL << 62) || !is_prime(p)) return {false, std::to_string(p) + " is not a usable prime"};
  if (divisible(curve.form().content(), p)) return {false, "p divides the content of the curve"};
  if (divisible(ff.form.lead(), p)) return {false, "p divides the leading coefficient of the flex form"};
  const PrimeField field(p);
  if (!is_good_reduction(ff.squarefree, field))
    return {false, "p divides the discriminant of the square-free flex form"};
  const int d = curve.degree();
  if (divisible(ff.transformed.coeff({0, 0, d}), p) ||
      divisible(hessian(ff.transformed).coeff({0, 0, 3 * (d - 2)}), p))
    return {false, "p kills a leading z-coefficient"};
  if (poly::gcd(field, reduce(field, ff.squarefree), reduce(field, ff.lift_den)).degree() > 0)
    return {false, "two flexes share an x-coordinate mod p"};
  if (!smoothness_check_mod_p(curve, p)) return {false, "curve is singular mod p"};
  return {true, ""};
}

std::uint64_t certify_smooth(const PlaneCurve& curve, std::uint64_t bound) {
  for (std::uint64_t p = 5; p < bound; ++p)
    if (is_prime(p) && !divisible(curve.form().content(), p) && smoothness_check_mod_p(curve, p))
      return p;
  throw DomainError("curve is singular: it is singular mod every prime below " +
                    std::to_string(bound));
}

std::vector<std::uint64_t> good_primes(const PlaneCurve& curve, const FlexForm& ff,
                                       std::uint64_t above, int count) {
  constexpr std::uint64_t kLimit = 1ULL << 20;
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = above + 1; static_cast<int>(out.size()) < count; ++p) {
    if (p > kLimit) throw DomainError("fewer than " + std::to_string(count) + " good primes below 2^20");
    if (is_prime(p) && check_prime(curve, ff, p).good) out.push_back(p);
  }
  return out;
}

int splitting_degree(const FlexForm& ff, std::uint64_t p) {
  const PrimeField field(p);
  int k = 1;
  for (int d : ff::degree_pattern(field, reduce(field, ff.squarefree))) k = std::lcm(k, d);
  return k;
}

std::uint64_t choose_flex_prime(const PlaneCurve& curve, const FlexForm& ff, int max_ext,
                                std::uint64_t above, std::uint64_t limit) {
  for (std::uint64_t p = above + 1; p < limit; ++p) {
    if (!is_prime(p) || !check_prime(curve, ff, p).good) continue;
    if (splitting_degree(ff, p) <= max_ext) return p;
  }
  throw DomainError("no good prime below " + std::to_string(limit) +
                    " splits the flexes over an extension of degree <= " + std::to_string(max_ext));
}

int FlexSet::total_multiplicity() const {
  int total = 0;
  for (const auto& f : flexes) total += f.multiplicity;
  return total;
}

int FlexSet::hyperflex_count() const {
  return static_cast<int>(
      std::count_if(flexes.begin(), flexes.end(), [](const Flex& f) { return f.contact >= 4; }));
}

FlexSet flexes_over(const PlaneCurve& curve, const FlexForm& ff, std::uint64_t p, int k,
                    std::uint64_t seed) {
  const auto status = check_prime(curve, ff, p);
  if (!status.good) throw DomainError("prime " + std::to_string(p) + " is not good: " + status.reason);
  if (k < 1) throw DomainError("extension degree must be positive");
  const PrimeField base(p);
  FlexSet set{p, make_extension(base, k, seed), {}};
  const ExtField& field = set.field;

  const auto num = reduce_to(field, ff.lift_num);
  const auto den = reduce_to(field, ff.lift_den);
  for (const auto& root : ff::roots(field, reduce_to(field, ff.form), seed)) {
    const auto z = field.div(poly::eval(field, num, root.value), poly::eval(field, den, root.value));
    const Point3<ExtField> local{root.value, field.one(), z};
    const auto pt = normalize_point(field, apply_matrix(field, ff.change, local));
    if (!field.is_zero(curve.form().evaluate(field, pt)) ||
        !field.is_zero(ff.hessian.evaluate(field, pt)))
      throw InvariantError("lifted flex does not lie on the curve and its Hessian");
    const auto line = tangent_line(field, curve, pt);
    set.flexes.push_back({pt, root.multiplicity, intersection_multiplicity(field, curve, line, pt)});
  }
  std::sort(set.flexes.begin(), set.flexes.end(),
            [](const Flex& a, const Flex& b) { return point_less(a.point, b.point); });
  return set;
}

const char* to_string(DistinctnessKind kind) {
  return kind == DistinctnessKind::Distinct ? "Distinct" : "Inconclusive";
}

ResidualSet residual_distinctness(const PlaneCurve& curve, const FlexForm& ff, std::uint64_t p,
                                  int k, std::uint64_t seed) {
  ResidualSet out{flexes_over(curve, ff, p, k, seed), {}, {}};
  const ExtField& field = out.flexes.field;
  const int expected = 3 * curve.degree() * (curve.degree() - 2);
  if (out.flexes.total_multiplicity() != expected)
    throw DomainError("only " + std::to_string(out.flexes.total_multiplicity()) + " of " +
                      std::to_string(expected) + " flexes are defined over F_{" +
                      std::to_string(p) + "^" + std::to_string(k) + "}");
  for (const auto& f : out.flexes.flexes) {
    const auto r = residual_point(field, curve, f.point);
    if (!field.is_zero(curve.form().evaluate(field, r)) ||
        !field.is_zero(dot(field, tangent_line(field, curve, f.point), r)))
      throw InvariantError("residual point is not on the curve and the tangent");
    out.residuals.push_back(r);
  }

  auto sorted = out.residuals;
  std::sort(sorted.begin(), sorted.end(), point_less);
  const auto distinct = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());

  DistinctnessVerdict& v = out.verdict;
  v.prime = p;
  v.ext_degree = k;
  v.flex_count = static_cast<int>(out.flexes.flexes.size());
  v.hyperflex_count = out.flexes.hyperflex_count();
  v.distinct_residual_count = distinct;
  if (v.flex_count != expected)
    v.reason = "only " + std::to_string(v.flex_count) + " distinct flexes";
  else if (v.hyperflex_count > 0)
    v.reason = std::to_string(v.hyperflex_count) + " hyperflexes";
  else if (distinct != expected)
    v.reason = "residual points collide mod p";
  else
    v.kind = DistinctnessKind::Distinct;
  return out;
}

EliminantReport residual_eliminant(const PlaneCurve& curve, std::uint64_t seed) {
  if (curve.degree() != 4) throw DomainError("residual eliminant is defined for quartics");
  certify_smooth(curve);
  std::string failures;
  for (int attempt = 0; attempt < kCoordinateRetryBudget;) {
    FlexForm form = flex_form(curve, seed, attempt);
    attempt = form.attempt + 1;

    const QuotientQ ring{poly::monic(kQQ, to_rational(form.squarefree))};
    const QPoly x = ring.reduce(poly::x(kQQ));
    const QPoly z = ring.mul(to_rational(form.lift_num), ring.inv(to_rational(form.lift_den)));
    const Point3<QuotientQ> p{x, ring.one(), z};
    const auto& c = form.transformed;
    const auto g = gradient(ring, c, p);
    const Point3<QuotientQ> q{g[1], ring.neg(g[0]), ring.zero()};
    const auto c4 = c.evaluate(ring, q);
    const auto c3 = dot(ring, gradient(ring, c, q), p);
    const auto num = ring.sub(ring.mul(c3, g[1]), ring.mul(c4, x));
    const auto den = ring.neg(ring.add(ring.mul(c3, g[0]), c4));
    if (poly::gcd(kQQ, den, ring.modulus).degree() > 0) {
      failures += (failures.empty() ? "" : "; ") + matrix_string(form.change) +
                  ": residual point on the line y = 0";
      continue;
    }

    EliminantReport report;
    report.residual_x = ring.mul(num, ring.inv(den));
    const std::size_t n = static_cast<std::size_t>(ring.modulus.degree());
    std::vector<std::vector<BigRational>> mat(n, std::vector<BigRational>(n, 0));
    QPoly col = report.residual_x;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < col.c.size(); ++i) mat[i][j] = col.c[i];
      col = ring.mul(col, x);
    }
    report.eliminant = clear_denominators(charpoly(std::move(mat)));
    report.gcd_degree_with_flex_form =
        poly::gcd(kQQ, to_rational(report.eliminant), to_rational(form.squarefree)).degree();
    report.squarefree = is_squarefree_over_Q(report.eliminant);
    for (auto p : good_primes(curve, form, 100, 3)) {
      const PrimeField field(p);
      PrimePattern pat{p, {}, false};
      if (divisible(report.eliminant.lead(), p)) {
        pat.skipped = true;
      } else {
        pat.degrees = ff::degree_pattern(field, reduce(field, report.eliminant));
      }
      report.patterns.push_back(std::move(pat));
    }
    if (report.squarefree) {
      report.irreducibility = certify_irreducible_over_Q(report.eliminant, certificate_primes());
    } else {
      report.note = "eliminant has repeated roots: residual points of distinct flexes share an "
                    "x-coordinate; no irreducibility certificate attempted";
    }
    report.form = std::move(form);
    return report;
  }
  throw DomainError("residual elimination degenerates for every coordinate change: " + failures);
}

RootCheck check_eliminant_roots(const PlaneCurve& curve, const EliminantReport& report,
                                std::uint64_t p, std::uint64_t seed) {
  RootCheck out;
  out.prime = p;
  const auto status = check_prime(curve, report.form, p);
  if (!status.good) {
    out.reason = status.reason;
    return out;
  }
  if (divisible(report.eliminant.lead(), p)) {
    out.reason = "p divides the leading coefficient of the eliminant";
    return out;
  }
  out.ext_degree = splitting_degree(report.form, p);
  const auto set = flexes_over(curve, report.form, p, out.ext_degree, seed);
  const ExtField& field = set.field;
  const auto back = inverse_unimodular(report.form.change);
  std::vector<ExtField::Elem> direct;
  for (const auto& f : set.flexes) {
    const auto local = apply_matrix(field, back, residual_point(field, curve, f.point));
    if (field.is_zero(local[1])) {
      out.reason = "a residual point reduces onto the line y = 0";
      return out;
    }
    direct.push_back(field.div(local[0], local[1]));
  }
  std::vector<ExtField::Elem> from_roots;
  for (const auto& r : ff::roots(field, reduce_to(field, report.eliminant), seed))
    for (int i = 0; i < r.multiplicity; ++i) from_roots.push_back(r.value);
  std::sort(direct.begin(), direct.end());
  std::sort(from_roots.begin(), from_roots.end());
  out.applicable = true;
  out.matched = direct == from_roots;
  if (!out.matched) out.reason = "root multisets differ";
  return out;
}

std::vector<std::uint64_t> certificate_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 5; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

FlexReport analyze_flexes(const PlaneCurve& curve, const FlexOptions& options) {
  certify_smooth(curve);
  FlexReport report;
  report.form = flex_form(curve, options.seed);
  for (auto p : good_primes(curve, report.form, 100, 3)) {
    const PrimeField field(p);
    report.patterns.push_back({p, ff::degree_pattern(field, reduce(field, report.form.squarefree)), false});
  }
  report.flex_irreducibility = certify_irreducible_over_Q(report.form.squarefree, certificate_primes());

  const std::uint64_t p = options.prime ? *options.prime : choose_flex_prime(curve, report.form);
  const int k = options.ext ? *options.ext : splitting_degree(report.form, p);
  if (options.residuals && curve.degree() == 4) {
    auto rs = residual_distinctness(curve, report.form, p, k, options.seed);
    report.flexes = std::move(rs.flexes);
    report.residuals = std::move(rs.residuals);
    report.distinct_residuals = rs.verdict;
  } else {
    report.flexes = flexes_over(curve, report.form, p, k, options.seed);
  }
  return report;
}

}  // namespace gql
