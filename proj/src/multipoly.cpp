#include "gql/multipoly.hpp"

#include <cctype>

#include "gql/error.hpp"

namespace gql {

MultiPoly::MultiPoly(Terms terms) : terms_(std::move(terms)) { prune(); }

void MultiPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MultiPoly MultiPoly::constant(const BigInt& c) { return monomial({0, 0, 0}, c); }

MultiPoly MultiPoly::variable(int var) {
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(var)] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const BigInt& c) {
  Terms t;
  t[e] = c;
  return MultiPoly(std::move(t));
}

MultiPoly MultiPoly::linear(std::int64_t a, std::int64_t b, std::int64_t c) {
  Terms t;
  t[{1, 0, 0}] = static_cast<long>(a);
  t[{0, 1, 0}] = static_cast<long>(b);
  t[{0, 0, 1}] = static_cast<long>(c);
  return MultiPoly(std::move(t));
}

BigInt MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = total_degree();
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) return std::nullopt;
  return d;
}

BigInt MultiPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  Terms t = terms_;
  for (const auto& [e, c] : o.terms_) t[e] += c;
  return MultiPoly(std::move(t));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  Terms t = terms_;
  for (const auto& [e, c] : o.terms_) t[e] -= c;
  return MultiPoly(std::move(t));
}

MultiPoly MultiPoly::operator-() const {
  Terms t = terms_;
  for (auto& [e, c] : t) c = -c;
  return MultiPoly(std::move(t));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  Terms t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) t[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
  return MultiPoly(std::move(t));
}

MultiPoly MultiPoly::scaled(const BigInt& s) const {
  Terms t = terms_;
  for (auto& [e, c] : t) c *= s;
  return MultiPoly(std::move(t));
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(1), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MultiPoly MultiPoly::divided(const BigInt& s) const {
  Terms t = terms_;
  for (auto& [e, c] : t) {
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t())) throw DomainError("inexact division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  }
  return MultiPoly(std::move(t));
}

MultiPoly MultiPoly::derivative(int var) const {
  Terms t;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent f = e;
    --f[v];
    t[f] += c * e[v];
  }
  return MultiPoly(std::move(t));
}

MultiPoly MultiPoly::substitute_linear(const IntMatrix3& m) const {
  std::array<MultiPoly, 3> lin;
  for (std::size_t i = 0; i < 3; ++i) lin[i] = linear(m[i][0], m[i][1], m[i][2]);
  // Cache powers of each linear form.
  std::array<std::vector<MultiPoly>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(constant(1));
    for (int k = 1; k <= std::max(degree_in(static_cast<int>(i)), 0); ++k)
      powers[i].push_back(powers[i].back() * lin[i]);
  }
  MultiPoly acc;
  for (const auto& [e, c] : terms_)
    acc = acc + (powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
                 powers[2][static_cast<std::size_t>(e[2])])
                    .scaled(c);
  return acc;
}

BigInt MultiPoly::evaluate(const std::array<BigInt, 3>& pt) const {
  return evaluate(IntegerRing{}, pt);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  static const char* names[] = {"x", "y", "z"};
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s;
}

MultiPoly hessian(const MultiPoly& f) {
  std::array<std::array<MultiPoly, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.derivative(i).derivative(j);
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
         h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

MultiPoly parse_multipoly(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in \"" + text + "\"");
  };
  MultiPoly::Terms terms;
  bool first = true;
  skip();
  if (pos >= text.size()) fail("empty polynomial");
  while (pos < text.size()) {
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    BigInt coeff = 1;
    Exponent e{0, 0, 0};
    bool have_factor = false;
    while (true) {
      skip();
      if (pos >= text.size()) break;
      const char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        coeff *= BigInt(text.substr(start, pos - start));
      } else if (ch == 'x' || ch == 'y' || ch == 'z') {
        ++pos;
        int power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          std::size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (start == pos) fail("expected exponent");
          power = std::stoi(text.substr(start, pos - start));
        }
        e[static_cast<std::size_t>(ch - 'x')] += power;
      } else {
        fail("unexpected character");
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    terms[e] += sign * coeff;
    skip();
  }
  return MultiPoly(std::move(terms));
}

std::int64_t det3(const IntMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IntMatrix3 inverse_unimodular(const IntMatrix3& m) {
  const std::int64_t d = det3(m);
  if (d != 1 && d != -1) throw DomainError("matrix is not unimodular");
  IntMatrix3 inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // Cofactor of m[j][i].
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * d;
    }
  return inv;
}

IntMatrix3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

IntMatrix3 multiply(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace gql
