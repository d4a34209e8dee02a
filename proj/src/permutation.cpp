#include "gql/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gql/error.hpp"

namespace gql {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw ParseError("degree must be in 1.." + std::to_string(kMaxDegree) + ", got " +
                     std::to_string(degree));
}

}  // namespace

Permutation::Permutation(int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw DomainError("degree out of range: " + std::to_string(degree));
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxDegree) throw DomainError("degree out of range: " + std::to_string(n));
  std::vector<bool> seen(images.size(), false);
  images_.reserve(images.size());
  for (int v : images) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw DomainError("images do not form a bijection");
    seen[static_cast<std::size_t>(v)] = true;
    images_.push_back(static_cast<Point>(v));
  }
}

Permutation Permutation::transposition(int degree, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= degree || j >= degree)
    throw DomainError("invalid transposition points");
  Permutation p(degree);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cyc : cycles) {
    for (int v : cyc) {
      if (v < 0 || v >= degree) throw DomainError("cycle point out of range");
      if (used[static_cast<std::size_t>(v)]) throw DomainError("cycles are not disjoint");
      used[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      p.images_[static_cast<std::size_t>(cyc[k])] = static_cast<Point>(cyc[(k + 1) % cyc.size()]);
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<int>(i);
  return -1;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || image(i) == i) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = image(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = image(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

std::string Permutation::to_string() const {
  const auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

std::size_t Permutation::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : images_) h = (h ^ v) * 1099511628211ull;
  return h;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  Permutation r(p.degree());
  for (std::size_t i = 0; i < q.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DomainError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()));
  return p * q;
}

Permutation commutator(const Permutation& p, const Permutation& q) {
  return compose(compose(p.inverse(), q.inverse()), compose(p, q));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return compose(compose(g, p), g.inverse());
}

namespace {

// Cursor over a cycle-notation string; tracks points used so far.
struct CycleParser {
  std::string_view text;
  std::size_t pos = 0;
  int degree;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in \"" + std::string(text) +
                     "\"");
  }

  int read_point() {
    skip_ws();
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) fail("point too large");
      ++pos;
    }
    if (start == pos) fail("expected a point");
    if (value < 1 || value > degree)
      fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
    return static_cast<int>(value) - 1;
  }

  // Parses a run of cycles up to a top-level comma or end of input.
  Permutation read_element() {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] == ',') break;
      if (text[pos] != '(') fail("expected '('");
      ++pos;
      any = true;
      std::vector<int> cyc;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        continue;
      }
      while (true) {
        int v = read_point();
        if (used[static_cast<std::size_t>(v)])
          fail("repeated point " + std::to_string(v + 1));
        used[static_cast<std::size_t>(v)] = true;
        cyc.push_back(v);
        skip_ws();
        if (pos >= text.size()) fail("unterminated cycle");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] == ',') ++pos;
      }
      if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
    }
    if (!any) fail("empty element");
    return Permutation::from_cycles(degree, cycles);
  }
};

}  // namespace

Permutation parse_permutation(std::string_view text, int degree) {
  check_degree(degree);
  CycleParser parser{text, 0, degree};
  Permutation p = parser.read_element();
  if (!parser.at_end()) parser.fail("trailing input");
  return p;
}

std::vector<Permutation> parse_generator_list(std::string_view text, int degree) {
  check_degree(degree);
  CycleParser parser{text, 0, degree};
  std::vector<Permutation> gens;
  while (true) {
    gens.push_back(parser.read_element());
    if (parser.at_end()) break;
    if (parser.text[parser.pos] != ',') parser.fail("expected ','");
    ++parser.pos;
  }
  return gens;
}

}  // namespace gql
