#include "gql/riemann_hurwitz.hpp"

#include <string>

#include "gql/error.hpp"

namespace gql {

std::int64_t ramification_degree(std::int64_t degree, std::int64_t genus_source,
                                 std::int64_t genus_base) {
  if (degree < 1) throw DomainError("cover degree must be at least 1");
  if (genus_source < 0 || genus_base < 0) throw DomainError("genera must be nonnegative");
  const std::int64_t r = 2 * genus_source - 2 - degree * (2 * genus_base - 2);
  if (r < 0)
    throw DomainError("no such cover: 2*g_src - 2 >= d*(2*g_base - 2) fails (" +
                      std::to_string(2 * genus_source - 2) + " < " +
                      std::to_string(degree * (2 * genus_base - 2)) + ")");
  return r;
}

std::int64_t genus_from_cover(std::int64_t degree, std::int64_t genus_base,
                              std::int64_t ramification) {
  if (degree < 1) throw DomainError("cover degree must be at least 1");
  if (genus_base < 0) throw DomainError("genus must be nonnegative");
  if (ramification < 0) throw DomainError("ramification degree must be nonnegative");
  const std::int64_t rhs = degree * (2 * genus_base - 2) + ramification;
  if (rhs % 2 != 0)
    throw DomainError("parity: d*(2*g_base - 2) + R = " + std::to_string(rhs) +
                      " is odd but 2*g_src - 2 is even");
  const std::int64_t g = rhs / 2 + 1;
  if (g < 0) throw DomainError("negative source genus " + std::to_string(g));
  return g;
}

bool validate_cover(const CoverData& c) {
  if (c.degree < 1 || c.genus_source < 0 || c.genus_base < 0 || c.ramification_degree < 0)
    return false;
  return 2 * c.genus_source - 2 == c.degree * (2 * c.genus_base - 2) + c.ramification_degree;
}

}  // namespace gql
