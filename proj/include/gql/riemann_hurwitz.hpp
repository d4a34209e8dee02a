#pragma once

#include <cstdint>

namespace gql {

/// A degree-d cover of a genus-g0 curve by a genus-g1 curve with total
/// ramification degree R: 2 g1 - 2 = d (2 g0 - 2) + R.
struct CoverData {
  std::int64_t degree = 1;
  std::int64_t genus_source = 0;
  std::int64_t genus_base = 0;
  std::int64_t ramification_degree = 0;
};

/// R = 2 g1 - 2 - d (2 g0 - 2). Throws DomainError when R would be negative
/// or an argument is out of range.
std::int64_t ramification_degree(std::int64_t degree, std::int64_t genus_source,
                                 std::int64_t genus_base);

/// The g1 with 2 g1 - 2 = d (2 g0 - 2) + R. Throws DomainError on odd
/// right-hand side or negative genus.
std::int64_t genus_from_cover(std::int64_t degree, std::int64_t genus_base,
                              std::int64_t ramification);

bool validate_cover(const CoverData& cover);

}  // namespace gql
