#ifndef STIEFEL_TABLE_HPP
#define STIEFEL_TABLE_HPP

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stiefel/arith.hpp"

namespace stiefel {

struct NatRange {
  Nat lo = 0;
  Nat hi = 0;
  bool empty() const { return lo > hi; }
};

// "LO..HI" or a single value.
NatRange parse_range(std::string_view text);

enum class TableFormat { Csv, JsonLines };

struct GridSpec {
  NatRange n;
  std::optional<NatRange> k;  // nullopt: 1..n-1 for each n
  NatRange m;
  std::optional<std::vector<Nat>> primes;  // nullopt: default_primes(m) per point
  TableFormat format = TableFormat::Csv;
  unsigned jobs = 1;
};

using Diagnostics = std::function<void(const std::string&)>;

// Rows are written in lexicographic (n, k, m) order whatever the number of
// jobs; CSV output starts with the header line. Points that fail
// validation are skipped and reported to diag. Returns the number of rows.
std::size_t generate_table(const GridSpec& spec, std::ostream& out,
                           const Diagnostics& diag = {});

}  // namespace stiefel

#endif  // STIEFEL_TABLE_HPP
