#ifndef STIEFEL_REPORT_HPP
#define STIEFEL_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "stiefel/charclass.hpp"
#include "stiefel/manifold.hpp"
#include "stiefel/modp.hpp"
#include "stiefel/span.hpp"
#include "stiefel/torsion.hpp"

namespace stiefel {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kCsvHeader =
    "n,k,m,dim,height,span_lower,span_upper,stably_parallelizable,parallelizable";

struct CohomologyEntry {
  Nat prime = 0;
  RingPresentation presentation;
  std::vector<Nat> poincare;
  Nat total_dimension = 0;

  friend bool operator==(const CohomologyEntry&, const CohomologyEntry&) = default;
};

struct InvariantReport {
  ManifoldParams params;
  BasicInvariants basic;
  TorsionProfile torsion;
  std::vector<BigNat> transgression;  // C(n, k-j), j = 1..k
  std::vector<CohomologyEntry> cohomology;
  CharClassReport char_classes;
  SpanReport span;
  std::vector<std::string> notes;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// 2 and every prime dividing m, ascending.
std::vector<Nat> default_primes(Nat m);

// primes must be nonempty and all prime; they are sorted and deduplicated.
InvariantReport compute_report(const ManifoldParams& params, std::vector<Nat> primes,
                               std::optional<Nat> ext_span = std::nullopt);

enum class Format { Json, CsvRow, Text };

std::string to_json(const InvariantReport& report, bool pretty = true);
InvariantReport report_from_json(std::string_view text);
std::string csv_row(const InvariantReport& report);
std::string to_text(const InvariantReport& report);
std::string render(const InvariantReport& report, Format format);

std::string span_to_text(const ManifoldParams& params, const SpanReport& span);
std::string span_to_json(const ManifoldParams& params, const SpanReport& span);

}  // namespace stiefel

#endif  // STIEFEL_REPORT_HPP
