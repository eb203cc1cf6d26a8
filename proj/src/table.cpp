#include "stiefel/table.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "stiefel/report.hpp"

namespace stiefel {

namespace {

Nat parse_nat(std::string_view s) {
  Nat v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not a non-negative integer: '" + std::string(s) + "'");
  return v;
}

// Points per batch; results of a batch are emitted in order before the
// next batch starts.
constexpr std::size_t kBatch = 512;

struct Point {
  Nat n, k, m;
};

}  // namespace

NatRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const Nat v = parse_nat(text);
    return {v, v};
  }
  return {parse_nat(text.substr(0, dots)), parse_nat(text.substr(dots + 2))};
}

std::size_t generate_table(const GridSpec& spec, std::ostream& out, const Diagnostics& diag) {
  if (spec.n.empty())
    throw std::invalid_argument("table: empty n range");
  if (spec.m.empty())
    throw std::invalid_argument("table: empty m range");
  if (spec.k && spec.k->empty())
    throw std::invalid_argument("table: empty k range");
  if (spec.primes && spec.primes->empty())
    throw std::invalid_argument("table: empty prime list");

  const auto report = [&](const std::string& s) {
    if (diag)
      diag(s);
  };

  std::vector<Point> points;
  for (Nat n = spec.n.lo; n <= spec.n.hi; ++n) {
    const Nat k_lo = spec.k ? spec.k->lo : 1;
    const Nat k_hi = spec.k ? spec.k->hi : (n >= 2 ? n - 1 : 0);
    if (!spec.k && n < 2) {
      report("skip n=" + std::to_string(n) + ": no k with 1 <= k < n");
      continue;
    }
    for (Nat k = k_lo; k <= k_hi; ++k) {
      for (Nat m = spec.m.lo; m <= spec.m.hi; ++m) {
        try {
          (void)validate(n, k, m);
          points.push_back({n, k, m});
        } catch (const ParamError& e) {
          report("skip (" + std::to_string(n) + "," + std::to_string(k) + "," +
                 std::to_string(m) + "): " + e.what());
        }
      }
    }
  }

  if (spec.format == TableFormat::Csv)
    out << kCsvHeader << '\n';

  const auto render_point = [&](const Point& pt) {
    const auto params = validate(pt.n, pt.k, pt.m);
    auto rep = compute_report(params, spec.primes ? *spec.primes : default_primes(pt.m));
    return spec.format == TableFormat::Csv ? csv_row(rep) + "\n" : to_json(rep, false);
  };

  const unsigned jobs = std::max(1u, spec.jobs);
  std::vector<std::string> rows;
  for (std::size_t start = 0; start < points.size(); start += kBatch) {
    const std::size_t count = std::min(kBatch, points.size() - start);
    rows.assign(count, {});
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          rows[i] = render_point(points[start + i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
          next = count;
        }
      }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
    }
    if (failure)
      std::rethrow_exception(failure);

    for (const auto& row : rows)
      out << row;
    if (!out)
      throw std::runtime_error("table: write failed");
  }
  return points.size();
}

}  // namespace stiefel
