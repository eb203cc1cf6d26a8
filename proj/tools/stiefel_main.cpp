// stiefel: invariants of the m-projective Stiefel manifolds W_{n,k;m}.
//
//   stiefel compute --n 4 --k 2 --m 2 [--primes 2,3] [--format json|text]
//   stiefel table --n 3..10 --k auto --m 2..6 [--format csv|json] [--jobs 8] [--out FILE]
//   stiefel span --n 4 --k 2 --m 2 [--ext-span 13] [--format json|text]
//
// Exit codes: 0 success, 2 invalid parameters, 1 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "stiefel/report.hpp"
#include "stiefel/table.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 1;

std::vector<stiefel::Nat> parse_primes(const std::string& text) {
  std::vector<stiefel::Nat> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto r = stiefel::parse_range(tok);
    if (r.lo != r.hi)
      throw std::invalid_argument("prime list entries must be single values");
    out.push_back(r.lo);
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

unsigned jobs_from_env() {
  if (const char* env = std::getenv("STIEFEL_JOBS")) {
    const auto r = stiefel::parse_range(env);
    return static_cast<unsigned>(r.lo);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of m-projective Stiefel manifolds W_{n,k;m}"};
  app.require_subcommand(1);

  stiefel::Nat n = 0, k = 0, m = 0;
  std::string primes_text;
  std::string format;

  auto* compute = app.add_subcommand("compute", "Full invariant report for one (n, k, m)");
  compute->add_option("--n", n, "complex dimension n")->required();
  compute->add_option("--k", k, "frame length k, 1 <= k < n")->required();
  compute->add_option("--m", m, "order of the cyclic group, m >= 2")->required();
  compute->add_option("--primes", primes_text, "comma-separated primes (default: 2 and primes of m)");
  compute->add_option("--format", format, "json or text")
      ->default_val("text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string n_range, k_range, m_range, out_path;
  std::optional<unsigned> jobs;
  auto* table = app.add_subcommand("table", "Summary table over a parameter grid");
  table->add_option("--n", n_range, "LO..HI")->required();
  table->add_option("--k", k_range, "LO..HI or auto (1..n-1)")->default_val("auto");
  table->add_option("--m", m_range, "LO..HI")->required();
  table->add_option("--primes", primes_text, "comma-separated primes for JSON rows");
  table->add_option("--format", format, "csv or json (JSON Lines)")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--jobs", jobs, "worker threads (fallback: STIEFEL_JOBS)");
  table->add_option("--out", out_path, "output file (default: stdout)");

  std::optional<stiefel::Nat> ext_span;
  auto* span = app.add_subcommand("span", "Span bounds and parallelizability verdicts");
  span->add_option("--n", n, "complex dimension n")->required();
  span->add_option("--k", k, "frame length k, 1 <= k < n")->required();
  span->add_option("--m", m, "order of the cyclic group, m >= 2")->required();
  span->add_option("--ext-span", ext_span,
                   "known span(2nk xi_{2n-1}) over RP^{2n-1}; requires m = 2");
  span->add_option("--format", format, "json or text")
      ->default_val("text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*compute) {
      const auto params = stiefel::validate(n, k, m);
      const auto primes =
          primes_text.empty() ? stiefel::default_primes(m) : parse_primes(primes_text);
      const auto report = stiefel::compute_report(params, primes);
      std::cout << stiefel::render(report, format == "json" ? stiefel::Format::Json
                                                            : stiefel::Format::Text);
    } else if (*table) {
      stiefel::GridSpec spec;
      spec.n = stiefel::parse_range(n_range);
      if (k_range != "auto")
        spec.k = stiefel::parse_range(k_range);
      spec.m = stiefel::parse_range(m_range);
      if (!primes_text.empty())
        spec.primes = parse_primes(primes_text);
      spec.format = format == "json" ? stiefel::TableFormat::JsonLines : stiefel::TableFormat::Csv;
      spec.jobs = jobs ? *jobs : jobs_from_env();
      if (spec.jobs == 0)
        spec.jobs = std::max(1u, std::thread::hardware_concurrency());

      const auto diag = [](const std::string& s) { std::cerr << s << '\n'; };
      if (out_path.empty()) {
        stiefel::generate_table(spec, std::cout, diag);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
          std::cerr << "error: cannot open " << out_path << '\n';
          return kExitInternal;
        }
        stiefel::generate_table(spec, out, diag);
      }
    } else if (*span) {
      const auto params = stiefel::validate(n, k, m);
      const auto report = stiefel::span_report(params, ext_span);
      std::cout << (format == "json" ? stiefel::span_to_json(params, report)
                                     : stiefel::span_to_text(params, report));
    }
  } catch (const std::logic_error& e) {
    // ParamError, invalid_argument and out_of_range all land here.
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
