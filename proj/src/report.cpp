#include "stiefel/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stiefel {

using Json = nlohmann::ordered_json;

std::vector<Nat> default_primes(Nat m) {
  std::vector<Nat> primes{2};
  for (const auto& [p, e] : factorize(m))
    primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

InvariantReport compute_report(const ManifoldParams& params, std::vector<Nat> primes,
                               std::optional<Nat> ext_span) {
  if (primes.empty())
    throw std::invalid_argument("compute_report: prime list is empty");
  for (Nat p : primes)
    if (!is_prime(p))
      throw std::invalid_argument("compute_report: " + std::to_string(p) + " is not prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  const Nat n = params.n(), k = params.k();
  InvariantReport r{params,
                    basic_invariants(params),
                    torsion_profile(params),
                    {},
                    {},
                    char_class_report(params),
                    span_report(params, ext_span),
                    {}};
  for (Nat j = 1; j <= k; ++j)
    r.transgression.push_back(transgression_coefficient(params, j));

  for (Nat p : primes) {
    CohomologyEntry e;
    e.prime = p;
    e.presentation = presentation(params, p);
    e.poincare = poincare_polynomial(e.presentation, n, k);
    e.total_dimension = total_dimension(e.presentation, k);
    r.cohomology.push_back(std::move(e));
  }

  if (k == 1)
    r.notes.push_back("extrapolated: k = 1 mod-p cohomology uses the 2 <= k < n case "
                      "formulas specialized to the lens space L^n(m)");
  if (k == 1 || k + 1 == n)
    r.notes.push_back("characteristic classes: total-class formulas evaluated outside "
                      "2 <= k <= n-2 from the stable tangent bundle nk xi^vee");
  if (params.m() % 2 == 1 && std::binary_search(primes.begin(), primes.end(), Nat{2}))
    r.notes.push_back("p = 2 with m odd: additive basis only, squares of odd generators "
                      "not determined");
  r.notes.push_back("integral cohomology: free classes in degrees 2n-2k+2j-1 (j = 1..k) "
                    "are listed without ring relations");
  return r;
}

namespace {

Json to_json_value(const InvariantReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["params"] = {{"n", r.params.n()}, {"k", r.params.k()}, {"m", r.params.m()}};

  const auto& b = r.basic;
  j["basic"] = {{"dimension", b.dimension},
                {"pi1_order", b.pi1_order},
                {"euler_characteristic", b.euler_characteristic},
                {"orientable", b.orientable},
                {"picard_order", b.picard_order},
                {"almost_complex_guaranteed", b.almost_complex_guaranteed},
                {"complex_structure_guaranteed", b.complex_structure_guaranteed}};

  Json trans = Json::array();
  for (const auto& c : r.transgression)
    trans.push_back(c.str());
  j["torsion"] = {{"orders", r.torsion.orders},
                  {"height", r.torsion.height},
                  {"transgression_coefficients", trans}};

  Json coh = Json::array();
  for (const auto& e : r.cohomology) {
    const auto& pr = e.presentation;
    Json c;
    c["prime"] = e.prime;
    c["case"] = std::string(to_string(pr.cohomology_case));
    c["rendering"] = render(pr);
    c["poly_generator"] = pr.poly_generator
                              ? Json{{"degree", pr.poly_generator->degree},
                                     {"truncation", pr.poly_generator->truncation}}
                              : Json(nullptr);
    c["exterior_degrees"] = pr.exterior_degrees;
    c["square_rule"] = std::string(to_string(pr.square_rule));
    c["n_prime"] = pr.n_prime ? Json(*pr.n_prime) : Json(nullptr);
    c["poincare"] = e.poincare;
    c["total_dimension"] = e.total_dimension;
    coh.push_back(std::move(c));
  }
  j["cohomology"] = std::move(coh);

  Json pont = Json::array();
  for (const auto& t : r.char_classes.pontrjagin)
    pont.push_back({{"j", t.j},
                    {"raw_coefficient", t.raw_coefficient.str()},
                    {"modulus", t.modulus},
                    {"reduced", t.reduced},
                    {"is_zero", t.is_zero}});
  Json sw = Json::array();
  for (const auto& t : r.char_classes.stiefel_whitney)
    sw.push_back({{"degree", t.degree}, {"present", t.present}});
  j["char_classes"] = {{"pontrjagin", std::move(pont)},
                       {"stiefel_whitney", std::move(sw)},
                       {"all_pontrjagin_vanish", r.char_classes.all_pontrjagin_vanish},
                       {"all_sw_vanish", r.char_classes.all_sw_vanish}};

  const auto& s = r.span;
  j["span"] = {{"span_lower", s.span_lower},
               {"span_upper", s.span_upper},
               {"stable_span_lower", s.stable_span_lower},
               {"span_eq_stable_guaranteed", s.span_eq_stable_guaranteed},
               {"stably_parallelizable", std::string(to_string(s.stably_parallelizable))},
               {"parallelizable", std::string(to_string(s.parallelizable))},
               {"provenance", s.provenance}};
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string to_json(const InvariantReport& report, bool pretty) {
  return to_json_value(report).dump(pretty ? 2 : -1) + "\n";
}

InvariantReport report_from_json(std::string_view text) {
  const Json j = Json::parse(text);
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version");
  const auto& jp = j.at("params");
  InvariantReport r{validate(jp.at("n").get<Nat>(), jp.at("k").get<Nat>(), jp.at("m").get<Nat>()),
                    {}, {}, {}, {}, {}, {}, {}};

  const auto& b = j.at("basic");
  r.basic.dimension = b.at("dimension").get<Nat>();
  r.basic.pi1_order = b.at("pi1_order").get<Nat>();
  r.basic.euler_characteristic = b.at("euler_characteristic").get<std::int64_t>();
  r.basic.orientable = b.at("orientable").get<bool>();
  r.basic.picard_order = b.at("picard_order").get<Nat>();
  r.basic.almost_complex_guaranteed = b.at("almost_complex_guaranteed").get<bool>();
  r.basic.complex_structure_guaranteed = b.at("complex_structure_guaranteed").get<bool>();

  const auto& t = j.at("torsion");
  r.torsion.orders = t.at("orders").get<std::vector<Nat>>();
  r.torsion.height = t.at("height").get<Nat>();
  for (const auto& c : t.at("transgression_coefficients"))
    r.transgression.push_back(BigNat::from_string(c.get<std::string>()));

  for (const auto& c : j.at("cohomology")) {
    CohomologyEntry e;
    e.prime = c.at("prime").get<Nat>();
    auto& pr = e.presentation;
    pr.p = e.prime;
    pr.cohomology_case = cohomology_case_from_string(c.at("case").get<std::string>());
    if (!c.at("poly_generator").is_null())
      pr.poly_generator = PolyGenerator{c["poly_generator"].at("degree").get<Nat>(),
                                        c["poly_generator"].at("truncation").get<Nat>()};
    pr.exterior_degrees = c.at("exterior_degrees").get<std::vector<Nat>>();
    pr.square_rule = square_rule_from_string(c.at("square_rule").get<std::string>());
    if (!c.at("n_prime").is_null())
      pr.n_prime = c["n_prime"].get<Nat>();
    e.poincare = c.at("poincare").get<std::vector<Nat>>();
    e.total_dimension = c.at("total_dimension").get<Nat>();
    r.cohomology.push_back(std::move(e));
  }

  const auto& cc = j.at("char_classes");
  for (const auto& p : cc.at("pontrjagin"))
    r.char_classes.pontrjagin.push_back(
        {p.at("j").get<Nat>(), BigNat::from_string(p.at("raw_coefficient").get<std::string>()),
         p.at("modulus").get<Nat>(), p.at("reduced").get<Nat>(), p.at("is_zero").get<bool>()});
  for (const auto& w : cc.at("stiefel_whitney"))
    r.char_classes.stiefel_whitney.push_back({w.at("degree").get<Nat>(), w.at("present").get<bool>()});
  r.char_classes.all_pontrjagin_vanish = cc.at("all_pontrjagin_vanish").get<bool>();
  r.char_classes.all_sw_vanish = cc.at("all_sw_vanish").get<bool>();

  const auto& s = j.at("span");
  r.span.span_lower = s.at("span_lower").get<Nat>();
  r.span.span_upper = s.at("span_upper").get<Nat>();
  r.span.stable_span_lower = s.at("stable_span_lower").get<Nat>();
  r.span.span_eq_stable_guaranteed = s.at("span_eq_stable_guaranteed").get<bool>();
  r.span.stably_parallelizable =
      tristate_from_string(s.at("stably_parallelizable").get<std::string>());
  r.span.parallelizable = tristate_from_string(s.at("parallelizable").get<std::string>());
  r.span.provenance = s.at("provenance").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string csv_row(const InvariantReport& r) {
  std::ostringstream os;
  os << r.params.n() << ',' << r.params.k() << ',' << r.params.m() << ',' << r.basic.dimension
     << ',' << r.torsion.height << ',' << r.span.span_lower << ',' << r.span.span_upper << ','
     << to_string(r.span.stably_parallelizable) << ',' << to_string(r.span.parallelizable);
  return os.str();
}

namespace {

std::string poincare_text(const std::vector<Nat>& coeffs) {
  std::string out;
  for (std::size_t q = 0; q < coeffs.size(); ++q) {
    if (!coeffs[q])
      continue;
    if (!out.empty())
      out += " + ";
    if (coeffs[q] != 1 || q == 0)
      out += std::to_string(coeffs[q]);
    if (q == 1)
      out += "t";
    else if (q > 1)
      out += "t^" + std::to_string(q);
  }
  return out;
}

}  // namespace

std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  const auto& p = r.params;
  os << "W_{" << p.n() << "," << p.k() << ";" << p.m() << "}\n";
  os << "  dimension              " << r.basic.dimension << "\n";
  os << "  pi_1                   Z/" << r.basic.pi1_order << "\n";
  os << "  Euler characteristic   " << r.basic.euler_characteristic << "\n";
  os << "  orientable             " << (r.basic.orientable ? "yes" : "no") << "\n";
  os << "  Picard group           Z/" << r.basic.picard_order << "\n";
  os << "  almost complex         " << (r.basic.almost_complex_guaranteed ? "yes" : "not asserted")
     << "\n";
  os << "  complex structure      "
     << (r.basic.complex_structure_guaranteed ? "yes" : "not asserted") << "\n";

  os << "\nIntegral torsion (order of y2^r, r = 1.." << p.n() << ")\n  ";
  for (std::size_t i = 0; i < r.torsion.orders.size(); ++i)
    os << (i ? " " : "") << r.torsion.orders[i];
  os << "\n  height of y2           " << r.torsion.height << "\n";
  os << "  transgressions         ";
  for (std::size_t j = 0; j < r.transgression.size(); ++j)
    os << (j ? ", " : "") << "tau(v" << 2 * (p.n() - p.k() + j + 1) - 1
       << ") = " << r.transgression[j].str() << " y2^" << p.n() - p.k() + j + 1;
  os << "\n";

  os << "\nMod-p cohomology\n";
  for (const auto& e : r.cohomology) {
    os << "  p = " << e.prime << "  [" << to_string(e.presentation.cohomology_case) << "]  "
       << render(e.presentation) << "\n";
    os << "    Poincare series      " << poincare_text(e.poincare) << "\n";
    os << "    total dimension      " << e.total_dimension << "\n";
  }

  os << "\nPontrjagin classes\n";
  if (r.char_classes.pontrjagin.empty())
    os << "  (none in range)\n";
  for (const auto& t : r.char_classes.pontrjagin)
    os << "  p_" << t.j << " = " << t.raw_coefficient.str() << " y2^" << 2 * t.j << " = "
       << t.reduced << " mod " << t.modulus << (t.is_zero ? "  (zero)" : "  (nonzero)") << "\n";
  os << "Stiefel-Whitney classes\n";
  bool any_sw = false;
  for (const auto& w : r.char_classes.stiefel_whitney) {
    if (w.present) {
      os << "  w_" << w.degree << " = y1^" << w.degree << "\n";
      any_sw = true;
    }
  }
  if (!any_sw)
    os << "  w = 1\n";

  const auto& s = r.span;
  os << "\nVector fields\n";
  os << "  span                   " << s.span_lower << " <= span <= " << s.span_upper << "\n";
  os << "  stable span            >= " << s.stable_span_lower << "\n";
  os << "  span = stable span     "
     << (s.span_eq_stable_guaranteed ? "guaranteed" : "not guaranteed") << "\n";
  os << "  stably parallelizable  " << to_string(s.stably_parallelizable) << "\n";
  os << "  parallelizable         " << to_string(s.parallelizable) << "\n";
  for (const auto& line : s.provenance)
    os << "    - " << line << "\n";

  if (!r.notes.empty()) {
    os << "\nNotes\n";
    for (const auto& n : r.notes)
      os << "  - " << n << "\n";
  }
  return os.str();
}

std::string render(const InvariantReport& report, Format format) {
  switch (format) {
  case Format::Json: return to_json(report);
  case Format::CsvRow: return csv_row(report) + "\n";
  case Format::Text: return to_text(report);
  }
  return {};
}

std::string span_to_text(const ManifoldParams& p, const SpanReport& s) {
  std::ostringstream os;
  os << "W_{" << p.n() << "," << p.k() << ";" << p.m() << "}  dimension " << p.dimension() << "\n";
  os << "  span                   " << s.span_lower << " <= span <= " << s.span_upper << "\n";
  os << "  stable span            >= " << s.stable_span_lower << "\n";
  os << "  span = stable span     "
     << (s.span_eq_stable_guaranteed ? "guaranteed" : "not guaranteed") << "\n";
  os << "  stably parallelizable  " << to_string(s.stably_parallelizable) << "\n";
  os << "  parallelizable         " << to_string(s.parallelizable) << "\n";
  for (const auto& line : s.provenance)
    os << "    - " << line << "\n";
  return os.str();
}

std::string span_to_json(const ManifoldParams& p, const SpanReport& s) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["params"] = {{"n", p.n()}, {"k", p.k()}, {"m", p.m()}};
  j["span"] = {{"span_lower", s.span_lower},
               {"span_upper", s.span_upper},
               {"stable_span_lower", s.stable_span_lower},
               {"span_eq_stable_guaranteed", s.span_eq_stable_guaranteed},
               {"stably_parallelizable", std::string(to_string(s.stably_parallelizable))},
               {"parallelizable", std::string(to_string(s.parallelizable))},
               {"provenance", s.provenance}};
  return j.dump(2) + "\n";
}

}  // namespace stiefel
