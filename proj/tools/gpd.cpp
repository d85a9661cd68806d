// Command-line front end. Reads groupoid, span, and state documents, runs
// the exact-arithmetic pipeline on them, and reports results as plain text
// on stdout with optional JSON and CSV files on the side.
//
// Exit codes: 0 on success, 1 when the input or a computed structure breaks
// an algebraic law (a violation, reported with a witness), 2 on anything
// else that stops the run (unreadable files, malformed documents, resource
// bounds, unsupported parameters).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpd/checks.hpp"
#include "gpd/degroupoidify.hpp"
#include "gpd/errors.hpp"
#include "gpd/feynman.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/hecke_algebra.hpp"
#include "gpd/hecke_geometry.hpp"
#include "gpd/hecke_orbits.hpp"
#include "gpd/json_io.hpp"
#include "gpd/linalg.hpp"
#include "gpd/normal_order.hpp"
#include "gpd/oscillator.hpp"
#include "gpd/perm.hpp"
#include "gpd/span.hpp"

namespace {

using gpd::BoundError;
using gpd::ClassTable;
using gpd::DomainError;
using gpd::FiniteGroupoid;
using gpd::GroupoidOver;
using gpd::GroupoidPtr;
using gpd::Rational;
using gpd::RationalMatrix;
using gpd::RationalVector;
using gpd::Span;
using gpd::SpanOptions;
using gpd::StructuralError;
using gpd::ValidationReport;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw DomainError("cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
  if (!out) throw DomainError("cannot write " + path);
}

// Validation failures become violations; the first few witness lines ride
// along in the message.
void require_valid(const ValidationReport& report, const std::string& what) {
  if (report.ok) return;
  std::string msg = what + " fails validation";
  const std::size_t shown = std::min<std::size_t>(report.violations.size(), 3);
  for (std::size_t i = 0; i < shown; ++i) msg += "\n  witness: " + report.violations[i];
  if (report.violations.size() > shown)
    msg += "\n  (" + std::to_string(report.violations.size() - shown) + " more)";
  throw StructuralError(msg);
}

GroupoidPtr load_groupoid(const std::string& path) {
  GroupoidPtr g = gpd::jsonio::parse_groupoid(read_file(path));
  require_valid(validate_groupoid(*g), path);
  return g;
}

Span load_span(const std::string& path) {
  Span s = gpd::jsonio::parse_span(read_file(path));
  require_valid(validate_groupoid(*s.left.source), path + ": apex");
  require_valid(validate_groupoid(*s.left.target), path + ": left target");
  require_valid(validate_groupoid(*s.right.target), path + ": right target");
  require_valid(validate_span(s), path);
  return s;
}

GroupoidOver load_over(const std::string& path) {
  GroupoidOver v = gpd::jsonio::parse_over(read_file(path));
  require_valid(validate_groupoid(*v.projection.source), path + ": total");
  require_valid(validate_groupoid(*v.projection.target), path + ": base");
  require_valid(validate_functor(v.projection), path + ": projection");
  return v;
}

void emit_json(const std::string& path, const std::string& status, const std::string& payload) {
  if (path.empty()) return;
  write_file(path, gpd::jsonio::envelope(status, payload) + "\n");
}

// Explicit --cap wins, then the GPD_CAP environment variable, then the
// command's default.
std::uint64_t resolve_cap(bool cap_given, std::uint64_t cap_value,
                          std::uint64_t default_value = SpanOptions{}.cap) {
  if (cap_given) return cap_value;
  if (const char* env = std::getenv("GPD_CAP")) {
    const std::string text(env);
    std::uint64_t parsed = 0;
    std::size_t used = 0;
    try {
      parsed = std::stoull(text, &used);
    } catch (const std::exception&) {
      throw DomainError("GPD_CAP must be a positive integer, got \"" + text + "\"");
    }
    if (used != text.size() || parsed == 0)
      throw DomainError("GPD_CAP must be a positive integer, got \"" + text + "\"");
    return parsed;
  }
  return default_value;
}

int run_card(const std::string& path, const std::string& json_out) {
  const GroupoidPtr g = load_groupoid(path);
  const Rational c = cardinality(*g);
  std::cout << c.str() << "\n";
  emit_json(json_out, "ok", "{\"cardinality\":\"" + c.str() + "\"}");
  return 0;
}

int run_vector(const std::string& path, const std::string& json_out) {
  const GroupoidOver v = load_over(path);
  const ClassTable table = gpd::class_table(v.projection.target);
  const RationalVector vec = vector_of(table, v);
  for (std::size_t i = 0; i < table.rows(); ++i)
    std::cout << table.classes.reps[i] << ": " << vec[i].str() << "\n";
  emit_json(json_out, "ok", gpd::jsonio::vector_json(table, vec));
  return 0;
}

int run_matrix(const std::string& path, const std::string& json_out, const std::string& csv_out) {
  const Span s = load_span(path);
  const ClassTable codomain = gpd::class_table(s.left.target);
  const ClassTable domain = gpd::class_table(s.right.target);
  const RationalMatrix m = matrix_of(codomain, domain, s);
  std::cout << m.str();
  emit_json(json_out, "ok", gpd::jsonio::matrix_json(codomain, domain, m));
  if (!csv_out.empty()) write_file(csv_out, gpd::jsonio::matrix_csv(codomain, domain, m));
  return 0;
}

int run_compose(const std::string& second_path, const std::string& first_path, bool cap_given,
                std::uint64_t cap_value, const std::string& json_out) {
  const Span second = load_span(second_path);
  const Span first = load_span(first_path);
  SpanOptions options;
  options.cap = resolve_cap(cap_given, cap_value);
  const Span composite = compose_spans(second, first, options);
  const std::string doc = gpd::jsonio::span_json(composite);
  std::cout << doc << "\n";
  emit_json(json_out, "ok", doc);
  return 0;
}

int run_inner(const std::string& a_path, const std::string& b_path, const std::string& json_out) {
  const GroupoidOver a = load_over(a_path);
  const GroupoidOver b = load_over(b_path);
  const Rational value = inner_product(a, b);
  std::cout << value.str() << "\n";
  emit_json(json_out, "ok", "{\"inner\":\"" + value.str() + "\"}");
  return 0;
}

int run_genfun(const std::string& path, std::uint64_t max_degree, const std::string& json_out) {
  const GroupoidOver v = load_over(path);
  const ClassTable table = gpd::class_table(v.projection.target);
  const RationalVector coeff =
      generating_function(table, v, static_cast<std::size_t>(max_degree));
  std::string payload = "{\"coefficients\":[";
  for (std::size_t n = 0; n < coeff.size(); ++n) {
    std::cout << n << ": " << coeff[n].str() << "\n";
    if (n > 0) payload += ",";
    payload += "\"" + coeff[n].str() + "\"";
  }
  payload += "]}";
  emit_json(json_out, "ok", payload);
  return 0;
}

struct NamedCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

int finish_checks(const std::vector<NamedCheck>& results, const std::string& json_out,
                  const std::string& suite, nlohmann::json extra) {
  bool all = true;
  for (const NamedCheck& r : results) {
    if (r.ok) {
      std::cout << "ok " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    } else {
      std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
      all = false;
    }
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const NamedCheck& r : results)
    checks.push_back({{"detail", r.detail}, {"name", r.name}, {"ok", r.ok}});
  extra["checks"] = checks;
  emit_json(json_out, all ? "ok" : "violation", extra.dump());
  if (!all) {
    std::cerr << "violation: " << suite << " has failing checks\n";
    return 1;
  }
  return 0;
}

int run_osc_verify(std::uint64_t max_n, bool cap_given, std::uint64_t cap_value,
                   const std::string& json_out) {
  if (max_n < 2 || max_n > 7)
    throw DomainError("--max-n must be between 2 and 7, got " + std::to_string(max_n));
  const auto n_top = static_cast<std::uint32_t>(max_n);
  SpanOptions options;
  // The realizer composes three ladder spans one size above the tower top,
  // which outgrows the library default walk bound.
  options.cap = resolve_cap(cap_given, cap_value, 100'000'000);
  std::vector<NamedCheck> results;

  const gpd::osc::CommutationReport rep = gpd::osc::verify_commutation(n_top, options);
  {
    NamedCheck c{"ladder entries", true, ""};
    for (std::uint32_t m = 0; m <= n_top && c.ok; ++m)
      for (std::uint32_t n = 0; n <= n_top && c.ok; ++n) {
        const Rational lower_want =
            m + 1 == n ? Rational::from_uint64(n) : Rational::from_uint64(0);
        const Rational raise_want =
            m == n + 1 ? Rational::from_uint64(1) : Rational::from_uint64(0);
        if (rep.annihilate.at(m, n) != lower_want || rep.create.at(m, n) != raise_want) {
          c.ok = false;
          c.detail = "unexpected entry at (" + std::to_string(m) + ", " + std::to_string(n) + ")";
        }
      }
    if (c.ok) c.detail = "lowering entries n, raising entries 1";
    results.push_back(c);
  }
  {
    NamedCheck c{"commutation corner", rep.block_verified, rep.excluded_band};
    if (!c.ok) c.detail = "the two composite matrices disagree below the top size";
    results.push_back(c);
  }
  {
    NamedCheck c{"number state pairings", true, ""};
    for (std::uint32_t m = 0; m <= n_top && c.ok; ++m)
      for (std::uint32_t n = m; n <= n_top && c.ok; ++n) {
        const Rational got =
            inner_product(gpd::osc::number_state(m, n_top), gpd::osc::number_state(n, n_top));
        const Rational want = m == n ? Rational::unit_fraction(gpd::factorial(n))
                                     : Rational::from_uint64(0);
        if (got != want) {
          c.ok = false;
          c.detail = "pairing (" + std::to_string(m) + ", " + std::to_string(n) + ") is " +
                     got.str() + ", expected " + want.str();
        }
      }
    if (c.ok) c.detail = "orthogonal, squared norm 1/n!";
    results.push_back(c);
  }
  {
    NamedCheck c{"two coloring series", true, ""};
    const GroupoidOver colored = gpd::osc::two_colored_state(n_top);
    const ClassTable table = gpd::class_table(colored.projection.target);
    const RationalVector coeff = generating_function(table, colored, n_top);
    for (std::uint32_t n = 0; n <= n_top && c.ok; ++n) {
      const Rational want =
          Rational::from_uint64(std::uint64_t{1} << n) / Rational::from_uint64(gpd::factorial(n));
      if (coeff[n] != want) {
        c.ok = false;
        c.detail = "coefficient " + std::to_string(n) + " is " + coeff[n].str() + ", expected " +
                   want.str();
      }
    }
    if (c.ok) c.detail = "coefficients 2^n / n!";
    results.push_back(c);
  }
  {
    // Realize small normal-ordered powers as spans and compare with the
    // same expression evaluated in matrix algebra, away from the top sizes
    // the truncation distorts.
    NamedCheck c{"normal order reroute", true, ""};
    const std::uint32_t wide = n_top + 1;
    gpd::osc::LadderRealizer realizer(wide, options);
    const ClassTable table = gpd::class_table(realizer.base());
    const RationalMatrix lower = matrix_of(table, table, realizer.word_span("a"));
    const RationalMatrix raise = matrix_of(table, table, realizer.word_span("c"));
    RationalMatrix power_two;
    for (std::uint32_t n = 0; n <= 3 && c.ok; ++n) {
      const RationalMatrix realized =
          matrix_of(table, table, realizer.realize(gpd::osc::normal_order(n)));
      if (n == 2) power_two = realized;
      RationalMatrix expression(wide + 1, wide + 1);
      for (std::uint32_t j = 0; j <= n; ++j) {
        RationalMatrix word = RationalMatrix::identity(wide + 1);
        for (std::uint32_t step = 0; step < n - j; ++step) word = lower * word;
        for (std::uint32_t step = 0; step < j; ++step) word = raise * word;
        expression = expression + word * Rational::from_uint64(gpd::osc::binomial(n, j));
      }
      const std::size_t safe = wide + 1 - n;
      if (realized.corner(safe) != expression.corner(safe)) {
        c.ok = false;
        c.detail = "power " + std::to_string(n) + " differs between the two routes";
      }
    }
    if (c.ok) c.detail = "powers 0..3 agree";
    results.push_back(c);

    NamedCheck d{"diagram count", true, ""};
    if (c.ok) {
      const Rational got = power_two.at(1, 1);
      const Rational want = gpd::osc::feynman_entry({2}, 1, 1);
      if (got != want) {
        d.ok = false;
        d.detail = "realized entry " + got.str() + " misses the closed count " + want.str();
      } else {
        d.detail = "one interaction of valence 2, entry (1, 1)";
      }
    } else {
      d.ok = false;
      d.detail = "skipped, the reroute already failed";
    }
    results.push_back(d);
  }

  nlohmann::json extra;
  extra["max_n"] = max_n;
  return finish_checks(results, json_out, "oscillator suite", std::move(extra));
}

nlohmann::json tensor_to_json(const gpd::hecke::StructureTensor& t) {
  nlohmann::json out = nlohmann::json::array();
  for (std::uint32_t i = 0; i < 6; ++i) {
    nlohmann::json plane = nlohmann::json::array();
    for (std::uint32_t j = 0; j < 6; ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (std::uint32_t k = 0; k < 6; ++k) row.push_back(t.at(i, j, k).str());
      plane.push_back(row);
    }
    out.push_back(plane);
  }
  return out;
}

int run_hecke_verify(std::uint32_t q, const std::string& json_out) {
  if (q != 2 && q != 3 && q != 5 && q != 7)
    throw DomainError("--q must be one of 2, 3, 5, 7, got " + std::to_string(q));

  const gpd::hecke::GeometricReport geo = gpd::hecke::verify_geometric_relations(q);
  std::vector<NamedCheck> results;
  results.push_back({"geometric relations", geo.ok(),
                     geo.ok() ? std::to_string(geo.flags) + " flags" : "see notes"});
  for (const std::string& note : geo.notes)
    std::cout << "note: " << note << "\n";

  nlohmann::json extra;
  extra["q"] = q;
  extra["flags"] = geo.flags;

  if (q == 2 || q == 3) {
    const gpd::hecke::HeckeAlgebraData h = gpd::hecke::hecke_algebra(q);
    std::cout << "flags: " << h.orbits.flags << "\n";
    std::cout << "orbits:";
    for (std::size_t i = 0; i < h.orbits.labels.size(); ++i)
      std::cout << " " << h.orbits.labels[i] << "=" << h.orbits.sizes[i];
    std::cout << "\n";
    std::cout << "triple orbits: " << h.triple_orbit_count << "\n";
    results.push_back({"unit laws", h.unit_laws, ""});
    results.push_back({"quadratic relations", h.quadratic, ""});
    results.push_back({"braid relation", h.braid, ""});
    results.push_back({"associativity", h.associative, ""});
    results.push_back({"span constants reconciled", h.reconciled, ""});
    if (q == 2)
      results.push_back({"materialized span", h.materialized,
                         h.materialized ? "constants recomputed from full groupoids" : ""});

    extra["group_order"] = h.orbits.group_order;
    extra["labels"] = h.orbits.labels;
    extra["orbit_sizes"] = h.orbits.sizes;
    extra["stabilizer_orders"] = h.orbits.stab_orders;
    extra["triple_orbit_count"] = h.triple_orbit_count;
    extra["materialized"] = h.materialized;
    extra["counts"] = tensor_to_json(h.counts);
    extra["span_constants"] = tensor_to_json(h.span_constants);
  } else {
    const gpd::hecke::PairOrbits orbits = gpd::hecke::sl3_orbits(q);
    std::cout << "flags: " << orbits.flags << "\n";
    std::cout << "orbits:";
    for (std::size_t i = 0; i < orbits.labels.size(); ++i)
      std::cout << " " << orbits.labels[i] << "=" << orbits.sizes[i];
    std::cout << "\n";
    results.push_back({"orbit classifier", orbits.injective,
                       "six classes, stabilizer orders from the orbit sizes"});

    extra["group_order"] = orbits.group_order;
    extra["labels"] = orbits.labels;
    extra["orbit_sizes"] = orbits.sizes;
    extra["stabilizer_orders"] = orbits.stab_orders;
  }

  return finish_checks(results, json_out, "flag variety suite", std::move(extra));
}

int run_selftest(const std::string& json_out) {
  const std::vector<gpd::checks::CheckResult> all = gpd::checks::run_all();
  std::vector<NamedCheck> results;
  results.reserve(all.size());
  for (const gpd::checks::CheckResult& r : all) results.push_back({r.name, r.pass, r.detail});
  return finish_checks(results, json_out, "self test", nlohmann::json::object());
}

int guarded(const std::function<int()>& body) {
  const auto start = std::chrono::steady_clock::now();
  int code = 2;
  try {
    code = body();
  } catch (const StructuralError& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const gpd::jsonio::JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  std::cerr << "elapsed_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for finite groupoids, spans between them, and the rational "
               "vectors and matrices they induce"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gpd 0.1.0");

  std::string in_path, second_path, json_out, csv_out;
  std::uint64_t cap_value = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t max_n = 6;
  std::uint32_t q = 0;

  CLI::App* card = app.add_subcommand("card", "Cardinality of a groupoid document");
  card->add_option("groupoid", in_path, "groupoid JSON file")->required();
  card->add_option("--json-out", json_out, "write a JSON result envelope here");

  CLI::App* vector = app.add_subcommand("vector", "Class vector of a state over its base");
  vector->add_option("over", in_path, "state JSON file")->required();
  vector->add_option("--json-out", json_out, "write a JSON result envelope here");

  CLI::App* matrix = app.add_subcommand("matrix", "Matrix of a span over the class bases");
  matrix->add_option("span", in_path, "span JSON file")->required();
  matrix->add_option("--json-out", json_out, "write a JSON result envelope here");
  matrix->add_option("--csv-out", csv_out, "write the matrix as CSV here");

  CLI::App* compose = app.add_subcommand("compose", "Compose two spans into one document");
  compose->add_option("second", second_path, "span applied second (outer)")->required();
  compose->add_option("first", in_path, "span applied first (inner)")->required();
  CLI::Option* compose_cap =
      compose->add_option("--cap", cap_value, "apex size bound for the composite")
          ->check(CLI::PositiveNumber);
  compose->add_option("--json-out", json_out, "write a JSON result envelope here");

  CLI::App* inner = app.add_subcommand("inner", "Inner product of two states over one base");
  inner->add_option("left", in_path, "state JSON file")->required();
  inner->add_option("right", second_path, "state JSON file")->required();
  inner->add_option("--json-out", json_out, "write a JSON result envelope here");

  CLI::App* genfun =
      app.add_subcommand("genfun", "Series coefficients of a state over a size-tower base");
  genfun->add_option("over", in_path, "state JSON file")->required();
  genfun->add_option("--max", max_degree, "highest degree to report")->required();
  genfun->add_option("--json-out", json_out, "write a JSON result envelope here");

  CLI::App* osc = app.add_subcommand("osc", "Ladder operator checks");
  osc->require_subcommand(1);
  CLI::App* osc_verify =
      osc->add_subcommand("verify", "Check the ladder identities on a finite size tower");
  osc_verify->add_option("--max-n", max_n, "top size of the tower, 2 to 7 (default 6)");
  CLI::Option* osc_cap =
      osc_verify->add_option("--cap", cap_value, "apex size bound for span composition")
          ->check(CLI::PositiveNumber);
  osc_verify->add_option("--json-out", json_out, "write a JSON result envelope here");

  CLI::App* hecke = app.add_subcommand("hecke", "Flag variety checks");
  hecke->require_subcommand(1);
  CLI::App* hecke_verify = hecke->add_subcommand(
      "verify", "Check the flag multiplication suite over a small prime field");
  hecke_verify->add_option("--q", q, "field size: 2 or 3 run the full suite, 5 and 7 the classifier")
      ->required();
  hecke_verify->add_option("--json-out", json_out, "write a JSON result envelope here");

  CLI::App* selftest = app.add_subcommand("selftest", "Run the whole acceptance battery");
  selftest->add_option("--json-out", json_out, "write a JSON result envelope here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (card->parsed()) return guarded([&] { return run_card(in_path, json_out); });
  if (vector->parsed()) return guarded([&] { return run_vector(in_path, json_out); });
  if (matrix->parsed()) return guarded([&] { return run_matrix(in_path, json_out, csv_out); });
  if (compose->parsed())
    return guarded([&] {
      return run_compose(second_path, in_path, compose_cap->count() > 0, cap_value, json_out);
    });
  if (inner->parsed()) return guarded([&] { return run_inner(in_path, second_path, json_out); });
  if (genfun->parsed()) return guarded([&] { return run_genfun(in_path, max_degree, json_out); });
  if (osc_verify->parsed())
    return guarded(
        [&] { return run_osc_verify(max_n, osc_cap->count() > 0, cap_value, json_out); });
  if (hecke_verify->parsed()) return guarded([&] { return run_hecke_verify(q, json_out); });
  if (selftest->parsed()) return guarded([&] { return run_selftest(json_out); });
  return 2;
}
