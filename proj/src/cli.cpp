#include "cymirror/cli.hpp"

#include "cymirror/census.hpp"
#include "cymirror/errors.hpp"
#include "cymirror/euler.hpp"
#include "cymirror/mirror.hpp"
#include "cymirror/quasismooth.hpp"
#include "cymirror/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace cymirror {
namespace {

using Json = nlohmann::ordered_json;

struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json rationals(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

Json header(const WeightVector& w) {
  Json j;
  j["weights"] = w.weights();
  j["degree"] = w.degree();
  return j;
}

void check(const WeightVector& w, std::ostream& out) {
  const WeightFlags flags = weight_flags(w);
  Json j = header(w);
  j["well_formed"] = flags.well_formed;
  j["gorenstein"] = flags.gorenstein;
  j["ip"] = has_ip_property(w);
  j["transverse"] = flags.well_formed && is_transverse(w);
  out << j.dump(2) << '\n';
}

void euler(const WeightVector& w, const std::string& method, std::ostream& out) {
  Json j = header(w);
  std::optional<Rational> a, b;
  if (method != "subset") {
    a = vafa_double_sum(w);
    j["double_sum"] = to_string(*a);
  }
  if (method != "double-sum") {
    const SubsetSum s = vafa_subset_sum(w);
    b = s.value;
    j["subset"] = to_string(s.value);
    j["subset_partials"] = rationals(s.partials);
  }
  out << j.dump(2) << '\n';
  if (a && b && *a != *b) throw Inconsistent("double sum and subset sum differ");
}

void stringy(const WeightVector& w, const std::string& method, bool dump, std::ostream& out) {
  if (!has_ip_property(w)) throw DomainError("weight vector " + w.to_string() + " does not have the IP property");
  Json j = header(w);
  std::optional<Rational> a, b;
  if (method != "polytope") {
    a = stringy_mirror_closed(w);
    j["closed_form"] = to_string(*a);
  }
  if (method != "closed-form" || dump) {
    const Polytope simplex = mirror_simplex(mirror_lattice(w));
    if (method != "closed-form") {
      b = stringy_polytope(simplex);
      j["polytope"] = to_string(*b);
    }
    if (dump) {
      Json verts = Json::array();
      for (const auto& v : simplex.vertices()) verts.push_back(rationals(v));
      j["mirror_simplex"] = verts;
    }
  }
  out << j.dump(2) << '\n';
  if (a && b && *a != *b) throw Inconsistent("closed form and polytope formula differ");
}

void mirror(const WeightVector& w, const std::string& format, std::ostream& out) {
  const LaurentPolynomial f = ghv_polynomial(w);
  out << (format == "json" ? to_json(f) : to_text(f)) << '\n';
}

int verify(const WeightVector& w, std::ostream& out) {
  const EulerReport r = mirror_test(w);
  out << to_json(r) << '\n';
  return r.methods_agree ? exit_ok : exit_inconsistent;
}

unsigned default_jobs() {
  const char* env = std::getenv("CYMIRROR_JOBS");
  if (!env || !*env) return 1;
  unsigned jobs = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, jobs);
  if (ec != std::errc() || ptr != end || jobs == 0) throw ParseError("CYMIRROR_JOBS must be a positive integer");
  return jobs;
}

void run_census(CensusOptions options, std::ostream& out) {
  out << census_header(options) << '\n';
  census(options, [&](const CensusRecord& r) { out << to_tsv(r) << '\n'; });
  out.flush();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler numbers and mirror data of Calabi-Yau hypersurfaces in weighted projective spaces",
               "cymirror"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CYMIRROR_VERSION);

  std::string weights, method, format = "text", filter = "transverse", out_path;
  bool dump = false;
  std::size_t dim = 3;
  std::uint64_t max_degree = 0;
  unsigned jobs = 0;

  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("weights", weights, "weights w0,...,wd")->required();
  };
  auto* check_cmd = app.add_subcommand("check", "well-formed, Gorenstein, IP and transversality flags");
  add_weights(check_cmd);
  auto* euler_cmd = app.add_subcommand("euler", "orbifold Euler number by Vafa's formula");
  add_weights(euler_cmd);
  euler_cmd->add_option("--method", method, "double-sum, subset or both")
      ->check(CLI::IsMember({"double-sum", "subset", "both"}))
      ->default_val("both");
  auto* stringy_cmd = app.add_subcommand("stringy", "stringy Euler number of the mirror");
  add_weights(stringy_cmd);
  stringy_cmd->add_option("--method", method, "closed-form, polytope or both")
      ->check(CLI::IsMember({"closed-form", "polytope", "both"}))
      ->default_val("both");
  stringy_cmd->add_flag("--dump-polytope", dump, "include the vertices of the mirror simplex");
  auto* mirror_cmd = app.add_subcommand("mirror", "Givental-Hori-Vafa Laurent polynomial");
  add_weights(mirror_cmd);
  mirror_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* verify_cmd = app.add_subcommand("verify", "full report with the mirror test");
  add_weights(verify_cmd);
  auto* census_cmd = app.add_subcommand("census", "enumerate weight vectors as TSV");
  census_cmd->add_option("--dim", dim, "dimension d of the hypersurface (2, 3 or 4)")->default_val(3);
  census_cmd->add_option("--max-degree", max_degree, "largest degree (default depends on d)");
  census_cmd->add_option("--filter", filter, "transverse, ip or all")
      ->check(CLI::IsMember({"transverse", "ip", "all"}));
  census_cmd->add_option("--jobs", jobs, "worker threads (default: CYMIRROR_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  census_cmd->add_option("--out", out_path, "write TSV here instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << CYMIRROR_VERSION << '\n';
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (census_cmd->parsed()) {
      CensusOptions options;
      options.dim = dim;
      options.filter = *parse_census_filter(filter);
      options.max_degree = max_degree ? max_degree : default_max_degree(dim);
      options.jobs = jobs ? jobs : default_jobs();
      if (out_path.empty()) {
        run_census(options, out);
      } else {
        std::ofstream file(out_path);
        if (!file) throw ParseError("cannot open " + out_path);
        run_census(options, file);
        if (!file) throw DomainError("failed writing " + out_path);
      }
      return exit_ok;
    }
    const WeightVector w = WeightVector::parse(weights);
    if (check_cmd->parsed()) check(w, out);
    if (euler_cmd->parsed()) euler(w, method, out);
    if (stringy_cmd->parsed()) stringy(w, method, dump, out);
    if (mirror_cmd->parsed()) mirror(w, format, out);
    if (verify_cmd->parsed()) return verify(w, out);
    return exit_ok;
  } catch (const Inconsistent& e) {
    err << "inconsistency: " << e.what() << '\n';
    return exit_inconsistent;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }
}

}  // namespace cymirror
