#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>

#include "qtail/bracket.hpp"
#include "qtail/errors.hpp"
#include "qtail/identities.hpp"
#include "qtail/skein.hpp"
#include "qtail/stabilization.hpp"
#include "qtail/tails.hpp"

namespace qtail::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

struct Common {
  Format format = Format::Plain;
  std::int64_t terms = 100;
  int jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  static const std::map<std::string, Format> kFormats{
      {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
  cmd->add_option("--format", c.format, "plain, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--terms", c.terms, "number of q-terms")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", c.jobs, "worker threads (QTAIL_JOBS overrides)")->check(CLI::PositiveNumber);
}

int effective_jobs(int requested) {
  if (const char* env = std::getenv("QTAIL_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    throw PreconditionViolated("QTAIL_JOBS must be a positive integer");
  }
  return requested;
}

void write_series(std::ostream& out, const TruncatedSeries& s0, Format f) {
  const TruncatedSeries s = s0.coarsened();
  switch (f) {
    case Format::Plain:
      out << s.str() << "\n";
      break;
    case Format::Json:
      out << to_json(s) << "\n";
      break;
    case Format::Csv:
      out << to_csv(s);
      break;
  }
}

std::string mismatch_text(const ComparisonReport& r) {
  if (!r.first_mismatch) return "";
  return Exponent(*r.first_mismatch, r.grid).str();
}

int write_checks(std::ostream& out, const std::vector<IdentityCheck>& checks, Format f) {
  const bool ok = all_passed(checks);
  switch (f) {
    case Format::Plain:
      for (const auto& c : checks) {
        const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
        out << tag << "  " << c.identity << "  " << c.label << "  agreed " << c.report.agreed_terms;
        if (c.report.first_mismatch) out << "  first mismatch at q^" << mismatch_text(c.report);
        if (!c.note.empty()) out << "  (" << c.note << ")";
        out << "\n";
      }
      out << (ok ? "verified" : "mismatch") << "\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& c : checks) arr.push_back(json::parse(to_json(c)));
      json doc;
      doc["passed"] = ok;
      doc["checks"] = arr;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "identity,label,passed,informational,agreed_terms,first_mismatch\n";
      for (const auto& c : checks) {
        out << c.identity << ",\"" << c.label << "\"," << (c.passed ? 1 : 0) << "," << (c.informational ? 1 : 0) << ","
            << c.report.agreed_terms << "," << mismatch_text(c.report) << "\n";
      }
      break;
  }
  return ok ? kOk : kMismatch;
}

TailFamily family_or_throw(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw PreconditionViolated("unknown tail family '" + name + "'");
  return *f;
}

std::int64_t arg_at(const std::vector<std::int64_t>& a, std::size_t i, std::string_view name) {
  if (i >= a.size()) throw PreconditionViolated(std::string(name) + " needs more --args");
  return a[i];
}

void expect_args(const std::vector<std::int64_t>& a, std::size_t n, std::string_view name) {
  if (a.size() != n) {
    throw PreconditionViolated(std::string(name) + " takes " + std::to_string(n) + " arguments");
  }
}

TruncatedSeries skein_coefficient(const std::string& name, const std::vector<std::int64_t>& a,
                                  const std::string& method, std::int64_t terms) {
  const Exponent below(terms);
  const bool closed = method == "closed";
  if (method != "closed" && method != "definitional") {
    throw PreconditionViolated("--method must be closed or definitional");
  }
  const std::span<const std::int64_t> rest =
      a.empty() ? std::span<const std::int64_t>() : std::span<const std::int64_t>(a).subspan(1);
  if (name == "delta") {
    expect_args(a, 1, name);
    return delta(a[0]);
  }
  if (name == "theta") {
    expect_args(a, 3, name);
    return theta_coeff({a[0], a[1], a[2]}, below);
  }
  if (name == "theta-nn2i") {
    expect_args(a, 2, name);
    return closed ? theta_nn2i(a[0], a[1], below) : theta_coeff({a[0], a[0], 2 * a[1]}, below);
  }
  if (name == "bubble") {
    expect_args(a, 5, name);
    return bubble_general(a[0], a[1], a[2], a[3], a[4], below);
  }
  if (name == "bubble-nann") {
    expect_args(a, 3, name);
    return closed ? bubble_nann(a[0], a[1], a[2], below) : bubble_general(a[0], a[1], a[0], a[0], a[2], below);
  }
  if (name == "bubble-sym") {
    expect_args(a, 3, name);
    const std::int64_t n = a[0];
    const std::int64_t s = a[1];
    return closed ? bubble_sym(n, s, a[2], below) : bubble_general(n - s, n - s, n + s, n, a[2], below);
  }
  if (name == "E" || name == "P") {
    const std::int64_t n = arg_at(a, 0, name);
    if (rest.empty()) throw PreconditionViolated(name + " needs n followed by at least one index");
    const CoeffMethod m = closed ? CoeffMethod::Closed : CoeffMethod::Definitional;
    return name == "E" ? coeff_E(n, rest, m, below) : coeff_P(n, rest, m, below);
  }
  if (name == "C") {
    expect_args(a, 3, name);
    return c_coeff(a[0], a[1], a[2], below);
  }
  if (name == "gamma") {
    expect_args(a, 3, name);
    return gamma_coeff(a[0], a[1], a[2], closed ? GammaMethod::Closed : GammaMethod::Assembled, below);
  }
  throw PreconditionViolated("unknown coefficient '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tails of colored Jones polynomials and the q-series identities they produce", "qtail"};
  app.require_subcommand(1);

  Common tail_c;
  std::string tail_family;
  std::int64_t tail_k = 1;
  std::int64_t tail_u = 1;
  bool drop = false;
  CLI::App* tail = app.add_subcommand("tail", "Evaluate a tail q-series");
  add_common(tail, tail_c);
  tail->add_option("--family", tail_family, "torus-odd, torus-even, phi, lk-product or lk-multisum")->required();
  tail->add_option("--k", tail_k, "family parameter k");
  tail->add_option("--u", tail_u, "second parameter of the phi family");
  tail->add_flag("--drop-phi-pochhammer", drop, "phi family without the (q;q)_{l_k+p_u} factor");

  Common ver_c;
  std::string identity;
  VerifyOptions vopt;
  std::optional<std::int64_t> vk;
  std::optional<std::int64_t> vu;
  std::optional<std::int64_t> vn;
  CLI::App* verify = app.add_subcommand("verify", "Check an identity coefficient by coefficient");
  add_common(verify, ver_c);
  std::vector<std::string> choices = identity_names();
  choices.push_back("all");
  verify->add_option("--identity", identity, "identity name or 'all'")->required()->check(CLI::IsMember(choices));
  verify->add_option("--k", vk, "restrict to one k");
  verify->add_option("--u", vu, "u for the phi family");
  verify->add_option("--n", vn, "color n (routes-lk) or largest n (stabilize)");
  verify->add_option("--family", vopt.family, "family for the stabilize identity");
  verify->add_flag("--perturb", vopt.perturb, "add q^7 to every right-hand side");

  Common stab_c;
  std::string stab_family = "lk-product";
  std::int64_t stab_k = 1;
  std::int64_t stab_u = 1;
  std::int64_t stab_n = 8;
  bool show_values = false;
  CLI::App* stab = app.add_subcommand("stabilize", "Compare normalized skein values with a tail for n = 1..N");
  add_common(stab, stab_c);
  stab->add_option("--family", stab_family, "phi or lk-product");
  stab->add_option("--k", stab_k);
  stab->add_option("--u", stab_u);
  stab->add_option("--n", stab_n, "largest color")->check(CLI::PositiveNumber);
  stab->add_flag("--values", show_values, "print the normalized skein values");

  Common jones_c;
  std::vector<std::int64_t> pretzel;
  std::string pd;
  bool allow_links = false;
  std::string jones_tail;
  std::int64_t jones_k = 1;
  std::int64_t jones_u = 1;
  CLI::App* jones = app.add_subcommand("jones", "J_2 from the Kauffman bracket, optionally matched against a tail");
  add_common(jones, jones_c);
  auto* pretzel_opt = jones->add_option("--pretzel", pretzel, "twist counts, e.g. 3,2,3")->delimiter(',');
  auto* pd_opt = jones->add_option("--pd", pd, "PD code, e.g. \"X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]\"");
  pretzel_opt->excludes(pd_opt);
  jones->add_flag("--allow-links", allow_links, "accept diagrams with several components");
  jones->add_option("--tail", jones_tail, "tail family to match against");
  jones->add_option("--k", jones_k);
  jones->add_option("--u", jones_u);

  Common sk_c;
  std::string coeff_name;
  std::vector<std::int64_t> coeff_args;
  std::string method = "closed";
  CLI::App* sk = app.add_subcommand("skein-coeff", "Inspect a skein coefficient, known below q^{terms}");
  add_common(sk, sk_c);
  sk->add_option("name", coeff_name, "delta, theta, theta-nn2i, bubble, bubble-nann, bubble-sym, E, P, C, gamma")
      ->required();
  sk->add_option("--args", coeff_args, "comma-separated indices")->delimiter(',');
  sk->add_option("--method", method, "closed or definitional");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tail) {
      TailSpec spec{family_or_throw(tail_family), tail_k, tail_u, tail_c.terms};
      write_series(out, evaluate_tail(spec, {effective_jobs(tail_c.jobs), drop}), tail_c.format);
      return kOk;
    }
    if (*verify) {
      vopt.terms = ver_c.terms;
      vopt.jobs = effective_jobs(ver_c.jobs);
      vopt.k = vk;
      vopt.u = vu;
      vopt.n = vn;
      std::vector<IdentityCheck> checks;
      if (identity == "all") {
        for (const auto& name : identity_names()) {
          auto part = verify_identity(name, vopt);
          checks.insert(checks.end(), part.begin(), part.end());
        }
      } else {
        checks = verify_identity(identity, vopt);
      }
      return write_checks(out, checks, ver_c.format);
    }
    if (*stab) {
      VerifyOptions o;
      o.terms = stab_c.terms;
      o.jobs = effective_jobs(stab_c.jobs);
      o.family = stab_family;
      o.k = stab_k;
      o.u = stab_u;
      o.n = stab_n;
      const auto checks = verify_identity("stabilize", o);
      if (show_values && stab_c.format == Format::Plain) {
        TailSpec spec{family_or_throw(stab_family), stab_k, stab_u, stab_c.terms};
        for (std::int64_t n = 1; n <= stab_n; ++n) {
          out << "n=" << n << "  " << normalized_skein_value(spec, n, n + 1, o.jobs).str() << "\n";
        }
      }
      return write_checks(out, checks, stab_c.format);
    }
    if (*jones) {
      if (pretzel.empty() && pd.empty()) throw PreconditionViolated("jones needs --pretzel or --pd");
      const PDDiagram d = pretzel.empty() ? parse_pd(pd) : pretzel_pd(pretzel);
      const int jobs = effective_jobs(jones_c.jobs);
      const TruncatedSeries j2 = jones2(d, jobs, allow_links);
      std::optional<HeadTailReport> match;
      if (!jones_tail.empty()) {
        TailSpec spec{family_or_throw(jones_tail), jones_k, jones_u, std::max<std::int64_t>(jones_c.terms, 3)};
        match = head_tail_match(j2, evaluate_tail(spec, {jobs, false}));
      }
      const bool ok = !match || match->best.agreed_terms >= 2;
      const char* end = (match && match->end == MatchedEnd::Head) ? "head" : "tail";
      switch (jones_c.format) {
        case Format::Plain:
          out << "pd " << d.str() << "\n";
          out << "components " << d.component_count() << "  writhe " << d.writhe() << "\n";
          out << "J2 " << j2.str() << "\n";
          if (match) {
            out << (ok ? "match" : "mismatch") << " at the " << end << " end, agreed " << match->best.agreed_terms;
            if (match->best.first_mismatch) out << ", first mismatch at q^" << mismatch_text(match->best);
            out << "\n";
          }
          break;
        case Format::Json: {
          json doc;
          doc["pd"] = d.str();
          doc["components"] = d.component_count();
          doc["writhe"] = d.writhe();
          doc["j2"] = json::parse(to_json(j2));
          if (match) {
            doc["matched_end"] = end;
            doc["report"] = json::parse(to_json(match->best));
          }
          out << doc.dump(2) << "\n";
          break;
        }
        case Format::Csv:
          write_series(out, j2, Format::Csv);
          break;
      }
      return ok ? kOk : kMismatch;
    }
    if (*sk) {
      write_series(out, skein_coefficient(coeff_name, coeff_args, method, sk_c.terms),
                   sk_c.format);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qtail::cli
