// eds: compute elliptic divisibility sequences (both the Ward-recurrence and
// the denominator sense), reduction profiles, and run the recurrence
// verification sweeps, with deterministic machine-readable output.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "eds/eds.hpp"

namespace {

using eds::Int;
using eds::json;
using eds::PointContext;
using eds::Rat;

// Exit-code contract: 1 = a guaranteed assertion or internal invariant
// failed, 2 = bad input, 3 = factorization gave up.
int exit_code_for(eds::errc code) {
  switch (code) {
    case eds::errc::singular_curve:
    case eds::errc::not_on_curve:
    case eds::errc::identity_point:
    case eds::errc::non_square_denominator:
    case eds::errc::division_by_zero:
    case eds::errc::insufficient_samples:
    case eds::errc::invalid_seed:
    case eds::errc::non_integral_step:
    case eds::errc::index_out_of_range:
    case eds::errc::torsion_point:
    case eds::errc::non_torsion_point:
    case eds::errc::not_applicable:
    case eds::errc::parse_error:
      return 2;
    case eds::errc::factorization_failure:
      return 3;
    default:
      return 1;
  }
}

PointContext context_from(const std::string& curve_str, const std::string& point_str) {
  eds::WeierstrassCurve curve = eds::parse_curve(curve_str);
  eds::RationalPoint point = eds::parse_point(point_str);
  return eds::make_context(curve, point);
}

Int parse_prime(const std::string& s) {
  Int p = eds::parse_int(s);
  if (p < 2 || !eds::is_probable_prime(p))
    eds::fail(eds::errc::parse_error, "'" + s + "' is not prime");
  return p;
}

int run_sequence(const std::string& curve_str, const std::string& point_str,
                 long max_n, const std::string& format) {
  PointContext ctx = context_from(curve_str, point_str);
  std::vector<eds::SequenceRecord> table = eds::sequence_table(ctx, max_n);
  if (format == "csv") {
    std::cout << "n,is_identity,B,beta,h,g,x\n";
    for (const eds::SequenceRecord& rec : table) {
      std::cout << rec.n << ',' << (rec.is_identity ? "true" : "false") << ','
                << eds::dec(rec.B) << ',' << eds::dec(rec.beta) << ','
                << eds::dec(rec.h) << ',' << eds::dec(rec.g) << ','
                << (rec.x ? eds::dec(*rec.x) : "") << '\n';
    }
  } else {
    for (const eds::SequenceRecord& rec : table)
      std::cout << eds::to_json(rec).dump() << '\n';
  }
  return 0;
}

int run_profile(const std::string& curve_str, const std::string& point_str) {
  PointContext ctx = context_from(curve_str, point_str);
  std::cout << eds::to_json(eds::M_of(ctx).second).dump() << '\n';
  return 0;
}

int run_generate(const std::string& initial, long count) {
  std::vector<std::string> parts = eds::split(initial, ',');
  if (parts.size() != 4)
    eds::fail(eds::errc::parse_error, "--initial must be 'h1,h2,h3,h4'");
  std::vector<Int> seq =
      eds::edsa_generate(eds::parse_int(parts[0]), eds::parse_int(parts[1]),
                         eds::parse_int(parts[2]), eds::parse_int(parts[3]), count);
  for (const Int& term : seq) std::cout << eds::dec(term) << '\n';
  return 0;
}

int run_verify_main(const std::string& curve_str, const std::string& point_str,
                    long bound, const std::string& format) {
  PointContext ctx = context_from(curve_str, point_str);
  std::vector<eds::TripleCheckResult> results = eds::verify_main_theorem(ctx, bound);
  long qualifying = 0, qualifying_violations = 0, nonqualifying_nonzero = 0;
  if (format == "csv") std::cout << "m,n,r,qualifying,defect\n";
  for (const eds::TripleCheckResult& t : results) {
    if (t.qualifying) {
      ++qualifying;
      if (t.defect != 0) ++qualifying_violations;
    } else if (t.defect != 0) {
      ++nonqualifying_nonzero;
    }
    if (format == "csv")
      std::cout << t.m << ',' << t.n << ',' << t.r << ','
                << (t.qualifying ? "true" : "false") << ',' << eds::dec(t.defect)
                << '\n';
    else
      std::cout << eds::to_json(t).dump() << '\n';
  }
  if (format != "csv") {
    json summary;
    summary["triples"] = results.size();
    summary["qualifying"] = qualifying;
    summary["qualifying_violations"] = qualifying_violations;
    summary["nonqualifying_nonzero"] = nonqualifying_nonzero;
    std::cout << summary.dump() << '\n';
  }
  return qualifying_violations == 0 ? 0 : 1;
}

int run_verify_ward(const std::string& curve_str, const std::string& point_str,
                    long bound) {
  PointContext ctx = context_from(curve_str, point_str);
  std::vector<Int> hs;
  for (long n = 0; n <= bound; ++n) hs.push_back(eds::h(ctx, n));
  long checked = 0, violations = 0;
  for (long m = 1; m <= bound; ++m)
    for (long n = 1; n <= m; ++n) {
      if (m + n > bound) break;
      for (long r = 1; r <= n; ++r) {
        Int defect = eds::check_ward_triple(hs, m, n, r);
        ++checked;
        if (defect != 0) {
          ++violations;
          json line;
          line["m"] = m;
          line["n"] = n;
          line["r"] = r;
          line["defect"] = eds::dec(defect);
          std::cout << line.dump() << '\n';
        }
      }
    }
  json summary;
  summary["checked"] = checked;
  summary["violations"] = violations;
  std::cout << summary.dump() << '\n';
  return violations == 0 ? 0 : 1;
}

int run_verify_gcd_law(const std::string& curve_str, const std::string& point_str,
                       long bound, const std::string& p_str) {
  PointContext ctx = context_from(curve_str, point_str);
  long M = eds::M_of(ctx).first;
  long checked = 0, violations = 0;

  // Multiplicative law: L_{m,n} = 1 is guaranteed whenever M(P) | m.
  for (long m = M; m <= bound; m += M)
    for (long n = 0; n <= bound; ++n) {
      eds::DefectRatio ratio = eds::check_g_multiplicative_law(ctx, m, n);
      ++checked;
      if (ratio.L != 1) {
        ++violations;
        json line;
        line["law"] = "multiplicative";
        line["m"] = m;
        line["n"] = n;
        line["L"] = eds::dec(ratio.L);
        std::cout << line.dump() << '\n';
      }
    }

  // Valuation law at one prime: guaranteed whenever r(p,P) | m.
  if (!p_str.empty()) {
    Int p = parse_prime(p_str);
    long r = eds::r_of(ctx, p);
    for (long m = r; m <= bound; m += r)
      for (long n = 0; n <= bound; ++n) {
        long defect = eds::check_g_valuation_law(ctx, p, m, n);
        ++checked;
        if (defect != 0) {
          ++violations;
          json line;
          line["law"] = "valuation";
          line["p"] = eds::dec(p);
          line["m"] = m;
          line["n"] = n;
          line["defect"] = defect;
          std::cout << line.dump() << '\n';
        }
      }
  }

  json summary;
  summary["checked"] = checked;
  summary["violations"] = violations;
  std::cout << summary.dump() << '\n';
  return violations == 0 ? 0 : 1;
}

int run_verify_cheon(const std::string& curve_str, const std::string& point_str,
                     long bound, const std::string& p_str) {
  PointContext ctx = context_from(curve_str, point_str);
  Int p = parse_prime(p_str);
  long mismatches = 0;
  for (long n = 1; n <= bound; ++n) {
    long closed = eds::cheon_g(ctx, p, n);
    long direct = static_cast<long>(eds::g_valuation(ctx, n, p));
    if (closed != direct) ++mismatches;
    json line;
    line["n"] = n;
    line["cheon"] = closed;
    line["g_valuation"] = direct;
    std::cout << line.dump() << '\n';
  }
  json summary;
  summary["checked"] = bound;
  summary["mismatches"] = mismatches;
  std::cout << summary.dump() << '\n';
  return mismatches == 0 ? 0 : 1;
}

int run_verify_identity(const std::string& curve_str, long bound) {
  eds::WeierstrassCurve curve = eds::parse_curve(curve_str);
  long failures = 0;
  for (long n = 1; n <= bound; ++n)
    for (long m = 1; m <= n; ++m) {
      std::vector<Rat> samples;
      long count = 2 * (n * n + m * m - 1) + 1;
      for (long i = 0; i < count; ++i) samples.emplace_back(i);
      bool holds = eds::check_product_identity(curve, n, m, samples);
      if (!holds) ++failures;
      json line;
      line["n"] = n;
      line["m"] = m;
      line["holds"] = holds;
      std::cout << line.dump() << '\n';
    }
  json summary;
  summary["failures"] = failures;
  std::cout << summary.dump() << '\n';
  return failures == 0 ? 0 : 1;
}

int run_verify_torsion(const std::string& curve_str, const std::string& point_str,
                       long bound) {
  PointContext ctx = context_from(curve_str, point_str);
  eds::TorsionCaseReport rep = eds::verify_torsion_case(ctx, bound);
  if (rep.skipped) {
    json line;
    line["status"] = "skipped";
    line["torsion_order"] = rep.torsion_order;
    line["M"] = rep.M;
    std::cout << line.dump() << '\n';
    return 0;
  }
  long violations = 0;
  for (const eds::TripleCheckResult& t : rep.triples)
    if (t.defect != 0) {
      ++violations;
      std::cout << eds::to_json(t).dump() << '\n';
    }
  json summary;
  summary["status"] = "checked";
  summary["torsion_order"] = rep.torsion_order;
  summary["M"] = rep.M;
  summary["triples"] = rep.triples.size();
  summary["violations"] = violations;
  std::cout << summary.dump() << '\n';
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptic divisibility sequences over Q, in exact arithmetic"};
  app.require_subcommand(1);

  std::string curve_str, point_str, initial, p_str;
  std::string format = "json";
  long max_n = 10, count = 10;
  long bound_main = 12, bound_ward = 30, bound_gcd = 15, bound_cheon = 20,
       bound_identity = 3, bound_torsion = 8;

  auto add_context_opts = [&](CLI::App* cmd) {
    cmd->add_option("--curve", curve_str, "curve coefficients 'a1,a2,a3,a4,a6'")
        ->required();
    cmd->add_option("--point", point_str, "point 'x,y' with rational entries")
        ->required();
  };

  CLI::App* seq = app.add_subcommand(
      "sequence", "B_n, beta_n, h_n, g_n rows for n = 0..max-n");
  add_context_opts(seq);
  seq->add_option("--max-n", max_n, "largest index");
  seq->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* prof = app.add_subcommand(
      "profile", "per-prime reduction data r(p,P) and M(P)");
  add_context_opts(prof);

  CLI::App* gen = app.add_subcommand(
      "generate", "extend Ward-recurrence seeds h1,h2,h3,h4 to h_count");
  gen->add_option("--initial", initial, "seeds 'h1,h2,h3,h4'")->required();
  gen->add_option("--count", count, "largest index to print");

  CLI::App* verify = app.add_subcommand("verify", "recurrence and valuation laws");
  verify->require_subcommand(1);

  CLI::App* vmain = verify->add_subcommand(
      "main", "beta-recurrence for triples with two indices divisible by M(P)");
  add_context_opts(vmain);
  vmain->add_option("--bound", bound_main, "largest triple index");
  vmain->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* vward = verify->add_subcommand(
      "ward", "Ward's recurrence on the h-sequence, all triples with m+n <= bound");
  add_context_opts(vward);
  vward->add_option("--bound", bound_ward, "largest index sum");

  CLI::App* vgcd = verify->add_subcommand(
      "gcd-law", "multiplicative and valuation laws of the gcd sequence");
  add_context_opts(vgcd);
  vgcd->add_option("--bound", bound_gcd, "largest index");
  vgcd->add_option("--p", p_str, "also check the per-prime valuation law");

  CLI::App* vcheon = verify->add_subcommand(
      "cheon", "closed-form valuation against the homogenized gcd");
  add_context_opts(vcheon);
  vcheon->add_option("--bound", bound_cheon, "largest index");
  vcheon->add_option("--p", p_str, "bad prime with r(p,P) > 1")->required();

  CLI::App* vid = verify->add_subcommand(
      "identity", "division-polynomial product identity by exhaustive sampling");
  vid->add_option("--curve", curve_str, "curve coefficients 'a1,a2,a3,a4,a6'")
      ->required();
  vid->add_option("--bound", bound_identity, "largest n, m");

  CLI::App* vtors = verify->add_subcommand(
      "torsion", "beta-recurrence for a torsion point with M(P) = 1");
  add_context_opts(vtors);
  vtors->add_option("--bound", bound_torsion, "largest triple index");

  try {
    app.parse(argc, argv);
    if (*seq) return run_sequence(curve_str, point_str, max_n, format);
    if (*prof) return run_profile(curve_str, point_str);
    if (*gen) return run_generate(initial, count);
    if (*vmain) return run_verify_main(curve_str, point_str, bound_main, format);
    if (*vward) return run_verify_ward(curve_str, point_str, bound_ward);
    if (*vgcd) return run_verify_gcd_law(curve_str, point_str, bound_gcd, p_str);
    if (*vcheon) return run_verify_cheon(curve_str, point_str, bound_cheon, p_str);
    if (*vid) return run_verify_identity(curve_str, bound_identity);
    if (*vtors) return run_verify_torsion(curve_str, point_str, bound_torsion);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const eds::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return 0;
}
