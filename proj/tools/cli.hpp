#pragma once

// Command-line front end. `run` returns 0 on success, 2 when an argument
// violates a precondition, and 1 when an internal cross-check fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dedekind/dedekind.hpp"
#include "record.hpp"

namespace dedekind::cli {

namespace detail {

struct Options {
  std::string format;
  unsigned threads = 0;
};

inline Format resolve_format(const Options& o, Format fallback) {
  if (o.format.empty()) return fallback;
  if (o.format == "json") return Format::json;
  if (o.format == "csv") return Format::csv;
  throw precondition_error("--format must be json or csv");
}

// Nanoseconds per call of fn over `reps` calls, median of 5 rounds.
inline double median_ns(const std::function<void()>& fn, int reps) {
  std::vector<double> rounds;
  for (int r = 0; r < 5; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    rounds.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() / reps);
  }
  std::nth_element(rounds.begin(), rounds.begin() + 2, rounds.end());
  return rounds[2];
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Dedekind sums, reciprocity identities and moment asymptotics"};
  app.require_subcommand(1);
  app.fallthrough();
  detail::Options opt;
  app.add_option("--format", opt.format, "Output encoding: json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", opt.threads, "Worker threads (0 = available parallelism)");

  // Each subcommand sets `action`; it runs after parsing so errors map to
  // exit codes in one place.
  std::function<int()> action;

  // sum h k [--naive|--fast|--both]
  std::int64_t h = 0, k = 0, a = 0, q = 0, Q1 = 0, K = 0, qmax = 0, hmax = 0;
  int m = 1, bins = 0;
  std::string bound_text;
  {
    auto* cmd = app.add_subcommand("sum", "Dedekind sum s(h, k)");
    cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for the positional
    cmd->add_option("h", h)->required();
    cmd->add_option("k", k)->required();
    auto* naive = cmd->add_flag("--naive", "Defining O(k) sum");
    auto* fast = cmd->add_flag("--fast", "Continued-fraction O(log k) evaluation (default)");
    auto* both = cmd->add_flag("--both", "Run both and compare");
    naive->excludes(fast)->excludes(both);
    fast->excludes(both);
    cmd->callback([&, naive, both] {
      action = [&, naive, both] {
        Record r;
        r.add("h", h).add("k", k);
        if (both->count() > 0) {
          const Rational n = dedekind_naive(h, k);
          const Rational f = dedekind_fast(h, k);
          r.add("naive", n).add("fast", f).add("equal", n == f);
          write_record(out, r, detail::resolve_format(opt, Format::json));
          return n == f ? 0 : 1;
        }
        const bool use_naive = naive->count() > 0;
        r.add("method", use_naive ? "naive" : "fast").add("value", use_naive ? dedekind_naive(h, k) : dedekind_signed(h, k));
        write_record(out, r, detail::resolve_format(opt, Format::json));
        return 0;
      };
    });
  }

  // table k
  {
    auto* cmd = app.add_subcommand("table", "s(h, k) for every reduced 1 <= h < k");
    cmd->add_option("k", k)->required();
    cmd->callback([&] {
      action = [&] {
        const auto rows = dedekind_table(k, opt.threads);
        const Format f = detail::resolve_format(opt, Format::csv);
        if (f == Format::csv) {
          write_table_csv(out, rows);
        } else {
          std::vector<Record> recs;
          for (const auto& [hh, s] : rows) recs.push_back(Record().add("h", hh).add("s", s));
          write_records(out, recs, f);
        }
        return 0;
      };
    });
  }

  // cf a q
  {
    auto* cmd = app.add_subcommand("cf", "Continued fraction of a/q");
    cmd->add_option("a", a)->required();
    cmd->add_option("q", q)->required();
    cmd->callback([&] {
      action = [&] {
        const ContinuedFraction cf = cf_expand(a, q);
        const Format f = detail::resolve_format(opt, Format::text);
        if (f == Format::text) {
          out << cf.to_string() << '\n';
          return 0;
        }
        std::string quotients;
        for (std::size_t i = 0; i < cf.quotients.size(); ++i) quotients += (i ? ";" : "") + std::to_string(cf.quotients[i]);
        write_record(out,
                     Record()
                         .add("a", a)
                         .add("q", q)
                         .add("cf", f == Format::csv ? quotients : cf.to_string())
                         .add("length", cf.length())
                         .add("quotient_sum", cf_partial_quotient_sum(cf)),
                     f);
        return 0;
      };
    });
  }

  // approx h k Q1
  {
    auto* cmd = app.add_subcommand("approx", "Dirichlet approximant of h/k and the approximation of s(h, k)");
    cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for the positional
    cmd->add_option("h", h)->required();
    cmd->add_option("k", k)->required();
    cmd->add_option("Q1", Q1)->required();
    cmd->callback([&] {
      action = [&] {
        const ReducedFraction frac(h, k);
        const auto [aa, qq] = dirichlet_approx(frac.value(), Rational(Q1));
        const std::int64_t eps = approx_eps(h, k, aa, qq);
        write_record(out,
                     Record()
                         .add("h", h)
                         .add("k", k)
                         .add("Q1", Q1)
                         .add("a", aa)
                         .add("q", qq)
                         .add("eps", eps)
                         .add("s", dedekind_fast(h, k))
                         .add("main_term", lemma_main_term(k, qq, eps))
                         .add("error", approx_error(h, k, aa, qq))
                         .add("approx_bound_ratio", approx_bound_ratio(h, k, aa, qq)),
                     detail::resolve_format(opt, Format::json));
        return 0;
      };
    });
  }

  // dissect Q1 [--check k]
  {
    auto* cmd = app.add_subcommand("dissect", "Farey dissection intervals around a/q, q <= Q1");
    cmd->add_option("Q1", Q1)->required();
    auto* check = cmd->add_option("--check", k, "Check coverage, disjointness and multiplicity for modulus k");
    cmd->callback([&, check] {
      action = [&, check] {
        const Dissection d = build_dissection(Q1);
        if (check->count() == 0) {
          const Format f = detail::resolve_format(opt, Format::csv);
          if (f == Format::csv) {
            write_dissection_csv(out, d);
          } else {
            std::vector<Record> recs;
            for (const auto& iv : d.intervals) recs.push_back(Record().add("a", iv.a).add("q", iv.q).add("lo", iv.lo).add("hi", iv.hi));
            write_records(out, recs, f);
          }
          return 0;
        }
        const DissectionCheck c = check_dissection(d, k, opt.threads);
        write_record(out,
                     Record()
                         .add("k", c.k)
                         .add("Q1", c.Q1)
                         .add("fractions", c.fractions)
                         .add("uncovered", c.uncovered)
                         .add("max_multiplicity", c.max_multiplicity)
                         .add("disjoint", c.disjoint)
                         .add("center_exclusion", c.centers_excluded)
                         .add("ok", c.ok()),
                     detail::resolve_format(opt, Format::json));
        return c.ok() ? 0 : 1;
      };
    });
  }

  // moment k m
  {
    auto* cmd = app.add_subcommand("moment", "Exact 2m-th moment of s(h, k) against its main term");
    cmd->add_option("k", k)->required();
    cmd->add_option("m", m)->required();
    cmd->callback([&] {
      action = [&] {
        const MomentReport r = moment_report(k, m, opt.threads);
        write_record(out,
                     Record()
                         .add("k", r.k)
                         .add("m", r.m)
                         .add("prime", r.prime)
                         .add("moment", r.moment)
                         .add("main_term", r.main_term)
                         .add("ratio", r.ratio),
                     detail::resolve_format(opt, Format::json));
        return 0;
      };
    });
  }

  // constant m
  {
    auto* cmd = app.add_subcommand("constant", "2 zeta(2m)^2 / zeta(4m), exact");
    cmd->add_option("m", m)->required();
    cmd->callback([&] {
      action = [&] {
        const Rational c = moment_constant(m);
        const Format f = detail::resolve_format(opt, Format::text);
        if (f == Format::text) {
          out << c << '\n';
        } else {
          write_record(out, Record().add("m", m).add("constant", c), f);
        }
        return 0;
      };
    });
  }

  // fm k m [--oracle Qmax Hmax]
  std::vector<std::int64_t> oracle_args;
  {
    auto* cmd = app.add_subcommand("fm", "Composite-modulus moment coefficient f_m(k), exact");
    cmd->add_option("k", k)->required();
    cmd->add_option("m", m)->required();
    auto* oracle = cmd->add_option("--oracle", oracle_args, "Compare with the truncated triple sum (Qmax Hmax)")->expected(2);
    cmd->callback([&, oracle] {
      action = [&, oracle] {
        const Rational value = fm(k, m);
        const Format f = detail::resolve_format(opt, oracle->count() ? Format::json : Format::text);
        if (oracle->count() == 0) {
          if (f == Format::text) {
            out << value << '\n';
          } else {
            write_record(out, Record().add("k", k).add("m", m).add("fm", value), f);
          }
          return 0;
        }
        qmax = oracle_args.at(0);
        hmax = oracle_args.at(1);
        const FmOracle o = fm_oracle(k, m, qmax, hmax);
        const Real exact = to_real(value);
        const Real slack = 1e-15L * exact;
        const bool within = o.value <= exact + slack && exact - o.value <= o.tail_bound + slack;
        write_record(out,
                     Record()
                         .add("k", k)
                         .add("m", m)
                         .add("fm", value)
                         .add("fm_decimal", exact)
                         .add("oracle", o.value)
                         .add("tail_bound", o.tail_bound)
                         .add("within", within),
                     f == Format::text ? Format::json : f);
        return within ? 0 : 1;
      };
    });
  }

  // walum k
  {
    auto* cmd = app.add_subcommand("walum", "Fourth moment of L(1, chi) over odd chi against the Dedekind second moment");
    cmd->add_option("k", k)->required();
    cmd->callback([&] {
      action = [&] {
        const WalumCheck w = walum_check(k, opt.threads);
        write_record(out,
                     Record().add("k", w.k).add("rhs", w.rhs_over_pi4).add("lhs_over_pi4", w.lhs_over_pi4).add("rel_diff", w.rel_diff),
                     detail::resolve_format(opt, Format::json));
        return w.rel_diff <= 1e-8L ? 0 : 1;
      };
    });
  }

  // heath-brown k
  {
    auto* cmd = app.add_subcommand("heath-brown", "Fourth moment of L(1, chi) over odd chi against (k/2) zeta(2)^4/zeta(4)");
    cmd->add_option("k", k)->required();
    cmd->callback([&] {
      action = [&] {
        write_record(out, Record().add("k", k).add("ratio", heath_brown_ratio(k, opt.threads)), detail::resolve_format(opt, Format::json));
        return 0;
      };
    });
  }

  // vardi K bins bound
  {
    auto* cmd = app.add_subcommand("vardi", "Histogram of s(h, k) / log k over reduced h/k, k <= K");
    cmd->add_option("K", K)->required();
    cmd->add_option("bins", bins)->required();
    cmd->add_option("bound", bound_text, "Half-width of the binned range, as a rational")->required();
    cmd->callback([&] {
      action = [&] {
        const VardiHistogram hist = vardi_histogram(K, bins, Rational::parse(bound_text), opt.threads);
        const Format f = detail::resolve_format(opt, Format::csv);
        if (f == Format::csv) {
          write_histogram_csv(out, hist);
          return 0;
        }
        std::vector<Record> recs;
        recs.push_back(Record().add("bin_lo", "-inf").add("bin_hi", hist.edges.front()).add("count", hist.below));
        for (int i = 0; i < hist.bins; ++i) {
          const auto idx = static_cast<std::size_t>(i);
          recs.push_back(Record().add("bin_lo", hist.edges[idx]).add("bin_hi", hist.edges[idx + 1]).add("count", hist.counts[idx]));
        }
        recs.push_back(Record().add("bin_lo", hist.edges.back()).add("bin_hi", "inf").add("count", hist.above));
        write_records(out, recs, f);
        return 0;
      };
    });
  }

  // growth qmax
  {
    auto* cmd = app.add_subcommand("growth", "Partial-quotient and |s(a, q)| sums against q log^2 q");
    cmd->add_option("qmax", qmax)->required();
    cmd->callback([&] {
      action = [&] {
        std::vector<Record> recs;
        for (const auto& row : growth_check(qmax, opt.threads)) {
          recs.push_back(Record()
                             .add("q", row.q)
                             .add("quotient_sum", row.quotient_sum)
                             .add("abs_sum", row.abs_sum)
                             .add("q_log2_q", row.comparator)
                             .add("quotient_ratio", row.quotient_ratio())
                             .add("abs_ratio", row.abs_ratio()));
        }
        write_records(out, recs, detail::resolve_format(opt, Format::csv));
        return 0;
      };
    });
  }

  // bench kmax
  {
    auto* cmd = app.add_subcommand("bench", "Wall time of the naive and fast evaluations over a k ladder");
    cmd->add_option("kmax", K)->required();
    cmd->callback([&] {
      action = [&] {
        require(K >= 10, "bench: kmax must be >= 10");
        std::vector<Record> recs;
        for (std::int64_t kk = 10; kk <= K; kk *= 10) {
          std::vector<std::int64_t> hs;
          const std::int64_t step = std::max<std::int64_t>(1, kk / 16);
          for (std::int64_t hh = 1; hh < kk; hh += step) hs.push_back(hh);
          Rational sink;
          const double naive_ns = detail::median_ns([&] {
            for (auto hh : hs) sink = dedekind_naive(hh, kk);
          }, 1) / static_cast<double>(hs.size());
          const double fast_ns = detail::median_ns([&] {
            for (auto hh : hs) sink = dedekind_fast(hh, kk);
          }, 16) / static_cast<double>(hs.size());
          recs.push_back(Record()
                             .add("k", kk)
                             .add("naive_ns", static_cast<std::int64_t>(naive_ns + 0.5))
                             .add("fast_ns", static_cast<std::int64_t>(fast_ns + 0.5))
                             .add("speedup", static_cast<Real>(naive_ns / fast_ns)));
        }
        write_records(out, recs, detail::resolve_format(opt, Format::csv));
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const contract_error& e) {
    err << "contract failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dedekind::cli
