#include "stas/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "stas/codec.hpp"
#include "stas/core.hpp"
#include "stas/errors.hpp"
#include "stas/estimator.hpp"
#include "stas/text_format.hpp"
#include "stas/verification.hpp"

namespace stas::cli {

namespace {

struct CliConfig {
  std::string p;
  std::string q1 = "0,0";
  std::string q2 = "0,0";
  std::int64_t r1 = 1;
  std::int64_t r2 = 1;
  std::optional<double> t;
  double t0 = 0.0;
  std::optional<std::size_t> count;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  std::size_t trials = 1000;
  bool estimate = false;
  bool repair = false;
  std::string kind = "s";
  std::int64_t n_max = 6;
  std::int64_t r_max = kDefaultRMax;
  std::string a;
  double t_min = -20.0;
  double t_max = -10.0;
  std::string p_re_range;
  std::string p_im_range;
};

void add_common(CLI::App *cmd, CliConfig &c) {
  cmd->add_option("--p", c.p, "Base p as re,im");
  cmd->add_option("--q1", c.q1, "Sine amplitude as re,im");
  cmd->add_option("--q2", c.q2, "Cosine amplitude as re,im");
  cmd->add_option("--r1", c.r1, "Odd sine frequency multiplier");
  cmd->add_option("--r2", c.r2, "Odd cosine frequency multiplier");
  cmd->add_option("--t", c.t, "Evaluation point");
  cmd->add_option("--t0", c.t0, "Grid start");
  cmd->add_option("--count", c.count, "Grid length");
  cmd->add_option("--input", c.input, "Input file");
  cmd->add_option("--output", c.output, "Output file (default stdout)");
  cmd->add_option("--seed", c.seed, "RNG seed");
  cmd->add_option("--tol", c.tol, "Tolerance");
  cmd->add_option("--trials", c.trials, "Number of randomized trials");
  cmd->add_flag("--estimate", c.estimate, "Estimate the invariant from the data");
  cmd->add_flag("--repair", c.repair, "Rewrite implicated samples");
  cmd->add_option("--kind", c.kind, "f (weighted) or s (family value)")
      ->check(CLI::IsMember({"f", "s"}));
  cmd->add_option("--n-max", c.n_max, "Last row of the exact table");
  cmd->add_option("--r-max", c.r_max, "Largest odd frequency searched");
  cmd->add_option("--a", c.a, "Invariant as re,im");
  cmd->add_option("--t-min", c.t_min, "Lower bound of sampled t");
  cmd->add_option("--t-max", c.t_max, "Upper bound of sampled t");
  cmd->add_option("--p-re-range", c.p_re_range, "Sampling range lo,hi for Re p");
  cmd->add_option("--p-im-range", c.p_im_range, "Sampling range lo,hi for Im p");
}

StasParams params_from(const CliConfig &c) {
  if (c.p.empty()) {
    throw ContractViolation("--p is required");
  }
  return StasParams(parse_complex(c.p), parse_complex(c.q1), parse_complex(c.q2),
                    c.r1, c.r2);
}

Range range_from(const std::string &text, Range fallback) {
  if (text.empty()) {
    return fallback;
  }
  const Complex pair = parse_complex(text);
  if (!(pair.real() <= pair.imag())) {
    throw ContractViolation("range must be lo,hi with lo <= hi");
  }
  return {pair.real(), pair.imag()};
}

SampleSeries load_series(const CliConfig &c) {
  if (c.input.empty()) {
    throw ContractViolation("--input is required");
  }
  std::ifstream in(c.input, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + c.input);
  }
  return read_sig1(in);
}

EncodedStream load_encoded(const CliConfig &c) {
  if (c.input.empty()) {
    throw ContractViolation("--input is required");
  }
  std::ifstream in(c.input, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + c.input);
  }
  return read_stasc1(in);
}

// Writes to --output when given, otherwise to `out`.
template <typename Fn> void emit(const CliConfig &c, std::ostream &out, Fn &&write) {
  if (c.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open " + c.output + " for writing");
  }
  write(file);
  if (!file.flush()) {
    throw IoError("failed writing " + c.output);
  }
}

Complex invariant_for(const CliConfig &c, const SampleSeries &series) {
  if (!c.a.empty()) {
    return parse_complex(c.a);
  }
  if (!c.p.empty()) {
    return closed_form_invariant(params_from(c));
  }
  if (c.estimate) {
    return estimate_invariant(series).a_hat;
  }
  throw ContractViolation("the invariant needs --a, --p or --estimate");
}

std::string index_list(const std::vector<std::size_t> &idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    s += (i ? "," : "") + std::to_string(idx[i]);
  }
  return s + "]";
}

int cmd_eval(const CliConfig &c, std::ostream &out) {
  const StasParams params = params_from(c);
  const bool as_s = c.kind == "s";
  if (c.count) {
    const SampleSeries series = sample_series(params, c.t0, *c.count);
    emit(c, out, [&](std::ostream &os) {
      write_sig1(os, series, as_s ? SampleKind::s : SampleKind::f);
    });
    return kOk;
  }
  if (!c.t) {
    throw ContractViolation("eval needs --t or --count");
  }
  const Complex v = as_s ? eval_s(params, *c.t) : eval_f(params, *c.t);
  out << format_complex(v) << '\n';
  return kOk;
}

int cmd_invariant(const CliConfig &c, std::ostream &out) {
  if (!c.input.empty()) {
    const InvariantReport r = estimate_invariant(load_series(c));
    out << "a_hat=" << format_complex(r.a_hat)
        << " max_rel_dev=" << format_double(r.max_rel_dev)
        << " windows_used=" << r.windows_used
        << " windows_skipped=" << r.windows_skipped << '\n';
    return kOk;
  }
  const StasParams params = params_from(c);
  out << "a=" << format_complex(closed_form_invariant(params)) << '\n';
  if (c.t) {
    out << "ratio=" << format_complex(invariant_ratio(params, *c.t)) << '\n';
  }
  return kOk;
}

int cmd_table(const CliConfig &c, std::ostream &out) {
  if (c.n_max < 4) {
    throw ContractViolation("--n-max must be at least 4");
  }
  out << "n numerator denominator ratio\n";
  for (std::int64_t n = 4; n <= c.n_max; ++n) {
    const DiscreteRatio row = discrete_ratio(n);
    out << n << ' ' << row.numerator << ' ' << row.denominator << ' ' << row.ratio
        << '\n';
  }
  return kOk;
}

int cmd_verify(const CliConfig &c, std::ostream &out) {
  if (c.trials < 1) {
    throw ContractViolation("--trials must be at least 1");
  }
  VerifyConfig vc;
  vc.trials = c.trials;
  vc.seed = c.seed;
  vc.t = {c.t_min, c.t_max};
  vc.bounds.p_re = range_from(c.p_re_range, vc.bounds.p_re);
  vc.bounds.p_im = range_from(c.p_im_range, vc.bounds.p_im);
  const VerifyReport r = run_verification(vc);
  const bool pass = r.max_rel_dev < kVerifyTolerance;
  out << "trials=" << r.trials << " evaluations=" << r.evaluations
      << " resampled=" << r.resampled
      << " max_rel_dev=" << format_double(r.max_rel_dev)
      << " tol=" << format_double(kVerifyTolerance)
      << " status=" << (pass ? "pass" : "fail") << '\n';
  return pass ? kOk : kFailure;
}

int cmd_encode(const CliConfig &c, std::ostream &out) {
  const SampleSeries series = load_series(c);
  const EncodedStream enc = encode_stream(series, invariant_for(c, series));
  emit(c, out, [&](std::ostream &os) { write_stasc1(os, enc); });
  return kOk;
}

int cmd_decode(const CliConfig &c, std::ostream &out) {
  const SampleSeries series = decode_stream(load_encoded(c));
  emit(c, out, [&](std::ostream &os) { write_sig1(os, series); });
  return kOk;
}

int cmd_check(const CliConfig &c, std::ostream &out) {
  if (c.repair && c.output.empty()) {
    throw ContractViolation("--repair needs --output");
  }
  const SampleSeries series = load_series(c);
  const Complex a = invariant_for(c, series);
  const auto findings = detect_errors(series, a, c.tol);
  bool any = false;
  for (const auto &f : findings) {
    if (f.verdict == Verdict::flagged) {
      any = true;
      out << "window=" << f.window_index << " residual=" << format_double(f.residual)
          << " samples=" << index_list(f.implicated_samples) << '\n';
    }
  }
  if (c.repair && any) {
    const RepairResult fixed = repair_series(series, a, findings);
    emit(c, out, [&](std::ostream &os) { write_sig1(os, fixed.series); });
    out << "repaired=" << index_list(fixed.repaired) << '\n';
  }
  return any ? kFailure : kOk;
}

int cmd_fit(const CliConfig &c, std::ostream &out) {
  const SampleSeries series = load_series(c);
  const InvariantReport inv = estimate_invariant(series);
  const SignChoice sign = disambiguate_p(recover_p(inv.a_hat), series);
  out << "a_hat=" << format_complex(inv.a_hat) << '\n'
      << "p=" << format_complex(sign.p) << '\n'
      << "p_sign_ambiguous=" << (sign.ambiguous ? "true" : "false") << '\n';
  const FitResult fit = search_frequencies(series, sign.p, c.r_max);
  out << "r1=" << fit.params.r1() << '\n'
      << "r2=" << fit.params.r2() << '\n'
      << "q1=" << format_complex(fit.params.q1()) << '\n'
      << "q2=" << format_complex(fit.params.q2()) << '\n'
      << "residual_rms=" << format_double(fit.residual_rms) << '\n'
      << "ties=";
  for (std::size_t i = 0; i < fit.ties.size(); ++i) {
    out << (i ? ";" : "") << fit.ties[i].first << ',' << fit.ties[i].second;
  }
  out << '\n';
  return kOk;
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Four-point invariant toolkit", "stas"};
  app.require_subcommand(1);
  CliConfig config;

  struct Entry {
    const char *name;
    const char *help;
    int (*fn)(const CliConfig &, std::ostream &);
  };
  const Entry entries[] = {
      {"eval", "Evaluate s(t) or f(t), or emit a SIG1 grid with --count", cmd_eval},
      {"invariant", "Closed-form invariant, or estimate it from --input", cmd_invariant},
      {"table", "Exact four-point ratios of the base sequence", cmd_table},
      {"verify", "Randomized check of the ratio against 1/p^2", cmd_verify},
      {"encode", "SIG1 -> STASC1 (4 -> 3 block codec)", cmd_encode},
      {"decode", "STASC1 -> SIG1", cmd_decode},
      {"check", "Sliding-window integrity check", cmd_check},
      {"fit", "Recover model parameters from a SIG1 series", cmd_fit},
  };
  std::vector<std::pair<CLI::App *, const Entry *>> commands;
  for (const Entry &e : entries) {
    CLI::App *cmd = app.add_subcommand(e.name, e.help);
    add_common(cmd, config);
    commands.emplace_back(cmd, &e);
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsage;
  }

  for (const auto &[cmd, entry] : commands) {
    if (!cmd->parsed()) {
      continue;
    }
    try {
      return entry->fn(config, out);
    } catch (const IdentityViolation &e) {
      err << e.name() << ": " << e.what() << '\n';
      return kFailure;
    } catch (const Error &e) {
      err << e.name() << ": " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception &e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  return kUsage;
}

} // namespace stas::cli
