#include "siegel/cli.hpp"

#include "siegel/errors.hpp"
#include "siegel/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace siegel {

namespace {

const std::vector<std::string> kCommands = {"context",     "strata",          "kostant",     "chain-term", "restrict-weighted",
                                            "restrict-ic", "euler",           "expansion",   "hecke-index", "transfer-degree",
                                            "fiber-count", "hecke-matrix",    "oracle"};

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  for (Int v : parse_int_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

int require_r(const JobSpec& spec) {
  if (!spec.r) throw ValidationError(spec.command + " needs --stratum");
  return *spec.r;
}

Int require_m(const JobSpec& spec) {
  if (!spec.m) throw ValidationError(spec.command + " needs --m");
  return *spec.m;
}

ParabolicSet require_S(const JobSpec& spec) {
  if (!spec.S) throw ValidationError(spec.command + " needs --S");
  return ParabolicSet::make(spec.d, parse_indices(*spec.S));
}

Weight lambda_of(const JobSpec& spec) { return spec.lambda ? parse_lambda(*spec.lambda, spec.d) : Weight::zero(spec.d); }

// Input echo: every field that determines the result (not cap or threads).
Json input_echo(const JobSpec& spec) {
  Json in = Json::object();
  if (spec.m) in["m"] = num(*spec.m);
  if (spec.lambda) in["lambda"] = *spec.lambda;
  if (spec.profile) in["profile"] = *spec.profile;
  if (spec.r) in["stratum"] = num(Int(*spec.r));
  if (spec.S) in["S"] = *spec.S;
  if (spec.chain) in["chain"] = *spec.chain;
  if (spec.g) in["g"] = *spec.g;
  if (spec.count) in["count"] = num(Int(*spec.count));
  if (spec.annotate) in["annotate"] = "1";
  in["mode"] = spec.mode;
  return in;
}

struct Output {
  Json result = Json::object();
  std::string table;  // TSV body for class-valued commands
};

void class_output(Output& o, const std::string& key, const SymbolicClass& cls, const GroupContext& ctx,
                  const JobSpec& spec, bool first = true) {
  Json& slot = key.empty() ? o.result : o.result[key];
  slot["class"] = to_json(cls);
  if (spec.mode == "euler") slot["euler"] = num(euler_evaluate(cls, ctx));
  o.table += graded_report_tsv(cls, key, first);
}

Output context_cmd(const JobSpec& spec) {
  const GroupContext ctx = build_context(spec.d, spec.n, spec.maxGenus);
  Output o;
  Json roots = Json::array();
  for (const auto& root : ctx.positiveRoots) roots.push_back(root.to_string());
  std::vector<Int> lengths;
  for (const auto& w : ctx.weyl) lengths.push_back(w.length);
  o.result = Json{{"positiveRoots", roots},
                  {"rho", ctx.rho.to_string()},
                  {"weylOrder", num(ctx.weylOrder)},
                  {"weylLengths", num_list(lengths)},
                  {"dimG", num(ctx.dimG)},
                  {"c", num(ctx.c)},
                  {"stratumDims", num_list(ctx.stratumDims)}};
  return o;
}

Output strata_cmd(const JobSpec& spec) {
  const GroupContext ctx = build_context(spec.d, spec.n, spec.maxGenus);
  Output o;
  Json counts = Json::object();
  for (int r = 0; r < ctx.d; ++r)
    if (!spec.r || *spec.r == r) counts[std::to_string(r)] = num(strata_count(ctx, r));
  if (spec.r && counts.empty()) throw ValidationError("stratum index out of range");
  const IcProfiles p = ic_profiles(ctx.d);
  Json t = Json::array(), s = Json::array();
  for (const auto& x : p.t) t.push_back(x.to_string());
  for (const auto& x : p.s) s.push_back(x.to_string());
  o.result = Json{{"counts", counts},
                  {"stratumDims", num_list(stratum_dims(ctx.d))},
                  {"icProfiles", Json{{"t", t}, {"s", s}}},
                  {"similitudeImage", num(similitude_image_count(ctx.d, ctx.n))}};
  if (spec.S) {
    const ParabolicSet S = require_S(spec);
    o.result["doubleCosets"] = Json{{"S", S.to_string()}, {"count", num(double_coset_count(ctx, S.r(), S))}};
  }
  return o;
}

Output kostant_cmd(const JobSpec& spec) {
  const GroupContext ctx = build_context(spec.d, spec.n, spec.maxGenus);
  const ParabolicSet S = spec.S ? require_S(spec) : ParabolicSet::maximal(spec.d, spec.r.value_or(0));
  const ParabolicData pd = parabolic_data(ctx, S);
  Output o;
  Json reps = Json::array();
  for (const auto& w : kostant_reps(ctx, S)) reps.push_back(to_json(w));
  std::vector<Int> blocks(pd.leviBlocks.begin(), pd.leviBlocks.end());
  const GradedVirtualRep module = lie_n_cohomology(ctx, S, lambda_of(spec));
  o.result = Json{{"S", S.to_string()},
                  {"leviBlocks", num_list(blocks)},
                  {"sympRank", num(Int(pd.sympRank))},
                  {"dimN", num(pd.dimN)},
                  {"dimU", num(pd.dimU)},
                  {"representatives", reps},
                  {"module", to_json(module)}};
  SymbolicClass cls;
  cls.add(1, module);
  o.table = graded_report_tsv(cls);
  return o;
}

Output chain_term_cmd(const JobSpec& spec) {
  const GroupContext ctx = build_context(spec.d, spec.n, spec.maxGenus);
  const Chain chain = Chain::parse(spec.chain.value_or(""));
  Output o;
  o.result["chain"] = chain.to_string();
  class_output(o, "", chain_term(ctx, chain, require_r(spec), lambda_of(spec)), ctx, spec);
  return o;
}

Output restrict_weighted_cmd(const JobSpec& spec, bool eulerOnly) {
  const GroupContext ctx = build_context(spec.d, spec.n, spec.maxGenus);
  if (!spec.profile) throw ValidationError(spec.command + " needs --profile");
  const Profile profile = parse_profile(*spec.profile, spec.d);
  const SymbolicClass cls = restrict_weighted(ctx, profile, lambda_of(spec), require_r(spec));
  Output o;
  if (eulerOnly) {
    o.result["euler"] = num(euler_evaluate(cls, ctx));
    o.result["note"] = "EXTENSION: Euler characteristic evaluation";
    return o;
  }
  class_output(o, "", cls, ctx, spec);
  return o;
}

Output restrict_ic_cmd(const JobSpec& spec) {
  const GroupContext ctx = build_context(spec.d, spec.n, spec.maxGenus);
  const auto [t, s] = restrict_ic(ctx, lambda_of(spec), require_r(spec));
  Output o;
  class_output(o, "profileT", t, ctx, spec, true);
  class_output(o, "profileS", s, ctx, spec, false);
  if (spec.mode == "euler") o.result["eulerEqual"] = euler_evaluate(t, ctx) == euler_evaluate(s, ctx) ? "true" : "false";
  return o;
}

Output expansion_cmd(const JobSpec& spec) {
  Output o;
  Json terms = Json::array();
  for (const auto& t : expansion_terms(spec.count.value_or(spec.d))) {
    std::vector<Int> chain(t.chain.begin(), t.chain.end());
    terms.push_back(Json{{"chain", num_list(chain)}, {"sign", num(Int(t.sign))}});
  }
  o.result["terms"] = terms;
  return o;
}

Output oracle_cmd(const JobSpec& spec);

Output dispatch(const JobSpec& spec) {
  const auto& c = spec.command;
  if (c == "context") return context_cmd(spec);
  if (c == "strata") return strata_cmd(spec);
  if (c == "kostant") return kostant_cmd(spec);
  if (c == "chain-term") return chain_term_cmd(spec);
  if (c == "restrict-weighted") return restrict_weighted_cmd(spec, false);
  if (c == "euler") return restrict_weighted_cmd(spec, true);
  if (c == "restrict-ic") return restrict_ic_cmd(spec);
  if (c == "expansion") return expansion_cmd(spec);
  if (c == "oracle") return oracle_cmd(spec);
  const GroupContext ctx = build_context(spec.d, spec.n, spec.maxGenus);
  Output o;
  if (c == "hecke-index") {
    const ParabolicSet S = require_S(spec);
    o.result = Json{{"S", S.to_string()}, {"index", num(hecke_index(ctx, S, require_m(spec)))}};
  } else if (c == "transfer-degree") {
    o.result = Json{{"degree", num(transfer_degree(spec.d, spec.n, require_m(spec)))}};
  } else if (c == "fiber-count") {
    o.result = Json{{"fiber", num(boundary_fiber_count(ctx, require_r(spec), require_m(spec)))}};
  } else if (c == "hecke-matrix") {
    const Int m = require_m(spec);
    const HeckeDatum datum{spec.d, spec.n, m, parse_hecke_element(spec.g.value_or("identity"), spec.d, m)};
    const ParabolicSet S = spec.S ? require_S(spec) : ParabolicSet::maximal(spec.d, require_r(spec));
    if (spec.r && *spec.r != S.r()) throw ValidationError("--stratum must equal min(S)");
    o.result = to_json(hecke_matrix_structure(datum, S, spec.annotate, {spec.cap, spec.threads}));
    o.result["S"] = S.to_string();
  } else {
    throw ValidationError("unknown command '" + c + "'");
  }
  return o;
}

struct OracleRow {
  std::string check;
  std::string expected;
  std::string actual;
  std::string status;
};

template <class Closed, class Brute>
OracleRow oracle_row(const std::string& check, Closed closed, Brute brute) {
  OracleRow row{check, "", "", ""};
  try {
    row.expected = closed();
    row.actual = brute();
    row.status = row.expected == row.actual ? "PASS" : "FAIL";
  } catch (const ScopeError& e) {
    row.status = "SKIP";
    row.actual = e.what();
  }
  return row;
}

Output oracle_cmd(const JobSpec& spec) {
  const GroupContext ctx = build_context(spec.d, spec.n, spec.maxGenus);
  const EnumerationOptions opts{spec.cap, spec.threads};
  const int d = spec.d;
  const Int n = spec.n;
  std::vector<OracleRow> rows;
  rows.push_back(oracle_row("group_order GSp(" + std::to_string(2 * d) + ")",
                            [&] { return to_string(group_order(GroupKind::gsp(d), n)); },
                            [&] { return std::to_string(brute_force_group(GroupKind::gsp(d), n, opts).size()); }));
  rows.push_back(oracle_row("similitude_image", [&] { return std::to_string(euler_phi(n)); },
                            [&] { return std::to_string(brute_force_similitude_image(d, n, opts)); }));
  for (int r = 0; r < d; ++r)
    rows.push_back(oracle_row("strata_count r=" + std::to_string(r), [&] { return to_string(strata_count(ctx, r)); },
                              [&] { return std::to_string(brute_force_strata_count(d, r, n, opts)); }));
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> idx;
    for (int b = 0; b < d; ++b)
      if (mask & (1u << b)) idx.push_back(b);
    const ParabolicSet S = ParabolicSet::make(d, idx);
    const std::string card = to_string(double_coset_count(ctx, S.r(), S));
    rows.push_back(oracle_row("double_coset_count S=" + S.to_string(), [&] { return card; },
                              [&] { return std::to_string(brute_force_double_coset_count(d, S, n, opts)); }));
    if (S.size() > 1)
      rows.push_back(oracle_row("refined_fibers S=" + S.to_string(), [&] { return card; }, [&] {
        const auto fibers = brute_force_refined_fibers(d, S, n, opts);
        const bool uniform = std::all_of(fibers.begin(), fibers.end(), [&](Int f) { return f == fibers.front(); });
        return uniform ? std::to_string(fibers.front()) : std::string("non-uniform");
      }));
    if (spec.m) {
      const Int m = *spec.m;
      rows.push_back(oracle_row("hecke_index S=" + S.to_string() + " m=" + std::to_string(m),
                                [&] { return to_string(hecke_index(ctx, S, m)); },
                                [&] { return std::to_string(brute_force_hecke_index(d, S, n, m, opts)); }));
    }
  }
  if (spec.m) {
    const Int m = *spec.m;
    for (int r = 0; r < d; ++r)
      rows.push_back(oracle_row("fibration r=" + std::to_string(r) + " m=" + std::to_string(m),
                                [&] { return to_string(strata_count(ctx, r) * boundary_fiber_count(ctx, r, m)); },
                                [&] { return std::to_string(brute_force_strata_count(d, r, m, opts)); }));
  }
  Output o;
  Json list = Json::array();
  bool allPass = true;
  o.table = "check\texpected\tactual\tstatus\n";
  for (const auto& row : rows) {
    list.push_back(Json{{"check", row.check}, {"expected", row.expected}, {"actual", row.actual}, {"status", row.status}});
    allPass = allPass && row.status == "PASS";
    o.table += row.check + '\t' + row.expected + '\t' + row.actual + '\t' + row.status + '\n';
  }
  o.result = Json{{"checks", list}, {"allPass", allPass ? "true" : "false"}};
  return o;
}

bool has_table(const std::string& command) {
  return command == "kostant" || command == "chain-term" || command == "restrict-weighted" ||
         command == "restrict-ic" || command == "oracle";
}

}  // namespace

Weight parse_lambda(const std::string& text, int d) {
  const auto at = text.find('@');
  const auto coords = parse_int_list(text.substr(0, at));
  const Int m0 = at == std::string::npos ? 0 : parse_int_list(text.substr(at + 1)).at(0);
  if (static_cast<int>(coords.size()) != d)
    throw ValidationError("--lambda needs exactly d = " + std::to_string(d) + " coordinates");
  Weight w(coords, m0);
  if (!is_dominant(w)) throw ValidationError("highest weight " + w.to_string() + " is not dominant");
  return w;
}

RunResult run(const JobSpec& spec) {
  RunResult res;
  try {
    if (std::find(kCommands.begin(), kCommands.end(), spec.command) == kCommands.end())
      throw ValidationError("unknown command '" + spec.command + "'");
    if (spec.format != "json" && spec.format != "tsv") throw ValidationError("--format must be json or tsv");
    if (spec.mode != "symbolic" && spec.mode != "euler") throw ValidationError("--mode must be symbolic or euler");
    const Output o = dispatch(spec);
    if (spec.format == "json") {
      Json doc{{"meta", Json{{"command", spec.command},
                             {"d", num(Int(spec.d))},
                             {"n", num(spec.n)},
                             {"version", kVersion},
                             {"input", input_echo(spec)}}},
               {"result", o.result}};
      res.out = dump(doc);
    } else {
      res.out = "# siegel " + std::string(kVersion) + " command=" + spec.command + " d=" + std::to_string(spec.d) +
                " n=" + std::to_string(spec.n) + "\n";
      res.out += has_table(spec.command) ? o.table : flatten_tsv(o.result);
      if (spec.command == "restrict-ic" && spec.mode == "euler")
        res.out += "# euler profileT=" + o.result["profileT"]["euler"].get<std::string>() +
                   " profileS=" + o.result["profileS"]["euler"].get<std::string>() + "\n";
    }
  } catch (const ValidationError& e) {
    res.status = kExitValidation;
    res.err = std::string("validation error: ") + e.what() + "\n";
  } catch (const ScopeError& e) {
    res.status = kExitScope;
    res.err = std::string("scope error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.status = kExitInternal;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact boundary-strata calculator for Siegel modular varieties"};
  JobSpec spec;
  app.add_option("command", spec.command, "Subcommand")->required()->check(CLI::IsMember(kCommands));
  app.add_option("--d", spec.d, "Genus")->required();
  app.add_option("--n", spec.n, "Level (>= 3)")->capture_default_str();
  app.add_option("--m", spec.m, "Second level, multiple of n");
  app.add_option("--lambda", spec.lambda, "Highest weight a1,...,ad[@m0]");
  app.add_option("--profile", spec.profile, "Thresholds t0,...,t_{d-1}; inf and -inf allowed");
  app.add_option("--stratum,--r", spec.r, "Parabolic index of the stratum");
  app.add_option("--S", spec.S, "Parabolic set, e.g. 0,1");
  app.add_option("--chain", spec.chain, "Chain r:a,r:a,... with decreasing r");
  app.add_option("--g", spec.g, "Hecke element mod m: rows separated by ';' or 'identity'");
  app.add_option("--count", spec.count, "Number of strata for expansion");
  app.add_option("--format", spec.format, "json or tsv")->capture_default_str();
  app.add_option("--mode", spec.mode, "symbolic or euler")->capture_default_str();
  app.add_flag("--annotate", spec.annotate, "Record witnesses in hecke-matrix cells");
  app.add_option("--cap", spec.cap, "Brute-force enumeration cap")->capture_default_str();
  app.add_option("--threads", spec.threads, "Worker threads for enumeration")->capture_default_str();
  app.add_option("--max-genus", spec.maxGenus, "Largest genus with an explicit Weyl group")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitValidation, out.str(), err.str()};
  }
  return run(spec);
}

}  // namespace siegel
