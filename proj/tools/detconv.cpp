#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "detconv/convolve.hpp"
#include "detconv/ensembles.hpp"
#include "detconv/error.hpp"
#include "detconv/gsvd.hpp"
#include "detconv/io.hpp"
#include "detconv/permanent.hpp"
#include "detconv/univariate.hpp"
#include "detconv/verify.hpp"

using namespace detconv;
using io::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Options {
  RunConfig config;
  std::string output;

  // verify
  std::string suite = "all";
  std::string fault;
  std::size_t mo_n = 0;
  std::string mo_kind = "exhaustive";

  // convolve
  std::string conv_kind;
  std::string input;
  std::string p_text, q_text;
  bool oracle = false;

  // permanent
  std::string vectors, matrix;
  std::size_t bench_n = 0, bench_k = 2;
  std::uint64_t bench_seed = 0;

  // gsvd
  std::string m_file, n_file;
  bool operator_form = false;
  bool reciprocal = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write '" + o.output + "'");
  out << text;
}

void emit_json(const Options& o, const json& j, const std::string& text) {
  emit(o, o.config.output_format == "json" ? j.dump(2) + "\n" : text);
}

OracleBudget budget(const Options& o) { return {o.config.exhaustive_cap, o.config.worker_count}; }

// --- verify --------------------------------------------------------------------

int run_minor_orth_detail(const Options& o) {
  EnsembleSpec spec;
  spec.kind = parse_ensemble_kind(o.mo_kind);
  spec.n = o.mo_n;
  spec.seed = o.config.seed;
  spec.cap = o.config.exhaustive_cap;
  spec.sample_count = o.config.sample_count;
  const std::size_t top = spec.kind == EnsembleKind::HaarOrthogonalSampled ? std::min<std::size_t>(2, spec.n) : spec.n;
  const MinorOrthReport r = verify_minor_orthogonality(spec, top, top, {0.05, o.config.worker_count, std::nullopt});
  json entries = json::array();
  std::ostringstream text;
  for (const auto& e : r.entries) {
    json tuple{{"S", e.s.str()}, {"T", e.t.str()}, {"U", e.u.str()}, {"V", e.v.str()}};
    json observed = e.observed_exact ? json(e.observed_exact->str()) : json(e.observed);
    entries.push_back(json{{"tuple", tuple}, {"expected", e.expected.str()}, {"observed", observed}, {"pass", e.pass}});
    text << (e.pass ? "PASS " : "FAIL ") << e.s.str() << ' ' << e.t.str() << ' ' << e.u.str() << ' ' << e.v.str()
         << " expected " << e.expected.str() << " observed "
         << (e.observed_exact ? e.observed_exact->str() : std::to_string(e.observed)) << '\n';
  }
  json out{{"kind", to_string(spec.kind)}, {"n", spec.n},           {"samples", r.samples},
           {"exact", r.exact},              {"max_deviation", r.max_deviation}, {"pass", r.pass},
           {"entries", entries}};
  emit_json(o, out, text.str());
  return r.pass ? kExitPass : kExitFailure;
}

int run_verify_cmd(const Options& o) {
  if (o.suite == "minor-orth" && o.mo_n > 0) return run_minor_orth_detail(o);
  const VerifyReport report = run_verify(o.suite, o.config, parse_fault(o.fault));
  emit_json(o, to_json(report), to_text(report));
  if (const VerifyItem* f = report.first_failure()) {
    std::cerr << "identity failed: " << f->anchor << ", " << f->label << '\n';
    return kExitFailure;
  }
  return kExitPass;
}

// --- convolve ------------------------------------------------------------------

std::optional<RationalMatrix> optional_matrix(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return io::rational_matrix_from_json(j[key], key);
}

std::vector<RationalMatrix> matrix_list(const json& j, const char* key) {
  const json& arr = io::require_field(j, key, "");
  if (!arr.is_array()) throw InputError(std::string("field '") + key + "': expected an array of matrices");
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(io::rational_matrix_from_json(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int run_convolve(const Options& o) {
  json in = json::object();
  if (!o.input.empty()) in = io::read_json_file(o.input);
  if (!o.p_text.empty()) in["p"] = o.p_text;
  if (!o.q_text.empty()) in["q"] = o.q_text;
  if (o.input.empty() && in.empty()) throw InputError("convolve needs --input <json> or --p/--q");

  const std::string& kind = o.conv_kind;
  MultiPoly result(1);
  std::optional<MultiPoly> oracle;
  if (kind == "star") {
    const MultiPoly p = io::poly_from_json(io::require_field(in, "p", ""), "p");
    const MultiPoly q = io::poly_from_json(io::require_field(in, "q", ""), "q");
    const unsigned degree = in.contains("degree") ? static_cast<unsigned>(io::size_from_json(in["degree"], "degree"))
                                                  : p.total_degree();
    result = star_convolve(p, q, degree);
    if (o.oracle) throw InputError("convolve star has no expectation oracle; use 'global' with matrices");
  } else if (kind == "boxplus" || kind == "boxtimes") {
    const MultiPoly p = io::poly_from_json(io::require_field(in, "p", ""), "p");
    const MultiPoly q = io::poly_from_json(io::require_field(in, "q", ""), "q");
    const auto a = optional_matrix(in, "a");
    const auto b = optional_matrix(in, "b");
    const bool plus = kind == "boxplus";
    result = plus ? boxplus(p, q, a, b) : boxtimes(p, q, a, b);
    if (o.oracle) {
      const RationalMatrix ma = a ? *a : companion_of(p);
      const RationalMatrix mb = b ? *b : companion_of(q);
      oracle = plus ? boxplus_oracle(ma, mb, budget(o)) : boxtimes_oracle(ma, mb, budget(o));
    }
  } else if (kind == "rect") {
    const RationalMatrix a = io::rational_matrix_from_json(io::require_field(in, "a", ""), "a");
    const RationalMatrix b = io::rational_matrix_from_json(io::require_field(in, "b", ""), "b");
    result = rect_boxplus(a, b);
    if (o.oracle) oracle = rect_boxplus_oracle(a, b, budget(o));
  } else if (kind == "nonhermitian") {
    std::vector<RationalMatrix> m;
    for (const char* key : {"h1", "k1", "h2", "k2"}) {
      m.push_back(io::rational_matrix_from_json(io::require_field(in, key, ""), key));
    }
    result = nonhermitian_mult(m[0], m[1], m[2], m[3]);
    if (o.oracle) oracle = nonhermitian_oracle(m[0], m[1], m[2], m[3], budget(o));
  } else if (kind == "local") {
    const std::size_t arity = in.contains("arity") ? io::size_from_json(in["arity"], "arity") : 2;
    LocalInstance inst;
    inst.u = io::poly_matrix_from_json(io::require_field(in, "u", ""), "u", arity);
    inst.a1 = io::poly_matrix_from_json(io::require_field(in, "a1", ""), "a1", arity);
    inst.a2 = io::poly_matrix_from_json(io::require_field(in, "a2", ""), "a2", arity);
    inst.b1 = io::poly_matrix_from_json(io::require_field(in, "b1", ""), "b1", arity);
    inst.b2 = io::poly_matrix_from_json(io::require_field(in, "b2", ""), "b2", arity);
    inst.d = inst.u.rows();
    inst.m = inst.a1.cols();
    if (in.contains("x_index")) inst.x_index = io::size_from_json(in["x_index"], "x_index");
    if (in.contains("y_index")) inst.y_index = io::size_from_json(in["y_index"], "y_index");
    result = local_convolution(inst);
    if (o.oracle) oracle = local_expectation_oracle(inst, budget(o));
  } else if (kind == "global") {
    GlobalInstance inst{matrix_list(in, "a"), matrix_list(in, "b")};
    result = global_convolution(inst);
    if (o.oracle) oracle = global_expectation_oracle(inst, budget(o));
  } else {
    throw InputError("unknown convolution '" + kind + "'");
  }

  json out{{"command", "convolve " + kind}, {"result", io::to_json(result)}};
  std::string text = result.str() + "\n";
  bool match = true;
  if (oracle) {
    match = *oracle == result;
    out["oracle"] = io::to_json(*oracle);
    out["match"] = match;
    text += "oracle: " + oracle->str() + (match ? " (match)\n" : " (MISMATCH)\n");
  }
  emit_json(o, out, text);
  return match ? kExitPass : kExitFailure;
}

// --- permanent -------------------------------------------------------------------

int run_permanent_lowrank(const Options& o) {
  const RankDecomposition dec = io::rank_decomposition_from_json(io::read_json_file(o.vectors), "");
  const Rational v = lowrank_permanent(dec);
  json out{{"method", "lowrank"}, {"n", dec.n}, {"k", dec.k()},
           {"terms_bound", term_count_report(dec.n, dec.k()).get_str()}, {"permanent", v.str()}};
  bool match = true;
  if (o.oracle) {
    const Rational r = ryser_permanent(reconstruct(dec), o.config.worker_count);
    match = r == v;
    out["ryser"] = r.str();
    out["match"] = match;
  }
  emit_json(o, out, v.str() + "\n");
  return match ? kExitPass : kExitFailure;
}

int run_permanent_ryser(const Options& o) {
  const RationalMatrix m = io::rational_matrix_from_json(io::read_json_file(o.matrix), "");
  const Rational v = ryser_permanent(m, o.config.worker_count);
  emit_json(o, json{{"method", "ryser"}, {"n", m.rows()}, {"permanent", v.str()}}, v.str() + "\n");
  return kExitPass;
}

int run_permanent_bench(const Options& o) {
  const BenchRow row = permanent_bench(o.bench_n, o.bench_k, o.bench_seed, o.config.worker_count);
  std::ostringstream csv;
  csv << "n,k,terms,time_lowrank,time_ryser,lowrank_value,ryser_value\n";
  csv << row.n << ',' << row.k << ',' << row.terms.get_str() << ',' << std::setprecision(6) << row.time_lowrank << ','
      << row.time_ryser << ',' << row.lowrank_value.str() << ',' << std::setprecision(17) << row.ryser_value << '\n';
  emit(o, csv.str());
  return kExitPass;
}

// --- gsvd ------------------------------------------------------------------------

int run_gsvd_conv(const Options& o) {
  const GsvcpInstance mi = io::gsvcp_instance_from_json(io::read_json_file(o.m_file), "");
  const GsvcpInstance ni = io::gsvcp_instance_from_json(io::read_json_file(o.n_file), "");
  if (mi.m != ni.m || mi.s != ni.s || mi.t != ni.t) throw InputError("--m and --n instances have different shapes");
  const GsvcpCoeffs p = extract_gsvcp_coeffs(gsvcp(mi), mi.m, mi.s, mi.t);
  const GsvcpCoeffs q = extract_gsvcp_coeffs(gsvcp(ni), ni.m, ni.s, ni.t);
  const GsvcpCoeffs r = gsvd_convolve(p, q);
  json out{{"command", "gsvd conv"}, {"p", io::to_json(p)}, {"q", io::to_json(q)}, {"result", io::to_json(r)}};
  std::ostringstream text;
  text << "expected gsvcp: " << reconstruct_gsvcp(r).str() << '\n';
  bool ok = true;
  if (o.oracle) {
    const GsvcpCoeffs e = gsvd_expectation_oracle(mi, ni, budget(o));
    const bool match = e == r;
    ok = ok && match;
    out["oracle"] = io::to_json(e);
    out["match"] = match;
    text << "oracle: " << (match ? "match" : "MISMATCH") << '\n';
  }
  if (o.operator_form) {
    const PolyIdentityCheck c = gsvd_operator_check(p, q);
    ok = ok && c.pass;
    out["operator_form"] = json{{"P", io::to_json(gsvcp_operator_form(p))},
                                {"Q", io::to_json(gsvcp_operator_form(q))},
                                {"applied", io::to_json(c.lhs)},
                                {"match", c.pass}};
    text << "operator form: " << c.lhs.str() << (c.pass ? " (match)" : " (MISMATCH)") << '\n';
  }
  if (o.reciprocal) {
    const MultiPoly rec = reciprocal_form(r);
    out["reciprocal"] = io::to_json(rec);
    text << "reciprocal form: " << rec.str() << '\n';
  }
  emit_json(o, out, text.str());
  return ok ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detconv: exact determinantal polynomial convolutions and their oracles"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.config.seed, "Seed for random instances and samples");
  app.add_option("--samples", o.config.sample_count, "Sample count for sampled ensembles");
  app.add_option("--cap", o.config.exhaustive_cap, "Largest exhaustive group enumeration");
  app.add_option("--workers", o.config.worker_count, "Worker threads");
  app.add_option("--output", o.output, "Write the result here instead of stdout");
  app.add_option("--format", o.config.output_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Check the identities of a suite");
  std::vector<std::string> suites = verify_suites();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_option("--n", o.mo_n, "minor-orth: size for a per-tuple report");
  verify->add_option("--kind", o.mo_kind, "minor-orth: exhaustive, sampled or haar");
  verify->add_option("--inject-fault", o.fault)->group("");

  auto* convolve = app.add_subcommand("convolve", "Compute a convolution");
  convolve->add_option("kind", o.conv_kind, "star, boxplus, boxtimes, rect, nonhermitian, local or global")
      ->required()
      ->check(CLI::IsMember({"star", "boxplus", "boxtimes", "rect", "nonhermitian", "local", "global"}));
  convolve->add_option("--input", o.input, "JSON input file");
  convolve->add_option("--p", o.p_text, "Univariate shorthand for p, e.g. \"x^2-1\"");
  convolve->add_option("--q", o.q_text, "Univariate shorthand for q");
  convolve->add_flag("--oracle", o.oracle, "Also run the exhaustive expectation and compare");

  auto* permanent = app.add_subcommand("permanent", "Matrix permanents");
  permanent->require_subcommand(1);
  auto* lowrank = permanent->add_subcommand("lowrank", "Low-rank algorithm from a rank decomposition");
  lowrank->add_option("--vectors", o.vectors, "JSON {\"a\": [...], \"b\": [...]}")->required();
  lowrank->add_flag("--oracle", o.oracle, "Compare against Ryser");
  auto* ryser = permanent->add_subcommand("ryser", "Exact Ryser formula");
  ryser->add_option("--matrix", o.matrix, "JSON matrix")->required();
  auto* bench = permanent->add_subcommand("bench", "Time low-rank against Ryser, CSV output");
  bench->add_option("--n", o.bench_n, "Matrix size")->required();
  bench->add_option("--k", o.bench_k, "Rank");
  bench->add_option("--seed", o.bench_seed, "Instance seed");

  auto* gsvd = app.add_subcommand("gsvd", "Generalized singular value polynomials");
  gsvd->require_subcommand(1);
  auto* conv = gsvd->add_subcommand("conv", "Expected GSVCP coefficients of [M1 + R1 N1 Q; M2 + R2 N2 Q]");
  conv->add_option("--m", o.m_file, "JSON {\"a1\": matrix, \"a2\": matrix}")->required();
  conv->add_option("--n", o.n_file, "JSON {\"a1\": matrix, \"a2\": matrix}")->required();
  conv->add_flag("--oracle", o.oracle, "Also run the exhaustive expectation");
  conv->add_flag("--operator-form", o.operator_form, "Check the differential operator form");
  conv->add_flag("--reciprocal", o.reciprocal, "Also emit y^s z^t p(x, 1/y, 1/z)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    validate(o.config);
    if (*verify) return run_verify_cmd(o);
    if (*convolve) return run_convolve(o);
    if (*lowrank) return run_permanent_lowrank(o);
    if (*ryser) return run_permanent_ryser(o);
    if (*bench) return run_permanent_bench(o);
    if (*conv) return run_gsvd_conv(o);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
