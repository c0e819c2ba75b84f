#include "detconv/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "detconv/convolve.hpp"
#include "detconv/ensembles.hpp"
#include "detconv/error.hpp"
#include "detconv/gsvd.hpp"
#include "detconv/instances.hpp"
#include "detconv/permanent.hpp"
#include "detconv/rng.hpp"
#include "detconv/univariate.hpp"

namespace detconv {

namespace {

using io::json;

const std::vector<std::string> kSuites{"minor-orth", "local",  "global",   "mixed-disc",
                                       "convolutions", "gsvd", "permanent"};

struct Context {
  const RunConfig& config;
  Fault fault;
  VerifyReport& report;
  std::string suite;
  Rng rng;

  OracleBudget budget() const { return {config.exhaustive_cap, config.worker_count}; }

  void add(std::string anchor, std::string label, bool pass, json detail = json::object()) {
    report.items.push_back({suite, std::move(anchor), std::move(label), pass, std::move(detail)});
  }
};

Rng suite_rng(const RunConfig& config, const std::string& suite) {
  const auto it = std::find(kSuites.begin(), kSuites.end(), suite);
  return Rng(config.seed ^ splitmix64(static_cast<std::uint64_t>(it - kSuites.begin()) + 0x5eed), streams::kInstances);
}

std::string dims(const char* a, std::size_t x, const char* b, std::size_t y) {
  return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

json poly_pair(const MultiPoly& lhs, const MultiPoly& rhs) {
  return json{{"lhs", lhs.str()}, {"rhs", rhs.str()}};
}

// --- minor-orth -------------------------------------------------------------

void suite_minor_orth(Context& c) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EnsembleSpec spec{EnsembleKind::SignedPermutationExhaustive, n, 0, c.config.seed, c.config.exhaustive_cap};
    const MinorOrthReport r = verify_minor_orthogonality(spec, n, n, {0.05, c.config.worker_count, std::nullopt});
    const auto failures = std::count_if(r.entries.begin(), r.entries.end(), [](const auto& e) { return !e.pass; });
    c.add("Lemma signed permutations are minor-orthogonal", "n=" + std::to_string(n) + " exhaustive", r.pass,
          json{{"tuples", r.entries.size()}, {"failures", failures}, {"group_size", r.samples}});
  }
  {
    const std::size_t n = 3;
    EnsembleSpec spec{EnsembleKind::SignedPermutationExhaustive, n, 0, c.config.seed, c.config.exhaustive_cap};
    const SignedPermutation q0 = sample_signed_permutation(n, c.rng);
    const MinorOrthReport plain = verify_minor_orthogonality(spec, n, n, {0.05, c.config.worker_count, std::nullopt});
    const MinorOrthReport rotated = verify_minor_orthogonality(spec, n, n, {0.05, c.config.worker_count, q0});
    bool same = plain.entries.size() == rotated.entries.size() && rotated.pass;
    for (std::size_t i = 0; same && i < plain.entries.size(); ++i) {
      same = plain.entries[i].observed_exact == rotated.entries[i].observed_exact;
    }
    c.add("Lemma rotation closure", "n=3 fixed left factor", same, json{{"tuples", plain.entries.size()}});
  }
  {
    EnsembleSpec spec{EnsembleKind::HaarOrthogonalSampled, 3, c.config.sample_count, c.config.seed,
                      c.config.exhaustive_cap};
    const MinorOrthReport r = verify_minor_orthogonality(spec, 2, 2, {0.05, 1, std::nullopt});
    c.add("Corollary Haar orthogonal matrices are minor-orthogonal", "n=3 k,l<=2", r.pass,
          json{{"samples", r.samples}, {"tolerance", r.tolerance}, {"max_deviation", r.max_deviation}});
  }
}

// --- local --------------------------------------------------------------------

// local_convolution with an optional wrong L_2 coefficient for x y.
MultiPoly local_rhs(const LocalInstance& inst, Fault fault) {
  if (fault != Fault::LocalL2 || inst.m != 2) return local_convolution(inst);
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const MultiPoly det = determinant(inst.u + x * (inst.a1 * inst.b1) + y * (inst.a2 * inst.b2));
  MultiPoly out(2);
  for (const auto& [e, coeff] : det.terms()) {
    Rational f = l_coefficient(2, e[0], e[1]);
    if (e[0] == 1 && e[1] == 1) f = Rational(1);  // should be 1/2
    if (!f.is_zero()) out.add_term(e, coeff * f);
  }
  return out;
}

void suite_local(Context& c) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t m = 1; m <= 3; ++m) {
      json bad = json::array();
      const int count = 10;
      for (int i = 0; i < count; ++i) {
        const LocalInstance inst = instances::local(c.rng, d, m);
        const MultiPoly lhs = local_expectation_oracle(inst, c.budget());
        const MultiPoly rhs = local_rhs(inst, c.fault);
        if (lhs != rhs) bad.push_back(json{{"instance", i}, {"oracle", lhs.str()}, {"formula", rhs.str()}});
      }
      c.add("Theorem Local", dims("d", d, "m", m), bad.empty(), json{{"instances", count}, {"mismatches", bad}});
    }
  {
    LocalInstance inst;
    inst.d = inst.m = 2;
    inst.u = PolyMatrix(2, 2, 2);
    inst.a1 = inst.a2 = inst.b1 = inst.b2 = PolyMatrix::identity(2, 2);
    const MultiPoly lhs = local_expectation_oracle(inst, c.budget());
    const MultiPoly rhs = local_rhs(inst, c.fault);
    const MultiPoly want = parse_univariate("x^2").embed(2, std::vector<std::size_t>{0}) +
                           MultiPoly::monomial({1, 1}, Rational(1)) + MultiPoly::monomial({0, 2}, Rational(1));
    c.add("Theorem Local", "identity blocks d=2 m=2", lhs == rhs && rhs == want, poly_pair(lhs, rhs));
  }
  {
    std::size_t cases = 0;
    bool ok = true;
    for (unsigned m = 0; m <= 8; ++m)
      for (unsigned a = 0; a <= m; ++a)
        for (unsigned b = 0; a + b <= m; ++b) {
          const auto [lhs, rhs] = local_binomial_identity(m, a, b);
          ok = ok && lhs == rhs;
          ++cases;
        }
    c.add("Binomial identity behind Theorem Local", "0<=a+b<=m<=8", ok, json{{"cases", cases}});
  }
}

// --- global -------------------------------------------------------------------

void suite_global(Context& c) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= 3; ++d) {
      json bad = json::array();
      const int count = 10;
      for (int i = 0; i < count; ++i) {
        const GlobalInstance inst = instances::global(c.rng, n, d);
        const MultiPoly lhs = global_expectation_oracle(inst, c.budget());
        const MultiPoly rhs = global_convolution(inst);
        if (lhs != rhs) bad.push_back(json{{"instance", i}, {"oracle", lhs.str()}, {"formula", rhs.str()}});
      }
      c.add("Theorem Global", dims("n", n, "d", d), bad.empty(), json{{"instances", count}, {"mismatches", bad}});
    }
  GlobalInstance inst;
  inst.a = {RationalMatrix::diagonal({1, 0}), RationalMatrix::diagonal({0, 1})};
  inst.b = {RationalMatrix::diagonal({1, 2}), RationalMatrix::diagonal({3, 4})};
  const MultiPoly lhs = global_expectation_oracle(inst, c.budget());
  const MultiPoly rhs = global_convolution(inst);
  const MultiPoly want = MultiPoly::monomial({1, 1}, Rational(5));
  c.add("Theorem Global", "diagonal example 5*x1*x2", lhs == rhs && rhs == want, poly_pair(lhs, rhs));
}

// --- mixed-disc ---------------------------------------------------------------

RationalMatrix outer(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  RationalMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

std::vector<RationalMatrix> random_slots(Rng& rng, std::size_t n) {
  std::vector<RationalMatrix> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(instances::rational_matrix(rng, n, n));
  return xs;
}

void suite_mixed_disc(Context& c) {
  Rng& rng = c.rng;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::vector<RationalMatrix> ids(n, RationalMatrix::identity(n));
    const Rational d = mixed_discriminant(ids);
    c.add("Mixed discriminant normalization D(I,...,I) = n!", "n=" + std::to_string(n),
          d == Rational(factorial(static_cast<unsigned>(n))), json{{"value", d.str()}});
  }
  const std::size_t n = 3;
  const int trials = 5;
  bool p1 = true, p2 = true, p3 = true, p4 = true;
  for (int i = 0; i < trials; ++i) {
    std::vector<RationalMatrix> xs = random_slots(rng, n);
    const RationalMatrix y = instances::rational_matrix(rng, n, n);
    const Rational a = Rational(rng.integer_in(-4, 4)) / Rational(rng.integer_in(1, 3));
    const Rational b = Rational(rng.integer_in(-4, 4)) / Rational(rng.integer_in(1, 3));
    const Rational base = mixed_discriminant(xs);

    std::vector<RationalMatrix> lin = xs;
    lin[0] = a * xs[0] + b * y;
    std::vector<RationalMatrix> with_y = xs;
    with_y[0] = y;
    p1 = p1 && mixed_discriminant(lin) == a * base + b * mixed_discriminant(with_y);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[rng.below(k)]);
    std::vector<RationalMatrix> shuffled;
    for (std::size_t k : perm) shuffled.push_back(xs[k]);
    p2 = p2 && mixed_discriminant(shuffled) == base;

    std::vector<RationalMatrix> right, left;
    for (const auto& x : xs) {
      right.push_back(x * y);
      left.push_back(y * x);
    }
    const Rational dy = determinant(y) * base;
    p3 = p3 && mixed_discriminant(right) == dy && mixed_discriminant(left) == dy;

    std::vector<std::vector<Rational>> us, vs;
    RationalMatrix um(n, n), vm(n, n);
    std::vector<RationalMatrix> ranks;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> u(n), v(n);
      for (std::size_t r = 0; r < n; ++r) {
        u[r] = Rational(rng.integer_in(-3, 3));
        v[r] = Rational(rng.integer_in(-3, 3));
        um(r, k) = u[r];
        vm(r, k) = v[r];
      }
      ranks.push_back(outer(u, v));
    }
    p4 = p4 && mixed_discriminant(ranks) == determinant(um) * determinant(vm);
  }
  const json detail{{"n", n}, {"trials", trials}};
  c.add("Mixed discriminant property 1 (linearity)", "random 3x3", p1, detail);
  c.add("Mixed discriminant property 2 (symmetry)", "random 3x3", p2, detail);
  c.add("Mixed discriminant property 3 (det(Y) factor)", "random 3x3", p3, detail);
  c.add("Mixed discriminant property 4 (rank one)", "random 3x3", p4, detail);

  for (std::size_t k = 1; k <= 3; ++k) {
    bool ok = true;
    json ratios = json::array();
    for (int i = 0; i < 3; ++i) {
      const auto a = random_slots(rng, k);
      const auto b = random_slots(rng, k);
      const MixedDiscriminantCheck r = mixed_discriminant_identity_check(a, b, c.budget());
      ok = ok && r.pass;
      ratios.push_back(r.ratio ? r.ratio->str() : "undefined");
    }
    c.add("Theorem mixed discriminant form of Global", "n=" + std::to_string(k), ok, json{{"ratios", ratios}});
  }

  // Product and sum minor expansions.
  bool mult = true, add = true;
  const int minor_cases = 50;
  for (int i = 0; i < minor_cases; ++i) {
    const std::size_t sz = 1 + rng.below(4);
    const std::size_t inner = 1 + rng.below(4);
    const std::size_t k = rng.below(sz + 1);
    const auto pick = [&](std::size_t ambient) {
      std::vector<std::size_t> idx(ambient);
      std::iota(idx.begin(), idx.end(), 1);
      for (std::size_t j = ambient; j > 1; --j) std::swap(idx[j - 1], idx[rng.below(j)]);
      idx.resize(k);
      std::sort(idx.begin(), idx.end());
      return IndexSet(ambient, idx);
    };
    const PolyMatrix a(instances::integer_matrix(rng, sz, inner), 1);
    const PolyMatrix b(instances::integer_matrix(rng, inner, sz), 1);
    const IndexSet s = pick(sz), t = pick(sz);
    mult = mult && minor_of_product(a, b, s, t) == minor(a * b, s, t);
    const PolyMatrix e(instances::integer_matrix(rng, sz, sz), 1);
    const PolyMatrix f(instances::integer_matrix(rng, sz, sz), 1);
    add = add && minor_of_sum(e, f, s, t) == minor(e + f, s, t);
  }
  c.add("Minor of a product (Cauchy-Binet)", "50 random up to 4x4", mult, json{{"instances", minor_cases}});
  c.add("Minor of a sum", "50 random up to 4x4", add, json{{"instances", minor_cases}});
}

// --- convolutions -------------------------------------------------------------

MultiPoly from_roots(const std::vector<Rational>& roots) {
  MultiPoly p(1, Rational(1));
  for (const auto& r : roots) p *= MultiPoly::variable(1, 0) - MultiPoly(1, r);
  return p;
}

void suite_convolutions(Context& c) {
  Rng& rng = c.rng;
  const MultiPoly p2 = parse_univariate("x^2-1");
  const RationalMatrix d2 = RationalMatrix::diagonal({1, -1});
  {
    const MultiPoly formula = boxplus(p2, p2);
    const MultiPoly oracle = boxplus_oracle(d2, d2, c.budget());
    c.add("Additive convolution", "(x^2-1) boxplus (x^2-1) = x^2-2",
          formula == parse_univariate("x^2-2") && oracle == formula, poly_pair(formula, oracle));
  }
  {
    const MultiPoly formula = boxtimes(p2, p2);
    const MultiPoly oracle = boxtimes_oracle(d2, d2, c.budget());
    c.add("Multiplicative convolution", "(x^2-1) boxtimes (x^2-1) = x^2+1",
          formula == parse_univariate("x^2+1") && oracle == formula, poly_pair(formula, oracle));
  }
  for (int i = 0; i < 3; ++i) {
    const auto roots = instances::integer_roots(rng, 3);
    const MultiPoly p = from_roots(roots);
    const MultiPoly zero = parse_univariate("x^3");
    const MultiPoly one = parse_univariate("x^3 - 3x^2 + 3x - 1");
    const bool ok = boxplus(p, zero) == p && boxtimes(p, one) == p && boxtimes(p, zero) == zero;
    c.add("Convolution identity laws", "cubic " + std::to_string(i), ok, json{{"p", p.str()}});
  }
  for (int i = 0; i < 3; ++i) {
    const auto ra = instances::integer_roots(rng, 3);
    const auto rb = instances::integer_roots(rng, 3);
    const MultiPoly p = from_roots(ra), q = from_roots(rb);
    const RationalMatrix da = RationalMatrix::diagonal(ra), db = RationalMatrix::diagonal(rb);
    const MultiPoly plus = boxplus(p, q);
    const MultiPoly times = boxtimes(p, q);
    const bool ok = plus == boxplus(p, q, da, db) && plus == boxplus_oracle(da, db, c.budget()) &&
                    plus == boxplus(q, p) && times == boxtimes(p, q, da, db) &&
                    times == boxtimes_oracle(da, db, c.budget()) && times == boxtimes(q, p);
    c.add("Convolutions are realization independent", "rational-rooted cubics " + std::to_string(i), ok,
          json{{"boxplus", plus.str()}, {"boxtimes", times.str()}});
  }
  for (int i = 0; i < 3; ++i) {
    const Rational a(rng.integer_in(-3, 3)), b(rng.integer_in(-3, 3));
    const RationalMatrix ma{{a}}, mb{{b}};
    const MultiPoly formula = rect_boxplus(ma, mb);
    const MultiPoly want = MultiPoly::variable(1, 0) - MultiPoly(1, a * a + b * b);
    const MultiPoly oracle = rect_boxplus_oracle(ma, mb, c.budget());
    c.add("Rectangular additive convolution", "d=1 n=0 x-(a^2+b^2)", formula == want && oracle == want,
          poly_pair(formula, oracle));
  }
  for (std::size_t d = 1; d <= 2; ++d)
    for (std::size_t extra = 0; extra <= 1; ++extra) {
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        const RationalMatrix a = instances::integer_matrix(rng, d, d + extra);
        const RationalMatrix b = instances::integer_matrix(rng, d, d + extra);
        ok = ok && rect_boxplus(a, b) == rect_boxplus_oracle(a, b, c.budget());
      }
      c.add("Rectangular additive convolution", dims("d", d, "n", extra) + " formula vs oracle", ok);
    }
  for (std::size_t d = 1; d <= 2; ++d) {
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const RationalMatrix h1 = instances::integer_matrix(rng, d, d), k1 = instances::integer_matrix(rng, d, d);
      const RationalMatrix h2 = instances::integer_matrix(rng, d, d), k2 = instances::integer_matrix(rng, d, d);
      ok = ok && nonhermitian_mult(h1, k1, h2, k2) == nonhermitian_oracle(h1, k1, h2, k2, c.budget());
    }
    c.add("Non-Hermitian multiplicative convolution", "d=" + std::to_string(d) + " substitution vs oracle", ok);
  }
}

// --- gsvd ----------------------------------------------------------------------

void suite_gsvd(Context& c) {
  Rng& rng = c.rng;
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t s = 1; s <= 2; ++s)
      for (std::size_t t = 1; t <= 2; ++t) {
        const std::string label = "m=" + std::to_string(m) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
        bool theorem = true, corollary = true;
        json grids = json::array();
        for (int i = 0; i < 5; ++i) {
          const GsvcpInstance mi = instances::gsvcp(rng, m, s, t);
          const GsvcpInstance ni = instances::gsvcp(rng, m, s, t);
          const GsvcpCoeffs p = extract_gsvcp_coeffs(gsvcp(mi), m, s, t);
          const GsvcpCoeffs q = extract_gsvcp_coeffs(gsvcp(ni), m, s, t);
          const GsvcpCoeffs formula = gsvd_convolve(p, q);
          const GsvcpCoeffs oracle = gsvd_expectation_oracle(mi, ni, c.budget());
          theorem = theorem && formula == oracle;
          const PolyIdentityCheck op = gsvd_operator_check(p, q);
          corollary = corollary && op.pass && op.rhs == reciprocal_form(oracle);
          grids.push_back(io::to_json(oracle)["grid"]);
        }
        c.add("Theorem GSVD convolution", label, theorem, json{{"instances", 5}, {"oracle_grids", grids}});
        c.add("Corollary GSVD operator form", label, corollary, json{{"instances", 5}});
      }
  for (std::size_t m = 1; m <= 3; ++m) {
    bool ok = true;
    int degenerate = 0;
    int done = 0;
    while (done < 3) {
      const GsvcpInstance inst = instances::gsvcp(rng, m, m, m);
      const RationalMatrix w1 = inst.a1.transpose() * inst.a1;
      const RationalMatrix w2 = inst.a2.transpose() * inst.a2;
      try {
        ok = ok && gsvd_charpoly_identity_check(w1, w2).pass;
        ++done;
      } catch (const DegenerateInput&) {
        ++degenerate;
        if (degenerate > 100) break;
      }
    }
    c.add("GSVD characteristic polynomial similarity", "m=" + std::to_string(m), ok && done == 3,
          json{{"instances", done}, {"degenerate_skipped", degenerate}});
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const std::size_t s = 1 + rng.below(3), t = 1 + rng.below(3);
      ok = ok && block_determinant_identity_check(instances::gsvcp(rng, m, s, t)).pass;
    }
    c.add("GSVD block determinant identity", "m=" + std::to_string(m), ok, json{{"instances", 3}});
  }
}

// --- permanent -----------------------------------------------------------------

void suite_permanent(Context& c) {
  Rng& rng = c.rng;
  bool ok = true, bound = true;
  json values = json::array();
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + rng.below(7);
    const std::size_t k = 1 + rng.below(3);
    const RankDecomposition dec = instances::rank_decomposition(rng, n, k);
    const Rational low = lowrank_permanent(dec);
    const Rational ry = ryser_permanent(reconstruct(dec), c.config.worker_count);
    ok = ok && low == ry;
    bound = bound && BigInt(static_cast<unsigned long>(diagonal_pencil_det(dec.a, n).term_count())) <=
                         term_count_report(n, k);
    values.push_back(json{{"n", n}, {"k", k}, {"permanent", low.str()}});
  }
  c.add("Low-rank permanent algorithm", "20 random n<=7 k<=3", ok, json{{"instances", values}});
  c.add("Low-rank permanent term count bound", "20 random n<=7 k<=3", bound);
  RankDecomposition dec;
  dec.n = 2;
  dec.a = {{1, 2}};
  dec.b = {{3, 4}};
  const Rational v = lowrank_permanent(dec);
  c.add("Low-rank permanent algorithm", "a=(1,2) b=(3,4) gives 48", v == Rational(48), json{{"value", v.str()}});
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.exhaustive_cap == 0) throw InputError("--cap must be positive");
  if (config.sample_count == 0) throw InputError("--samples must be positive");
  if (config.worker_count == 0) throw InputError("--workers must be positive");
  if (config.output_format != "json" && config.output_format != "text") {
    throw InputError("--format must be json or text");
  }
}

Fault parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::None;
  if (name == "local-l2") return Fault::LocalL2;
  throw InputError("unknown fault '" + name + "'");
}

bool VerifyReport::pass() const { return first_failure() == nullptr; }

const VerifyItem* VerifyReport::first_failure() const {
  for (const auto& item : items)
    if (!item.pass) return &item;
  return nullptr;
}

const std::vector<std::string>& verify_suites() { return kSuites; }

VerifyReport run_verify(const std::string& suite, const RunConfig& config, Fault fault) {
  validate(config);
  std::vector<std::string> selected;
  if (suite == "all") {
    selected = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end()) {
    selected = {suite};
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }
  VerifyReport report;
  report.suite = suite;
  report.seed = config.seed;
  for (const auto& name : selected) {
    Context c{config, fault, report, name, suite_rng(config, name)};
    if (name == "minor-orth") suite_minor_orth(c);
    else if (name == "local") suite_local(c);
    else if (name == "global") suite_global(c);
    else if (name == "mixed-disc") suite_mixed_disc(c);
    else if (name == "convolutions") suite_convolutions(c);
    else if (name == "gsvd") suite_gsvd(c);
    else if (name == "permanent") suite_permanent(c);
  }
  return report;
}

io::json to_json(const VerifyReport& report) {
  json items = json::array();
  for (const auto& item : report.items) {
    items.push_back(json{{"suite", item.suite},
                         {"anchor", item.anchor},
                         {"case", item.label},
                         {"pass", item.pass},
                         {"detail", item.detail}});
  }
  json out{{"suite", report.suite}, {"seed", report.seed}, {"pass", report.pass()}, {"items", items}};
  if (const VerifyItem* f = report.first_failure()) out["first_failure"] = f->anchor + ", " + f->label;
  return out;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& item : report.items) {
    out << (item.pass ? "PASS " : "FAIL ") << '[' << item.suite << "] " << item.anchor << ", " << item.label << '\n';
  }
  const auto passed = std::count_if(report.items.begin(), report.items.end(), [](const auto& i) { return i.pass; });
  out << passed << '/' << report.items.size() << " checks passed (suite " << report.suite << ", seed " << report.seed
      << ")\n";
  return out.str();
}

}  // namespace detconv
