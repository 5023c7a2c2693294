#include "cli.hpp"

#include "cartanweil/sampling.hpp"
#include "cartanweil/string_universal.hpp"
#include "cartanweil/weil.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace cw::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LieAlgebraData load_algebra(const std::string& spec) {
  if (spec.empty()) throw UsageError("--algebra is required");
  try {
    if (std::filesystem::is_regular_file(spec)) {
      std::ifstream in(spec);
      std::stringstream text;
      text << in.rdbuf();
      return parse_algebra_json(text.str());
    }
    return builtin_algebra(spec);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot load algebra: ") + e.what());
  }
}

void require_valid(const LieAlgebraData& data) {
  for (const auto& c : validate_algebra(data).checks)
    if (!c.pass) throw UsageError("algebra fails " + c.axiom + ": " + c.detail);
}

InvariantPolynomial load_polynomial(const LieAlgebraData& data, const std::string& spec) {
  try {
    if (spec == "metric") return metric_polynomial(data);
    if (spec == "metric-normalized")
      return metric_polynomial(data).scaled(Scale{make_rational(-1, 8), 2}, "metric-normalized");
    if (spec == "cubic") {
      if (data.dim() != 8) throw UsageError("the cubic polynomial is defined for su3 only");
      return su3_cubic_polynomial(data);
    }
    if (spec.rfind("sym_power:", 0) == 0) {
      const std::string digits = spec.substr(10);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad degree in '" + spec + "'");
      return sym_power_polynomial(data, std::stoi(digits));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("cannot build polynomial '" + spec + "': " + e.what());
  }
  throw UsageError("unknown polynomial '" + spec + "' (expected metric, metric-normalized, sym_power:k, cubic)");
}

OracleOptions oracle_options(const CliConfig& c) { return OracleOptions{c.samples, c.seed}; }

// ---------------------------------------------------------------------------
// Presentation

bool is_metric(const InvariantPolynomial& p) { return p.label().rfind("metric", 0) == 0 && p.degree() == 2; }

/// "c " for a coefficient times π^{−m}, empty for 1 and "-" for −1.
std::string coefficient(const Rational& c, unsigned pi_power, bool latex) {
  std::string out;
  if (pi_power == 0 && c == 1) return "";
  if (pi_power == 0 && c == -1) return "-";
  if (latex) {
    const auto num = numerator(c), den = denominator(c);
    out = den == 1 ? num.str() : (num < 0 ? "-" : "") + std::string("\\frac{") + abs(num).str() + "}{" + den.str() + "}";
    if (pi_power) out += " \\pi^{-" + std::to_string(pi_power) + "}";
  } else {
    out = to_string(c);
    if (pi_power) out += " π^-" + std::to_string(pi_power);
  }
  return out + " ";
}

std::string to_latex_symbols(std::string s) {
  const std::pair<const char*, const char*> table[] = {
      {"⟨", "\\langle "}, {"⟩", " \\rangle"}, {"Θ̂", "\\hat{\\Theta}"}, {"Θ", "\\Theta"},  {"χ", "\\chi"},
      {"Ā", "\\bar{A}"},  {"α", "\\alpha"},   {"½", "\\tfrac{1}{2}"}, {"²", "^2"},        {"∫_0^1", "\\int_0^1"},
      {"1/6", "\\tfrac{1}{6}"}};
  for (const auto& [from, to] : table) {
    const std::string f(from);
    for (std::size_t at = s.find(f); at != std::string::npos; at = s.find(f, at + std::string(to).size()))
      s.replace(at, f.size(), to);
  }
  return s;
}

std::string slots(const std::string& first, const std::string& rest, int k) {
  std::string out = first;
  for (int i = 1; i < k; ++i) out += "," + rest;
  return out;
}

/// Closed symbolic description of the computed form.
std::string symbolic(const std::string& kind, const InvariantPolynomial& p, bool latex) {
  const int k = p.degree();
  const Rational s = p.scale().coefficient;
  const unsigned pi = p.scale().pi_inv_power;
  std::string body;
  std::string c;
  if (kind == "transgress" || kind == "based") {
    c = coefficient(transgression_coefficient(k) * s, pi, latex);
    body = is_metric(p) ? "⟨Θ,[Θ,Θ]⟩" : "p(" + slots("Θ", "[Θ,Θ]", k) + ")";
  } else if (is_metric(p)) {
    const std::string cubic = kind == "equivariant" ? "⟨Θ,[Θ,Θ]⟩" : "⟨[Θ̂,Θ̂],Θ̂⟩";
    if (s < 0) {
      c = coefficient(-s, pi, latex);
      body = "(1/6 " + cubic + " - ⟨χ,Θ+Θ̂⟩)";
    } else {
      c = coefficient(s, pi, latex);
      body = "(-1/6 " + cubic + " + ⟨χ,Θ+Θ̂⟩)";
    }
  } else {
    c = coefficient(s * Rational(k), pi, latex);
    const std::string e = "^" + std::to_string(k - 1);
    body = kind == "equivariant" ? "∫_0^1 p(Θ, (½(t²-t)[Θ,Θ] + (1-t)χ + tĀχ)" + e + ") dt"
                                 : "∫_0^1 p(Θ̂, (½(α²-α)[Θ̂,Θ̂] + α(Aχ-χ) + χ)" + e + ") dα";
  }
  return latex ? to_latex_symbols(c + body) : c + body;
}

/// A = I for abelian algebras, the Θ̂ presentation where it applies.
GradedElement present(const LieAlgebraData& data, const GradedElement& x, const OracleOptions& options) {
  if (data.is_abelian()) return at_identity(x);
  try {
    if (auto r = rewrite_adjoint_pairings(data, x, options)) return *r;
  } catch (const UnsupportedAlgebra&) {
  }
  return x;
}

json report_object(const Report& r) { return json::parse(to_json(r)); }

void emit(std::ostream& out, const CliConfig& c, const json& doc, const std::string& header,
          const std::vector<std::pair<std::string, std::string>>& lines) {
  if (c.format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  out << header << "\n";
  for (const auto& [key, value] : lines) out << key << ": " << value << "\n";
}

std::string render(const CliConfig& c, const GradedElement& x) {
  return c.format == "latex" ? to_latex(x) : to_text(x);
}

std::string verdict_line(const Report& r) {
  std::string line = r.pass ? "PASS" : "FAIL";
  if (!r.detail.empty()) line += " (" + r.detail + ")";
  if (r.witness) line += " witness " + *r.witness;
  return line;
}

using clock = std::chrono::steady_clock;

double elapsed_ms(clock::time_point start) {
  return std::chrono::duration<double, std::milli>(clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// transgress

int cmd_transgress(const CliConfig& c, bool equivariant, const std::string& method, std::ostream& out) {
  const auto data = load_algebra(c.algebra);
  require_valid(data);
  const auto p = load_polynomial(data, c.polynomial);
  const auto start = clock::now();
  const auto m = method == "closed" ? TransgressionMethod::closed_formula : TransgressionMethod::integral;
  TransgressionResult r = equivariant ? equivariant_transgress(data, p, m)
                                      : (m == TransgressionMethod::integral ? transgress_integral(data, p)
                                                                            : transgress_closed(data, p));
  const auto form = present(data, r.form.element, oracle_options(c));
  const bool latex = c.format == "latex";
  const std::string kind = equivariant ? "equivariant" : "transgress";

  json doc;
  doc["command"] = "transgress";
  doc["algebra"] = data.name();
  doc["polynomial"] = p.label();
  doc["degree"] = p.degree();
  doc["equivariant"] = equivariant;
  doc["method"] = method;
  doc["symbolic"] = symbolic(kind, p, false);
  doc["form"] = json::parse(to_json(form));
  doc["text"] = to_text(form);
  if (c.timing) doc["runtime_ms"] = elapsed_ms(start);
  emit(out, c, doc,
       std::string(equivariant ? "equivariant transgression" : "transgression") + " of " + p.label() + " on " +
           data.name() + " (k=" + std::to_string(p.degree()) + ")",
       {{"symbolic", symbolic(kind, p, latex)}, {"form", render(c, form)}});
  return ExitCode::pass;
}

// ---------------------------------------------------------------------------
// string-universal

int cmd_string_universal(const CliConfig& c, bool based, const std::string& variant, const std::string& path,
                         std::ostream& out) {
  const auto data = load_algebra(c.algebra);
  require_valid(data);
  const auto p = load_polynomial(data, c.polynomial);
  const auto options = oracle_options(c);
  const bool latex = c.format == "latex";
  const auto start = clock::now();
  json doc;
  doc["command"] = "string-universal";
  doc["algebra"] = data.name();
  doc["polynomial"] = p.label();
  doc["degree"] = p.degree();

  if (based) {
    const auto b = based_string_class(data, p, options);
    const auto form = b.theta_form ? *b.theta_form : b.hat_form;
    Report r{"based_class_equals_transgression", data.name(), p.label(), false, "", {}, {}};
    r.pass = b.theta_form && *b.theta_form == transgress_integral(data, p).form.element;
    r.detail = b.theta_form ? "exact term comparison" : "Θ̂ → Θ rename not certified";
    if (c.timing) r.runtime_ms = elapsed_ms(start);
    doc["based"] = true;
    doc["symbolic"] = symbolic("based", p, false);
    doc["form"] = json::parse(to_json(form));
    doc["text"] = to_text(form);
    doc["comparison"] = report_object(r);
    emit(out, c, doc, "based universal string class of " + p.label() + " on " + data.name(),
         {{"symbolic", symbolic("based", p, latex)}, {"form", render(c, form)}, {r.claim, verdict_line(r)}});
    return r.pass ? ExitCode::pass : ExitCode::fail;
  }

  UniversalStringOptions us_options;
  us_options.variant = parse_variant(variant);
  us_options.path = path == "full" ? MqPath::full : path == "structured" ? MqPath::structured : MqPath::automatic;
  us_options.oracle = options;
  doc["based"] = false;
  doc["variant"] = variant_name(us_options.variant);
  Report r{"string_class_equals_equivariant_transgression", data.name(), p.label(), false, "", {}, {}};
  std::vector<std::pair<std::string, std::string>> lines;
  try {
    const auto us = universal_string_class(data, p, us_options);
    const auto form = present(data, us.form.element, options);
    r = verify_string_equals_transgression(data, p, us_options);
    doc["path"] = us.path == MqPath::full ? "full" : "structured";
    doc["symbolic"] = symbolic("string", p, false);
    doc["form"] = json::parse(to_json(form));
    doc["text"] = to_text(form);
    lines = {{"path", doc["path"].get<std::string>()},
             {"symbolic", symbolic("string", p, latex)},
             {"form", render(c, form)}};
  } catch (const NotBasic& e) {
    r = verify_string_equals_transgression(data, p, us_options);
    if (r.pass) throw InvariantViolation("universal class failed basicness but the comparison passed");
  }
  if (c.timing) r.runtime_ms = elapsed_ms(start);
  doc["comparison"] = report_object(r);
  lines.emplace_back(r.claim, verdict_line(r));
  emit(out, c, doc,
       "universal string class of " + p.label() + " on " + data.name() + " (k=" + std::to_string(p.degree()) +
           ", variant=" + variant_name(us_options.variant) + ")",
       lines);
  return r.pass ? ExitCode::pass : ExitCode::fail;
}

// ---------------------------------------------------------------------------
// verify

class Suite {
 public:
  Suite(const CliConfig& c, const LieAlgebraData& data, std::string polynomial)
      : c_(c), data_(data), polynomial_(std::move(polynomial)) {}

  /// Runs one check; `body` fills pass, detail and witness.
  void check(const std::string& claim, const std::function<void(Report&)>& body) {
    Report r{claim, data_.name(), polynomial_, true, "", {}, {}};
    const auto start = clock::now();
    body(r);
    if (c_.timing) r.runtime_ms = elapsed_ms(start);
    reports_.push_back(std::move(r));
  }
  void add(Report r) {
    if (!c_.timing) r.runtime_ms.reset();
    reports_.push_back(std::move(r));
  }
  std::vector<Report>& reports() { return reports_; }

 private:
  const CliConfig& c_;
  const LieAlgebraData& data_;
  std::string polynomial_;
  std::vector<Report> reports_;
};

std::string element_witness(int sample, const GradedElement& x) {
  json w;
  w["sample"] = sample;
  w["element"] = json::parse(to_json(x));
  return w.dump();
}

/// Runs `pred` on `count` random elements; the first failure becomes the witness.
void for_samples(Report& r, int count, const std::function<GradedElement(int)>& make,
                 const std::function<bool(const GradedElement&, int)>& pred) {
  for (int s = 0; s < count; ++s) {
    const auto x = make(s);
    if (!pred(x, s)) {
      r.pass = false;
      r.detail = "failed on sample " + std::to_string(s + 1) + " of " + std::to_string(count);
      r.witness = element_witness(s, x);
      return;
    }
  }
  r.detail = std::to_string(count) + " random elements";
}

void oracle_report(Report& r, const OracleVerdict& v) {
  r.pass = v.equal;
  r.detail = v.samples == 0 ? "exact" : "samples=" + std::to_string(v.samples) + ", seed=" + std::to_string(v.seed);
  if (v.witness) r.witness = v.witness->to_json();
}

bool can_sample(const LieAlgebraData& data) { return data.is_abelian() || !data.rotations().empty(); }

void suite_algebra(Suite& s, const LieAlgebraData& data, const CliConfig& c) {
  const auto v = validate_algebra(data);
  for (const auto& check : v.checks)
    s.check("algebra_" + check.axiom, [&](Report& r) {
      r.pass = check.pass;
      r.detail = check.detail;
      if (!check.pass) r.witness = json{{"axiom", check.axiom}, {"detail", check.detail}}.dump();
    });
  if (!v.passed()) return;
  s.check("algebra_polynomial_invariant", [&](Report& r) {
    try {
      r.detail = "degree " + std::to_string(load_polynomial(data, c.polynomial).degree());
    } catch (const UsageError& e) {
      r.pass = false;
      r.detail = e.what();
    }
  });
}

void suite_weil(Suite& s, const LieAlgebraData& data, const InvariantPolynomial& p, const CliConfig& c) {
  const int n = data.dim();
  const WeilComplex w(data);
  const GFormComplex f(data);
  std::mt19937_64 rng(c.seed);
  const auto wpool = weil_pool(n);
  const auto fpool = form_pool(n);
  auto weil_element = [&](int) { return random_element(rng, wpool, 6, 4); };
  auto form_element = [&](int) { return random_element(rng, fpool, 3, 3); };
  auto index = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  s.check("weil_d_squared", [&](Report& r) {
    for_samples(r, c.elements, weil_element,
                [&](const GradedElement& x, int) { return apply_derivation(w.d(), apply_derivation(w.d(), x)).is_zero(); });
  });
  s.check("weil_lie_equals_rule", [&](Report& r) {
    for_samples(r, c.elements, weil_element, [&](const GradedElement& x, int) {
      const int i = index();
      return w.lie(i, x) == apply_derivation(w.lie_rule(i), x);
    });
  });
  s.check("weil_iota_anticommute", [&](Report& r) {
    for_samples(r, c.elements, weil_element, [&](const GradedElement& x, int) {
      const int i = index(), j = index();
      return (apply_derivation(w.iota(i), apply_derivation(w.iota(j), x)) +
              apply_derivation(w.iota(j), apply_derivation(w.iota(i), x)))
          .is_zero();
    });
  });
  s.check("weil_chern_weil_basic_closed", [&](Report& r) {
    const auto x = chern_weil_element(p);
    r.pass = is_basic(w, x) && apply_derivation(w.d(), x).is_zero();
    r.detail = "degree " + std::to_string(p.degree());
  });
  s.check("forms_d_squared", [&](Report& r) {
    for_samples(r, c.elements, form_element, [&](const GradedElement& x, int) {
      return apply_derivation(f.d(), apply_derivation(f.d(), x)).is_zero() &&
             apply_derivation(f.iota_chi(), apply_derivation(f.iota_chi(), x)).is_zero();
    });
  });
  if (!can_sample(data)) return;
  s.check("forms_magic_formula", [&](Report& r) {
    for_samples(r, c.elements, form_element, [&](const GradedElement& x, int sample) {
      const auto lhs = apply_derivation(f.d(), apply_derivation(f.iota_chi(), x)) +
                       apply_derivation(f.iota_chi(), apply_derivation(f.d(), x));
      Accumulator rhs;
      for (int i = 0; i < n; ++i) rhs.add_product(GradedElement(gen::chi(i)), apply_derivation(f.form_lie(i), x));
      const OracleOptions o{c.samples, c.seed + static_cast<std::uint64_t>(sample)};
      return equality_oracle(data, lhs, rhs.finish(), o).equal;
    });
  });
}

void suite_mq(Suite& s, const LieAlgebraData& data, const CliConfig& c) {
  const int n = data.dim();
  const TensorComplex tc(data);
  std::mt19937_64 rng(c.seed);
  const auto tpool = tensor_pool(n);
  auto tensor_element = [&](int) { return random_element(rng, tpool, 4, 4); };
  s.check("mq_total_d_squared", [&](Report& r) {
    for_samples(r, c.elements, tensor_element, [&](const GradedElement& x, int) {
      return apply_derivation(tc.total_d(), apply_derivation(tc.total_d(), x)).is_zero();
    });
  });
  s.check("mq_phi_inverse", [&](Report& r) {
    for_samples(r, c.elements, tensor_element, [&](const GradedElement& x, int) {
      return mq_phi(tc, mq_phi_inverse(tc, x)) == x && mq_phi_inverse(tc, mq_phi(tc, x)) == x;
    });
  });
  s.check("mq_gamma_nilpotent", [&](Report& r) {
    for_samples(r, c.elements, tensor_element, [&](const GradedElement& x, int) {
      GradedElement y = x;
      for (int m = 0; m <= n; ++m) y = apply_derivation(tc.gamma(), y);
      return y.is_zero();
    });
  });
  if (!can_sample(data)) return;
  const auto blocks = basic_blocks(data, n <= 3);
  std::vector<GradedElement> basic;
  for (int i = 0; i < c.elements; ++i) basic.push_back(random_basic(rng, blocks));
  auto basic_element = [&](int i) { return basic[static_cast<std::size_t>(i)]; };
  s.check("mq_phi_of_basic_is_theta_free", [&](Report& r) {
    for_samples(r, c.elements, basic_element, [&](const GradedElement& x, int sample) {
      const OracleOptions o{c.samples, c.seed + static_cast<std::uint64_t>(sample)};
      if (!is_basic_tensor(tc, x, o).basic) return false;
      const auto phx = mq_phi(tc, x);
      return !uses_kind(phx, Kind::WeilTheta) && rename_mu_to_chi(phx) == mq_project(tc, x, o).element;
    });
  });
  s.check("mq_chain_map", [&](Report& r) {
    for_samples(r, c.elements, basic_element, [&](const GradedElement& x, int sample) {
      const auto lhs = mq_phi(tc, apply_derivation(tc.total_d(), x));
      const auto rhs = apply_derivation(tc.cartan_d(), mq_phi(tc, x));
      const OracleOptions o{c.samples, c.seed + static_cast<std::uint64_t>(sample)};
      return tensor_equality_oracle(data, lhs, rhs, o).equal;
    });
  });
}

void suite_transgression(Suite& s, const LieAlgebraData& data, const InvariantPolynomial& p, const CliConfig& c) {
  const auto tau = transgress_integral(data, p).form.element;
  const auto tg = equivariant_transgress(data, p).form.element;
  s.check("transgression_integral_equals_closed", [&](Report& r) {
    r.pass = tau == transgress_closed(data, p).form.element;
    r.detail = "exact, k=" + std::to_string(p.degree());
  });
  s.check("transgression_closed", [&](Report& r) {
    r.pass = check_closed(data, tau);
    r.detail = "exact";
  });
  s.check("equivariant_transgression_methods_agree", [&](Report& r) {
    r.pass = tg == equivariant_transgress(data, p, TransgressionMethod::closed_formula).form.element;
    r.detail = "exact";
  });
  s.check("equivariant_transgression_specializes", [&](Report& r) {
    const auto chi_free = substitute(tg, [](const Generator& y) -> std::optional<GradedElement> {
      if (y.kind == Kind::Chi) return GradedElement();
      return std::nullopt;
    });
    r.pass = chi_free == tau;
    r.detail = "chi = 0, exact";
  });
  if (!can_sample(data)) return;
  s.check("equivariant_transgression_closed",
          [&](Report& r) { oracle_report(r, check_equivariantly_closed(data, tg, oracle_options(c))); });
  s.check("equivariant_transgression_invariant",
          [&](Report& r) { oracle_report(r, check_invariant(data, tg, oracle_options(c))); });
}

void suite_string(Suite& s, const LieAlgebraData& data, const InvariantPolynomial& p, const CliConfig& c) {
  if (!can_sample(data)) return;
  s.check("based_class_equals_transgression", [&](Report& r) {
    const auto b = based_string_class(data, p, oracle_options(c));
    r.pass = b.theta_form && *b.theta_form == transgress_integral(data, p).form.element;
    r.detail = "exact";
  });
  UniversalStringOptions o;
  o.oracle = oracle_options(c);
  auto timed = [&](const std::function<Report()>& f) {
    const auto start = clock::now();
    auto r = f();
    r.runtime_ms = elapsed_ms(start);
    s.add(std::move(r));
  };
  timed([&] { return verify_string_equals_transgression(data, p, o); });
  const auto start = clock::now();
  auto t15 = verify_universal_class_consistency(data, p, o);
  const double ms = elapsed_ms(start);
  for (auto& r : t15) {
    r.runtime_ms = ms;
    s.add(std::move(r));
  }
  if (p.degree() <= 2 && data.dim() <= 3) timed([&] { return verify_string_form_closed(data, p, o); });
}

int cmd_verify(const CliConfig& c, const std::string& suite, std::ostream& out) {
  const auto data = load_algebra(c.algebra);
  const bool all = suite == "all";
  Suite s(c, data, c.polynomial);
  if (all || suite == "algebra") suite_algebra(s, data, c);
  const bool valid = validate_algebra(data).passed();
  if (!valid && suite != "algebra") {
    if (!all) suite_algebra(s, data, c);
  } else if (suite != "algebra") {
    const auto p = load_polynomial(data, c.polynomial);
    if (all || suite == "weil") suite_weil(s, data, p, c);
    if (all || suite == "mq") suite_mq(s, data, c);
    if (all || suite == "transgression") suite_transgression(s, data, p, c);
    if (all || suite == "string") suite_string(s, data, p, c);
  }
  auto& reports = s.reports();
  std::stable_sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) { return a.claim < b.claim; });
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  if (c.format == "json") {
    out << to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) out << r.claim << ": " << verdict_line(r) << "\n";
    out << (ok ? "all checks passed" : "verification failed") << "\n";
  }
  return ok ? ExitCode::pass : ExitCode::fail;
}

void add_common(CLI::App* sub, CliConfig& c) {
  sub->add_option("--algebra", c.algebra, "builtin name (su2, su3, abelian:n) or JSON file")->required();
  sub->add_option("--poly", c.polynomial, "metric, metric-normalized, sym_power:k or cubic");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  sub->add_option("--seed", c.seed, "oracle seed (CARTANWEIL_SEED overrides)");
  sub->add_option("--samples", c.samples, "oracle sample points")->check(CLI::PositiveNumber);
  sub->add_flag("--timing", c.timing, "record runtime_ms");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact computations in the Weil algebra, the Cartan model and universal string classes",
               "cartanweil");
  app.require_subcommand(1);
  CliConfig c;

  auto* transgress = app.add_subcommand("transgress", "transgression form of an invariant polynomial");
  add_common(transgress, c);
  bool equivariant = false;
  std::string method = "integral";
  transgress->add_flag("--equivariant", equivariant, "equivariant extension in the Cartan model");
  transgress->add_option("--method", method, "integral or closed")->check(CLI::IsMember({"integral", "closed"}));

  auto* universal = app.add_subcommand("string-universal", "universal string class through Mathai-Quillen");
  add_common(universal, c);
  bool based = false;
  std::string variant = "adjoint";
  std::string path = "automatic";
  universal->add_flag("--based", based, "based loop group class");
  universal->add_option("--variant", variant, "adjoint or inverse_adjoint")
      ->check(CLI::IsMember({"adjoint", "inverse_adjoint", "inverse-adjoint"}));
  universal->add_option("--path", path, "automatic, full or structured")
      ->check(CLI::IsMember({"automatic", "full", "structured"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, c);
  std::string suite = "all";
  verify->add_option("--suite", suite, "algebra, weil, mq, transgression, string or all")
      ->check(CLI::IsMember({"algebra", "weil", "mq", "transgression", "string", "all"}));
  verify->add_option("--elements", c.elements, "random elements per property check")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::pass : ExitCode::usage;
  }

  try {
    if (const char* env = std::getenv("CARTANWEIL_SEED")) {
      const std::string text(env);
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("CARTANWEIL_SEED must be a non-negative integer");
      c.seed = std::stoull(text);
    }
    if (*transgress) return cmd_transgress(c, equivariant, method, out);
    if (*universal) return cmd_string_universal(c, based, variant, path, out);
    return cmd_verify(c, suite, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const UnsupportedAlgebra& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return ExitCode::internal;
  }
}

}  // namespace cw::cli
