#include "chromasum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "chromasum/error.hpp"
#include "chromasum/fourier.hpp"
#include "chromasum/io.hpp"
#include "chromasum/super_catalan.hpp"
#include "chromasum/verify.hpp"

namespace chromasum {

namespace {

using nlohmann::json;

// Bad flags or ranges; mapped to exit code 2.
struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldFlags {
  std::uint64_t p = 0;
  unsigned r = 1;
  std::string modulus;
  std::string field;
};

void add_field_flags(CLI::App* cmd, FieldFlags& flags) {
  cmd->add_option("--p", flags.p, "Characteristic (odd prime)");
  cmd->add_option("--r", flags.r, "Extension degree")->check(CLI::PositiveNumber);
  cmd->add_option("--modulus", flags.modulus, "Modulus coefficients, constant first, e.g. 1,1,0,-1");
  cmd->add_option("--field", flags.field, "Field as p=..,r=..,modulus=..")
      ->excludes(cmd->get_option("--p"))
      ->excludes(cmd->get_option("--modulus"));
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FlagError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw FlagError(std::string(what) + " is empty");
  return out;
}

FieldRef make_field(const FieldFlags& flags) {
  const std::uint64_t ceiling = q_ceiling_from_env();
  if (!flags.field.empty()) return field_parse(flags.field, ceiling);
  if (flags.p == 0) throw FlagError("a field is required: pass --p (and optionally --r, --modulus) or --field");
  std::optional<std::vector<std::int64_t>> modulus;
  if (!flags.modulus.empty()) modulus = parse_int_list(flags.modulus, "--modulus");
  return field_make(flags.p, flags.r, modulus, ceiling);
}

void add_format_flag(CLI::App* cmd, std::string& format, std::vector<std::string> choices) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(choices)));
}

json element_json(const FieldElement& a) {
  json j = element_to_json(a);
  j["text"] = a.to_string();
  return j;
}

// Plain grid writer shared by the table emitters.
void write_grid(std::ostream& out, const std::string& format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    return;
  }
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i >= width.size()) width.resize(i + 1, 0);
      width[i] = std::max(width[i], cells[i].size());
    }
  };
  widen(header);
  for (const auto& row : rows) widen(row);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string monomial_text(std::uint64_t k, std::uint64_t l) {
  if (k == 0 && l == 0) return "1";
  std::string s;
  if (k) s += "alpha^" + std::to_string(k);
  if (l) s += std::string(s.empty() ? "" : " ") + "beta^" + std::to_string(l);
  return s;
}

// ---- field ----------------------------------------------------------------

int cmd_field(const FieldFlags& flags, const std::string& format, std::ostream& out) {
  FieldRef f = make_field(flags);
  const int jac = jacobi_minus_one(*f);
  const FieldElement g = multiplicative_generator(f);
  if (format == "json") {
    json j = field_to_json(*f);
    j["jacobi_minus_one"] = jac;
    j["generator"] = element_json(g);
    j["circle_sizes"] = {{"blue", circle_size(Color::blue, *f)},
                         {"red", circle_size(Color::red, *f)},
                         {"green", circle_size(Color::green, *f)}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "field: F_" << f->q << " (" << field_to_string(*f) << ")\n";
  out << "(-1/q): " << jac << '\n';
  out << "generator: " << g.to_string() << '\n';
  for (Color c : kAllColors) out << "|S_" << color_name(c) << "|: " << circle_size(c, *f) << '\n';
  return 0;
}

// ---- circle ---------------------------------------------------------------

int cmd_circle(const FieldFlags& flags, const std::string& color_text, const std::string& method,
               const std::string& format, std::ostream& out) {
  const Color c = parse_color(color_text);
  FieldRef f = make_field(flags);
  const UnitCircle circle = method == "parametrize" ? circle_parametrize(c, f) : circle_enumerate(c, f);
  if (format == "json") {
    out << circle_to_json(circle).dump() << '\n';
    return 0;
  }
  out << "# " << color_name(c) << " unit circle over F_" << f->q << ", " << circle.size() << " points\n";
  for (const AffinePoint& point : circle.points) out << point.to_string() << '\n';
  return 0;
}

// ---- psi ------------------------------------------------------------------

struct PsiFlags {
  std::string color;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> l;
  std::string poly;
  std::string method = "auto";
  bool explain = false;
  std::string format = "text";
};

PsiMethod resolve(PsiMethod m, const FieldSpec& f, std::uint64_t k, std::uint64_t l) {
  if (m != PsiMethod::automatic) return m;
  return (k >= f.q || l >= f.q) ? PsiMethod::program : PsiMethod::closed;
}

std::string chain_text(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    s += (i ? " -> (" : "(") + std::to_string(chain[i].first) + "," + std::to_string(chain[i].second) + ")";
  }
  return s;
}

json chain_json(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& chain) {
  json arr = json::array();
  for (auto [a, b] : chain) arr.push_back({a, b});
  return arr;
}

// Explanation lines (text) and keys (json) for a monomial evaluation.
void explain_monomial(Color c, const FieldRef& f, std::uint64_t k, std::uint64_t l, PsiMethod m,
                      std::vector<std::string>& lines, json& j) {
  switch (m) {
    case PsiMethod::brute:
      lines.push_back("summed over " + std::to_string(circle_size(c, *f)) + " circle points");
      j["circle_size"] = circle_size(c, *f);
      return;
    case PsiMethod::closed:
      if (c == Color::green) {
        const bool hit = (k >= l ? k - l : l - k) % (f->q - 1) == 0;
        lines.push_back(std::string("(q-1) divides (k-l): ") + (hit ? "yes" : "no"));
        return;
      }
      if (auto ladder = ladder_evaluation(c, f, k, l)) {
        const LadderPlan& plan = ladder->plan;
        lines.push_back("ladder: w=" + std::to_string(plan.w) + " R=" + std::to_string(plan.R) +
                        " center=" + std::to_string(plan.center));
        json indices = json::array();
        json rungs = json::array();
        for (std::size_t i = 0; i < plan.indices.size(); ++i) {
          lines.push_back("  rung alpha^" + std::to_string(plan.indices[i]) + ": " + ladder->rungs[i].to_string());
          indices.push_back(plan.indices[i]);
          rungs.push_back(ladder->rungs[i].to_string());
        }
        lines.push_back("exact: " + ladder->exact.to_string());
        j["ladder"] = {{"w", plan.w}, {"R", plan.R}, {"center", plan.center}, {"indices", indices},
                       {"rungs", rungs}, {"exact", ladder->exact.to_string()}};
      } else {
        lines.push_back("odd exponent: value 0 by the reflection symmetry of the circle");
      }
      return;
    case PsiMethod::program: {
      if (c == Color::green) {
        const auto chain = periodicity_chain(k, l, f->q);
        lines.push_back("chain: " + chain_text(chain));
        lines.push_back("green closed form at (" + std::to_string(chain.back().first) + "," +
                        std::to_string(chain.back().second) + ")");
        j["chain"] = chain_json(chain);
        return;
      }
      if (k % 2 || l % 2) {
        lines.push_back("odd exponent: value 0 by the reflection symmetry of the circle");
        return;
      }
      const ProgramResult r = fourier_summation_program(c, f, k / 2, l / 2);
      lines.push_back("chain: " + chain_text(r.chain));
      lines.push_back("principal: m*=" + std::to_string(r.m_star) + " n*=" + std::to_string(r.n_star));
      lines.push_back("omega term: " + r.omega_term.to_string());
      lines.push_back("rung term: " + r.rung_term.to_string());
      lines.push_back("delta term: " + r.delta_term.to_string());
      j["chain"] = chain_json(r.chain);
      j["program"] = {{"m_star", r.m_star},
                      {"n_star", r.n_star},
                      {"omega_term", r.omega_term.to_string()},
                      {"rung_term", r.rung_term.to_string()},
                      {"delta_term", r.delta_term.to_string()}};
      return;
    }
    case PsiMethod::automatic: return;
  }
}

int cmd_psi(const FieldFlags& ff, const PsiFlags& flags, std::ostream& out) {
  const Color c = parse_color(flags.color);
  const PsiMethod requested = parse_method(flags.method);
  const bool monomial = flags.k.has_value() || flags.l.has_value();
  if (monomial == !flags.poly.empty()) throw FlagError("pass either --k and --l or --poly FILE");
  if (monomial && !(flags.k && flags.l)) throw FlagError("--k and --l go together");
  FieldRef f = make_field(ff);

  json j = {{"color", color_name(c)}, {"p", f->p}, {"r", f->r}, {"q", f->q}};
  std::vector<std::string> lines;
  FieldElement value = FieldElement::zero(f);
  std::string subject;

  if (monomial) {
    const std::uint64_t k = *flags.k;
    const std::uint64_t l = *flags.l;
    const PsiMethod m = resolve(requested, *f, k, l);
    value = psi_monomial(c, f, k, l, m);
    subject = monomial_text(k, l);
    j["k"] = k;
    j["l"] = l;
    j["method"] = method_name(m);
    if (flags.explain) explain_monomial(c, f, k, l, m, lines, j);
  } else {
    std::ifstream in(flags.poly);
    if (!in) throw FlagError("cannot read --poly file '" + flags.poly + "'");
    json grid;
    try {
      grid = json::parse(in);
    } catch (const json::exception& e) {
      throw MathError(Errc::ParseError, e.what());
    }
    const FieldPolynumber2 pi = polynumber2_from_json(grid, f);
    value = psi_general(c, f, pi, requested);
    subject = flags.poly;
    j["poly"] = polynumber2_to_json(pi);
    j["method"] = method_name(requested);
    if (flags.explain) {
      std::size_t terms = 0;
      pi.for_each_term([&](std::size_t, std::size_t, const FieldElement&) { ++terms; });
      lines.push_back("terms: " + std::to_string(terms));
      j["terms"] = terms;
    }
  }
  j["value"] = element_json(value);

  if (flags.format == "json") {
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "psi_" << color_name(c) << " over F_" << f->q << " of " << subject << '\n';
  out << "method: " << j["method"].get<std::string>() << '\n';
  for (const std::string& line : lines) out << line << '\n';
  out << "value: " << value.to_string() << '\n';
  return 0;
}

// ---- tables ---------------------------------------------------------------

struct TableFlags {
  std::string which;
  std::optional<std::uint64_t> max;
  std::string color = "blue";
  std::string format = "text";
};

int cmd_tables(const FieldFlags& ff, const TableFlags& flags, std::ostream& out) {
  static const std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> limits{
      {"super-catalan", {10, 200}}, {"omega", {8, 200}}, {"circular-polynumbers", {5, 64}}, {"psi-grid", {6, 1000}}};
  const auto [fallback, ceiling] = limits.at(flags.which);
  const std::uint64_t max = flags.max.value_or(fallback);
  if (max > ceiling) {
    throw FlagError("--max " + std::to_string(max) + " is out of range for " + flags.which + " (at most " +
                    std::to_string(ceiling) + ")");
  }

  if (flags.which == "circular-polynumbers") {
    if (flags.format == "json") {
      json arr = json::array();
      for (std::uint64_t d = 0; d <= max; ++d) {
        for (std::uint64_t k = 0; k <= d; ++k) {
          arr.push_back({{"k", k}, {"l", d - k}, {"coeffs", polynumber_to_json(circular_polynumber(k, d - k).body)}});
        }
      }
      out << arr.dump() << '\n';
      return 0;
    }
    if (flags.format == "csv") out << "k,l,coefficients\n";
    if (flags.format == "text") out << "# k l denominator : numerators of alpha^0 .. alpha^(k+l)\n";
    for (std::uint64_t d = 0; d <= max; ++d) {
      const BigInt den = BigInt(1) << d;
      for (std::uint64_t k = 0; k <= d; ++k) {
        const std::uint64_t l = d - k;
        const RationalPolynumber pi = circular_polynumber(k, l).body;
        if (flags.format == "csv") {
          out << k << ',' << l;
          for (std::uint64_t i = 0; i <= d; ++i) out << ',' << coefficient_at(pi, i).to_string();
        } else {
          out << k << ' ' << l << ' ' << to_decimal(den) << " :";
          for (std::uint64_t i = 0; i <= d; ++i) {
            const Rational c = coefficient_at(pi, i) * Rational(den);
            out << ' ' << to_decimal(c.numerator());
          }
        }
        out << '\n';
      }
    }
    return 0;
  }

  std::function<std::string(std::uint64_t, std::uint64_t)> cell;
  FieldRef f;
  Color c = Color::blue;
  if (flags.which == "super-catalan") {
    cell = [](std::uint64_t m, std::uint64_t n) { return to_decimal(super_catalan(m, n)); };
  } else if (flags.which == "omega") {
    cell = [](std::uint64_t m, std::uint64_t n) { return circular_super_catalan(m, n).to_string(); };
  } else {
    c = parse_color(flags.color);
    f = make_field(ff);
    cell = [&](std::uint64_t m, std::uint64_t n) { return psi_monomial(c, f, 2 * m, 2 * n).to_string(); };
  }

  std::vector<std::string> header{"m"};
  for (std::uint64_t n = 0; n <= max; ++n) header.push_back(std::to_string(n));
  std::vector<std::vector<std::string>> rows;
  for (std::uint64_t m = 0; m <= max; ++m) {
    std::vector<std::string> row{std::to_string(m)};
    for (std::uint64_t n = 0; n <= max; ++n) row.push_back(cell(m, n));
    rows.push_back(std::move(row));
  }
  if (flags.format == "json") {
    json grid = json::array();
    for (const auto& row : rows) grid.push_back(std::vector<std::string>(row.begin() + 1, row.end()));
    json j = {{"table", flags.which}, {"max", max}, {"grid", grid}};
    if (f) {
      j["color"] = color_name(c);
      j["q"] = f->q;
    }
    out << j.dump() << '\n';
    return 0;
  }
  write_grid(out, flags.format, header, rows);
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyFlags {
  std::string suite = "all";
  std::string p_list = "3,5,7";
  unsigned max_r = 2;
  std::uint64_t max_degree = 0;
  std::uint64_t seed = 42;
  std::size_t samples = 30;
  std::string format = "text";
};

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
  std::vector<std::uint64_t> primes;
  for (std::int64_t p : parse_int_list(flags.p_list, "--p-list")) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
      throw FlagError("--p-list entries must be odd primes, got " + std::to_string(p));
    }
    primes.push_back(static_cast<std::uint64_t>(p));
  }
  const std::vector<FieldRef> fields = fields_for(primes, flags.max_r, q_ceiling_from_env());
  const bool all = flags.suite == "all";

  std::vector<SuiteReport> reports;
  if (all || flags.suite == "oracle") reports.push_back(verify_oracle(fields, flags.max_degree));
  if (all || flags.suite == "identities") reports.push_back(verify_identities());
  if (all || flags.suite == "periodicity") reports.push_back(verify_periodicity(fields, flags.seed, flags.samples));
  if (all || flags.suite == "axioms") reports.push_back(verify_axioms(fields, flags.seed));
  if (all || flags.suite == "structural") reports.push_back(verify_structural(fields));

  const bool passed = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
  if (flags.format == "json") {
    json arr = json::array();
    for (const SuiteReport& r : reports) {
      arr.push_back({{"suite", r.suite}, {"checks", r.checks}, {"failures", r.failures}, {"passed", r.passed()}});
    }
    out << json{{"suites", arr}, {"passed", passed}}.dump(2) << '\n';
  } else {
    out << "fields:";
    for (const FieldRef& f : fields) out << ' ' << f->q;
    out << '\n';
    for (const SuiteReport& r : reports) {
      out << r.suite << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
      for (const std::string& failure : r.failures) out << "  FAIL " << failure << '\n';
    }
    out << (passed ? "PASS" : "FAIL") << '\n';
  }
  return passed ? 0 : 1;
}

// ---- bench ----------------------------------------------------------------

struct BenchFlags {
  std::string color;
  std::uint64_t max_degree = 0;
  std::uint64_t step = 1;
  std::uint64_t buckets = 4;
  std::uint64_t closed_limit = 512;
  bool skip_timing = false;
  std::string format = "text";
};

int cmd_bench(const FieldFlags& ff, const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  const Color c = parse_color(flags.color);
  FieldRef f = make_field(ff);
  if (flags.step == 0 || flags.buckets == 0) throw FlagError("--step and --buckets must be positive");
  const std::uint64_t top = flags.max_degree == 0 ? 2 * f->q + 2 : flags.max_degree;
  const std::uint64_t span = 2 * top + 1;
  const std::uint64_t width = (span + flags.buckets - 1) / flags.buckets;

  using Monomial = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<std::vector<Monomial>> buckets(flags.buckets);
  for (std::uint64_t k = 0; k <= top; k += flags.step) {
    for (std::uint64_t l = 0; l <= top; l += flags.step) buckets[(k + l) / width].push_back({k, l});
  }

  const std::vector<PsiMethod> methods{PsiMethod::brute, PsiMethod::closed, PsiMethod::program};
  auto allowed = [&](PsiMethod m, const Monomial& x) {
    return m != PsiMethod::closed || x.first + x.second <= flags.closed_limit;
  };

  // Correctness first: no timings for methods that disagree.
  std::size_t disagreements = 0;
  for (const auto& bucket : buckets) {
    for (const Monomial& x : bucket) {
      const FieldElement reference = psi_monomial(c, f, x.first, x.second, PsiMethod::brute);
      for (PsiMethod m : methods) {
        if (!allowed(m, x)) continue;
        const FieldElement v = psi_monomial(c, f, x.first, x.second, m);
        if (v != reference) {
          ++disagreements;
          err << "disagreement " << color_name(c) << " q=" << f->q << " k=" << x.first << " l=" << x.second << ": "
              << method_name(m) << '=' << v.to_string() << " brute=" << reference.to_string() << '\n';
        }
      }
    }
  }
  if (disagreements) {
    err << disagreements << " disagreements; timings withheld\n";
    return 1;
  }

  std::vector<std::string> header{"degrees", "monomials"};
  for (PsiMethod m : methods) header.push_back(std::string(method_name(m)) + (flags.skip_timing ? "" : "_us"));
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    const auto& bucket = buckets[b];
    const std::uint64_t lo = b * width;
    const std::uint64_t hi = std::min(span, (b + 1) * width) - 1;
    std::vector<std::string> row{std::to_string(lo) + "-" + std::to_string(hi), std::to_string(bucket.size())};
    json jrow = {{"degrees", {lo, hi}}, {"monomials", bucket.size()}};
    for (PsiMethod m : methods) {
      std::size_t covered = 0;
      for (const Monomial& x : bucket) covered += allowed(m, x);
      if (covered < bucket.size()) {
        row.push_back("skipped");
        jrow[std::string(method_name(m))] = nullptr;
        continue;
      }
      if (flags.skip_timing) {
        row.push_back("agree");
        jrow[std::string(method_name(m))] = "agree";
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      for (const Monomial& x : bucket) (void)psi_monomial(c, f, x.first, x.second, m);
      const auto us =
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
      row.push_back(std::to_string(us));
      jrow[std::string(method_name(m))] = us;
    }
    rows.push_back(std::move(row));
    jrows.push_back(std::move(jrow));
  }

  if (flags.format == "json") {
    out << json{{"color", color_name(c)}, {"q", f->q}, {"max_degree", top}, {"step", flags.step}, {"buckets", jrows}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "# " << color_name(c) << " over F_" << f->q << ", k,l <= " << top << " step " << flags.step
      << ", all methods agree\n";
  write_grid(out, "text", header, rows);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fourier summation over the blue, red and green unit circles of finite fields", "chromasum"};
  app.require_subcommand(1);

  FieldFlags field_flags;
  const CLI::IsMember kColors({"blue", "red", "green", "b", "r", "g"});

  std::string field_format = "text";
  CLI::App* field_cmd = app.add_subcommand("field", "Describe a finite field");
  add_field_flags(field_cmd, field_flags);
  add_format_flag(field_cmd, field_format, {"text", "json"});

  std::string circle_color;
  std::string circle_method = "enumerate";
  std::string circle_format = "text";
  CLI::App* circle_cmd = app.add_subcommand("circle", "List the points of a unit circle");
  circle_cmd->add_option("--color", circle_color, "blue, red or green")->required()->check(kColors);
  circle_cmd->add_option("--method", circle_method)->check(CLI::IsMember({"enumerate", "parametrize"}));
  add_field_flags(circle_cmd, field_flags);
  add_format_flag(circle_cmd, circle_format, {"text", "json"});

  PsiFlags psi;
  CLI::App* psi_cmd = app.add_subcommand("psi", "Evaluate the Fourier summation functional");
  psi_cmd->add_option("--color", psi.color, "blue, red or green")->required()->check(kColors);
  psi_cmd->add_option("--k", psi.k, "Exponent of alpha");
  psi_cmd->add_option("--l", psi.l, "Exponent of beta");
  psi_cmd->add_option("--poly", psi.poly, "JSON grid of field elements, row i holding alpha^i");
  psi_cmd->add_option("--method", psi.method)->check(CLI::IsMember({"brute", "closed", "program", "auto"}));
  psi_cmd->add_flag("--explain", psi.explain, "Show the ladder or the reduction chain");
  add_field_flags(psi_cmd, field_flags);
  add_format_flag(psi_cmd, psi.format, {"text", "json"});

  TableFlags tables;
  CLI::App* tables_cmd = app.add_subcommand("tables", "Emit coefficient and value tables");
  tables_cmd->add_option("--which", tables.which)
      ->required()
      ->check(CLI::IsMember({"super-catalan", "omega", "circular-polynumbers", "psi-grid"}));
  tables_cmd->add_option("--max", tables.max, "Largest index (total degree for circular-polynumbers)");
  tables_cmd->add_option("--color", tables.color, "Color for psi-grid")->check(kColors);
  add_field_flags(tables_cmd, field_flags);
  add_format_flag(tables_cmd, tables.format, {"text", "csv", "json"});

  VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run self-check suites");
  verify_cmd->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"oracle", "axioms", "identities", "periodicity", "structural", "all"}));
  verify_cmd->add_option("--p-list", verify.p_list, "Comma-separated odd primes");
  verify_cmd->add_option("--max-r", verify.max_r)->check(CLI::Range(1u, 8u));
  verify_cmd->add_option("--max-degree", verify.max_degree, "Largest exponent for the oracle (0 means 2q+2)");
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--samples", verify.samples, "Exponent pairs per (color, q) for periodicity");
  add_format_flag(verify_cmd, verify.format, {"text", "json"});

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time brute force against the closed forms");
  bench_cmd->add_option("--color", bench.color, "blue, red or green")->required()->check(kColors);
  bench_cmd->add_option("--max-degree", bench.max_degree, "Largest exponent (0 means 2q+2)");
  bench_cmd->add_option("--step", bench.step, "Stride through the exponent grid");
  bench_cmd->add_option("--buckets", bench.buckets, "Number of total-degree buckets");
  bench_cmd->add_option("--closed-limit", bench.closed_limit, "Skip the ladder form above this total degree");
  bench_cmd->add_flag("--skip-timing", bench.skip_timing, "Check agreement only; output is deterministic");
  add_field_flags(bench_cmd, field_flags);
  add_format_flag(bench_cmd, bench.format, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*field_cmd) return cmd_field(field_flags, field_format, out);
    if (*circle_cmd) return cmd_circle(field_flags, circle_color, circle_method, circle_format, out);
    if (*psi_cmd) return cmd_psi(field_flags, psi, out);
    if (*tables_cmd) return cmd_tables(field_flags, tables, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*bench_cmd) return cmd_bench(field_flags, bench, out, err);
  } catch (const FlagError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace chromasum
