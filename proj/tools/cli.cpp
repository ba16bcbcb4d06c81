#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpadic/characters.hpp"
#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"
#include "qpadic/lfunction.hpp"
#include "qpadic/qbernoulli.hpp"
#include "qpadic/verify.hpp"

namespace qpadic::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : DomainError {
  using DomainError::DomainError;
};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <class T>
T number(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return static_cast<T>(x);
  } catch (const std::exception&) {
    throw UsageError("config key " + key + ": not an integer: " + v);
  }
}

bool boolean(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw UsageError("config key " + key + ": not a boolean: " + v);
}

struct Field {
  std::string key;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, const std::string&)> set;
};

#define QP_INT(name)                                                                         \
  Field {                                                                                    \
    #name, [](const RunConfig& c) { return std::to_string(c.name); },                        \
        [](RunConfig& c, const std::string& v) { c.name = number<decltype(c.name)>(#name, v); } \
  }
#define QP_STR(name) \
  Field { #name, [](const RunConfig& c) { return c.name; }, [](RunConfig& c, const std::string& v) { c.name = v; } }
#define QP_BOOL(name)                                                         \
  Field {                                                                     \
    #name, [](const RunConfig& c) { return std::string(c.name ? "true" : "false"); }, \
        [](RunConfig& c, const std::string& v) { c.name = boolean(#name, v); }  \
  }
#define QP_LIST(name)                                                                                   \
  Field {                                                                                               \
    #name, [](const RunConfig& c) { return join(c.name); }, [](RunConfig& c, const std::string& v) { c.name = split(v, ','); } \
  }

const std::vector<Field>& fields() {
  static const std::vector<Field> f = {
      QP_INT(p),         QP_STR(q),      QP_STR(chi),      QP_BOOL(chi_images), QP_INT(precision),
      QP_INT(truncation), QP_INT(seed),  QP_STR(format),   QP_INT(n),           QP_INT(n_max),
      QP_STR(x),         QP_BOOL(exact), QP_LIST(s),       QP_LIST(t),          QP_INT(s_near_one),
      QP_INT(F),         QP_INT(twist),  QP_STR(variant),  QP_BOOL(classical),  QP_INT(extra_terms),
      QP_LIST(suite),    QP_BOOL(serial), QP_INT(modulus)};
  return f;
}

#undef QP_INT
#undef QP_STR
#undef QP_BOOL
#undef QP_LIST

// ---------------------------------------------------------------------------
// parsing of values

mpq_class rational_arg(const std::string& text, std::int64_t p, const char* what) {
  try {
    return QParameter::parse(text, p).value;
  } catch (const DomainError&) {
    throw UsageError(std::string(what) + ": cannot read '" + text + "' as a rational");
  }
}

DirichletCharacter character(const RunConfig& c) {
  const auto colon = c.chi.find(':');
  if (colon == std::string::npos) throw UsageError("character spec must be modulus:index or modulus:k1,k2,...");
  const auto m = number<std::int64_t>("chi", c.chi.substr(0, colon));
  if (m < 1) throw UsageError("character modulus must be positive");
  const std::string rest = c.chi.substr(colon + 1);
  if (c.chi_images) {
    std::vector<long> images;
    for (const auto& k : split(rest, ',')) images.push_back(number<long>("chi", k));
    return DirichletCharacter(m, images);
  }
  const auto idx = number<long>("chi", rest);
  const auto size = static_cast<long>(enumerate_characters(m).size());
  if (idx < 0 || idx >= size) {
    throw UsageError("character index " + std::to_string(idx) + " out of range for modulus " + std::to_string(m));
  }
  return character_by_index(m, idx);
}

void validate(const RunConfig& c) {
  if (c.p < 2 || !is_prime(c.p)) throw UsageError("p must be a prime, got " + std::to_string(c.p));
  if (c.precision < 1 || c.precision > 4000) throw UsageError("precision must be in [1, 4000]");
  if (c.truncation < 1) throw UsageError("truncation must be positive");
  if (c.format != "json" && c.format != "csv" && c.format != "text") throw UsageError("format must be json, csv or text");
  if (c.n < 0) throw UsageError("n must be non-negative");
  if (c.extra_terms < 0) throw UsageError("extra_terms must be non-negative");
  static const std::vector<std::string> variants = {"corrected", "theorem", "theorem-f", "remark"};
  if (std::find(variants.begin(), variants.end(), c.variant) == variants.end()) {
    throw UsageError("variant must be one of corrected, theorem, theorem-f, remark");
  }
  if (c.s.empty() && c.s_near_one == 0) throw UsageError("no s values");
  if (c.t.empty()) throw UsageError("no t values");
  (void)character(c);
}

// ---------------------------------------------------------------------------
// output helpers

ordered_json padic_json(const PadicScalar& x) {
  ordered_json j;
  j["digits"] = x.to_digits();
  if (x.is_zero()) {
    j["valuation"] = nullptr;
    j["unit"] = "0";
  } else {
    j["valuation"] = x.valuation();
    j["unit"] = x.unit().get_str();
  }
  j["precision"] = x.abs_precision() >= PadicScalar::kExact ? ordered_json(nullptr) : ordered_json(x.abs_precision());
  return j;
}

ordered_json cyclo_json(const CycloScalar& x) {
  if (x.is_scalar()) return padic_json(x.scalar_part());
  ordered_json j;
  j["ring_order"] = x.order();
  j["coefficients"] = ordered_json::array();
  for (const auto& c : x.coefficients()) j["coefficients"].push_back(padic_json(c));
  return j;
}

std::string cyclo_digits(const CycloScalar& x) {
  if (x.is_scalar()) return x.scalar_part().to_digits();
  return join(x.to_digit_strings());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string mu_display(const mpq_class& a, const mpq_class& b) {
  if (a == 0 && b == 0) return "0";
  std::string out;
  if (a != 0) out = a.get_str();
  if (b != 0 && out.empty()) out = b.get_str() + "*mu";
  else if (b != 0) out += (b < 0 ? " - " : " + ") + mpq_class(abs(b)).get_str() + "*mu";
  return out;
}

ordered_json character_json(const DirichletCharacter& chi) {
  return {{"modulus", chi.modulus()}, {"index", chi.index()}, {"label", chi.label()}};
}

// ---------------------------------------------------------------------------
// commands

int cmd_bernoulli(const RunConfig& c, std::ostream& out) {
  const auto chi = character(c);
  const bool with_chi = chi.modulus() != 1;
  const int lo = c.n_max >= 0 ? 0 : c.n;
  const int hi = c.n_max >= 0 ? c.n_max : c.n;
  ordered_json doc;
  doc["command"] = "bernoulli";
  doc["mode"] = c.exact ? "exact" : "p-adic";
  doc["character"] = character_json(chi);
  doc["x"] = c.x.empty() ? "0" : c.x;
  ordered_json rows = ordered_json::array();
  std::vector<std::vector<std::string>> csv;

  if (c.exact) {
    const mpq_class x = c.x.empty() ? mpq_class(0) : rational_arg(c.x, c.p, "x");
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw UsageError("exact mode needs an integer x");
    const long xi = x.get_num().get_si();
    std::optional<mpq_class> qv;
    if (c.q != "1+p") qv = rational_arg(c.q, c.p, "q");
    doc["q"] = qv ? ordered_json(qv->get_str()) : ordered_json(nullptr);
    for (int n = lo; n <= hi; ++n) {
      ExactQScalar v;
      if (with_chi) {
        if (!chi.is_real()) throw UsageError("exact mode supports characters with values +-1");
        v = gen_beta_poly_exact(n, chi, xi);
      } else {
        v = xi == 0 ? beta_number_exact(n) : beta_poly_exact(n, 1, xi);
      }
      ordered_json row{{"n", n}, {"rational_part", v.rational_part().to_string()}, {"mu_part", v.mu_part().to_string()}};
      std::vector<std::string> line{std::to_string(n), v.rational_part().to_string(), v.mu_part().to_string()};
      if (qv) {
        auto [a, b] = v.evaluate_parts(*qv);
        row["at_q"] = {{"rational", a.get_str()}, {"mu", b.get_str()}, {"display", mu_display(a, b)}};
        line.push_back(mu_display(a, b));
      }
      rows.push_back(row);
      csv.push_back(line);
    }
    doc["values"] = rows;
    if (c.format == "csv") {
      out << "n,rational_part,mu_part" << (qv ? ",at_q" : "") << "\n";
      for (const auto& l : csv) {
        for (std::size_t i = 0; i < l.size(); ++i) out << (i ? "," : "") << csv_field(l[i]);
        out << "\n";
      }
    } else if (c.format == "text") {
      for (const auto& r : rows) {
        out << "beta_" << r["n"].get<int>() << " = " << r["rational_part"].get<std::string>() << " + "
            << r["mu_part"].get<std::string>() << " * mu";
        if (r.contains("at_q")) out << "  at q: " << r["at_q"]["display"].get<std::string>();
        out << "\n";
      }
    } else {
      out << doc.dump(2) << "\n";
    }
    return 0;
  }

  const QParameter qp = QParameter::parse(c.q, c.p);
  qp.validate_padic(false);
  doc["p"] = c.p;
  doc["q"] = qp.value.get_str();
  doc["precision"] = c.precision;
  const PadicQ q(c.p, qp.value, c.precision + 8);
  const mpq_class x = c.x.empty() ? mpq_class(0) : rational_arg(c.x, c.p, "x");
  if (x != 0 && valuation(x, c.p) < 0) throw UsageError("x must be a p-adic integer");
  const bool int_x = x.get_den() == 1 && x.get_num().fits_slong_p();
  const PadicScalar qx = int_x ? q.pow(x.get_num().get_si()) : q.pow(PadicScalar::from_rational(c.p, x, c.precision + 8));
  const PadicScalar bx =
      int_x ? q.bracket(x.get_num().get_si()) : q.bracket(PadicScalar::from_rational(c.p, x, c.precision + 8));
  for (int n = lo; n <= hi; ++n) {
    CycloScalar v;
    if (with_chi) {
      const PadicScalar y = x == 0 ? PadicScalar::zero(c.p) : PadicScalar::from_rational(c.p, x, c.precision + 8);
      v = gen_beta_poly_padic(q, n, TwistedCharacter(chi, 0, c.p), y, c.precision);
    } else {
      const PadicScalar b = x == 0 ? beta_number_padic(q, n, c.precision) : beta_poly_padic(q, 1, n, qx, bx, c.precision);
      v = CycloScalar::constant(1, b);
    }
    rows.push_back({{"n", n}, {"value", cyclo_json(v)}});
    csv.push_back({std::to_string(n), cyclo_digits(v)});
  }
  doc["values"] = rows;
  if (c.format == "csv") {
    out << "n,digits\n";
    for (const auto& l : csv) out << l[0] << "," << csv_field(l[1]) << "\n";
  } else if (c.format == "text") {
    for (const auto& l : csv) out << "beta_" << l[0] << " = " << l[1] << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return 0;
}

AtOneVariantP at_one_variant(const std::string& v) {
  if (v == "theorem") return AtOneVariantP::kTheorem;
  if (v == "theorem-f") return AtOneVariantP::kTheoremStray;
  if (v == "remark") return AtOneVariantP::kRemark;
  return AtOneVariantP::kCorrected;
}

int cmd_lfunction(const RunConfig& c, std::ostream& out) {
  const auto chi = character(c);
  LpqRequest base;
  base.p = c.p;
  base.chi = chi;
  base.F = c.F;
  base.target_precision = c.precision;
  base.extra_terms = c.extra_terms;
  if (c.classical) {
    base.q = 1;
  } else {
    const QParameter qp = QParameter::parse(c.q, c.p);
    qp.validate_padic(false);
    base.q = qp.value;
  }
  const std::int64_t F = resolve_F(base);

  std::vector<mpq_class> svals, tvals;
  for (const auto& s : c.s) svals.push_back(rational_arg(s, c.p, "s"));
  for (int k = 1; k <= c.s_near_one; ++k) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(c.p), static_cast<unsigned long>(k));
    svals.push_back(1 + mpq_class(pk));
  }
  for (const auto& t : c.t) tvals.push_back(rational_arg(t, c.p, "t"));

  ordered_json doc;
  doc["command"] = "lfunction";
  doc["request"] = {{"p", c.p},
                    {"q", base.q.get_str()},
                    {"character", character_json(chi)},
                    {"F", F},
                    {"twist", c.twist},
                    {"target_precision", c.precision},
                    {"path", c.classical ? "classical" : "q"},
                    {"variant_at_one", c.variant}};
  ordered_json rows = ordered_json::array();
  bool shortfall = false;
  if (c.format == "csv") {
    out << "s,t,digits,valuation,unit,abs_precision,achieved_precision,truncation_order,shortfall,s_minus_1_times_value\n";
  }
  for (const auto& s : svals) {
    for (const auto& t : tvals) {
      LpqRequest r = base;
      r.s = s;
      r.t = t;
      LpqResult res;
      if (c.classical) {
        res = classical_limit_Lp(r, c.twist);
      } else if (s == 1 && c.variant != "corrected") {
        res = Lpq_at_one(r, at_one_variant(c.variant), c.twist);
      } else {
        res = Lpq(r, c.twist);
      }
      shortfall = shortfall || res.shortfall;
      const CycloScalar scaled = res.value * PadicScalar::from_rational(c.p, s - 1, c.precision + 40);
      if (c.format == "csv") {
        const bool sc = res.value.is_scalar();
        const PadicScalar v = sc ? res.value.scalar_part() : PadicScalar::zero(c.p);
        out << s.get_str() << "," << t.get_str() << "," << csv_field(cyclo_digits(res.value)) << ","
            << (sc && !v.is_zero() ? std::to_string(v.valuation()) : "") << ","
            << (sc && !v.is_zero() ? v.unit().get_str() : "") << "," << res.value.abs_precision() << ","
            << res.achieved_precision << "," << res.truncation_order << "," << (res.shortfall ? "true" : "false") << ","
            << csv_field(cyclo_digits(scaled)) << "\n";
      } else if (c.format == "text") {
        out << "L(" << s.get_str() << ", " << t.get_str() << ") = " << cyclo_digits(res.value) << "  [achieved "
            << res.achieved_precision << ", M = " << res.truncation_order << (res.shortfall ? ", shortfall" : "")
            << "]\n";
      }
      rows.push_back({{"s", s.get_str()},
                      {"t", t.get_str()},
                      {"value", cyclo_json(res.value)},
                      {"achieved_precision", res.achieved_precision},
                      {"truncation_order", res.truncation_order},
                      {"shortfall", res.shortfall},
                      {"s_minus_1_times_value", cyclo_json(scaled)}});
    }
  }
  doc["results"] = rows;
  if (c.format == "json") out << doc.dump(2) << "\n";
  return shortfall ? 3 : 0;
}

std::string measure_text(const SuiteReport& r, double m) {
  std::ostringstream os;
  if (r.metric == Metric::kDigits) {
    if (m >= kExactDigits) return "exact";
    os << static_cast<long>(m) << " digits";
  } else if (r.metric == Metric::kAbs) {
    os << std::scientific << std::setprecision(3) << m;
  } else {
    os << (m == 0 ? "equal" : "different");
  }
  return os.str();
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& s : c.suite) {
    if (s == "all") {
      names.insert(names.end(), suite_names().begin(), suite_names().end());
    } else if (!is_suite(s)) {
      throw UsageError("unknown suite: " + s);
    } else {
      names.push_back(s);
    }
  }
  const auto reports = run_suites(names, c.seed, !c.serial);
  bool ok = true;
  ordered_json doc;
  doc["command"] = "verify";
  doc["seed"] = c.seed;
  doc["suites"] = ordered_json::array();
  if (c.format == "csv") out << "suite,case,passed,measure\n";
  for (const auto& r : reports) {
    ok = ok && r.passed();
    const char* metric = r.metric == Metric::kDigits ? "p-adic digits" : r.metric == Metric::kAbs ? "abs" : "exact";
    ordered_json sj{{"name", r.name},       {"passed", r.passed()}, {"failures", r.failures()},
                    {"cases", r.cases.size()}, {"metric", metric},    {"worst", r.worst()}};
    ordered_json cases = ordered_json::array();
    for (const auto& k : r.cases) cases.push_back({{"case", k.label}, {"passed", k.passed}, {"measure", k.measure}});
    sj["results"] = cases;
    sj["notes"] = r.notes;
    doc["suites"].push_back(sj);
    if (c.format == "csv") {
      for (const auto& k : r.cases) {
        out << r.name << "," << csv_field(k.label) << "," << (k.passed ? "true" : "false") << "," << k.measure << "\n";
      }
    } else if (c.format == "text") {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << "  " << r.cases.size() - r.failures() << "/" << r.cases.size()
          << "  worst " << measure_text(r, r.worst()) << "\n";
      for (const auto& k : r.cases) {
        out << (k.passed ? "  ok    " : "  FAIL  ") << k.label << "  " << measure_text(r, k.measure) << "\n";
      }
      for (const auto& n : r.notes) out << "  note: " << n << "\n";
    }
  }
  doc["passed"] = ok;
  if (c.format == "json") out << doc.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_characters(const RunConfig& c, std::ostream& out) {
  if (c.modulus < 1) throw UsageError("modulus must be positive");
  const bool twisted = c.twist != 0;
  ordered_json doc;
  doc["command"] = "characters";
  doc["modulus"] = c.modulus;
  if (twisted) {
    doc["twist"] = c.twist;
    doc["p"] = c.p;
  }
  ordered_json rows = ordered_json::array();
  if (c.format == "csv") out << "index,label,order,conductor,primitive,values\n";
  for (const auto& chi : enumerate_characters(c.modulus)) {
    const DirichletCharacter shown = twisted ? twist_teichmuller(chi, c.twist, c.p) : chi;
    std::vector<std::string> values;
    for (std::int64_t a = 0; a < shown.modulus(); ++a) values.push_back(shown(a).to_string());
    ordered_json row{{"index", chi.index()},
                     {"label", chi.label()},
                     {"order", chi.order()},
                     {"conductor", chi.conductor()},
                     {"primitive", chi.is_primitive()}};
    if (twisted) {
      row["twisted"] = {{"modulus", shown.modulus()},
                        {"label", shown.label()},
                        {"order", shown.order()},
                        {"conductor", shown.conductor()}};
    }
    row["values"] = values;
    rows.push_back(row);
    if (c.format == "csv") {
      out << chi.index() << "," << chi.label() << "," << chi.order() << "," << chi.conductor() << ","
          << (chi.is_primitive() ? "true" : "false") << "," << csv_field(join(values)) << "\n";
    } else if (c.format == "text") {
      out << chi.label() << "  order " << chi.order() << "  conductor " << chi.conductor()
          << (chi.is_primitive() ? "  primitive" : "") << "  values " << join(values) << "\n";
    }
  }
  doc["characters"] = rows;
  if (c.format == "json") out << doc.dump(2) << "\n";
  return 0;
}

// value of --config in the raw argument list
std::string config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return "";
}

}  // namespace

int default_precision() {
  if (const char* env = std::getenv("QPADIC_PRECISION")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 10;
}

std::string serialize(const RunConfig& c) {
  std::string out;
  for (const auto& f : fields()) out += f.key + "=" + f.get(c) + "\n";
  return out;
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = std::find_if(fields().begin(), fields().end(), [&](const Field& f) { return f.key == key; });
    if (it == fields().end()) throw UsageError("config line " + std::to_string(lineno) + ": unknown key " + key);
    it->set(base, value);
  }
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    RunConfig c;
    c.precision = default_precision();
    if (const std::string path = config_path(args); !path.empty()) {
      std::ifstream f(path);
      if (!f) throw UsageError("cannot read config file " + path);
      std::stringstream ss;
      ss << f.rdbuf();
      c = parse_config(ss.str(), c);
    }

    CLI::App app{"p-adic q-L-functions and q-Bernoulli numbers"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string config_file;
    bool dump_config = false;
    app.add_option("--config", config_file, "key=value file; flags override it");
    app.add_flag("--dump-config", dump_config, "print the resolved configuration and exit");
    app.add_option("--p", c.p, "prime");
    app.add_option("--q", c.q, "q as a/b, or 1+p^k");
    app.add_option("--chi", c.chi, "character as modulus:index");
    app.add_flag("--chi-images", c.chi_images, "read --chi as modulus:k1,k2,... generator images");
    app.add_option("--prec,--precision", c.precision, "target p-adic precision (default QPADIC_PRECISION or 10)");
    app.add_option("--truncation", c.truncation, "term cap for complex series");
    app.add_option("--seed", c.seed, "random seed for verification suites");
    app.add_option("--format", c.format, "json, csv or text");

    auto* bern = app.add_subcommand("bernoulli", "q-Bernoulli numbers and polynomials");
    bern->add_option("--n", c.n, "index");
    bern->add_option("--n-max", c.n_max, "print indices 0..n-max");
    bern->add_option("--x", c.x, "polynomial argument (integer in exact mode)");
    bern->add_flag("--exact", c.exact, "rational functions in q and mu = 1/log q");

    auto* lf = app.add_subcommand("lfunction", "L_{p,q}(s,t|chi)");
    lf->add_option("--s", c.s, "s values (p-integral rationals)")->delimiter(',');
    lf->add_option("--t", c.t, "t values (p-integral rationals)")->delimiter(',');
    lf->add_option("--s-near-one", c.s_near_one, "also evaluate at s = 1 + p^k for k = 1..K");
    lf->add_option("--F", c.F, "multiple of p* and of the modulus (default lcm)");
    lf->add_option("--twist", c.twist, "weights chi(a) w(a)^-twist");
    lf->add_option("--variant", c.variant, "form used at s = 1: corrected, theorem, theorem-f, remark");
    lf->add_flag("--classical", c.classical, "q = 1 path with Bernoulli numbers");
    lf->add_option("--extra-terms", c.extra_terms, "terms beyond the certified truncation order");

    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", c.suite, "suite names or all")->delimiter(',');
    ver->add_flag("--serial", c.serial, "run suites one after another");

    auto* chars = app.add_subcommand("characters", "list Dirichlet characters");
    chars->add_option("--modulus", c.modulus, "modulus");
    chars->add_option("--twist", c.twist, "show chi w^-twist");

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    for (auto* v : {&c.s, &c.t, &c.suite}) std::erase(*v, std::string());
    validate(c);
    if (dump_config) {
      out << serialize(c);
      return 0;
    }
    if (bern->parsed()) return cmd_bernoulli(c, out);
    if (lf->parsed()) return cmd_lfunction(c, out);
    if (ver->parsed()) return cmd_verify(c, out);
    return cmd_characters(c, out);
  } catch (const PrecisionError& e) {
    err << "precision shortfall: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qpadic::cli
