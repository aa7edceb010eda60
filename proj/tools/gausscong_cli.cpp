// Command-line front end. Every subcommand parses its inputs, makes one or two
// calls into the C API and prints either the returned JSON or a text rendering
// of it.
//
// Exit status: 0 verdict or result computed, 1 internal error, 2 usage or
// input error, 3 truncation insufficient.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gausscong/gausscong.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitTruncation = 3;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(gc_status s) {
  switch (s) {
    case GC_OK:
      return kExitOk;
    case GC_ERR_OUT_OF_TRUNCATION:
    case GC_ERR_OVERFLOW:
      return kExitTruncation;
    case GC_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

void check(gc_status s, const std::string& context) {
  if (s == GC_OK) return;
  std::string message = context + ": " + gc_status_name(s) + ": " + gc_last_error();
  throw Failure{exit_code_for(s), message};
}

struct RatfunDeleter {
  void operator()(gc_ratfun* f) const { gc_ratfun_free(f); }
};
struct SeriesDeleter {
  void operator()(gc_series* s) const { gc_series_free(s); }
};
using Ratfun = std::unique_ptr<gc_ratfun, RatfunDeleter>;
using Series = std::unique_ptr<gc_series, SeriesDeleter>;

std::string take(char* s) {
  std::string out(s);
  gc_string_free(s);
  return out;
}

struct Options {
  std::string num;
  std::string den = "1";
  std::size_t nvars = 0;
  std::int64_t bound = 60;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  int r_max = 2;
  int strength = 1;
  std::int64_t m_budget = -1;
  unsigned jobs = 1;
  bool json_output = false;
  std::vector<std::int64_t> vertex;
  bool run_check = false;

  // Subcommand specific.
  std::string z = "x";
  std::vector<std::int64_t> form;
  std::int64_t offset = 0;
  std::string matrix;
  std::vector<std::string> gs;
  std::string mode = "univariate";
  std::vector<std::string> fs;
  std::string q;
  std::vector<std::string> linear_vars;
  std::vector<std::int64_t> k;
  std::vector<std::string> log_vars;
};

bool stdin_used = false;

std::string resolve(const std::string& text) {
  if (text != "-") return text;
  if (stdin_used) throw Failure{kExitInput, "only one expression may be read from stdin"};
  stdin_used = true;
  std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  while (!all.empty() && (all.back() == '\n' || all.back() == '\r')) all.pop_back();
  return all;
}

std::size_t nvars_of(const std::string& text) {
  std::size_t n = 0;
  check(gc_expression_nvars(text.c_str(), &n), "parse");
  return n;
}

Ratfun parse(const std::string& num, const std::string& den, std::size_t nvars) {
  gc_ratfun* out = nullptr;
  check(gc_ratfun_parse(num.c_str(), den.c_str(), nvars, &out), "parse");
  return Ratfun(out);
}

std::size_t variable_index(const std::string& name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  if (name == "w") return 3;
  if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '8') return name[1] - '1';
  throw Failure{kExitInput, "unknown variable '" + name + "'"};
}

std::vector<std::size_t> variable_indices(const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(variable_index(n));
  return out;
}

std::string fraction(const json& c) { return c.get<std::string>(); }

std::string join(const json& array, const char* sep = " ") {
  std::string out;
  for (const auto& x : array) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void emit(const Options& o, const std::string& json_text, const std::string& text) {
  const std::string& body = o.json_output ? json_text : text;
  std::cout << body;
  if (body.empty() || body.back() != '\n') std::cout << '\n';
}

std::string render_check(const json& r) {
  std::ostringstream out;
  out << "empirical check: bound " << r["bound"] << ", strength " << r["strength"] << ", r_max " << r["r_max"]
      << ", m_budget " << r["m_budget"] << "\n";
  for (const auto& p : r["primes"]) {
    out << "p=" << p["prime"] << ": " << p["verdict"].get<std::string>() << " (" << p["checked_count"]
        << " checked)";
    if (!p["witness"].is_null()) {
      const json& w = p["witness"];
      out << " witness m=(" << join(w["m"]) << ") r=" << w["r"] << " valuation " << w["valuation_found"].dump()
          << " < " << w["valuation_required"] << " [" << w["reason"].get<std::string>() << "]";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_minton(const json& v) {
  std::ostringstream out;
  out << (v["has_gauss"].get<bool>() ? "yes" : "no") << "\n";
  if (v.contains("decomposition")) {
    const json& d = v["decomposition"];
    out << "constant " << fraction(d["constant"]) << "\n";
    for (const auto& t : d["terms"]) out << "term c=" << fraction(t["c"]) << " u=" << fraction(t["u"]) << "\n";
  } else {
    out << "reason " << v["reason"].get<std::string>() << "\n";
  }
  return out.str();
}

std::string render_mostly_linear(const json& v) {
  std::ostringstream out;
  out << (v["overall"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& e : v["per_k"]) {
    out << "k=(" << join(e["k"]) << ") " << e["kind"].get<std::string>() << " p_k=" << fraction(e["p_k"])
        << " q_k=" << fraction(e["q_k"]);
    if (e.contains("minton")) {
      const json& m = e["minton"];
      out << " " << (m["has_gauss"].get<bool>() ? "yes" : "no");
      if (m.contains("reason")) out << " (" << m["reason"].get<std::string>() << ")";
    }
    out << "\n";
  }
  return out.str();
}

gc_check_options check_options(const Options& o) {
  gc_check_options c;
  gc_check_options_init(&c);
  c.primes = o.primes.data();
  c.nprimes = o.primes.size();
  c.r_max = o.r_max;
  c.strength = o.strength;
  c.m_budget = o.m_budget;
  c.jobs = o.jobs;
  c.bound = o.bound;
  if (!o.vertex.empty()) {
    c.vertex = o.vertex.data();
    c.vertex_len = o.vertex.size();
  }
  return c;
}

/// Exit status for a check report: 3 when some prime ran out of truncation and none failed.
int check_exit(const json& r) {
  bool insufficient = false;
  for (const auto& p : r["primes"]) {
    if (p["verdict"] == "fails") return kExitOk;
    if (p["verdict"] == "insufficient-truncation") insufficient = true;
  }
  return insufficient ? kExitTruncation : kExitOk;
}

int run_expand(const Options& o) {
  Ratfun f = parse(o.num, o.den, o.nvars);
  gc_series* raw = nullptr;
  check(gc_expand(f.get(), o.vertex.empty() ? nullptr : o.vertex.data(), o.vertex.size(), o.bound, &raw), "expand");
  Series s(raw);
  char* text = nullptr;
  if (o.json_output) {
    check(gc_series_to_json(s.get(), &text), "expand");
  } else {
    check(gc_series_dump(s.get(), &text), "expand");
  }
  std::cout << take(text);
  if (o.json_output) std::cout << '\n';
  return kExitOk;
}

int run_check(const Options& o) {
  Ratfun f = parse(o.num, o.den, o.nvars);
  const gc_check_options c = check_options(o);
  char* out = nullptr;
  check(gc_check_gauss(f.get(), &c, &out), "check");
  const std::string report = take(out);
  const json r = json::parse(report);
  emit(o, report, render_check(r));
  return check_exit(r);
}

/// Prints a constructed function, optionally followed by an empirical check.
int finish_construction(const Options& o, Ratfun result) {
  char* out = nullptr;
  check(gc_ratfun_to_json(result.get(), &out), "construct");
  const std::string fjson = take(out);
  check(gc_ratfun_to_string(result.get(), &out), "construct");
  const std::string ftext = take(out);
  if (!o.run_check) {
    emit(o, fjson, ftext);
    return kExitOk;
  }
  const gc_check_options c = check_options(o);
  check(gc_check_gauss(result.get(), &c, &out), "check");
  const json report = json::parse(take(out));
  json doc{{"schema", 1}, {"kind", "construction"}, {"empirical", true}};
  doc["result"] = json::parse(fjson);
  doc["check"] = report;
  emit(o, doc.dump(), ftext + "\n" + render_check(report));
  return check_exit(report);
}

std::vector<Ratfun> parse_list(const std::vector<std::string>& exprs, std::size_t nvars) {
  std::vector<Ratfun> out;
  for (const auto& e : exprs) out.push_back(parse(e, "1", nvars));
  return out;
}

std::vector<const gc_ratfun*> raw_list(const std::vector<Ratfun>& list) {
  std::vector<const gc_ratfun*> out;
  for (const auto& f : list) out.push_back(f.get());
  return out;
}

int run_construct_det(const Options& o) {
  if (o.fs.empty()) throw Failure{kExitInput, "construct-det needs at least one --f"};
  std::vector<std::string> extra = o.fs;
  if (!o.q.empty()) extra.push_back(o.q);
  std::size_t n = o.nvars;
  if (!n) {
    n = 1;
    for (const auto& e : extra) n = std::max(n, nvars_of(e));
  }
  const std::vector<Ratfun> fs = parse_list(o.fs, n);
  const std::vector<const gc_ratfun*> raw = raw_list(fs);
  gc_ratfun* out = nullptr;
  if (o.q.empty()) {
    check(gc_construct_log_det(raw.data(), raw.size(), n, &out), "construct-det");
  } else {
    Ratfun q = parse(o.q, "1", n);
    const std::vector<std::size_t> linear = variable_indices(o.linear_vars);
    const std::vector<std::size_t> logs = variable_indices(o.log_vars);
    std::vector<std::int64_t> k = o.k;
    if (k.empty()) k.assign(linear.size(), 0);
    if (k.size() != linear.size()) throw Failure{kExitInput, "--k needs one entry per --linear variable"};
    check(gc_construct_qdet(q.get(), linear.data(), linear.size(), k.data(), raw.data(), raw.size(), logs.data(),
                            logs.size(), &out),
          "construct-det");
  }
  return finish_construction(o, Ratfun(out));
}

int run_substitute(const Options& o) {
  if (o.gs.empty()) throw Failure{kExitInput, "substitute needs one --g per variable of f"};
  Ratfun f = parse(o.num, o.den, o.nvars);
  std::size_t n = 1;
  for (const auto& g : o.gs) n = std::max(n, nvars_of(g));
  const std::vector<Ratfun> gs = parse_list(o.gs, n);
  const std::vector<const gc_ratfun*> raw = raw_list(gs);
  gc_ratfun* out = nullptr;
  if (o.mode == "univariate") {
    check(gc_substitute_univariate(f.get(), raw.data(), raw.size(), &out), "substitute");
  } else {
    check(gc_substitute_multivariate(f.get(), raw.data(), raw.size(), &out), "substitute");
  }
  return finish_construction(o, Ratfun(out));
}

int run_toroidal(const Options& o) {
  Ratfun f = parse(o.num, o.den, o.nvars);
  std::vector<std::vector<std::string>> rows;
  std::stringstream all(o.matrix);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::vector<std::string> entries;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(' '));
      cell.erase(cell.find_last_not_of(' ') + 1);
      entries.push_back(cell);
    }
    rows.push_back(entries);
  }
  if (rows.empty()) throw Failure{kExitInput, "--matrix is empty"};
  std::vector<const char*> flat;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw Failure{kExitInput, "--matrix rows differ in length"};
    for (const auto& e : r) flat.push_back(e.c_str());
  }
  gc_ratfun* out = nullptr;
  check(gc_toroidal_substitute(f.get(), flat.data(), rows.size(), rows[0].size(), &out), "toroidal");
  return finish_construction(o, Ratfun(out));
}

int run_restrict_face(const Options& o) {
  Ratfun f = parse(o.num, o.den, o.nvars);
  char* out = nullptr;
  if (o.form.empty()) {
    // Without a face, list the faces of N(Q).
    check(gc_faces_json(f.get(), &out), "restrict-face");
    const std::string text = take(out);
    const json doc = json::parse(text);
    std::ostringstream listing;
    for (const auto& face : doc["faces"]) {
      listing << "dim " << face["dim"] << " form (" << join(face["form"]) << ") offset " << face["offset"] << "\n";
    }
    emit(o, text, listing.str());
    return kExitOk;
  }
  gc_ratfun* raw = nullptr;
  check(gc_restrict_face(f.get(), o.form.data(), o.form.size(), o.offset, &raw), "restrict-face");
  return finish_construction(o, Ratfun(raw));
}

int run_minton(const Options& o) {
  Ratfun f = parse(o.num, o.den, o.nvars);
  char* out = nullptr;
  check(gc_minton(f.get(), &out), "minton");
  const std::string text = take(out);
  emit(o, text, render_minton(json::parse(text)));
  return kExitOk;
}

int run_classify_linear(const Options& o) {
  Ratfun f = parse(o.num, o.den, o.nvars);
  char* out = nullptr;
  check(gc_classify_linear(f.get(), &out), "classify-linear");
  const std::string text = take(out);
  emit(o, text, json::parse(text)["has_gauss"].get<bool>() ? "true" : "false");
  return kExitOk;
}

int run_classify_mostly_linear(const Options& o) {
  Ratfun f = parse(o.num, o.den, o.nvars);
  char* out = nullptr;
  check(gc_classify_mostly_linear(f.get(), variable_index(o.z), &out), "classify-mostly-linear");
  const std::string text = take(out);
  emit(o, text, render_mostly_linear(json::parse(text)));
  return kExitOk;
}

int run_classify_deg2(const Options& o) {
  Ratfun f = parse(o.num, o.den, o.nvars == 0 ? 2 : o.nvars);
  char* out = nullptr;
  check(gc_classify_degree2(f.get(), &out), "classify-deg2");
  const std::string text = take(out);
  const json c = json::parse(text);
  std::ostringstream r;
  r << (c["has_gauss"].get<bool>() ? "true" : "false") << "\nroute " << c["route"].get<std::string>() << "\n";
  if (c.contains("dim")) {
    r << "dim " << c["dim"] << "\nspecial " << join(c["special_monomials"]) << "\n";
    for (const auto& b : c["basis"]) r << "basis " << b.get<std::string>() << "\n";
  }
  if (c.contains("mostly_linear")) r << render_mostly_linear(c["mostly_linear"]);
  emit(o, text, r.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laurent expansions and Gauss congruences of rational functions"};
  app.set_version_flag("--version", std::string(gc_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with defaults (primes, bound, rmax, ...)");

  Options o;
  app.add_option("--num", o.num, "numerator expression, '-' reads stdin");
  app.add_option("--den", o.den, "denominator expression")->capture_default_str();
  app.add_option("--nvars", o.nvars, "number of variables (default: inferred)");
  app.add_option("--bound", o.bound, "grading-degree cap of the expansion")->capture_default_str();
  app.add_option("--primes", o.primes, "primes to check")->delimiter(',');
  app.add_option("--rmax", o.r_max, "largest r")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--strength", o.strength, "congruence modulo p^(strength r)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--mbudget", o.m_budget, "largest grading degree of m (default: bound / p_min^2)");
  app.add_option("--jobs", o.jobs, "worker threads for the per-prime fan-out")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--vertex", o.vertex, "expansion vertex, e.g. 0,0 (default: canonical)")->delimiter(',');
  app.add_flag("--json", o.json_output, "print JSON instead of text");

  auto* expand = app.add_subcommand("expand", "Laurent expansion at a vertex");
  auto* check_cmd = app.add_subcommand("check", "empirical Gauss congruence check");
  auto* det = app.add_subcommand("construct-det", "determinant of logarithmic derivatives");
  det->add_option("--f", o.fs, "Laurent polynomial f_j (repeat)");
  det->add_option("--q", o.q, "denominator Q for the linear-block construction");
  det->add_option("--linear", o.linear_vars, "variables Q is linear in")->delimiter(',');
  det->add_option("--k", o.k, "exponent in {0,1} per linear variable")->delimiter(',');
  det->add_option("--log-vars", o.log_vars, "variables of the determinant")->delimiter(',');
  auto* subst = app.add_subcommand("substitute", "substitution with logarithmic-derivative factor");
  subst->add_option("--g", o.gs, "substituted function g_i (repeat)");
  subst->add_option("--mode", o.mode, "univariate or multivariate")
      ->capture_default_str()
      ->check(CLI::IsMember({"univariate", "multivariate"}));
  auto* toroidal = app.add_subcommand("toroidal", "monomial change of variables x = y^A");
  toroidal->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','")->required();
  auto* face = app.add_subcommand("restrict-face", "restriction to a face of N(Q)");
  face->add_option("--form", o.form, "supporting linear form (omit to list faces)")->delimiter(',');
  face->add_option("--offset", o.offset, "minimum of the form on N(Q)");
  auto* minton = app.add_subcommand("minton", "decide the Gauss property of a univariate function");
  auto* linear = app.add_subcommand("classify-linear", "Gauss property for Q linear in every variable");
  auto* mostly = app.add_subcommand("classify-mostly-linear", "Gauss property for Q linear outside one variable");
  mostly->add_option("--z", o.z, "the variable Q need not be linear in")->capture_default_str();
  auto* deg2 = app.add_subcommand("classify-deg2", "Gauss property for bivariate Q of degree 2");
  for (auto* sub : {check_cmd, det, subst, toroidal, face, minton, linear, mostly, deg2, expand}) {
    sub->fallthrough();
  }
  for (auto* sub : {det, subst, toroidal, face}) {
    sub->add_flag("--check", o.run_check, "also run the empirical check on the result");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (o.num.empty() && !det->parsed()) throw Failure{kExitInput, "--num is required"};
    if (det->parsed() && o.num.empty()) o.num = "1";
    o.num = resolve(o.num);
    o.den = resolve(o.den);
    if (expand->parsed()) return run_expand(o);
    if (check_cmd->parsed()) return run_check(o);
    if (det->parsed()) return run_construct_det(o);
    if (subst->parsed()) return run_substitute(o);
    if (toroidal->parsed()) return run_toroidal(o);
    if (face->parsed()) return run_restrict_face(o);
    if (minton->parsed()) return run_minton(o);
    if (linear->parsed()) return run_classify_linear(o);
    if (mostly->parsed()) return run_classify_mostly_linear(o);
    if (deg2->parsed()) return run_classify_deg2(o);
    return kExitInput;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
