#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinnil/criteria.hpp"
#include "spinnil/io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spinnil;

Variant to_variant(const std::string& s) {
  return s == "even" ? Variant::even : Variant::spin;
}

WeylType to_type(const std::string& s) {
  if (s == "a") return WeylType::A;
  if (s == "d") return WeylType::D;
  return WeylType::B;
}

/// Assembled output of one subcommand: free-form artifact lines plus
/// check results, emitted as text or as a versioned JSON report.
struct Report {
  std::string command;
  ordered_json config = ordered_json::object();
  ordered_json payload = ordered_json::object();
  std::vector<std::string> artifact_lines;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (c.gating && !c.pass) return false;
    return true;
  }

  int emit(bool as_json) const {
    if (as_json) {
      ordered_json doc;
      doc["schema"] = 1;
      doc["command"] = command;
      doc["config"] = config;
      for (const auto& [k, v] : payload.items()) doc[k] = v;
      ordered_json arr = ordered_json::array();
      for (const auto& c : checks)
        arr.push_back({{"id", c.id},
                       {"params", c.params},
                       {"pass", c.pass},
                       {"details", c.details},
                       {"gating", c.gating}});
      doc["checks"] = arr;
      doc["pass"] = pass();
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const auto& line : artifact_lines) std::cout << line << "\n";
      for (const auto& c : checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.params << "] "
                  << c.details << (c.gating ? "" : " (probe, non-gating)") << "\n";
      int failed = 0;
      for (const auto& c : checks) failed += c.gating && !c.pass;
      if (!checks.empty())
        std::cout << "result: " << (pass() ? "pass" : "fail") << " (" << checks.size()
                  << " checks, " << failed << " gating failures)\n";
    }
    return pass() ? 0 : 1;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operator expressions: whitespace-separated tokens x<i>, d<i>, integer
/// scalars, +, -, and parentheses; juxtaposition multiplies.
std::vector<std::string> expr_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '(' || c == ')') {
      flush();
      out.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

template <bool Skew>
class ExprParser {
 public:
  using Element = NilHeckeElement<Rat, Skew>;

  ExprParser(const std::string& text, WeylType t, int n)
      : tokens_(expr_tokens(text)), type_(t), rank_(n) {}

  Element parse() {
    if (tokens_.empty()) throw UsageError("empty operator expression");
    Element out = expression();
    if (pos_ != tokens_.size()) throw UsageError("unexpected token: " + tokens_[pos_]);
    return out;
  }

 private:
  const std::string* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  Element expression() {
    int sign = 1;
    if (const auto* t = peek(); t && (*t == "+" || *t == "-")) {
      if (*t == "-") sign = -1;
      ++pos_;
    }
    Element acc = term();
    if (sign < 0) acc *= Rat(-1);
    while (const auto* t = peek()) {
      if (*t != "+" && *t != "-") break;
      int s = *t == "-" ? -1 : 1;
      ++pos_;
      Element next = term();
      if (s < 0) next *= Rat(-1);
      acc += next;
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    while (const auto* t = peek()) {
      if (*t == "+" || *t == "-" || *t == ")") break;
      acc = acc * factor();
    }
    return acc;
  }

  Element factor() {
    const auto* t = peek();
    if (!t) throw UsageError("operator expression ended unexpectedly");
    if (*t == "(") {
      ++pos_;
      Element inner = expression();
      if (const auto* close = peek(); close && *close == ")") {
        ++pos_;
        return inner;
      }
      throw UsageError("missing closing parenthesis");
    }
    ++pos_;
    const std::string& tok = *t;
    if (tok[0] == 'x' || tok[0] == 'd') {
      int idx = parse_index(tok.substr(1), tok);
      if (tok[0] == 'x') {
        if (idx < 1 || idx > rank_) throw UsageError("variable index out of range: " + tok);
        return Element::variable(type_, rank_, idx);
      }
      if (idx < 1 || idx > generator_count(type_, rank_))
        throw UsageError("operator index out of range: " + tok);
      return Element::demazure(type_, rank_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      Element out = Element::unit(type_, rank_);
      out *= Rat(Int(tok));
      return out;
    }
    throw UsageError("unrecognized token: " + tok);
  }

  static int parse_index(const std::string& digits, const std::string& tok) {
    if (digits.empty()) throw UsageError("missing index in token: " + tok);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw UsageError("malformed token: " + tok);
    return std::stoi(digits);
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  WeylType type_;
  int rank_;
};

int run_verify(const std::string& variant, const std::string& type, int rank, int max_degree,
               bool as_json) {
  Report rep;
  rep.command = "verify";
  rep.config = {{"variant", variant}, {"type", type}, {"rank", rank}, {"max_degree", max_degree}};
  rep.checks.push_back(check_relations(to_variant(variant), to_type(type), rank, max_degree));
  return rep.emit(as_json);
}

int run_schubert(const std::string& type, int rank, const std::string& element, bool all,
                 const std::string& format) {
  WeylType t = to_type(type);
  if (t == WeylType::A) throw UsageError("schubert families are defined for types b and d");
  auto fam = SchubertFamily::get(t, rank);
  const WeylGroup& g = fam->group();

  std::vector<int> indices;
  if (all) {
    for (int i = 0; i < g.size(); ++i) indices.push_back(i);
  } else if (!element.empty()) {
    SignedPerm w = element.find('[') != std::string::npos
                       ? parse_window(element, t)
                       : evaluate_word(t, rank, parse_word(element));
    indices.push_back(g.index_of(w));
  } else {
    throw UsageError("schubert requires --all or --element");
  }

  Report rep;
  rep.command = "schubert";
  rep.config = {{"type", type}, {"rank", rank}};
  if (!element.empty()) rep.config["element"] = element;
  rep.config["all"] = all;
  ordered_json polys = ordered_json::array();
  for (int i : indices) {
    std::string word = word_str(g.word(i));
    if (word.empty()) word = "e";
    std::string window = window_str(g.element(i));
    std::string poly = poly_str(fam->poly(i));
    polys.push_back({{"index", i},
                     {"word", word},
                     {"window", window},
                     {"length", g.length(i)},
                     {"polynomial", poly}});
    rep.artifact_lines.push_back(std::to_string(i) + ": word " + word + "  window " + window +
                                 "  s = " + poly);
  }
  rep.payload["polynomials"] = polys;
  return rep.emit(format == "json");
}

template <bool Skew>
int run_lambda_typed(const std::string& variant, const std::string& type, int rank,
                     const std::string& op, int truncate, const std::string& poly_text,
                     bool as_json) {
  WeylType t = to_type(type);
  Report rep;
  rep.command = "lambda";
  rep.config = {{"variant", variant}, {"type", type}, {"rank", rank}, {"op", op}};
  if (op == "series") rep.config["truncate"] = truncate;
  if (!poly_text.empty()) rep.config["poly"] = poly_text;

  if (op == "member") {
    std::vector<std::pair<std::string, BasicPoly<Int, Skew>>> targets;
    if (!poly_text.empty()) {
      targets.emplace_back(poly_text, parse_poly<Int, Skew>(poly_text, rank));
    } else {
      if (Skew && t == WeylType::A) throw UsageError("no skew type a generator set");
      for (int k = 1; k <= rank; ++k)
        targets.emplace_back("e" + std::to_string(k), elementary<Skew>(t, rank, k));
    }
    for (const auto& [label, f] : targets) {
      auto cert = in_lambda(t, rank, f);
      CheckResult c;
      c.id = "lambda/member";
      c.params = "variant=" + variant + " type=" + type + " n=" + std::to_string(rank) +
                 " target=" + label;
      c.pass = cert.member;
      std::string ops;
      for (const auto& [name, killed] : cert.per_op) {
        if (!ops.empty()) ops += ", ";
        ops += name + (killed ? ": annihilates" : ": does NOT annihilate");
      }
      c.details = ops.empty() ? "no operators at this rank" : ops;
      rep.checks.push_back(c);
    }
    return rep.emit(as_json);
  }

  if (op == "express") {
    if (poly_text.empty()) throw UsageError("lambda --op express requires --poly");
    if (Skew && t == WeylType::A) throw UsageError("no skew type a generator set");
    auto f = parse_poly<Int, Skew>(poly_text, rank);
    CheckResult c;
    c.id = "lambda/express";
    c.params = "variant=" + variant + " type=" + type + " n=" + std::to_string(rank);
    try {
      GenExpr g = express_in_elementary<Skew>(t, rank, f);
      bool round = expand_elementary<Skew>(t, rank, g) == f;
      c.pass = round;
      c.details = round ? "expansion reproduces the input" : "expansion mismatch";
      rep.payload["expression"] = g.str();
      rep.artifact_lines.push_back("expression: " + g.str());
    } catch (const NotExpressibleError& e) {
      c.pass = false;
      c.details = std::string("not expressible: ") + e.what();
    }
    rep.checks.push_back(c);
    return rep.emit(as_json);
  }

  if (op == "series") {
    Variant v = to_variant(variant);
    if (v == Variant::spin && t == WeylType::A) throw UsageError("no skew type a generator set");
    QPiSeries enumerated = hilbert_series(v, t, rank, truncate);
    rep.payload["enumerated"] = enumerated.str();
    rep.artifact_lines.push_back("enumerated: " + enumerated.str());
    if (t != WeylType::A) {
      QPiSeries closed = lambda_closed_rank(t, rank, truncate);
      rep.payload["closed"] = closed.str();
      rep.artifact_lines.push_back("closed:     " + closed.str());
      CheckResult c;
      c.id = "lambda/hilbert";
      c.params = "variant=" + variant + " type=" + type + " n=" + std::to_string(rank) +
                 " truncation=" + std::to_string(truncate);
      c.pass = enumerated == closed;
      c.details = c.pass ? "series agree coefficientwise" : "series differ";
      rep.checks.push_back(c);
    }
    return rep.emit(as_json);
  }

  throw UsageError("unknown lambda op: " + op);
}

int run_lambda(const std::string& variant, const std::string& type, int rank,
               const std::string& op, int truncate, const std::string& poly_text, bool as_json) {
  if (to_variant(variant) == Variant::spin)
    return run_lambda_typed<true>(variant, type, rank, op, truncate, poly_text, as_json);
  return run_lambda_typed<false>(variant, type, rank, op, truncate, poly_text, as_json);
}

template <bool Skew>
int run_pbw_typed(const std::string& variant, const std::string& type, int rank,
                  const std::string& expr, bool as_json) {
  auto element = ExprParser<Skew>(expr, to_type(type), rank).parse();
  Report rep;
  rep.command = "pbw";
  rep.config = {{"variant", variant}, {"type", type}, {"rank", rank}, {"expr", expr}};
  rep.payload["normal_form"] = element.str();
  rep.artifact_lines.push_back("normal form: " + element.str());
  ordered_json comps = ordered_json::array();
  for (const auto& [q, part] : element.components()) {
    comps.push_back({{"q_degree", q}, {"element", part.str()}});
    rep.artifact_lines.push_back("q-degree " + std::to_string(q) + ": " + part.str());
  }
  rep.payload["components"] = comps;
  return rep.emit(as_json);
}

int run_pbw(const std::string& variant, const std::string& type, int rank,
            const std::string& expr, bool as_json) {
  if (to_variant(variant) == Variant::spin)
    return run_pbw_typed<true>(variant, type, rank, expr, as_json);
  return run_pbw_typed<false>(variant, type, rank, expr, as_json);
}

template <bool Skew>
int run_matrix_typed(const std::string& variant, const std::string& type, int rank,
                     const std::string& expr, bool as_json) {
  WeylType t = to_type(type);
  auto element = ExprParser<Skew>(expr, t, rank).parse();
  auto m = to_matrix(element);
  Report rep;
  rep.command = "matrix";
  rep.config = {{"variant", variant}, {"type", type}, {"rank", rank}, {"expr", expr}};
  ordered_json rows = ordered_json::array();
  for (const auto& row : m.entries) {
    ordered_json r = ordered_json::array();
    std::string line;
    for (const auto& entry : row) {
      r.push_back(poly_str(entry));
      if (!line.empty()) line += " | ";
      line += poly_str(entry);
    }
    rows.push_back(r);
    rep.artifact_lines.push_back("[ " + line + " ]");
  }
  rep.payload["entries"] = rows;
  if (auto d = m.homogeneous_q_degree()) {
    rep.payload["q_degree"] = *d;
    rep.artifact_lines.push_back("homogeneous of q-degree " + std::to_string(*d));
  }
  return rep.emit(as_json);
}

int run_matrix(const std::string& variant, const std::string& type, int rank,
               const std::string& expr, bool as_json) {
  if (to_variant(variant) == Variant::spin)
    return run_matrix_typed<true>(variant, type, rank, expr, as_json);
  return run_matrix_typed<false>(variant, type, rank, expr, as_json);
}

int run_matrix_units(const std::string& variant, const std::string& type, int rank,
                     const std::string& domain, bool as_json) {
  WeylType t = to_type(type);
  Report rep;
  rep.command = "matrix-units";
  rep.config = {{"variant", variant}, {"type", type}, {"rank", rank}, {"domain", domain}};
  bool spin = to_variant(variant) == Variant::spin;
  if (domain == "int") {
    rep.checks.push_back(spin ? check_matrix_units<Int, true>(t, rank)
                              : check_matrix_units<Int, false>(t, rank));
  } else if (domain == "dyadic") {
    rep.checks.push_back(spin ? check_matrix_units<Dyadic, true>(t, rank)
                              : check_matrix_units<Dyadic, false>(t, rank));
  } else {
    rep.checks.push_back(spin ? check_matrix_units<Rat, true>(t, rank)
                              : check_matrix_units<Rat, false>(t, rank));
  }
  return rep.emit(as_json);
}

int run_center(const std::string& variant, const std::string& type, int rank, int max_degree,
               bool as_json) {
  if (to_variant(variant) != Variant::spin)
    throw UsageError("center characterization is implemented for the skew algebras only");
  WeylType t = to_type(type);
  if (t == WeylType::A) throw UsageError("center characterization covers types b and d");
  Report rep;
  rep.command = "center";
  rep.config = {{"variant", variant}, {"type", type}, {"rank", rank}, {"max_degree", max_degree}};
  rep.checks.push_back(check_center(t, rank, max_degree));
  return rep.emit(as_json);
}

int run_rank_series(const std::string& variant, const std::string& type, int rank, int truncate,
                    bool as_json) {
  Variant v = to_variant(variant);
  WeylType t = to_type(type);
  bool with_pi = v == Variant::spin;
  Report rep;
  rep.command = "rank-series";
  rep.config = {{"variant", variant}, {"type", type}, {"rank", rank}, {"truncate", truncate}};

  QPiSeries nc = graded_rank(RankTarget::NC, v, t, rank, truncate);
  QPiSeries nh = graded_rank(RankTarget::NH, v, t, rank, truncate);
  rep.payload["nil_tower"] = nc.str();
  rep.payload["full_algebra"] = nh.str();
  rep.artifact_lines.push_back("nil tower:    " + nc.str());
  rep.artifact_lines.push_back("full algebra: " + nh.str());
  rep.checks.push_back(check_rank_series(v, t, rank, truncate));
  if (t != WeylType::A && v == Variant::spin) {
    QPiSeries lam = graded_rank(RankTarget::Lambda, v, t, rank, truncate);
    rep.payload["coefficient_ring"] = lam.str();
    rep.artifact_lines.push_back("coefficients: " + lam.str());
    rep.checks.push_back(check_hilbert(t, rank, truncate));
  }
  return rep.emit(as_json);
}

int run_check_all(const std::string& profile, unsigned int seed, bool as_json) {
  Report rep;
  rep.command = "check-all";
  rep.config = {{"profile", profile}, {"seed", seed}};
  if (profile == "quick") {
    rep.checks = run_quick_profile(seed);
    return rep.emit(as_json);
  }
  ordered_json criteria = ordered_json::array();
  bool all_pass = true;
  for (int k = 1; k <= criterion_count; ++k) {
    CriterionResult r = run_criterion(k, seed);
    all_pass = all_pass && r.pass();
    if (as_json) {
      ordered_json checks = ordered_json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"params", c.params},
                          {"pass", c.pass},
                          {"details", c.details},
                          {"gating", c.gating}});
      criteria.push_back(
          {{"number", r.number}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}});
    } else {
      std::cout << "criterion " << r.number << ": " << (r.pass() ? "PASS" : "FAIL") << " - "
                << r.title << "\n";
      for (const auto& c : r.checks)
        std::cout << "  " << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.params << "] "
                  << c.details << (c.gating ? "" : " (probe, non-gating)") << "\n";
      for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
    }
  }
  if (as_json) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = rep.command;
    doc["config"] = rep.config;
    doc["criteria"] = criteria;
    doc["pass"] = all_pass;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "result: " << (all_pass ? "pass" : "fail") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suite for skew polynomial algebras of classical types"};
  app.require_subcommand(1);

  auto variant_check = CLI::IsMember({"spin", "even"});
  auto type_check = CLI::IsMember({"a", "b", "d"});

  std::string variant = "spin", type = "b", format = "text", domain = "rational";
  std::string element, expr, op = "member", poly, profile = "quick";
  int rank = 2, max_degree = 8, truncate = 20, threads = 0;
  unsigned int seed = 20240815;
  bool json = false, all = false;

  auto* verify = app.add_subcommand("verify", "defining relations as operator identities");
  verify->add_option("--variant", variant)->check(variant_check);
  verify->add_option("--type", type)->check(type_check);
  verify->add_option("--rank", rank)->check(CLI::PositiveNumber);
  verify->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", json);

  auto* schubert = app.add_subcommand("schubert", "members of the polynomial family");
  schubert->add_option("--type", type)->check(CLI::IsMember({"b", "d"}));
  schubert->add_option("--rank", rank)->check(CLI::PositiveNumber);
  auto* elem_opt = schubert->add_option("--element", element, "word \"s1 s2\" or window \"[2,-1]\"");
  schubert->add_flag("--all", all)->excludes(elem_opt);
  schubert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* lambda = app.add_subcommand("lambda", "symmetric subring computations");
  lambda->add_option("--variant", variant)->check(variant_check);
  lambda->add_option("--type", type)->check(type_check);
  lambda->add_option("--rank", rank)->check(CLI::PositiveNumber);
  lambda->add_option("--op", op)->check(CLI::IsMember({"member", "express", "series"}));
  lambda->add_option("--truncate", truncate)->check(CLI::NonNegativeNumber);
  lambda->add_option("--poly", poly, "polynomial such as \"x1^2 + x2^2\"");
  lambda->add_flag("--json", json);

  auto* pbw = app.add_subcommand("pbw", "normal form of an operator expression");
  pbw->add_option("--variant", variant)->check(variant_check);
  pbw->add_option("--type", type)->check(type_check);
  pbw->add_option("--rank", rank)->check(CLI::PositiveNumber);
  pbw->add_option("--expr", expr, "operator word in x<i>, d<i>")->required();
  pbw->add_flag("--json", json);

  auto* matrix = app.add_subcommand("matrix", "matrix of an operator expression");
  matrix->add_option("--variant", variant)->check(variant_check);
  matrix->add_option("--type", type)->check(type_check);
  matrix->add_option("--rank", rank)->check(CLI::PositiveNumber);
  matrix->add_option("--expr", expr, "operator word in x<i>, d<i>")->required();
  matrix->add_flag("--json", json);

  auto* units = app.add_subcommand("matrix-units", "solvability of all constant matrix units");
  units->add_option("--variant", variant)->check(variant_check);
  units->add_option("--type", type)->check(type_check);
  units->add_option("--rank", rank)->check(CLI::PositiveNumber);
  units->add_option("--domain", domain)->check(CLI::IsMember({"int", "dyadic", "rational"}));
  units->add_option("--threads", threads)->check(CLI::NonNegativeNumber);
  units->add_flag("--json", json);

  auto* center = app.add_subcommand("center", "center characterization in both directions");
  center->add_option("--variant", variant)->check(variant_check);
  center->add_option("--type", type)->check(type_check);
  center->add_option("--rank", rank)->check(CLI::PositiveNumber);
  center->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
  center->add_flag("--json", json);

  auto* ranks = app.add_subcommand("rank-series", "graded rank series against closed forms");
  ranks->add_option("--variant", variant)->check(variant_check);
  ranks->add_option("--type", type)->check(type_check);
  ranks->add_option("--rank", rank)->check(CLI::PositiveNumber);
  ranks->add_option("--truncate", truncate)->check(CLI::NonNegativeNumber);
  ranks->add_flag("--json", json);

  auto* all_cmd = app.add_subcommand("check-all", "the full verification battery");
  all_cmd->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  all_cmd->add_option("--seed", seed);
  all_cmd->add_option("--threads", threads)->check(CLI::NonNegativeNumber);
  all_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (threads > 0) setenv("SPIN_NH_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (verify->parsed()) return run_verify(variant, type, rank, max_degree, json);
    if (schubert->parsed()) return run_schubert(type, rank, element, all, format);
    if (lambda->parsed()) return run_lambda(variant, type, rank, op, truncate, poly, json);
    if (pbw->parsed()) return run_pbw(variant, type, rank, expr, json);
    if (matrix->parsed()) return run_matrix(variant, type, rank, expr, json);
    if (units->parsed()) return run_matrix_units(variant, type, rank, domain, json);
    if (center->parsed()) return run_center(variant, type, rank, max_degree, json);
    if (ranks->parsed()) return run_rank_series(variant, type, rank, truncate, json);
    if (all_cmd->parsed()) return run_check_all(profile, seed, json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
