#include "gauge2/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gauge2 {

namespace {

constexpr unsigned kMaxInputDegree = 8;

std::vector<std::string> split_ws(const std::string& line)
{
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line)
{
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

Rational parse_rational_or_throw(const std::string& tok, int line)
{
  auto r = parse_rational(tok);
  if (!r) throw ScenarioError(line, 1, "malformed rational '" + tok + "'");
  return *r;
}

int parse_int_or_throw(const std::string& tok, int line, const std::string& what)
{
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ScenarioError(line, 1, "malformed " + what + " '" + tok + "'");
  }
}

/// Tokens of one `+`-separated term list.
std::vector<std::vector<std::string>> split_terms(const std::vector<std::string>& toks)
{
  std::vector<std::vector<std::string>> terms(1);
  for (const auto& t : toks) {
    if (t == "+") {
      terms.emplace_back();
    } else {
      terms.back().push_back(t);
    }
  }
  return terms;
}

ParsedTerm parse_term(const std::vector<std::string>& toks, int nx, bool allow_covectors, int line)
{
  if (toks.empty()) throw ScenarioError(line, 1, "empty term");
  ParsedTerm term;
  term.coefficient = parse_rational_or_throw(toks[0], line);
  term.exponents.assign(nx + 2, 0);
  unsigned total_degree = 0;
  bool seen_covector = false;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const std::string& tok = toks[i];
    if (tok.rfind("dx", 0) == 0) {
      if (!allow_covectors) throw ScenarioError(line, 1, "covector not allowed here: " + tok);
      const int idx = parse_int_or_throw(tok.substr(2), line, "covector index");
      if (idx < 1 || idx > nx)
        throw ScenarioError(line, 1, "covector index out of range: " + tok);
      term.covectors.push_back(idx - 1);
      seen_covector = true;
    } else if (tok.rfind("x", 0) == 0) {
      if (seen_covector) throw ScenarioError(line, 1, "variables must precede covectors");
      std::string body = tok.substr(1);
      unsigned exp = 1;
      const auto caret = body.find('^');
      if (caret != std::string::npos) {
        exp = static_cast<unsigned>(parse_int_or_throw(body.substr(caret + 1), line, "exponent"));
        body = body.substr(0, caret);
      }
      const int idx = parse_int_or_throw(body, line, "variable index");
      if (idx < 1 || idx > nx)
        throw ScenarioError(line, 1, "variable index out of range: " + tok);
      term.exponents[idx - 1] = static_cast<unsigned char>(term.exponents[idx - 1] + exp);
      total_degree += exp;
    } else {
      throw ScenarioError(line, 1, "unexpected token '" + tok + "'");
    }
  }
  if (total_degree > kMaxInputDegree)
    throw ScenarioError(line, 1, "degree overflow: polynomial degree > " +
                                     std::to_string(kMaxInputDegree));
  return term;
}

ScalarForm parse_form_terms(const std::vector<std::string>& toks, Chart chart, int degree,
                            int line)
{
  ScalarForm f(chart, degree);
  for (const auto& term_toks : split_terms(toks)) {
    ParsedTerm term = parse_term(term_toks, chart.dim, true, line);
    if (static_cast<int>(term.covectors.size()) != degree)
      throw ScenarioError(line, 1, "expected a degree-" + std::to_string(degree) + " term");
    f.add_term(term.covectors,
               Polynomial::monomial(chart.dim, term.exponents, term.coefficient));
  }
  return f;
}

Polynomial parse_poly_terms(const std::vector<std::string>& toks, int nx, int line)
{
  Polynomial p(nx);
  for (const auto& term_toks : split_terms(toks)) {
    ParsedTerm term = parse_term(term_toks, nx, false, line);
    p.add_term(term.exponents, term.coefficient);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Algebra definition files
// ---------------------------------------------------------------------------

struct RawAlgebra {
  std::string name;
  std::vector<std::string> labels;
  std::map<std::vector<int>, Rational> structure; // (a,b,k) 0-based
  std::map<std::vector<int>, Rational> rep;       // (basis, row, col)
  int rep_size = 0;
};

struct TensorEntry {
  std::vector<int> indices;
  Rational value;
  int line;
};

} // namespace

AlgebraFile parse_algebra_file(const std::string& text)
{
  RawAlgebra g, h;
  std::map<std::vector<int>, Rational> alpha_entries;  // (g,h) 0-based
  std::map<std::vector<int>, Rational> action_entries; // (a,c,b) 0-based
  std::map<int, std::map<std::vector<int>, Rational>> pairing_entries;
  std::set<std::string> assigned;

  std::string section;
  int pairing_arity = 0;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == '[') {
      std::string joined;
      for (const auto& t : toks) joined += (joined.empty() ? "" : " ") + t;
      if (joined == "[g]" || joined == "[h]" || joined == "[alpha]" || joined == "[action]") {
        section = joined.substr(1, joined.size() - 2);
      } else if (joined.rfind("[pairing", 0) == 0 && joined.back() == ']') {
        std::string args = joined.substr(8, joined.size() - 9);
        auto eq = args.find("n=");
        if (eq == std::string::npos)
          throw ScenarioError(lineno, 1, "pairing section needs n=<int>");
        pairing_arity = parse_int_or_throw(args.substr(eq + 2), lineno, "pairing arity");
        if (pairing_arity < 1) throw ScenarioError(lineno, 1, "pairing arity must be positive");
        section = "pairing";
      } else {
        throw ScenarioError(lineno, 1, "unknown section " + joined);
      }
      continue;
    }
    if (section.empty()) throw ScenarioError(lineno, 1, "entry before any section");

    RawAlgebra* alg = section == "g" ? &g : (section == "h" ? &h : nullptr);
    if (alg && toks[0] == "name") {
      if (toks.size() < 2) throw ScenarioError(lineno, 1, "name needs a value");
      alg->name = toks[1];
      continue;
    }
    if (alg && toks[0] == "labels") {
      if (toks.size() < 2) throw ScenarioError(lineno, 1, "labels needs at least one entry");
      alg->labels.assign(toks.begin() + 1, toks.end());
      continue;
    }

    // Everything else: `<tag?> indices... = value`.
    auto eq = std::find(toks.begin(), toks.end(), "=");
    if (eq == toks.end()) throw ScenarioError(lineno, 1, "expected '=' in entry");
    if (eq + 1 == toks.end() || eq + 2 != toks.end())
      throw ScenarioError(lineno, 1, "expected a single value after '='");
    const Rational value = parse_rational_or_throw(*(eq + 1), lineno);

    std::vector<std::string> head(toks.begin(), eq);
    std::string tag;
    if (!head.empty() && (head[0] == "c" || head[0] == "rep")) {
      tag = head[0];
      head.erase(head.begin());
    }
    std::vector<int> idx;
    for (const auto& t : head) idx.push_back(parse_int_or_throw(t, lineno, "index") - 1);
    for (int i : idx)
      if (i < 0) throw ScenarioError(lineno, 1, "indices are 1-based");

    const std::string key = section + "/" + tag + "/" +
                            [&] {
                              std::string s;
                              for (int i : idx) s += std::to_string(i) + ",";
                              return s;
                            }() +
                            (section == "pairing" ? std::to_string(pairing_arity) : "");
    if (!assigned.insert(key).second)
      throw ScenarioError(lineno, 1, "duplicate assignment");

    if (alg) {
      if (tag == "c") {
        if (idx.size() != 3) throw ScenarioError(lineno, 1, "c entries take three indices");
        alg->structure[idx] = value;
      } else if (tag == "rep") {
        if (idx.size() != 3)
          throw ScenarioError(lineno, 1, "rep entries take basis, row, col");
        alg->rep[idx] = value;
        alg->rep_size = std::max(alg->rep_size, std::max(idx[1], idx[2]) + 1);
      } else {
        throw ScenarioError(lineno, 1, "algebra entries must be tagged c or rep");
      }
    } else if (section == "alpha") {
      if (idx.size() != 2) throw ScenarioError(lineno, 1, "alpha entries take two indices");
      alpha_entries[idx] = value;
    } else if (section == "action") {
      if (idx.size() != 3)
        throw ScenarioError(lineno, 1, "action entries take a, c, b indices");
      action_entries[idx] = value;
    } else if (section == "pairing") {
      if (static_cast<int>(idx.size()) != pairing_arity + 1)
        throw ScenarioError(lineno, 1, "pairing entries take n g-indices and one h-index");
      pairing_entries[pairing_arity][idx] = value;
    }
  }

  if (g.labels.empty()) throw ScenarioError(lineno, 1, "[g] section with labels required");
  if (h.labels.empty()) throw ScenarioError(lineno, 1, "[h] section with labels required");

  auto build = [&](RawAlgebra& raw_alg, const std::string& fallback) {
    LieAlgebra alg(raw_alg.name.empty() ? fallback : raw_alg.name, raw_alg.labels);
    const int dim = alg.dim();
    for (const auto& [idx, v] : raw_alg.structure) {
      if (idx[0] >= dim || idx[1] >= dim || idx[2] >= dim)
        throw ScenarioError(1, 1, "structure constant index out of range");
      alg.set_structure_constant(idx[0], idx[1], idx[2], v);
    }
    if (!raw_alg.rep.empty()) {
      std::vector<RatMatrix> rep(dim, RatMatrix(raw_alg.rep_size, raw_alg.rep_size));
      for (const auto& [idx, v] : raw_alg.rep) {
        if (idx[0] >= dim) throw ScenarioError(1, 1, "rep basis index out of range");
        rep[idx[0]].at(idx[1], idx[2]) = v;
      }
      alg.set_representation(std::move(rep));
    }
    return alg;
  };

  LieAlgebra galg = build(g, "g");
  LieAlgebra halg = build(h, "h");
  const int dg = galg.dim(), dh = halg.dim();

  RatMatrix alpha(dg, dh);
  for (const auto& [idx, v] : alpha_entries) {
    if (idx[0] >= dg || idx[1] >= dh) throw ScenarioError(1, 1, "alpha index out of range");
    alpha.at(idx[0], idx[1]) = v;
  }

  auto cm = std::make_shared<CrossedModule>("custom", std::move(galg), std::move(halg), alpha);
  for (const auto& [idx, v] : action_entries) {
    if (idx[0] >= dg || idx[1] >= dh || idx[2] >= dh)
      throw ScenarioError(1, 1, "action index out of range");
    cm->set_action(idx[0], idx[1], idx[2], v);
  }
  cm->finalize();

  AlgebraFile out;
  out.cm = cm;
  for (const auto& [arity, entries] : pairing_entries) {
    InvariantPairing p(arity, dg, dh);
    for (const auto& [idx, v] : entries) {
      std::vector<int> gidx(idx.begin(), idx.end() - 1);
      for (int i : gidx)
        if (i >= dg) throw ScenarioError(1, 1, "pairing g-index out of range");
      if (idx.back() >= dh) throw ScenarioError(1, 1, "pairing h-index out of range");
      p.set(gidx, idx.back(), v);
    }
    out.pairings.emplace_back(arity, std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scenario documents
// ---------------------------------------------------------------------------

namespace {

struct FormAccumulator {
  std::map<std::string, std::pair<std::vector<std::string>, int>> lines; // label -> (tokens, line)

  void add(const std::string& label, std::vector<std::string> toks, int line)
  {
    if (lines.count(label))
      throw ScenarioError(line, 1, "duplicate assignment for '" + label + "'");
    lines[label] = {std::move(toks), line};
  }

  bool empty() const { return lines.empty(); }
};

AlgebraForm build_algebra_form(const FormAccumulator& acc, const CrossedModulePtr& cm, Side side,
                               Chart chart, int degree, const std::string& what)
{
  const LieAlgebra& alg = side == Side::G ? cm->g() : cm->h();
  AlgebraForm f(cm, side, chart, degree);
  for (const auto& [label, entry] : acc.lines) {
    const auto idx = alg.index_of(label);
    if (!idx)
      throw ScenarioError(entry.second, 1,
                          "unknown basis label " + label + " in " + what + " block");
    f.set_component(*idx, parse_form_terms(entry.first, chart, degree, entry.second));
  }
  return f;
}

struct MatrixAccumulator {
  std::map<std::pair<int, int>, std::pair<std::vector<std::string>, int>> entries;

  void add(int i, int j, std::vector<std::string> toks, int line)
  {
    if (entries.count({i, j})) throw ScenarioError(line, 1, "duplicate assignment");
    entries[{i, j}] = {std::move(toks), line};
  }

  bool empty() const { return entries.empty(); }

  PolyMatrix build(int size, int nx, bool identity_default) const
  {
    PolyMatrix m(size, size, Polynomial(nx));
    if (identity_default)
      for (int i = 0; i < size; ++i) m.at(i, i) = Polynomial::constant(nx, 1);
    for (const auto& [pos, entry] : entries) {
      if (pos.first < 0 || pos.first >= size || pos.second < 0 || pos.second >= size)
        throw ScenarioError(entry.second, 1, "matrix index out of range");
      m.at(pos.first, pos.second) = parse_poly_terms(entry.first, nx, entry.second);
    }
    return m;
  }
};

} // namespace

Box Scenario::box_or_unit() const
{
  if (box) return *box;
  return Box(chart.dim, {Rational(0), Rational(1)});
}

Scenario parse_scenario(const std::string& text, const FileLoader& loader)
{
  std::optional<std::string> module_name;
  std::optional<std::string> module_file;
  std::optional<int> dim;
  int n = 1;
  std::uint64_t seed = 0;
  int trials = 25;
  int module_line = 1;

  FormAccumulator a1, b1, a0, b0, phi, da0, db0, da1, db1;
  MatrixAccumulator gmat, ginv, gact;
  std::map<int, std::pair<std::pair<Rational, Rational>, int>> box_entries;
  bool has_gauge = false, has_variation = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    auto form_line = [&](FormAccumulator& acc) {
      if (toks.size() < 4 || toks[2] != ":")
        throw ScenarioError(lineno, 1, head + " lines read '" + head + " <label> : <terms>'");
      acc.add(toks[1], std::vector<std::string>(toks.begin() + 3, toks.end()), lineno);
    };
    auto matrix_line = [&](MatrixAccumulator& acc) {
      if (toks.size() < 5 || toks[3] != "=")
        throw ScenarioError(lineno, 1, head + " lines read '" + head + " <row> <col> = <poly>'");
      const int i = parse_int_or_throw(toks[1], lineno, "row index") - 1;
      const int j = parse_int_or_throw(toks[2], lineno, "col index") - 1;
      acc.add(i, j, std::vector<std::string>(toks.begin() + 4, toks.end()), lineno);
      has_gauge = true;
    };

    if (head == "module") {
      if (toks.size() == 2) {
        module_name = toks[1];
      } else if (toks.size() == 3 && toks[1] == "file") {
        module_name = "file";
        module_file = toks[2];
      } else {
        throw ScenarioError(lineno, 1, "module takes a builtin name or 'file <path>'");
      }
      module_line = lineno;
    } else if (head == "dim") {
      if (toks.size() != 2) throw ScenarioError(lineno, 1, "dim takes one integer");
      dim = parse_int_or_throw(toks[1], lineno, "dimension");
    } else if (head == "n") {
      if (toks.size() != 2) throw ScenarioError(lineno, 1, "n takes one integer");
      n = parse_int_or_throw(toks[1], lineno, "arity");
      if (n < 1) throw ScenarioError(lineno, 1, "n must be positive");
    } else if (head == "seed") {
      if (toks.size() != 2) throw ScenarioError(lineno, 1, "seed takes one integer");
      try {
        seed = std::stoull(toks[1]);
      } catch (const std::exception&) {
        throw ScenarioError(lineno, 1, "malformed seed '" + toks[1] + "'");
      }
    } else if (head == "trials") {
      if (toks.size() != 2) throw ScenarioError(lineno, 1, "trials takes one integer");
      trials = parse_int_or_throw(toks[1], lineno, "trial count");
      if (trials < 1) throw ScenarioError(lineno, 1, "trials must be positive");
    } else if (head == "A" || head == "A1") {
      form_line(a1);
    } else if (head == "B" || head == "B1") {
      form_line(b1);
    } else if (head == "A0") {
      form_line(a0);
    } else if (head == "B0") {
      form_line(b0);
    } else if (head == "phi") {
      form_line(phi);
      has_gauge = true;
    } else if (head == "dA0") {
      form_line(da0);
      has_variation = true;
    } else if (head == "dB0") {
      form_line(db0);
      has_variation = true;
    } else if (head == "dA1") {
      form_line(da1);
      has_variation = true;
    } else if (head == "dB1") {
      form_line(db1);
      has_variation = true;
    } else if (head == "g") {
      matrix_line(gmat);
    } else if (head == "ginv") {
      matrix_line(ginv);
    } else if (head == "gact") {
      matrix_line(gact);
    } else if (head == "box") {
      if (toks.size() != 5 || toks[2] != ":" || toks[1].rfind("x", 0) != 0)
        throw ScenarioError(lineno, 1, "box lines read 'box x<i> : <lo> <hi>'");
      const int idx = parse_int_or_throw(toks[1].substr(1), lineno, "coordinate index") - 1;
      if (box_entries.count(idx)) throw ScenarioError(lineno, 1, "duplicate assignment");
      box_entries[idx] = {{parse_rational_or_throw(toks[3], lineno),
                           parse_rational_or_throw(toks[4], lineno)},
                          lineno};
    } else {
      throw ScenarioError(lineno, 1, "unknown directive '" + head + "'");
    }
  }

  if (!module_name) throw ScenarioError(1, 1, "missing 'module' directive");
  if (!dim) throw ScenarioError(1, 1, "missing 'dim' directive");

  Scenario sc;
  try {
    sc.chart = Chart(*dim);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(1, 1, e.what());
  }
  sc.n = n;
  sc.seed = seed;
  sc.trials = trials;

  if (*module_name == "file") {
    FileLoader load = loader;
    if (!load)
      load = [](const std::string& path) {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open algebra file " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
      };
    std::string content;
    try {
      content = load(*module_file);
    } catch (const std::exception& e) {
      throw ScenarioError(module_line, 1, e.what());
    }
    AlgebraFile af = parse_algebra_file(content);
    sc.cm = af.cm;
    sc.module_name = "file:" + *module_file;
    for (auto& [arity, p] : af.pairings)
      if (arity == n) sc.pairing = std::move(p);
    if (!sc.pairing)
      throw ScenarioError(module_line, 1,
                          "algebra file carries no pairing of arity " + std::to_string(n));
  } else {
    if (!is_builtin(*module_name))
      throw ScenarioError(module_line, 1, "unknown module '" + *module_name + "'");
    auto [cm, default_pairing] = load_builtin(*module_name);
    sc.cm = cm;
    sc.module_name = *module_name;
    try {
      sc.pairing = builtin_pairing(*module_name, *cm, n);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(module_line, 1, e.what());
    }
  }

  const auto build_conn = [&](FormAccumulator& fa, FormAccumulator& fb, const char* what) {
    AlgebraForm A = build_algebra_form(fa, sc.cm, Side::G, sc.chart, 1, what);
    AlgebraForm B = build_algebra_form(fb, sc.cm, Side::H, sc.chart, 2, what);
    return TwoConnection(std::move(A), std::move(B));
  };

  if (!a1.empty() || !b1.empty()) sc.conn1 = build_conn(a1, b1, "connection");
  if (!a0.empty() || !b0.empty()) sc.conn0 = build_conn(a0, b0, "base connection");

  if (has_gauge) {
    if (!sc.cm->has_representation())
      throw ScenarioError(1, 1, "gauge blocks need a module with a matrix representation");
    const int d = sc.cm->g().rep_size();
    AlgebraForm phif = build_algebra_form(phi, sc.cm, Side::H, sc.chart, 1, "phi");
    PolyMatrix gm = gmat.build(d, sc.chart.dim, true);
    PolyMatrix gi = ginv.build(d, sc.chart.dim, true);
    PolyMatrix ga = gact.build(sc.cm->h().dim(), sc.chart.dim, true);
    try {
      sc.gauge = GaugeData(sc.cm, sc.chart, std::move(gm), std::move(gi), std::move(ga),
                           std::move(phif));
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(1, 1, std::string("gauge block: ") + e.what());
    }
  }

  if (has_variation) {
    AlgebraForm va0 = build_algebra_form(da0, sc.cm, Side::G, sc.chart, 1, "dA0");
    AlgebraForm vb0 = build_algebra_form(db0, sc.cm, Side::H, sc.chart, 2, "dB0");
    AlgebraForm va1 = build_algebra_form(da1, sc.cm, Side::G, sc.chart, 1, "dA1");
    AlgebraForm vb1 = build_algebra_form(db1, sc.cm, Side::H, sc.chart, 2, "dB1");
    sc.variation =
        VariationData(std::move(va0), std::move(vb0), std::move(va1), std::move(vb1));
  }

  if (!box_entries.empty()) {
    Box box(sc.chart.dim, {Rational(0), Rational(1)});
    for (const auto& [idx, entry] : box_entries) {
      if (idx < 0 || idx >= sc.chart.dim)
        throw ScenarioError(entry.second, 1, "box coordinate out of range");
      box[idx] = entry.first;
    }
    sc.box = std::move(box);
  }

  return sc;
}

Scenario load_scenario_file(const std::string& path)
{
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open scenario file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  return parse_scenario(ss.str(), [&base](const std::string& rel) {
    std::filesystem::path p(rel);
    if (p.is_relative()) p = base / p;
    std::ifstream af(p);
    if (!af) throw std::runtime_error("cannot open algebra file " + p.string());
    std::ostringstream as;
    as << af.rdbuf();
    return as.str();
  });
}

} // namespace gauge2
