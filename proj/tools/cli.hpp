#pragma once

#include "groupeq/classifier.hpp"
#include "groupeq/constructions.hpp"
#include "groupeq/parser.hpp"
#include "groupeq/reducer.hpp"
#include "groupeq/smith.hpp"
#include "groupeq/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace groupeq::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kInputError = 1, kPrecondition = 2, kVerificationFailed = 3 };

enum class Format { text, json };

struct RunConfig {
  std::string command;         // classify | reduce | solve | verify | snf
  std::string target;          // verify: prop1a | prop1b | lemma1
  std::vector<std::string> inputs;
  Format format = Format::text;
  std::size_t max_closure = kDefaultClosureCap;
  std::size_t max_unknowns = kDefaultMaxUnknowns;
  std::size_t minor_budget = kDefaultMinorBudget;
  std::uint64_t seed = 1;
  std::string group = "f7-42";             // solve / verify lemma1
  std::int64_t prime = 7;                  // solve --group custom
  std::vector<std::string> generators;     // solve --group custom, "u,v"
  std::vector<std::string> assignments;    // solve, "name=u,v"

  void validate() const {
    if (max_closure == 0 || max_unknowns == 0 || minor_budget == 0)
      throw std::invalid_argument("caps must be positive");
  }
};

struct RunResult {
  int exit_code = kOk;
  std::string output;
};

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

template <class Range>
json integer_array(const Range& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(Integer(x)));
  return a;
}

inline json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(integer_array(m.row(i)));
  return a;
}

inline json to_json(const Matrix<LaurentPoly>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& p : m.row(i)) row.push_back(to_string(p));
    a.push_back(std::move(row));
  }
  return a;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string join(const json& arr, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

inline json system_json(const EquationSystem& sys) {
  json eqs = json::array();
  for (const auto& w : sys.equations()) eqs.push_back(to_string(w));
  return {{"unknowns", sys.table().unknowns()}, {"coefficients", sys.table().coefficients()}, {"equations", eqs}};
}

// --- classify ---------------------------------------------------------------

inline json verdict_json(const Verdict& v) {
  return {{"verdict", to_string(v.kind)},
          {"rank", v.rank},
          {"factors", integer_array(v.invariant_factors)},
          {"bad_primes", integer_array(v.bad_primes)}};
}

inline std::string verdict_text(const json& j) {
  std::string s = j["verdict"].get<std::string>() + " (rank " + j["rank"].dump() + ", factors [" +
                  join(j["factors"]) + "]";
  if (!j["bad_primes"].empty()) s += ", bad primes [" + join(j["bad_primes"]) + "]";
  return s + ")";
}

// --- reduce -----------------------------------------------------------------

inline SplitExtensionSpec spec_from(const ProblemFile& pf) {
  SplitExtensionSpec spec;
  spec.rank = pf.aimages.empty() ? 1 : pf.aimages.begin()->second.size();
  spec.coefficient_images = pf.aimages;
  for (const auto& c : pf.system.table().coefficients())
    if (!spec.coefficient_images.contains(c))
      throw PreconditionError("coefficient '" + c + "' has no aimage line");
  return spec;
}

inline json reduction_json(const Reduction& r) {
  const auto& cert = r.certificate;
  json images = json::object();
  for (const auto& [name, v] : r.spec.coefficient_images) images[name] = integer_array(v);
  json solution = nullptr;
  if (r.solution) {
    solution = json::object();
    const auto& xs = r.system.table().unknowns();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      json v = json::array();
      for (const auto& q : r.solution->values[j]) v.push_back(to_string(q));
      solution[xs[j]] = v;
    }
  }
  json words = json::array();
  for (const auto& w : r.rewritten.words) words.push_back(to_string(w));
  json witness = nullptr;
  if (cert.witness_minor)
    witness = {{"rows", cert.witness_minor->rows},
               {"cols", cert.witness_minor->cols},
               {"determinant", to_string(cert.witness_minor->determinant)},
               {"augmentation", to_json(cert.witness_minor->determinant.augmentation())}};
  return {{"verdict", to_string(cert.verdict)},
          {"system", system_json(r.system)},
          {"spec", {{"rank", r.spec.rank}, {"images", images}}},
          {"solution", solution},
          {"scale", to_json(r.rewritten.scale)},
          {"rewritten_words", words},
          {"integer_matrix", to_json(cert.integer_matrix)},
          {"integer_rank", cert.integer_rank},
          {"laurent_matrix", to_json(cert.laurent_matrix)},
          {"witness_minor", witness}};
}

inline std::string reduction_text(const json& j) {
  std::ostringstream o;
  o << "verdict: " << j["verdict"].get<std::string>() << "\n";
  o << "scale: " << j["scale"].dump() << "\n";
  if (!j["solution"].is_null())
    for (const auto& [name, v] : j["solution"].items()) o << "offset " << name << ": [" << join(v) << "]\n";
  for (const auto& w : j["rewritten_words"]) o << "v: " << w.get<std::string>() << "\n";
  for (const auto& row : j["laurent_matrix"]) o << "laurent row: [" << join(row) << "]\n";
  for (const auto& row : j["integer_matrix"]) o << "augmentation row: [" << join(row) << "]\n";
  o << "integer rank: " << j["integer_rank"].dump() << "\n";
  if (j["witness_minor"].is_null())
    o << "witness minor: none\n";
  else
    o << "witness minor: " << j["witness_minor"]["determinant"].get<std::string>() << " (cols ["
      << join(j["witness_minor"]["cols"]) << "], augmentation " << j["witness_minor"]["augmentation"].dump()
      << ")\n";
  return o.str();
}

// --- solve ------------------------------------------------------------------

inline FpTriangular parse_triangular(const std::string& text, std::int64_t p) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected 'u,v', got '" + text + "'");
  try {
    return fp_triangular(p, std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad triangular element '" + text + "'");
  }
}

inline json solve_json(const RunConfig& cfg, const EquationSystem& sys) {
  std::int64_t p = cfg.group == "f7-42" ? kF7 : cfg.prime;
  std::vector<FpTriangular> gens;
  std::map<std::string, FpTriangular> coeffs;
  if (cfg.group == "f7-42") {
    gens = {f7_a(), f7_c()};
    coeffs = {{"a", f7_a()}, {"c", f7_c()}};
  } else if (cfg.group == "custom") {
    for (const auto& g : cfg.generators) gens.push_back(parse_triangular(g, p));
    if (gens.empty()) throw std::invalid_argument("--group custom needs at least one --gen");
  } else {
    throw std::invalid_argument("unknown group '" + cfg.group + "' (expected f7-42 or custom)");
  }
  for (const auto& a : cfg.assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected NAME=u,v in --assign");
    coeffs.insert_or_assign(a.substr(0, eq), parse_triangular(a.substr(eq + 1), p));
  }
  const auto g = group_closure(gens, cfg.max_closure);
  const auto sols = brute_force_solve(sys, g, coeffs, cfg.max_unknowns);
  json list = json::array();
  for (const auto& s : sols) {
    json o = json::object();
    for (const auto& [name, v] : s) o[name] = to_string(v);
    list.push_back(o);
  }
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < sys.table().unknowns().size(); ++i) candidates *= g.size();
  return {{"group", cfg.group}, {"order", g.size()}, {"candidates", candidates}, {"solutions", list}};
}

inline std::string solve_text(const json& j) {
  std::ostringstream o;
  o << "group=" << j["group"].get<std::string>() << " order=" << j["order"].dump()
    << " candidates=" << j["candidates"].dump() << " solutions=" << j["solutions"].size() << "\n";
  for (const auto& s : j["solutions"]) {
    std::string line;
    for (const auto& [name, v] : s.items()) line += (line.empty() ? "" : " ") + name + "=" + v.get<std::string>();
    o << line << "\n";
  }
  return o.str();
}

// --- verify -----------------------------------------------------------------

inline json prop1a_json(const RunConfig& cfg) {
  auto r = verify_finite_counterexample(cfg.max_closure, cfg.max_unknowns);
  return {{"check", "prop1a"},
          {"order", r.order},
          {"derived_order", r.derived_order},
          {"metabelian", r.metabelian},
          {"a6_identity", r.a6_identity},
          {"c_is_commutator", r.c_is_commutator},
          {"c_in_derived", r.c_in_derived},
          {"obstruction", to_string(r.obstruction)},
          {"obstruction_nontrivial", r.obstruction_nontrivial},
          {"candidates", r.candidates},
          {"solutions", r.solutions},
          {"pass", r.pass()}};
}

inline json prop1b_json(const RunConfig& cfg) {
  auto r = verify_torsion_free_example(cfg.seed);
  return {{"check", "prop1b"},
          {"obstruction_u", to_string(r.obstruction.g().u())},
          {"obstruction", to_string(r.obstruction)},
          {"obstruction_matches", r.obstruction_matches},
          {"obstruction_nontrivial", r.obstruction_nontrivial},
          {"a6_is_f", r.a6_is_f},
          {"de_commutator_is_f", r.de_commutator_is_f},
          {"f_central", r.f_central},
          {"c_is_commutator", r.c_is_commutator},
          {"identity_hypotheses", r.hypotheses_in_derived},
          {"derived_sample_abelian", r.derived_sample_abelian},
          {"torsion_samples", r.torsion_samples},
          {"torsion_max_power", r.torsion_max_power},
          {"torsion_failures", r.torsion_failures},
          {"series_ranks", {r.rank_top, r.rank_middle, r.rank_base}},
          {"series_checks", r.series_checks},
          {"seed", cfg.seed},
          {"pass", r.pass()}};
}

inline json lemma1_json(const RunConfig& cfg) {
  auto g = named_group(cfg.group, cfg.max_closure);
  Lemma1Report r = std::visit([](const auto& table) { return lemma1_exhaustive(table); }, g);
  json viol = json::array();
  for (const auto& [x, y] : r.violations) viol.push_back({x, y});
  return {{"check", "lemma1"},
          {"group", cfg.group},
          {"order", r.group_order},
          {"pairs", r.pairs_tested},
          {"hypothesis_pairs", r.hypothesis_pairs},
          {"violations", viol},
          {"literal_hypothesis_pairs", r.literal_hypothesis_pairs},
          {"literal_violations", r.literal_violations},
          {"pass", r.violations.empty()}};
}

inline std::string flat_text(const json& j) {
  std::string s;
  for (const auto& [k, v] : j.items()) {
    if (!s.empty()) s += " ";
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s + "\n";
}

// --- snf --------------------------------------------------------------------

inline json snf_json(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  return {{"factors", integer_array(snf.factors)},
          {"rank", snf.factors.size()},
          {"S", to_json(snf.S)},
          {"U", to_json(snf.U)},
          {"V", to_json(snf.V)}};
}

inline std::string snf_text(const json& j) {
  std::ostringstream o;
  o << "factors: " << join(j["factors"]) << "\n";
  o << "rank: " << j["rank"].dump() << "\n";
  for (const char* key : {"S", "U", "V"}) o << key << ": " << j[key].dump() << "\n";
  return o.str();
}

// ---------------------------------------------------------------------------

inline RunResult render(const RunConfig& cfg, const json& j, std::string text, int code = kOk) {
  return {code, cfg.format == Format::json ? j.dump() + "\n" : std::move(text)};
}

inline RunResult dispatch(const RunConfig& cfg) {
  try {
    cfg.validate();
    auto need_input = [&]() -> const std::string& {
      if (cfg.inputs.empty()) throw std::invalid_argument(cfg.command + " needs an input FILE");
      return cfg.inputs.front();
    };
    if (cfg.command == "classify") {
      auto pf = parse_problem(read_file(need_input()));
      json j = verdict_json(classify(pf.system));
      return render(cfg, j, verdict_text(j) + "\n");
    }
    if (cfg.command == "reduce") {
      auto pf = parse_problem(read_file(need_input()));
      Reduction r = reduce(pf.system, spec_from(pf), cfg.minor_budget);
      json j = reduction_json(r);
      // A singular system still gets its (NotCertified) document.
      int code = r.solution ? kOk : kPrecondition;
      return render(cfg, j, reduction_text(j), code);
    }
    if (cfg.command == "solve") {
      auto pf = parse_problem(read_file(need_input()));
      json j = solve_json(cfg, pf.system);
      return render(cfg, j, solve_text(j));
    }
    if (cfg.command == "snf") {
      json j = snf_json(parse_int_matrix(read_file(need_input())));
      return render(cfg, j, snf_text(j));
    }
    if (cfg.command == "verify") {
      json j;
      if (cfg.target == "prop1a")
        j = prop1a_json(cfg);
      else if (cfg.target == "prop1b")
        j = prop1b_json(cfg);
      else if (cfg.target == "lemma1")
        j = lemma1_json(cfg);
      else
        throw std::invalid_argument("unknown verification '" + cfg.target + "' (prop1a, prop1b, lemma1)");
      return render(cfg, j, flat_text(j), j["pass"].get<bool>() ? kOk : kVerificationFailed);
    }
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
  } catch (const PreconditionError& e) {
    return {kPrecondition, std::string("error: ") + e.what() + "\n"};
  } catch (const CapExceeded& e) {
    return {kPrecondition, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInputError, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace groupeq::cli
