#pragma once

#include "oyqg/cli/suites.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace oyqg::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "oyqg";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitUnsupported = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string type = "A2";
  bool transpose = false;
  int max_height = 0;  // 0: default for the type
  long dim_cap = 100000;
  std::string backend = "exact";
  std::vector<std::uint64_t> primes;  // empty: the built-in list
  int k = 3;
  std::uint64_t seed = 1;
  std::vector<std::vector<int>> lambdas;  // fundamental-weight coordinates
  std::string out;
  std::string cache_dir;
  bool no_cache = false;
  std::string suite = "all";
  int samples = 20;
  bool timing = false;
};

inline std::vector<int> parse_lambda(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--lambda expects non-negative integers separated by commas, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("--lambda is empty");
  return out;
}

/// Resolved configuration echoed into every report.
struct Resolved {
  RunConfig cfg;
  CartanDatum cartan;
  int max_height;
  std::vector<std::uint64_t> primes;
  std::vector<Weight> lambdas;
};

inline Resolved resolve(const RunConfig& cfg) {
  if (cfg.backend != "exact" && cfg.backend != "modular") throw UsageError("--backend must be exact or modular");
  if (cfg.k < 1) throw UsageError("--k must be positive");
  if (cfg.samples < 1) throw UsageError("--samples must be positive");
  CartanDatum c = [&] {
    try {
      return make_cartan(cfg.type, cfg.transpose);
    } catch (const UnsupportedType& e) {
      throw UsageError(e.what());
    }
  }();
  Resolved r{cfg, c, cfg.max_height > 0 ? cfg.max_height : default_max_height(cfg.type), {}, {}};
  r.primes = cfg.primes.empty() ? std::vector<std::uint64_t>(kDefaultPrimes.begin(), kDefaultPrimes.end()) : cfg.primes;
  if (cfg.backend == "modular" && static_cast<int>(r.primes.size()) < cfg.k)
    throw UsageError("--k exceeds the number of primes");
  if (cfg.backend == "modular") r.primes.resize(static_cast<std::size_t>(cfg.k));
  for (const auto& f : cfg.lambdas) {
    if (static_cast<int>(f.size()) != c.rank())
      throw UsageError("--lambda needs " + std::to_string(c.rank()) + " coordinates for type " + c.name());
    r.lambdas.push_back(c.from_fundamental(f));
  }
  return r;
}

inline std::string cache_dir_for(const RunConfig& cfg) {
  if (cfg.no_cache) return {};
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("OYQG_CACHE_DIR")) return env;
  return {};
}

inline Json matrix_json(const CartanDatum& c) {
  Json rows = Json::array();
  for (int i = 0; i < c.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < c.rank(); ++j) row.push_back(c.a(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline Json config_echo(const Resolved& r) {
  const RunConfig& cfg = r.cfg;
  Json j;
  j["command"] = cfg.command;
  j["type"] = r.cartan.name();
  j["orientation"] = cfg.transpose ? "transposed" : "standard";
  j["cartan_matrix"] = matrix_json(r.cartan);
  Json d = Json::array();
  for (int i = 0; i < r.cartan.rank(); ++i) d.push_back(r.cartan.d(i));
  j["symmetrizers"] = d;
  j["exponent_denominator"] = r.cartan.r();
  j["max_height"] = r.max_height;
  j["dim_cap"] = cfg.dim_cap;
  j["basis_order"] = "lex";
  j["backend"] = cfg.backend;
  if (cfg.backend == "modular") {
    j["k"] = cfg.k;
    Json ps = Json::array();
    for (auto p : r.primes) ps.push_back(p);
    j["primes"] = ps;
  }
  j["seed"] = cfg.seed;
  if (cfg.command == "verify") {
    j["suite"] = cfg.suite;
    j["samples"] = cfg.samples;
  }
  Json lams = Json::array();
  for (const auto& f : cfg.lambdas) lams.push_back(f);
  j["lambda"] = lams;
  j["cache"] = !cache_dir_for(cfg).empty();
  return j;
}

inline Json check_json(const CheckRecord& rec, bool timing) {
  Json j;
  j["name"] = rec.name;
  j["anchor"] = rec.anchor;
  j["status"] = status_name(rec.status);
  j["witness"] = rec.witness;
  j["detail"] = rec.detail;
  if (timing) j["ms"] = std::round(rec.ms * 1000.0) / 1000.0;
  return j;
}

inline int severity(Status s) { return s == Status::Fail ? 2 : s == Status::Flag ? 1 : 0; }

/// Per-check merge over evaluation points: fail wins over flag wins over pass.
inline std::vector<CheckRecord> merge_runs(const std::vector<std::vector<CheckRecord>>& runs,
                                           const std::vector<std::string>& labels) {
  std::vector<CheckRecord> out = runs.front();
  for (auto& rec : out) {
    rec.ms = 0;
    rec.witness.clear();
    rec.status = Status::Pass;
  }
  for (std::size_t r = 0; r < runs.size(); ++r)
    for (std::size_t k = 0; k < out.size(); ++k) {
      const CheckRecord& x = runs[r][k];
      out[k].ms += x.ms;
      if (severity(x.status) > severity(out[k].status)) {
        out[k].status = x.status;
        out[k].witness = labels[r] + ": " + x.witness;
      }
    }
  return out;
}

/// On-disk cache of exact Gram matrices, one file per degree, named by a hash
/// of everything the matrix depends on.
class GramCache {
 public:
  explicit GramCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::string key_text(const CartanDatum& c, const Vec& mu) {
    Json k;
    k["type"] = c.name();
    k["cartan_matrix"] = matrix_json(c);
    k["degree"] = std::vector<int>(mu.begin(), mu.begin() + c.rank());
    k["basis_order"] = "lex";
    k["version"] = kToolVersion;
    return k.dump();
  }

  std::filesystem::path path_for(const CartanDatum& c, const Vec& mu) const {
    std::ostringstream name;
    name << "gram-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key_text(c, mu)) << ".json";
    return dir_ / name.str();
  }

  /// Preloads every cached degree up to height h; returns the number loaded.
  int load(const QuantumGroup<ExactField>& U, const Pairing<ExactField>& P, int h) {
    int n = 0;
    U.enumerate_degrees(h, [&](const Vec& mu) {
      std::ifstream in(path_for(U.cartan(), mu));
      if (!in) return;
      try {
        const Json j = Json::parse(in);
        if (j.at("key").get<std::string>() != key_text(U.cartan(), mu)) return;
        const auto& rows = j.at("entries");
        Matrix<ParamScalar> g(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()), ParamScalar{});
        for (int i = 0; i < g.rows; ++i)
          for (int k = 0; k < g.cols; ++k) g.at(i, k) = parse_scalar(rows[i][k].get<std::string>(), U.field().vars());
        P.preload_gram(mu, std::move(g));
        loaded_.insert(mu);
        ++n;
      } catch (const std::exception&) {
        // unreadable entries are recomputed
      }
    });
    return n;
  }

  /// Writes every computed Gram matrix that was not loaded from disk.
  int store(const QuantumGroup<ExactField>& U, const Pairing<ExactField>& P) {
    std::filesystem::create_directories(dir_);
    int n = 0;
    for (const auto& [mu, g] : P.computed_grams()) {
      if (loaded_.count(mu)) continue;
      Json j;
      j["key"] = key_text(U.cartan(), mu);
      Json words = Json::array();
      for (const Word& w : U.basis(Side::F, mu).basis) words.push_back(word_text(w));
      j["f_basis"] = words;
      words = Json::array();
      for (const Word& w : U.basis(Side::E, mu).basis) words.push_back(word_text(w));
      j["e_basis"] = words;
      Json rows = Json::array();
      for (int i = 0; i < g.rows; ++i) {
        Json row = Json::array();
        for (int k = 0; k < g.cols; ++k) row.push_back(render(g.at(i, k), U.field().vars()));
        rows.push_back(row);
      }
      j["entries"] = rows;
      const auto path = path_for(U.cartan(), mu);
      const auto tmp = path.string() + ".tmp";
      {
        std::ofstream o(tmp);
        o << j.dump(1) << "\n";
      }
      std::filesystem::rename(tmp, path);
      ++n;
    }
    return n;
  }

 private:
  std::filesystem::path dir_;
  std::set<Vec> loaded_;
};

inline std::string degree_label(const Vec& mu, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (mu[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (mu[i] != 1) s += std::to_string(mu[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

template <ScalarField F>
Json element_json(const Element<typename F::Scalar>& z, const F& field, int n) {
  Json terms = Json::array();
  for (const auto& [m, c] : z.terms()) {
    Json t;
    t["f"] = word_text(m.f);
    t["omega_prime"] = std::vector<int>(m.a.begin(), m.a.begin() + n);
    t["omega"] = std::vector<int>(m.b.begin(), m.b.begin() + n);
    t["e"] = word_text(m.e);
    t["coefficient"] = field.render(c);
    terms.push_back(t);
  }
  return terms;
}

/// Runs body once per evaluation point: once for the exact backend, once per
/// prime for the modular one. RetryPoint moves to a fresh seed.
template <class Body>
std::pair<std::vector<std::vector<CheckRecord>>, Json> run_backends(const Resolved& r, Body&& body) {
  const VarSet vs{r.cartan.rank(), r.cartan.r()};
  std::vector<std::vector<CheckRecord>> runs;
  Json points = Json::array();
  if (r.cfg.backend == "exact") {
    QuantumGroup<ExactField> U(r.cartan, ExactField(vs), r.max_height);
    runs.push_back(body(U, std::string("exact")));
    return {runs, points};
  }
  constexpr int kAttempts = 4;
  for (std::uint64_t p : r.primes) {
    for (int attempt = 0;; ++attempt) {
      const std::uint64_t seed = r.cfg.seed + static_cast<std::uint64_t>(attempt);
      try {
        QuantumGroup<ModField> U(r.cartan, ModField(vs, p, seed), r.max_height);
        runs.push_back(body(U, "prime " + std::to_string(p)));
        Json pt;
        pt["prime"] = p;
        pt["seed"] = seed;
        points.push_back(pt);
        break;
      } catch (const RetryPoint&) {
        if (attempt + 1 == kAttempts) throw;
      }
    }
  }
  return {runs, points};
}

struct CommandResult {
  Json report;
  int exit_code = kExitPass;
  Json element;  // central: the serialized element
};

inline Json summary_json(const std::vector<CheckRecord>& recs) {
  int np = 0, nf = 0, nl = 0;
  for (const auto& x : recs) (x.status == Status::Pass ? np : x.status == Status::Fail ? nf : nl)++;
  Json s;
  s["pass"] = np;
  s["fail"] = nf;
  s["flag"] = nl;
  return s;
}

inline CommandResult finish(const Resolved& r, const std::vector<CheckRecord>& recs, Json result, Json points) {
  CommandResult out;
  Json rep;
  rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  rep["config"] = config_echo(r);
  if (!points.empty()) rep["evaluation_points"] = points;
  if (!result.is_null()) rep["result"] = std::move(result);
  Json checks = Json::array();
  for (const auto& x : recs) checks.push_back(check_json(x, r.cfg.timing));
  rep["checks"] = checks;
  rep["summary"] = summary_json(recs);
  const bool failed = std::any_of(recs.begin(), recs.end(), [](const CheckRecord& x) { return x.status == Status::Fail; });
  rep["status"] = failed ? "fail" : "pass";
  out.report = std::move(rep);
  out.exit_code = failed ? kExitFail : kExitPass;
  return out;
}

inline CommandResult cmd_algebra_info(const Resolved& r) {
  Json components = Json::array();
  const std::string cache = cache_dir_for(r.cfg);
  auto [runs, points] = run_backends(r, [&](const auto& U, const std::string&) {
    using F = std::decay_t<decltype(U.field())>;
    SuiteParams sp;
    sp.seed = r.cfg.seed;
    SuiteRunner<F> S(U, sp);
    std::optional<GramCache> gc;
    if constexpr (F::kExact)
      if (!cache.empty()) {
        gc.emplace(cache);
        gc->load(U, S.pairing(), r.max_height);
      }
    std::vector<CheckRecord> recs{S.graded_dimensions(r.max_height), S.nondegenerate(r.max_height)};
    if (components.empty()) {
      std::vector<Vec> degrees;
      U.enumerate_degrees(r.max_height, [&](const Vec& mu) { degrees.push_back(mu); });
      // by height, then alpha_1 first
      std::sort(degrees.begin(), degrees.end(), [](const Vec& a, const Vec& b) {
        return vec_height(a) != vec_height(b) ? vec_height(a) < vec_height(b) : a > b;
      });
      for (const Vec& mu : degrees) {
        Json c;
        c["degree"] = std::vector<int>(mu.begin(), mu.begin() + U.rank());
        c["label"] = degree_label(mu, U.rank());
        c["dim"] = U.basis(Side::E, mu).basis.size();
        c["kostant"] = U.cartan().kostant_count(mu);
        const auto det = S.pairing().gram_det(mu);
        c["gram_det"] = det.is_zero() ? "zero" : "nonzero";
        if constexpr (F::kExact) c["det"] = U.field().render(det);
        components.push_back(c);
      }
    }
    if constexpr (F::kExact)
      if (gc) gc->store(U, S.pairing());
    return recs;
  });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < runs.size(); ++i)
    labels.push_back(points.empty() ? "exact" : "prime " + std::to_string(points[i]["prime"].get<std::uint64_t>()));
  const auto recs = merge_runs(runs, labels);
  Json result;
  result["components"] = components;
  return finish(r, recs, result, points);
}

inline CommandResult cmd_central(const Resolved& r) {
  if (r.lambdas.size() != 1) throw UsageError("central needs exactly one --lambda");
  const Weight lam = r.lambdas.front();
  if (!r.cartan.in_root_lattice(lam))
    throw NotInRootLattice();
  Json result, element;
  const std::string cache = cache_dir_for(r.cfg);
  auto [runs, points] = run_backends(r, [&](const auto& U, const std::string&) {
    using F = std::decay_t<decltype(U.field())>;
    SuiteParams sp;
    sp.seed = r.cfg.seed;
    sp.samples = r.cfg.samples;
    sp.dim_cap = r.cfg.dim_cap;
    sp.center_lambdas = {lam};
    sp.module_lambdas = {lam};
    SuiteRunner<F> S(U, sp);
    std::optional<GramCache> gc;
    if constexpr (F::kExact)
      if (!cache.empty()) {
        gc.emplace(cache);
        gc->load(U, S.pairing(), r.max_height);
      }
    std::vector<CheckRecord> recs{S.central(lam),       S.trace_realization(lam), S.hc_image(lam), S.flat_invariant(lam),
                                  S.eigenvalues(lam),   S.decomposition(lam),     S.specialization(lam)};
    if (result.is_null()) {
      const auto& z = S.central_element(lam);
      const auto& M = S.module(lam);
      const int n = U.rank();
      result["lambda"] = r.cfg.lambdas.front();
      result["module_dim"] = M.dim();
      Json weights = Json::array();
      for (const auto& [w, d] : M.weight_dims()) weights.push_back({{"weight", weight_text(U.cartan(), w)}, {"dim", d}});
      result["module_weights"] = weights;
      result["term_count"] = z.size();
      result["u0_part"] = element_json(z.filter([](const Monomial& m) { return m.is_torus(); }), U.field(), n);
      result["centrality"] = F::kExact ? "exact" : "modular";
      result["xi_image"] = element_json(S.xi(lam), U.field(), n);
      result["w_invariant"] = Center<F>::is_flat(S.xi(lam)) && S.center().is_weyl_invariant(S.xi(lam));
      Json dec = Json::array();
      for (const auto& [mu, c] : S.center().surjectivity_decompose(lam).coeffs)
        dec.push_back({{"mu", weight_text(U.cartan(), mu)}, {"coefficient", U.field().render(c)}});
      result["decomposition"] = dec;
      element = element_json(z, U.field(), n);
    }
    if constexpr (F::kExact)
      if (gc) gc->store(U, S.pairing());
    return recs;
  });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < runs.size(); ++i)
    labels.push_back(points.empty() ? "exact" : "prime " + std::to_string(points[i]["prime"].get<std::uint64_t>()));
  auto out = finish(r, merge_runs(runs, labels), result, points);
  out.element = element;
  return out;
}

inline CommandResult cmd_verify(const Resolved& r) {
  const auto& names = SuiteRunner<ExactField>::suite_names();
  if (r.cfg.suite != "all" && std::find(names.begin(), names.end(), r.cfg.suite) == names.end())
    throw UsageError("unknown suite '" + r.cfg.suite + "'");
  auto [runs, points] = run_backends(r, [&](const auto& U, const std::string&) {
    using F = std::decay_t<decltype(U.field())>;
    SuiteParams sp;
    sp.seed = r.cfg.seed;
    sp.samples = r.cfg.samples;
    sp.dim_cap = r.cfg.dim_cap;
    sp.hopf_height = std::min(4, r.max_height);
    sp.pair_height = std::min(4, r.max_height);
    sp.rosso_height = std::min(3, r.max_height);
    for (const Weight& w : r.lambdas) {
      sp.module_lambdas.push_back(w);
      if (r.cartan.in_root_lattice(w)) sp.center_lambdas.push_back(w);
    }
    SuiteRunner<F> S(U, sp);
    return S.run(r.cfg.suite);
  });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < runs.size(); ++i)
    labels.push_back(points.empty() ? "exact" : "prime " + std::to_string(points[i]["prime"].get<std::uint64_t>()));
  return finish(r, merge_runs(runs, labels), Json(), points);
}

/// Runs one command and writes the report; returns the process exit code.
inline int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Resolved r = resolve(cfg);
    CommandResult res;
    if (cfg.command == "algebra-info") res = cmd_algebra_info(r);
    else if (cfg.command == "central") res = cmd_central(r);
    else if (cfg.command == "verify") res = cmd_verify(r);
    else throw UsageError("unknown command '" + cfg.command + "'");
    if (cfg.out.empty()) {
      if (!res.element.is_null()) res.report["element"] = res.element;
      out << res.report.dump(2) << "\n";
    } else {
      std::ofstream(cfg.out) << res.report.dump(2) << "\n";
      if (!res.element.is_null()) {
        std::filesystem::path p(cfg.out);
        p.replace_extension(".element.json");
        std::ofstream(p) << Json{{"lambda", cfg.lambdas.front()}, {"terms", res.element}}.dump(2) << "\n";
      }
    }
    return res.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotInRootLattice&) {
    err << "unsupported input: central elements z_lambda are constructed only for dominant lambda in the root lattice Q\n";
    return kExitUnsupported;
  } catch (const HeightBoundExceeded& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const DimensionCapExceeded& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const UnsupportedType& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const RetryPoint& e) {
    err << "modular evaluation failed at every retry: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace oyqg::cli
