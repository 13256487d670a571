#include "demchar/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <json.hpp>

#include "demchar/qsystem.hpp"
#include "demchar/steinberg.hpp"
#include "demchar/store.hpp"

namespace demchar {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Ctx {
  RunConfig cfg;
  std::string config_path;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  Clock::time_point t0;
  std::string cache_state = "miss";

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
};

Weight parse_weight(const std::string& csv, int rank) {
  Weight w(rank);
  std::string cur;
  int i = 0;
  for (char c : csv + ",") {
    if (c == ',') {
      if (cur.empty()) throw CLI::ValidationError("--lambda", "empty coordinate");
      if (i >= rank) throw CLI::ValidationError("weight", "too many coordinates for rank");
      w[i++] = std::stoi(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (i != rank)
    throw CLI::ValidationError("weight", "expected " + std::to_string(rank) +
                                             " comma-separated coordinates");
  return w;
}

ordered_json weight_json(const Weight& w) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < w.rank(); ++i) a.push_back(w[i]);
  return a;
}

void emit(Ctx& ctx, const ordered_json& query, const ordered_json& result,
          const std::string& plain) {
  if (ctx.cfg.format == "json") {
    ordered_json j;
    j["query"] = query;
    j["result"] = result;
    j["elapsed_ms"] = ctx.elapsed_ms();
    j["cache"] = ctx.cache_state;
    (*ctx.out) << j.dump() << "\n";
  } else {
    (*ctx.out) << plain;
  }
}

std::string character_csv(const Character& ch) {
  std::string s;
  for (const auto& [w, c] : ch.sorted_terms()) {
    for (std::size_t i = 0; i < w.rank(); ++i) s += std::to_string(w[i]) + ",";
    s += "0,1," + c.str() + "\n";
  }
  return s;
}

std::string character_csv(const AffineCharacter& ch) {
  std::string s;
  for (const auto& [k, c] : ch.sorted_terms()) {
    for (std::size_t i = 0; i < k.classical.rank(); ++i)
      s += std::to_string(k.classical[i]) + ",";
    s += std::to_string(k.delta.num()) + "," + std::to_string(k.delta.den()) + "," +
         c.str() + "\n";
  }
  return s;
}

std::string character_plain(const Character& ch) {
  std::string s = "dim " + ch.dim().str() + "\n";
  for (const auto& [w, c] : ch.sorted_terms())
    s += "  " + c.str() + " e" + w.str() + "\n";
  return s;
}

ordered_json character_json(const Character& ch) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : ch.sorted_terms()) {
    ordered_json t;
    t["weight"] = weight_json(w);
    t["delta"] = {0, 1};
    t["coeff"] = c.str();
    terms.push_back(t);
  }
  ordered_json j;
  j["dim"] = ch.dim().str();
  j["terms"] = terms;
  return j;
}

ordered_json character_json(const AffineCharacter& ch) {
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : ch.sorted_terms()) {
    ordered_json t;
    t["weight"] = weight_json(k.classical);
    t["delta"] = {k.delta.num(), k.delta.den()};
    t["coeff"] = c.str();
    terms.push_back(t);
  }
  ordered_json j;
  j["dim"] = ch.dim().str();
  j["terms"] = terms;
  return j;
}

struct SystemArgs {
  std::string type = "A";
  int rank = 1;
  int64_t level = 1;
  std::string lambda_csv = "0";

  void attach(CLI::App* cmd, bool with_level = true, bool with_lambda = true) {
    cmd->add_option("--type,-t", type, "simple type letter A..G")->required();
    cmd->add_option("--rank,-r", rank, "rank of the simple type")->required();
    if (with_level) cmd->add_option("--level,-l", level, "level ell >= 1")->required();
    if (with_lambda)
      cmd->add_option("--lambda", lambda_csv, "dominant weight, comma-separated")
          ->required();
  }
  RootSystem build() const {
    if (type.size() != 1) throw CLI::ValidationError("--type", "expected a single letter");
    return RootSystem::build(type[0], rank);
  }
  ordered_json query_json(const char* op) const {
    ordered_json q;
    q["op"] = op;
    q["type"] = type;
    q["rank"] = rank;
    q["level"] = level;
    q["lambda"] = lambda_csv;
    return q;
  }
};

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  ctx.out = &out;
  ctx.err = &err;
  ctx.t0 = Clock::now();

  CLI::App app{"exact Demazure module characters for current algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", ctx.config_path, "key=value config file");
  std::string format_flag, cache_dir_flag, numbering_flag;
  int threads_flag = -1;
  long long term_budget_flag = -1;
  int brute_bound_flag = -1;
  app.add_option("--format", format_flag, "json|csv|plain");
  app.add_option("--cache-dir", cache_dir_flag, "persistent character cache directory");
  app.add_option("--threads", threads_flag, "worker threads for grid verification");
  app.add_option("--term-budget", term_budget_flag, "character term budget");
  app.add_option("--brute-bound", brute_bound_flag, "key-search coefficient bound");
  app.add_option("--numbering", numbering_flag, "fixture numbering convention");

  // ---- char ----
  auto* cmd_char = app.add_subcommand("char", "character of D(ell,lambda)");
  SystemArgs a_char;
  a_char.attach(cmd_char);
  bool graded = false;
  cmd_char->add_flag("--graded", graded, "graded character with delta exponents");

  // ---- dim ----
  auto* cmd_dim = app.add_subcommand("dim", "dimension of D(ell,lambda)");
  SystemArgs a_dim;
  a_dim.attach(cmd_dim);

  // ---- decompose ----
  auto* cmd_dec = app.add_subcommand("decompose", "irreducible decomposition of D(ell,lambda)");
  SystemArgs a_dec;
  a_dec.attach(cmd_dec);

  // ---- tensor ----
  auto* cmd_tensor = app.add_subcommand("tensor", "multiplicity of V(nu) in V(mu1)(x)V(mu2)");
  SystemArgs a_tensor;
  a_tensor.attach(cmd_tensor, /*with_level=*/false, /*with_lambda=*/false);
  std::string nu_csv, mu1_csv, mu2_csv;
  cmd_tensor->add_option("--nu", nu_csv)->required();
  cmd_tensor->add_option("--mu1", mu1_csv)->required();
  cmd_tensor->add_option("--mu2", mu2_csv)->required();

  // ---- key-search ----
  auto* cmd_ks = app.add_subcommand("key-search", "brute-force mu for the key inequality");
  SystemArgs a_ks;
  a_ks.attach(cmd_ks);

  // ---- key-construct ----
  auto* cmd_kc = app.add_subcommand("key-construct", "constructive mu (classical types, G2)");
  SystemArgs a_kc;
  a_kc.attach(cmd_kc);

  // ---- verify-steinberg ----
  auto* cmd_vs = app.add_subcommand("verify-steinberg",
                                    "check ch D(l,lam) = ch D(l,l*mu) ch D(l,lam0)");
  SystemArgs a_vs;
  a_vs.attach(cmd_vs);
  int grid = -1;
  cmd_vs->add_option("--grid", grid,
                     "verify every dominant lambda with coordinates <= this bound instead");
  cmd_vs->get_option("--lambda")->required(false);

  // ---- verify-table ----
  auto* cmd_vt = app.add_subcommand("verify-table", "validate a fixture of (lambda,mu) rows");
  std::string fixture_path;
  cmd_vt->add_option("--fixture", fixture_path, "CSV fixture path")->required();

  // ---- qsystem ----
  auto* cmd_q = app.add_subcommand("qsystem", "mixed-level Q-system character identity");
  SystemArgs a_q;
  a_q.attach(cmd_q);
  int node = 1;
  cmd_q->add_option("--node,-i", node, "Dynkin node index (1-based)")->required();
  bool classical = false;
  cmd_q->add_flag("--classical", classical, "check the classical KR identity instead");
  a_q.lambda_csv = "0";
  cmd_q->get_option("--lambda")->required(false);

  // ---- schur ----
  auto* cmd_s = app.add_subcommand("schur", "Schur-positivity multiplicity comparison");
  SystemArgs a_s;
  a_s.attach(cmd_s, true, false);
  std::string mu_csv;
  int snode = 1;
  cmd_s->add_option("--node,-i", snode, "Dynkin node index (1-based)")->required();
  cmd_s->add_option("--mu", mu_csv, "dominant weight mu")->required();

  // ---- prime ----
  auto* cmd_p = app.add_subcommand("prime", "character-level prime certificate");
  SystemArgs a_p;
  a_p.attach(cmd_p);

  // ---- cache ----
  auto* cmd_cache = app.add_subcommand("cache", "persistent cache maintenance");
  auto* cmd_gc = cmd_cache->add_subcommand("gc", "drop stale or corrupt entries");

  try {
    std::vector<const char*> argv;
    argv.push_back("demchar");
    for (auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (!ctx.config_path.empty()) ctx.cfg = load_config_file(ctx.config_path, ctx.cfg);
    apply_env_overrides(ctx.cfg);
    if (!format_flag.empty()) ctx.cfg.format = format_flag;
    if (!cache_dir_flag.empty()) ctx.cfg.cache_dir = cache_dir_flag;
    if (threads_flag >= 0) ctx.cfg.threads = threads_flag;
    if (term_budget_flag >= 0) ctx.cfg.term_budget = static_cast<std::size_t>(term_budget_flag);
    if (brute_bound_flag >= 0) ctx.cfg.brute_bound = brute_bound_flag;
    if (!numbering_flag.empty()) ctx.cfg.numbering = numbering_flag;
    if (ctx.cfg.format != "json" && ctx.cfg.format != "csv" && ctx.cfg.format != "plain")
      throw CLI::ValidationError("--format", "expected json, csv or plain");
    set_term_budget(ctx.cfg.term_budget);

    // ---------------- char / dim -----------------
    auto cached_character = [&](const SystemArgs& sa, bool want_graded, Character& ch,
                                AffineCharacter& ach) {
      RootSystem rs = sa.build();
      Weight lam = parse_weight(sa.lambda_csv, rs.rank());
      CharKey key{rs.type(), rs.rank(), sa.level, lam, want_graded};
      std::optional<CharStore> store;
      if (!ctx.cfg.cache_dir.empty()) store.emplace(ctx.cfg.cache_dir);
      if (store) {
        if (auto hit = store->get(key)) {
          ctx.cache_state = "hit";
          if (want_graded)
            ach = std::move(hit->graded);
          else
            ch = std::move(hit->classical);
          return rs;
        }
      }
      if (want_graded) {
        ach = demazure_character_graded(rs, sa.level, lam);
        if (store) store->put(key, serialize_character(key, ach));
      } else {
        ch = demazure_character(rs, sa.level, lam);
        if (store) store->put(key, serialize_character(key, ch));
      }
      return rs;
    };

    if (cmd_char->parsed()) {
      Character ch;
      AffineCharacter ach;
      cached_character(a_char, graded, ch, ach);
      ordered_json q = a_char.query_json("char");
      q["graded"] = graded;
      if (graded)
        emit(ctx, q, character_json(ach),
             ctx.cfg.format == "csv" ? character_csv(ach)
                                     : "dim " + ach.dim().str() + "\n" + character_csv(ach));
      else
        emit(ctx, q, character_json(ch),
             ctx.cfg.format == "csv" ? character_csv(ch) : character_plain(ch));
      return 0;
    }

    if (cmd_dim->parsed()) {
      Character ch;
      AffineCharacter ach;
      cached_character(a_dim, false, ch, ach);
      emit(ctx, a_dim.query_json("dim"), ch.dim().str(), ch.dim().str() + "\n");
      return 0;
    }

    if (cmd_dec->parsed()) {
      RootSystem rs = a_dec.build();
      Weight lam = parse_weight(a_dec.lambda_csv, rs.rank());
      Character ch = demazure_character(rs, a_dec.level, lam);
      auto parts = decompose(rs, ch);
      ordered_json res = ordered_json::array();
      std::string plain;
      for (auto& [w, c] : parts) {
        ordered_json e;
        e["highest_weight"] = weight_json(w);
        e["multiplicity"] = c.str();
        res.push_back(e);
        plain += ctx.cfg.format == "csv"
                     ? character_csv(Character::monomial(w, c))
                     : c.str() + " x V" + w.str() + "\n";
      }
      emit(ctx, a_dec.query_json("decompose"), res, plain);
      return 0;
    }

    if (cmd_tensor->parsed()) {
      RootSystem rs = a_tensor.build();
      Weight nu = parse_weight(nu_csv, rs.rank());
      Weight mu1 = parse_weight(mu1_csv, rs.rank());
      Weight mu2 = parse_weight(mu2_csv, rs.rank());
      Coeff m = tensor_mult(rs, nu, mu1, mu2);
      ordered_json q;
      q["op"] = "tensor";
      q["type"] = a_tensor.type;
      q["rank"] = a_tensor.rank;
      q["nu"] = nu_csv;
      q["mu1"] = mu1_csv;
      q["mu2"] = mu2_csv;
      emit(ctx, q, m.str(), m.str() + "\n");
      return 0;
    }

    if (cmd_ks->parsed()) {
      RootSystem rs = a_ks.build();
      Weight lam = parse_weight(a_ks.lambda_csv, rs.rank());
      auto mu = key_search_brute(rs, a_ks.level, lam, ctx.cfg.brute_bound);
      ordered_json q = a_ks.query_json("key-search");
      q["bound"] = ctx.cfg.brute_bound;
      if (mu)
        emit(ctx, q, weight_json(*mu), "mu " + mu->str() + "\n");
      else
        emit(ctx, q, nullptr,
             "none within bound " + std::to_string(ctx.cfg.brute_bound) + "\n");
      return 0;
    }

    if (cmd_kc->parsed()) {
      RootSystem rs = a_kc.build();
      Weight lam = parse_weight(a_kc.lambda_csv, rs.rank());
      Weight mu = key_construct(rs, a_kc.level, lam);
      emit(ctx, a_kc.query_json("key-construct"), weight_json(mu), "mu " + mu.str() + "\n");
      return 0;
    }

    if (cmd_vs->parsed()) {
      RootSystem rs = a_vs.build();
      CharCache cache;
      if (grid >= 0) {
        std::vector<Weight> lams;
        std::vector<int> c(rs.rank(), 0);
        while (true) {
          Weight m(rs.rank());
          for (int j = 0; j < rs.rank(); ++j) m[j] = c[j];
          lams.push_back(m);
          int j = rs.rank() - 1;
          while (j >= 0 && c[j] == grid) c[j--] = 0;
          if (j < 0) break;
          ++c[j];
        }
        std::vector<char> ok(lams.size(), 0);
        parallel_for(lams.size(), ctx.cfg.effective_threads(), [&](std::size_t i) {
          ok[i] = verify_factorization(rs, a_vs.level, lams[i], &cache) ? 1 : 0;
        });
        std::size_t bad = 0;
        std::string plain;
        for (std::size_t i = 0; i < lams.size(); ++i)
          if (!ok[i]) {
            ++bad;
            plain += "FAIL " + lams[i].str() + "\n";
          }
        ordered_json q = a_vs.query_json("verify-steinberg");
        q["grid"] = grid;
        ordered_json res;
        res["checked"] = lams.size();
        res["failed"] = bad;
        emit(ctx, q, res,
             plain + std::to_string(lams.size() - bad) + "/" + std::to_string(lams.size()) +
                 " verified\n");
        return bad == 0 ? 0 : 1;
      }
      if (cmd_vs->get_option("--lambda")->count() == 0)
        throw CLI::ValidationError("verify-steinberg", "needs --lambda or --grid");
      Weight lam = parse_weight(a_vs.lambda_csv, rs.rank());
      bool ok = verify_factorization(rs, a_vs.level, lam, &cache);
      emit(ctx, a_vs.query_json("verify-steinberg"), ok, ok ? "verified\n" : "FAILED\n");
      return ok ? 0 : 1;
    }

    if (cmd_vt->parsed()) {
      TableFixture f = load_fixture(fixture_path);
      TableReport rep =
          verify_table(f, ctx.cfg.numbering, ctx.cfg.effective_threads());
      ordered_json q;
      q["op"] = "verify-table";
      q["fixture"] = fixture_path;
      q["numbering"] = ctx.cfg.numbering;
      ordered_json res;
      res["rows"] = rep.rows_total;
      res["failing_rows"] = rep.failing_rows;
      res["passing_convention"] =
          rep.passing_convention ? ordered_json(*rep.passing_convention) : ordered_json(nullptr);
      std::string plain;
      if (rep.ok()) {
        plain = std::to_string(rep.rows_total) + "/" + std::to_string(rep.rows_total) +
                " rows valid (convention " + *rep.passing_convention + ")\n";
      } else {
        plain = std::to_string(rep.rows_total - rep.failing_rows.size()) + "/" +
                std::to_string(rep.rows_total) + " rows valid under " +
                rep.configured_convention + "; no convention validates all rows\n";
        for (auto r : rep.failing_rows) plain += "  failing row " + std::to_string(r) + "\n";
      }
      emit(ctx, q, res, plain);
      return rep.ok() ? 0 : 1;
    }

    if (cmd_q->parsed()) {
      RootSystem rs = a_q.build();
      CharCache cache;
      bool ok;
      ordered_json q = a_q.query_json("qsystem");
      q["node"] = node;
      q["classical"] = classical;
      if (classical) {
        ok = classical_qsystem(rs, a_q.level, node, &cache);
      } else {
        Weight lam = parse_weight(a_q.lambda_csv, rs.rank());
        ok = qsystem_identity(rs, a_q.level, node, lam, &cache);
      }
      emit(ctx, q, ok, ok ? "verified\n" : "FAILED\n");
      return ok ? 0 : 1;
    }

    if (cmd_s->parsed()) {
      RootSystem rs = a_s.build();
      Weight mu = parse_weight(mu_csv, rs.rank());
      bool ok = schur_compare(rs, a_s.level, snode, mu);
      ordered_json q;
      q["op"] = "schur";
      q["type"] = a_s.type;
      q["rank"] = a_s.rank;
      q["level"] = a_s.level;
      q["node"] = snode;
      q["mu"] = mu_csv;
      emit(ctx, q, ok, ok ? "verified\n" : "FAILED\n");
      return ok ? 0 : 1;
    }

    if (cmd_p->parsed()) {
      RootSystem rs = a_p.build();
      Weight lam = parse_weight(a_p.lambda_csv, rs.rank());
      PrimeVerdict v = prime_certificate(rs, a_p.level, lam);
      ordered_json res;
      res["verdict"] = v.prime ? "prime" : "factored";
      res["splittings_examined"] = v.splittings_examined;
      res["candidates_examined"] = v.candidates_examined;
      res["candidate_budget"] = v.candidate_budget;
      std::string plain = v.prime ? "prime\n" : "factored\n";
      if (!v.prime) {
        ordered_json f1 = ordered_json::array(), f2 = ordered_json::array();
        for (auto& [w, c] : v.factor1_decomp) {
          ordered_json e;
          e["highest_weight"] = weight_json(w);
          e["multiplicity"] = c.str();
          f1.push_back(e);
        }
        for (auto& [w, c] : v.factor2_decomp) {
          ordered_json e;
          e["highest_weight"] = weight_json(w);
          e["multiplicity"] = c.str();
          f2.push_back(e);
        }
        res["factor1"] = f1;
        res["factor2"] = f2;
        plain += "factor1 top " + v.mu1.str() + ", factor2 top " + v.mu2.str() + "\n";
      }
      emit(ctx, a_p.query_json("prime"), res, plain);
      return 0;
    }

    if (cmd_cache->parsed()) {
      if (cmd_gc->parsed()) {
        if (ctx.cfg.cache_dir.empty())
          throw CLI::ValidationError("--cache-dir", "no cache directory configured");
        int removed = CharStore(ctx.cfg.cache_dir).gc();
        ordered_json q;
        q["op"] = "cache-gc";
        q["dir"] = ctx.cfg.cache_dir;
        emit(ctx, q, removed, "removed " + std::to_string(removed) + " entries\n");
        return 0;
      }
      err << "cache: expected a subcommand (gc)\n";
      return 2;
    }

    err << "no subcommand\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace demchar
