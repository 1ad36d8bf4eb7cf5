// nfold: generators, checkers and emitters over the library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "nfold/cn_delta.hpp"
#include "nfold/grothendieck.hpp"
#include "nfold/homology.hpp"
#include "nfold/io.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/subdivide.hpp"
#include "nfold/verification.hpp"

using namespace nfold;

namespace {

struct Options {
  int m = -1, k = -1, n = 1, cap = -1, level = -1, iterate = 1, fuzz = 1000;
  unsigned seed = 0;
  int threads = 0;
  std::string input, poset, cat, json, emit = "json", fixture = "terminal", grid = "default", dims;
  bool timings = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + path);
  out << text;
}

void need(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

MultiIndex parse_dims(const std::string& s) {
  MultiIndex p;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) p.push_back(std::stoi(part));
  need(!p.empty(), "--dims needs a comma separated list");
  for (int v : p) need(v >= 0, "--dims entries must be >= 0");
  return p;
}

// The simplicial set a file describes: nerves for posets and categories,
// diagonals for multisimplicial sets and n-fold categories.
SSet as_simplicial(const Json& j) {
  const std::string kind = j.value("kind", std::string{});
  if (kind == "simplicial_set") return simplicial_set_from_json(j);
  if (kind == "poset") return poset_from_json(j).nerve();
  if (kind == "category") return nerve(category_from_json(j));
  if (kind == "multisimplicial_set") return diagonal(multisimplicial_set_from_json(j));
  if (kind == "nfold_category") return diagonal(nfold_nerve(nfold_from_json(j)));
  throw UnsupportedInput("unknown kind '" + kind + "'");
}

NCat as_nfold(const Json& j) {
  const std::string kind = j.value("kind", std::string{});
  if (kind == "nfold_category") return nfold_from_json(j);
  if (kind == "category") return from_category(*category_from_json(j));
  if (kind == "poset") return from_category(*poset_from_json(j).to_category());
  throw UnsupportedInput("expected a category, poset or n-fold category, got '" + kind + "'");
}

// Prints a report and returns the exit status: 1 for a failure.
int finish(const std::vector<CheckReport>& rs, const Options& o) {
  int failed = 0;
  for (const CheckReport& r : rs) {
    std::printf("%-14s %s: %s\n", status_str(r.status).c_str(), r.key().c_str(), r.witness.c_str());
    for (const Assertion& a : r.assertions)
      if (!a.ok) std::printf("    %s: %s\n", a.name.c_str(), a.detail.c_str());
    if (r.status == Status::Fail) ++failed;
  }
  if (!o.json.empty()) {
    Json j = rs.size() == 1 ? to_json(rs[0], o.timings) : to_json(rs, o.timings);
    write_out(dump(j), o.json);
  }
  return failed ? 1 : 0;
}

int run_one(const std::string& id, const std::function<CheckReport()>& fn, const Options& o) {
  CheckReport inner;
  GridEntry e{0, id, 0, -1, -1, "", [&] { return inner = fn(); }};
  CheckReport r = run_check(e, budget_seconds());
  // run_check stamps the entry's parameters; keep the ones the check reported
  if (!inner.id.empty()) {
    r.n = inner.n;
    r.m = inner.m;
    r.k = inner.k;
    r.fixture = inner.fixture;
  }
  return finish({r}, o);
}

void emit(const Json& j, const Options& o) { write_out(dump(j), o.json); }

int cmd_gen(const std::string& what, const Options& o) {
  if (what == "sd-delta") {
    need(o.m >= 0 && o.m <= 4, "gen sd-delta needs 0 <= --m <= 4");
    need(o.iterate >= 0 && o.iterate <= 3, "--iterate must be 0..3");
    SSet x = std_simplex(o.m);
    for (int i = 0; i < o.iterate; ++i) x = subdivide(x).sd;
    if (o.emit == "dot") write_out(poset_dot(poset_of_nondegenerate(*x), "Sd" + std::to_string(o.iterate)), o.json);
    else emit(to_json(*x), o);
    return 0;
  }
  if (what == "delta" || what == "boundary" || what == "horn") {
    need(o.m >= 0 && o.m <= 6, "--m must be 0..6");
    SSet x = what == "delta" ? std_simplex(o.m) : what == "boundary" ? boundary(o.m) : nullptr;
    if (what == "boundary") need(o.m >= 1, "boundary needs --m >= 1");
    if (what == "horn") {
      need(o.m >= 1 && o.k >= 0 && o.k <= o.m, "horn needs --m >= 1 and 0 <= --k <= m");
      x = horn(o.m, o.k);
    }
    emit(to_json(*x), o);
    return 0;
  }
  if (what == "psd-delta") {
    need(o.m >= 0 && o.m <= 3, "gen psd-delta needs 0 <= --m <= 3");
    SdPoset sd = sd_delta_poset(o.m);
    if (o.emit == "dot") write_out(sd_dot(sd, std::max(o.k, 0)), o.json);
    else emit(to_json(sd.poset), o);
    return 0;
  }
  if (what == "cn-delta") {
    need(o.m >= 0 && o.m <= 2, "gen cn-delta needs 0 <= --m <= 2");
    need(o.n >= 1 && o.n <= 2, "gen cn-delta needs --n 1 or 2");
    SdPoset sd = sd_delta_poset(o.m);
    emit(to_json(*cn_delta_union(sd.poset, o.m, o.n).cat), o);
    return 0;
  }
  if (what == "multi-simplex") {
    need(!o.dims.empty(), "gen multi-simplex needs --dims");
    emit(to_json(*multi_simplex(parse_dims(o.dims))), o);
    return 0;
  }
  throw UsageError("unknown generator '" + what + "'");
}

int cmd_hom(const Options& o) {
  need(!o.input.empty(), "hom needs --input");
  SSet x = as_simplicial(read_json_file(o.input));
  HomologyResult h = homology(*x);
  if (!o.json.empty()) {
    emit(to_json(h), o);
    return 0;
  }
  std::string ranks;
  for (std::size_t q = 0; q < h.betti.size(); ++q) ranks += (q ? " " : "") + std::to_string(h.betti[q]);
  std::printf("ranks %s\n%s\n", ranks.c_str(), h.str().c_str());
  return 0;
}

int cmd_check(const std::string& what, const Options& o) {
  if (what == "ez") {
    need(o.fuzz >= 0, "--fuzz must be >= 0");
    return run_one("multi-ez", [&] { return ez_report(o.fuzz, o.seed); }, o);
  }
  if (what == "nfold-axioms") {
    NCat d;
    std::string name;
    if (!o.input.empty()) {
      d = as_nfold(read_json_file(o.input));
      name = o.input;
    } else {
      need(o.m >= 0 && o.m <= 2 && o.n >= 1 && o.n <= 2, "nfold-axioms needs --input, or --m <= 2 and --n <= 2");
      d = cn_delta_union(sd_delta_poset(o.m).poset, o.m, o.n).cat;
      name = "c^" + std::to_string(o.n) + "δ_!N PSdΔ[" + std::to_string(o.m) + "]";
    }
    return run_one("nfold-axioms", [&] { return nfold_axioms_report(*d, name); }, o);
  }
  if (what == "pushout-axiom") {
    need(o.m >= 1 && o.k >= 0 && o.k <= o.m, "pushout-axiom needs --m >= 1 and 0 <= --k <= m");
    auto b = parse_fixture(o.fixture);
    need(b.has_value(), "--fixture is one of terminal, interval, horn");
    if (o.n == 1) {
      need(o.m <= 3, "n = 1 needs --m <= 3");
      return run_one("pushout-axiom-cat", [&] { return pushout_axiom_cat(o.m, o.k, *b); }, o);
    }
    need(o.n == 2 && o.m <= 2, "the n-fold check needs --n 2 and --m <= 2");
    return run_one("pushout-axiom-nfold", [&] { return pushout_axiom_nfold(o.n, o.m, o.k, *b); }, o);
  }
  if (what == "decomposition") {
    need(o.m >= 0 && o.m <= 4, "decomposition needs 0 <= --m <= 4");
    std::vector<CheckReport> rs;
    for (int k = 0; k <= o.m; ++k) {
      if (o.k >= 0 && k != o.k) continue;
      GridEntry e{2, "decomposition", 0, o.m, k, "", [&o, k] { return decomposition_report(o.m, k); }};
      rs.push_back(run_check(e, budget_seconds()));
    }
    need(!rs.empty(), "--k out of range");
    return finish(rs, o);
  }
  if (what == "chain-condition") {
    FinPoset t;
    std::string name;
    int level = o.level;
    if (!o.poset.empty()) {
      t = poset_from_json(read_json_file(o.poset));
      name = o.poset;
      if (level < 0) {
        // the longest chain fixes the only level (i) can hold at
        for (const Chain& c : maximal_chains(t)) level = std::max(level, static_cast<int>(c.size()) - 1);
      }
    } else {
      need(o.m >= 0 && o.m <= 3, "chain-condition needs --poset or 0 <= --m <= 3");
      t = sd_delta_poset(o.m).poset;
      name = "PSdΔ[" + std::to_string(o.m) + "]";
      if (level < 0) level = o.m;
    }
    need(level >= 0, "empty poset");
    return run_one("chain-condition", [&] { return chain_condition_report(t, level, name); }, o);
  }
  if (what == "rho") {
    need(!o.input.empty(), "rho needs --input");
    Json j = read_json_file(o.input);
    SMSet Y;
    if (j.value("kind", std::string{}) == "multisimplicial_set") {
      Y = multisimplicial_set_from_json(j);
      need(o.n == 1 || o.n == Y->n(), "--n disagrees with the input");
    } else {
      SSet x = simplicial_set_from_json(j);
      Y = o.n == 1 ? as_multi(x) : delta_shriek(x, o.n);
    }
    MultiIndex caps = o.cap >= 0 ? MultiIndex(Y->n(), o.cap) : default_caps(*Y);
    MultiIndex extent = caps;
    for (int& e : extent) ++e;
    return run_one("rho", [&] { return rho_report(Y, o.input, caps, extent); }, o);
  }
  if (what == "lambda") {
    need(!o.cat.empty(), "lambda needs --cat");
    NCat d = as_nfold(read_json_file(o.cat));
    const int cap = o.cap >= 0 ? o.cap : (d->n() == 1 ? 2 : 1);
    MultiIndex caps(d->n(), cap), extent(d->n(), 2 * cap);
    return run_one("lambda", [&] { return lambda_report(d, o.cat, caps, extent); }, o);
  }
  if (what == "unit-counit") {
    need(!o.input.empty(), "unit-counit needs --input");
    need(o.n >= 1 && o.n <= 2, "--n must be 1 or 2");
    SSet x = simplicial_set_from_json(read_json_file(o.input));
    return run_one("unit-counit", [&] { return unit_counit_suite(x, o.input, o.n); }, o);
  }
  throw UsageError("unknown check '" + what + "'");
}

int cmd_verify(const Options& o) {
  need(o.grid == "default", "only the default grid exists");
  auto grid = default_grid(o.seed);
  int threads = o.threads > 0 ? o.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto rs = run_grid(grid, threads, budget_seconds());
  return finish(rs, o);
}

int cmd_emit(const std::string& what, const Options& o) {
  need(what == "dot", "emit supports dot");
  if (!o.poset.empty() || !o.input.empty()) {
    const std::string path = o.poset.empty() ? o.input : o.poset;
    write_out(poset_dot(poset_from_json(read_json_file(path))), o.json);
    return 0;
  }
  need(o.m >= 0 && o.m <= 3, "emit dot needs --poset, or 0 <= --m <= 3");
  need(o.k <= o.m, "--k must be <= m");
  write_out(sd_dot(sd_delta_poset(o.m), std::max(o.k, 0)), o.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  std::string what;
  CLI::App app{"Finite n-fold categories, subdivisions and their nerves.\n"
               "The per-check budget in seconds is read from NFOLD_BUDGET_SECONDS (default 900)."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--json", o.json, "write JSON here ('-' for stdout)");
  app.add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  app.add_flag("--timings", o.timings, "include runtimes in JSON reports");

  auto* gen = app.add_subcommand("gen", "print a generated object");
  gen->add_option("what", what, "sd-delta | delta | boundary | horn | psd-delta | cn-delta | multi-simplex")->required();
  gen->add_option("--m", o.m, "dimension");
  gen->add_option("--k", o.k, "horn index");
  gen->add_option("--n", o.n, "fold")->capture_default_str();
  gen->add_option("--iterate", o.iterate, "number of subdivisions")->capture_default_str();
  gen->add_option("--dims", o.dims, "multidegree, e.g. 2,1");

  auto* hom = app.add_subcommand("hom", "integral homology of a JSON object");
  hom->add_option("--input", o.input, "simplicial set, poset, category, multisimplicial set or n-fold category")
      ->required();

  auto* check = app.add_subcommand("check", "run one check");
  check->add_option("what", what,
                    "ez | nfold-axioms | pushout-axiom | decomposition | chain-condition | rho | lambda | unit-counit")
      ->required();
  check->add_option("--m", o.m, "dimension");
  check->add_option("--k", o.k, "horn index");
  check->add_option("--n", o.n, "fold")->capture_default_str();
  check->add_option("--cap", o.cap, "degree cap per axis");
  check->add_option("--level", o.level, "chain condition level");
  check->add_option("--fixture", o.fixture, "terminal | interval | horn")->capture_default_str();
  check->add_option("--fuzz", o.fuzz, "random EZ trials")->capture_default_str();
  check->add_option("--input", o.input, "input file");
  check->add_option("--poset", o.poset, "poset file");
  check->add_option("--cat", o.cat, "category or n-fold category file");

  auto* verify = app.add_subcommand("verify", "run the verification grid");
  verify->add_option("--grid", o.grid, "grid name")->capture_default_str();
  verify->add_option("--threads", o.threads, "workers (default: hardware threads)");

  auto* em = app.add_subcommand("emit", "write a diagram");
  em->add_option("what", what, "dot")->required();
  em->add_option("--m", o.m, "dimension of P Sd Δ[m]");
  em->add_option("--k", o.k, "horn index for the piece classes");
  em->add_option("--poset", o.poset, "poset file instead of P Sd Δ[m]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (*gen) return cmd_gen(what, o);
    if (*hom) return cmd_hom(o);
    if (*check) return cmd_check(what, o);
    if (*verify) return cmd_verify(o);
    if (*em) return cmd_emit(what, o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
