// qwc: exact series computations around projective complete intersections.
//
// Every subcommand prints one canonical JSON document (sorted keys, canonical
// rational strings) to stdout or --output, so identical invocations produce
// identical bytes.  Failures print {"error": {"kind", "message"}} to stderr;
// the exit code classifies them: 2 usage/parse, 3 domain/data, 4 failed
// integrality or identity checks.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "qwc/qwc.hpp"

namespace {

using namespace qwc;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Flag:
      return 2;
    case ErrorKind::Integrality:
    case ErrorKind::Identity:
      return 4;
    default:
      return 3;
  }
}

[[noreturn]] void emit_error_and_exit(ErrorKind kind, const std::string& msg) {
  Json e;
  e["error"]["kind"] = error_kind_name(kind);
  e["error"]["message"] = msg;
  std::cerr << canonical_dump(e);
  std::exit(exit_code_for(kind));
}

void emit(const Json& j, const std::string& output_path) {
  std::string text = canonical_dump(j);
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Flag, "cannot open output file " + output_path);
  out << text;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Flag, "cannot open input file " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_json_text(text);
}

// Shared flag bundle; each subcommand registers the subset it needs.
struct Options {
  std::string target;
  std::string epsilon = "0+";
  std::string from, to;
  std::string input, output;
  std::string cache_dir;
  std::string format = "json";
  int degree = 1;
  int depth = 6;
  int genus = 0;
  bool genus_given = false;
};

CompleteIntersection target_of(const Options& opt) {
  return parse_target(opt.target);
}

std::optional<SeriesCache> open_cache(const Options& opt) {
  if (!opt.cache_dir.empty()) return SeriesCache(opt.cache_dir);
  if (auto env = SeriesCache::env_dir()) return SeriesCache(*env);
  return std::nullopt;
}

// ---- Subcommand bodies ------------------------------------------------------

Json run_ifun(const Options& opt) {
  CompleteIntersection X = target_of(opt);
  Json j;
  j["degree"] = opt.degree;
  j["piece"] = zpoly_to_json(i_degree_piece(X, opt.degree));
  j["target"] = target_to_json(X);
  return j;
}

Json run_mu(const Options& opt) {
  CompleteIntersection X = target_of(opt);
  return zpoly_to_json(mu(X, opt.degree).value);
}

Json run_jfun(const Options& opt) {
  CompleteIntersection X = target_of(opt);
  Stability eps = Stability::parse(opt.epsilon);

  SmallJ sj(opt.depth);
  std::optional<SeriesCache> cache = open_cache(opt);
  if (cache && eps == Stability::zero_plus()) {
    // Cache entries hold the 0+ chamber; other chambers just truncate the
    // correction list, so they recompute rather than sharing entries.
    std::optional<SmallJ> computed;
    auto part = [&](const char* name, RatSeries SmallJ::*member) {
      return cache->get_or_compute(X, name, opt.depth, [&] {
        if (!computed) computed = small_j(X, eps, opt.depth);
        return (*computed).*member;
      });
    };
    sj.j0 = part("j0", &SmallJ::j0);
    sj.j1_h = part("j1h", &SmallJ::j1_h);
    sj.j1_unit = part("j1unit", &SmallJ::j1_unit);
  } else {
    sj = small_j(X, eps, opt.depth);
  }

  Json plus = Json::array();
  for (const MuClass& m : zj_plus(X, eps, opt.depth)) {
    Json row;
    row["d"] = m.d;
    row["value"] = zpoly_to_json(m.value);
    plus.push_back(row);
  }

  Json j;
  j["epsilon"] = stability_to_json(eps);
  j["j0"] = series_to_json(sj.j0);
  j["j1_h"] = series_to_json(sj.j1_h);
  j["j1_unit"] = series_to_json(sj.j1_unit);
  j["plus_truncation"] = plus;
  j["target"] = target_to_json(X);
  return j;
}

Json run_mirror_map(const Options& opt) {
  CompleteIntersection X = target_of(opt);
  Json j;
  j["mirror_map"] = series_to_json(mirror_map(X, opt.depth));
  j["target"] = target_to_json(X);
  return j;
}

Json run_genus0(const Options& opt) {
  CompleteIntersection X = target_of(opt);
  return genus0_to_json(X, genus0_oracle(X, opt.depth));
}

Json run_euler(const Options& opt) {
  Json j;
  j["chi"] = rat_to_json(euler_characteristic(target_of(opt)));
  return j;
}

Json run_wallcross(const Options& opt) {
  Stability from = Stability::parse(opt.from);
  Stability to = Stability::parse(opt.to);

  InvariantTable table = table_from_json(load_json_file(opt.input));
  if (!opt.target.empty() && !(table.target == parse_target(opt.target)))
    fail(ErrorKind::Context, "--target disagrees with the input table's target");
  if (table.genus != opt.genus)
    fail(ErrorKind::Context, "--genus disagrees with the input table's genus");
  if (!(table.stability == from))
    fail(ErrorKind::Context, "input table is at stability " +
                                 table.stability.str() + ", not " + from.str());

  // depth <= 0 means "whatever the table holds"; anything deeper than the
  // table is an error inside the transforms, never a silent zero.
  int depth = opt.depth > 0 ? opt.depth : -1;
  std::string transform;
  InvariantTable out = table;
  if (from == to) {
    transform = "identity";
    if (depth > table.depth())
      fail(ErrorKind::Depth, "table holds " + std::to_string(table.depth()) +
                                 " degrees, need " + std::to_string(depth));
    if (depth > 0)
      out = InvariantTable(table.target, table.genus, table.stability,
                           std::vector<Rat>(table.values.begin(),
                                            table.values.begin() + depth));
  } else if (from == Stability::infinity()) {
    out = quasimap_from_gw(table, to, depth);
    transform = "g" + std::to_string(opt.genus) + "-wallcross";
  } else if (to == Stability::infinity()) {
    out = gw_from_quasimap(table, from, depth);
    transform = "gw-from-quasimap";
  } else {
    // Finite to finite runs through the common corner at infinity.
    out = quasimap_from_gw(gw_from_quasimap(table, from, depth), to, depth);
    transform = "g" + std::to_string(opt.genus) + "-wallcross";
  }

  TableProvenance prov{transform, to.str(), from.str()};
  return table_to_json(out, prov);
}

Json run_check(const Options& opt) {
  CompleteIntersection X = target_of(opt);
  int depth = opt.depth;
  std::vector<int> genera = opt.genus_given ? std::vector<int>{opt.genus}
                                            : std::vector<int>{0, 1, 2};
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, const CheckReport& r) {
    Json row;
    row["name"] = name;
    row["pass"] = r.pass;
    if (!r.detail.empty()) row["detail"] = r.detail;
    if (r.failed_order >= 0) row["failed_order"] = r.failed_order;
    checks.push_back(row);
    all = all && r.pass;
  };

  // Homogeneity of the correcting classes.
  {
    CheckReport r = CheckReport::ok();
    for (int d = 1; d <= depth && r.pass; ++d) {
      MuClass m = mu(X, d);
      int expect = MuClass::expected_degree(X, d);
      bool good = expect < 0 ? m.value.empty() : m.value.is_homogeneous(expect);
      if (!good)
        r = CheckReport::failure(
            "inhomogeneous correcting class at degree " + std::to_string(d), d);
    }
    record("mu-homogeneity", r);
  }

  // Dual-route J-series for Calabi-Yau targets.
  if (X.calabi_yau()) {
    SmallJ a = small_j(X, Stability::zero_plus(), depth);
    SmallJ b = small_j_cy_closed(X, Stability::zero_plus(), depth);
    bool same = a.j0 == b.j0 && a.j1_h == b.j1_h && a.j1_unit == b.j1_unit;
    record("j-dual-route",
           same ? CheckReport::ok()
                : CheckReport::failure("closed form disagrees with extraction", -1));
  }

  if (X.index() >= 0) {
    for (int g : genera)
      record("semipositive-identity-g" + std::to_string(g),
             semipositive_identity_check(X, g, Stability::zero_plus(), depth));
  }

  if (X.calabi_yau_threefold()) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    for (int g : genera) {
      if (g < 1) continue;
      std::vector<Rat> v;
      for (int d = 1; d <= depth; ++d) v.emplace_back(num(rng), den(rng));
      InvariantTable t(X, g, Stability::infinity(), std::move(v));
      record("mirror-restatement-g" + std::to_string(g),
             bcov_identity_check(t, depth));
    }
    record("genus0-dual-route", j_extraction_check(X, depth).report);
  }

  if (X.index() >= 1)
    record("chamber-independence",
           fano_independence_check(X, opt.genus_given ? opt.genus : 1, depth));

  Json j;
  j["checks"] = checks;
  j["pass"] = all;
  j["target"] = target_to_json(X);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quasimap/Gromov-Witten series toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_target) {
    auto* t = sub->add_option("--target", opt.target, "target as n:l1,l2,...");
    if (needs_target) t->required();
    sub->add_option("--output", opt.output, "write JSON here instead of stdout");
    sub->add_option("--cache-dir", opt.cache_dir,
                    "series cache directory (or QWC_CACHE_DIR)");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json"}));
  };

  CLI::App* ifun = app.add_subcommand("ifun", "one Laurent degree piece");
  add_common(ifun, true);
  ifun->add_option("--degree", opt.degree, "curve degree d >= 1")->required();

  CLI::App* mu_cmd = app.add_subcommand("mu", "correcting class mu_d");
  add_common(mu_cmd, true);
  mu_cmd->add_option("--degree", opt.degree, "curve degree d >= 1")->required();

  CLI::App* jfun = app.add_subcommand("jfun", "small J-series and truncation data");
  add_common(jfun, true);
  jfun->add_option("--depth", opt.depth, "truncation order (default 6)");
  jfun->add_option("--epsilon", opt.epsilon, "chamber: inf, 0+, or p/q");

  CLI::App* mm = app.add_subcommand("mirror-map", "mirror coordinate Q(q)");
  add_common(mm, true);
  mm->add_option("--depth", opt.depth, "truncation order (default 6)");

  CLI::App* g0 = app.add_subcommand("genus0", "Yukawa coupling and instanton numbers");
  add_common(g0, true);
  g0->add_option("--depth", opt.depth, "number of degrees (default 6)");

  CLI::App* wc = app.add_subcommand("wallcross", "move a table between chambers");
  add_common(wc, false);
  wc->add_option("--genus", opt.genus, "genus of the table")->required();
  wc->add_option("--from", opt.from, "input stability")->required();
  wc->add_option("--to", opt.to, "output stability")->required();
  wc->add_option("--input", opt.input, "input table JSON")->required();
  wc->add_option("--depth", opt.depth, "output depth (default: table depth)");
  wc->preparse_callback([&](size_t) { opt.depth = 0; });

  CLI::App* check = app.add_subcommand("check", "run the identity suites");
  add_common(check, true);
  check->add_option("--depth", opt.depth, "truncation depth (default 3)");
  check->add_option("--genus", opt.genus, "restrict to one genus");
  check->preparse_callback([&](size_t) { opt.depth = 3; });
  check->parse_complete_callback(
      [&] { opt.genus_given = check->count("--genus") > 0; });

  CLI::App* euler = app.add_subcommand("euler", "Euler characteristic");
  add_common(euler, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::exit(app.exit(e));  // prints help to stdout, exits 0
  } catch (const CLI::ParseError& e) {
    emit_error_and_exit(ErrorKind::Flag, e.what());
  }

  try {
    Json out;
    if (*ifun) out = run_ifun(opt);
    else if (*mu_cmd) out = run_mu(opt);
    else if (*jfun) out = run_jfun(opt);
    else if (*mm) out = run_mirror_map(opt);
    else if (*g0) out = run_genus0(opt);
    else if (*wc) out = run_wallcross(opt);
    else if (*check) out = run_check(opt);
    else out = run_euler(opt);
    emit(out, opt.output);
    if (*check && !out["pass"].get<bool>()) return 4;
  } catch (const Error& e) {
    emit_error_and_exit(e.kind(), e.what());
  } catch (const std::exception& e) {
    emit_error_and_exit(ErrorKind::Domain, e.what());
  }
  return 0;
}
