// Command-line driver: poset dumps, verification suites, generating-function
// tables.  Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "richadm/genfun.hpp"
#include "richadm/json_io.hpp"

using namespace richadm;

namespace {

struct Options {
  std::string type = "A";
  int rank = 2;
  std::string coweight;
  std::string suite = "all";
  std::string family;
  std::string out;
  std::string format = "json";
  unsigned seed = 20140331;
  int max_len = 8;
  int k = 0, n = 0;
  bool at_one = false, rank_poly = false, sign_flip = false;
};

Vec parse_coweight(const std::string& s, int rank) {
  Vec v;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty()) throw std::invalid_argument("empty coweight coordinate");
    v.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(v.size()) != rank)
    throw std::invalid_argument("coweight length must equal the rank");
  return v;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw std::invalid_argument("cannot open output path " + opt.out);
  f << text << "\n";
}

int run_poset(const Options& opt) {
  RootSystem rs = build_root_system(opt.type.at(0), opt.rank);
  WeylGroup W(rs);
  AffineWeyl aw(W);
  Vec lam = parse_coweight(opt.coweight, opt.rank);
  nlohmann::json j = poset_dump_json(aw, lam);
  emit(opt, j.dump(2));
  return 0;
}

CheckReport diagnostics_report(const WeylGroup& W, const Vec& lam) {
  CheckReport rep{"poset_diagnostics", instance_label(W.rs(), lam)};
  auto d = poset_diagnostics(qj_poset(W, lam));
  rep.n_checked = 2;
  if (!d.thin) rep.failures.push_back({{"check", "thin"}});
  if (!d.eulerian) rep.failures.push_back({{"check", "eulerian"}});
  return rep;
}

int run_verify(const Options& opt) {
  RootSystem rs = build_root_system(opt.type.at(0), opt.rank);
  WeylGroup W(rs);
  AffineWeyl aw(W);
  Localization loc(aw, opt.sign_flip, opt.max_len);
  Vec lam = parse_coweight(opt.coweight, opt.rank);
  if (!rs.dominant(lam)) throw std::invalid_argument("coweight is not dominant");

  std::vector<CheckReport> reports;
  bool all = opt.suite == "all";
  if (all || opt.suite == "combinatorics") {
    reports.push_back(verify_prop_equiv(aw, lam));
    reports.push_back(verify_theorem_combin(aw, lam));
    reports.push_back(verify_poset_bijections(W, J_of(rs, lam)));
    reports.push_back(diagnostics_report(W, lam));
  }
  if (all || opt.suite == "cohomology") {
    reports.push_back(loc.lemma_suite_H({lam}, opt.seed));
    reports.push_back(loc.verify_cmain(lam));
  }
  if (all || opt.suite == "ktheory") {
    reports.push_back(loc.lemma_suite_K({lam}, opt.seed));
    reports.push_back(loc.verify_kmain(lam));
    reports.push_back(loc.matrix_identity_K());
  }
  if (reports.empty()) throw std::invalid_argument("unknown suite " + opt.suite);

  nlohmann::json j = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.ok();
    j.push_back(r.to_json());
  }
  emit(opt, nlohmann::json{{"reports", j}, {"ok", ok}}.dump(2));
  return ok ? 0 : 1;
}

std::string csv_row(const std::string& type, const std::string& params, const QPoly& F,
                    const QPoly* A) {
  std::string fa, aa;
  for (int i = 0; i <= F.degree(); ++i) fa += (i ? " " : "") + std::to_string(F.coeff(i));
  if (A)
    for (int i = 0; i <= A->degree(); ++i) aa += (i ? " " : "") + std::to_string(A->coeff(i));
  return type + "," + params + "," + fa + "," + aa + "," + std::to_string(F.at_one());
}

int run_genfun(const Options& opt) {
  QPoly F;
  QPoly A;
  bool have_A = false;
  std::string type = opt.family, params;

  if (opt.family == "typeA") {
    if (opt.k <= 0 || opt.n <= 0) throw std::invalid_argument("typeA needs --k and --n");
    F = typeA_F(opt.k, opt.n);
    A = F.reversed(F.degree());
    have_A = true;
    params = "k=" + std::to_string(opt.k) + ";n=" + std::to_string(opt.n);
  } else if (opt.family == "typeB" || opt.family == "typeD") {
    if (opt.n < 0) throw std::invalid_argument("--n must be nonnegative");
    SeriesX s = opt.family == "typeB" ? typeB_F_series() : typeD_F_series();
    F = s.coeff(opt.n);
    A = F.reversed(F.degree());
    have_A = true;
    params = "n=" + std::to_string(opt.n);
  } else if (opt.family == "typeC") {
    if (opt.n < 0) throw std::invalid_argument("--n must be nonnegative");
    if (!typeC_check(opt.n)) {
      emit(opt, "typeC consistency check failed at n=" + std::to_string(opt.n));
      return 1;
    }
    long long v = typeC_count(opt.n);
    if (opt.format == "csv")
      emit(opt, "type,params,F_coeffs,A_coeffs,F_at_1\ntypeC,n=" + std::to_string(opt.n) +
                    ",,," + std::to_string(v));
    else
      emit(opt, std::to_string(v));
    return 0;
  } else if (opt.family == "brute") {
    RootSystem rs = build_root_system(opt.type.at(0), opt.rank);
    WeylGroup W(rs);
    AffineWeyl aw(W);
    Vec lam = parse_coweight(opt.coweight, opt.rank);
    F = F_brute(aw, lam);
    A = A_brute(W, lam);
    have_A = true;
    type = opt.type + std::to_string(opt.rank);
    params = "coweight=" + opt.coweight;
    for (auto& ch : params)
      if (ch == ',') ch = ';';
  } else {
    throw std::invalid_argument("unknown family " + opt.family);
  }

  if (opt.format == "csv") {
    emit(opt, "type,params,F_coeffs,A_coeffs,F_at_1\n" +
                  csv_row(type, params, F, have_A ? &A : nullptr));
  } else if (opt.format == "json") {
    nlohmann::json j{{"type", type}, {"params", params}, {"F", F.c}, {"F_at_1", F.at_one()}};
    if (have_A) j["A"] = A.c;
    emit(opt, j.dump(2));
  } else if (opt.rank_poly) {
    emit(opt, A.str());
  } else if (opt.at_one) {
    emit(opt, std::to_string(F.at_one()));
  } else {
    emit(opt, F.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projected Richardson posets, admissible sets and equivariant localization"};
  app.require_subcommand(1);
  Options opt;

  auto add_group_opts = [&](CLI::App* cmd, bool need_coweight) {
    cmd->add_option("--type", opt.type, "group type, one of A,B,C,D")
        ->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd->add_option("--rank", opt.rank, "rank of the root system");
    auto* cw = cmd->add_option("--coweight", opt.coweight,
                               "dominant coweight, comma-separated fundamental coordinates");
    if (need_coweight) cw->required();
  };

  CLI::App* poset = app.add_subcommand("poset", "dump Q_J and the admissible set");
  add_group_opts(poset, true);
  poset->add_option("--out", opt.out, "output path (default stdout)");
  poset->add_option("--format", opt.format)->check(CLI::IsMember({"json"}));

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_group_opts(verify, true);
  verify->add_option("--suite", opt.suite, "combinatorics|cohomology|ktheory|all")
      ->check(CLI::IsMember({"combinatorics", "cohomology", "ktheory", "all"}));
  verify->add_option("--seed", opt.seed, "seed for sampled checks");
  verify->add_option("--max-len", opt.max_len, "length bound for sampled checks");
  verify->add_option("--out", opt.out, "output path (default stdout)");
  verify->add_flag("--inject-sign-flip", opt.sign_flip,
                   "negate localization roots (mutation check; suites must fail)");

  CLI::App* genfun = app.add_subcommand("genfun", "generating functions and counts");
  add_group_opts(genfun, false);
  genfun->add_option("--family", opt.family, "typeA|typeB|typeC|typeD|brute")->required();
  genfun->add_option("--k", opt.k, "Grassmannian parameter k");
  genfun->add_option("--n", opt.n, "family index n");
  genfun->add_flag("--at-one", opt.at_one, "print F(1) instead of coefficients");
  genfun->add_flag("--rank-poly", opt.rank_poly, "print the rank polynomial A_J");
  auto* gf_format = genfun->add_option("--format", opt.format, "json or csv; bare list when absent")
                        ->check(CLI::IsMember({"json", "csv"}));
  genfun->add_option("--out", opt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (poset->parsed()) return run_poset(opt);
    if (verify->parsed()) return run_verify(opt);
    if (genfun->parsed()) {
      if (gf_format->count() == 0) opt.format = "plain";
      return run_genfun(opt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
