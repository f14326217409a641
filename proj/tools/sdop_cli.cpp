// Command-line frontend for the super-circle differential-operator kernel.
//
// Exit codes: 0 = success / all checks passed, 1 = a check failed,
// 2 = usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sdop/duality.hpp"
#include "sdop/embed.hpp"
#include "sdop/findim.hpp"
#include "sdop/fock.hpp"
#include "sdop/involution.hpp"
#include "sdop/json_io.hpp"
#include "sdop/qf.hpp"
#include "sdop/rng.hpp"
#include "sdop/suite.hpp"

using nlohmann::json;
using namespace sdop;

namespace {

json read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--in", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

SigmaFamily family_parse(const std::string& s) {
  if (s == "ab") return SigmaFamily::AB;
  if (s == "pp") return SigmaFamily::PP;
  if (s == "pm") return SigmaFamily::PM;
  if (s == "mp") return SigmaFamily::MP;
  if (s == "mm") return SigmaFamily::MM;
  throw CLI::ValidationError("--family", "must be one of ab, pp, pm, mp, mm");
}

SubalgId subalg_parse(const std::string& s) {
  if (s == "zero") return SubalgId::Zero;
  if (s == "pp") return SubalgId::PP;
  if (s == "pm") return SubalgId::PM;
  if (s == "mp") return SubalgId::MP;
  if (s == "mm") return SubalgId::MM;
  throw CLI::ValidationError("--id", "must be one of zero, pp, pm, mp, mm");
}

GenYoung lambda_parse(const std::string& s) {
  GenYoung lam;
  json j = json::parse(s);
  for (const auto& v : j) lam.parts.push_back(v.get<long>());
  return lam;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact kernel for differential operators on the super circle"};
  app.require_subcommand(1);
  app.fallthrough(true);
  std::string in_path, out_path;
  app.add_option("--in", in_path, "input JSON file (default stdin)")->capture_default_str();
  app.add_option("--out", out_path, "output JSON file (default stdout)")->capture_default_str();

  int exit_status = 0;

  // ---- sigma ----------------------------------------------------------
  auto* sigma_cmd = app.add_subcommand("sigma", "anti-involutions");
  std::string fam_str = "ab", a_str = "-1", b_str = "1";
  auto* sig_apply = sigma_cmd->add_subcommand("apply", "apply sigma to an element");
  sig_apply->add_option("--family", fam_str);
  sig_apply->add_option("--a", a_str);
  sig_apply->add_option("--b", b_str);
  sig_apply->callback([&] {
    AntiInvolution sigma{family_parse(fam_str), Rat::parse(a_str), Rat::parse(b_str)};
    SdElem e = sdelem_from_json(read_input(in_path));
    write_output(to_json(apply_sigma(sigma, e)), out_path);
  });
  unsigned laws_seed = 1;
  int laws_count = 50;
  auto* sig_laws = sigma_cmd->add_subcommand("check-laws", "verify sigma^2 and product reversal");
  sig_laws->add_option("--family", fam_str);
  sig_laws->add_option("--a", a_str);
  sig_laws->add_option("--b", b_str);
  sig_laws->add_option("--seed", laws_seed);
  sig_laws->add_option("--count", laws_count);
  sig_laws->callback([&] {
    AntiInvolution sigma{family_parse(fam_str), Rat::parse(a_str), Rat::parse(b_str)};
    Rng rng(laws_seed);
    bool ok = true;
    for (int i = 0; ok && i < laws_count; ++i) {
      bool oa = rng.next() % 2, ob = rng.next() % 2;
      SdElem A = rng.random_homogeneous(3, 4, oa), B = rng.random_homogeneous(3, 4, ob);
      ok = apply_sigma(sigma, apply_sigma(sigma, A)) == A;
      if (ok) {
        SdElem lhs = apply_sigma(sigma, sd_multiply(A, B));
        SdElem rhs = Rat((oa && ob) ? -1 : 1) *
                     sd_multiply(apply_sigma(sigma, B), apply_sigma(sigma, A));
        ok = lhs == rhs;
      }
    }
    write_output({{"sigma", sigma.name()}, {"count", laws_count}, {"ok", ok}}, out_path);
    if (!ok) exit_status = 1;
  });

  // ---- subalg ---------------------------------------------------------
  auto* subalg_cmd = app.add_subcommand("subalg", "fixed subalgebras at a=-1, b=1");
  std::string id_str = "zero", label_str = "0";
  int span_n = 1, span_k = 0;
  auto* member = subalg_cmd->add_subcommand("member", "graded membership predicate");
  member->add_option("--id", id_str);
  member->callback([&] {
    SubalgId id = subalg_parse(id_str);
    SdElem e = sdelem_from_json(read_input(in_path));
    bool nf = graded_membership(id, e);
    bool sg = graded_membership_sigma(id, e);
    write_output({{"member", nf}, {"via_sigma", sg}, {"agree", nf == sg}}, out_path);
    if (!nf) exit_status = 1;
  });
  auto* span = subalg_cmd->add_subcommand("span", "canonical spanning generator");
  span->add_option("--id", id_str);
  span->add_option("--label", label_str, "0|1|x for zero, .|+|- for the P families");
  span->add_option("--n", span_n);
  span->add_option("--k", span_k);
  span->callback([&] {
    write_output(to_json(spanning_generator(subalg_parse(id_str), label_str[0], span_n, span_k)),
                 out_path);
  });

  // ---- embed ----------------------------------------------------------
  std::string s_str = "0";
  int window = 12;
  bool hat = false;
  auto* embed_cmd = app.add_subcommand("embed", "windowed phi_s of an element");
  embed_cmd->add_option("--s", s_str);
  embed_cmd->add_option("--window", window);
  embed_cmd->add_flag("--hat", hat, "include the central correction");
  embed_cmd->callback([&] {
    EmbedParams p{Rat::parse(s_str), window};
    SdElem e = sdelem_from_json(read_input(in_path));
    long clipped = 0;
    WinMat m = hat ? phi_hat_s(p, e, &clipped) : phi_s(p, e, &clipped);
    json j = to_json(m);
    j["clipped"] = clipped;
    write_output(j, out_path);
  });

  // ---- fock -----------------------------------------------------------
  auto* fock_cmd = app.add_subcommand("fock", "free-field Fock space");
  std::string alg_str = "sd";
  std::string flabel = "0";
  int fn = 0, fk = 0, fp = 1, fq = 1;
  auto* fact = fock_cmd->add_subcommand("act", "apply a field mode to a state");
  fact->add_option("--algebra", alg_str, "sd|sd0|spp|spm|smp|smm|gl-horizontal|so-horizontal");
  fact->add_option("--label", flabel, "component label, or so shape 0|+|-");
  fact->add_option("--n", fn);
  fact->add_option("--k", fk);
  fact->add_option("--p", fp);
  fact->add_option("--q", fq);
  fact->callback([&] {
    FockState v = fock_from_json(read_input(in_path));
    FockState out;
    if (alg_str == "gl-horizontal") {
      out = act_horiz_gl(fp, fq, v);
    } else if (alg_str == "so-horizontal") {
      if (flabel == "+") out = act_so_e_plus(fp, fq, v);
      else if (flabel == "-") out = act_so_e_minus(fp, fq, v);
      else out = act_so_e_zero(fp, fq, v);
    } else {
      FieldOpId op;
      if (alg_str == "sd") op.alg = FieldOpId::Alg::SD;
      else if (alg_str == "sd0") op.alg = FieldOpId::Alg::SD0;
      else if (alg_str == "spp") op.alg = FieldOpId::Alg::SDPP;
      else if (alg_str == "spm") op.alg = FieldOpId::Alg::SDPM;
      else if (alg_str == "smp") op.alg = FieldOpId::Alg::SDMP;
      else if (alg_str == "smm") op.alg = FieldOpId::Alg::SDMM;
      else throw CLI::ValidationError("--algebra", "unknown algebra " + alg_str);
      op.label = flabel[0];
      op.n = fn;
      op.k = fk;
      out = act_field(op, v);
    }
    json j = to_json(out);
    j["drops"] = out.drops;
    write_output(j, out_path);
  });
  unsigned bc_seed = 1;
  int bc_count = 20;
  auto* fbracket = fock_cmd->add_subcommand("bracket-check", "operator brackets vs sd_bracket with C -> l");
  fbracket->add_option("--seed", bc_seed);
  fbracket->add_option("--count", bc_count);
  int bc_l = 1, bc_cut = 3;
  fbracket->add_option("--l", bc_l);
  fbracket->add_option("--cutoff", bc_cut);
  fbracket->callback([&] {
    Rng rng(bc_seed);
    FockState vac = FockState::vacuum(bc_l, 2 * bc_cut);
    std::vector<FockState> panel{vac, apply_mode({Species::PsiMinus, 1, 0}, vac),
                                 apply_mode({Species::GamPlus, 1, -1}, vac)};
    long asserted = 0;
    bool ok = true;
    std::string detail;
    for (int i = 0; ok && i < bc_count; ++i) {
      bool oa = rng.next() % 2, ob = rng.next() % 2;
      SdElem A = rng.random_homogeneous(1, 2, oa), B = rng.random_homogeneous(1, 2, ob);
      SdElem br = sd_bracket(A, B);
      for (const auto& v : panel) {
        FockState lhs = act_sd(A, act_sd(B, v)) -
                        Rat((oa && ob) ? -1 : 1) * act_sd(B, act_sd(A, v));
        FockState rhs = act_sd(br, v);
        if (lhs.drops || rhs.drops) continue;
        ++asserted;
        if (!(lhs == rhs)) {
          ok = false;
          std::ostringstream os;
          os << "mismatch: A = " << A << ", B = " << B;
          detail = os.str();
          break;
        }
      }
    }
    write_output({{"ok", ok}, {"asserted", asserted}, {"detail", detail}}, out_path);
    if (!ok) exit_status = 1;
  });
  auto* fweight = fock_cmd->add_subcommand("weight", "diagonal eigenvalues of a state");
  fweight->callback([&] {
    FockState v = fock_from_json(read_input(in_path));
    WeightRecord rec = weight_of(v);
    json diag = json::array();
    for (const auto& [a, val] : rec.gl_diag)
      diag.push_back({{"a", idx_str(a)}, {"v", val.str()}});
    json horiz = json::array(), so = json::array();
    for (const auto& r : rec.horiz_gl) horiz.push_back(r.str());
    for (const auto& r : rec.so_diag) so.push_back(r.str());
    write_output({{"ok", rec.ok},
                  {"detail", rec.detail},
                  {"gl_diag", diag},
                  {"horizontal_gl", horiz},
                  {"so_diag", so},
                  {"energy", idx_str(rec.twice_energy)}},
                 out_path);
    if (!rec.ok) exit_status = 1;
  });

  // ---- hwv ------------------------------------------------------------
  auto* hwv_cmd = app.add_subcommand("hwv", "joint highest weight vectors");
  std::string lam_str = "[]", kind_str = "gl";
  int hl = 1;
  auto* hbuild = hwv_cmd->add_subcommand("build", "determinant hwv applied to the vacuum");
  hbuild->add_option("--l", hl);
  hbuild->add_option("--lambda", lam_str, "JSON integer array");
  hbuild->add_option("--kind", kind_str, "gl|pin-a|pin-b");
  hbuild->callback([&] {
    GenYoung lam = lambda_parse(lam_str);
    if (lam.parts.empty()) lam.parts.assign(hl, 0);
    HwvKind kind = kind_str == "pin-a" ? HwvKind::PinA
                  : kind_str == "pin-b" ? HwvKind::PinB
                                        : HwvKind::GL;
    write_output(to_json(build_hwv(lam, kind)), out_path);
  });
  std::string raising_str = "gl";
  auto* hverify = hwv_cmd->add_subcommand("verify", "annihilation by the raising set");
  hverify->add_option("--raising", raising_str, "gl|osp");
  hverify->callback([&] {
    FockState v = fock_from_json(read_input(in_path));
    auto chk = verify_hwv(v, raising_str == "osp" ? RaisingSet::OSP : RaisingSet::GL);
    write_output({{"ok", chk.ok}, {"offending", chk.offending}}, out_path);
    if (!chk.ok) exit_status = 1;
  });
  auto* hweight = hwv_cmd->add_subcommand("weight", "operational Lambda(lambda)");
  hweight->add_option("--lambda", lam_str);
  hweight->callback([&] {
    GenYoung lam = lambda_parse(lam_str);
    HwWeight w = lambda_weight(lam);
    json j = to_json(w);
    j["formula_check"] = lambda_weight_formula_check(lam, w);
    write_output(j, out_path);
  });

  // ---- delta ----------------------------------------------------------
  auto* delta_cmd = app.add_subcommand("delta", "highest-weight generating functions");
  std::string target_str = "sd";
  int order = 16;
  auto* dpull = delta_cmd->add_subcommand("pullback", "Delta series of the pullback weight");
  dpull->add_option("--target", target_str, "sd|sd0-osp|sd0|spp|spm|smp|smm");
  dpull->add_option("--s", s_str);
  dpull->add_option("--order", order);
  dpull->callback([&] {
    HwWeight w = hw_weight_from_json(read_input(in_path));
    DeltaTarget t = target_str == "sd"      ? DeltaTarget::SD
                    : target_str == "sd0-osp" ? DeltaTarget::SD0_FROM_OSP
                    : target_str == "sd0"     ? DeltaTarget::SD0_GENERIC
                    : target_str == "spp"     ? DeltaTarget::SDPP
                    : target_str == "spm"     ? DeltaTarget::SDPM
                    : target_str == "smp"     ? DeltaTarget::SDMP
                                              : DeltaTarget::SDMM;
    auto [d0, d1] = delta_pullback(w, Rat::parse(s_str), t, order);
    write_output({{"delta0", to_json(d0)}, {"delta1", to_json(d1)}}, out_path);
  });

  // ---- qf -------------------------------------------------------------
  auto* qf_cmd = app.add_subcommand("qf", "quasifiniteness criteria");
  std::string qf_alg = "zero", alpha_str = "[\"0\",\"1\"]", beta_str = "[\"1\"]";
  std::string qc_str = "0";
  auto* qcheck = qf_cmd->add_subcommand("check", "series differential-equation check");
  qcheck->add_option("--algebra", qf_alg, "zero|pp|pm|mp|mm");
  qcheck->add_option("--alpha", alpha_str, "coefficient array");
  qcheck->add_option("--beta", beta_str);
  qcheck->add_option("--c", qc_str);
  qcheck->callback([&] {
    json j = read_input(in_path);
    XiSpec xi;
    xi.algebra = subalg_parse(qf_alg);
    xi.c = Rat::parse(qc_str);
    xi.delta0 = fps_from_json(j.at("delta0"));
    xi.delta1 = fps_from_json(j.at("delta1"));
    Poly alpha = poly_from_json(json::parse(alpha_str));
    bool ok;
    if (xi.algebra == SubalgId::Zero) {
      ok = qf_check_zero(xi, alpha);
    } else {
      AnnPair pr{alpha, poly_from_json(json::parse(beta_str))};
      ok = qf_check_pm(xi, pr);
    }
    write_output({{"ok", ok}}, out_path);
    if (!ok) exit_status = 1;
  });
  int qf_bound = 3, qf_l = 1;
  auto* qsearch = qf_cmd->add_subcommand("search", "Fock annihilator search for a hwv module");
  qsearch->add_option("--lambda", lam_str);
  qsearch->add_option("--l", qf_l);
  qsearch->add_option("--degree-bound", qf_bound);
  qsearch->callback([&] {
    GenYoung lam = lambda_parse(lam_str);
    if (lam.parts.empty()) lam.parts.assign(qf_l, 0);
    FockState v = build_hwv(lam, HwvKind::PinA, 2 * (qf_bound + 3));
    AnnSearchResult r = fock_annihilator_search(v, qf_bound);
    json j{{"is_hw", r.is_hw}, {"detail", r.detail}};
    if (r.alpha) {
      j["alpha"] = to_json(*r.alpha);
      XiSpec xi = xi_from_module(v, 16);
      j["series_check"] = qf_check_zero(xi, *r.alpha);
    }
    write_output(j, out_path);
    if (!r.alpha) exit_status = 1;
  });

  // ---- findim ---------------------------------------------------------
  auto* fd_cmd = app.add_subcommand("findim", "finite-dimensional duality");
  int fd_n = 2, fd_l = 2, fd_k = 2, fd_q = 1, fd_t = 2, fd_r = 2, fd_extra = 0;
  std::string borel_str = "b1";
  auto* fd_hwv = fd_cmd->add_subcommand("hwv", "determinant hwv and annihilation check");
  fd_hwv->add_option("--n", fd_n);
  fd_hwv->add_option("--l", fd_l);
  fd_hwv->add_option("--lambda", lam_str);
  fd_hwv->add_option("--borel", borel_str, "b1|b2");
  fd_hwv->callback([&] {
    Partition lam;
    for (const auto& v : json::parse(lam_str)) lam.parts.push_back(v.get<long>());
    BorelKind borel = borel_str == "b2" ? BorelKind::B2 : BorelKind::B1;
    SuperPoly v = findim_hwv(lam, borel, fd_n, fd_l);
    auto ops = radical_ops(borel, fd_n, fd_l);
    for (auto& op : radical_ops(BorelKind::BPrime, fd_n, fd_l)) ops.push_back(op);
    bool ann = annihilation_check(v, ops);
    std::ostringstream os;
    os << v;
    write_output({{"hwv", os.str()}, {"annihilated", ann}}, out_path);
    if (!ann) exit_status = 1;
  });
  auto* fd_dec = fd_cmd->add_subcommand("decompose", "brute-force isotypic decomposition");
  fd_dec->add_option("--n", fd_n);
  fd_dec->add_option("--l", fd_l);
  fd_dec->add_option("--k", fd_k);
  fd_dec->add_option("--borel", borel_str);
  fd_dec->callback([&] {
    BorelKind borel = borel_str == "b2" ? BorelKind::B2 : BorelKind::B1;
    DecomposeReport rep = decompose_bruteforce(fd_n, fd_l, fd_k, borel);
    json comps = json::array();
    for (const auto& [gl_wt, nn_wt] : rep.components) {
      json c{{"gl_weight", gl_wt}, {"xi_deg", nn_wt.xi_deg}, {"x_deg", nn_wt.x_deg}};
      comps.push_back(c);
    }
    bool ok = rep.singular_count == rep.expected_count && rep.weights_match &&
              rep.closure_dim_sum == rep.space_dim;
    write_output({{"ok", ok},
                  {"space_dim", rep.space_dim},
                  {"singular_count", rep.singular_count},
                  {"expected_count", rep.expected_count},
                  {"closure_dim_sum", rep.closure_dim_sum},
                  {"components", comps}},
                 out_path);
    if (!ok) exit_status = 1;
  });
  auto* fd_lemma = fd_cmd->add_subcommand("check-lemma", "product-of-determinants identity");
  fd_lemma->add_option("--q", fd_q);
  fd_lemma->add_option("--t", fd_t);
  fd_lemma->add_option("--r", fd_r);
  fd_lemma->add_option("--extra-rows", fd_extra);
  fd_lemma->callback([&] {
    bool ok = det_identity_check(fd_q, fd_t, fd_r, fd_extra);
    write_output({{"ok", ok}}, out_path);
    if (!ok) exit_status = 1;
  });

  // ---- suite ----------------------------------------------------------
  auto* suite_cmd = app.add_subcommand("suite", "full acceptance battery");
  SuiteConfig cfg;
  int cutoff = 3;
  std::string format = "table";
  suite_cmd->add_option("--seed", cfg.seed);
  suite_cmd->add_option("--window", cfg.window);
  suite_cmd->add_option("--cutoff", cutoff);
  suite_cmd->add_option("--l", cfg.colors);
  suite_cmd->add_option("--order", cfg.order);
  suite_cmd->add_option("--format", format, "table|json");
  suite_cmd->callback([&] {
    cfg.twice_cutoff = 2 * cutoff;
    if (const char* env = std::getenv("SDOP_WINDOW")) cfg.window = std::atoi(env);
    if (const char* env = std::getenv("SDOP_CUTOFF")) cfg.twice_cutoff = 2 * std::atoi(env);
    auto results = run_acceptance(cfg);
    // Reports carry no timings so that equal seed and config give
    // byte-identical output.
    bool all = true;
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      write_output({{"seed", cfg.seed}, {"results", arr}, {"all_pass", all}}, out_path);
    } else {
      for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
                  << "\n      " << r.detail << "\n";
      }
      std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    }
    if (!all) exit_status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_status;
}
