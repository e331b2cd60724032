// Command-line front end: single operations on manifolds and groups given as
// JSON, plus the verification suites.
//
// Exit codes: 0 success, 1 a verification ran and found counterexamples,
// 2 malformed input or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sslab/sslab.hpp>

namespace {

using sslab::json;

// --manifold / --group arguments take a file path or inline JSON.
json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw sslab::ParseError("cannot open file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw sslab::ParseError(std::string("bad JSON: ") + e.what());
  }
}

// h1/recognize/lspace also accept the output of `fill`, unwrapping closed
// outcomes so the subcommands compose.
json unwrap_closed(json j) {
  if (j.contains("kind")) {
    if (j.at("kind") != "closed")
      throw sslab::ParseError("fill outcome is not a closed manifold: " +
                              j.at("kind").get<std::string>());
    return j.at("manifold");
  }
  return j;
}

void emit(bool as_json, const json& object, const std::string& text) {
  if (as_json)
    std::cout << object.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int print_reports(bool as_json, bool full, const std::vector<sslab::ScanReport>& reports) {
  bool ok = true;
  if (as_json) {
    json out{{"reports", json::array()}};
    for (const auto& r : reports) {
      out["reports"].push_back(sslab::to_json(r, full));
      ok = ok && r.ok();
    }
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::ostringstream line;
      line << r.name << " " << r.params.dump() << ": " << r.cases << " cases, "
           << r.counterexamples.size() << " counterexamples ["
           << static_cast<long>(r.elapsed_ms) << " ms] "
           << (r.ok() ? "OK" : "FAILED");
      std::cout << line.str() << "\n";
      if (!r.ok())
        for (const auto& c : r.counterexamples) std::cout << "  " << c.dump() << "\n";
      ok = ok && r.ok();
    }
    std::cout << (ok ? "all verifications passed" : "verification FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sslab: exact Dehn-filling calculus on Seifert fibered spaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  // fill
  std::string fill_manifold, fill_slope;
  long fill_boundary = 0;
  auto* cmd_fill = app.add_subcommand("fill", "Dehn fill a bounded Seifert manifold");
  cmd_fill->add_option("--manifold", fill_manifold, "bounded manifold (file or JSON)")->required();
  cmd_fill->add_option("--boundary", fill_boundary, "boundary index")->required();
  cmd_fill->add_option("--slope", fill_slope, "filling slope p/q")->required();

  // h1
  std::string h1_manifold;
  auto* cmd_h1 = app.add_subcommand("h1", "first homology of a closed Seifert manifold");
  cmd_h1->add_option("--manifold", h1_manifold, "closed manifold (file or JSON)")->required();

  // recognize
  std::string rec_manifold;
  auto* cmd_rec = app.add_subcommand("recognize", "recognize lens/elliptic/reducible pieces");
  cmd_rec->add_option("--manifold", rec_manifold, "closed manifold (file or JSON)")->required();

  // lspace
  std::string ls_manifold;
  auto* cmd_ls = app.add_subcommand("lspace", "L-space certificate for a closed Seifert QHS");
  cmd_ls->add_option("--manifold,--seifert", ls_manifold, "closed manifold (file or JSON)")
      ->required();

  // abelianize
  std::string ab_group;
  auto* cmd_ab = app.add_subcommand("abelianize", "abelianization of a presentation");
  cmd_ab->add_option("--group", ab_group, "presentation (file or JSON)")->required();

  // longitude
  std::string long_group;
  long long_boundary = 0;
  auto* cmd_long = app.add_subcommand("longitude", "rational longitude of a framed boundary");
  cmd_long->add_option("--group", long_group, "presentation (file or JSON)")->required();
  cmd_long->add_option("--boundary", long_boundary, "peripheral pair index");

  // homcount
  std::string hc_group, hc_target = "S3", hc_table;
  long long hc_budget = 100000000;
  auto* cmd_hc = app.add_subcommand("homcount", "count homomorphisms into a finite group");
  cmd_hc->add_option("--group", hc_group, "presentation (file or JSON)")->required();
  cmd_hc->add_option("--target", hc_target, "target group: 1, Z/n, S3, Dn, V4");
  cmd_hc->add_option("--table", hc_table, "explicit multiplication table (file or JSON)");
  cmd_hc->add_option("--budget", hc_budget, "relator-evaluation budget");

  // alexander
  std::string alex_group;
  auto* cmd_alex = app.add_subcommand("alexander", "one-variable Alexander polynomial");
  cmd_alex->add_option("--group", alex_group, "presentation (file or JSON)")->required();

  // tangle
  std::string tangle_slope;
  auto* cmd_tangle =
      app.add_subcommand("tangle", "rational tangle, two-bridge closure, branched cover");
  cmd_tangle->add_option("--slope", tangle_slope, "slope p/q")->required();

  // verify
  std::string suite = "all";
  long v_bound = 0, v_alpha = 10, v_beta = 10, v_pbound = 20;
  std::string v_cones = "2";
  bool v_full = false;
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
  cmd_verify->add_option("suite", suite,
                         "all | lemma1 | theorem | fillings | fibration | remark | generalized");
  cmd_verify->add_option("--bound", v_bound, "suite-specific bound");
  cmd_verify->add_option("--alpha-bound", v_alpha, "theorem scan alpha bound");
  cmd_verify->add_option("--beta-bound", v_beta, "theorem scan beta bound");
  cmd_verify->add_option("--p-bound", v_pbound, "fibration check bound");
  cmd_verify->add_option("--cones", v_cones, "comma-separated cone multiplicities");
  cmd_verify->add_flag("--all", "run every suite (default)");
  cmd_verify->add_flag("--full", v_full, "include per-case details in JSON output");

  try {
    app.parse(argc, argv);

    if (*cmd_fill) {
      sslab::SeifertBounded m = sslab::bounded_from_json(load_json_arg(fill_manifold));
      sslab::FillOutcome out = sslab::fill(m, fill_boundary, sslab::parse_slope(fill_slope));
      std::string text;
      if (std::holds_alternative<sslab::SeifertClosed>(out))
        text = "closed: " + sslab::to_json(std::get<sslab::SeifertClosed>(out)).dump();
      else if (std::holds_alternative<sslab::SeifertBounded>(out))
        text = "bounded: " + sslab::to_json(std::get<sslab::SeifertBounded>(out)).dump();
      else
        text = "fiber-slope filling: leaves the Seifert calculus";
      emit(as_json, sslab::to_json(out), text);
      return 0;
    }
    if (*cmd_h1) {
      sslab::AbelianGroup h = sslab::h1(sslab::closed_from_json(unwrap_closed(load_json_arg(h1_manifold))));
      emit(as_json, sslab::to_json(h), "H_1 = " + h.str());
      return 0;
    }
    if (*cmd_rec) {
      sslab::SeifertClosed m = sslab::closed_from_json(unwrap_closed(load_json_arg(rec_manifold)));
      sslab::Recognition r = sslab::recognize(sslab::normalize_invariants(m));
      emit(as_json, sslab::to_json(r), r.str());
      return 0;
    }
    if (*cmd_ls) {
      sslab::SeifertClosed m = sslab::closed_from_json(unwrap_closed(load_json_arg(ls_manifold)));
      sslab::LSpaceCertificate c = sslab::certify(m);
      emit(as_json, sslab::to_json(c),
           sslab::to_string(c.verdict) + " / " + sslab::to_string(c.rule) + "  witness " +
               c.witness.dump());
      return 0;
    }
    if (*cmd_ab) {
      sslab::AbelianGroup h =
          sslab::abelianization(sslab::presentation_from_json(load_json_arg(ab_group)));
      emit(as_json, sslab::to_json(h), "H_1 = " + h.str());
      return 0;
    }
    if (*cmd_long) {
      sslab::Slope l = sslab::rational_longitude(
          sslab::presentation_from_json(load_json_arg(long_group)), long_boundary);
      emit(as_json, sslab::to_json(l), "longitude = " + l.str());
      return 0;
    }
    if (*cmd_hc) {
      sslab::Presentation p = sslab::presentation_from_json(load_json_arg(hc_group));
      sslab::FiniteGroup g =
          hc_table.empty()
              ? sslab::FiniteGroup::by_name(hc_target)
              : [&] {
                  json t = load_json_arg(hc_table);
                  return sslab::FiniteGroup(t.value("name", "custom"), t.at("order").get<int>(),
                                            t.at("table").get<std::vector<int>>());
                }();
      sslab::Int n = sslab::hom_count(p, g, sslab::Int(static_cast<long>(hc_budget)));
      emit(as_json, json{{"count", sslab::int_to_json(n)}, {"target", g.name}},
           "|Hom| = " + n.get_str() + " into " + g.name);
      return 0;
    }
    if (*cmd_alex) {
      sslab::LaurentPolynomial d =
          sslab::alexander_polynomial(sslab::presentation_from_json(load_json_arg(alex_group)));
      emit(as_json, json{{"alexander", d.str()}}, "Delta(t) = " + d.str());
      return 0;
    }
    if (*cmd_tangle) {
      sslab::Slope s = sslab::parse_slope(tangle_slope);
      sslab::RationalTangle t = sslab::tangle_from_slope(s);
      sslab::TwoBridgeLink l = sslab::two_bridge(t);
      sslab::LensSpace cover = sslab::double_branched_cover(l);
      json out{{"tangle", sslab::to_json(t)},
               {"two_bridge", sslab::to_json(l)},
               {"double_branched_cover", sslab::to_json(cover)}};
      emit(as_json, out, "tangle " + t.str() + "\nclosure " + l.str() + "\ncover " + cover.str());
      return 0;
    }
    if (*cmd_verify) {
      std::vector<sslab::ScanReport> reports;
      auto parse_cones = [&] {
        std::vector<sslab::Int> cones;
        std::stringstream ss(v_cones);
        std::string item;
        while (std::getline(ss, item, ',')) cones.emplace_back(item);
        return cones;
      };
      if (suite == "lemma1") {
        reports.push_back(sslab::lemma1_scan(v_bound ? v_bound : 50));
      } else if (suite == "theorem") {
        reports.push_back(sslab::theorem_scan(v_alpha, v_beta));
      } else if (suite == "fillings") {
        reports.push_back(sslab::n_filling_scan(v_bound ? v_bound : 10));
      } else if (suite == "fibration") {
        for (long p = 2; p <= v_pbound; ++p) {
          reports.push_back(sslab::fibration_obstruction_check(p, 1));
          if (p > 2) reports.push_back(sslab::fibration_obstruction_check(p, p - 1));
        }
      } else if (suite == "remark") {
        reports.push_back(sslab::remark_scan(v_bound ? v_bound : 25));
      } else if (suite == "generalized") {
        reports.push_back(sslab::generalized_theorem_scan(
            sslab::build_generalized(parse_cones()), v_bound ? v_bound : 6));
      } else if (suite == "all" || suite == "paper") {
        reports.push_back(sslab::lemma1_scan(50));
        reports.push_back(sslab::theorem_scan(10, 10));
        reports.push_back(sslab::n_filling_scan(10));
        for (long p = 2; p <= 20; ++p) reports.push_back(sslab::fibration_obstruction_check(p, 1));
        reports.push_back(sslab::remark_scan(25));
        reports.push_back(sslab::generalized_theorem_scan(
            sslab::build_generalized({sslab::Int(2)}), 6));
        reports.push_back(sslab::generalized_theorem_scan(
            sslab::build_generalized({sslab::Int(2), sslab::Int(3)}), 6));
      } else {
        throw sslab::ParseError("unknown suite: " + suite);
      }
      return print_reports(as_json, v_full, reports);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const sslab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
