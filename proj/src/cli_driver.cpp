#include "cherx/cli_driver.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "cherx/corpus.hpp"
#include "cherx/errors.hpp"
#include "cherx/parser.hpp"
#include "cherx/report_json.hpp"

namespace cherx {

namespace {

struct CommonOpts {
  std::string group;
  std::string c = "sym";
  unsigned N = 8;
  unsigned depth = 2;
  unsigned order_bound = 1024;
  bool json = false;
};

GroupData make_group(const CommonOpts& o) {
  GroupData g = construct_group(o.group, o.order_bound);
  if (g.num_params() > 0) g.set_params(parse_parameter_values(o.c, g.num_params()));
  return g;
}

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_c) {
  o.c = default_c;
  cmd->add_option("--group", o.group, "group spec, e.g. sym:n=3, cyclic:l=2, gmen:m=2,e=1,n=2")
      ->required();
  cmd->add_option("--c", o.c, "coupling parameters: rational, 'sym', or c0=..,c1=..")
      ->capture_default_str();
  cmd->add_option("--order-bound", o.order_bound, "maximum group order")->capture_default_str();
  cmd->add_flag("--json", o.json, "emit JSON");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Cherednik-algebra kernel"};
  app.require_subcommand(1);

  CommonOpts nf_o;
  std::string nf_expr;
  CLI::App* nf = app.add_subcommand("normal-form", "straighten an algebra expression");
  add_common(nf, nf_o, "sym");
  nf->add_option("expr", nf_expr, "expression, e.g. \"D1*x1\"")->required();

  CommonOpts act_o;
  std::string act_op, act_on;
  CLI::App* act = app.add_subcommand("act", "apply an operator to a polynomial");
  add_common(act, act_o, "sym");
  act->add_option("--op", act_op, "operator expression")->required();
  act->add_option("--on", act_on, "polynomial in the x variables")->required();

  CommonOpts lw_o;
  CLI::App* lw = app.add_subcommand("lowest-weights", "joint kernel of the lowering operators");
  add_common(lw, lw_o, "3/7");
  lw->add_option("--N", lw_o.N, "degree bound")->capture_default_str();
  lw->add_option("--depth", lw_o.depth, "bracket depth")->capture_default_str();

  CommonOpts dec_o;
  CLI::App* dec = app.add_subcommand("decompose", "decompose the polynomial module");
  add_common(dec, dec_o, "3/7");
  dec->add_option("--N", dec_o.N, "degree bound")->capture_default_str();
  dec->add_option("--depth", dec_o.depth, "bracket depth")->capture_default_str();

  CommonOpts ver_o;
  CLI::App* ver = app.add_subcommand("verify", "decompose and check the category equivalence");
  add_common(ver, ver_o, "3/7");
  ver->add_option("--N", ver_o.N, "degree bound")->capture_default_str();
  ver->add_option("--depth", ver_o.depth, "bracket depth")->capture_default_str();

  CommonOpts mol_o;
  std::string mol_chi = "trivial";
  CLI::App* mol = app.add_subcommand("molien", "graded multiplicities of an irreducible");
  add_common(mol, mol_o, "sym");
  mol->add_option("--chi", mol_chi, "irreducible label or alias")->capture_default_str();
  mol->add_option("--N", mol_o.N, "degree bound")->capture_default_str();

  CommonOpts ct_o;
  CLI::App* ct = app.add_subcommand("char-table", "exact character table");
  add_common(ct, ct_o, "sym");

  unsigned seed = 1;
  bool st_json = false;
  CLI::App* st = app.add_subcommand("selftest", "golden corpus and property samples");
  st->add_option("--seed", seed, "seed for the randomized samples")->capture_default_str();
  st->add_flag("--json", st_json, "emit JSON");

  std::vector<const char*> argv = {"cherx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*nf) {
      GroupData g = make_group(nf_o);
      PBWElement e = parse_element(nf_expr, g);
      if (nf_o.json)
        out << pbw_to_json(e).dump(2) << "\n";
      else
        out << e.str() << "\n";
      return 0;
    }
    if (*act) {
      GroupData g = make_group(act_o);
      PBWElement op = parse_element(act_op, g);
      MultiPoly on = parse_polynomial(act_on, g);
      MultiPoly res = apply_pbw(op, on);
      if (act_o.json)
        out << poly_to_json(res, g.num_params() > 1).dump(2) << "\n";
      else
        out << res.str(g.num_params() > 1) << "\n";
      return 0;
    }
    if (*lw) {
      GroupData g = make_group(lw_o);
      GeneratorSet gen = build_generators(g, lw_o.depth);
      DecompositionReport rep = decompose(g, gen, lw_o.N);
      if (lw_o.json) {
        out << lowest_weights_to_json(g, rep).dump(2) << "\n";
      } else {
        for (const auto& entry : rep.lowest_weights) {
          out << "degree " << entry.degree << "  [" << entry.isotype << "]\n";
          for (const auto& f : entry.basis) out << "  " << f.str(g.num_params() > 1) << "\n";
        }
      }
      return rep.stability ? 0 : 1;
    }
    if (*dec) {
      GroupData g = make_group(dec_o);
      GeneratorSet gen = build_generators(g, dec_o.depth);
      DecompositionReport rep = decompose(g, gen, dec_o.N);
      if (dec_o.json) {
        out << report_to_json(rep).dump(2) << "\n";
      } else {
        out << "group " << rep.group_spec << ", c = " << rep.c_desc << ", N = " << rep.N << "\n";
        out << "lowest weights:\n";
        for (const auto& entry : rep.lowest_weights) {
          out << "  degree " << entry.degree << "  [" << entry.isotype << "]\n";
          for (const auto& f : entry.basis) out << "    " << f.str(g.num_params() > 1) << "\n";
        }
        out << "summands:\n";
        for (const auto& s : rep.summands) {
          out << "  <" << s.generator.str(g.num_params() > 1) << ">  dims";
          for (unsigned dd : s.space.dims()) out << " " << dd;
          out << "\n";
        }
        out << "certificates: direct_sum=" << (rep.direct_sum ? "pass" : "FAIL")
            << " completeness=" << (rep.completeness ? "pass" : "FAIL")
            << " stability=" << (rep.stability ? "pass" : "FAIL") << "\n";
        for (const auto& a : rep.anomalies) out << "anomaly: " << a << "\n";
      }
      return rep.certificates_pass() ? 0 : 1;
    }
    if (*ver) {
      GroupData g = make_group(ver_o);
      GeneratorSet gen = build_generators(g, ver_o.depth);
      DecompositionReport rep = decompose(g, gen, ver_o.N);
      EquivalenceReport eq = verify_equivalence(g, gen, rep);
      if (ver_o.json) {
        nlohmann::json j = equivalence_to_json(eq);
        j["report"] = report_to_json(rep);
        out << j.dump(2) << "\n";
      } else {
        for (const auto& c : eq.checks) out << "ok: " << c << "\n";
        for (const auto& v : eq.violations) out << "violation: " << v << "\n";
        out << (eq.holds && rep.certificates_pass() ? "equivalence holds" : "equivalence FAILED")
            << "\n";
      }
      return (eq.holds && rep.certificates_pass()) ? 0 : 1;
    }
    if (*mol) {
      GroupData g = make_group(mol_o);
      CharacterTable t = character_table(g);
      size_t chi = t.lookup(g, mol_chi);
      MolienSeries s = molien_series(g, t, chi, mol_o.N);
      if (mol_o.json) {
        out << molien_to_json(g, t, chi, s).dump(2) << "\n";
      } else {
        for (size_t k = 0; k < s.coef.size(); ++k) out << (k ? "," : "") << s.coef[k];
        out << "\n";
      }
      return 0;
    }
    if (*ct) {
      GroupData g = make_group(ct_o);
      CharacterTable t = character_table(g);
      if (ct_o.json)
        out << char_table_to_json(g, t).dump(2) << "\n";
      else
        out << char_table_text(g, t);
      return 0;
    }
    if (*st) {
      bool ok = run_selftest(seed, out);
      return ok ? 0 : 1;
    }
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFamily& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const OrderBoundExceeded& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "certificate failure: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace cherx
