#include "sg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sg/construct.hpp"
#include "sg/json_io.hpp"
#include "sg/verify.hpp"

namespace sg {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void write_output(const Json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  return Json::parse(f);
}

std::vector<Rat> parse_t_values(const std::string& csv) {
  std::vector<Rat> t;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) t.push_back(parse_rat(item));
  return t;
}

std::string flat_desc(const AffineSubspace& w) {
  std::string s = "dim " + std::to_string(w.dim()) + ", base [";
  for (std::size_t i = 0; i < w.base().size(); ++i)
    s += (i ? ", " : "") + rat_str(w.base()[i]);
  return s + "]";
}

int cmd_verify(const LineFamily& fam, bool json, std::ostream& out) {
  const auto skew = pairwise_skew(fam);
  DesignCheck design;
  if (skew.ok) design = is_sg_design(fam);
  if (json) {
    Json j;
    j["pairwise_skew"] = skew.ok;
    j["skew_witness"] = skew.witness
                            ? Json{skew.witness->first, skew.witness->second}
                            : Json(nullptr);
    j["sg_design"] = skew.ok && design.ok;
    j["design_witness"] = design.witness
                              ? Json{design.witness->first, design.witness->second}
                              : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "pairwise skew: " << (skew.ok ? "ok" : "FAIL") << "\n";
    if (skew.witness)
      out << "  witness pair: (" << skew.witness->first << ", " << skew.witness->second
          << ")\n";
    if (skew.ok) {
      out << "design (every pair hull holds a third member): "
          << (design.ok ? "ok" : "FAIL") << "\n";
      if (design.witness)
        out << "  ordinary hull at pair: (" << design.witness->first << ", "
            << design.witness->second << ")\n";
    }
  }
  return (skew.ok && design.ok) ? kOk : kCheckFailed;
}

int cmd_central(const LineFamily& fam, bool json, std::ostream& out) {
  const auto arr = build_hulls(fam);
  const auto center = is_central(arr);
  if (json) {
    Json j;
    j["n_hulls"] = arr.hulls.size();
    j["central"] = center.has_value();
    j["intersection"] = center ? to_json(*center) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "hulls: " << arr.hulls.size() << "\n";
    out << "central: " << (center ? "yes" : "no") << "\n";
    if (center) out << "  intersection: " << flat_desc(*center) << "\n";
  }
  return center ? kOk : kCheckFailed;
}

int cmd_transversal(const LineFamily& fam, bool json, std::ostream& out,
                    std::ostream& err) {
  const auto arr = build_hulls(fam);
  const auto center = is_central(arr);
  if (!center) {
    err << "transversal: arrangement is not central\n";
    return kCheckFailed;
  }
  QVec shift(center->base().size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -center->base()[i];
  const LineFamily shifted = translate(fam, shift);
  const auto arr0 = build_hulls(shifted);
  const AffineSubspace line = extract_transversal(arr0, shifted);
  if (json)
    out << to_json(line).dump(2) << "\n";
  else
    out << "transversal line (after translating the center to the origin): "
        << to_json(line).dump() << "\n";
  return kOk;
}

int cmd_theorem(const LineFamily& fam, bool json, std::ostream& out) {
  const TheoremReport r = check_main_theorem(fam);
  if (json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "pairwise skew: " << (r.skew ? "ok" : "FAIL") << "\n"
        << "design: " << (r.is_design ? "yes" : "no") << "\n"
        << "hulls: " << r.n_hulls << "\n"
        << "central: " << (r.central ? "yes" : "no") << "\n"
        << "contained in a (2k+1)-flat: " << (r.all_in_3d ? "yes" : "no") << "\n"
        << "central <=> contained (equivalence): "
        << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
    if (r.transversal) out << "transversal: " << flat_desc(*r.transversal) << "\n";
    if (r.projected_collinear)
      out << "projected points collinear: " << (*r.projected_collinear ? "yes" : "no")
          << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
  }
  const bool pass = r.skew && r.consistent && r.small_family_ok && r.multiplicity_ok;
  return pass ? kOk : kCheckFailed;
}

int cmd_ordinary_line(const std::vector<QVec>& pts, bool json, std::ostream& out) {
  const auto pair = find_ordinary_line(pts);
  if (json) {
    Json j;
    j["sgc"] = !pair.has_value();
    j["ordinary_pair"] = pair ? Json{pair->first, pair->second} : Json(nullptr);
    j["collinear"] = are_collinear(pts);
    out << j.dump(2) << "\n";
  } else {
    if (pair)
      out << "ordinary line through points " << pair->first << " and " << pair->second
          << "\n";
    else
      out << "no ordinary line: the set is a Sylvester-Gallai configuration"
          << (are_collinear(pts) ? " (collinear)" : "") << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic constructions and checks for skew-flat "
               "Sylvester-Gallai designs"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  long coeff_bound = 10;
  int max_retries = 1000;
  std::string out_path;
  std::string t_values;
  std::string in_path;
  bool as_json = false;

  const auto add_gen_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "PRNG seed");
    cmd->add_option("--coeff-bound", coeff_bound, "integer coefficient bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-retries", max_retries, "rejection-sampling retry budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };
  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", in_path, "input JSON file")->required();
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  auto* gen_fano = app.add_subcommand(
      "gen-fano13", "generate a skew-line realization of the Fano plane in Q^4");
  add_gen_flags(gen_fano);
  auto* gen_r5 = app.add_subcommand(
      "gen-planes-r5", "generate seven planes in Q^5 pairwise meeting at the origin");
  add_gen_flags(gen_r5);
  auto* gen25 = app.add_subcommand(
      "gen-25", "generate seven mutually skew 2-flats in Q^6 with linear pair hulls");
  add_gen_flags(gen25);
  gen25->add_option("--t-values", t_values,
                    "seven distinct nonzero rationals, comma separated");

  auto* verify = app.add_subcommand("verify", "check skewness and the design property");
  add_input(verify);
  auto* central = app.add_subcommand("central", "intersect all pair hulls");
  add_input(central);
  auto* transversal =
      app.add_subcommand("transversal", "extract the common coplanar line");
  add_input(transversal);
  auto* theorem =
      app.add_subcommand("theorem", "full report: design, centrality, containment");
  add_input(theorem);
  auto* ordinary = app.add_subcommand(
      "ordinary-line", "search a projective point set for a 2-point line");
  add_input(ordinary);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    const GenSpec spec{seed, coeff_bound, max_retries};
    if (gen_fano->parsed()) {
      write_output(to_json(gen_fano_13(spec)), out_path, out);
      return kOk;
    }
    if (gen_r5->parsed()) {
      const auto planes = gen_planes_r5(spec);
      write_output(to_json(LineFamily{5, 2, planes}), out_path, out);
      return kOk;
    }
    if (gen25->parsed()) {
      const auto t = t_values.empty() ? default_t_values() : parse_t_values(t_values);
      write_output(to_json(gen_25(spec, t)), out_path, out);
      return kOk;
    }
    if (ordinary->parsed())
      return cmd_ordinary_line(points_from_json(load_json(in_path)), as_json, out);

    const LineFamily fam = family_from_json(load_json(in_path));
    if (verify->parsed()) return cmd_verify(fam, as_json, out);
    if (central->parsed()) return cmd_central(fam, as_json, out);
    if (transversal->parsed()) return cmd_transversal(fam, as_json, out, err);
    if (theorem->parsed()) return cmd_theorem(fam, as_json, out);
  } catch (const Json::parse_error& e) {
    err << "malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const RetriesExhausted& e) {
    err << e.what() << "\n";
    return kCheckFailed;
  } catch (const ConstructionError& e) {
    err << e.what() << "\n";
    return kCheckFailed;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sg
