#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lal/characters.hpp"
#include "lal/classify.hpp"
#include "lal/frames.hpp"
#include "lal/lattice.hpp"
#include "lal/lie.hpp"
#include "lal/niemeier.hpp"
#include "lal/twisted.hpp"

using json = nlohmann::ordered_json;
using namespace lal;

namespace {

std::string g_format = "json";

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "." + std::to_string(i++), os);
  } else {
    os << prefix << "\t"
       << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& report) {
  if (g_format == "tsv")
    flatten(report, "", std::cout);
  else
    std::cout << report.dump(2) << "\n";
}

std::vector<long> parse_labels(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
  return out;
}

Candidate parse_candidate(const std::string& s) {
  std::vector<LevelledAlgebra> comps;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    auto comma = part.find(',');
    if (comma == std::string::npos)
      throw std::domain_error("component needs a level: " + part);
    std::string type = part.substr(0, comma);
    std::string rest = part.substr(comma + 1);
    long mult = 1;
    auto caret = rest.find('^');
    if (caret != std::string::npos) {
      mult = std::stol(rest.substr(caret + 1));
      rest = rest.substr(0, caret);
    }
    long level = std::stol(rest);
    for (long i = 0; i < mult; ++i)
      comps.emplace_back(SimpleLieType::parse(type), level);
  }
  return Candidate(std::move(comps));
}

json report_candidate(const Candidate& c) {
  WReport r = w_report(c);
  json out;
  out["candidate"] = c.str();
  out["dim_v1"] = r.dim_v1.get_str();
  out["alpha_norm"] = rat_str(r.alpha_norm);
  out["k0"] = r.k0.get_str();
  out["n0"] = r.n0.get_str();
  out["admissible"] = r.admissible;
  out["violations"] = r.violations;
  return out;
}

int cmd_lie(const std::string& type, long level,
            const std::string& weight) {
  auto t = SimpleLieType::parse(type);
  auto info = algebra_info(t);
  json out;
  out["type"] = t.name();
  out["dim"] = info.dim;
  out["rank"] = info.rank;
  out["coxeter"] = info.coxeter;
  out["dual_coxeter"] = info.dual_coxeter;
  out["lacing"] = info.lacing;
  Rat rho2 = weyl_vector_norm(t);
  out["weyl_norm"] = rat_str(rho2);
  out["strange_formula_holds"] =
      rho2 == frac(Int(info.dual_coxeter) * info.dim, 12);
  if (level > 0) {
    out["level"] = level;
    out["integrable_weights"] = integrable_weights({t, level}).size();
  }
  if (!weight.empty()) {
    auto labels = parse_labels(weight);
    out["weight"] = labels;
    out["module_dim"] = weyl_dim(t, labels).get_str();
    if (level > 0) {
      const auto& rs = root_system(t);
      out["integrable"] =
          rs.theta_level(rs.weight_from_labels(labels)) <= level;
    }
  }
  emit(out);
  return 0;
}

int cmd_lattice(const std::string& file, const std::string& bound) {
  GramLattice l;
  if (file == "-") {
    l = read_lattice(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) throw std::domain_error("cannot open " + file);
    l = read_lattice(in);
  }
  json out;
  out["rank"] = l.rank;
  out["integral"] = l.is_integral();
  out["even"] = l.is_even();
  out["determinant"] = rat_str(l.determinant());
  auto s = l.signature();
  out["signature"] = {s.pos, s.neg, s.zero};
  if (l.is_integral()) {
    json inv = json::array();
    for (const auto& d : discriminant_group(l).invariant_factors)
      inv.push_back(d.get_str());
    out["discriminant_group"] = inv;
  }
  if (l.positive_definite()) {
    Rat b = parse_rat(bound);
    auto sv = short_vectors(l, b);
    out["short_vector_bound"] = rat_str(b);
    out["short_vectors"] = sv.count.get_str();
  }
  emit(out);
  return 0;
}

int cmd_niemeier(const std::string& name, bool list) {
  json out;
  if (list) {
    out["names"] = niemeier_names();
    emit(out);
    return 0;
  }
  NiemeierLattice n = build_niemeier(name);
  out["name"] = n.name.str();
  out["coxeter"] = n.coxeter;
  out["even"] = n.lattice.is_even();
  out["determinant"] = rat_str(n.lattice.determinant());
  out["weyl_norm"] = rat_str(n.weyl_norm());
  out["root_count"] = niemeier_root_count(n).get_str();
  emit(out);
  return 0;
}

int cmd_hole(const std::string& name, bool deep) {
  HoleConstruction h = hole_construction(name);
  json out;
  out["niemeier"] = h.niemeier.name.str();
  out["coxeter"] = h.niemeier.coxeter;
  auto s = h.lorentzian.signature();
  out["lorentzian_signature"] = {s.pos, s.neg, s.zero};
  out["quotient_even"] = h.quotient.is_even();
  out["quotient_determinant"] = rat_str(h.quotient.determinant());
  out["roots_in_quotient"] = vector_count(h.quotient, 2).get_str();
  out["leech_certified"] = h.certified;
  if (deep) out["norm4_count"] = vector_count(h.quotient, 4).get_str();
  emit(out);
  return 0;
}

int cmd_classify(long rank, bool comp_n0, bool comp_k0,
                 const std::string& candidate) {
  json out;
  if (!candidate.empty()) {
    out = report_candidate(parse_candidate(candidate));
    emit(out);
    return 0;
  }
  EnumOptions opt;
  opt.composite_n0 = comp_n0;
  opt.composite_k0 = comp_k0;
  out["rank"] = rank;
  json cands = json::array();
  for (const auto& c : enumerate_candidates(rank, opt))
    cands.push_back(report_candidate(c));
  out["candidates"] = cands;
  emit(out);
  return 0;
}

int cmd_frames(const std::string& action, const std::string& shape, long k,
               long r) {
  FrameShape f = FrameShape::parse(shape);
  json out;
  out["shape"] = f.str();
  if (action == "power") {
    out["k"] = k;
    out["result"] = power(f, k).str();
  } else if (action == "fixdim") {
    out["fixed_dim"] = fixed_dim(f);
    out["trace"] = trace(f);
    out["order"] = shape_order(f);
  } else if (action == "eigmult") {
    out["r"] = r;
    out["eig_mult"] = eig_mult(f, r);
  } else if (action == "classify") {
    out["classes"] = classify_shape(f);
  }
  emit(out);
  return 0;
}

int cmd_characters(int row, long r, long e, bool z2z4) {
  auto g = census_group(row);
  json out;
  out["row"] = row;
  out["group"] = "Z" + std::to_string(g.a) + "xZ" + std::to_string(g.b);
  if (z2z4) {
    auto rep = z2z4_formula(g);
    out["chi_tau2"] = rep.chi_tau2;
    out["chi_tau2sigma"] = rep.chi_tau2sigma;
    out["chi_sigma"] = rep.chi_sigma;
    out["eight_inner_product"] = rep.value;
    out["positive"] = rep.positive;
  } else {
    auto ip = inner_product(g, {r, e});
    out["r"] = r;
    out["e"] = e;
    out["value"] = ip.value.str();
    out["integral"] = ip.integral;
    if (ip.integral) out["scaled"] = ip.scaled.get_str();
  }
  emit(out);
  return 0;
}

int cmd_twisted_shift(long n, const std::string& kk, long m, long s) {
  TwistParams p{n, parse_rat(kk), m, s};
  json out;
  out["n"] = n;
  out["k"] = kk;
  out["m"] = m;
  out["s"] = s;
  out["grading_shift"] = rat_str(grading_shift(p));
  out["zero_mode_shift"] = rat_str(zero_mode_shift(p));
  emit(out);
  return 0;
}

int cmd_twisted_weight(const std::string& type, long level,
                       const std::string& labels) {
  auto t = SimpleLieType::parse(type);
  json out;
  out["type"] = t.name();
  out["level"] = level;
  if (!labels.empty()) {
    auto l = parse_labels(labels);
    out["labels"] = l;
    out["weight"] = rat_str(twisted_conformal_weight({{{t, level, l}}}));
  } else {
    auto m = minimize_twisted_weight({{t, level}});
    out["min"] = rat_str(m.min);
    json arg = json::array();
    for (const auto& tuple : m.argmin) arg.push_back(tuple[0]);
    out["argmin"] = arg;
  }
  emit(out);
  return 0;
}

int verify_all(bool deep) {
  int failures = 0;
  auto check = [&](const std::string& what, bool ok) {
    std::cout << (ok ? "ok      " : "MISMATCH") << "  " << what << "\n";
    if (!ok) ++failures;
  };

  // strange formula across every supported type
  bool strange = true;
  for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
    for (int rk = 1; rk <= 24; ++rk) {
      try {
        SimpleLieType t(Family{f}, rk);
        auto info = algebra_info(t);
        strange = strange && weyl_vector_norm(t) ==
                                 frac(Int(info.dual_coxeter) * info.dim, 12);
      } catch (const std::exception&) {
        continue;
      }
    }
  check("strange formula, all simple types of rank <= 24", strange);

  // 23 hole constructions
  for (const auto& name : niemeier_names()) {
    HoleConstruction h = hole_construction(name);
    bool ok = h.certified &&
              h.niemeier.weyl_norm() ==
                  Rat(2 * h.niemeier.coxeter * (h.niemeier.coxeter + 1));
    check("hole construction " + name, ok);
    if (deep && (name == "A1^24" || name == "D24"))
      check("deep norm-4 count " + name,
            vector_count(h.quotient, 4) == 196560);
  }

  // rank-4 classification
  {
    auto cands = enumerate_candidates(4);
    std::vector<std::string> names, alphas;
    for (const auto& c : cands) {
      names.push_back(c.str());
      alphas.push_back(rat_str(w_report(c).alpha_norm));
    }
    check("rank-4 candidates",
          names == std::vector<std::string>{"B4,14", "C4,10", "D4,36", "F4,6",
                                            "G2,24^2"} &&
              alphas == std::vector<std::string>{"6", "6", "14", "26/7", "14"});
  }

  // composite sweep and the four surviving cases
  {
    EnumOptions both;
    both.composite_n0 = both.composite_k0 = true;
    std::vector<std::string> found;
    for (long rank : {4L, 6L, 8L, 10L, 12L, 16L})
      for (const auto& c : enumerate_candidates(rank, both))
        found.push_back(c.str());
    std::sort(found.begin(), found.end());
    check("composite sweep -> four cases",
          found == std::vector<std::string>{"C8,1+F4,1^2", "D9,2+A7,1",
                                            "E7,2+B5,1+F4,1", "E8,2+B8,1"});
    bool contradictions = true;
    for (const auto& c : surviving_cases()) {
      bool any = false;
      for (const auto& line : case_inequality_report(c))
        any = any || line.contradiction;
      contradictions = contradictions && any;
    }
    check("final-case inequality contradictions", contradictions);
  }

  // frame-shape table and spot checks
  {
    bool table = true;
    for (const auto& row : class_table())
      table = table && fixed_dim(row.shape) == row.fixed;
    check("frame-shape table regression", table);
    check("power spot checks",
          classify_shape(power(class_by_name("-4A").shape, 2)) ==
                  std::vector<std::string>{"-2A"} &&
              classify_shape(power(class_by_name("-6D").shape, 2)) ==
                  std::vector<std::string>{"3C"} &&
              trace(power(class_by_name("-12E").shape, 6)) == -8 &&
              eig_mult(class_by_name("-12E").shape, 6) == 0 &&
              eig_mult(class_by_name("6C").shape, 3) == 1);
  }

  // the three character sums
  {
    bool z2z4 = true;
    for (int idx : {3, 4, 5, 6, 7, 13, 14})
      z2z4 = z2z4 && z2z4_formula(census_group(idx)).positive;
    check("Z2xZ4 sums positive", z2z4);
    auto ii = inner_product(census_group(10), {4, 1});
    check("Z4xZ4 sum = 16", ii.integral && ii.scaled == 16);
    auto iii = inner_product(census_group(9), {6, 5});
    check("Z2xZ6 sum = 12", iii.integral && iii.scaled == 12);
  }

  std::cout << (failures == 0 ? "verify-all: PASS" : "verify-all: FAIL")
            << "\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice, frame-shape and weight calculators"};
  app.require_subcommand(1);
  app.add_option("--format", g_format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));

  std::string type, weight, file = "-", bound = "2", name, shape, labels,
              candidate, kk = "0";
  long level = 0, k = 1, r = 1, n = 1, m = 0, s = 0;
  int row = 1;
  long rank = 4;
  bool list = false, deep = false, comp_n0 = false, comp_k0 = false,
       z2z4 = false;

  auto* lie = app.add_subcommand("lie", "simple Lie algebra invariants");
  lie->add_option("--type", type)->required();
  lie->add_option("--level", level);
  lie->add_option("--weight", weight, "Dynkin labels, comma separated");

  auto* lattice = app.add_subcommand("lattice", "Gram-lattice invariants");
  lattice->add_option("--file", file, "lattice file, - for stdin");
  lattice->add_option("--bound", bound, "short-vector bound");

  auto* niem = app.add_subcommand("niemeier", "Niemeier lattice builder");
  niem->add_option("--name", name);
  niem->add_flag("--list", list);

  auto* hole = app.add_subcommand("hole", "isotropic-quotient construction");
  hole->add_option("--niemeier", name)->required();
  hole->add_flag("--deep", deep, "also count norm-4 vectors");

  auto* cls = app.add_subcommand("classify", "weight-one algebra candidates");
  cls->add_option("--rank", rank);
  cls->add_flag("--composite-n0", comp_n0);
  cls->add_flag("--composite-k0", comp_k0);
  cls->add_option("--candidate", candidate, "e.g. D9,2+A7,1");

  auto* fr = app.add_subcommand("frames", "frame-shape calculus");
  std::string action;
  fr->add_option("action", action)
      ->check(CLI::IsMember({"power", "fixdim", "eigmult", "classify"}))
      ->required();
  fr->add_option("--shape", shape)->required();
  fr->add_option("--k", k);
  fr->add_option("--r", r);

  auto* ch = app.add_subcommand("characters", "abelian subgroup sums");
  ch->add_option("--row", row)->required();
  ch->add_option("--r", r);
  ch->add_option("--e", m)->default_val(1);
  ch->add_flag("--z2z4", z2z4, "use the Z2xZ4 hand reduction");

  auto* tw = app.add_subcommand("twisted", "twisted-module weights");
  std::string tw_action;
  tw->add_option("action", tw_action)
      ->check(CLI::IsMember({"shift", "weight", "minimize"}))
      ->required();
  tw->add_option("--n", n);
  tw->add_option("--k", kk, "K as p/q");
  tw->add_option("--m", m);
  tw->add_option("--s", s);
  tw->add_option("--type", type);
  tw->add_option("--level", level);
  tw->add_option("--labels", labels);

  auto* verify = app.add_subcommand("verify-all", "full table regression");
  verify->add_flag("--deep", deep, "bound-4 Leech counts (slow)");

  for (auto* sc : {lie, lattice, niem, hole, cls, fr, ch, tw, verify})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*lie) return cmd_lie(type, level, weight);
    if (*lattice) return cmd_lattice(file, bound);
    if (*niem) return cmd_niemeier(name, list);
    if (*hole) return cmd_hole(name, deep);
    if (*cls) return cmd_classify(rank, comp_n0, comp_k0, candidate);
    if (*fr) return cmd_frames(action, shape, k, r);
    if (*ch) return cmd_characters(row, r, m, z2z4);
    if (*tw) {
      if (tw_action == "shift") return cmd_twisted_shift(n, kk, m, s);
      if (tw_action == "weight") return cmd_twisted_weight(type, level, labels);
      return cmd_twisted_weight(type, level, "");
    }
    if (*verify) return verify_all(deep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 64;
}
