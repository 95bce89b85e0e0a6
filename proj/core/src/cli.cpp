#include "trop/cli.hpp"

#include "trop/amoeba.hpp"
#include "trop/current.hpp"
#include "trop/documents.hpp"
#include "trop/measure.hpp"
#include "trop/toric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace trop {

namespace {

std::string vec_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string vec_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_string(v[i]);
  }
  return s + ")";
}

std::string set_string(const std::vector<int>& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J[i] + 1);  // 1-based in reports
  }
  return s + "}";
}

IntVec parse_int_list(const std::string& text, int expected, const std::string& what) {
  IntVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Int(item));
    } catch (const std::invalid_argument&) {
      throw InputError("bad integer '" + item + "' in --" + what);
    }
  }
  if (expected >= 0 && int(out.size()) != expected)
    throw InputError("--" + what + " needs " + std::to_string(expected) + " entries");
  return out;
}

Window parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--window expects LO:HI");
  try {
    Window w;
    w.lo = std::stod(text.substr(0, colon));
    w.hi = std::stod(text.substr(colon + 1));
    if (!(w.lo < w.hi)) throw InputError("--window needs LO < HI");
    return w;
  } catch (const std::invalid_argument&) {
    throw InputError("--window expects numeric LO:HI");
  }
}

int cmd_validate(const std::string& input, std::ostream& out) {
  WeightedComplex complex = parse_cycle(read_file(input));
  BalanceReport report = is_balanced(complex);
  out << "cells: " << complex.cells.size() << ", facets: " << complex.facets.size() << "\n";
  for (const auto& fb : report.facets) {
    out << "facet " << fb.facet << ": " << (fb.balanced ? "balanced" : "defect " + vec_string(fb.defect));
    if (!fb.failing_minors.empty()) {
      out << ", failing minors:";
      for (const auto& J : fb.failing_minors) out << " " << set_string(J);
    }
    out << "\n";
  }
  out << (report.balanced ? "balanced" : "not balanced") << "\n";
  return report.balanced ? 0 : 1;
}

int cmd_certify(const std::string& input, std::ostream& out) {
  WeightedComplex complex = parse_cycle(read_file(input));
  ClosednessReport report = closedness_certificate(complex);
  for (std::size_t fi = 0; fi < report.facet_closed.size(); ++fi)
    out << "facet " << fi << ": " << (report.facet_closed[fi] ? "closed" : "not closed") << "\n";
  for (const auto& w : report.witnesses)
    out << "witness: facet " << w.facet << ", J = " << set_string(w.rows)
        << ", value = " << rat_string(w.value) << "\n";
  out << "closedness certificate: " << (report.closed ? "closed" : "not closed") << "\n";
  out << "matches balancing check: " << (report.matches_balancing ? "yes" : "NO") << "\n";
  return report.closed && report.matches_balancing ? 0 : 1;
}

int cmd_extremal(const std::string& input, std::ostream& out) {
  WeightedComplex complex = parse_cycle(read_file(input));
  ExtremalityReport report = is_strongly_extremal(complex);
  if (!report.balanced) out << "warning: input is not balanced\n";
  int expected = complex.ambient - complex.dim + 2;
  out << "dual graph components: " << report.components << "\n";
  for (const auto& check : report.stars) {
    FacetStar star = facet_star(complex, check.facet);
    out << "facet " << check.facet << ": valency " << check.valency;
    if (!check.valency_ok) out << " != " << expected;
    out << ", sub-independent: " << (check.subindependent ? "yes" : "no")
        << ", spanning: " << (check.spanning ? "yes" : "no")
        << "; rigidity dim " << rigidity_dimension(star) << "\n";
  }
  out << "strongly extremal: " << (report.strongly_extremal ? "yes" : "no") << "\n";
  return report.strongly_extremal ? 0 : 1;
}

int cmd_hyper(const std::string& input, std::ostream& out) {
  TropicalPolynomial p = parse_polynomial(read_file(input));
  out << write_cycle(hypersurface(p));
  return 0;
}

int cmd_ma(const std::string& input, std::ostream& out) {
  TropicalPolynomial p = parse_polynomial(read_file(input));
  AtomicMeasure measure = monge_ampere(p);
  for (const auto& atom : measure.atoms)
    out << "atom " << vec_string(atom.point) << " mass " << rat_string(atom.mass) << "\n";
  out << "total mass = " << rat_string(measure.total_mass()) << "\n";
  return 0;
}

int cmd_intersect(const std::vector<std::string>& inputs, std::ostream& out) {
  std::vector<TropicalPolynomial> ps;
  for (const auto& path : inputs) ps.push_back(parse_polynomial(read_file(path)));
  AtomicMeasure mixed = mixed_monge_ampere(ps);
  for (const auto& atom : mixed.atoms)
    out << "atom " << vec_string(atom.point) << " mass " << rat_string(atom.mass) << "\n";
  out << "stable intersection number = " << rat_string(stable_intersection_number(ps)) << "\n";
  return 0;
}

int cmd_pairing(const std::string& input, int facet, const std::string& nu_text,
                const std::string& j_text, std::ostream& out) {
  WeightedComplex complex = parse_cycle(read_file(input));
  if (facet < 0 || facet >= int(complex.facets.size()))
    throw InputError("--facet out of range (complex has " +
                     std::to_string(complex.facets.size()) + " facets)");
  FacetStar star = facet_star(complex, facet);
  std::vector<CurrentFrame> frames = build_frames(star);
  PairingQuery query;
  query.nu = parse_int_list(nu_text, complex.ambient, "nu");
  IntVec j_list = parse_int_list(j_text, complex.dim, "J");
  for (const auto& j : j_list) {
    if (j < 1 || j > complex.ambient) throw InputError("--J entries must lie in 1.." + std::to_string(complex.ambient));
    query.rows.push_back(int(j.get_si()) - 1);
  }
  std::sort(query.rows.begin(), query.rows.end());
  for (std::size_t i = 1; i < query.rows.size(); ++i)
    if (query.rows[i] == query.rows[i - 1]) throw InputError("--J entries must be distinct");
  out << "pairing = " << rat_string(boundary_pairing(star, frames, query)) << "\n";
  return 0;
}

int cmd_binomials(const std::string& input, std::ostream& out) {
  BasisDocument doc = parse_basis(read_file(input));
  BinomialSystem sys = binomial_system(doc.basis, doc.phases);
  auto monomial = [](const IntVec& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += " ";
      s += "z" + std::to_string(i + 1);
      if (e[i] != 1) s += "^" + e[i].get_str();
    }
    return s.empty() ? std::string("1") : s;
  };
  for (const auto& b : sys.binomials)
    out << monomial(b.xi_plus) << " - gamma(" << rat_string(b.phase) << ") "
        << monomial(b.xi_minus) << "  degree " << projective_degree(b).get_str() << "\n";
  if (sys.binomials.empty()) out << "trivial kernel; empty system\n";
  return 0;
}

int cmd_amoeba(const std::string& input, int l, int m, int grid, const Window& window,
               const std::string& plot_path, std::ostream& out) {
  TropicalPolynomial p = parse_polynomial(read_file(input));
  LaurentPoly f = build_flm(p, l, m);
  AmoebaSample sample = sample_amoeba(f, grid, window);
  WeightedComplex cycle = hypersurface(p);
  double distance = one_sided_hausdorff(sample, cycle, window);

  out << "x1";
  for (int i = 2; i <= p.n; ++i) out << ",x" << i;
  out << "\n";
  out << std::setprecision(17);
  for (const auto& pt : sample.points) {
    for (std::size_t i = 0; i < pt.size(); ++i) out << (i ? "," : "") << pt[i];
    out << "\n";
  }
  out << m << "," << distance << "\n";

  if (!plot_path.empty()) {
    std::ofstream plot(plot_path);
    if (!plot) throw InputError("cannot write '" + plot_path + "'");
    plot << std::setprecision(17);
    plot << "# power-family sample: l=" << l << ", m=" << m
         << "; current normalization label 1/m^(n-p) = 1/" << m << "^" << (p.n - cycle.dim)
         << " (set convergence demonstrated; the limit itself is not computed)\n";
    plot << "# amoeba sample\n";
    for (const auto& pt : sample.points) plot << pt[0] << " " << pt[1] << "\n";
    plot << "\n\n# tropical cycle (window-clipped segments)\n";
    std::vector<HalfSpace> box;
    for (int i = 0; i < 2; ++i) {
      IntVec e(2, Int(0));
      e[i] = 1;
      box.push_back(HalfSpace{e, Rat(window.lo), RelKind::Inequality});
      IntVec f2(2, Int(0));
      f2[i] = -1;
      box.push_back(HalfSpace{f2, Rat(-window.hi), RelKind::Inequality});
    }
    for (const auto& cell : cycle.cells) {
      std::vector<HalfSpace> constraints = cell.poly.hrep;
      constraints.insert(constraints.end(), box.begin(), box.end());
      auto clipped = from_hrep(constraints, 2);
      if (!clipped || clipped->vertices.size() < 2) continue;
      for (const auto& v : clipped->vertices)
        plot << v[0].get_d() << " " << v[1].get_d() << "\n";
      plot << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tropical cycles, currents, intersections, and amoeba demos"};
  app.require_subcommand(1);

  std::string input, nu_text, j_text, window_text = "-5:5", plot_path;
  std::vector<std::string> inputs;
  int facet = 0, l = 1, m = 1, grid = 100;

  auto* validate = app.add_subcommand("validate", "parse a cycle and check the balancing condition");
  validate->add_option("--input", input)->required();
  auto* certify = app.add_subcommand("certify", "closedness certificate, cross-checked against balancing");
  certify->add_option("--input", input)->required();
  auto* extremal = app.add_subcommand("extremal", "strong extremality checks and rigidity dimensions");
  extremal->add_option("--input", input)->required();
  auto* hyper = app.add_subcommand("hyper", "corner locus of a tropical polynomial as a cycle document");
  hyper->add_option("--input", input)->required();
  auto* ma = app.add_subcommand("ma", "Monge-Ampere measure of a tropical polynomial");
  ma->add_option("--input", input)->required();
  auto* intersect = app.add_subcommand("intersect", "mixed measure and stable intersection number");
  intersect->add_option("--input", inputs)->required();
  auto* pairing = app.add_subcommand("pairing", "one boundary pairing value at a facet");
  pairing->add_option("--input", input)->required();
  pairing->add_option("--facet", facet)->required();
  pairing->add_option("--nu", nu_text)->required();
  pairing->add_option("--J", j_text)->required();
  auto* binomials = app.add_subcommand("binomials", "binomial system of a saturated basis, with degrees");
  binomials->add_option("--input", input)->required();
  auto* amoeba = app.add_subcommand("amoeba", "sample an amoeba and measure the distance to the cycle");
  amoeba->add_option("--input", input)->required();
  amoeba->add_option("--l", l);
  amoeba->add_option("--m", m);
  amoeba->add_option("--grid", grid);
  amoeba->add_option("--window", window_text);
  amoeba->add_option("--plot", plot_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) return cmd_validate(input, out);
    if (*certify) return cmd_certify(input, out);
    if (*extremal) return cmd_extremal(input, out);
    if (*hyper) return cmd_hyper(input, out);
    if (*ma) return cmd_ma(input, out);
    if (*intersect) return cmd_intersect(inputs, out);
    if (*pairing) return cmd_pairing(input, facet, nu_text, j_text, out);
    if (*binomials) return cmd_binomials(input, out);
    if (*amoeba) return cmd_amoeba(input, l, m, grid, parse_window(window_text), plot_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "unknown subcommand\n";
  return 2;
}

}  // namespace trop
