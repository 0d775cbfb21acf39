#include "cli.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slicereg/equiv.hpp"
#include "slicereg/format.hpp"
#include "slicereg/parse.hpp"
#include "slicereg/series.hpp"

namespace slicereg::cli {

namespace {

using nlohmann::json;

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

json to_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

std::string cdiv_text(const std::optional<Divisor>& d) { return d ? format(*d) : "slice-preserving"; }

std::string pair_text(const std::string& a, const std::string& b) { return "( " + a + " ; " + b + " )"; }

// Output of one command: JSON document and the equivalent plain-text lines.
struct Report {
  json doc;
  std::vector<std::string> lines;
  int code = kExitOk;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

// ---------------------------------------------------------------- commands

Report cmd_invariants(const std::string& f_text, bool r3) {
  Report r;
  r.doc = {{"command", "invariants"}, {"inputs", {f_text}}};
  if (r3) {
    const R3StemPoly f = parse_r3_stem(f_text);
    const auto tr = r3_trace(f);
    const auto nm = r3_norm(f);
    const auto cd = r3_cdiv(f);
    r.doc["trace"] = pair_text(format(tr.first), format(tr.second));
    r.doc["norm"] = pair_text(format(nm.first), format(nm.second));
    r.doc["cdiv"] = pair_text(cdiv_text(cd.first), cdiv_text(cd.second));
  } else {
    const InvariantBundle b = invariants(parse_stem(f_text));
    r.doc["trace"] = format(b.trace);
    r.doc["norm"] = format(b.norm);
    r.doc["cdiv"] = cdiv_text(b.central_divisor);
  }
  r.line("trace: " + r.doc["trace"].get<std::string>());
  r.line("norm: " + r.doc["norm"].get<std::string>());
  r.line("cdiv: " + r.doc["cdiv"].get<std::string>());
  return r;
}

std::string root_text(const NumericRoot& root) {
  std::ostringstream os;
  os.precision(12);
  os << root.value.real();
  if (root.value.imag() != 0.0) os << (root.value.imag() < 0 ? " - " : " + ") << std::abs(root.value.imag()) << "*E";
  os << " (multiplicity " << root.multiplicity << ")";
  return os.str();
}

Report cmd_cdiv(const std::string& f_text, bool roots) {
  Report r;
  const StemPoly f = parse_stem(f_text);
  const Divisor d = cdiv(f);
  r.doc = {{"command", "cdiv"}, {"inputs", {f_text}}, {"cdiv", format(d)}};
  r.line("cdiv: " + format(d));
  if (roots) {
    std::vector<Check> checks;
    for (const auto& root : numeric_roots(d.gcd_poly())) {
      r.line("  root " + root_text(root));
      checks.push_back({"root", true, root_text(root)});
    }
    r.doc["checks"] = to_json(checks);
  }
  return r;
}

std::string verdict_reason(const EquivVerdict& v) { return v.equivalent ? std::string() : v.detail; }

Report cmd_equiv(const std::string& f_text, const std::string& h_text, bool r3, bool allow_swap) {
  Report r;
  r.doc = {{"command", "equiv"}, {"inputs", {f_text, h_text}}};
  if (r3) {
    const R3Verdict v = r3_equivalent(parse_r3_stem(f_text), parse_r3_stem(h_text), allow_swap);
    r.doc["equivalent"] = v.equivalent;
    r.doc["branch"] = to_string(v.pairing);
    if (v.equivalent) {
      r.doc["reason"] = nullptr;
    } else {
      std::string why = "first: " + (v.direct.first.equivalent ? std::string("ok") : v.direct.first.detail) +
                        "; second: " + (v.direct.second.equivalent ? std::string("ok") : v.direct.second.detail);
      r.doc["reason"] = why;
    }
    std::vector<Check> checks{{"direct.first", v.direct.first.equivalent, verdict_reason(v.direct.first)},
                              {"direct.second", v.direct.second.equivalent, verdict_reason(v.direct.second)}};
    if (v.swapped) {
      checks.push_back({"swapped.first", v.swapped->first.equivalent, verdict_reason(v.swapped->first)});
      checks.push_back({"swapped.second", v.swapped->second.equivalent, verdict_reason(v.swapped->second)});
    }
    r.doc["checks"] = to_json(checks);
    r.line(std::string("equivalent: ") + (v.equivalent ? "true" : "false"));
    r.line(std::string("pairing: ") + to_string(v.pairing));
    for (const auto& c : checks) r.line("  " + c.name + ": " + (c.pass ? "equivalent" : c.detail));
    r.code = v.equivalent ? kExitOk : kExitNegative;
    return r;
  }
  const EquivVerdict v = equivalent(parse_stem(f_text), parse_stem(h_text));
  r.doc["equivalent"] = v.equivalent;
  r.doc["branch"] = to_string(v.branch);
  r.doc["reason"] = v.equivalent ? json(nullptr) : json(v.detail);
  r.line(std::string("equivalent: ") + (v.equivalent ? "true" : "false"));
  r.line(std::string("branch: ") + to_string(v.branch));
  if (!v.equivalent) r.line("reason: " + v.detail);
  r.code = v.equivalent ? kExitOk : kExitNegative;
  return r;
}

Report cmd_r3_equiv(const std::string& f_text, const std::string& h_text, bool allow_swap) {
  Report r = cmd_equiv(f_text, h_text, true, allow_swap);
  r.doc["command"] = "r3-equiv";
  return r;
}

json orbit_json(const OrbitClass& c) {
  return {{"kind", to_string(c.kind)}, {"lambda", format(c.lambda)}, {"isotropy", to_string(c.isotropy)}};
}

Report cmd_orbit(const std::string& p_text, const std::string& q_text) {
  Report r;
  const CQuat p = parse_point(p_text);
  const CQuat q = parse_point(q_text);
  const bool same = orbit_equivalent(p, q);
  r.doc = {{"command", "orbit"}, {"inputs", {p_text, q_text}}, {"equivalent", same}};
  r.doc["orbit"] = orbit_json(classify_orbit(p));
  r.line(std::string("same orbit: ") + (same ? "true" : "false"));
  r.code = same ? kExitOk : kExitNegative;
  return r;
}

Report cmd_classify(const std::string& p_text) {
  Report r;
  const OrbitClass c = classify_orbit(parse_point(p_text));
  r.doc = {{"command", "classify"}, {"inputs", {p_text}}, {"orbit", orbit_json(c)}};
  r.line(std::string("kind: ") + to_string(c.kind));
  r.line("lambda: " + format(c.lambda));
  r.line(std::string("isotropy: ") + to_string(c.isotropy));
  return r;
}

Report cmd_intertwine(const std::string& f_text, const std::string& h_text, unsigned max_degree) {
  Report r;
  const StemPoly f = parse_stem(f_text);
  const StemPoly h = parse_stem(h_text);
  const auto basis = find_intertwiner(f, h, max_degree);
  r.doc = {{"command", "intertwine"}, {"inputs", {f_text, h_text}}};
  json list = json::array();
  std::vector<Check> checks;
  r.line("solutions of F*alpha = alpha*H with deg alpha <= " + std::to_string(max_degree) + ": dimension " +
         std::to_string(basis.size()));
  for (std::size_t n = 0; n < basis.size(); ++n) {
    const ConjugatorReport rep = verify_conjugator(f, h, basis[n]);
    list.push_back(format(basis[n]));
    checks.push_back({"alpha[" + std::to_string(n) + "] invertible_on_C", rep.invertible_on_C,
                      "Nm(alpha) = " + format(rep.norm_alpha)});
    r.line("alpha[" + std::to_string(n) + "] = " + format(basis[n]));
    r.line("  Nm(alpha) = " + format(rep.norm_alpha));
    r.line(std::string("  invertible_on_C: ") + (rep.invertible_on_C ? "true" : "false"));
    if (n == 0) {
      r.doc["norm_alpha"] = format(rep.norm_alpha);
      r.doc["invertible_on_C"] = rep.invertible_on_C;
    }
  }
  r.doc["intertwiners"] = list;
  r.doc["checks"] = to_json(checks);
  r.code = basis.empty() ? kExitNegative : kExitOk;
  return r;
}

Report cmd_verify(const std::string& f_text, const std::string& h_text, const std::string& a_text) {
  Report r;
  const ConjugatorReport rep = verify_conjugator(parse_stem(f_text), parse_stem(h_text), parse_stem(a_text));
  r.doc = {{"command", "verify"},
           {"inputs", {f_text, h_text, a_text}},
           {"norm_alpha", format(rep.norm_alpha)},
           {"invertible_on_C", rep.invertible_on_C}};
  std::vector<Check> checks{{"intertwines", rep.intertwines, "F*alpha = alpha*H"}};
  if (rep.conjugation_identity) {
    checks.push_back({"conjugation_identity", *rep.conjugation_identity, "F = alpha*H*alpha^-1"});
  }
  r.doc["checks"] = to_json(checks);
  r.line(std::string("intertwines: ") + (rep.intertwines ? "true" : "false"));
  r.line("Nm(alpha) = " + format(rep.norm_alpha));
  r.line(std::string("invertible_on_C: ") + (rep.invertible_on_C ? "true" : "false"));
  if (rep.conjugation_identity) {
    r.line(std::string("F = alpha*H*alpha^-1: ") + (*rep.conjugation_identity ? "true" : "false"));
  }
  r.code = rep.intertwines ? kExitOk : kExitNegative;
  return r;
}

Report cmd_eval(const std::string& f_text, const std::string& at_text, bool slice) {
  Report r;
  const StemPoly f = parse_stem(f_text);
  const CQuat at = parse_point(at_text);
  r.doc = {{"command", "eval"}, {"inputs", {f_text, at_text}}};
  if (slice) {
    if (!is_real(at)) throw Error("slice evaluation needs a point of H (no E)");
    const Quaternion q = real_part(at);
    const Quaternion direct = eval_slice(f, q);
    const Quaternion via = eval_slice_via_stem(f, q);
    r.line("f(q) = " + format(direct));
    std::vector<Check> checks{{"representation_formula", direct == via, format(via)}};
    r.doc["checks"] = to_json(checks);
    if (direct != via) r.code = kExitNegative;
  } else {
    if (!at.is_scalar()) throw Error("stem evaluation needs a central point a + b*E");
    const CQuat v = eval_stem(f, at[0]);
    r.line("F(z) = " + format(v));
    r.doc["checks"] = to_json({{"value", true, format(v)}});
  }
  return r;
}

// "0.3, 1, -0.7, 0.5+0.5E, -1.2E"
std::vector<ComplexF> parse_samples(const std::string& text) {
  std::vector<ComplexF> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string s;
    for (char ch : item) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) continue;
    double re = 0.0;
    double im = 0.0;
    std::size_t split = std::string::npos;
    for (std::size_t n = 1; n < s.size(); ++n) {
      if ((s[n] == '+' || s[n] == '-') && s[n - 1] != 'e') split = n;
    }
    auto parse_part = [&](const std::string& part) {
      if (!part.empty() && part.back() == 'E') {
        const std::string coeff = part.substr(0, part.size() - 1);
        im += coeff.empty() || coeff == "+" ? 1.0 : (coeff == "-" ? -1.0 : std::stod(coeff));
      } else {
        re += std::stod(part);
      }
    };
    try {
      if (split == std::string::npos) {
        parse_part(s);
      } else {
        parse_part(s.substr(0, split));
        parse_part(s.substr(split));
      }
    } catch (const std::exception&) {
      throw Error("malformed sample '" + s + "'");
    }
    out.emplace_back(re, im);
  }
  return out;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Transcendental example: f = i, g = cos(z)·i + sin(z)·j, conjugator cos(z/2) − k·sin(z/2).
std::vector<Check> series_checks(std::size_t order, double tol, const std::vector<ComplexF>& samples) {
  std::vector<Check> checks;
  const TruncSeries g = rotating_unit_series(order);
  const TruncSeries f = TruncSeries::constant(Quaternion::basis(1), order);
  const TruncSeries hc = half_angle_rotor_series(order);

  const RatPoly nm = series_norm(g);
  checks.push_back({"Nm(g) - 1 = 0 mod z^" + std::to_string(order), nm == RatPoly(Rat(1)),
                    "Nm(g) mod z^N = " + format(nm)});
  checks.push_back({"Tr(g) = 0 mod z^" + std::to_string(order), series_trace(g).is_zero(),
                    "Tr(g) = " + format(series_trace(g))});
  const TruncSeries minus = -(build_series(SeriesKind::Cos, order).times(Quaternion::basis(1)) +
                              build_series(SeriesKind::Sin, order).times(Quaternion::basis(2)));
  checks.push_back({"g^c = -cos*i - sin*j", series_conj(g) == minus, "coefficientwise"});

  for (const double t : {0.5, 1.0}) {
    const NumericValue v = eval_numeric(g, CQuatF(0.0, 0.0, ComplexF(t, 0.0), 0.0));
    const CQuatF expected(-std::sinh(t), std::cosh(t), 0.0, 0.0);
    const double err = l1_norm(v.value - expected);
    checks.push_back({"g(t*j) = cosh(t)*i - sinh(t) at t = " + std::to_string(t).substr(0, 3), err <= 1e-10,
                      "error " + fmt_double(err) + ", tail bound " + fmt_double(v.tail_bound)});
  }

  const ConjugationReport rep = check_conjugation_identity(f, g, hc, samples, tol);
  for (const auto& s : rep.samples) {
    std::ostringstream name;
    name << "Hc^-1*f*Hc = g at z = " << s.z.real() << (s.z.imag() < 0 ? "-" : "+") << std::abs(s.z.imag()) << "E";
    checks.push_back({name.str(), s.pass,
                      "identity error " + fmt_double(s.identity_error) + ", Tr error " + fmt_double(s.trace_error) +
                          ", Nm error " + fmt_double(s.norm_error) + ", tail bound " + fmt_double(s.tail_bound) +
                          ", tol " + fmt_double(tol)});
  }
  return checks;
}

Report checks_report(const char* command, std::vector<Check> checks) {
  Report r;
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    r.line(std::string(c.pass ? "PASS " : "FAIL ") + c.name + " -- " + c.detail);
  }
  r.line(all ? "all checks passed" : "some checks FAILED");
  r.doc = {{"command", command}, {"inputs", json::array()}, {"checks", to_json(checks)}};
  r.code = all ? kExitOk : kExitNegative;
  return r;
}

Report cmd_series_check(std::size_t order, double tol, const std::string& samples_text) {
  const auto samples = samples_text.empty() ? default_sample_grid() : parse_samples(samples_text);
  return checks_report("series-check", series_checks(order, tol, samples));
}

std::vector<Check> worked_example_checks() {
  std::vector<Check> checks;
  auto add = [&](std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };

  // Parsing of the two stems of the non-equivalent pair.
  const StemPoly f_pair = parse_stem("i + z*j + (1/2)*z^2*k");
  const StemPoly g_pair = parse_stem("(1 + (1/2)*z^2)*i");
  add("parse F = i + z*j + 1/2*z^2*k",
      f_pair == StemPoly({Quaternion::basis(1), Quaternion::basis(2), Quaternion(0, 0, 0, Rat(1, 2))}), format(f_pair));
  add("parse G = (1 + 1/2*z^2)*i",
      g_pair == StemPoly({Quaternion::basis(1), Quaternion(), Quaternion(0, Rat(1, 2), 0, 0)}), format(g_pair));

  const RatPoly nm_pair{Rat(1), Rat(0), Rat(1), Rat(0), Rat(1, 4)};
  add("Tr(F) = Tr(G) = 0", stem_trace(f_pair).is_zero() && stem_trace(g_pair).is_zero(),
      format(stem_trace(f_pair)) + ", " + format(stem_trace(g_pair)));
  add("Nm(F) = Nm(G) = 1 + z^2 + 1/4*z^4", stem_norm(f_pair) == nm_pair && stem_norm(g_pair) == nm_pair,
      format(stem_norm(f_pair)) + ", " + format(stem_norm(g_pair)));
  add("F^c = -F", stem_conj(f_pair) == -f_pair, format(stem_conj(f_pair)));
  add("cdiv(F) empty", cdiv(f_pair).is_empty(), format(cdiv(f_pair)));
  const Divisor dg = cdiv(g_pair);
  const auto roots = numeric_roots(dg.gcd_poly());
  bool roots_ok = roots.size() == 2;
  for (const auto& rt : roots) {
    roots_ok = roots_ok && rt.multiplicity == 1 && std::abs(std::abs(rt.value.imag()) - std::sqrt(2.0)) < 1e-12 &&
               std::abs(rt.value.real()) < 1e-12;
  }
  add("cdiv(G) = 2 + z^2 (roots +-sqrt(2)*E, multiplicity 1)", dg == Divisor(GRatPoly{2, 0, 1}) && roots_ok,
      format(dg));
  const EquivVerdict v_pair = equivalent(f_pair, g_pair);
  add("F, G not equivalent (cdiv)", !v_pair.equivalent && v_pair.reason == Mismatch::Cdiv, v_pair.detail);
  const auto factored = remove_central_divisor(f_pair);
  add("remove_central_divisor(F) = (1, F)",
      factored.lambda == GRatPoly(GRat(1)) && factored.reduced == complexify(f_pair), format(factored.lambda));

  const StemPoly alpha_pair = parse_stem("(2 + (1/2)*z^2)*i + z*j + (1/2)*z^2*k");
  const auto basis = find_intertwiner(f_pair, g_pair, 2);
  add("intertwiner (2 + 1/2*z^2)*i + z*j + 1/2*z^2*k lies in the solution space (deg <= 2)",
      in_span(basis, alpha_pair), "solution space dimension " + std::to_string(basis.size()));
  const ConjugatorReport rep_pair = verify_conjugator(f_pair, g_pair, alpha_pair);
  const RatPoly nm_alpha{Rat(4), Rat(0), Rat(3), Rat(0), Rat(1, 2)};
  add("verify intertwiner: identity holds, Nm = 4 + 3*z^2 + 1/2*z^4, not invertible on C",
      rep_pair.intertwines && rep_pair.norm_alpha == nm_alpha && !rep_pair.invertible_on_C, format(rep_pair.norm_alpha));

  // Central divisor with multiplicities, and its failure of additivity.
  const StemPoly f_div = parse_stem("z + i*z^2*(z-1) + j*z^3*(z-1)^2");
  const Divisor d_div = cdiv(f_div);
  add("cdiv(z + i*z^2*(z-1) + j*z^3*(z-1)^2) = 2*{0} + 1*{1}",
      d_div == Divisor(GRatPoly{0, 0, -1, 1}) && d_div.multiplicity(GRat(0)) == 2 && d_div.multiplicity(GRat(1)) == 1,
      format(d_div) + ", multiplicities " + std::to_string(d_div.multiplicity(GRat(0))) + ", " +
          std::to_string(d_div.multiplicity(GRat(1))));
  const RatPoly a_div{0, 0, -1, 1};
  const RatPoly b_div = RatPoly{0, 0, 0, 1} * RatPoly{1, -2, 1};
  add("gcd(z^2*(z-1), z^3*(z-1)^2) = z^3 - z^2", gcd(a_div, b_div) == RatPoly{0, 0, -1, 1}, format(gcd(a_div, b_div)));
  const StemPoly fa = parse_stem("1 + i*z");
  const StemPoly ga = parse_stem("1 + j*(1 + z)");
  const StemPoly fg = star(fa, ga);
  add("(1 + i*z)*(1 + j*(1+z)) = 1 + i*z + j*(z+1) + k*(z+1)*z",
      fg == parse_stem("1 + i*z + j*(z+1) + k*(z+1)*z"), format(fg));
  const Divisor dfa = cdiv(fa);
  const Divisor dga = cdiv(ga);
  const Divisor dfg = cdiv(fg);
  add("cdiv(F) = {0}, cdiv(G) = {-1}, cdiv(F*G) empty",
      dfa == Divisor(GRatPoly{0, 1}) && dga == Divisor(GRatPoly{1, 1}) && dfg.is_empty() &&
          dfg.gcd_poly() != dfa.gcd_poly() * dga.gcd_poly(),
      format(dfa) + ", " + format(dga) + ", " + format(dfg));

  for (auto& c : series_checks(kDefaultSeriesOrder, kDefaultTolerance, default_sample_grid())) {
    checks.push_back(std::move(c));
  }
  return checks;
}

void print(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << r.doc.dump(2) << '\n';
  } else {
    for (const auto& l : r.lines) out << l << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and equivalence of quaternionic slice regular polynomials", "slicereg"};
  app.require_subcommand(1, 1);

  bool as_json = false;
  std::string algebra = "h";
  std::string a1, a2, a3, at;
  bool roots = false;
  bool allow_swap = false;
  bool slice = false;
  bool stem_flag = false;
  unsigned degree_max = 0;
  std::size_t order = kDefaultSeriesOrder;
  double tol = kDefaultTolerance;
  std::string samples;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Machine-readable output"); };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra, "h (quaternions) or r3 (pairs '( F1 ; F2 )')")
        ->check(CLI::IsMember({"h", "r3"}));
  };

  auto* inv = app.add_subcommand("invariants", "Trace, norm and central divisor of a stem");
  inv->add_option("F", a1)->required();
  add_algebra(inv);
  add_json(inv);

  auto* cd = app.add_subcommand("cdiv", "Central divisor as a monic polynomial");
  cd->add_option("F", a1)->required();
  cd->add_flag("--roots", roots, "List numeric roots with multiplicities");
  add_json(cd);

  auto* eq = app.add_subcommand("equiv", "Decide equivalence under pointwise automorphisms");
  eq->add_option("F", a1)->required();
  eq->add_option("H", a2)->required();
  add_algebra(eq);
  eq->add_flag("--allow-swap", allow_swap, "R3: also allow swapping the two components");
  add_json(eq);

  auto* r3eq = app.add_subcommand("r3-equiv", "Equivalence of R3 stems given as '( F1 ; F2 )'");
  r3eq->add_option("F", a1)->required();
  r3eq->add_option("H", a2)->required();
  r3eq->add_flag("--allow-swap", allow_swap, "Also allow swapping the two components");
  add_json(r3eq);

  auto* orb = app.add_subcommand("orbit", "Do two points of H_C lie in one automorphism orbit?");
  orb->add_option("p", a1)->required();
  orb->add_option("q", a2)->required();
  add_json(orb);

  auto* cls = app.add_subcommand("classify", "Orbit type of a point of H_C");
  cls->add_option("p", a1)->required();
  add_json(cls);

  auto* itw = app.add_subcommand("intertwine", "Basis of polynomial solutions of F*alpha = alpha*H");
  itw->add_option("F", a1)->required();
  itw->add_option("H", a2)->required();
  itw->add_option("--degree-max", degree_max, "Degree bound for alpha")->required();
  add_json(itw);

  auto* ver = app.add_subcommand("verify", "Check a candidate conjugator alpha");
  ver->add_option("F", a1)->required();
  ver->add_option("H", a2)->required();
  ver->add_option("alpha", a3)->required();
  add_json(ver);

  auto* ev = app.add_subcommand("eval", "Evaluate as stem function (at a + b*E) or slice function (at q in H)");
  ev->add_option("F", a1)->required();
  ev->add_option("--at", at, "Evaluation point")->required();
  auto* slice_opt = ev->add_flag("--slice", slice, "Slice evaluation at a quaternion");
  ev->add_flag("--stem", stem_flag, "Stem evaluation at a central point (default)")->excludes(slice_opt);
  add_json(ev);

  auto* sc = app.add_subcommand("series-check", "Transcendental example with truncated series");
  sc->add_option("--order", order, "Truncation order N")->check(CLI::PositiveNumber);
  sc->add_option("--tol", tol, "Tolerance");
  sc->add_option("--samples", samples, "Comma-separated complex samples, e.g. \"0.3, 0.5+0.5E, -1.2E\"");
  add_json(sc);

  auto* pe = app.add_subcommand("paper-examples", "Re-derive every worked example and compare");
  add_json(pe);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const bool r3 = algebra == "r3";
    Report r;
    if (inv->parsed()) r = cmd_invariants(a1, r3);
    else if (cd->parsed()) r = cmd_cdiv(a1, roots);
    else if (eq->parsed()) r = cmd_equiv(a1, a2, r3, allow_swap);
    else if (r3eq->parsed()) r = cmd_r3_equiv(a1, a2, allow_swap);
    else if (orb->parsed()) r = cmd_orbit(a1, a2);
    else if (cls->parsed()) r = cmd_classify(a1);
    else if (itw->parsed()) r = cmd_intertwine(a1, a2, degree_max);
    else if (ver->parsed()) r = cmd_verify(a1, a2, a3);
    else if (ev->parsed()) r = cmd_eval(a1, at, slice);
    else if (sc->parsed()) r = cmd_series_check(order, tol, samples);
    else r = checks_report("paper-examples", worked_example_checks());
    print(r, as_json, out);
    return r.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace slicereg::cli
