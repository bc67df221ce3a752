#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "cubictk/audit.hpp"
#include "cubictk/chow.hpp"
#include "cubictk/deformation.hpp"
#include "cubictk/e6.hpp"
#include "cubictk/ff/census.hpp"
#include "cubictk/lattice.hpp"
#include "cubictk/scroll.hpp"

namespace cubictk::cli {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  json inputs = json::object();
  json result = json::object();
  std::string text;
  int code = 0;
};

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json class_json(const DivisorClass& c) {
  json vec = json::array();
  for (const auto& x : c.coeffs()) vec.push_back(integer_json(x));
  return {{"class", format_class(c)}, {"vector", vec}};
}

std::string vector_text(const DivisorClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.rank(); ++i) s += (i ? "," : "") + c[i].str();
  return s + ")";
}

const SurfaceLattice& surface_by_name(const std::string& name) {
  if (name == "scroll") return SurfaceLattice::scroll();
  if (name == "quadric") return SurfaceLattice::quadric();
  if (name == "cubic-surface") return SurfaceLattice::cubic_surface();
  throw std::invalid_argument("unknown surface '" + name + "'");
}

std::string split_text(const SplitBundle& b) {
  std::string s;
  if (b.base() == SplitBase::P1) {
    for (long k : b.degrees()) s += (s.empty() ? "" : "+") + ("O(" + std::to_string(k) + ")");
  } else {
    for (auto [a, c] : b.bidegrees())
      s += (s.empty() ? "" : "+") + ("O(" + std::to_string(a) + "," + std::to_string(c) + ")");
  }
  return s;
}

json split_json(const SplitBundle& b) {
  if (b.base() == SplitBase::P1) return b.degrees();
  json arr = json::array();
  for (auto [a, c] : b.bidegrees()) arr.push_back(json::array({a, c}));
  return arr;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty summand list");
  return out;
}

// "a,b;c,d" -> {(a,b),(c,d)}
std::vector<std::pair<long, long>> parse_bidegrees(const std::string& s) {
  std::vector<std::pair<long, long>> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    auto v = parse_long_list(tok);
    if (v.size() != 2) throw std::invalid_argument("bidegree needs two entries: '" + tok + "'");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

json line_json(const ff::FqLine& l) {
  json rows = json::array();
  for (const auto& r : l.rows()) {
    json row = json::array();
    for (ff::Elem x : r) row.push_back(l.field().poly_index(x));
    rows.push_back(row);
  }
  return rows;
}

std::string line_text(const ff::FqLine& l) {
  std::string s;
  for (const auto& r : l.rows()) {
    s += "[";
    for (std::size_t i = 0; i < r.size(); ++i)
      s += (i ? " " : "") + std::to_string(l.field().poly_index(r[i]));
    s += "]";
  }
  return s;
}

json census_json(const ff::Census& c) {
  return {{"rational_by_extension", c.rational},
          {"exact_degree_points", c.exact},
          {"closed_points", c.closed},
          {"geometric_total", c.geometric_total},
          {"rechecked", c.rechecked}};
}

std::string census_text(const ff::Census& c) {
  std::ostringstream os;
  os << "e  rational  exact  closed\n";
  for (std::size_t i = 0; i < c.rational.size(); ++i)
    os << i + 1 << "  " << c.rational[i] << "  " << c.exact[i] << "  " << c.closed[i] << "\n";
  os << "geometric total: " << c.geometric_total << "\n";
  os << "re-substitution check: " << (c.rechecked ? "passed" : "FAILED") << "\n";
  return os.str();
}

constexpr const char* kSmoothnessNote =
    "smoothness is not proved; the singularity screen only searches F_q and F_{q^2}";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumerative toolkit for curves on cubic threefolds", "cubictk"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a single JSON object");

  // enum
  long en_degree = 0, en_self = 0;
  bool en_orbits = false;
  auto* en = app.add_subcommand("enum", "Classes on the cubic surface with given degree and C.C");
  en->add_option("--degree", en_degree)->required();
  en->add_option("--self-int", en_self)->required()->allow_extra_args(false);
  en->add_flag("--orbits", en_orbits, "Also list orbits under permutations of e1..e6");

  // orbit
  std::string orb_class;
  auto* orb = app.add_subcommand("orbit", "W(E6) orbit of a cubic-surface class");
  orb->add_option("--class", orb_class, "e.g. l, 2l-e1-e2-e3 or (1;0,0,0,0,0,0)")->required();

  // classify
  std::string cl_surface;
  long cl_degree = 0, cl_genus = 0;
  bool cl_irred = false;
  auto* cl = app.add_subcommand("classify", "Effective candidate classes of given degree and genus");
  cl->add_option("--surface", cl_surface)->required()->check(CLI::IsMember({"scroll", "quadric"}));
  cl->add_option("--degree", cl_degree)->required();
  cl->add_option("--genus", cl_genus)->required();
  cl->add_flag("--irreducible", cl_irred, "Drop classes forced to contain the directrix");

  // residual
  std::string rs_surface, rs_curve, rs_secants = "0";
  auto* rs = app.add_subcommand("residual", "Residual class inside the cut by a cubic");
  rs->add_option("--surface", rs_surface)->required()->check(CLI::IsMember({"scroll", "quadric"}));
  rs->add_option("--curve", rs_curve)->required();
  rs->add_option("--secants", rs_secants);

  // secant-count
  long sc_degree = 0, sc_genus = 0;
  auto* sc = app.add_subcommand("secant-count", "Expected number of 2-secant lines b(C)");
  sc->add_option("--degree", sc_degree)->required();
  sc->add_option("--genus", sc_genus)->required();

  // grr
  long gr_degree = 0, gr_genus = 0;
  auto* gr = app.add_subcommand("grr", "Symbolic c2 of the secant bundle");
  auto* gr_d = gr->add_option("--degree", gr_degree);
  auto* gr_g = gr->add_option("--genus", gr_genus);
  gr_d->needs(gr_g);
  gr_g->needs(gr_d);

  // chi
  long ch_degree = 0, ch_genus = 0;
  auto* ch = app.add_subcommand("chi", "chi(N) for a curve on a cubic threefold");
  ch->add_option("--degree", ch_degree)->required();
  ch->add_option("--genus", ch_genus)->required();

  // split
  auto* sp = app.add_subcommand("split", "Split bundles on P^1 and P^1 x P^1");
  sp->require_subcommand(1);
  long push_deg = 0;
  bool push_pullback = false;
  auto* sp_push = sp->add_subcommand("push", "Pushforward of a line bundle under an elliptic double cover");
  sp_push->add_option("--deg", push_deg)->required();
  sp_push->add_flag("--pullback", push_pullback);
  long fe_rank = 0, fe_total = 0, fe_min = 0, fe_max = 0;
  auto* sp_feas = sp->add_subcommand("feasible", "Splitting types with bounded summands");
  sp_feas->add_option("--rank", fe_rank)->required();
  sp_feas->add_option("--total", fe_total)->required();
  sp_feas->add_option("--min", fe_min)->required();
  sp_feas->add_option("--max", fe_max)->required();
  std::string co_base = "p1", co_summands;
  long co_twist = 0;
  auto* sp_coh = sp->add_subcommand("cohomology", "h0, h1, h2 of a split bundle");
  sp_coh->add_option("--base", co_base)->check(CLI::IsMember({"p1", "quadric"}));
  sp_coh->add_option("--summands", co_summands, "p1: 2,2   quadric: 0,1;1,2")->required();
  sp_coh->add_option("--twist", co_twist);

  // audit
  std::string au_path;
  auto* au = app.add_subcommand("audit", "Check count sheets (default: bundled sheets)");
  au->add_option("path", au_path, "A .sheet file or a directory of them");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Finite-field brute-force checks");
  orc->require_subcommand(1);
  unsigned o_p = 7, o_threads = 1;
  int o_k = 1, o_kmax = 4, o_kmax3 = 2;
  std::uint64_t o_seed = 0;
  std::string o_form = "fermat3-surface";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", o_p, "Characteristic");
    sub->add_option("--k", o_k, "Base field F_{p^k}");
    sub->add_option("--threads", o_threads)->check(CLI::Range(1u, 256u));
  };
  auto* o_lines = orc->add_subcommand("lines", "Lines on a cubic surface or threefold");
  add_common(o_lines);
  o_lines->add_option("--form", o_form, "fermat3-surface | fermat3-threefold | file:<path>");
  auto* o_sec = orc->add_subcommand("secants", "Chord lines of the quartic curve inside a seeded cubic");
  add_common(o_sec);
  o_sec->add_option("--seed", o_seed)->required();
  o_sec->add_option("--k-max", o_kmax)->check(CLI::Range(1, 4));
  auto* o_three = orc->add_subcommand("three-secants", "3-secant lines of a seeded quintic curve");
  add_common(o_three);
  o_three->add_option("--seed", o_seed)->required();
  o_three->add_option("--k-max", o_kmax3)->check(CLI::Range(1, 2));

  for (auto* sub : {en, orb, cl, rs, sc, gr, ch, sp, sp_push, sp_feas, sp_coh, au, orc, o_lines, o_sec,
                    o_three})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  Outcome o;
  std::string command;
  try {
    if (*en) {
      command = "enum";
      o.inputs = {{"degree", en_degree}, {"self_int", en_self}, {"orbits", en_orbits}};
      ClassSet cs = enumerate_classes(en_degree, en_self);
      json arr = json::array();
      std::ostringstream os;
      os << cs.size() << " classes\n";
      for (const auto& c : cs) {
        arr.push_back(class_json(c));
        os << format_class(c) << "  " << vector_text(c) << "\n";
      }
      o.result = {{"count", cs.size()}, {"classes", arr}};
      if (en_orbits) {
        json orbs = json::array();
        os << "orbits under permutations of e1..e6:\n";
        for (const auto& orbit : s6_orbits(cs)) {
          orbs.push_back({{"representative", format_class(orbit.representative)}, {"size", orbit.size}});
          os << "  " << format_class(orbit.representative) << "  size " << orbit.size << "\n";
        }
        o.result["orbits"] = orbs;
      }
      o.text = os.str();
    } else if (*orb) {
      command = "orbit";
      o.inputs = {{"class", orb_class}};
      DivisorClass seed = parse_class(SurfaceLattice::cubic_surface(), orb_class);
      ClassSet cs = weyl_orbit(seed);
      json arr = json::array();
      std::ostringstream os;
      os << cs.size() << " classes in the orbit of " << format_class(seed) << "\n";
      for (const auto& c : cs) {
        arr.push_back(class_json(c));
        os << format_class(c) << "\n";
      }
      o.result = {{"seed", format_class(seed)}, {"size", cs.size()}, {"classes", arr}};
      o.text = os.str();
    } else if (*cl) {
      command = "classify";
      o.inputs = {{"surface", cl_surface}, {"degree", cl_degree}, {"genus", cl_genus},
                  {"irreducible", cl_irred}};
      auto classes = solve_classes({&surface_by_name(cl_surface), cl_degree, cl_genus, cl_irred});
      json arr = json::array();
      for (const auto& c : classes) {
        arr.push_back(class_json(c));
        o.text += format_class(c) + "\n";
      }
      if (classes.empty()) o.text = "no classes\n";
      o.result = {{"classes", arr}};
    } else if (*rs) {
      command = "residual";
      o.inputs = {{"surface", rs_surface}, {"curve", rs_curve}, {"secants", rs_secants}};
      const SurfaceLattice& lat = surface_by_name(rs_surface);
      auto prof = residual_profile(lat, parse_class(lat, rs_curve), parse_class(lat, rs_secants));
      o.result = class_json(prof.cls);
      o.result["degree"] = integer_json(prof.degree);
      o.result["genus"] = integer_json(prof.genus);
      o.text = format_class(prof.cls) + "  degree " + prof.degree.str() + "  genus " +
               prof.genus.str() + "\n";
    } else if (*sc) {
      command = "secant-count";
      o.inputs = {{"degree", sc_degree}, {"genus", sc_genus}};
      BValue b = b_of_C(sc_degree, sc_genus);
      o.result = {{"b", integer_json(b.value)}, {"closed_form", integer_json(b.closed)},
                  {"in_regime", b.in_regime}};
      o.text = b.value.str() + (b.in_regime ? "" : "  (negative: outside the enumerative range)") + "\n";
    } else if (*gr) {
      command = "grr";
      GrrResult g = grr_pushforward(CxCRing::make_symbolic());
      o.result = {{"rank", g.ch0.to_string()}, {"c1", g.c1.to_string()}, {"c2", g.c2.to_string()},
                  {"matches_expected", g.c2 == expected_c2E_symbolic()}};
      o.text = "rank(E) = " + g.ch0.to_string() + "\nc1(E) = " + g.c1.to_string() +
               "\nc2(E) = " + g.c2.to_string() + "\n";
      if (gr_d->count()) {
        o.inputs = {{"degree", gr_degree}, {"genus", gr_genus}};
        CxCRing num = CxCRing::make_numeric(gr_degree, gr_genus);
        ChowElement v = evaluate(g.c2, num);
        Rational deg = num.degree(v);
        o.result["c2_numeric"] = numerator(deg).str() + (denominator(deg) == 1 ? "" : "/" + denominator(deg).str());
        o.text += "c2(E) at d=" + std::to_string(gr_degree) + ", g=" + std::to_string(gr_genus) +
                  ": " + v.to_string() + "\n";
      }
    } else if (*ch) {
      command = "chi";
      o.inputs = {{"degree", ch_degree}, {"genus", ch_genus}};
      long v = chi_normal(CurveOnThreefold::on_cubic_threefold(ch_degree, ch_genus));
      o.result = {{"chi_normal", v}};
      o.text = std::to_string(v) + "\n";
    } else if (*sp_push) {
      command = "split push";
      o.inputs = {{"deg", push_deg}, {"pullback", push_pullback}};
      SplitBundle b = pushforward_split(push_deg, push_pullback);
      o.result = {{"summands", split_json(b)}};
      o.text = split_text(b) + "\n";
    } else if (*sp_feas) {
      command = "split feasible";
      o.inputs = {{"rank", fe_rank}, {"total", fe_total}, {"min", fe_min}, {"max", fe_max}};
      json arr = json::array();
      for (const auto& b : feasible_splittings(fe_rank, fe_total, fe_min, fe_max)) {
        arr.push_back(split_json(b));
        o.text += split_text(b) + "\n";
      }
      if (arr.empty()) o.text = "none\n";
      o.result = {{"splittings", arr}};
    } else if (*sp_coh) {
      command = "split cohomology";
      o.inputs = {{"base", co_base}, {"summands", co_summands}, {"twist", co_twist}};
      SplitBundle b = co_base == "p1" ? SplitBundle::on_p1(parse_long_list(co_summands))
                                      : SplitBundle::on_quadric(parse_bidegrees(co_summands));
      Cohomology c = h0_h1(b, co_twist);
      o.result = {{"h0", c.h0}, {"h1", c.h1}, {"h2", c.h2}};
      o.text = "h0 " + std::to_string(c.h0) + "  h1 " + std::to_string(c.h1) + "  h2 " +
               std::to_string(c.h2) + "\n";
    } else if (*au) {
      command = "audit";
      std::filesystem::path path =
          au_path.empty() ? default_asset_dir() / "paper-sheets" : std::filesystem::path(au_path);
      o.inputs = {{"path", au_path.empty() ? std::string("<bundled>") : au_path}};
      AuditReport rep = audit(load_sheets(path));
      json arr = json::array();
      for (const auto& s : rep.sheets)
        arr.push_back({{"name", s.name}, {"total", s.total}, {"relation", to_string(s.relation)},
                       {"target", s.target}, {"pass", s.pass}});
      o.result = {{"sheets", arr}, {"passed", rep.passed}, {"failed", rep.failed}};
      o.text = format_report(rep);
      o.code = rep.all_pass() ? 0 : 1;
    } else if (*o_lines) {
      command = "oracle lines";
      o.inputs = {{"p", o_p}, {"k", o_k}, {"form", o_form}, {"threads", o_threads}};
      ff::FieldPtr f = ff::FqField::make(o_p, o_k);
      ff::CubicForm form = [&] {
        if (o_form == "fermat3-surface") return ff::CubicForm::fermat(f, 3);
        if (o_form == "fermat3-threefold") return ff::CubicForm::fermat(f, 4);
        if (o_form.rfind("file:", 0) == 0) return ff::CubicForm::load(f, o_form.substr(5));
        throw std::invalid_argument("unknown form '" + o_form + "'");
      }();
      if (form.is_zero()) throw std::invalid_argument("cubic form vanishes identically over this field");
      auto lines = ff::lines_in_hypersurface(form, o_threads);
      bool ok = true;
      json arr = json::array();
      std::ostringstream os;
      os << lines.size() << " lines in P^" << form.n() << " over F_" << f->q() << "\n";
      for (const auto& l : lines) {
        ok = ok && form.contains_line_by_points(l);
        arr.push_back(line_json(l));
        os << line_text(l) << "\n";
      }
      os << "re-substitution check: " << (ok ? "passed" : "FAILED") << "\n";
      json iso = nullptr;
      if (form.n() == 3 && lines.size() == 27) {
        iso = find_isomorphism(ff::line_incidence_graph(lines), incidence_graph()).has_value();
        os << "incidence graph matches the 27-line lattice graph: " << (iso.get<bool>() ? "yes" : "no") << "\n";
      }
      o.result = {{"count", lines.size()}, {"rechecked", ok}, {"incidence_matches_lattice", iso}, {"lines", arr}};
      o.text = os.str();
    } else if (*o_sec) {
      command = "oracle secants";
      o.inputs = {{"p", o_p}, {"k", o_k}, {"seed", o_seed}, {"k_max", o_kmax}, {"threads", o_threads}};
      ff::FieldPtr f = ff::FqField::make(o_p, o_k);
      ff::RncCurve c = ff::RncCurve::standard(f, 4);
      ff::CubicForm x = ff::cubic_through_curve(c, o_seed);
      ff::Census cs = ff::two_secant_census(c, x, o_kmax, o_threads);
      auto sing = ff::find_singular_point(x, 2);
      o.result = census_json(cs);
      o.result["expected"] = 16;
      o.result["singular_point_found"] = sing ? json(sing->extension_degree) : json(nullptr);
      o.result["note"] = kSmoothnessNote;
      o.text = census_text(cs) + "expected b(4,0) = 16\n" +
               (sing ? "the cubic is singular at a point over F_{q^" + std::to_string(sing->extension_degree) + "}\n" : "no singular point over F_q or F_{q^2}\n") + "note: " + kSmoothnessNote + "\n";
    } else if (*o_three) {
      command = "oracle three-secants";
      o.inputs = {{"p", o_p}, {"k", o_k}, {"seed", o_seed}, {"k_max", o_kmax3}, {"threads", o_threads}};
      ff::FieldPtr f = ff::FqField::make(o_p, o_k);
      ff::RncCurve c = ff::RncCurve::seeded_projection(f, 4, 5, o_seed);
      ff::Census cs = ff::three_secant_census(c, o_kmax3, o_threads);
      o.result = census_json(cs);
      o.result["expected"] = 1;
      o.text = census_text(cs) + "expected 1\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (as_json) {
    json doc = {{"command", command}, {"inputs", o.inputs}, {"result", o.result}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace cubictk::cli
