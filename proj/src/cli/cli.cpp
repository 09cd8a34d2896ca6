#include "qhyp/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "qhyp/cli/json_io.hpp"
#include "qhyp/geometry/hyperbolic.hpp"
#include "qhyp/geometry/lie.hpp"
#include "qhyp/geometry/lie_triple.hpp"
#include "qhyp/geometry/sp_group.hpp"

namespace qhyp::cli {

namespace {

struct Options {
  bool json_out = false;
  bool strict = false;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};

json load(const std::string& arg, const std::string& what) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream f(arg);
    if (!f) throw InputError("", "cannot read " + what + " \"" + arg + "\"");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", what + " is not valid JSON: " + e.what());
  }
}

// Element given inline: "3", "-1/2" or an element object.
FieldElement element_arg(const std::string& arg, const Field& k) {
  if (!arg.empty() && arg.front() == '{') return parse_element(load(arg, "element"), k, "");
  return parse_element(json(arg), k, "");
}

std::string format_coeffs(const std::vector<FieldElement>& cs) {
  std::string s = "<";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + cs[i].to_string();
  return s + ">";
}

std::string format_places(const std::vector<Place>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i].to_string();
  return s + "}";
}

json places_json(const std::vector<Place>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

int decision(bool value, const Options& opt) { return (!value && opt.strict) ? 1 : 0; }

// verify-geometry -----------------------------------------------------------

struct Check {
  std::string name;
  std::string detail;
  bool pass;
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::vector<Check> geometry_checks(std::size_t m, const Options& opt) {
  using namespace geometry;
  std::vector<Check> out;
  const double md = static_cast<double>(m);

  const auto basis = lie_basis(m);
  out.push_back({"dim sp(m,1)", std::to_string(basis.size()) + " = 2m^2+5m+3 = " + std::to_string(sp_dimension(m)),
                 basis.size() == sp_dimension(m)});
  double member = 0;
  for (const auto& b : basis) member = std::max(member, lie_membership_defect(b.matrix));
  out.push_back({"basis in sp(m,1)", "max defect " + num(member), member <= opt.tolerance});

  HVector e1(m);
  e1[0] = Quaternion{1, 0, 0, 0};
  const HVector w = lift_horizontal(e1);
  const double g0 = metric_at(base_point(m), w, w).w;
  out.push_back({"g0(w,w)", num(g0) + ", expected 4", std::abs(g0 - 4.0) <= 1e-12});

  const QMatrix x1 = basis_x(m, 0, Quaternion::unit(0));
  const double kappa = killing_value(x1, x1);
  const double expected = 8.0 * (md - 1.0);
  out.push_back({"kappa(X1,X1)", num(kappa) + ", expected 8(m-1) = " + num(expected),
                 std::abs(kappa - expected) <= opt.tolerance});

  if (m >= 2) {
    const auto r = metric_scaling_check(m, 100, opt.seed);
    out.push_back({"kappa/g", "ratio in [" + num(r.min_ratio) + ", " + num(r.max_ratio) + "], expected 2(m-1) = " +
                                  num(r.expected),
                   r.max_deviation <= opt.tolerance});
  }

  const auto table = bracket_table_check(m);
  for (int i = 0; i < 4; ++i) {
    out.push_back({"bracket identity " + std::to_string(i + 1),
                   std::to_string(table.checked[i] - table.failed[i]) + "/" + std::to_string(table.checked[i]) + " hold",
                   table.failed[i] == 0});
  }

  const QMatrix a = random_sp_element(m, opt.seed);
  out.push_back({"random element in Sp(m,1)", "deviation " + num(sp_deviation(a)), sp_check(a, opt.tolerance)});

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal;
  // Points of the ball at radius 0.8, lifted to negative vectors.
  auto negative = [&] {
    HVector v(m + 1);
    double r2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = Quaternion{normal(rng), normal(rng), normal(rng), normal(rng)};
      r2 += v[i].norm2();
    }
    for (std::size_t i = 0; i < m; ++i) v[i] *= 0.8 / std::sqrt(r2);
    v[m] = Quaternion{1, 0, 0, 0};
    return v;
  };
  const HVector v1 = negative(), v2 = negative();
  const double d0 = distance(v1, v2), d1 = distance(a * v1, a * v2);
  out.push_back({"distance invariance", num(d0) + " vs " + num(d1), std::abs(d0 - d1) <= 1e-8});

  SubspaceSpan real, cplx, quat;
  for (std::size_t l = 0; l < std::min<std::size_t>(m, 2); ++l) {
    HVector e(m);
    e[l] = Quaternion{1, 0, 0, 0};
    real.vectors.push_back(e);
    for (int s = 0; s < 4; ++s) {
      if (s < 2) cplx.vectors.push_back(right_multiply(e, Quaternion::unit(s)));
      quat.vectors.push_back(right_multiply(e, Quaternion::unit(s)));
    }
  }
  const auto t1 = classify_subspace(real).type, t2 = classify_subspace(cplx).type, t3 = classify_subspace(quat).type;
  out.push_back({"lie triple classes", std::string(to_string(t1)) + ", " + to_string(t2) + ", " + to_string(t3),
                 t1 == SubspaceType::TotallyReal && t2 == SubspaceType::TotallyComplex &&
                     t3 == SubspaceType::TotallyQuaternionic});
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic of quaternionic hyperbolic lattices"};
  app.name("qhyp");
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_out, "machine-readable output");
  app.add_flag("--strict", opt.strict, "exit 1 on a negative decision");
  app.add_option("--tolerance", opt.tolerance, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "random seed");

  std::string a1, a2, a3, place;
  long d = 1;
  std::size_t m = 2;
  std::function<int()> action;

  auto* sym = app.add_subcommand("symbol", "Hilbert symbol (a,b)_v");
  sym->add_option("a", a1)->required();
  sym->add_option("b", a2)->required();
  sym->add_option("--place", place, "inf0, inf1, p, pa, pb");
  sym->add_option("--d", d, "radicand of Q(sqrt(d)); 1 for Q");

  auto* ram = app.add_subcommand("ramification", "ramification set of a quaternion algebra");
  ram->add_option("algebra", a1)->required();

  auto* inv = app.add_subcommand("invariants", "local invariants of a quadratic or Hermitian form");
  inv->add_option("form", a1)->required();

  auto* iso = app.add_subcommand("isometric", "isometry of two quadratic or two Hermitian forms");
  iso->add_option("f1", a1)->required();
  iso->add_option("f2", a2)->required();

  auto* com = app.add_subcommand("commensurable", "commensurability of two triples or two class descriptors");
  com->add_option("d1", a1)->required();
  com->add_option("d2", a2)->required();

  auto* adm = app.add_subcommand("admissible", "check an admissible triple");
  adm->add_option("triple", a1)->required();

  auto* can = app.add_subcommand("canonical-form", "canonical Hermitian form of a triple");
  can->add_option("triple", a1)->required();
  can->add_option("--m", m)->required()->check(CLI::Range(1, 1000));

  auto* er = app.add_subcommand("embeds-real", "real hyperbolic data against an ambient class");
  er->add_option("q", a1)->required();
  er->add_option("ambient", a2)->required();

  auto* ec = app.add_subcommand("embeds-complex", "complex hyperbolic data against an ambient class");
  ec->add_option("c", a1)->required();
  ec->add_option("data", a2)->required();
  ec->add_option("ambient", a3)->required();

  auto* sw = app.add_subcommand("surface-witness", "arithmetic real hyperbolic surface inside a triple's class");
  sw->add_option("triple", a1)->required();

  auto* vg = app.add_subcommand("verify-geometry", "numeric checks on quaternionic hyperbolic space");
  vg->add_option("--m", m)->required()->check(CLI::Range(1, 50));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sym->parsed()) {
      const Field k = d == 1 ? Field::rationals() : Field::quadratic(d);
      const FieldElement a = element_arg(a1, k), b = element_arg(a2, k);
      if (a.is_zero() || b.is_zero()) throw InputError("", "symbol entries must be nonzero");
      if (!place.empty()) {
        const Place v = parse_place(place, k);
        const int s = hilbert_symbol(a, b, v);
        if (opt.json_out) {
          out << json{{"place", to_json(v)}, {"symbol", s}}.dump() << "\n";
        } else {
          out << "(" << a << ", " << b << ")_" << v << " = " << s << "\n";
        }
        return 0;
      }
      json rows = json::array();
      int product = 1;
      for (const Place& v : symbol_support(a, b)) {
        const int s = hilbert_symbol(a, b, v);
        product *= s;
        rows.push_back({{"place", to_json(v)}, {"symbol", s}});
        if (!opt.json_out) out << "(" << a << ", " << b << ")_" << v << " = " << s << "\n";
      }
      if (opt.json_out) {
        out << json{{"symbols", rows}, {"product", product}}.dump() << "\n";
      } else {
        out << "product = " << product << "\n";
      }
      return 0;
    }
    if (ram->parsed()) {
      const QuaternionAlgebra D = parse_algebra(load(a1, "algebra"), std::nullopt, "");
      const auto rs = ramification_set(D);
      if (opt.json_out) {
        out << json{{"ramification", places_json(rs)}, {"division", !rs.empty()}}.dump() << "\n";
      } else {
        out << "ramification set " << format_places(rs) << (rs.empty() ? " (split)" : " (division)") << "\n";
      }
      return 0;
    }
    if (inv->parsed()) {
      const json j = load(a1, "form");
      const bool hermitian = j.is_object() && j.contains("algebra");
      const QuadraticForm q = hermitian ? trace_form(parse_hermitian_form(j, "")) : parse_quadratic_form(j, "");
      json rows = json::array();
      for (const Place& v : form_support(q)) {
        const auto li = local_invariants(q, v);
        rows.push_back(to_json(li));
        if (!opt.json_out) {
          out << v << ": dim " << li.dim << ", det " << li.det << ", hasse " << li.hasse;
          if (li.signature) out << ", signature (" << li.signature->first << "," << li.signature->second << ")";
          out << "\n";
        }
      }
      if (opt.json_out) out << json{{"form", hermitian ? "trace" : "quadratic"}, {"invariants", rows}}.dump() << "\n";
      return 0;
    }
    if (iso->parsed()) {
      const json j1 = load(a1, "f1"), j2 = load(a2, "f2");
      const bool h1 = j1.is_object() && j1.contains("algebra"), h2 = j2.is_object() && j2.contains("algebra");
      if (h1 != h2) throw InputError("", "cannot compare a quadratic form with a Hermitian form");
      const bool value = h1 ? hermitian_isometric(parse_hermitian_form(j1, ""), parse_hermitian_form(j2, ""))
                            : forms_isometric(parse_quadratic_form(j1, ""), parse_quadratic_form(j2, ""));
      out << (opt.json_out ? json{{"isometric", value}}.dump() : std::string(value ? "isometric" : "not isometric"))
          << "\n";
      return decision(value, opt);
    }
    if (com->parsed()) {
      const json j1 = load(a1, "d1"), j2 = load(a2, "d2");
      const bool t1 = j1.is_object() && j1.contains("v0"), t2 = j2.is_object() && j2.contains("v0");
      if (t1 != t2) throw InputError("", "cannot compare a triple with a class descriptor");
      Verdict v;
      if (t1) {
        v = compare_triples(parse_triple(j1, ""), parse_triple(j2, ""));
      } else {
        const auto d1 = parse_ambient(j1, ""), d2 = parse_ambient(j2, "");
        try {
          v = compare_quaternionic(d1, d2);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotQuaternionicHyperbolic) throw;
          v = compare_general_cn(d1, d2);
        }
      }
      if (opt.json_out) {
        out << json{{"commensurable", v.value}, {"reason", v.reason}}.dump() << "\n";
      } else {
        out << (v.value ? "commensurable" : "not commensurable") << ": " << v.reason << "\n";
      }
      return decision(v.value, opt);
    }
    if (adm->parsed()) {
      const AdmissibleTriple t = parse_triple(load(a1, "triple"), "");
      const bool value = is_admissible(t);
      json j = {{"admissible", value}};
      if (value) j["compact"] = is_compact(t);
      if (opt.json_out) {
        out << j.dump() << "\n";
      } else {
        out << (value ? "admissible" : "not admissible");
        if (value) out << (is_compact(t) ? ", compact quotients" : ", noncompact quotients");
        out << "\n";
      }
      return decision(value, opt);
    }
    if (can->parsed()) {
      const AdmissibleTriple t = parse_triple(load(a1, "triple"), "");
      if (!is_admissible(t)) throw InputError("", "triple is not admissible");
      const HermitianForm h = canonical_hermitian(t, m);
      const auto desc = OrbifoldClassDescriptor::nonsplit(h);
      out << (opt.json_out ? to_json(desc).dump() : format_coeffs(h.coefficients())) << "\n";
      return 0;
    }
    if (er->parsed()) {
      const QuadraticForm q = parse_quadratic_form(load(a1, "q"), "");
      const auto amb = parse_ambient(load(a2, "ambient"), "");
      const EmbeddingVerdict v = embeds_real(q, amb);
      if (opt.json_out) {
        out << to_json(v).dump() << "\n";
      } else {
        out << (v.embeds ? "embeds" : "does not embed");
        if (v.failed_condition) out << ": " << *v.failed_condition;
        out << "\n";
      }
      return decision(v.embeds, opt);
    }
    if (ec->parsed()) {
      const auto amb = parse_ambient(load(a3, "ambient"), "");
      const Field k = amb.field();
      const FieldElement c = element_arg(a1, k);
      if (c.is_zero()) throw InputError("", "c must be nonzero");
      const auto data = parse_complex_data(load(a2, "data"), c, k, "");
      const EmbeddingVerdict v = embeds_complex(data, amb);
      if (opt.json_out) {
        out << to_json(v).dump() << "\n";
      } else {
        out << (v.embeds ? "embeds" : "does not embed");
        if (v.failed_condition) out << ": " << *v.failed_condition;
        out << "\n";
      }
      return decision(v.embeds, opt);
    }
    if (sw->parsed()) {
      const AdmissibleTriple t = parse_triple(load(a1, "triple"), "");
      const QuadraticForm q = surface_witness(t);
      out << (opt.json_out ? to_json(q).dump() : format_coeffs(q.coefficients())) << "\n";
      return 0;
    }
    if (vg->parsed()) {
      const auto checks = geometry_checks(m, opt);
      bool all = true;
      json rows = json::array();
      for (const auto& c : checks) {
        all = all && c.pass;
        rows.push_back({{"check", c.name}, {"detail", c.detail}, {"pass", c.pass}});
        if (!opt.json_out) out << c.name << " = " << c.detail << " " << (c.pass ? "✓" : "✗") << "\n";
      }
      if (opt.json_out) out << json{{"m", m}, {"checks", rows}, {"all_pass", all}}.dump() << "\n";
      return decision(all, opt);
    }
  } catch (const InputError& e) {
    if (opt.json_out) {
      err << json{{"error", e.what()}, {"pointer", e.pointer()}}.dump() << "\n";
    } else {
      err << "input error" << (e.pointer().empty() ? "" : " at " + e.pointer()) << ": " << e.what() << "\n";
    }
    return 2;
  } catch (const Error& e) {
    if (opt.json_out) {
      err << json{{"error", e.what()}, {"code", to_string(e.code())}}.dump() << "\n";
    } else {
      err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    }
    return 2;
  }
  return 2;
}

}  // namespace qhyp::cli
