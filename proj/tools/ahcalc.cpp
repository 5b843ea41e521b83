// ahcalc: command-line front end for the engine.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ah/groth.hpp"
#include "ah/suite.hpp"
#include "json.hpp"

using namespace ah;
using json = nlohmann::ordered_json;

namespace {

struct Global {
  std::string preset = "A1_adj";
  std::string datum_file;
  std::string format = "tsv";
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  bool fault_length = false;
};

RootDatumPtr load(const Global& g) {
  if (!g.datum_file.empty()) {
    std::ifstream in(g.datum_file);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + g.datum_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_root_datum(RootDatumSpec::from_json(ss.str()));
  }
  return load_preset(g.preset);
}

// Emits a list of rows, as TSV lines or as a JSON array of objects.
void emit(const Global& g, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(std::move(o));
    }
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "\t" : "") << r[i];
    std::cout << "\n";
  }
}

void emit_value(const Global& g, const std::string& key, const std::string& value) { emit(g, {key}, {{value}}); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

Filtration read_filtration(const ExtWeyl& w, const std::string& path, const std::string& flavor) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("filtration file: ") + e.what());
  }
  Filtration f;
  f.flavor = flavor == "Verma" ? Flavor::Verma : Flavor::CoVerma;
  if (!j.is_array()) throw Error(ErrorKind::MalformedInput, "filtration must be a JSON list of {label, mult}");
  for (const auto& e : j) {
    if (!e.contains("label") || !e.contains("mult")) throw Error(ErrorKind::MalformedInput, "entry needs label and mult");
    const std::int64_t m = e["mult"].get<std::int64_t>();
    if (m < 0) throw Error(ErrorKind::MalformedInput, "negative multiplicity");
    if (m > 0) f.mults[w.parse(e["label"].get<std::string>())] += m;
  }
  return f;
}

void emit_filtration(const Global& g, const ExtWeyl& w, const Filtration& f) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [x, m] : f.mults) rows.push_back({w.format(x), std::to_string(m)});
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& [x, m] : f.mults) arr.push_back({{"label", w.format(x)}, {"mult", m}});
    std::cout << arr.dump(2) << "\n";
    return;
  }
  emit(g, {"label", "mult"}, rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of extended affine Weyl groups, spherical KL theory and multiplicity calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  std::string names;
  for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("--preset", g.preset, "Built-in root datum: " + names)->capture_default_str();
  app.add_option("--datum", g.datum_file, "Root datum descriptor (JSON file)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", g.seed, "RNG seed for randomized checks");
  app.add_option("--samples", g.samples, "Samples per randomized property");
  app.add_flag("--fault-length", g.fault_length, "Test fixture: sign flip in the length formula")->group("");

  std::string elt, lhs, rhs, xs, ys, gens, mu, filt_file, flavor = "coVerma";
  bool omega_left = false, inverse = false, timing = false;
  std::int64_t maxlen = 6;
  std::optional<std::int64_t> kl_len;
  int criterion = 0;
  std::string only;

  auto* datum = app.add_subcommand("datum", "Root datum");
  auto* datum_check = datum->add_subcommand("check", "Validate and summarize the datum");
  datum->require_subcommand(1);

  auto* wext = app.add_subcommand("wext", "Extended affine Weyl group");
  wext->require_subcommand(1);
  auto* w_len = wext->add_subcommand("len", "Length");
  auto* w_mul = wext->add_subcommand("mul", "Product lhs*rhs");
  auto* w_inv = wext->add_subcommand("inv", "Inverse");
  auto* w_reduce = wext->add_subcommand("reduce", "Reduced expression");
  auto* w_bruhat = wext->add_subcommand("bruhat", "Bruhat order lhs <= rhs");
  auto* w_porder = wext->add_subcommand("porder", "Periodic order lhs <= rhs");
  auto* w_tri = wext->add_subcommand("triangle", "Triangle map");
  auto* w_res = wext->add_subcommand("res-decompose", "x = y t_lambda with y restricted");
  auto* w_ws = wext->add_subcommand("in-wexts", "Membership in W_ext^S");
  auto* w_wres = wext->add_subcommand("in-wres", "Membership in W_ext^res, with box");
  for (auto* c : {w_len, w_inv, w_reduce, w_tri, w_res, w_ws, w_wres}) c->add_option("--elt", elt, "Element literal")->required();
  for (auto* c : {w_mul, w_bruhat, w_porder}) {
    c->add_option("--lhs", lhs, "Element literal")->required();
    c->add_option("--rhs", rhs, "Element literal")->required();
  }
  w_reduce->add_flag("--omega-left", omega_left, "Emit omega * word instead of word * omega");
  w_tri->add_flag("--inverse", inverse, "Apply the inverse triangle map");

  auto* para = app.add_subcommand("parabolic", "Finitary subsets");
  para->require_subcommand(1);
  auto* p_list = para->add_subcommand("list", "Enumerate W_A");
  auto* p_rep = para->add_subcommand("rep", "Representative in ^A W_ext of W_A x");
  for (auto* c : {p_list, p_rep}) c->add_option("--gens", gens, "Comma-separated generator names")->required();
  p_rep->add_option("--elt", elt, "Element literal")->required();

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra and spherical module");
  hecke->require_subcommand(1);
  auto* h_kl = hecke->add_subcommand("kl", "KL polynomial h_{y,x}, or the whole column");
  auto* h_inv = hecke->add_subcommand("inverse-m", "m^{x,y}, or the whole row");
  auto* h_sweep = hecke->add_subcommand("mtriangle-sweep", "m^{w^tri, w} for w in W_ext^S");
  for (auto* c : {h_kl, h_inv}) {
    c->add_option("--x", xs, "Element literal")->required();
    c->add_option("--y", ys, "Element literal");
  }
  h_sweep->add_option("--maxlen", maxlen, "Maximal length of w")->check(CLI::Range(0, 24));

  auto* satake = app.add_subcommand("satake", "Weight multiplicities");
  satake->require_subcommand(1);
  auto* s_char = satake->add_subcommand("char", "Character of the dual-group module of highest weight mu");
  s_char->add_option("--mu", mu, "Dominant coweight, comma separated")->required();

  auto* groth = app.add_subcommand("groth", "Multiplicity calculus");
  groth->require_subcommand(1);
  auto* g_phi = groth->add_subcommand("phi-simple", "Simple decomposition of Phi(L_w)");
  auto* g_proj = groth->add_subcommand("proj-filtration", "Constructive projective-injective filtration");
  auto* g_dimend = groth->add_subcommand("dimend", "dim End of the constructive projective");
  auto* g_avpsi = groth->add_subcommand("avpsi", "Averaging to ^A W_ext");
  auto* g_avstar = groth->add_subcommand("avstar", "Averaging back to W_ext");
  auto* g_seed = groth->add_subcommand("seed", "Seed filtration");
  for (auto* c : {g_phi, g_proj, g_dimend}) c->add_option("--elt", elt, "Element literal")->required();
  g_phi->add_option("--gens", gens, "Finitary subset A (default empty)");
  for (auto* c : {g_avpsi, g_avstar}) {
    c->add_option("--gens", gens, "Finitary subset A")->required();
    auto* f = c->add_option("--filt", filt_file, "JSON list of {label, mult}");
    auto* e = c->add_option("--elt", elt, "Single label with multiplicity 1");
    f->excludes(e);
    c->add_option("--flavor", flavor, "Verma or coVerma")->check(CLI::IsMember({"Verma", "coVerma"}));
  }

  auto* suite = app.add_subcommand("suite", "Property and acceptance checks");
  suite->require_subcommand(1);
  auto* s_run = suite->add_subcommand("run", "Run all checks for the preset");
  s_run->add_option("--kl-len", kl_len, "Length bound of the KL sweeps");
  s_run->add_option("--criterion", criterion, "Only checks of one acceptance criterion")->check(CLI::Range(0, 11));
  s_run->add_option("--only", only, "Only the named check");
  s_run->add_flag("--timing", timing, "Report durations (output is then not byte-stable)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (s_run->parsed()) {
      SuiteOptions opt;
      opt.seed = g.seed;
      opt.samples = g.samples;
      opt.kl_len = kl_len;
      opt.fault_length = g.fault_length;
      opt.criterion = criterion;
      opt.only = only;
      const SuiteReport r = run_suite(g.preset, opt);
      std::cout << (g.format == "json" ? r.json(timing) : r.tsv(timing));
      return r.passed() ? 0 : 1;
    }

    const RootDatumPtr d = load(g);
    ExtWeyl w(d);
    w.set_length_fault(g.fault_length);

    if (datum_check->parsed()) {
      std::vector<std::vector<std::string>> rows = {
          {"name", d->name()},
          {"rank", std::to_string(d->rank())},
          {"semisimple_rank", std::to_string(d->semisimple_rank())},
          {"weyl_order", std::to_string(d->weyl_size())},
          {"positive_roots", std::to_string(d->positive_roots().size())},
          {"w0", w.format(w.finite(d->w0()))},
          {"two_rho", d->two_rho().str()},
          {"two_rho_dual", d->two_rho_dual().str()},
          {"varsigma", d->varsigma().str()},
          {"h", std::to_string(d->coxeter_denominator())},
      };
      for (std::size_t i = 0; i < w.num_generators(); ++i) rows.push_back({w.generator_name(i), w.format(w.generator(i))});
      emit(g, {"key", "value"}, rows);
    } else if (w_len->parsed()) {
      emit_value(g, "length", std::to_string(w.length(w.parse(elt))));
    } else if (w_mul->parsed()) {
      emit_value(g, "product", w.format(w.mul(w.parse(lhs), w.parse(rhs))));
    } else if (w_inv->parsed()) {
      emit_value(g, "inverse", w.format(w.inverse(w.parse(elt))));
    } else if (w_reduce->parsed()) {
      const ReducedExpression r = w.reduced_expression(w.parse(elt));
      if (omega_left) {
        const OmegaLeftForm f = w.omega_left(r);
        emit(g, {"omega", "word"}, {{w.format(f.omega), w.format_word(f.word)}});
      } else {
        emit(g, {"word", "omega"}, {{w.format_word(r.word), w.format(r.omega)}});
      }
    } else if (w_bruhat->parsed()) {
      emit_value(g, "leq", yes_no(w.bruhat_leq(w.parse(lhs), w.parse(rhs))));
    } else if (w_porder->parsed()) {
      PeriodicOrder order(w);
      emit_value(g, "leq", yes_no(order.leq(w.parse(lhs), w.parse(rhs))));
    } else if (w_tri->parsed()) {
      const Element x = w.parse(elt);
      emit_value(g, inverse ? "triangle_inverse" : "triangle", w.format(inverse ? triangle_inverse(w, x) : triangle(w, x)));
    } else if (w_res->parsed()) {
      const ResDecomposition r = res_decompose(w, w.parse(elt));
      emit(g, {"y", "lambda"}, {{w.format(r.y), r.lambda.str()}});
    } else if (w_ws->parsed()) {
      emit_value(g, "in_WextS", yes_no(in_WextS(w, w.parse(elt))));
    } else if (w_wres->parsed()) {
      const Element x = w.parse(elt);
      emit(g, {"in_Wres", "box"}, {{yes_no(in_Wres(w, x)), box_of(w, x).str()}});
    } else if (p_list->parsed()) {
      const Parabolic a = Parabolic::parse(w, gens);
      std::vector<std::vector<std::string>> rows;
      for (const auto& v : a.elements())
        rows.push_back({w.format(v), std::to_string(w.length(v)), yes_no(v == a.longest())});
      emit(g, {"element", "length", "longest"}, rows);
    } else if (p_rep->parsed()) {
      const Parabolic a = Parabolic::parse(w, gens);
      emit_value(g, "min_rep", w.format(a.min_rep(w.parse(elt))));
    } else if (h_kl->parsed()) {
      Hecke h(w);
      const Element x = w.parse(xs);
      if (!ys.empty()) {
        emit_value(g, "h", h.kl_poly(w.parse(ys), x).str());
      } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [y, p] : *h.kl_basis(x)) rows.push_back({w.format(y), p.str()});
        emit(g, {"y", "h"}, rows);
      }
    } else if (h_inv->parsed()) {
      Hecke h(w);
      const Element x = w.parse(xs);
      if (!ys.empty()) {
        emit_value(g, "m", h.inverse_m(x, w.parse(ys)).str());
      } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [y, p] : h.inverse_m_row(x)) rows.push_back({w.format(y), p.str()});
        emit(g, {"y", "m"}, rows);
      }
    } else if (h_sweep->parsed()) {
      Hecke h(w);
      std::vector<std::vector<std::string>> rows;
      for (const auto& v : enumerate_WextS(w, maxlen)) {
        const Element t = triangle(w, v);
        rows.push_back({w.format(t), w.format(v), h.inverse_m(t, v).str()});
      }
      emit(g, {"x", "w", "polynomial"}, rows);
    } else if (s_char->parsed()) {
      SatakeCharacters sc(d);
      std::vector<std::vector<std::string>> rows;
      for (const auto& [nu, m] : sc.character(Vec::parse(mu))) rows.push_back({nu.str(), std::to_string(m)});
      emit(g, {"weight", "multiplicity"}, rows);
    } else if (groth->parsed()) {
      GrothCalc calc(w);
      if (g_phi->parsed()) {
        const Parabolic a = Parabolic::parse(w, gens);
        std::vector<std::vector<std::string>> rows;
        for (const auto& [z, m] : calc.phi_of_simple(w.parse(elt), a)) rows.push_back({w.format(z), std::to_string(m)});
        emit(g, {"label", "mult"}, rows);
      } else if (g_proj->parsed()) {
        emit_filtration(g, w, calc.projective_filtration(w.parse(elt)));
      } else if (g_dimend->parsed()) {
        emit_value(g, "dimend", std::to_string(calc.dimend(w.parse(elt))));
      } else if (g_seed->parsed()) {
        emit_filtration(g, w, calc.seed_filtration());
      } else {
        const Parabolic a = Parabolic::parse(w, gens);
        Filtration f;
        if (!filt_file.empty()) {
          f = read_filtration(w, filt_file, flavor);
        } else if (!elt.empty()) {
          f.flavor = flavor == "Verma" ? Flavor::Verma : Flavor::CoVerma;
          f.mults[w.parse(elt)] = 1;
        } else {
          throw Error(ErrorKind::MalformedInput, "give --filt or --elt");
        }
        emit_filtration(g, w, g_avpsi->parsed() ? calc.av_psi(f, a) : calc.av_star(f, a));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
