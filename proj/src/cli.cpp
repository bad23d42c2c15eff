#include "finalg/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "finalg/catalogue.hpp"
#include "finalg/io.hpp"
#include "finalg/psetop.hpp"
#include "finalg/report.hpp"
#include "finalg/special.hpp"
#include "finalg/sweeps.hpp"
#include "finalg/templates.hpp"

namespace finalg::cli {

namespace {

struct RunConfig {
  std::string format = "text";
  std::uint64_t seed = kDefaultLieSeed;
  int bound_syllables = 6;
  int bound_exp = 3;
  std::string catalogue = "builtin";
  std::vector<std::string> inputs;
  std::string template_literal;
  std::vector<std::string> k_values = {"-2", "-1", "0", "1", "2", "1/2"};
  int pset_max = 4;
};

void parse_bounds(const std::string& text, RunConfig& cfg) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--bounds expects L,E");
  cfg.bound_syllables = std::stoi(text.substr(0, comma));
  cfg.bound_exp = std::stoi(text.substr(comma + 1));
  if (cfg.bound_syllables <= 0 || cfg.bound_exp <= 0)
    throw CLI::ValidationError("--bounds must be positive");
}

Record& meta_record(Report& rep, const RunConfig& cfg, const std::string& subcommand) {
  return rep.add("meta")
      .field("tool", std::string("finalg"))
      .field("version", std::string(kToolVersion))
      .field("subcommand", subcommand)
      .field("format", cfg.format)
      .field("seed", static_cast<long long>(cfg.seed))
      .field("bounds", std::to_string(cfg.bound_syllables) + "," + std::to_string(cfg.bound_exp));
}

void input_record(Report& rep, const std::string& path) {
  rep.add("input").field("path", path).field("digest", digest_hex(read_file(path)));
}

struct Catalogue {
  std::vector<NamedMonoid> monoids;
  std::vector<NamedLie> lies;
};

Catalogue load_catalogue(const RunConfig& cfg, Report& rep) {
  Catalogue cat;
  if (cfg.catalogue == "builtin") {
    cat.monoids = builtin_monoids();
    cat.lies = builtin_lie();
    // Self-test: every member revalidates from its own serialization.
    for (const auto& nm : cat.monoids) {
      AlgebraDoc doc = doc_from_monoid(nm.name, nm.monoid);
      if (!(parse_algebra_text(serialize_algebra(doc)) == doc))
        throw AlgebraError("catalogue self-test failed for " + nm.name);
    }
    for (const auto& nl : cat.lies) {
      AlgebraDoc doc = doc_from_lie(nl.name, nl.algebra);
      if (!(parse_algebra_text(serialize_algebra(doc)) == doc))
        throw AlgebraError("catalogue self-test failed for " + nl.name);
    }
    return cat;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(cfg.catalogue))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    input_record(rep, f.string());
    AlgebraDoc doc = parse_algebra_file(f.string());
    std::string name = doc.name.empty() ? f.stem().string() : doc.name;
    if (doc.monoid) cat.monoids.push_back({name, *doc.monoid});
    if (doc.lie) cat.lies.push_back({name, *doc.lie});
  }
  return cat;
}

std::string label_of(const FiniteMonoid& m, int i) { return sanitize_token(m.label(i)); }

void emit(const Report& rep, const RunConfig& cfg, std::ostream& out,
          std::chrono::steady_clock::time_point start) {
  if (cfg.format == "structured") {
    out << rep.structured();
    return;
  }
  out << rep.text();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  out << "elapsed_ms " << ms << "\n";
}

// --- subcommand bodies ----------------------------------------------------

void cmd_validate(const RunConfig& cfg, Report& rep) {
  for (const auto& path : cfg.inputs) {
    input_record(rep, path);
    AlgebraDoc doc = parse_algebra_file(path);
    Record& r = rep.add("validate").field("path", path).field("kind", kind_name(doc.kind));
    if (doc.monoid) r.field("size", doc.monoid->size);
    if (doc.lie) r.field("dim", doc.lie->dim);
    if (doc.pointed_set) r.field("size", doc.pointed_set->size);
    r.field("ok", true);
  }
}

void append_schreier_records(Report& rep, const std::string& key, const SplitExtension& ext) {
  SchreierAnalysis a = analyze(ext);
  Record& r = rep.add("schreier").field("instance", key);
  r.field("middle_size", ext.X().size)
      .field("base_size", ext.Y().size)
      .field("kernel_size", ext.K.size())
      .field("schreier", a.is_schreier)
      .field("left_homogeneous", a.is_left_homogeneous)
      .field("strong", is_strong(ext.point));
  if (a.is_schreier) {
    const PropertyReport& p = a.properties;
    r.field("s1", p.s1.holds)
        .field("s2", p.s2.holds)
        .field("s3", p.s3.holds)
        .field("s4", p.s4.holds)
        .field("s5", p.s5.holds)
        .field("s6", p.s6.holds)
        .field("s7", p.s7.holds);
  } else {
    int w = a.multiplicity_witness();
    r.field("witness", label_of(ext.X(), w)).field("witness_multiplicity", a.multiplicity[w]);
  }
}

void cmd_schreier(const RunConfig& cfg, Report& rep) {
  for (const auto& path : cfg.inputs) {
    input_record(rep, path);
    append_schreier_records(rep, path, parse_extension_file(path));
  }
}

void append_special_records(Report& rep, const std::string& name, const FiniteMonoid& m) {
  SpecialObjectVerdict viaPoint = is_schreier_special(m);
  LoopSearch viaLoop = right_loop_structure(m);
  ProtomodularVerdict viaGroup = is_protomodular_object_monoid(m);
  bool agree = viaPoint.special == viaLoop.loop.has_value() &&
               viaPoint.special == viaGroup.is_group;
  bool q_match = true;
  if (viaPoint.special && viaLoop.loop) q_match = viaPoint.loop->q == viaLoop.loop->q;
  Record& r = rep.add("special").field("monoid", name);
  r.field("size", m.size)
      .field("schreier_special", viaPoint.special)
      .field("right_loop", viaLoop.loop.has_value())
      .field("group", viaGroup.is_group)
      .field("agree", agree)
      .field("q_tables_match", q_match);
  if (!viaPoint.special && viaLoop.witness >= 0)
    r.field("witness_translation", label_of(m, viaLoop.witness));
}

void cmd_special(const RunConfig& cfg, Report& rep) {
  for (const auto& path : cfg.inputs) {
    input_record(rep, path);
    AlgebraDoc doc = parse_algebra_file(path);
    if (!doc.monoid) throw ParseError("special expects a monoid or group document");
    append_special_records(rep, doc.name.empty() ? path : doc.name, *doc.monoid);
  }
}

void append_engel_records(Report& rep, const std::string& name, const FiniteGroup& g) {
  EngelReport e = is_2engel(g);
  Record& r = rep.add("engel").field("group", name);
  r.field("order", g.size())
      .field("two_engel", e.is_2engel())
      .field("nested_y", e.nested_y.holds)
      .field("nested_x", e.nested_x.holds)
      .field("conj", e.conj.holds)
      .field("inv_y", e.inv_y.holds)
      .field("inv_x", e.inv_x.holds)
      .field("pow_y", e.pow_y.holds)
      .field("pow_x", e.pow_x.holds)
      .field("agree", e.verdicts_agree());
  if (!e.is_2engel()) {
    const FiniteMonoid& m = g.monoid;
    const EngelWitness& w = e.witness();
    int c = commutator(g, w.x, w.y);
    r.field("witness_x", label_of(m, w.x))
        .field("witness_y", label_of(m, w.y))
        .field("commutator", label_of(m, c))
        .field("comm_then_y", label_of(m, g.at(c, w.y)))
        .field("y_then_comm", label_of(m, g.at(w.y, c)));
  }
}

FiniteGroup require_group(const AlgebraDoc& doc) {
  if (doc.group) return *doc.group;
  if (doc.monoid) {
    GroupCheck gc = as_group(*doc.monoid);
    if (gc.ok()) return *gc.group;
  }
  throw ParseError("subcommand needs a group document");
}

void cmd_engel(const RunConfig& cfg, Report& rep) {
  for (const auto& path : cfg.inputs) {
    input_record(rep, path);
    AlgebraDoc doc = parse_algebra_file(path);
    append_engel_records(rep, doc.name.empty() ? path : doc.name, require_group(doc));
  }
}

void append_template_verdict(Report& rep, const std::string& group_name, const FiniteGroup& g,
                             const SplittingTemplate& t) {
  InducedOperation op = induced_op(g, t);
  TemplateSpecialVerdict v = special_wrt_table(g, op.star);
  Record& r = rep.add("template").field("group", group_name);
  r.field("template", format_template(t))
      .field("special", v.special)
      .field("latin_square", is_latin_square(op.star, g.size()));
  if (v.special)
    r.field("iss1", v.iss1).field("iss2", v.iss2).field("iss3", v.iss3).field("iss4", v.iss4);
  else
    r.field("witness_y", label_of(g.monoid, v.witness_y));
  StarCoefficient sc = engel_star_coefficient(g, t);
  r.field("uniform_k_found", sc.found);
  if (sc.found) r.field("uniform_k", sc.k);
}

void cmd_templates(const RunConfig& cfg, Report& rep) {
  for (const auto& path : cfg.inputs) {
    input_record(rep, path);
    AlgebraDoc doc = parse_algebra_file(path);
    FiniteGroup g = require_group(doc);
    std::string name = doc.name.empty() ? path : doc.name;
    if (!cfg.template_literal.empty()) {
      append_template_verdict(rep, name, g, parse_template(cfg.template_literal));
      continue;
    }
    TemplateSweep sweep = special_for_all_templates(g, cfg.bound_syllables, cfg.bound_exp);
    Record& r = rep.add("template_sweep").field("group", name);
    r.field("two_engel", sweep.group_is_2engel)
        .field("templates", static_cast<long long>(sweep.bounded.size()))
        .field("all_bounded_special", sweep.all_bounded_special)
        .field("k_cases", static_cast<long long>(sweep.k_cases.size()))
        .field("all_k_special", sweep.all_k_special)
        .field("coverage", std::string(sweep.complete_cover ? "complete" : "bounded-incomplete"));
    for (const auto& [t, special] : sweep.bounded)
      if (!special)
        rep.add("template_failure")
            .field("group", name)
            .field("template", format_template(t))
            .field("special", false);
  }
}

void cmd_lie(const RunConfig& cfg, Report& rep) {
  for (const auto& path : cfg.inputs) {
    input_record(rep, path);
    AlgebraDoc doc = parse_algebra_file(path);
    if (!doc.lie) throw ParseError("lie subcommand needs a lie document");
    const LieAlgebra& l = *doc.lie;
    std::string name = doc.name.empty() ? path : doc.name;
    Engel2LieReport e = is_2engel_lie(l, cfg.seed);
    Record& r = rep.add("lie").field("algebra", name);
    r.field("dim", l.dim)
        .field("two_engel", e.is_2engel())
        .field("oracles_agree", e.oracles_agree());
    if (!e.is_2engel())
      r.field("witness",
              "[[" + l.label(e.wi) + "," + l.label(e.wj) + "]," + l.label(e.wk) + "]=" +
                  format_vec(l, e.witness_value));
    for (const auto& ks : cfg.k_values) {
      Rat k(ks);
      LoopCheckLie lc = loop_check_lie(l, k, cfg.seed);
      Record& kr = rep.add("lie_loop").field("algebra", name);
      kr.field("k", ks).field("ansatz_solved", lc.ansatz_solved);
      if (lc.ansatz_solved)
        kr.field("alpha", lc.alpha.str()).field("beta", lc.beta.str()).field("verified",
                                                                             lc.verified);
    }
  }
}

void cmd_psetop(const RunConfig& cfg, Report& rep) {
  for (int size = 1; size <= std::min(cfg.pset_max, 4); ++size) {
    ComonadLawReport laws = check_comonad_laws(validate_pointed_set(size, 0), cfg.seed);
    rep.add("pset_comonad")
        .field("size", size)
        .field("counit_ok", laws.counit_ok)
        .field("coassoc_ok", laws.coassoc_ok)
        .field("coassoc_exhaustive", laws.coassoc_exhaustive);
  }
  Census census = classify_all(cfg.pset_max);
  rep.add("pset_census")
      .field("max_size", cfg.pset_max)
      .field("instances", static_cast<long long>(census.rows.size()))
      .field("verdicts_match_predicate", census.verdicts_match_predicate)
      .field("special_iff_zero_object", census.special_iff_zero_object);
  for (const auto& [size, special] : census.special_by_size)
    rep.add("pset_special").field("size", size).field("special", special);
}

void cmd_sweep(const RunConfig& cfg, Report& rep) {
  Catalogue cat = load_catalogue(cfg, rep);

  for (const auto& nm : cat.monoids) {
    append_special_records(rep, nm.name, nm.monoid);
    GroupCheck gc = as_group(nm.monoid);
    if (!gc.ok()) continue;
    append_engel_records(rep, nm.name, *gc.group);
    if (nm.monoid.size <= 10) {
      TemplateSweep sweep =
          special_for_all_templates(*gc.group, cfg.bound_syllables, cfg.bound_exp);
      Record& r = rep.add("template_sweep");
      r.field("group", nm.name)
          .field("two_engel", sweep.group_is_2engel)
          .field("templates", static_cast<long long>(sweep.bounded.size()))
          .field("all_bounded_special", sweep.all_bounded_special)
          .field("k_cases", static_cast<long long>(sweep.k_cases.size()))
          .field("all_k_special", sweep.all_k_special)
          .field("coverage",
                 std::string(sweep.complete_cover ? "complete" : "bounded-incomplete"));
      if (!sweep.all_bounded_special) {
        for (const auto& [t, special] : sweep.bounded)
          if (!special) {
            TemplateSpecialVerdict v = special_wrt(*gc.group, t);
            r.field("first_failure", format_template(t))
                .field("failure_witness_y", label_of(nm.monoid, v.witness_y));
            break;
          }
      }
    }
  }

  for (const auto& ne : schreier_catalogue()) append_schreier_records(rep, ne.name, ne.ext);
  for (const auto& ne : non_schreier_catalogue()) append_schreier_records(rep, ne.name, ne.ext);
  for (const auto& nm : morphism_catalogue()) {
    SsflReport s = ssfl_check(nm.m);
    rep.add("ssfl")
        .field("instance", nm.name)
        .field("rows_schreier", s.rows_schreier)
        .field("epi_forward", s.epi_forward_ok)
        .field("epi_backward", s.epi_backward_ok)
        .field("mono_forward", s.mono_forward_ok)
        .field("mono_backward", s.mono_backward_ok);
  }

  for (const auto& nl : cat.lies) {
    Engel2LieReport e = is_2engel_lie(nl.algebra, cfg.seed);
    rep.add("lie")
        .field("algebra", nl.name)
        .field("dim", nl.algebra.dim)
        .field("two_engel", e.is_2engel())
        .field("oracles_agree", e.oracles_agree());
    for (const auto& ks : cfg.k_values) {
      LoopCheckLie lc = loop_check_lie(nl.algebra, Rat(ks), cfg.seed);
      Record& kr = rep.add("lie_loop").field("algebra", nl.name);
      kr.field("k", ks).field("ansatz_solved", lc.ansatz_solved);
      if (lc.ansatz_solved)
        kr.field("alpha", lc.alpha.str()).field("beta", lc.beta.str()).field("verified",
                                                                             lc.verified);
    }
  }

  cmd_psetop(cfg, rep);
  rep.normalize();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  CLI::App app{"finite-algebra verification toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string bounds_text;
  app.add_option("--format", cfg.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--bounds", bounds_text, "template bounds L,E");
  app.add_option("--catalogue", cfg.catalogue, "builtin or a directory of algebra files");

  auto* validate = app.add_subcommand("validate", "validate algebra files");
  validate->add_option("files", cfg.inputs)->required();
  auto* schreier = app.add_subcommand("schreier", "analyze split extension descriptors");
  schreier->add_option("files", cfg.inputs)->required();
  auto* special = app.add_subcommand("special", "Schreier special object analysis");
  special->add_option("files", cfg.inputs)->required();
  auto* engel = app.add_subcommand("engel", "2-Engel classification");
  engel->add_option("files", cfg.inputs)->required();
  auto* templates = app.add_subcommand("templates", "splitting template analysis");
  templates->add_option("files", cfg.inputs)->required();
  templates->add_option("--template", cfg.template_literal, "template literal, e.g. 'x^-1 y x^2'");
  auto* lie = app.add_subcommand("lie", "2-Engel Lie algebra checks");
  lie->add_option("files", cfg.inputs)->required();
  lie->add_option("--k", cfg.k_values, "coefficients to verify");
  auto* psetop = app.add_subcommand("psetop", "pointed-set census");
  psetop->add_option("--max-size", cfg.pset_max, "largest |X| in the census");
  auto* sweep = app.add_subcommand("sweep", "full catalogue sweep");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, msg, msg);
    err << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (!bounds_text.empty()) parse_bounds(bounds_text, cfg);
    Report rep;
    std::string sub = app.get_subcommands().front()->get_name();
    meta_record(rep, cfg, sub);
    if (validate->parsed()) cmd_validate(cfg, rep);
    if (schreier->parsed()) cmd_schreier(cfg, rep);
    if (special->parsed()) cmd_special(cfg, rep);
    if (engel->parsed()) cmd_engel(cfg, rep);
    if (templates->parsed()) cmd_templates(cfg, rep);
    if (lie->parsed()) cmd_lie(cfg, rep);
    if (psetop->parsed()) cmd_psetop(cfg, rep);
    if (sweep->parsed()) cmd_sweep(cfg, rep);
    emit(rep, cfg, out, start);
    return 0;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace finalg::cli
