#include "lgca/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "lgca/decompose.hpp"
#include "lgca/hereditary.hpp"
#include "lgca/io.hpp"
#include "lgca/rep.hpp"

namespace lgca {

namespace {

GraphFile load(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_graph_file(ss.str());
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::parse:
    case Errc::unknown_vertex:
    case Errc::unknown_label:
      return 2;
    default:
      return 1;
  }
}

void report_line(std::ostream& out, const char* name, bool ok, const std::string& detail) {
  out << name << ": " << (ok ? "yes" : "no");
  if (!ok && !detail.empty()) out << " (" << detail << ")";
  out << "\n";
}

int cmd_validate(const std::string& path, std::ostream& out) {
  LabeledSpace s = make_space(load(path));
  const SpaceReport& r = s.report();
  const LabeledGraph& g = s.graph();

  report_line(out, "accommodating", r.accommodating.ok, r.accommodating.detail);
  report_line(out, "weakly left-resolving", r.weakly_left_resolving.ok,
              r.weakly_left_resolving.detail);
  report_line(out, "non-degenerate", r.non_degenerate.ok, r.non_degenerate.detail);
  report_line(out, "normal", r.normal, "");
  report_line(out, "sinks in family", r.sinks_in_family,
              "E^0_sink = " + render(g, sinks(g)) + " is not a member");
  std::string lr_detail;
  if (!r.left_resolving.ok)
    lr_detail = "two edges labeled " + g.label_name(r.left_resolving.label) + " arrive at " +
                g.vertex_name(r.left_resolving.vertex);
  report_line(out, "left-resolving", r.left_resolving.ok, lr_detail);
  report_line(out, "acyclic", r.acyclic, "");

  bool usable = r.accommodating.ok && r.weakly_left_resolving.ok && r.non_degenerate.ok;
  return usable ? 0 : 1;
}

int cmd_closure(const std::string& path, const std::string& mode_flag, int cap,
                std::ostream& out) {
  GraphFile f = load(path);
  std::optional<FamilyMode> mode;
  if (mode_flag == "accommodating")
    mode = FamilyMode::accommodating_closure;
  else if (mode_flag == "normal")
    mode = FamilyMode::normal_closure;
  else if (f.mode == FamilyMode::explicit_sets)
    mode = FamilyMode::accommodating_closure;
  LabeledSpace s = make_space(f, ClosureOptions{cap}, mode);
  out << render_family(s.graph(), s.family());
  return 0;
}

int cmd_sinks(const std::string& path, std::ostream& out) {
  LabeledSpace s = make_space(load(path));
  out << "sinks: " << render(s.graph(), sinks(s.graph())) << "\n";
  std::vector<VertexSet> mins = minimal_sink_sets(s);
  out << "minimal sink sets:\n";
  for (VertexSet v : mins) out << render(s.graph(), v) << "\n";
  return 0;
}

int cmd_ideal(const std::string& path, const std::vector<std::string>& seed_strs,
              std::ostream& out) {
  LabeledSpace s = make_space(load(path));
  std::vector<VertexSet> sets;
  for (const auto& str : seed_strs) sets.push_back(parse_vertex_set(s.graph(), str));
  HereditaryFamily h = hereditary_closure(s, SetFamily(sets));

  out << render_family(s.graph(), h.sets);
  for (const auto& w : h.warnings) out << "warning: " << w << "\n";

  HereditaryCheck hc = is_hereditary(s, h.sets);
  if (!hc.ok) {
    out << "hereditary: no (" << hc.detail << ")\n";
    return 1;
  }
  IdealHypothesisCheck ic = check_ideal_hypothesis(s, h.sets);
  if (ic.ok)
    out << "ideal hypothesis: holds\n";
  else
    out << "ideal hypothesis: fails (" << ic.detail << ")\n";
  return ic.ok ? 0 : 1;
}

int cmd_mul(const std::string& path, const std::string& xs, const std::string& ys,
            std::ostream& out) {
  LabeledSpace s = make_space(load(path));
  AlgebraElement x = parse_term(s, xs);
  AlgebraElement y = parse_term(s, ys);
  out << render(s.graph(), mul(s, x, y)) << "\n";
  return 0;
}

int cmd_decompose(const std::string& path, std::ostream& out) {
  LabeledSpace s = make_space(load(path));
  out << render_decomposition(s.graph(), decompose(s));
  return 0;
}

int cmd_verify(const std::string& path, int samples, std::uint64_t seed,
               const std::string& dump_path, std::ostream& out) {
  LabeledSpace s = make_space(load(path));
  Decomposition dec = decompose(s);
  Rep rep = build_rep(s, dec);
  out << "rep dim = " << rep.dim << "\n";

  RelationReport rr = verify_relations(s, rep);
  for (const auto& c : rr.checks) {
    if (c.pass)
      out << "ok   " << c.name << " (" << c.cases << " cases)\n";
    else
      out << "FAIL " << c.name << ": " << c.counterexample << "\n";
  }

  // The homomorphism check multiplies all pairs drawn from a term sample, so
  // sample ~sqrt(samples) terms to land at or just above the requested pair
  // count.
  int k = 1;
  while (k * k < samples) ++k;
  std::vector<AlgebraElement> elems;
  for (const CanonicalTerm& t : sample_canonical_terms(s, k, seed))
    elems.push_back(AlgebraElement::term(t));
  std::string cx;
  bool hom = verify_homomorphism(s, rep, elems, &cx);
  if (hom)
    out << "ok   homomorphism (" << elems.size() * elems.size() << " pairs)\n";
  else
    out << "FAIL homomorphism: " << cx << "\n";

  if (!dump_path.empty()) {
    if (dump_path == "-") {
      dump_matrices(out, s.graph(), rep);
    } else {
      std::ofstream df(dump_path);
      if (!df) fail(Errc::precondition, "cannot write '" + dump_path + "'");
      dump_matrices(df, s.graph(), rep);
    }
  }
  return (rr.all_pass() && hom) ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"labeled-graph algebra toolkit"};
  app.name("lgca");
  app.require_subcommand(1);

  std::string file, expr_x, expr_y, mode_flag, dump_path;
  std::vector<std::string> seed_sets;
  int cap = 4096;
  int samples = 50;
  std::uint64_t seed = 12345;

  auto* validate = app.add_subcommand("validate", "check the axioms of a labeled space");
  validate->add_option("file", file, "graph description file")->required();

  auto* closure = app.add_subcommand("closure", "close the file's sets into a family");
  closure->add_option("file", file, "graph description file")->required();
  closure->add_option("--mode", mode_flag, "accommodating or normal")
      ->check(CLI::IsMember({"accommodating", "normal"}));
  closure->add_option("--cap", cap, "abort past this many sets")->check(CLI::PositiveNumber);

  auto* sinks_cmd = app.add_subcommand("sinks", "print sinks and minimal sink sets");
  sinks_cmd->add_option("file", file, "graph description file")->required();

  auto* ideal = app.add_subcommand("ideal", "hereditary closure and ideal hypothesis");
  ideal->add_option("file", file, "graph description file")->required();
  ideal->add_option("--seeds", seed_sets, "seed sets, e.g. {v,x}")->required();

  auto* mul_cmd = app.add_subcommand("mul", "multiply two term expressions");
  mul_cmd->add_option("file", file, "graph description file")->required();
  mul_cmd->add_option("x", expr_x, "left factor")->required();
  mul_cmd->add_option("y", expr_y, "right factor")->required();

  auto* decomp = app.add_subcommand("decompose", "matrix-algebra block decomposition");
  decomp->add_option("file", file, "graph description file")->required();

  auto* verify = app.add_subcommand("verify", "certify the decomposition numerically");
  verify->add_option("file", file, "graph description file")->required();
  verify->add_option("--samples", samples, "product pairs for the homomorphism check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--dump-matrices", dump_path, "write generator matrices here ('-' = stdout)");

  int rc = 0;
  validate->callback([&] { rc = cmd_validate(file, out); });
  closure->callback([&] { rc = cmd_closure(file, mode_flag, cap, out); });
  sinks_cmd->callback([&] { rc = cmd_sinks(file, out); });
  ideal->callback([&] { rc = cmd_ideal(file, seed_sets, out); });
  mul_cmd->callback([&] { rc = cmd_mul(file, expr_x, expr_y, out); });
  decomp->callback([&] { rc = cmd_decompose(file, out); });
  verify->callback([&] { rc = cmd_verify(file, samples, seed, dump_path, out); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return rc;
}

}  // namespace lgca
