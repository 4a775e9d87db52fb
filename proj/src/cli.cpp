#include "omt/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "omt/error.hpp"
#include "omt/io.hpp"

namespace omt {

namespace {

using nlohmann::json;

struct Common {
  std::string input;
  std::string format;
  bool json = false;
  int threads = 0;
  bool force = false;
  bool serial = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-i,--input", c.input, "input file, '-' for stdin")->required();
  cmd->add_option("--format", c.format, "digraph, matrix or perspective (default: inferred)")
      ->check(CLI::IsMember({"digraph", "matrix", "perspective"}));
  cmd->add_flag("--json", c.json, "machine readable output");
  cmd->add_option("--threads", c.threads, "worker threads for the sweeps")->check(CLI::PositiveNumber);
  cmd->add_flag("--force", c.force, "lift the 20-element enumeration guard");
  cmd->add_flag("--serial", c.serial, "use the serial reference kernels")->group("");
}

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

// Either a single oriented matroid or a perspective, as read from the input.
struct Loaded {
  std::optional<Realization> matroid;
  std::optional<Perspective> perspective;

  const Realization& m() const { return matroid ? *matroid : perspective->m().realization(); }
  const GroundSet& ground() const { return m().ground(); }
  Perspective as_perspective(const SweepOptions& opts) const {
    return perspective ? *perspective : Perspective::identity(OrientedMatroid(*matroid, opts));
  }
};

Loaded load(const Common& c, const SweepOptions& opts) {
  const std::string text = read_input(c.input);
  const InputFormat format = c.format.empty() ? infer_format(text) : parse_format_name(c.format);
  Loaded l;
  if (format == InputFormat::perspective)
    l.perspective = parse_perspective(text, opts);
  else
    l.matroid = parse_realization(text, format);
  check_guard(l.ground().size(), opts);
  return l;
}

SweepOptions options_of(const Common& c) {
  if (c.threads > 0) omp_set_num_threads(c.threads);
  SweepOptions opts;
  opts.force = c.force;
  opts.parallel = !c.serial;
  return opts;
}

json identity_diff(const Polynomial& sum, const Polynomial& reference) {
  return {{"sum", to_string(sum)}, {"reference", to_string(reference)}, {"difference", to_string(sum - reference)}};
}

int cmd_tutte(const Common& c, std::ostream& out) {
  const SweepOptions opts = options_of(c);
  const Loaded l = load(c, opts);
  if (l.perspective) throw InputError("tutte takes a digraph or a matrix; use tutte3 for a perspective");
  const Polynomial closed = tutte_closed(*l.matroid, opts);
  const Polynomial by_bases = tutte_bases(*l.matroid, opts);
  if (c.json)
    out << json{{"tutte", to_string(closed)}, {"bases", to_string(by_bases)}, {"pass", closed == by_bases}}.dump(2)
        << "\n";
  else
    out << closed << "\n";
  if (closed != by_bases) {
    if (!c.json) out << identity_diff(by_bases, closed).dump(2) << "\n";
    return kExitIdentityFailure;
  }
  return kExitPass;
}

int cmd_tutte3(const Common& c, std::ostream& out) {
  const SweepOptions opts = options_of(c);
  const Loaded l = load(c, opts);
  const Polynomial t = tutte3_closed(l.as_perspective(opts), opts);
  if (c.json)
    out << json{{"tutte3", to_string(t)}}.dump(2) << "\n";
  else
    out << t << "\n";
  return kExitPass;
}

int cmd_activities(const Common& c, std::ostream& out) {
  const SweepOptions opts = options_of(c);
  const Loaded l = load(c, opts);
  const ExpansionReport report = expansion_sum(l.as_perspective(opts), opts);
  if (c.json)
    out << to_json(l.ground(), report).dump(2) << "\n";
  else
    out << to_tsv(l.ground(), report);
  if (!report.pass) {
    if (!c.json) out << identity_diff(report.sum, report.reference).dump(2) << "\n";
    return kExitIdentityFailure;
  }
  return kExitPass;
}

int cmd_verify(const Common& c, std::ostream& out) {
  const SweepOptions opts = options_of(c);
  const Loaded l = load(c, opts);
  const Perspective p = l.as_perspective(opts);
  const ExpansionReport report = expansion_sum(p, opts);
  const Polynomial t = tutte_xy(p, opts);
  const SpecializationReport spec = specialization_suite(report, t);

  std::string lemma;
  bool lemma_ok = true;
  if (p.size() == 0) {
    lemma = "vacuous";
  } else {
    try {
      lemma = to_string(lemma1_case(p, opts));
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      lemma = e.what();
      lemma_ok = false;
    }
  }
  const DeletionContractionReport dc = deletion_contraction_check(p, SIZE_MAX, opts);
  const bool ok = report.pass && spec.ok() && lemma_ok && dc.pass;

  json j{{"pass", ok},
         {"identity", {{"pass", report.pass}, {"sum", to_string(report.sum)}, {"reference", to_string(report.reference)}}},
         {"specialization",
          {{"shifted", spec.shifted_ok()}, {"restricted", spec.restricted_ok()}, {"two_zero", spec.two_zero_ok()}}},
         {"lemma", {{"pass", lemma_ok}, {"case", lemma}}},
         {"deletion_contraction", {{"pass", dc.pass}, {"nodes", dc.nodes}, {"failure", dc.failure}}}};
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    const auto word = [](bool b) { return b ? "pass" : "FAIL"; };
    out << "identity: " << word(report.pass) << "\n"
        << "specialization: " << word(spec.ok()) << "\n"
        << "lemma: " << (lemma_ok ? "case " : "FAIL ") << lemma << "\n"
        << "deletion-contraction: " << word(dc.pass) << " (" << dc.nodes << " perspectives)\n";
    if (!report.pass) out << identity_diff(report.sum, report.reference).dump(2) << "\n";
    if (!dc.pass) out << dc.failure << "\n";
  }
  return ok ? kExitPass : kExitIdentityFailure;
}

std::string str(const Integer& n) { return n.get_str(); }

int cmd_count(const Common& c, const std::string& what, std::optional<int> bounded_at, std::ostream& out) {
  const SweepOptions opts = options_of(c);
  const Loaded l = load(c, opts);
  json j;
  std::string text;
  bool ok = true;

  if (what == "acyclic") {
    const Integer n = count_acyclic(OrientedMatroid(l.m(), opts), opts);
    const Integer t = evaluate(tutte_closed(l.m(), opts), {{Var::x, 2}, {Var::y, 0}}).get_num();
    ok = n == t;
    j = {{"count", str(n)}, {"t(2,0)", str(t)}};
    text = str(n) + " (t(2,0)=" + str(t) + ")";
  } else if (what == "bounded") {
    std::optional<Perspective> p;
    if (bounded_at) {
      if (l.perspective) throw InputError("--bounded-at takes a digraph or a matrix");
      p = bounded_perspective(*l.matroid, *bounded_at, opts);
    } else if (l.perspective) {
      p = *l.perspective;
    } else {
      throw InputError("count bounded needs a perspective or --bounded-at <label>");
    }
    const Integer n = count_bounded(*p, opts);
    const Integer t = evaluate(tutte3_closed(*p, opts), {{Var::x, 0}, {Var::y, 0}, {Var::z, 1}}).get_num();
    const auto sums = signed_sums(expansion_sum(*p, opts));
    ok = n == t && std::all_of(sums.begin(), sums.end(), [&](const Integer& s) { return s == t; });
    j = {{"count", str(n)},
         {"t(0,0,1)", str(t)},
         {"signed_sums", {str(sums[0]), str(sums[1]), str(sums[2]), str(sums[3])}}};
    text = str(n) + " (t(0,0,1)=" + str(t) + ")";
  } else {
    const Integer n(static_cast<unsigned long>(bases(l.m(), opts).size()));
    const Integer t = evaluate(tutte_closed(l.m(), opts), {{Var::x, 1}, {Var::y, 1}}).get_num();
    const BasicCounts basic = count_basic_orientations(OrientedMatroid(l.m(), opts), opts);
    ok = n == t && basic.unbarred == t && basic.barred == t;
    j = {{"count", str(n)}, {"t(1,1)", str(t)}, {"basic_orientations", {str(basic.unbarred), str(basic.barred)}}};
    text = str(n) + " (t(1,1)=" + str(t) + ")";
  }
  j["pass"] = ok;
  out << (c.json ? j.dump(2) : text) << "\n";
  return ok ? kExitPass : kExitIdentityFailure;
}

int cmd_derivative(const Common& c, std::uint32_t dp, std::uint32_t dq, bool diag, std::ostream& out) {
  const SweepOptions opts = options_of(c);
  const Loaded l = load(c, opts);
  const Perspective p = l.as_perspective(opts);
  const ExpansionReport report = expansion_sum(p, opts);
  const Polynomial t = tutte_xy(p, opts);
  const Polynomial lhs = diag ? derivative_diag(report, dp) : derivative_expansion(report, dp, dq);
  const Polynomial rhs = diag ? derivative_diag_reference(t, dp) : derivative_reference(t, dp, dq);
  if (c.json)
    out << json{{"expansion", to_string(lhs)}, {"derivative", to_string(rhs)}, {"pass", lhs == rhs}}.dump(2) << "\n";
  else
    out << "expansion: " << lhs << "\nderivative: " << rhs << "\n";
  if (lhs != rhs) {
    if (!c.json) out << identity_diff(lhs, rhs).dump(2) << "\n";
    return kExitIdentityFailure;
  }
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tutte polynomials of oriented matroids and perspectives, and their activity expansions", "omtutte"};
  app.require_subcommand(1);

  Common c;
  auto* tutte = app.add_subcommand("tutte", "t(M;x,y) by the rank formula, cross-checked against basis activities");
  add_common(tutte, c);
  auto* tutte3 = app.add_subcommand("tutte3", "t(M,M';x,y,z) by the rank formula");
  add_common(tutte3, c);
  auto* activities = app.add_subcommand("activities", "activity table of every reorientation (TSV)");
  add_common(activities, c);
  auto* verify = app.add_subcommand("verify", "expansion identity, specializations, lemma and recursion checks");
  add_common(verify, c);

  auto* count = app.add_subcommand("count", "counts next to the matching Tutte evaluation");
  count->require_subcommand(1);
  std::optional<int> bounded_at;
  std::string what;
  for (const char* name : {"acyclic", "bounded", "bases"}) {
    auto* sub = count->add_subcommand(name);
    add_common(sub, c);
    if (std::string(name) == "bounded")
      sub->add_option("--bounded-at", bounded_at, "build M -> M/e + loop(e) from a matroid input");
    sub->callback([&what, name] { what = name; });
  }

  std::uint32_t dp = 0, dq = 0;
  bool diag = false;
  auto* derivative = app.add_subcommand("derivative", "both sides of the derivative expansion");
  add_common(derivative, c);
  derivative->add_option("-p", dp, "order in x");
  derivative->add_option("-q", dq, "order in y");
  derivative->add_flag("--diag", diag, "d^p/dx^p of t(x,x,1); -q is ignored");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*tutte) return cmd_tutte(c, out);
    if (*tutte3) return cmd_tutte3(c, out);
    if (*activities) return cmd_activities(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*count) return cmd_count(c, what, bounded_at, out);
    if (*derivative) return cmd_derivative(c, dp, dq, diag, out);
  } catch (const Error& e) {
    // parse, input, guard and axiom errors; identity failures are returned
    err << "omtutte: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace omt
