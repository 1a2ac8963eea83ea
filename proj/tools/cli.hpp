#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "galorb/galorb.hpp"

namespace galorb::cli {

/// Process exit codes.
enum Exit : int { kOk = 0, kInput = 1, kScope = 2, kViolation = 3 };

using io::json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string read_all(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

inline json read_json_file(const std::string& path, Streams& s) {
  if (path.empty() || path == "-") return io::parse_text(read_all(s.in), "<stdin>");
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return io::parse_text(read_all(f), path);
}

inline void emit(const json& j, Streams& s) { s.out << j.dump(2) << "\n"; }

/// Default seed: GALORB_SEED if set and numeric, else 42.
inline std::uint64_t default_seed() {
  if (const char* v = std::getenv("GALORB_SEED")) {
    try {
      std::size_t pos = 0;
      unsigned long long x = std::stoull(v, &pos);
      if (pos == std::string(v).size()) return x;
    } catch (const std::exception&) {
    }
  }
  return 42;
}

inline OrbitAtlas build_atlas(int dim, int index) {
  OrbitAtlas atlas = enumerate(dim, index);
  OrbitAtlas reference = gal3_table();
  if (dim == reference.total_dim && index == reference.total_index) annotate(atlas, reference);
  return atlas;
}

inline json suite_json(const SuiteResult& r) {
  json j;
  j["name"] = r.name;
  j["checks"] = r.checks;
  j["passed"] = r.passed();
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  return j;
}

struct Options {
  std::string classify_in;
  std::string group_path, algebra_path;
  bool twisted = false;
  int n = -1, dim = -1, index = -1;
  bool table = false;
  int atlas_row = 0;
  std::string moduli;
  std::uint64_t seed = 0;
  int trials = 100;
  std::vector<std::string> suite_names;
};

inline int cmd_classify(const Options& o, Streams& s) {
  SpecialTuple t = io::tuple_from_json(read_json_file(o.classify_in, s));
  emit(io::to_json(classify(t)), s);
  return kOk;
}

inline int cmd_act(const Options& o, Streams& s) {
  GroupElement g = io::group_from_json(read_json_file(o.group_path, s), o.group_path);
  AlgebraElement a = io::algebra_from_json(read_json_file(o.algebra_path, s), o.algebra_path);
  emit(io::to_json(o.twisted ? twisted_ad(g, a) : ad(g, a)), s);
  return kOk;
}

inline void atlas_shape(const Options& o, int& dim, int& index) {
  if (o.n >= 0) {
    dim = o.n + 2;
    index = 1;
  } else if (o.dim >= 0 && o.index >= 0) {
    dim = o.dim;
    index = o.index;
  } else {
    dim = 5;
    index = 1;
  }
}

inline int cmd_enumerate(const Options& o, Streams& s) {
  if (o.n < 0 && (o.dim < 0 || o.index < 0)) fail(ErrorCode::InvalidArgument, "enumerate: give --n or both --dim and --index");
  int dim, index;
  atlas_shape(o, dim, index);
  OrbitAtlas atlas = build_atlas(dim, index);
  if (o.table)
    s.out << render_table(atlas);
  else
    emit(io::to_json(atlas), s);
  return kOk;
}

inline int cmd_representative(const Options& o, Streams& s) {
  int dim, index;
  atlas_shape(o, dim, index);
  OrbitAtlas atlas = build_atlas(dim, index);
  if (o.atlas_row < 1 || static_cast<std::size_t>(o.atlas_row) > atlas.rows.size())
    fail(ErrorCode::InvalidArgument, "--atlas-row must be between 1 and " + std::to_string(atlas.rows.size()));
  const Decomposition& row = atlas.rows[static_cast<std::size_t>(o.atlas_row - 1)].decomposition;
  std::vector<Moduli> moduli;
  if (o.moduli.empty()) {
    moduli = sample_moduli(row);
  } else {
    bool inline_json = o.moduli.find_first_not_of(" \t\n") != std::string::npos &&
                       o.moduli[o.moduli.find_first_not_of(" \t\n")] == '[';
    json j = inline_json ? io::parse_text(o.moduli, "--moduli") : read_json_file(o.moduli, s);
    moduli = io::moduli_from_json(j, "--moduli");
  }
  Representative rep = representative(row, moduli);
  json j;
  j["requested"] = io::to_json(rep.requested);
  j["tuple"] = io::to_json(rep.tuple);
  j["element"] = io::to_json(rep.element);
  emit(j, s);
  return kOk;
}

inline int cmd_verify(const Options& o, Streams& s) {
  std::vector<std::pair<std::string, SuiteFn>> chosen;
  if (o.suite_names.empty()) {
    chosen = suites();
  } else {
    for (const auto& name : o.suite_names) {
      SuiteFn f = find_suite(name);
      if (!f) fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
      chosen.push_back({name, f});
    }
  }
  if (o.trials < 1) fail(ErrorCode::InvalidArgument, "--trials must be positive");
  json report;
  report["seed"] = o.seed;
  report["trials"] = o.trials;
  report["suites"] = json::array();
  bool all = true;
  for (const auto& [name, f] : chosen) {
    SuiteResult r = f(o.seed, o.trials);
    all = all && r.passed();
    report["suites"].push_back(suite_json(r));
    if (name == "atlas") report["atlas_diff"] = io::to_json(atlas_diff(enumerate(5, 1), rows_of(gal3_table())));
    for (const auto& x : r.failures) s.err << "[" << name << "] " << x << "\n";
  }
  report["passed"] = all;
  emit(report, s);
  return all ? kOk : kViolation;
}

/**
 * Runs the command line. Library errors map to exit codes: scope errors print
 * their JSON on stdout and return 2, everything else returns 1.
 */
inline int run(int argc, const char* const* argv, Streams s) {
  CLI::App app{"Exact adjoint/coadjoint computations and coadjoint orbit classification for Galilei groups", "galorb"};
  app.require_subcommand(1);
  Options o;
  o.seed = default_seed();

  auto* classify_cmd = app.add_subcommand("classify", "Decompose a special tuple into a cotype plus types");
  classify_cmd->add_option("--in", o.classify_in, "Special tuple JSON (default: stdin)");

  auto* act_cmd = app.add_subcommand("act", "Adjoint action of a group element on an algebra element");
  act_cmd->add_option("--group", o.group_path, "Group element JSON")->required();
  act_cmd->add_option("--algebra", o.algebra_path, "Algebra element JSON")->required();
  act_cmd->add_flag("--twisted", o.twisted, "Use the twisted (coadjoint) action");

  auto* enum_cmd = app.add_subcommand("enumerate", "List the decompositions with a given dimension and index");
  auto* n_opt = enum_cmd->add_option("--n", o.n, "Spatial dimension n (dimension n+2, index 1)")->check(CLI::NonNegativeNumber);
  auto* dim_opt = enum_cmd->add_option("--dim", o.dim, "Total dimension")->check(CLI::NonNegativeNumber);
  auto* index_opt = enum_cmd->add_option("--index", o.index, "Total index")->check(CLI::NonNegativeNumber);
  n_opt->excludes(dim_opt)->excludes(index_opt);
  dim_opt->needs(index_opt);
  index_opt->needs(dim_opt);
  enum_cmd->add_flag("--table", o.table, "Print an aligned text table instead of JSON");

  auto* rep_cmd = app.add_subcommand("representative", "Build a special tuple for an atlas row");
  rep_cmd->add_option("--atlas-row", o.atlas_row, "1-based row of the atlas")->required();
  rep_cmd->add_option("--moduli", o.moduli, "Moduli: inline JSON array or a path (default: sample values)");
  auto* rn = rep_cmd->add_option("--n", o.n, "Spatial dimension n (default 3)")->check(CLI::NonNegativeNumber);
  auto* rd = rep_cmd->add_option("--dim", o.dim, "Total dimension")->check(CLI::NonNegativeNumber);
  auto* ri = rep_cmd->add_option("--index", o.index, "Total index")->check(CLI::NonNegativeNumber);
  rn->excludes(rd)->excludes(ri);
  rd->needs(ri);
  ri->needs(rd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded property suites");
  verify_cmd->add_option("--seed", o.seed, "Seed (default: $GALORB_SEED or 42)");
  verify_cmd->add_option("--trials", o.trials, "Trials per check");
  verify_cmd->add_option("--suite", o.suite_names, "Suite name (repeatable; default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, s.out, s.err);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, s);
    if (*act_cmd) return cmd_act(o, s);
    if (*enum_cmd) return cmd_enumerate(o, s);
    if (*rep_cmd) return cmd_representative(o, s);
    if (*verify_cmd) return cmd_verify(o, s);
  } catch (const Error& e) {
    s.err << "galorb: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    if (is_scope_error(e.code())) {
      emit(io::error_json(e), s);
      return kScope;
    }
    return kInput;
  } catch (const json::exception& e) {
    s.err << "galorb: PARSE_ERROR: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

}  // namespace galorb::cli
