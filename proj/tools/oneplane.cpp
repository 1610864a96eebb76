// Command-line front end. Exit codes: 0 success, 1 negative property,
// 2 input or parameter error.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oneplane/connectivity.hpp"
#include "oneplane/embedding.hpp"
#include "oneplane/generators.hpp"
#include "oneplane/hamilton.hpp"
#include "oneplane/io.hpp"
#include "oneplane/matching.hpp"
#include "oneplane/planarize.hpp"

namespace {

using namespace oneplane;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

// Thrown for anything that should end the process with exit code 2.
struct InputError {
  std::string code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"io-error", "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError{"io-error", "cannot write " + path};
}

Drawing load_drawing(const std::string& path) {
  Drawing d;
  try {
    d = parse_drawing(read_file(path));
  } catch (const Error& e) {
    throw InputError{e.code(), e.what()};
  }
  auto problems = validate_drawing(d);
  if (!problems.empty()) throw InputError{"invalid-drawing", problems.front()};
  return d;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void print_witness(const SeparationWitness& w) {
  std::cout << "witness: " << join(w.vertices) << '\n';
  std::cout << "side-a: " << join(w.side_a) << '\n';
  std::cout << "side-b: " << join(w.side_b) << '\n';
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string family;
  std::optional<int> param;
  int n = 0;
  int crossings = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string manifest;
};

int run_gen(const GenArgs& a) {
  FamilyInstance inst;
  auto need_param = [&]() {
    if (!a.param) throw InputError{"bad-parameter", "family " + a.family + " needs a size parameter"};
    return *a.param;
  };
  try {
    if (a.family == "max1p") {
      inst = gen_max1p(need_param());
    } else if (a.family == "double-stellation") {
      inst = gen_double_stellation(need_param());
    } else if (a.family == "wall") {
      WallInstance w = gen_wall(need_param());
      inst = FamilyInstance{std::move(w.drawing), std::move(w.manifest)};
    } else if (a.family == "kite") {
      if (a.param) throw InputError{"bad-parameter", "kite takes --n and --crossings, not a positional size"};
      inst.drawing = gen_kite_augmented(a.seed, a.n, a.crossings);
      inst.manifest.family = "kite";
      inst.manifest.values = {{"n", a.n}, {"crossings", a.crossings}, {"seed", static_cast<long long>(a.seed)}};
    } else {
      throw InputError{"bad-parameter", "unknown family '" + a.family + "'"};
    }
  } catch (const Error& e) {
    throw InputError{e.code(), e.what()};
  }
  std::string text = serialize_drawing(inst.drawing);
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  std::string mpath = !a.manifest.empty() ? a.manifest : a.out.empty() ? "" : a.out + ".manifest";
  if (!mpath.empty()) write_file(mpath, serialize_manifest(inst.manifest));
  return kOk;
}

// ---------------------------------------------------------------- check

int run_check(const std::string& path) {
  Drawing d;
  try {
    d = parse_drawing(read_file(path));
  } catch (const Error& e) {
    throw InputError{e.code(), e.what()};
  }
  auto problems = validate_drawing(d);
  if (!problems.empty()) {
    std::cout << "valid: no\n";
    for (const auto& p : problems) std::cout << "problem: " << p << '\n';
    return kInputError;
  }
  Embedded em = embed(d);
  bool tri = is_triangulated(em);
  std::cout << "valid: yes\n";
  std::cout << "n: " << d.n() << '\n';
  std::cout << "m: " << d.m() << '\n';
  std::cout << "crossings: " << d.num_crossings() << '\n';
  std::cout << "triangulated: " << (tri ? "yes" : "no") << '\n';
  std::cout << "density: " << (d.n() >= 3 ? to_string(classify_density(d.graph)) : "not-applicable") << '\n';
  auto seps = uncrossed_separating_triangles(d);
  std::cout << "uncrossed-separating-triangles: " << seps.size() << '\n';
  int kappa = d.n() >= 2 ? vertex_connectivity(d.graph) : 0;
  if (d.n() >= 2)
    std::cout << "connectivity: " << kappa << '\n';
  else
    std::cout << "connectivity: not-applicable\n";
  if (tri && d.n() >= 6) {
    bool no_sep = seps.empty(), four = kappa >= 4;
    std::cout << "corollary: "
              << (no_sep != four ? "mismatch" : no_sep ? "both-true-equivalent" : "both-false-equivalent") << '\n';
  } else {
    std::cout << "corollary: not-applicable\n";
  }
  return kOk;
}

// ------------------------------------------------------------ planarize

int run_planarize(const std::string& in, const std::string& out, const std::string& trace) {
  Drawing d = load_drawing(in);
  PlanarizeResult res;
  try {
    res = planarize(d);
  } catch (const WitnessError& e) {
    std::cout << "failure: " << e.code() << '\n' << "reason: " << e.what() << '\n';
    print_witness(e.witness());
    return kNegative;
  } catch (const Error& e) {
    std::cout << "failure: " << e.code() << '\n' << "reason: " << e.what() << '\n';
    return kNegative;
  }
  write_file(out, serialize_drawing(res.drawing));
  if (!trace.empty()) write_file(trace, serialize_trace(res.trace));
  std::cout << "resolved: " << res.trace.size() << '\n';
  std::cout << "n: " << res.drawing.n() << '\n';
  std::cout << "m: " << res.drawing.m() << '\n';
  return kOk;
}

// ------------------------------------------------------------- hamilton

int run_hamilton(const std::string& in, const FinderOptions& opt) {
  Drawing d = load_drawing(in);
  try {
    PipelineResult r = pipeline(d, opt);
    std::cout << "hamiltonian: yes\n";
    std::cout << "provenance: " << to_string(r.provenance) << '\n';
    std::cout << "length: " << r.cycle.order.size() << '\n';
    std::cout << "cycle: " << join(r.cycle.order) << '\n';
    return kOk;
  } catch (const WitnessError& e) {
    std::cout << "failure: " << e.code() << '\n' << "reason: " << e.what() << '\n';
    print_witness(e.witness());
  } catch (const Error& e) {
    std::cout << "failure: " << e.code() << '\n' << "reason: " << e.what() << '\n';
  }
  return kNegative;
}

// ------------------------------------------------------------- matching

// An explicit list ("3,5,8" or "3 5 8") or a manifest set name.
std::vector<int> resolve_witness(const std::string& witness_arg, const std::string& manifest_path) {
  bool numeric = !witness_arg.empty();
  for (char ch : witness_arg)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != ',' && ch != ' ') numeric = false;
  if (numeric) {
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(witness_arg);
    while (std::getline(ss, tok, ',')) {
      std::stringstream words(tok);
      std::string w;
      while (words >> w) {
        if (w.size() > 9) throw InputError{"bad-witness", "vertex id too large: " + w};
        out.push_back(std::stoi(w));
      }
    }
    return out;
  }
  Manifest m;
  try {
    m = parse_manifest(read_file(manifest_path));
  } catch (const Error& e) {
    throw InputError{e.code(), e.what()};
  }
  auto it = m.sets.find(witness_arg);
  if (it == m.sets.end()) throw InputError{"bad-witness", "manifest has no set '" + witness_arg + "'"};
  return it->second;
}

int run_matching(const std::string& in, const std::string& witness_arg, const std::string& manifest) {
  Drawing d = load_drawing(in);
  MatchingCertificate cert;
  try {
    cert = max_matching(d.graph);
  } catch (const Error& e) {
    throw InputError{e.code(), e.what()};
  }
  int size = static_cast<int>(cert.matching.size());
  std::cout << "size: " << size << '\n';
  std::cout << "unmatched: " << d.n() - 2 * size << '\n';
  std::cout << "near-perfect: " << (size == d.n() / 2 ? "yes" : "no") << '\n';
  if (!witness_arg.empty()) {
    auto s = resolve_witness(witness_arg, manifest.empty() ? in + ".manifest" : manifest);
    int bound;
    try {
      bound = tutte_berge_bound(d.graph, s);
    } catch (const Error& e) {
      throw InputError{e.code(), e.what()};
    }
    std::cout << "witness-size: " << s.size() << '\n';
    std::cout << "bound: " << bound << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-plane drawing toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a family instance");
  g->add_option("family", gen.family, "max1p | double-stellation | wall | kite")->required();
  g->add_option("param", gen.param, "h for max1p and double-stellation, k for wall");
  g->add_option("--n", gen.n, "kite: vertex count");
  g->add_option("--crossings", gen.crossings, "kite: number of crossings");
  g->add_option("--seed", gen.seed, "kite: random seed");
  g->add_option("-o,--out", gen.out, "drawing file (default stdout)");
  g->add_option("--manifest", gen.manifest, "manifest file (default <out>.manifest)");

  std::string check_in;
  auto* c = app.add_subcommand("check", "validate a drawing and report its properties");
  c->add_option("file", check_in)->required();

  std::string pl_in, pl_out, pl_trace;
  auto* p = app.add_subcommand("planarize", "delete one edge per crossing");
  p->add_option("in", pl_in)->required();
  p->add_option("out", pl_out)->required();
  p->add_option("--trace", pl_trace, "write one line per crossing to this file");

  std::string ham_in;
  FinderOptions fopt;
  auto* h = app.add_subcommand("hamilton", "find a Hamiltonian cycle");
  h->add_option("file", ham_in)->required();
  h->add_option("--seed", fopt.seed, "search seed");
  h->add_option("--attempts", fopt.attempts, "peeling attempts before giving up")->check(CLI::PositiveNumber);

  std::string mt_in, mt_witness, mt_manifest;
  auto* mt = app.add_subcommand("matching", "maximum matching and Tutte-Berge bound");
  mt->add_option("file", mt_in)->required();
  mt->add_option("--witness", mt_witness, "manifest set name or explicit vertex list");
  mt->add_option("--manifest", mt_manifest, "manifest file (default <file>.manifest)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*g) return run_gen(gen);
    if (*c) return run_check(check_in);
    if (*p) return run_planarize(pl_in, pl_out, pl_trace);
    if (*h) return run_hamilton(ham_in, fopt);
    if (*mt) return run_matching(mt_in, mt_witness, mt_manifest);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.code << ": " << e.message << '\n';
    return kInputError;
  }
  return kInputError;
}
