#include "cli.hpp"

#include "steiner/bounds.hpp"
#include "steiner/constructors.hpp"
#include "steiner/errors.hpp"
#include "steiner/extremal.hpp"
#include "steiner/graph_io.hpp"
#include "steiner/serialization.hpp"
#include "steiner/steiner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

namespace steiner::cli {
namespace {

struct GraphSource {
  std::string file;
  std::string family;
  std::vector<std::size_t> size;
  std::optional<unsigned> d;
  std::optional<unsigned> delta;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  auto* graph = cmd->add_option("--graph", src.file, "Edge-list file");
  auto* family = cmd->add_option("--family", src.family,
                                 "path|cycle|star|complete|complete_bipartite|petersen|G|H");
  graph->excludes(family);
  cmd->add_option("--size", src.size, "Family size (two values for complete_bipartite)")->expected(1, 2);
  cmd->add_option("--d", src.d, "Layer parameter d for G and H");
  cmd->add_option("--delta", src.delta, "Minimum-degree parameter for G and H");
}

ExtremalSpec extremal_spec(ExtremalFamily family, unsigned d, unsigned delta) {
  const ExtremalSpec spec{family, d, delta};
  try {
    spec.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  return spec;
}

Graph load_graph(const GraphSource& src) {
  if (!src.file.empty()) return load_edge_list(src.file);
  if (src.family.empty()) throw UsageError("one of --graph or --family is required");
  if (src.family == "G" || src.family == "H") {
    if (!src.d || !src.delta) throw UsageError("--family " + src.family + " needs --d and --delta");
    return generate(extremal_spec(parse_extremal_family(src.family), *src.d, *src.delta));
  }
  if (src.family == "petersen") return petersen_graph();
  const ClassicFamily family = parse_classic_family(src.family);
  const std::size_t expected = family == ClassicFamily::complete_bipartite ? 2 : 1;
  if (src.size.size() != expected) {
    throw UsageError("--family " + src.family + " needs " + std::to_string(expected) + " --size value(s)");
  }
  try {
    return gen_classic(family, src.size);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw Error("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string edge_str(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void print_bound(std::ostream& out, const BoundReport& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.name;
  const std::string params = format_params(r.params);
  if (!params.empty()) out << ' ' << params;
  out << " measured=" << to_string(r.measured) << " rhs=" << to_string(r.rhs) << " slack=" << to_string(r.slack);
  if (r.vacuous) out << " vacuous";
  out << '\n';
}

int print_report(std::ostream& out, const CertificateReport& report) {
  for (const Check& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) out << ": " << c.detail;
    out << '\n';
  }
  for (const BoundReport& b : report.bounds) print_bound(out, b);
  return report.passed() ? kOk : kBoundViolation;
}

void print_certificate_summary(std::ostream& out, const Certificate& cert) {
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PackingCertificate>) {
          out << "method packing\nanchors";
          for (Vertex a : c.anchors) out << ' ' << a;
          out << "\nweights";
          for (Vertex a : c.anchors) out << ' ' << c.weights[a];
        } else {
          out << "method matching\nmatching";
          for (const Edge& b : c.matching) out << ' ' << edge_str(b);
          out << "\nweights";
          for (Vertex a : c.matched_vertices()) out << ' ' << a << ':' << c.weights[a];
        }
        out << "\nconnectors";
        for (const Edge& e : c.connectors) out << ' ' << edge_str(e);
        out << '\n';
      },
      cert);
}

// compute ------------------------------------------------------------------

struct ComputeArgs {
  GraphSource src;
  unsigned k = 2;
  std::string weights_file;
  std::optional<std::uint64_t> uniform_weight;
  std::string metric = "sw";
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(a.src);
  const bool tree = is_tree(g);
  err << "graph: n=" << g.order() << " m=" << g.size() << (tree ? " (tree)" : "") << ", k=" << a.k << '\n';

  std::optional<WeightFn> c;
  if (!a.weights_file.empty()) c = load_weights(a.weights_file, g.order());
  if (a.uniform_weight) c = WeightFn::uniform(g.order(), *a.uniform_weight);

  BigInt sw;
  BigInt count;
  if (c) {
    sw = tree ? sw_k_weighted_tree(g, *c, a.k) : sw_k_weighted(g, *c, a.k);
    count = binomial(c->total(), a.k);
  } else {
    sw = tree ? sw_k_tree(g, a.k) : sw_k(g, a.k);
    count = binomial(g.order(), a.k);
  }
  if (a.metric == "sw") {
    out << to_string(sw) << '\n';
  } else {
    out << to_string(Rational(sw, count)) << '\n';
  }
  return kOk;
}

// bound --------------------------------------------------------------------

struct BoundArgs {
  std::string which;
  BoundParams params;
  unsigned k = 2;
};

int cmd_bound(BoundArgs a, std::ostream& out, std::ostream&) {
  a.params.k = a.k;
  out << to_string(evaluate_bound(parse_bound_id(a.which), a.params)) << '\n';
  return kOk;
}

// construct ----------------------------------------------------------------

struct ConstructArgs {
  GraphSource src;
  std::string method = "packing";
  std::vector<Vertex> start;
  unsigned k = 2;
  std::string out_file;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(a.src);
  Certificate cert;
  if (a.method == "packing") {
    if (a.start.size() > 1) throw UsageError("--start takes one vertex for the packing method");
    cert = packing_spanning_tree(g, a.start.empty() ? 0 : a.start.front());
  } else {
    if (a.start.size() == 1) throw UsageError("--start takes two endpoints for the matching method");
    if (!a.start.empty() && a.start[0] == a.start[1]) throw UsageError("--start endpoints must differ");
    if (a.start.empty() && g.size() == 0) throw PreconditionError("matching construction needs at least one edge");
    const Edge start = a.start.empty() ? g.edges().front() : Edge(a.start[0], a.start[1]);
    cert = matching_spanning_tree(g, start);
  }
  if (!a.out_file.empty()) {
    write_file(a.out_file, certificate_to_json(cert));
    err << "certificate written to " << a.out_file << '\n';
  }
  print_certificate_summary(out, cert);
  return print_report(out, verify_certificate(cert, g, a.k));
}

// generate -----------------------------------------------------------------

struct GenerateArgs {
  GraphSource src;
  std::string out_file;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const std::string text = format_edge_list(load_graph(a.src));
  if (a.out_file.empty()) {
    out << text;
  } else {
    write_file(a.out_file, text);
    err << "graph written to " << a.out_file << '\n';
  }
  return kOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  GraphSource src;
  unsigned k = 2;
  bool all = false;
  std::string which;
  std::string cert_file;
  std::string weights_file;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(a.src);
  if (!a.cert_file.empty()) {
    const Certificate cert = certificate_from_json(read_file(a.cert_file));
    return print_report(out, verify_certificate(cert, g, a.k));
  }

  std::optional<WeightFn> c;
  if (!a.weights_file.empty()) c = load_weights(a.weights_file, g.order());
  const WeightFn* weights = c ? &*c : nullptr;

  std::vector<BoundId> ids(std::begin(kAllBounds), std::end(kAllBounds));
  const bool single = !a.which.empty() && !a.all;
  if (single) ids = {parse_bound_id(a.which)};

  int code = kOk;
  std::size_t applied = 0;
  for (BoundId id : ids) {
    if (const auto problem = bound_precondition(g, id, a.k, weights)) {
      if (single) throw PreconditionError(std::string(to_string(id)) + ": " + *problem);
      err << "skip " << to_string(id) << ": " << *problem << '\n';
      continue;
    }
    const BoundReport report = check(g, id, a.k, weights);
    print_bound(out, report);
    ++applied;
    if (!report.pass) code = kBoundViolation;
  }
  if (applied == 0) throw PreconditionError("no bound applies to this graph");
  return code;
}

// sweep --------------------------------------------------------------------

struct SweepArgs {
  std::string family;
  unsigned delta = 2;
  unsigned k = 2;
  unsigned d_min = 0;
  unsigned d_max = 0;
  std::string out_file;
  std::uint64_t max_subsets = 50'000'000;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const ExtremalFamily family = parse_extremal_family(a.family);
  if (a.d_min > a.d_max) throw UsageError("--d-min exceeds --d-max");
  extremal_spec(family, a.d_min, a.delta);
  const auto rows = tightness_sweep(family, a.delta, a.k, a.d_min, a.d_max, BigInt(a.max_subsets));
  for (const SweepRow& r : rows) {
    if (family == ExtremalFamily::H && r.has_triangle) err << "note: d=" << r.d << " instance contains a triangle\n";
  }
  const std::string csv = sweep_csv(rows);
  if (a.out_file.empty()) {
    out << csv;
  } else {
    write_file(a.out_file, csv);
    err << rows.size() << " rows written to " << a.out_file << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Steiner k-Wiener indices, spanning-tree certificates and bound checks", "steinerw"};
  app.require_subcommand(1);

  std::vector<std::string> bound_names;
  for (BoundId id : kAllBounds) bound_names.emplace_back(to_string(id));

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Exact SW_k or mu_k of a graph");
  add_graph_options(c, compute.src);
  c->add_option("--k", compute.k, "Subset size")->capture_default_str();
  auto* wfile = c->add_option("--weights", compute.weights_file, "Weight file with `v w` lines");
  auto* wuni = c->add_option("--uniform-weight", compute.uniform_weight, "Same weight on every vertex");
  wfile->excludes(wuni);
  c->add_option("--metric", compute.metric, "sw or mu")->check(CLI::IsMember({"sw", "mu"}))->capture_default_str();

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "Evaluate a closed-form bound");
  b->add_option("--which", bound.which, "Bound name")->required()->check(CLI::IsMember(bound_names));
  b->add_option("--n", bound.params.n, "Order");
  b->add_option("--delta", bound.params.delta, "Minimum degree");
  b->add_option("--k", bound.k, "Subset size")->capture_default_str();
  b->add_option("--N", bound.params.total_weight, "Total weight");
  b->add_option("--C", bound.params.min_weight, "Minimum weight");

  ConstructArgs construct;
  auto* s = app.add_subcommand("construct", "Build a spanning tree with a certificate and verify it");
  add_graph_options(s, construct.src);
  s->add_option("--method", construct.method, "packing or matching")
      ->check(CLI::IsMember({"packing", "matching"}))
      ->capture_default_str();
  s->add_option("--start", construct.start, "Start vertex (packing) or edge endpoints (matching)")->expected(1, 2);
  s->add_option("--k", construct.k, "Subset size")->capture_default_str();
  s->add_option("--out", construct.out_file, "Certificate JSON output");

  GenerateArgs generate_args;
  auto* g = app.add_subcommand("generate", "Write a generated graph as an edge list");
  add_graph_options(g, generate_args.src);
  g->add_option("--out", generate_args.out_file, "Output file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check bounds or a certificate against a graph");
  add_graph_options(v, verify.src);
  v->add_option("--k", verify.k, "Subset size")->capture_default_str();
  auto* all = v->add_flag("--all", verify.all, "Run every applicable bound (default)");
  auto* which = v->add_option("--which", verify.which, "Run a single bound")->check(CLI::IsMember(bound_names));
  all->excludes(which);
  auto* cert = v->add_option("--cert", verify.cert_file, "Certificate JSON to re-check");
  cert->excludes(which);
  v->add_option("--weights", verify.weights_file, "Weight file for lemma2");

  SweepArgs sweep;
  auto* w = app.add_subcommand("sweep", "Tightness sweep over an extremal family");
  w->add_option("--family", sweep.family, "G or H")->required()->check(CLI::IsMember({"G", "H"}));
  w->add_option("--delta", sweep.delta, "Minimum degree")->required();
  w->add_option("--k", sweep.k, "Subset size")->capture_default_str();
  w->add_option("--d-min", sweep.d_min, "First d")->required();
  w->add_option("--d-max", sweep.d_max, "Last d")->required();
  w->add_option("--out", sweep.out_file, "CSV output (default stdout)");
  w->add_option("--max-subsets", sweep.max_subsets, "Largest C(n,k) attempted")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out, err);
    if (b->parsed()) return cmd_bound(bound, out, err);
    if (s->parsed()) return cmd_construct(construct, out, err);
    if (g->parsed()) return cmd_generate(generate_args, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    return cmd_sweep(sweep, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace steiner::cli
