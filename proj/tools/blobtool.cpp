// Command-line surface for the blob algebra toolkit: parameters, walks,
// orbits, graded dimensions, decomposition matrices, and the verification
// sweep. All data output is byte-deterministic for fixed inputs.

#include <CLI11.hpp>
#include <json.hpp>

#include <blob/alcove.hpp>
#include <blob/errors.hpp>
#include <blob/laurent.hpp>
#include <blob/oracle.hpp>
#include <blob/params.hpp>
#include <blob/render.hpp>
#include <blob/repdims.hpp>
#include <blob/serialize.hpp>
#include <blob/tableaux.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

struct CommonOpts {
  int l = 0;
  int m = 0;
  int n = 0;
  std::string format = "pretty";
  std::string out;
  int parallel = 1;
};

void add_format_option(CLI::App* cmd, CommonOpts& opts,
                       const std::vector<std::string>& allowed) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
}

int emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 1;
  }
  file << payload;
  return file.good() ? 0 : 1;
}

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  return out.str();
}

std::string position_set(const std::vector<int>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i];
  }
  out << '}';
  return out.str();
}

json poly_json(const blob::LaurentPoly& poly) {
  return json::parse(blob::poly_to_json(poly));
}

json params_json(const blob::BlobParams& p) {
  return json{{"l", p.l}, {"m", p.m}, {"n", p.n}};
}

const char* direction_name(blob::FinalDirection dir) {
  switch (dir) {
    case blob::FinalDirection::TowardAxis:
      return "toward";
    case blob::FinalDirection::AwayFromAxis:
      return "away";
    default:
      return "none";
  }
}

// Resolves --lambda / --bipartition sugar into a weight and a level.
struct WeightInput {
  std::optional<int> lambda;
  std::string bipartition;

  std::pair<int, int> resolve(int n_flag) const {
    if (!bipartition.empty()) {
      int a = 0;
      int b = 0;
      char comma = 0;
      std::istringstream in(bipartition);
      if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof() ||
          a < 0 || b < 0) {
        blob::fail(blob::ErrorCode::SizeMismatch,
                   "--bipartition expects nonnegative integers 'a,b', got '" +
                       bipartition + "'");
      }
      if (lambda.has_value() && *lambda != a - b) {
        blob::fail(blob::ErrorCode::SizeMismatch,
                   "--lambda disagrees with --bipartition");
      }
      if (n_flag != 0 && n_flag != a + b) {
        blob::fail(blob::ErrorCode::SizeMismatch,
                   "--bipartition " + bipartition + " has size " +
                       std::to_string(a + b) + " but --n is " +
                       std::to_string(n_flag));
      }
      return {a - b, a + b};
    }
    if (!lambda.has_value()) {
      blob::fail(blob::ErrorCode::SizeMismatch,
                 "a weight is required: pass --lambda or --bipartition");
    }
    return {*lambda, n_flag};
  }
};

int cmd_params(const CommonOpts& opts) {
  auto p = blob::validate_params(opts.l, opts.m, opts.n);
  auto sys = blob::alcove_system(p);
  auto walls = sys.walls_in_range(-p.n, p.n);

  std::string payload;
  if (opts.format == "json") {
    json root = params_json(p);
    root["k"] = p.k;
    root["fundamental_alcove"] = {-p.m, p.l - p.m};
    root["walls"] = walls;
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "l = " << p.l << "\n";
    out << "m = " << p.m << "\n";
    out << "n = " << p.n << "\n";
    out << "k = " << p.k << "\n";
    out << "fundamental alcove = (" << -p.m << ", " << p.l - p.m << ")\n";
    out << "walls = " << join_ints(walls) << "\n";
    payload = out.str();
  }
  return emit(opts.out, payload);
}

struct WalkArgs {
  std::string signs;
  std::string as_weights;
};

blob::Bitableau parse_walk_input(const WalkArgs& args) {
  if (!args.as_weights.empty() && !args.signs.empty()) {
    blob::fail(blob::ErrorCode::MalformedWalk,
               "provide either a sign string or --as-weights, not both");
  }
  if (!args.as_weights.empty()) {
    blob::Walk walk;
    std::istringstream in(args.as_weights);
    std::string piece;
    while (std::getline(in, piece, ',')) {
      try {
        std::size_t used = 0;
        walk.push_back(std::stoi(piece, &used));
        if (used != piece.size()) throw std::invalid_argument(piece);
      } catch (const std::exception&) {
        blob::fail(blob::ErrorCode::MalformedWalk,
                   "--as-weights expects comma-separated integers, got '" +
                       args.as_weights + "'");
      }
    }
    return blob::tableau_of(walk);
  }
  if (args.signs.empty()) {
    blob::fail(blob::ErrorCode::MalformedWalk,
               "provide a sign string or --as-weights");
  }
  return blob::parse_bitableau(args.signs);
}

int cmd_walk(const CommonOpts& opts, const WalkArgs& args) {
  auto t = parse_walk_input(args);
  auto p = blob::validate_params(opts.l, opts.m, t.size());
  auto sys = blob::alcove_system(p);
  auto walk = blob::walk_of(t);
  auto shape = blob::shape_of(t);
  auto residues = blob::residue_of_tableau(t, p);
  auto breakdown = blob::degree_walk(t, p);
  int degree_nodes = blob::degree_g(t, p);

  // The walk belongs to at most one residue class of an initial tableau.
  std::optional<int> cls;
  for (int w = -p.n; w <= p.n; w += 2) {
    if (blob::residue_of_tableau(blob::t_lambda(w, p.n), p) == residues) {
      cls = w;
      break;
    }
  }
  std::optional<blob::WallWord> word;
  if (cls.has_value()) word = blob::wall_word_of(t, *cls, p);

  std::string payload;
  if (opts.format == "json") {
    json root;
    root["signs"] = t.signs;
    root["params"] = params_json(p);
    root["weights"] = walk;
    root["shape"] = {shape.a, shape.b};
    root["residues"] = residues;
    root["a_positions"] = breakdown.a_positions;
    root["r_positions"] = breakdown.r_positions;
    root["degree_nodes"] = degree_nodes;
    root["degree_walls"] = breakdown.degree;
    if (cls.has_value()) {
      root["class"] = *cls;
      root["word"] = word->letters;
      root["final"] = direction_name(word->final_direction);
      root["degree_word"] = blob::degree_word(*word);
    } else {
      root["class"] = nullptr;
    }
    payload = root.dump(2) + "\n";
  } else if (opts.format == "ascii") {
    payload = blob::render_triangle(walk, sys);
  } else {
    std::ostringstream out;
    out << blob::render_triangle(walk, sys);
    out << "signs = " << t.signs << "\n";
    out << "weights = " << join_ints(walk) << "\n";
    out << "shape = ((" << shape.a << "),(" << shape.b << "))\n";
    out << "residues = " << join_ints(residues) << "\n";
    out << "A = " << position_set(breakdown.a_positions) << "\n";
    out << "R = " << position_set(breakdown.r_positions) << "\n";
    out << "degree (nodes) = " << degree_nodes << "\n";
    out << "degree (walls) = " << breakdown.degree << "\n";
    if (cls.has_value()) {
      out << "class = " << *cls << "\n";
      out << "word = " << word->letters << "\n";
      out << "final = " << direction_name(word->final_direction) << "\n";
      out << "degree (word) = " << blob::degree_word(*word) << "\n";
    } else {
      out << "class = none\n";
    }
    payload = out.str();
  }
  return emit(opts.out, payload);
}

int cmd_orbit(const CommonOpts& opts, int lambda) {
  auto p = blob::validate_params(opts.l, opts.m, opts.n);
  auto sys = blob::alcove_system(p);
  auto ms = blob::m_set(lambda, p);
  auto orb = blob::orbit(lambda, sys, p.n);

  std::string payload;
  if (opts.format == "json") {
    json root;
    root["lambda"] = lambda;
    root["params"] = params_json(p);
    root["region"] = blob::region_name(ms.position.region);
    root["side"] = ms.position.side;
    root["kappa"] = ms.position.kappa;
    root["orbit"] = orb;
    root["indexed"] = ms.entries;
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "lambda = " << lambda << "\n";
    out << "region = " << blob::region_name(ms.position.region) << "\n";
    out << "side = " << ms.position.side << "\n";
    out << "kappa = " << ms.position.kappa << "\n";
    out << "orbit = " << join_ints(orb) << "\n";
    out << "indexed = " << join_ints(ms.entries) << "\n";
    payload = out.str();
  }
  return emit(opts.out, payload);
}

int cmd_dims(const CommonOpts& opts, int lambda) {
  auto p = blob::validate_params(opts.l, opts.m, opts.n);
  auto dims = blob::cell_dims_subalgebra(lambda, p);

  std::string payload;
  if (opts.format == "json") {
    json root;
    root["lambda"] = lambda;
    root["params"] = params_json(p);
    root["kappa"] = dims.index.position.kappa;
    root["entries"] = json::array();
    for (int i = 0; i < dims.index.size(); ++i) {
      json entry;
      entry["k"] = i + 1;
      entry["mu"] = dims.index.entries[i];
      entry["cell"] = poly_json(dims.cell[i]);
      entry["simple"] = poly_json(dims.simple[i]);
      root["entries"].push_back(entry);
    }
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "lambda = " << lambda << "\n";
    out << "kappa = " << dims.index.position.kappa << "\n";
    for (int i = 0; i < dims.index.size(); ++i) {
      out << "k=" << i + 1 << " mu=" << dims.index.entries[i]
          << " cell=" << dims.cell[i].to_string()
          << " simple=" << dims.simple[i].to_string() << "\n";
    }
    payload = out.str();
  }
  return emit(opts.out, payload);
}

std::string decomp_grid(const blob::DecompMatrix& mat) {
  const auto& weights = mat.weights;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"mu\\lambda"};
  for (int lam : weights) header.push_back(std::to_string(lam));
  cells.push_back(header);
  for (int mu : weights) {
    std::vector<std::string> row{std::to_string(mu)};
    for (int lam : weights) row.push_back(mat.entry(mu, lam).to_string());
    cells.push_back(row);
  }
  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::string(widths[i] - row[i].size(), ' ') << row[i];
    }
    out << "\n";
  }
  return out.str();
}

int cmd_decomp(const CommonOpts& opts) {
  auto p = blob::validate_params(opts.l, opts.m, opts.n);
  auto mat = blob::decomposition_matrix(p, opts.parallel);

  std::string payload;
  if (opts.format == "json") {
    payload = blob::decomp_to_json(mat);
  } else if (opts.format == "csv") {
    payload = blob::decomp_to_csv(mat);
  } else {
    payload = decomp_grid(mat);
  }
  return emit(opts.out, payload);
}

int cmd_verify(const CommonOpts& opts, int max_n) {
  std::ostringstream out;
  bool failed = false;
  for (int n = 1; n <= max_n && !failed; ++n) {
    auto p = blob::validate_params(opts.l, opts.m, n);
    auto report = blob::verify_consistency(p, opts.parallel);
    int passed = 0;
    for (const auto& check : report.checks) {
      if (check.pass) {
        ++passed;
      } else {
        failed = true;
        out << "FAIL(n=" << n << "): " << check.name << ": " << check.detail
            << "\n";
      }
    }
    // Decomposition columns recomputed from raw enumeration alone.
    int columns = 0;
    for (int w = -n; w <= n && !failed; w += 2) {
      auto closed = blob::decomposition_column(w, p);
      auto oracle = blob::oracle_decomposition_column(w, p);
      bool match = oracle.size() == static_cast<std::size_t>(closed.index.size());
      for (int i = 0; match && i < closed.index.size(); ++i) {
        auto it = oracle.find(closed.index.entries[i]);
        match = it != oracle.end() && it->second == closed.entries[i];
      }
      if (!match) {
        failed = true;
        out << "FAIL(n=" << n << "): column mismatch at lambda=" << w << "\n";
        break;
      }
      ++columns;
    }
    if (!failed) {
      out << "n=" << n << ": checks " << passed << "/" << report.checks.size()
          << ", columns " << columns << "/" << n + 1 << "\n";
    }
    for (const auto& warning : report.warnings) {
      out << "warning(n=" << n << "): " << warning << "\n";
    }
  }
  if (!failed) out << "all checks passed\n";
  int rc = emit(opts.out, out.str());
  if (rc != 0) return rc;
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded dimensions and decomposition numbers of blob algebras"};
  app.require_subcommand(1);

  CommonOpts params_opts;
  auto* params_cmd = app.add_subcommand("params", "validate (l, m, n) and show the wall layout");
  params_cmd->add_option("--l", params_opts.l, "quantum characteristic")->required();
  params_cmd->add_option("--m", params_opts.m, "weight parameter")->required();
  params_cmd->add_option("--n", params_opts.n, "number of strands")->required();
  add_format_option(params_cmd, params_opts, {"json", "pretty", "ascii"});

  CommonOpts walk_opts;
  WalkArgs walk_args;
  auto* walk_cmd = app.add_subcommand("walk", "analyze one bitableau as a walk");
  walk_cmd->add_option("signs", walk_args.signs, "sign string, e.g. '++-+'");
  walk_cmd->add_option("--as-weights", walk_args.as_weights,
                       "walk as comma-separated weights starting at 0");
  walk_cmd->add_option("--l", walk_opts.l, "quantum characteristic")->required();
  walk_cmd->add_option("--m", walk_opts.m, "weight parameter")->required();
  add_format_option(walk_cmd, walk_opts, {"json", "pretty", "ascii"});

  CommonOpts orbit_opts;
  WeightInput orbit_weight;
  auto* orbit_cmd = app.add_subcommand("orbit", "classify a weight and list its indexed shape set");
  orbit_cmd->add_option("--lambda", orbit_weight.lambda, "weight in Lambda_n");
  orbit_cmd->add_option("--bipartition", orbit_weight.bipartition,
                        "one-line bipartition 'a,b' standing for the weight a-b");
  orbit_cmd->add_option("--l", orbit_opts.l, "quantum characteristic")->required();
  orbit_cmd->add_option("--m", orbit_opts.m, "weight parameter")->required();
  orbit_cmd->add_option("--n", orbit_opts.n, "number of strands");
  add_format_option(orbit_cmd, orbit_opts, {"json", "pretty", "ascii"});

  CommonOpts dims_opts;
  WeightInput dims_weight;
  auto* dims_cmd = app.add_subcommand("dims", "graded cell and simple dimensions at a weight");
  dims_cmd->add_option("--lambda", dims_weight.lambda, "weight in Lambda_n");
  dims_cmd->add_option("--bipartition", dims_weight.bipartition,
                       "one-line bipartition 'a,b' standing for the weight a-b");
  dims_cmd->add_option("--l", dims_opts.l, "quantum characteristic")->required();
  dims_cmd->add_option("--m", dims_opts.m, "weight parameter")->required();
  dims_cmd->add_option("--n", dims_opts.n, "number of strands");
  add_format_option(dims_cmd, dims_opts, {"json", "pretty", "ascii"});

  CommonOpts decomp_opts;
  auto* decomp_cmd = app.add_subcommand("decomp", "full graded decomposition matrix");
  decomp_cmd->add_option("--l", decomp_opts.l, "quantum characteristic")->required();
  decomp_cmd->add_option("--m", decomp_opts.m, "weight parameter")->required();
  decomp_cmd->add_option("--n", decomp_opts.n, "number of strands")->required();
  decomp_cmd->add_option("--parallel", decomp_opts.parallel, "worker thread count")
      ->check(CLI::PositiveNumber);
  add_format_option(decomp_cmd, decomp_opts, {"json", "csv", "pretty", "ascii"});

  CommonOpts verify_opts;
  int max_n = 12;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check closed forms against enumeration");
  verify_cmd->add_option("--l", verify_opts.l, "quantum characteristic")->required();
  verify_cmd->add_option("--m", verify_opts.m, "weight parameter")->required();
  verify_cmd->add_option("--max-n", max_n, "verify all levels up to this bound")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--parallel", verify_opts.parallel, "worker thread count")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", verify_opts.out,
                         "write the report to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (params_cmd->parsed()) return cmd_params(params_opts);
    if (walk_cmd->parsed()) return cmd_walk(walk_opts, walk_args);
    if (orbit_cmd->parsed()) {
      auto [lambda, n] = orbit_weight.resolve(orbit_opts.n);
      orbit_opts.n = n;
      return cmd_orbit(orbit_opts, lambda);
    }
    if (dims_cmd->parsed()) {
      auto [lambda, n] = dims_weight.resolve(dims_opts.n);
      dims_opts.n = n;
      return cmd_dims(dims_opts, lambda);
    }
    if (decomp_cmd->parsed()) return cmd_decomp(decomp_opts);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, max_n);
  } catch (const blob::BlobError& e) {
    std::cerr << e.what() << "\n";
    return blob::is_user_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
