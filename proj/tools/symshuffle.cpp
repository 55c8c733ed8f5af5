// symshuffle: verification suites, tables, exact distributions, series and samples.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "symshuffle/cycle_index.hpp"
#include "symshuffle/errors.hpp"
#include "symshuffle/io.hpp"
#include "symshuffle/verify.hpp"

using namespace symshuffle;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::string model = "riffle";
  std::string q, y, alpha, beta, gamma = "0", mu;
  int n = 4;
  int k = 2;
  int order = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  bool reversed = false;
  std::string format = "csv";
  std::string out;
  std::string suite = "all";
  std::string table = "fixed-points";
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
  return v;
}

ShuffleSpec build_spec(const RunConfig& c) {
  if (c.model == "riffle") return ShuffleSpec::riffle(c.k, c.reversed);
  if (c.model == "biased-riffle") return ShuffleSpec::biased_riffle(parse_rational_list(c.q), c.reversed);
  if (c.model == "typeC") return ShuffleSpec::type_c(parse_rational_list(c.y), c.reversed);
  if (c.model == "abg") {
    return ShuffleSpec::abg(
        ParamVector{parse_rational_list(c.alpha), parse_rational_list(c.beta), parse_rational(c.gamma)}, c.reversed);
  }
  if (c.model == "mu") return ShuffleSpec::mu(parse_int_list(c.mu), c.reversed);
  if (c.model == "top-to-random") return ShuffleSpec::top_to_random(c.k, c.reversed);
  throw std::invalid_argument("unknown model: " + c.model);
}

// ---- output -----------------------------------------------------------------

std::ostream* open_output(const RunConfig& c, std::ofstream& file) {
  if (c.out.empty()) return &std::cout;
  std::filesystem::path path(c.out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("SYMSHUFFLE_OUT_DIR"); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  return &file;
}

struct Table {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool all_match = true;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write_table(const Table& t, const ShuffleSpec& spec, const RunConfig& c, std::ostream& os) {
  if (c.format == "json") {
    Json j;
    j["table"] = t.kind;
    j["spec"] = spec_to_json(spec);
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    os << j.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
}

std::string fmt_double(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string match_cell(Table& t, const Rational& a, const Rational& b) {
  const bool ok = a == b;
  t.all_match = t.all_match && ok;
  return ok ? "true" : "false";
}

bool enumerable(const ShuffleSpec& spec, int n) {
  if (std::holds_alternative<MuShuffle>(spec.model) || std::holds_alternative<TopToRandom>(spec.model)) return n <= 8;
  return std::pow(static_cast<double>(model_alphabet(spec).size()), n) <= kMaxEnumeratedWords;
}

template <class Key, class F>
std::map<Key, double> empirical(const ShuffleSpec& spec, int n, const RunConfig& c, F key_of) {
  std::map<Key, double> freq;
  const auto draws = sample(spec, n, c.seed, c.samples);
  for (const auto& w : draws) freq[key_of(w)] += 1.0 / static_cast<double>(draws.size());
  return freq;
}

Partition rsk_shape(const Permutation& w) { return rsk(w).Q.shape(); }

// ---- tables -----------------------------------------------------------------

Table fixed_points_table(const ShuffleSpec& spec, const RunConfig& c) {
  Table t{"fixed-points", {"n", "closed_form", "cycle_index", "enumerated", "exact_match"}, {}, true};
  for (int n = 1; n <= c.n; ++n) {
    const Rational closed = expected_fixed_points(spec, n);
    const Rational index = expected_fixed_points_from_index(spec, n);
    std::string enumerated = "NA";
    std::string match = match_cell(t, closed, index);
    if (enumerable(spec, n) && n <= 8) {
      Rational e = 0;
      const PermDistribution d = exact_distribution(spec, n);
      for (const auto& [w, p] : d.weights()) e += p * w.fixed_points();
      enumerated = to_string(e);
      match = (match == "true" && match_cell(t, closed, e) == "true") ? "true" : "false";
    }
    t.rows.push_back({std::to_string(n), to_string(closed), to_string(index), enumerated, match});
  }
  return t;
}

Table cycle_type_table(const ShuffleSpec& spec, const RunConfig& c) {
  Table t{"cycle-type", {"lambda", "cycle_index", "enumerated", "exact_match"}, {}, true};
  if (c.samples > 0) t.columns.push_back("monte_carlo");
  const auto index = cycle_index(spec, c.n);
  const auto mass =
      exact_distribution(spec, c.n).marginal<Partition>([](const Permutation& w) { return w.cycle_type(); });
  std::map<Partition, double> mc;
  if (c.samples > 0) mc = empirical<Partition>(spec, c.n, c, [](const Permutation& w) { return w.cycle_type(); });
  for (const auto& lam : enumerate_partitions(c.n)) {
    const Rational a = index.coefficient(c.n, cycle_monomial(lam));
    const Rational b = mass.count(lam) ? mass.at(lam) : Rational(0);
    std::vector<std::string> row{lam.to_string(), to_string(a), to_string(b), match_cell(t, a, b)};
    if (c.samples > 0) row.push_back(fmt_double(mc.count(lam) ? mc[lam] : 0.0));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table shape_table(const ShuffleSpec& spec, const RunConfig& c) {
  Table t{"shape", {"k", "lambda", "closed_form", "enumerated", "exact_match"}, {}, true};
  const bool ttr = std::holds_alternative<TopToRandom>(spec.model);
  const int k_max = ttr ? c.k : 1;
  PermDistribution acc = PermDistribution::point_mass(Permutation::identity(c.n));
  const PermDistribution step = ttr ? exact_distribution(ShuffleSpec::top_to_random(1, false), c.n) : acc;
  for (int k = 1; k <= k_max; ++k) {
    ShuffleSpec s = spec;
    PermDistribution d(c.n);
    if (ttr) {
      // Closed form against the k-fold convolution of single moves.
      s = ShuffleSpec::top_to_random(k, spec.reversed);
      acc = convolve(acc, step);
      d = spec.reversed ? acc.reversed() : acc;
    } else {
      d = exact_distribution(s, c.n);
    }
    const auto mass = d.marginal<Partition>(rsk_shape);
    for (const auto& lam : enumerate_partitions(c.n)) {
      const Rational a = rsk_shape_prob(s, c.n, lam);
      const Rational b = mass.count(lam) ? mass.at(lam) : Rational(0);
      t.rows.push_back({ttr ? std::to_string(k) : "1", lam.to_string(), to_string(a), to_string(b), match_cell(t, a, b)});
    }
  }
  return t;
}

ParamVector as_params(const ShuffleSpec& spec) {
  if (const auto* m = std::get_if<AbgShuffle>(&spec.model)) return spec.reversed ? m->params.swapped() : m->params;
  if (const auto* m = std::get_if<BiasedRiffle>(&spec.model)) {
    return spec.reversed ? ParamVector{{}, m->q, 0} : ParamVector{m->q, {}, 0};
  }
  throw Unsupported("separation bound needs an abg or biased riffle spec");
}

Table separation_table(const ShuffleSpec& spec, const RunConfig& c) {
  Table t{"separation", {"k", "separation", "bound", "bound_holds"}, {}, true};
  const ParamVector p = as_params(spec);
  const PermDistribution step = exact_distribution(spec, c.n);
  PermDistribution acc = step;
  for (int k = 1; k <= c.k; ++k) {
    if (k > 1) acc = convolve(acc, step);
    const Rational sep = separation_distance(acc);
    const Rational bound = mybound(p, k, c.n);
    const bool ok = sep <= bound;
    t.all_match = t.all_match && ok;
    t.rows.push_back({std::to_string(k), to_string(sep), to_string(bound), ok ? "true" : "false"});
  }
  return t;
}

Table unimodal_table(const RunConfig& c) {
  Table t{"unimodal", {"n", "monomial", "product_formula", "enumerated", "exact_match"}, {}, true};
  const int N = std::min(c.n, kMaxUnimodalOrder);
  const auto gf = unimodal_gf(N);
  const auto en = unimodal_enumerated(N);
  auto name = [](int v) { return v == 0 ? std::string("t") : "x" + std::to_string(v); };
  for (int n = 1; n <= N; ++n) {
    std::set<Monomial> keys;
    for (const auto& [m, coeff] : gf[n].terms()) keys.insert(m);
    for (const auto& [m, coeff] : en[n].terms()) keys.insert(m);
    for (const auto& m : keys) {
      const Rational a = gf[n].coefficient(m), b = en[n].coefficient(m);
      t.rows.push_back({std::to_string(n), Poly::monomial(m, 1).to_string(name), to_string(a), to_string(b),
                        match_cell(t, a, b)});
    }
  }
  return t;
}

// ---- commands ------------------------------------------------------------------

int run_verify(const RunConfig& c) {
  VerifyOptions opt;
  opt.n = c.n;
  opt.seed = c.seed;
  if (c.samples > 0) opt.samples = c.samples;
  const auto results = run_suite(parse_suite(c.suite), opt);
  std::ofstream file;
  *open_output(c, file) << format_report(results);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
  return ok ? kExitPass : kExitFail;
}

int run_table(const RunConfig& c) {
  Table t;
  ShuffleSpec spec = ShuffleSpec::riffle(2);
  if (c.table == "unimodal") {
    t = unimodal_table(c);
  } else {
    spec = build_spec(c);
    if (c.table == "fixed-points") t = fixed_points_table(spec, c);
    else if (c.table == "cycle-type") t = cycle_type_table(spec, c);
    else if (c.table == "shape") t = shape_table(spec, c);
    else if (c.table == "separation") t = separation_table(spec, c);
    else throw std::invalid_argument("unknown table kind: " + c.table);
  }
  std::ofstream file;
  write_table(t, spec, c, *open_output(c, file));
  return t.all_match ? kExitPass : kExitFail;
}

int run_distribution(const RunConfig& c) {
  const auto spec = build_spec(c);
  std::ofstream file;
  *open_output(c, file) << distribution_to_json(exact_distribution(spec, c.n), spec).dump(2) << "\n";
  return kExitPass;
}

int run_series(const RunConfig& c) {
  const auto spec = build_spec(c);
  Json j = series_to_json(cycle_index(spec, c.order));
  j["spec"] = spec_to_json(spec);
  std::ofstream file;
  *open_output(c, file) << j.dump(2) << "\n";
  return kExitPass;
}

int run_sample(const RunConfig& c) {
  const auto spec = build_spec(c);
  const auto draws = sample(spec, c.n, c.seed, c.samples == 0 ? 1 : c.samples);
  std::ofstream file;
  std::ostream& os = *open_output(c, file);
  if (c.format == "json") {
    Json j;
    j["n"] = c.n;
    j["seed"] = c.seed;
    j["spec"] = spec_to_json(spec);
    Json arr = Json::array();
    for (const auto& w : draws) arr.push_back(w.to_string());
    j["samples"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else {
    os << "sample\n";
    for (const auto& w : draws) os << w.to_string() << "\n";
  }
  return kExitPass;
}

void add_model_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--model", c.model, "riffle | biased-riffle | typeC | abg | mu | top-to-random")
      ->check(CLI::IsMember({"riffle", "biased-riffle", "typeC", "abg", "mu", "top-to-random"}));
  cmd->add_option("--q", c.q, "biased riffle weights, e.g. 1/2,1/2");
  cmd->add_option("--y", c.y, "typeC weights");
  cmd->add_option("--alpha", c.alpha, "abg alpha weights");
  cmd->add_option("--beta", c.beta, "abg beta weights");
  cmd->add_option("--gamma", c.gamma, "abg gamma");
  cmd->add_option("--mu", c.mu, "mu composition, e.g. 1,2");
  cmd->add_option("--k", c.k, "riffle piles; top-to-random moves; max iterations for shape/separation tables");
  cmd->add_flag("--reversed", c.reversed, "deal from the bottom afterwards");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shuffle distributions, cycle indices and RSK shape laws"};
  app.require_subcommand(1);
  RunConfig c;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", c.suite, "identities | rsk | shuffles | cycle-index | all")
      ->check(CLI::IsMember({"identities", "rsk", "shuffles", "cycle-index", "all"}));

  auto* table = app.add_subcommand("table", "closed form vs enumeration table");
  table->add_option("--kind", c.table, "fixed-points | cycle-type | shape | separation | unimodal")
      ->check(CLI::IsMember({"fixed-points", "cycle-type", "shape", "separation", "unimodal"}));

  auto* dist = app.add_subcommand("distribution", "exact distribution as JSON");
  auto* series = app.add_subcommand("series", "cycle index as JSON");
  auto* samp = app.add_subcommand("sample", "draw seeded samples");

  for (auto* cmd : {verify, table, dist, series, samp}) {
    cmd->add_option("--n", c.n, "deck size (largest deck size for tables and suites)")->check(CLI::Range(0, 64));
    cmd->add_option("--seed", c.seed, "sampler seed");
    cmd->add_option("--samples", c.samples, "Monte Carlo sample count");
    cmd->add_option("--out", c.out, "output file (relative paths go under $SYMSHUFFLE_OUT_DIR)");
  }
  for (auto* cmd : {table, dist, series, samp}) {
    add_model_flags(cmd, c);
    cmd->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  }
  series->add_option("--order", c.order, "truncation order N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*verify) return run_verify(c);
    if (*table) return run_table(c);
    if (*dist) return run_distribution(c);
    if (*series) return run_series(c);
    return run_sample(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
