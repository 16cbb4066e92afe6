#include "segal/constructions.hpp"
#include "segal/group.hpp"
#include "segal/hall.hpp"
#include "segal/io.hpp"
#include "segal/operadic.hpp"
#include "segal/pentagon.hpp"
#include "segal/segal_check.hpp"
#include "segal/sset.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace segal;

long long global_cap() {
  if (const char* e = std::getenv("SEGAL_MAX_SIMPLICES")) return std::atoll(e);
  return kDefaultSizeCap;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (auto& p : split(s, ',')) out.push_back(std::stoi(p));
  return out;
}

void emit(const std::string& out_path, const std::string& data) {
  if (out_path.empty())
    std::cout << data;
  else
    write_file(out_path, data);
}

// E G: level n = G^{n+1}, the nerve of the codiscrete groupoid on the
// elements of G; the free translation action quotients to the classifying
// space of G.
SSet total_space(const GroupTable& G, int N, long long cap,
                 std::vector<std::vector<std::vector<int>>>& act) {
  SSet X;
  X.truncation = N;
  const int k = G.order();
  long long total = 0, sz = 1;
  std::vector<long long> level_size;
  for (int n = 0; n <= N; ++n) {
    sz *= k;
    total += sz;
    level_size.push_back(sz);
    if (total > cap) throw SizeCapExceeded("total space exceeds the size cap");
  }
  act.assign(k, std::vector<std::vector<int>>(N + 1));
  X.ids.resize(N + 1);
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    std::vector<int> t(n + 1, 0);
    // index of a tuple is its odometer rank, last coordinate fastest
    auto rank = [&](const std::vector<int>& u) {
      long long r = 0;
      for (int x : u) r = r * k + x;
      return static_cast<int>(r);
    };
    for (int g = 0; g < k; ++g) act[g][n].resize(level_size[n]);
    while (true) {
      std::string nm;
      for (int x : t) nm += (nm.empty() ? "" : "|") + G.names[x];
      X.ids[n].push_back(nm);
      int e = rank(t);
      for (int g = 0; g < k; ++g) {
        std::vector<int> gt(t);
        for (int& x : gt) x = G.mul[g][x];
        act[g][n][e] = rank(gt);
      }
      if (n >= 1) {
        if (X.face[n].empty()) X.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u(t);
          u.erase(u.begin() + i);
          X.face[n][i].push_back(rank(u));
        }
      }
      if (n < N) {
        if (X.degen[n].empty()) X.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u(t);
          u.insert(u.begin() + i, t[i]);
          long long r = 0;
          for (int x : u) r = r * k + x;
          X.degen[n][i].push_back(static_cast<int>(r));
        }
      }
      int p = n;
      while (p >= 0 && t[p] == k - 1) t[p--] = 0;
      if (p < 0) break;
      ++t[p];
    }
  }
  auto rep = validate(X);
  if (!rep.empty()) throw std::runtime_error("total space invalid: " + rep.front());
  return X;
}

json algebra_json(const AlgebraTable& T) {
  json j;
  j["basis"] = T.basis;
  json unit = json::array();
  for (auto& u : T.unit) unit.push_back(to_string(u));
  j["unit"] = unit;
  json entries = json::array();
  for (auto& [key, val] : T.c) {
    if (val == 0) continue;
    json e;
    e["left"] = T.basis[key[0]];
    e["right"] = T.basis[key[1]];
    e["result"] = T.basis[key[2]];
    e["coefficient"] = to_string(val);
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

struct BuildArgs {
  std::string kind, output, group, edges, vertices, side = "left", input, input2;
  std::string endo;
  int levels = 4, n = 2, chain = 0, random_monoid = 0, random_poset = 0;
  int carrier = 0, index = 0, w = -1;
  unsigned seed = 1;
  long long cap = 0;
};

int run_build(const BuildArgs& a) {
  long long cap = a.cap > 0 ? a.cap : global_cap();
  SSet X;
  if (a.kind == "simplex") {
    X = standard_simplex(a.n, a.levels);
  } else if (a.kind == "nerve") {
    FiniteCategory C;
    if (!a.group.empty())
      C = category_of_group(group_by_name(a.group));
    else if (a.chain > 0) {
      std::vector<std::string> names;
      std::vector<std::vector<char>> leq(a.chain, std::vector<char>(a.chain));
      for (int i = 0; i < a.chain; ++i) {
        names.push_back(std::to_string(i));
        for (int j = i; j < a.chain; ++j) leq[i][j] = 1;
      }
      C = poset_category(names, leq);
    } else if (a.random_monoid > 0) {
      C = category_of_monoid(random_monoid(a.random_monoid, 64, a.seed));
    } else {
      throw std::runtime_error("nerve needs --group, --chain or --random-monoid");
    }
    X = nerve(C, a.levels, cap);
  } else if (a.kind == "cyclic-nerve") {
    if (!a.group.empty()) {
      auto C = category_of_group(group_by_name(a.group));
      X = twisted_cyclic_nerve(C, identity_endofunctor(C), a.levels, cap);
    } else if (a.chain > 0) {
      auto P = chain_zporder(a.chain, a.endo.empty()
                                          ? std::vector<int>(a.chain, a.chain - 1)
                                          : int_list(a.endo));
      auto C = poset_category(P);
      X = twisted_cyclic_nerve(C, poset_endofunctor(P, C), a.levels, cap);
    } else {
      throw std::runtime_error("cyclic-nerve needs --group or --chain");
    }
  } else if (a.kind == "building") {
    ZPlusOrderedPoset P;
    if (a.chain > 0)
      P = chain_zporder(a.chain, a.endo.empty()
                                     ? std::vector<int>(a.chain, a.chain - 1)
                                     : int_list(a.endo));
    else if (a.random_poset > 0)
      P = random_zporder(a.random_poset, a.seed);
    else
      throw std::runtime_error("building needs --chain or --random-poset");
    X = building(P, a.levels, cap);
  } else if (a.kind == "graph") {
    std::vector<GraphEdge> edges;
    for (auto& e : split(a.edges, ',')) {
      auto parts = split(e, ':');
      if (parts.size() != 3)
        throw std::runtime_error("edge format is name:src:tgt");
      edges.push_back({parts[0], parts[1], parts[2]});
    }
    X = oriented_graph(split(a.vertices, ','), edges, a.levels);
  } else if (a.kind == "suspension") {
    SSet Y = read_sset(a.input);
    X = a.side == "right" ? suspension_right(Y) : suspension_left(Y);
  } else if (a.kind == "product") {
    X = product(read_sset(a.input), read_sset(a.input2));
  } else if (a.kind == "quotient") {
    auto G = group_by_name(a.group);
    std::vector<std::vector<std::vector<int>>> act;
    SSet E = total_space(G, a.levels, cap, act);
    X = quotient_by_free_action(E, G, act);
  } else if (a.kind == "pentagon-nerve") {
    PentagonSolution sol;
    if (!a.group.empty())
      sol = group_solution(group_by_name(a.group));
    else if (a.carrier > 0) {
      auto sols = enumerate_solutions(a.carrier, true);
      if (a.index < 0 || a.index >= static_cast<int>(sols.size()))
        throw std::runtime_error("solution index out of range (have " +
                                 std::to_string(sols.size()) + ")");
      sol = sols[a.index];
    } else {
      throw std::runtime_error("pentagon-nerve needs --group or --carrier");
    }
    X = nerve_of_solution(sol, a.levels, cap);
  } else {
    throw std::runtime_error("unknown build kind: " + a.kind);
  }
  emit(a.output, sset_to_json(X).dump(1) + "\n");
  return 0;
}

struct CheckArgs {
  std::string file, property = "2segal", strategy = "all", output;
  int up_to = 3;
};

int run_check(const CheckArgs& a) {
  SSet X = read_sset(a.file);
  if (a.property == "crosscheck") {
    auto rep = path_criterion_crosscheck(X, a.up_to);
    emit(a.output, report_to_json(rep).dump(1) + "\n");
    return rep.consistent && rep.two_segal.holds ? 0 : 1;
  }
  SegalVerdict v;
  if (a.property == "1segal")
    v = is_1segal(X, a.up_to);
  else if (a.property == "2segal")
    v = is_2segal(X, a.up_to,
                  a.strategy == "boundary" ? TwoSegalStrategy::boundary_pairs
                                           : TwoSegalStrategy::all_triangulations);
  else if (a.property == "unital")
    v = is_unital(X, a.up_to);
  else if (a.property == "invertible") {
    auto D = extract_cooperad(X);
    auto iv = check_invertibility(D, a.up_to);
    json j;
    j["property"] = "invertible";
    j["up_to"] = a.up_to;
    j["holds"] = iv.holds;
    if (!iv.holds) j["witness"] = iv.witness;
    emit(a.output, j.dump(1) + "\n");
    return iv.holds ? 0 : 1;
  } else {
    throw std::runtime_error("unknown property: " + a.property);
  }
  emit(a.output, verdict_to_json(v).dump(1) + "\n");
  return v.holds ? 0 : 1;
}

struct AlgebraArgs {
  std::string kind, input, group, subgroup, oracle = "pointed", format = "json";
  std::string output;
  int w = 0, q = 2, bound = 6;
};

int run_algebra(const AlgebraArgs& a) {
  AlgebraTable T;
  std::string note;
  if (a.kind == "hall") {
    T = hall_category(read_sset(a.input)).table();
  } else if (a.kind == "factorization") {
    T = factorization_algebra(monoid_of_group(group_by_name(a.group)), a.w);
  } else if (a.kind == "hecke") {
    auto G = group_by_name(a.group);
    auto K = generated_subgroup(G, int_list(a.subgroup));
    T = hecke_algebra(G, K).convolution;
  } else if (a.kind == "oracle-hall") {
    FinitaryHallOracle O = a.oracle == "fq"
                               ? oracle_fq_vector_spaces(a.q, std::min(a.bound, 4))
                               : oracle_pointed_sets(std::min(a.bound, 12));
    auto R = hall_from_oracle(O, a.bound);
    T = R.table;
    note = R.note;
  } else {
    throw std::runtime_error("unknown algebra kind: " + a.kind);
  }
  if (a.format == "csv") {
    emit(a.output, algebra_to_csv(T));
  } else {
    json j = algebra_json(T);
    if (!note.empty()) j["note"] = note;
    emit(a.output, j.dump(1) + "\n");
  }
  return 0;
}

int dispatch(const std::vector<std::string>& args);

int run_manifest(const std::string& path) {
  json m = json::parse(read_file(path));
  const json& jobs = m.contains("jobs") ? m["jobs"] : m;
  if (!jobs.is_array()) throw std::runtime_error("manifest must hold a job array");
  for (const auto& job : jobs) {
    std::vector<std::string> argv;
    for (const auto& s : job["command"]) argv.push_back(s.get<std::string>());
    int rc = dispatch(argv);
    if (rc != 0) return rc;
  }
  return 0;
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"2-Segal simplicial set toolkit"};
  app.require_subcommand(1);

  BuildArgs b;
  auto* build = app.add_subcommand("build", "construct a simplicial set");
  build->add_option("kind", b.kind,
                    "nerve|cyclic-nerve|building|graph|suspension|product|"
                    "quotient|pentagon-nerve|simplex")
      ->required();
  build->add_option("-o,--output", b.output, "output file (default stdout)");
  build->add_option("--levels", b.levels, "truncation level");
  build->add_option("--n", b.n, "simplex dimension");
  build->add_option("--group", b.group, "group name (nerve/quotient/pentagon)");
  build->add_option("--chain", b.chain, "chain poset size");
  build->add_option("--endo", b.endo, "endomap as comma list");
  build->add_option("--random-monoid", b.random_monoid, "random monoid carrier size");
  build->add_option("--random-poset", b.random_poset, "random poset size");
  build->add_option("--seed", b.seed, "seed for random inputs");
  build->add_option("--vertices", b.vertices, "graph vertices, comma separated");
  build->add_option("--edges", b.edges, "graph edges name:src:tgt, comma separated");
  build->add_option("--input", b.input, "input file (suspension/product)");
  build->add_option("--input2", b.input2, "second input file (product)");
  build->add_option("--side", b.side, "suspension side: left|right");
  build->add_option("--carrier", b.carrier, "pentagon carrier size");
  build->add_option("--index", b.index, "pentagon solution index");
  build->add_option("--max-simplices", b.cap, "size cap override");

  CheckArgs c;
  auto* check = app.add_subcommand("check", "check a Segal property");
  check->add_option("file", c.file, "simplicial set JSON")->required();
  check->add_option("--property", c.property, "1segal|2segal|unital|crosscheck|invertible");
  check->add_option("--up-to", c.up_to, "highest level checked");
  check->add_option("--strategy", c.strategy, "all|boundary");
  check->add_option("-o,--output", c.output, "verdict file (default stdout)");

  AlgebraArgs g;
  auto* alg = app.add_subcommand("algebra", "compute an algebra table");
  alg->add_option("kind", g.kind, "hall|factorization|hecke|oracle-hall")->required();
  alg->add_option("--input", g.input, "simplicial set JSON (hall)");
  alg->add_option("--group", g.group, "group name");
  alg->add_option("--subgroup", g.subgroup, "subgroup generators, element indices");
  alg->add_option("--w", g.w, "factorized element index");
  alg->add_option("--oracle", g.oracle, "pointed|fq");
  alg->add_option("--q", g.q, "field size");
  alg->add_option("--bound", g.bound, "grading bound");
  alg->add_option("--format", g.format, "json|csv");
  alg->add_option("-o,--output", g.output, "output file (default stdout)");

  std::string manifest_path;
  auto* man = app.add_subcommand("run-manifest", "run a batch of jobs");
  man->add_option("file", manifest_path, "manifest JSON")->required();

  try {
    // CLI11 consumes arguments in reverse order
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (build->parsed()) return run_build(b);
  if (check->parsed()) return run_check(c);
  if (alg->parsed()) return run_algebra(g);
  if (man->parsed()) return run_manifest(manifest_path);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return dispatch(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
