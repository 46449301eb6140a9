// singlink command-line front end.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "singlink/acceptance.hpp"
#include "singlink/error.hpp"
#include "singlink/serialize.hpp"

using namespace singlink;
using serialize::Json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

enum class Format { json, dot, text };

struct Globals {
  std::string format = "json";
  unsigned threads = 1;

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "dot") return Format::dot;
    return Format::text;
  }
};

// One of --ade, --torus, --puiseux, --braid.
struct LinkInput {
  std::string ade;
  std::vector<int> torus;
  std::string puiseux;
  std::string braid;
  int strands = 0;

  void add(CLI::App* app, bool with_puiseux) {
    auto* a = app->add_option("--ade", ade, "ADE label, e.g. E6");
    auto* t = app->add_option("--torus", torus, "torus link T(a,b) as two integers")->expected(2);
    auto* b = app->add_option("--braid", braid, "braid word, e.g. \"1 1 2\"");
    app->add_option("--strands", strands, "strand count for --braid");
    a->excludes(t)->excludes(b);
    t->excludes(b);
    if (with_puiseux) {
      auto* p = app->add_option("--puiseux", puiseux, "Puiseux pairs n/m, space separated, e.g. \"3/2 7/2\"");
      p->excludes(a)->excludes(t)->excludes(b);
    }
  }

  bool given() const { return !ade.empty() || !torus.empty() || !puiseux.empty() || !braid.empty(); }

  std::string descriptor() const {
    if (!ade.empty()) return "ade " + ade;
    if (!torus.empty()) return "torus " + std::to_string(torus[0]) + " " + std::to_string(torus[1]);
    if (!puiseux.empty()) return "puiseux " + puiseux;
    return "braid " + braid;
  }

  links::BraidWord braid_word() const {
    if (!ade.empty()) return links::ade_braid(links::parse_ade_label(ade));
    if (!torus.empty()) return links::torus_braid(torus[0], torus[1]);
    if (!braid.empty() || strands > 0) {
      return links::parse_braid(braid, strands > 0 ? std::optional<int>(strands) : std::nullopt);
    }
    throw UsageError("give one of --ade, --torus or --braid");
  }
};

links::PuiseuxPairs parse_puiseux(const std::string& text) {
  links::PuiseuxPairs pairs;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) throw InvalidInput("Puiseux pair '" + token + "' must look like n/m");
    try {
      pairs.push_back({std::stol(token.substr(0, slash)), std::stol(token.substr(slash + 1))});
    } catch (const std::logic_error&) {
      throw InvalidInput("Puiseux pair '" + token + "' must look like n/m");
    }
  }
  links::validate(pairs);
  return pairs;
}

cluster::IntMatrix parse_matrix(const std::string& text) {
  try {
    return Json::parse(text).get<cluster::IntMatrix>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("matrix must be a JSON array of integer rows: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.fmt() == Format::dot) throw UsageError("DOT output is only available for quivers");
  if (g.fmt() == Format::json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string matrix_text(const cluster::ExchangeMatrix& b) {
  std::ostringstream s;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) s << (j ? " " : "") << std::setw(3) << b.at(i, j);
    s << "\n";
  }
  return s.str();
}

// Exchange matrix from --matrix, --type, or the brick quiver of a link input.
struct MatrixInput {
  std::string matrix;
  std::string type;
  LinkInput link;

  void add(CLI::App* app) {
    auto* m = app->add_option("--matrix", matrix, "exchange matrix as JSON, e.g. [[0,1],[-1,0]]");
    auto* t = app->add_option("--type", type, "Dynkin type, e.g. B3");
    m->excludes(t);
    link.add(app, false);
  }

  cluster::ExchangeMatrix get() const {
    const int given = !matrix.empty() + !type.empty() + link.given();
    if (given != 1) throw UsageError("give exactly one of --matrix, --type or a link input");
    if (!matrix.empty()) return cluster::ExchangeMatrix(parse_matrix(matrix));
    if (!type.empty()) return cluster::initial_matrix(cluster::parse_dynkin_type(type));
    return bricks::to_exchange_matrix(bricks::brick_quiver(link.braid_word()));
  }
};

std::vector<std::size_t> zero_based(const std::vector<int>& indices, std::size_t rank) {
  std::vector<std::size_t> out;
  for (int k : indices) {
    if (k < 1 || static_cast<std::size_t>(k) > rank) {
      throw InvalidInput("index " + std::to_string(k) + " out of range 1.." + std::to_string(rank));
    }
    out.push_back(static_cast<std::size_t>(k - 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity links, quivers, cluster seeds and moduli equations"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for counting loops")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  // link
  auto* link_cmd = app.add_subcommand("link", "braid and link invariants");
  LinkInput link_in;
  link_in.add(link_cmd, true);

  // quiver
  auto* quiver_cmd = app.add_subcommand("quiver", "brick or A'Campo quiver");
  LinkInput quiver_in;
  quiver_in.add(quiver_cmd, false);
  std::string quiver_kind = "brick";
  std::string divide_file;
  quiver_cmd->add_option("--kind", quiver_kind, "brick or acampo")
      ->check(CLI::IsMember({"brick", "acampo"}))
      ->capture_default_str();
  quiver_cmd->add_option("--divide", divide_file, "divide JSON file (A'Campo quiver)");

  // mutate
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate an exchange matrix (1-based indices)");
  MatrixInput mutate_in;
  mutate_in.add(mutate_cmd);
  std::vector<int> mutate_at;
  bool mutate_seed = false;
  mutate_cmd->add_option("--at", mutate_at, "mutation sequence, e.g. --at 1 2 1");
  mutate_cmd->add_flag("--cluster", mutate_seed, "also mutate the initial cluster");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "finite-type recognition");
  MatrixInput classify_in;
  classify_in.add(classify_cmd);
  std::size_t classify_cap = 100000;
  classify_cmd->add_option("--cap", classify_cap, "maximum number of matrix classes")->capture_default_str();

  // seeds
  auto* seeds_cmd = app.add_subcommand("seeds", "enumerate seeds");
  MatrixInput seeds_in;
  seeds_in.add(seeds_cmd);
  std::size_t seeds_cap = 100000;
  bool deep = false;
  bool list_variables = false;
  seeds_cmd->add_option("--cap", seeds_cap, "maximum number of seeds")->capture_default_str();
  seeds_cmd->add_flag("--deep", deep, "allow long enumerations (E7, E8)");
  seeds_cmd->add_flag("--list", list_variables, "print every cluster variable");

  // aug
  auto* aug_cmd = app.add_subcommand("aug", "augmentation-variety equations");
  LinkInput aug_in;
  aug_in.add(aug_cmd, false);
  bool append_twist = false;
  std::string t_convention = "t";
  std::uint64_t aug_q = 0;
  std::string aug_method = "brute";
  std::uint64_t aug_budget = 100'000'000;
  aug_cmd->add_flag("--append-twist", append_twist, "use the word followed by the full twist");
  aug_cmd->add_option("--t-convention", t_convention, "t or t-inverse")
      ->check(CLI::IsMember({"t", "t-inverse"}))
      ->capture_default_str();
  aug_cmd->add_option("--count-fq", aug_q, "count solutions over F_q");
  aug_cmd->add_option("--method", aug_method, "brute or dp")
      ->check(CLI::IsMember({"brute", "dp"}))
      ->capture_default_str();
  aug_cmd->add_option("--budget", aug_budget, "enumeration budget")->capture_default_str();

  // theta
  auto* theta_cmd = app.add_subcommand("theta", "Theta moduli equations");
  int theta_n = 0;
  std::string theta_method = "recursion";
  std::uint64_t theta_q = 0;
  bool positroid = false;
  std::uint64_t theta_budget = 100'000'000;
  theta_cmd->add_option("--n", theta_n, "number of vanishing cycles (>= 2)")->required();
  theta_cmd->add_option("--method", theta_method, "recursion or wedge")
      ->check(CLI::IsMember({"recursion", "wedge"}))
      ->capture_default_str();
  theta_cmd->add_option("--count-fq", theta_q, "count points over F_q");
  theta_cmd->add_flag("--positroid", positroid, "also count the positroid cell (needs --count-fq)");
  theta_cmd->add_option("--budget", theta_budget, "enumeration budget")->capture_default_str();

  // check
  auto* check_cmd = app.add_subcommand("check", "run the acceptance suite");
  acceptance::Options check_opts;
  check_cmd->add_flag("--deep", check_opts.deep, "include E7 and E8 seed counts");
  check_cmd->add_flag("--inject-fault", check_opts.inject_fault, "replace the D4 divide by a faulty one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*link_cmd) {
      Json j{{"input", link_in.descriptor()}};
      std::ostringstream text;
      std::optional<links::BraidWord> beta;
      if (!link_in.puiseux.empty()) {
        const auto pairs = parse_puiseux(link_in.puiseux);
        const auto cables = links::cable_pairs_from_puiseux(pairs);
        Json c = Json::array();
        for (const auto& p : cables) c.push_back({p.l, p.m});
        const bool algebraic = links::is_algebraic(cables);
        j["cable_pairs"] = c;
        j["algebraic"] = algebraic;
        if (!algebraic) std::cerr << "warning: cable pairs fail the algebraicity inequality\n";
        text << "cable pairs: " << c.dump() << (algebraic ? "" : " (not algebraic)") << "\n";
        if (pairs.size() == 1) beta = links::torus_braid(static_cast<int>(pairs[0].denominator),
                                                         static_cast<int>(pairs[0].numerator));
      } else {
        beta = link_in.braid_word();
      }
      if (beta) {
        const auto inv = links::braid_invariants(*beta);
        j["braid"] = serialize::to_json(*beta);
        j["invariants"] = serialize::to_json(inv);
        text << "braid: " << beta->strands() << " strands, word \"" << links::to_string(*beta) << "\"\n"
             << "components " << inv.components << ", euler characteristic " << inv.euler_characteristic
             << ", b1 " << inv.first_betti << ", tb " << inv.tb << ", mu " << inv.milnor_number << "\n";
      } else {
        j["braid"] = nullptr;
        text << "no braid: iterated cables with two or more pairs are not synthesized\n";
      }
      emit(g, j, text.str());
    } else if (*quiver_cmd) {
      if (quiver_kind == "brick") {
        if (!divide_file.empty()) throw UsageError("--divide applies to --kind acampo");
        const auto q = bricks::brick_quiver(quiver_in.braid_word());
        if (g.fmt() == Format::dot) {
          std::cout << serialize::to_dot(q);
        } else {
          std::ostringstream text;
          for (std::size_t i = 0; i < q.bricks.size(); ++i) text << i + 1 << " " << bricks::brick_label(q.bricks[i]) << "\n";
          for (auto [s, t] : q.arrows) text << s + 1 << " -> " << t + 1 << "\n";
          emit(g, serialize::to_json(q), text.str());
        }
      } else {
        divides::Divide d;
        if (!divide_file.empty()) {
          if (quiver_in.given()) throw UsageError("give either --divide or --ade");
          d = serialize::divide_from_json(Json::parse(read_file(divide_file)));
        } else if (!quiver_in.ade.empty()) {
          d = divides::divide_catalog(links::parse_ade_label(quiver_in.ade));
        } else {
          throw UsageError("the A'Campo quiver needs --ade or --divide");
        }
        const auto q = divides::acampo_quiver(d);
        if (g.fmt() == Format::dot) {
          std::cout << serialize::to_dot(q);
        } else {
          Json j = serialize::to_json(q);
          j["milnor_number"] = divides::milnor_number(d);
          j["divide"] = serialize::to_json(d);
          std::ostringstream text;
          text << "mu " << divides::milnor_number(d) << ", " << d.crossings << " crossings\n";
          for (auto [s, t] : q.arrows) text << s + 1 << " -> " << t + 1 << "\n";
          emit(g, j, text.str());
        }
      }
    } else if (*mutate_cmd) {
      const auto b0 = mutate_in.get();
      const auto seq = zero_based(mutate_at, b0.rank());
      Json j{{"initial", serialize::to_json(b0)}, {"sequence", mutate_at}};
      std::ostringstream text;
      if (mutate_seed) {
        cluster::Seed s = cluster::initial_seed(b0);
        for (auto k : seq) s = cluster::mutate_seed(s, k);
        j["result"] = serialize::to_json(s.matrix);
        Json vars = Json::array();
        for (const auto& x : s.cluster) vars.push_back(exactmath::to_string(x));
        j["cluster"] = vars;
        text << matrix_text(s.matrix);
        for (std::size_t i = 0; i < s.cluster.size(); ++i) text << "x" << i + 1 << " = " << vars[i].get<std::string>() << "\n";
      } else {
        cluster::ExchangeMatrix b = b0;
        for (auto k : seq) b = cluster::mutate(b, k);
        j["result"] = serialize::to_json(b);
        text << matrix_text(b);
      }
      emit(g, j, text.str());
    } else if (*classify_cmd) {
      const auto b = classify_in.get();
      const auto t = cluster::is_finite_type(b, classify_cap);
      Json j;
      std::string text;
      if (t) {
        const auto n = cluster::expected_seed_count(*t);
        j = {{"type", cluster::to_string(*t)}, {"seeds", Json::parse(n.str())}};
        text = cluster::to_string(*t) + " (" + n.str() + " seeds)\n";
      } else {
        j = {{"type", "infinite"}, {"seeds", nullptr}};
        text = "infinite type\n";
      }
      emit(g, j, text);
    } else if (*seeds_cmd) {
      const auto b = seeds_in.get();
      std::optional<cluster::DynkinType> type;
      if (!seeds_in.type.empty()) type = cluster::parse_dynkin_type(seeds_in.type);
      else type = cluster::is_finite_type(b, seeds_cap);
      if (!type) throw InvalidInput("infinite type: the enumeration would not terminate");
      const auto expected = cluster::expected_seed_count(*type);
      if (expected > 1000 && !deep) {
        throw UsageError(cluster::to_string(*type) + " has " + expected.str() + " seeds; pass --deep to enumerate");
      }
      const auto e = cluster::enumerate_seeds(b, seeds_cap);
      const bool match = expected == e.seeds.size();
      Json j{{"type", cluster::to_string(*type)},
             {"seeds", e.seeds.size()},
             {"expected", Json::parse(expected.str())},
             {"match", match},
             {"cluster_variables", e.variables.size()}};
      std::ostringstream text;
      text << cluster::to_string(*type) << ": " << e.seeds.size() << " seeds (expected " << expected << "), "
           << e.variables.size() << " cluster variables\n";
      if (list_variables) {
        Json vars = Json::array();
        for (const auto& x : e.variables) {
          vars.push_back(exactmath::to_string(x));
          text << vars.back().get<std::string>() << "\n";
        }
        j["variables"] = vars;
      }
      emit(g, j, text.str());
      if (!match) return 1;
    } else if (*aug_cmd) {
      links::BraidWord w = aug_in.given() ? aug_in.braid_word() : links::BraidWord(1, {});
      if (append_twist) w = links::append_full_twist(w);
      const auto sys = augment::augmentation_equations(w, augment::parse_t_convention(t_convention));
      Json j = serialize::to_json(sys);
      std::ostringstream text;
      for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        text << "(" << i / w.strands() + 1 << "," << i % w.strands() + 1 << ") "
             << exactmath::to_string(sys.equations[i]) << " = 0\n";
      }
      if (aug_q != 0) {
        augment::CountOptions opts{aug_budget, g.threads};
        const std::string count = aug_method == "dp" ? augment::count_solutions_dp(w, aug_q, opts).str()
                                                     : std::to_string(augment::count_solutions_bruteforce(sys, aug_q, opts));
        j["count"] = {{"q", aug_q}, {"method", aug_method}, {"solutions", Json::parse(count)}};
        text << "solutions over F_" << aug_q << ": " << count << "\n";
      }
      emit(g, j, text.str());
    } else if (*theta_cmd) {
      const auto gen = sheafmoduli::parse_generator(theta_method);
      const auto sys = gen == sheafmoduli::Generator::recursion ? sheafmoduli::theta_equations_recursion(theta_n)
                                                                : sheafmoduli::theta_equations_wedge(theta_n);
      Json j = serialize::to_json(sys);
      std::ostringstream text;
      for (const auto& e : sys.equations) text << exactmath::to_string(e) << " = 0\n";
      if (positroid && theta_q == 0) throw UsageError("--positroid needs --count-fq");
      if (theta_q != 0) {
        sheafmoduli::CountOptions opts{theta_budget, g.threads, sheafmoduli::CountMethod::automatic};
        const auto points = sheafmoduli::count_theta_points(sys, theta_q, opts);
        j["count"] = {{"q", theta_q}, {"points", Json::parse(points.str())}};
        text << "points over F_" << theta_q << ": " << points << "\n";
        if (positroid) {
          const auto cell = sheafmoduli::count_positroid_points(theta_n, theta_q, opts);
          const exactmath::Rational ratio = points == 0 ? exactmath::Rational(0) : exactmath::Rational(cell, points);
          j["positroid"] = {{"points", Json::parse(cell.str())}, {"ratio", ratio.str()}};
          text << "positroid points: " << cell << " (ratio " << ratio << ")\n";
        }
      }
      emit(g, j, text.str());
    } else if (*check_cmd) {
      check_opts.threads = g.threads;
      const auto results = acceptance::run_all(check_opts, g.fmt() == Format::text ? &std::cout : &std::cerr);
      const Json r = acceptance::report(results);
      if (g.fmt() == Format::json) std::cout << r.dump(2) << "\n";
      else if (g.fmt() == Format::dot) throw UsageError("DOT output is only available for quivers");
      return r["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Overflow& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
