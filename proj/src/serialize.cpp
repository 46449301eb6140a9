#include "singlink/serialize.hpp"

#include <sstream>

#include "singlink/error.hpp"

namespace singlink::serialize {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("JSON is missing field '") + name + "'");
  return j.at(name);
}

template <typename T>
T get(const Json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("JSON field '") + name + "': " + e.what());
  }
}

Json arrow_list(const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  Json a = Json::array();
  for (auto [s, t] : arrows) a.push_back({s + 1, t + 1});
  return a;
}

std::vector<std::pair<std::size_t, std::size_t>> arrows_from(const Json& a, std::size_t vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : a) {
    const auto s = e.at(0).get<std::size_t>();
    const auto t = e.at(1).get<std::size_t>();
    if (s < 1 || t < 1 || s > vertices || t > vertices) throw InvalidInput("arrow endpoint out of range");
    out.push_back({s - 1, t - 1});
  }
  return out;
}

std::vector<std::string> equation_strings(const std::vector<exactmath::Polynomial>& eqs) {
  std::vector<std::string> out;
  for (const auto& e : eqs) out.push_back(exactmath::to_string(e));
  return out;
}

std::string dot_graph(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << "  v" << i + 1 << " [label=\"" << labels[i] << "\"];\n";
  for (auto [s, t] : arrows) out << "  v" << s + 1 << " -> v" << t + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

Json to_json(const links::BraidWord& beta) { return {{"strands", beta.strands()}, {"word", beta.letters()}}; }

links::BraidWord braid_from_json(const Json& j) {
  return links::BraidWord(get<int>(j, "strands"), get<std::vector<int>>(j, "word"));
}

Json to_json(const links::LinkInvariants& inv) {
  return {{"components", inv.components},
          {"euler_characteristic", inv.euler_characteristic},
          {"first_betti", inv.first_betti},
          {"tb", inv.tb},
          {"milnor_number", inv.milnor_number}};
}

links::LinkInvariants invariants_from_json(const Json& j) {
  return {get<int>(j, "components"), get<long>(j, "euler_characteristic"), get<long>(j, "first_betti"),
          get<long>(j, "tb"), get<long>(j, "milnor_number")};
}

Json to_json(const divides::Divide& d) {
  Json strands = Json::array();
  for (const auto& s : d.strands) {
    Json passages = Json::array();
    for (const auto& p : s.passages) passages.push_back({p.crossing, p.slot});
    strands.push_back({{"closed", s.closed}, {"passages", passages}});
  }
  Json boundary = Json::array();
  for (const auto& e : d.boundary_order) boundary.push_back({e.strand, e.end});
  return {{"crossings", d.crossings}, {"strands", strands}, {"boundary_order", boundary}};
}

divides::Divide divide_from_json(const Json& j) {
  divides::Divide d;
  try {
    d.crossings = get<int>(j, "crossings");
    for (const auto& s : field(j, "strands")) {
      divides::Strand strand;
      strand.closed = get<bool>(s, "closed");
      for (const auto& p : field(s, "passages")) strand.passages.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
      d.strands.push_back(std::move(strand));
    }
    for (const auto& e : field(j, "boundary_order")) {
      d.boundary_order.push_back({e.at(0).get<std::size_t>(), e.at(1).get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed divide JSON: ") + e.what());
  }
  divides::validate(d);
  return d;
}

Json to_json(const bricks::BrickQuiver& q) {
  std::vector<std::string> labels;
  for (const auto& b : q.bricks) labels.push_back(bricks::brick_label(b));
  return {{"kind", "brick"}, {"vertices", labels}, {"arrows", arrow_list(q.arrows)}};
}

bricks::BrickQuiver brick_quiver_from_json(const Json& j) {
  if (get<std::string>(j, "kind") != "brick") throw InvalidInput("not a brick quiver");
  bricks::BrickQuiver q;
  for (const auto& label : get<std::vector<std::string>>(j, "vertices")) {
    bricks::Brick b{};
    char c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    std::istringstream in(label);
    if (!(in >> b.row >> c1 >> c2 >> b.start >> c3 >> b.end >> c4) || c1 != ':' || c2 != '[' || c3 != ',' ||
        c4 != ']') {
      throw InvalidInput("malformed brick label '" + label + "'");
    }
    q.bricks.push_back(b);
  }
  q.arrows = arrows_from(field(j, "arrows"), q.bricks.size());
  return q;
}

std::string to_dot(const bricks::BrickQuiver& q) {
  std::vector<std::string> labels;
  for (const auto& b : q.bricks) labels.push_back(bricks::brick_label(b));
  return dot_graph("brick", labels, q.arrows);
}

namespace {

std::vector<std::string> acampo_labels(const divides::AcampoQuiver& q) {
  std::vector<std::string> labels;
  for (const auto& v : q.vertices) {
    labels.push_back((v.kind == divides::AcampoVertex::Kind::crossing ? "p" : "q") + std::to_string(v.index + 1));
  }
  return labels;
}

}  // namespace

Json to_json(const divides::AcampoQuiver& q) {
  return {{"kind", "acampo"}, {"vertices", acampo_labels(q)}, {"arrows", arrow_list(q.arrows)}};
}

std::string to_dot(const divides::AcampoQuiver& q) { return dot_graph("acampo", acampo_labels(q), q.arrows); }

Json to_json(const cluster::ExchangeMatrix& b) {
  return {{"matrix", b.entries()}, {"symmetrizer", b.symmetrizer()}};
}

cluster::ExchangeMatrix exchange_matrix_from_json(const Json& j) {
  auto m = get<cluster::IntMatrix>(j, "matrix");
  if (j.contains("symmetrizer")) return cluster::ExchangeMatrix(std::move(m), get<std::vector<int>>(j, "symmetrizer"));
  return cluster::ExchangeMatrix(std::move(m));
}

Json to_json(const augment::AugmentationSystem& sys) {
  return {{"strands", sys.strands()},
          {"word", sys.word.letters()},
          {"convention", augment::to_string(sys.convention)},
          {"variables", sys.variables()},
          {"equations", equation_strings(sys.equations)}};
}

augment::AugmentationSystem augmentation_from_json(const Json& j) {
  augment::AugmentationSystem sys;
  sys.word = links::BraidWord(get<int>(j, "strands"), get<std::vector<int>>(j, "word"));
  sys.convention = j.contains("convention") ? augment::parse_t_convention(get<std::string>(j, "convention"))
                                            : augment::TConvention::t;
  sys.ring = augment::augmentation_ring(sys.word.length());
  if (get<std::vector<std::string>>(j, "variables") != sys.ring->variables()) {
    throw InvalidInput("augmentation variables do not match the word length");
  }
  for (const auto& e : get<std::vector<std::string>>(j, "equations")) {
    sys.equations.push_back(exactmath::parse_polynomial(e, sys.ring));
  }
  const auto n = static_cast<std::size_t>(sys.word.strands());
  if (sys.equations.size() != n * n) throw InvalidInput("augmentation system needs n^2 equations");
  return sys;
}

Json to_json(const sheafmoduli::ThetaSystem& sys) {
  return {{"n", sys.n},
          {"method", sheafmoduli::to_string(sys.generator)},
          {"variables", sys.ring->variables()},
          {"equations", equation_strings(sys.equations)}};
}

sheafmoduli::ThetaSystem theta_from_json(const Json& j) {
  sheafmoduli::ThetaSystem sys;
  sys.n = get<int>(j, "n");
  if (sys.n < 2) throw InvalidInput("Theta systems need n >= 2");
  sys.generator = sheafmoduli::parse_generator(get<std::string>(j, "method"));
  sys.ring = sheafmoduli::theta_ring(sys.n);
  if (get<std::vector<std::string>>(j, "variables") != sys.ring->variables()) {
    throw InvalidInput("Theta variables do not match n");
  }
  for (const auto& e : get<std::vector<std::string>>(j, "equations")) {
    sys.equations.push_back(exactmath::parse_polynomial(e, sys.ring));
  }
  if (sys.equations.size() != static_cast<std::size_t>(sys.n)) throw InvalidInput("Theta system needs n equations");
  return sys;
}

}  // namespace singlink::serialize
