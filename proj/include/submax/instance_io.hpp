// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "submax/constraints.hpp"
#include "submax/generators.hpp"
#include "submax/objectives.hpp"

namespace submax {

using Json = nlohmann::ordered_json;

// ---- Dense header-free CSV matrices (similarity and kernel inputs).

inline Eigen::MatrixXd load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("ragged matrix file: " + path);
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

inline void save_matrix_csv(const Eigen::MatrixXd& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file: " + path);
  out.precision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
}

// ---- Stream permutations: one element index per line.

inline StreamOrder load_permutation(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open permutation file: " + path);
  std::vector<Element> seq;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    seq.push_back(std::stoi(line));
  }
  if (static_cast<int>(seq.size()) != n)
    throw std::runtime_error("permutation length does not match the ground set");
  return StreamOrder::from_sequence(std::move(seq));
}

// ---- Instance JSON.

namespace detail {

inline Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Eigen::MatrixXd matrix_from_json(const Json& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.at(0).size();
  Eigen::MatrixXd m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows.at(i).size() != c) throw std::runtime_error("ragged matrix in instance JSON");
    for (std::size_t j = 0; j < c; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows.at(i).at(j).get<double>();
  }
  return m;
}

inline Eigen::MatrixXd matrix_field(const Json& obj, const std::string& inline_key,
                                        const std::string& csv_key,
                                        const std::string& base_dir) {
  if (obj.contains(inline_key)) return matrix_from_json(obj.at(inline_key));
  if (obj.contains(csv_key)) {
    std::filesystem::path p = obj.at(csv_key).get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    return load_matrix_csv(p.string());
  }
  throw std::runtime_error("instance JSON: expected '" + inline_key + "' or '" + csv_key + "'");
}

inline ElementSet element_set_from_json(const Json& arr) {
  ElementSet s;
  for (const auto& v : arr) s.insert(v.get<Element>());
  return s;
}

inline Json element_set_to_json(const ElementSet& s) {
  Json arr = Json::array();
  for (Element u : s) arr.push_back(u);
  return arr;
}

}  // namespace detail

inline std::shared_ptr<const SetFunction> load_objective(const Json& obj, int n,
                                                         const std::string& base_dir = "") {
  std::string kind = obj.at("kind").get<std::string>();
  if (kind == "modular") {
    auto weights = obj.at("weights").get<std::vector<double>>();
    if (static_cast<int>(weights.size()) != n)
      throw std::runtime_error("modular objective: weight count != ground size");
    return std::make_shared<ModularFunction>(std::move(weights));
  }
  if (kind == "coverage") {
    auto covers = obj.at("covers").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(covers.size()) != n)
      throw std::runtime_error("coverage objective: cover count != ground size");
    return std::make_shared<WeightedCoverage>(obj.at("universe_size").get<int>(),
                                              std::move(covers),
                                              obj.at("weights").get<std::vector<double>>());
  }
  if (kind == "cut") {
    Eigen::MatrixXd sim = detail::matrix_field(obj, "similarity", "similarity_csv", base_dir);
    if (sim.rows() != n) throw std::runtime_error("cut objective: matrix size != ground size");
    ElementSet relevant = obj.contains("relevant")
                              ? detail::element_set_from_json(obj.at("relevant"))
                              : ElementSet::full(n);
    return std::make_shared<RecommendationCut>(std::move(sim), std::move(relevant),
                                               obj.at("lambda").get<double>());
  }
  if (kind == "logdet" || kind == "logdet-plain") {
    Eigen::MatrixXd kernel;
    if (obj.contains("points")) {
      // Point coordinates plus a bandwidth describe a Gaussian kernel.
      auto points = obj.at("points").get<std::vector<std::vector<double>>>();
      kernel = gaussian_kernel(points, obj.at("h").get<double>());
    } else {
      kernel = detail::matrix_field(obj, "kernel", "kernel_csv", base_dir);
    }
    if (kernel.rows() != n)
      throw std::runtime_error("logdet objective: matrix size != ground size");
    std::string variant = obj.value("variant", kind == "logdet-plain" ? "plain" : "regularized");
    return std::make_shared<LogDetDPP>(std::move(kernel), obj.value("alpha", 1.0),
                                       variant == "plain" ? LogDetDPP::Variant::Plain
                                                          : LogDetDPP::Variant::Regularized);
  }
  throw std::runtime_error("instance JSON: unknown objective kind '" + kind + "'");
}

inline std::shared_ptr<const IndependenceSystem> load_constraint(const Json& obj, int n) {
  std::string kind = obj.at("kind").get<std::string>();
  if (kind == "uniform") return std::make_shared<UniformMatroid>(n, obj.at("k").get<int>());
  if (kind == "partition") {
    std::optional<ElementSet> universe;
    if (obj.contains("ground")) universe = detail::element_set_from_json(obj.at("ground"));
    return std::make_shared<PartitionMatroid>(
        n, obj.at("blocks").get<std::vector<std::vector<Element>>>(),
        obj.at("caps").get<std::vector<int>>(), std::move(universe));
  }
  if (kind == "graphic") {
    auto raw = obj.at("edges").get<std::vector<std::vector<int>>>();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
      if (e.size() != 2) throw std::runtime_error("graphic constraint: edge needs 2 endpoints");
      edges.emplace_back(e[0], e[1]);
    }
    if (static_cast<int>(edges.size()) != n)
      throw std::runtime_error("graphic constraint: edge count != ground size");
    return std::make_shared<GraphicMatroid>(obj.at("vertices").get<int>(), std::move(edges));
  }
  if (kind == "knapsack") {
    auto sizes = obj.at("sizes").get<std::vector<double>>();
    if (static_cast<int>(sizes.size()) != n)
      throw std::runtime_error("knapsack constraint: size count != ground size");
    return std::make_shared<BoundedKnapsack>(std::move(sizes), obj.at("capacity").get<double>());
  }
  if (kind == "matchoid") {
    std::vector<Matchoid::Member> members;
    for (const auto& mj : obj.at("members")) {
      ElementSet ground = detail::element_set_from_json(mj.at("ground"));
      auto matroid = load_constraint(mj, n);
      members.push_back({std::move(matroid), std::move(ground)});
    }
    return std::make_shared<Matchoid>(n, std::move(members));
  }
  throw std::runtime_error("instance JSON: unknown constraint kind '" + kind + "'");
}

inline Json save_objective(const SetFunction& f) {
  Json obj;
  obj["kind"] = f.kind();
  if (auto* m = dynamic_cast<const ModularFunction*>(&f)) {
    obj["weights"] = m->weights();
    return obj;
  }
  if (auto* cut = dynamic_cast<const RecommendationCut*>(&f)) {
    obj["similarity"] = detail::matrix_to_json(cut->similarity());
    obj["relevant"] = detail::element_set_to_json(cut->relevant());
    obj["lambda"] = cut->lambda();
    return obj;
  }
  if (auto* dpp = dynamic_cast<const LogDetDPP*>(&f)) {
    obj["kind"] = "logdet";
    obj["kernel"] = detail::matrix_to_json(dpp->kernel());
    obj["alpha"] = dpp->alpha();
    obj["variant"] = dpp->variant() == LogDetDPP::Variant::Plain ? "plain" : "regularized";
    return obj;
  }
  if (auto* cov = dynamic_cast<const WeightedCoverage*>(&f)) {
    obj["universe_size"] = cov->universe_size();
    obj["covers"] = cov->covers();
    obj["weights"] = cov->item_weights();
    return obj;
  }
  throw std::runtime_error("save_objective: unknown objective kind " + f.kind());
}

inline Json save_constraint(const IndependenceSystem& sys) {
  Json obj;
  obj["kind"] = sys.kind();
  if (auto* u = dynamic_cast<const UniformMatroid*>(&sys)) {
    obj["k"] = u->cap();
    return obj;
  }
  if (auto* p = dynamic_cast<const PartitionMatroid*>(&sys)) {
    obj["blocks"] = p->blocks();
    obj["caps"] = p->caps();
    return obj;
  }
  if (auto* g = dynamic_cast<const GraphicMatroid*>(&sys)) {
    obj["vertices"] = g->vertex_count();
    Json edges = Json::array();
    for (int e = 0; e < g->ground_size(); ++e) {
      auto [a, b] = g->edge(e);
      edges.push_back(Json::array({a, b}));
    }
    obj["edges"] = std::move(edges);
    return obj;
  }
  if (auto* k = dynamic_cast<const BoundedKnapsack*>(&sys)) {
    std::vector<double> sizes;
    for (int u = 0; u < k->ground_size(); ++u) sizes.push_back(k->size_of(u));
    obj["sizes"] = std::move(sizes);
    obj["capacity"] = k->capacity();
    return obj;
  }
  if (auto* m = dynamic_cast<const Matchoid*>(&sys)) {
    Json members = Json::array();
    for (int ell = 0; ell < m->member_count(); ++ell) {
      Json mj = save_constraint(*m->member(ell).matroid);
      mj["ground"] = detail::element_set_to_json(m->member(ell).ground);
      members.push_back(std::move(mj));
    }
    obj["members"] = std::move(members);
    return obj;
  }
  throw std::runtime_error("save_constraint: unknown constraint kind " + sys.kind());
}

// Validates the loaded pair: matching ground sizes, a non-negative empty
// value when claimed, a declared p no smaller than the constraint's own
// parameter, and (on small instances) the declared p against the measured
// extendibility.
inline Instance load_instance_json(const Json& doc, const std::string& base_dir = "") {
  Instance inst;
  int n = doc.at("ground_size").get<int>();
  inst.ground = GroundSet(n);
  inst.objective = load_objective(doc.at("objective"), n, base_dir);
  inst.constraint = load_constraint(doc.at("constraint"), n);

  const Json meta = doc.value("metadata", Json::object());
  inst.id = meta.value("id", std::string("instance"));
  inst.declared_p = meta.value("p", inst.constraint->extendibility());
  if (meta.contains("objective_class"))
    inst.objective_class = objective_class_from_string(meta.at("objective_class").get<std::string>());
  else
    inst.objective_class = classify_objective(*inst.objective);

  if (inst.declared_p < inst.constraint->extendibility())
    throw std::runtime_error("instance: declared p is below the constraint's own parameter");
  if (inst.objective->claims_nonnegative() && inst.objective->value(ElementSet{}) < 0.0)
    throw std::runtime_error("instance: objective claims non-negativity but f(empty) < 0");
  if (n <= 10 && n > 0) {
    int measured = measure_extendibility(*inst.constraint);
    if (measured > inst.declared_p)
      throw std::runtime_error("instance: measured extendibility " + std::to_string(measured) +
                               " exceeds declared p " + std::to_string(inst.declared_p));
  }
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  Json doc = Json::parse(in);
  return load_instance_json(doc, std::filesystem::path(path).parent_path().string());
}

inline Json save_instance_json(const Instance& inst) {
  Json doc;
  doc["ground_size"] = inst.size();
  doc["metadata"] = {{"id", inst.id},
                     {"p", inst.declared_p},
                     {"objective_class", to_string(inst.objective_class)}};
  doc["objective"] = save_objective(*inst.objective);
  doc["constraint"] = save_constraint(*inst.constraint);
  return doc;
}

}  // namespace submax
