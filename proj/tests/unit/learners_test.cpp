// Copyright 2026 The lsk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "lsk/common/error.hpp"
#include "lsk/common/rng.hpp"
#include "lsk/learners/class_tree.hpp"
#include "lsk/learners/linear_model.hpp"
#include "lsk/learners/reg_tree.hpp"

using namespace lsk;
using namespace lsk::learners;

namespace {

FeatureVector fv(std::initializer_list<std::pair<const char*, const char*>> slots) {
  FeatureVector x;
  for (auto [k, v] : slots) x.add(k, v);
  return x;
}

std::string err(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return std::string(e.id());
  }
  return "";
}

// Entropy in bits from a map of counts, straight from the definition.
double oracle_entropy(const std::map<std::string, int>& counts) {
  double n = 0;
  for (auto& [k, c] : counts) n += c;
  double h = 0;
  for (auto& [k, c] : counts) {
    if (c == 0) continue;
    const double p = c / n;
    h -= p * std::log2(p);
  }
  return h;
}

double oracle_gain_ratio(const std::vector<ClassExample>& data, const std::string& slot) {
  std::map<std::string, int> labels;
  std::map<std::string, std::map<std::string, int>> by_value;
  std::map<std::string, int> value_counts;
  for (const auto& e : data) {
    labels[e.label]++;
    by_value[*e.x.find(slot)][e.label]++;
    value_counts[*e.x.find(slot)]++;
  }
  double rem = 0;
  for (auto& [v, c] : by_value) rem += value_counts[v] * oracle_entropy(c) / data.size();
  const double split = oracle_entropy(value_counts);
  if (split <= 0) return 0;
  return (oracle_entropy(labels) - rem) / split;
}

std::vector<ClassExample> xor_data() {
  std::vector<ClassExample> d;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      d.push_back({fv({{"a", a ? "1" : "0"}, {"b", b ? "1" : "0"}}), (a ^ b) ? "T" : "F"});
    }
  }
  return d;
}

}  // namespace

TEST_CASE("single class gives a single leaf") {
  std::vector<ClassExample> d;
  for (int i = 0; i < 10; ++i) d.push_back({fv({{"w", std::to_string(i).c_str()}}), "X"});
  const auto t = ClassTree::train(d);
  CHECK(t.node_count() == 1);
  CHECK(t.predict(fv({{"w", "zzz"}})).label == "X");
}

TEST_CASE("xor needs depth two") {
  const auto d = xor_data();
  const auto t = ClassTree::train(d);
  CHECK(t.depth() == 2);
  for (const auto& e : d) CHECK(t.predict(e.x).label == e.label);
  CHECK(t.check_invariants());
}

TEST_CASE("root splits on the determining slot") {
  std::vector<ClassExample> d;
  const char* suffixes[] = {"ul", "ea", "ii", "ul", "ea", "ii", "ul", "ea"};
  const char* labels[] = {"M", "F", "P", "M", "F", "P", "M", "F"};
  const char* noise[] = {"x", "y", "x", "y", "x", "x", "y", "y"};
  const char* len[] = {"4", "4", "5", "5", "6", "4", "5", "6"};
  for (int i = 0; i < 8; ++i) {
    d.push_back({fv({{"len", len[i]}, {"noise", noise[i]}, {"suffix", suffixes[i]}}), labels[i]});
  }
  const double gr_suffix = oracle_gain_ratio(d, "suffix");
  CHECK(gr_suffix > oracle_gain_ratio(d, "len"));
  CHECK(gr_suffix > oracle_gain_ratio(d, "noise"));
  const auto t = ClassTree::train(d);
  CHECK(t.root_slot() == "suffix");
  CHECK(t.depth() == 1);
}

TEST_CASE("unseen value falls back to the node majority") {
  std::vector<ClassExample> d = {
      {fv({{"w", "a"}}), "Y"}, {fv({{"w", "b"}}), "Y"}, {fv({{"w", "c"}}), "Y"},
      {fv({{"w", "d"}}), "Z"}};
  const auto t = ClassTree::train(d);
  CHECK(t.root_slot() == "w");
  const auto p = t.predict(fv({{"w", "q"}}));
  CHECK(p.label == "Y");
  double sum = 0;
  for (auto& [c, v] : p.distribution) sum += v;
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("class tree errors") {
  CHECK(err([] { ClassTree::train({}); }) == "E_EMPTY_TRAINSET");
  std::vector<ClassExample> d = {{fv({{"a", "1"}}), "X"}, {fv({{"b", "1"}}), "Y"}};
  CHECK(err([&] { ClassTree::train(d); }) == "E_SLOT_MISMATCH");
  const auto t = ClassTree::train(xor_data());
  CHECK(err([&] { t.predict(fv({{"a", "1"}})); }) == "E_SLOT_MISSING");
}

TEST_CASE("consistent random data is fit exactly with bounded paths") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n_slots = 1 + rng.below(4);
    const auto n = 1 + rng.below(30);
    std::map<std::vector<std::string>, std::string> table;
    std::vector<ClassExample> d;
    for (std::uint64_t i = 0; i < n; ++i) {
      FeatureVector x;
      std::vector<std::string> key;
      for (std::uint64_t s = 0; s < n_slots; ++s) {
        key.push_back(std::to_string(rng.below(3)));
        x.add("s" + std::to_string(s), key.back());
      }
      auto [it, fresh] = table.emplace(key, std::string(1, static_cast<char>('A' + rng.below(3))));
      d.push_back({x, it->second});
    }
    const auto t = ClassTree::train(d);
    CHECK(t.check_invariants());
    CHECK(t.depth() <= n_slots);
    for (const auto& e : d) {
      const auto p = t.predict(e.x);
      CHECK(p.label == e.label);
      CHECK(p.visited <= t.depth());
    }
  }
}

TEST_CASE("gain ratio matches the brute-force oracle") {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 1 + rng.below(20);
    const auto n_slots = 1 + rng.below(3);
    std::vector<ClassExample> d;
    for (std::uint64_t i = 0; i < n; ++i) {
      FeatureVector x;
      for (std::uint64_t s = 0; s < n_slots; ++s) {
        x.add("s" + std::to_string(s), std::to_string(rng.below(4)));
      }
      d.push_back({x, std::to_string(rng.below(3))});
    }
    for (std::uint64_t s = 0; s < n_slots; ++s) {
      const std::string slot = "s" + std::to_string(s);
      std::map<std::string, std::uint32_t> vid, lid;
      std::vector<std::uint32_t> values, labels;
      for (const auto& e : d) {
        values.push_back(vid.emplace(*e.x.find(slot), vid.size()).first->second);
        labels.push_back(lid.emplace(e.label, lid.size()).first->second);
      }
      CHECK(detail::gain_ratio(values, labels) ==
            doctest::Approx(oracle_gain_ratio(d, slot)).epsilon(1e-12));
    }
  }
}

TEST_CASE("class tree round trip and corruption") {
  const auto t = ClassTree::train(xor_data());
  const auto bytes = t.to_bytes();
  const auto back = ClassTree::from_bytes(bytes);
  for (const auto& e : xor_data()) {
    CHECK(back.predict(e.x).label == t.predict(e.x).label);
    CHECK(back.predict(e.x).distribution == t.predict(e.x).distribution);
  }
  CHECK(back.to_bytes() == bytes);
  for (std::size_t cut = 0; cut < bytes.size(); ++cut) {
    Bytes part(bytes.begin(), bytes.begin() + static_cast<long>(cut));
    CHECK(err([&] { ClassTree::from_bytes(part); }) == "E_MODEL_FORMAT");
  }
}

namespace {

RegExample rex(std::vector<std::string> bag, std::vector<double> y) {
  return {make_bag(std::move(bag)), std::move(y), std::nullopt};
}

// Best question by exhaustive search over every token in the data.
std::string oracle_best_question(const std::vector<RegExample>& d, std::size_t min_occ) {
  std::set<std::string> tokens;
  for (const auto& e : d) tokens.insert(e.bag.begin(), e.bag.end());
  auto sse = [](const std::vector<const RegExample*>& rows) {
    if (rows.empty()) return 0.0;
    double total = 0;
    for (std::size_t k = 0; k < rows[0]->target.size(); ++k) {
      double m = 0;
      for (auto* r : rows) m += r->target[k];
      m /= rows.size();
      for (auto* r : rows) total += (r->target[k] - m) * (r->target[k] - m);
    }
    return total;
  };
  std::vector<const RegExample*> all;
  for (const auto& e : d) all.push_back(&e);
  std::string best;
  double best_gain = -1;
  for (const auto& t : tokens) {
    std::vector<const RegExample*> yes, no;
    for (auto* r : all) (bag_contains(r->bag, t) ? yes : no).push_back(r);
    if (yes.size() < min_occ || no.size() < min_occ) continue;
    const double g = sse(all) - sse(yes) - sse(no);
    if (g > best_gain + 1e-12) {
      best_gain = g;
      best = t;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("constant targets give one leaf") {
  std::vector<RegExample> d;
  for (int i = 0; i < 30; ++i) d.push_back(rex({"t" + std::to_string(i % 3)}, {2.5, -1}));
  const auto t = RegTree::train(d);
  CHECK(t.leaf_count() == 1);
  CHECK(t.leaves()[0].mean == std::vector<double>{2.5, -1});
  CHECK(t.leaves()[0].variance == std::vector<double>{0, 0});
}

TEST_CASE("two clusters split on the separating token") {
  Rng rng(8);
  std::vector<RegExample> d;
  for (int i = 0; i < 40; ++i) {
    const bool a = i % 2 == 0;
    std::vector<std::string> bag = {a ? "CP=a" : "CP=o", "N=" + std::to_string(rng.below(4))};
    d.push_back(rex(bag, {(a ? 5.0 : -5.0) + rng.uniform(-0.5, 0.5)}));
  }
  CHECK(oracle_best_question(d, 10) == "CP=a");
  const auto t = RegTree::train(d);
  CHECK(t.root_question() == "CP=a");
}

TEST_CASE("root question matches exhaustive oracle on random data") {
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RegExample> d;
    const auto n = 20 + rng.below(30);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::vector<std::string> bag;
      for (int k = 0; k < 4; ++k) {
        if (rng.below(2)) bag.push_back("f" + std::to_string(k) + "=" + std::to_string(rng.below(2)));
      }
      d.push_back(rex(bag, {rng.normal(), rng.normal()}));
    }
    RegTreeParams p;
    p.min_occupancy = 5;
    p.min_gain = 0;
    const auto t = RegTree::train(d, p);
    CHECK(t.root_question() == oracle_best_question(d, 5));
  }
}

TEST_CASE("occupancy limits splits") {
  std::vector<RegExample> d;
  for (int i = 0; i < 12; ++i) d.push_back(rex({i < 6 ? "a" : "b"}, {i < 6 ? 0.0 : 1.0}));
  const auto t = RegTree::train(d);
  CHECK(t.leaf_count() <= 2);
  RegTreeParams p;
  p.min_occupancy = 3;
  CHECK(RegTree::train(d, p).leaf_count() == 2);
}

TEST_CASE("regression loss is non-increasing with depth") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RegExample> d;
    for (int i = 0; i < 80; ++i) {
      std::vector<std::string> bag;
      for (int k = 0; k < 6; ++k) {
        if (rng.below(2)) bag.push_back("q" + std::to_string(k));
      }
      d.push_back(rex(bag, {static_cast<double>(bag.size()) + rng.normal() * 0.1}));
    }
    double prev = INFINITY;
    std::size_t prev_leaves = 0;
    for (std::size_t depth = 0; depth <= 6; ++depth) {
      RegTreeParams p;
      p.min_occupancy = 3;
      p.max_depth = depth;
      const auto t = RegTree::train(d, p);
      CHECK(t.training_loss() <= prev + 1e-9);
      CHECK(t.leaf_count() >= prev_leaves);
      prev = t.training_loss();
      prev_leaves = t.leaf_count();
      for (const auto& l : t.leaves()) {
        for (double v : l.variance) CHECK(v >= 0);
      }
    }
  }
}

TEST_CASE("voicing flag is modeled") {
  std::vector<RegExample> d;
  for (int i = 0; i < 40; ++i) {
    const bool v = i % 4 != 0;
    d.push_back({make_bag({v ? "V=1" : "V=0"}), {v ? 5.0 : 0.0}, v});
  }
  RegTreeParams p;
  p.min_occupancy = 2;
  const auto t = RegTree::train(d, p);
  CHECK(t.root_question() == "V=0");
  CHECK(t.predict(make_bag({"V=0"})).voiced_fraction == 0.0);
  CHECK(t.predict(make_bag({"V=1"})).voiced_fraction == 1.0);
  CHECK(t.predict(make_bag({"V=1"})).mean[0] == 5.0);
}

TEST_CASE("regression tree errors and round trip") {
  CHECK(err([] { RegTree::train({}); }) == "E_EMPTY_TRAINSET");
  std::vector<RegExample> bad = {rex({"a"}, {1}), rex({"b"}, {1, 2})};
  CHECK(err([&] { RegTree::train(bad); }) == "E_DIM_MISMATCH");

  const auto one = RegTree::constant({{1.5, 2.5}, {0.25, 0.5}, std::nullopt, 7});
  const auto back = RegTree::from_bytes(one.to_bytes());
  CHECK(back.leaves() == one.leaves());

  Rng rng(1);
  std::vector<RegExample> d;
  for (int i = 0; i < 60; ++i) {
    d.push_back(rex({"a" + std::to_string(rng.below(3)), "b" + std::to_string(rng.below(3))},
                    {rng.normal()}));
  }
  RegTreeParams p;
  p.min_occupancy = 4;
  const auto t = RegTree::train(d, p);
  const auto bytes = t.to_bytes();
  const auto t2 = RegTree::from_bytes(bytes);
  for (const auto& e : d) CHECK(t2.predict(e.bag) == t.predict(e.bag));
  for (std::size_t cut = 0; cut < bytes.size(); cut += 3) {
    Bytes part(bytes.begin(), bytes.begin() + static_cast<long>(cut));
    CHECK(err([&] { RegTree::from_bytes(part); }) == "E_MODEL_FORMAT");
  }
}

namespace {

// Separable by construction: the class is the index of the one "k=" token.
std::vector<LinearExample> separable(Rng& rng, int n) {
  std::vector<LinearExample> d;
  for (int i = 0; i < n; ++i) {
    const auto k = rng.below(4);
    d.push_back({{"k=" + std::to_string(k), "noise=" + std::to_string(rng.below(3))},
                 "C" + std::to_string(k)});
  }
  return d;
}

}  // namespace

TEST_CASE("perceptron fits a separable set") {
  Rng rng(3);
  const auto d = separable(rng, 20);
  const auto m = LinearModel::train(d);
  for (const auto& e : d) CHECK(m.predict(e.features) == e.label);
}

TEST_CASE("perceptron does not settle on a tie broken in favor of the gold class") {
  // Trained with ties counted as correct, the raw weights end on a tie for
  // "k=1 n0" and the averaged weights then prefer C2.
  const std::vector<LinearExample> d = {{{"k=1", "n0"}, "C1"}, {{"k=1"}, "C1"},
                                        {{"k=0"}, "C0"},       {{"k=1", "n0"}, "C1"},
                                        {{"k=2", "n0", "n2"}, "C2"}, {{"k=1", "n1", "n2"}, "C1"}};
  for (std::uint32_t epochs = 1; epochs <= 5; ++epochs) {
    LinearParams p;
    p.epochs = epochs;
    const auto m = LinearModel::train(d, p);
    for (const auto& e : d) CHECK(m.predict(e.features) == e.label);
  }
}

TEST_CASE("perceptron single example") {
  std::vector<LinearExample> d = {{{"x"}, "only"}};
  LinearParams p;
  p.epochs = 1;
  CHECK(LinearModel::train(d, p).predict(d[0].features) == "only");
  CHECK(err([] { LinearModel::train({}); }) == "E_EMPTY_TRAINSET");
}

TEST_CASE("perceptron is deterministic and round trips") {
  Rng rng(9);
  const auto d = separable(rng, 50);
  LinearParams p;
  p.seed = 77;
  const auto a = LinearModel::train(d, p).to_bytes();
  const auto b = LinearModel::train(d, p).to_bytes();
  CHECK(a == b);
  const auto m = LinearModel::from_bytes(a);
  CHECK(m.seed() == 77);
  CHECK(m.to_bytes() == a);
  const auto orig = LinearModel::train(d, p);
  for (const auto& e : d) CHECK(m.scores(e.features) == orig.scores(e.features));
  for (std::size_t cut = 0; cut < a.size(); cut += 5) {
    Bytes part(a.begin(), a.begin() + static_cast<long>(cut));
    CHECK(err([&] { LinearModel::from_bytes(part); }) == "E_MODEL_FORMAT");
  }
}

TEST_CASE("unseen feature never changes a prediction") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LinearExample> d;
    for (int i = 0; i < 30; ++i) {
      d.push_back({{"a=" + std::to_string(rng.below(5)), "b=" + std::to_string(rng.below(5))},
                   std::to_string(rng.below(3))});
    }
    const auto m = LinearModel::train(d);
    for (int q = 0; q < 20; ++q) {
      std::vector<std::string> x = {"a=" + std::to_string(rng.below(6)),
                                    "b=" + std::to_string(rng.below(6))};
      const auto before = m.predict(x);
      const auto before_scores = m.scores(x);
      x.push_back("never-seen-" + std::to_string(q));
      CHECK(m.predict(x) == before);
      CHECK(m.scores(x) == before_scores);
    }
  }
}
