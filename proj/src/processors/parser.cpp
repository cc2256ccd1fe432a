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

#include "lsk/processors/parser.hpp"

#include <algorithm>

#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"
#include "lsk/processors/features.hpp"

namespace lsk::processors {

std::string Transition::name() const {
  switch (kind) {
    case kShift: return "SH";
    case kLeftArc: return "LA:" + label;
    case kRightArc: return "RA:" + label;
  }
  return "SH";
}

Transition Transition::from_name(std::string_view name) {
  if (name == "SH") return {kShift, ""};
  if (name.size() >= 3 && name[2] == ':') {
    if (name.starts_with("LA")) return {kLeftArc, std::string(name.substr(3))};
    if (name.starts_with("RA")) return {kRightArc, std::string(name.substr(3))};
  }
  throw Error(Errc::kModelFormat, "bad transition '" + std::string(name) + "'");
}

ParserState::ParserState(std::size_t n)
    : n_(n), stack_{0}, heads_(n, n + 1), labels_(n), deps_(n + 1) {}

bool ParserState::legal(const Transition& t) const {
  switch (t.kind) {
    case Transition::kShift: return can_shift();
    case Transition::kLeftArc: return can_left_arc();
    case Transition::kRightArc: return can_right_arc();
  }
  return false;
}

void ParserState::attach(std::size_t head, std::size_t dep, std::string label) {
  heads_[dep - 1] = head;
  labels_[dep - 1] = std::move(label);
  auto& d = deps_[head];
  d.insert(std::upper_bound(d.begin(), d.end(), dep), dep);
}

void ParserState::apply(const Transition& t) {
  if (!legal(t)) throw Error(Errc::kInvalidArgument, "illegal transition " + t.name());
  switch (t.kind) {
    case Transition::kShift:
      stack_.push_back(next_++);
      break;
    case Transition::kLeftArc: {
      const auto s0 = stack_.back();
      const auto s1 = stack_[stack_.size() - 2];
      attach(s0, s1, t.label);
      stack_.erase(stack_.end() - 2);
      break;
    }
    case Transition::kRightArc: {
      const auto s0 = stack_.back();
      const auto s1 = stack_[stack_.size() - 2];
      attach(s1, s0, t.label);
      stack_.pop_back();
      break;
    }
  }
}

long ParserState::stack(std::size_t k) const {
  if (k >= stack_.size()) return -1;
  return static_cast<long>(stack_[stack_.size() - 1 - k]);
}

long ParserState::buffer(std::size_t k) const {
  const auto i = next_ + k;
  return i <= n_ ? static_cast<long>(i) : -1;
}

long ParserState::leftmost_dependent(std::size_t head) const {
  const auto& d = deps_[head];
  return d.empty() ? -1 : static_cast<long>(d.front());
}

long ParserState::rightmost_dependent(std::size_t head) const {
  const auto& d = deps_[head];
  return d.empty() ? -1 : static_cast<long>(d.back());
}

namespace {

// Whether `ancestor` dominates `node` (reflexively).
bool dominates(const std::vector<std::size_t>& heads, std::size_t ancestor, std::size_t node) {
  for (std::size_t steps = 0; steps <= heads.size() + 1; ++steps) {
    if (node == ancestor) return true;
    if (node == 0) return false;
    node = heads[node - 1];
  }
  return false;
}

}  // namespace

void check_projective_tree(const std::vector<std::size_t>& heads) {
  const auto n = heads.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto h = heads[i - 1];
    if (h > n || h == i) {
      throw Error(Errc::kInvalidTree, "token " + std::to_string(i) + " has head " + std::to_string(h));
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (!dominates(heads, 0, i)) {
      throw Error(Errc::kInvalidTree, "token " + std::to_string(i) + " is on a cycle");
    }
  }
  for (std::size_t d = 1; d <= n; ++d) {
    const auto h = heads[d - 1];
    const auto lo = std::min(h, d);
    const auto hi = std::max(h, d);
    for (auto k = lo + 1; k < hi; ++k) {
      if (!dominates(heads, h, k)) {
        throw Error(Errc::kNonProjective, "arc " + std::to_string(h) + "->" + std::to_string(d) +
                                              " crosses token " + std::to_string(k));
      }
    }
  }
}

bool is_projective_tree(const std::vector<std::size_t>& heads) {
  try {
    check_projective_tree(heads);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Transition> parser_oracle(const std::vector<std::size_t>& heads,
                                      const std::vector<std::string>& labels) {
  check_projective_tree(heads);
  const auto n = heads.size();
  std::vector<std::size_t> pending(n + 1, 0);  // gold dependents not yet attached
  for (auto h : heads) ++pending[h];
  auto label_of = [&](std::size_t dep) { return dep - 1 < labels.size() ? labels[dep - 1] : ""; };

  ParserState state(n);
  std::vector<Transition> out;
  while (!state.terminal()) {
    Transition t{Transition::kShift, ""};
    const auto s0 = state.stack(0);
    const auto s1 = state.stack(1);
    if (s1 > 0 && heads[static_cast<std::size_t>(s1) - 1] == static_cast<std::size_t>(s0)) {
      t = {Transition::kLeftArc, label_of(static_cast<std::size_t>(s1))};
      --pending[static_cast<std::size_t>(s0)];
    } else if (s1 >= 0 && s0 > 0 &&
               heads[static_cast<std::size_t>(s0) - 1] == static_cast<std::size_t>(s1) &&
               pending[static_cast<std::size_t>(s0)] == 0) {
      t = {Transition::kRightArc, label_of(static_cast<std::size_t>(s0))};
      --pending[static_cast<std::size_t>(s1)];
    }
    state.apply(t);
    out.push_back(std::move(t));
  }
  return out;
}

learners::FeatureVector parser_features(const ParserState& state, const textpipe::Sentence& s) {
  const std::string pad(learners::kPad);
  auto word = [&](long i) {
    if (i < 0) return pad;
    if (i == 0) return std::string(kRoot);
    return utf8::casefold(s.tokens[static_cast<std::size_t>(i) - 1].wordform);
  };
  auto pos = [&](long i) {
    if (i < 0) return pad;
    if (i == 0) return std::string(kRoot);
    const auto& p = s.tokens[static_cast<std::size_t>(i) - 1].pos;
    return p ? *p : pad;
  };
  learners::FeatureVector x;
  const auto s0 = state.stack(0), s1 = state.stack(1), s2 = state.stack(2);
  const auto b0 = state.buffer(0), b1 = state.buffer(1), b2 = state.buffer(2);
  x.add("s0w", word(s0));
  x.add("s0p", pos(s0));
  x.add("s1w", word(s1));
  x.add("s1p", pos(s1));
  x.add("s2p", pos(s2));
  x.add("b0w", word(b0));
  x.add("b0p", pos(b0));
  x.add("b1w", word(b1));
  x.add("b1p", pos(b1));
  x.add("b2p", pos(b2));
  x.add("s0lp", s0 >= 0 ? pos(state.leftmost_dependent(static_cast<std::size_t>(s0))) : pad);
  x.add("s0rp", s0 >= 0 ? pos(state.rightmost_dependent(static_cast<std::size_t>(s0))) : pad);
  return x;
}

}  // namespace lsk::processors
