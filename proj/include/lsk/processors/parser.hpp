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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/learners/feature.hpp"
#include "lsk/textpipe/token.hpp"

namespace lsk::processors {

// Arc-standard transitions. Token indices are 1-based; 0 is the root.
struct Transition {
  enum Kind { kShift, kLeftArc, kRightArc };
  Kind kind = kShift;
  std::string label;  // empty for shift

  std::string name() const;  // "SH", "LA:label", "RA:label"
  static Transition from_name(std::string_view name);
  bool operator==(const Transition&) const = default;
};

class ParserState {
 public:
  explicit ParserState(std::size_t n);

  bool terminal() const { return next_ > n_ && stack_.size() == 1; }
  bool can_shift() const { return next_ <= n_; }
  bool can_left_arc() const { return stack_.size() >= 3; }
  bool can_right_arc() const { return stack_.size() >= 2; }
  bool legal(const Transition& t) const;
  // Throws E_INVALID_ARGUMENT on an illegal transition.
  void apply(const Transition& t);

  // Stack item k from the top (0 = top), or -1.
  long stack(std::size_t k) const;
  // Buffer item k from the front, or -1.
  long buffer(std::size_t k) const;
  long leftmost_dependent(std::size_t head) const;
  long rightmost_dependent(std::size_t head) const;

  std::size_t size() const { return n_; }
  // heads()[i] is the head of token i+1 (0 = root); unattached tokens hold
  // size()+1.
  const std::vector<std::size_t>& heads() const { return heads_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  void attach(std::size_t head, std::size_t dep, std::string label);

  std::size_t n_;
  std::vector<std::size_t> stack_;
  std::size_t next_ = 1;
  std::vector<std::size_t> heads_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> deps_;  // sorted dependents per head, 0..n
};

// Checks that heads (1-based tokens, head 0 = root) form a tree rooted at 0
// (E_INVALID_TREE) and that it is projective (E_NONPROJECTIVE).
void check_projective_tree(const std::vector<std::size_t>& heads);
bool is_projective_tree(const std::vector<std::size_t>& heads);

// Static arc-standard oracle: replaying the result reproduces the gold arcs.
std::vector<Transition> parser_oracle(const std::vector<std::size_t>& heads,
                                      const std::vector<std::string>& labels);

// parse.v1: s0w s0p s1w s1p s2p b0w b0p b1w b1p b2p s0lp s0rp.
learners::FeatureVector parser_features(const ParserState& state, const textpipe::Sentence& s);

}  // namespace lsk::processors
