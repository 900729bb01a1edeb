// Copyright 2026 The galelemke Authors.
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

#ifndef GALELEMKE_GALE_H_
#define GALELEMKE_GALE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "galelemke/lh_solver.h"
#include "galelemke/pivot_path.h"

namespace galelemke {

// Bitstring of length f, stored packed. Positions are 1-based. Bit j says
// whether a vertex of the dual cyclic polytope lies on facet j.
class GaleString {
 public:
  GaleString() = default;
  explicit GaleString(int length);

  // 1^m 0^n: the vertex mapped to the origin.
  static GaleString Origin(int m, int n);
  // Accepts '1' for one and '0' or '.' for zero.
  static GaleString Parse(std::string_view text);

  int length() const { return length_; }
  int ones() const;

  bool bit(int position) const {
    const int i = position - 1;
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void Set(int position, bool value) {
    const int i = position - 1;
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  // '1' and '.' as in printed Lemke-path diagrams.
  std::string ToString() const;
  // '1' and '0'.
  std::string ToBinaryString() const;

  std::vector<int> OnePositions() const;
  // The positions holding zeros: the basis of this vertex.
  Basis ZeroPositions() const;

  std::size_t Hash() const;

  friend bool operator==(const GaleString&, const GaleString&) = default;
  // Orders by the '0'/'1' text.
  friend std::strong_ordering operator<=>(const GaleString& a,
                                          const GaleString& b);

 private:
  int length_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GaleStringHash {
  std::size_t operator()(const GaleString& s) const { return s.Hash(); }
};

// Gale evenness for even m: every maximal run of ones bounded by zeros, read
// cyclically, has even length. Throws InvalidArgument for odd m or if the
// popcount differs from m.
bool IsGaleEven(const GaleString& bits, int m);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Number of Gale evenness strings of length f with m ones, i.e. the vertex
// count of the dual cyclic polytope.
std::uint64_t CountGaleVertices(int m, int f);

// All Gale evenness strings, ascending by '0'/'1' text. Throws BudgetExceeded
// when there would be more than `budget`.
std::vector<GaleString> EnumerateGaleVertices(
    int m, int f, std::uint64_t budget = kDefaultEnumerationBudget);

struct GalePivotResult {
  GaleString next;
  int entered_position = 0;
};

// Leaves facet `drop_position` of vertex s and returns the other endpoint of
// that edge: the unique p != drop_position such that moving the one from
// drop_position to p keeps Gale evenness. O(f), no arithmetic.
GalePivotResult GalePivot(const GaleString& s, int drop_position);

// In-place form used on long paths. Returns the entered position.
int GalePivotInPlace(GaleString& s, int drop_position);

// The dual cyclic polytope with f = m + n facets, where position i <= m has
// label i and position m + j has label labels[j-1].
class LabeledGalePolytope {
 public:
  // Throws InvalidArgument for odd or nonpositive m, empty labels or a label
  // outside 1..m.
  LabeledGalePolytope(int m, std::vector<int> labels);

  int m() const { return m_; }
  int n() const { return static_cast<int>(labels_.size()); }
  int f() const { return m_ + n(); }
  const std::vector<int>& labels() const { return labels_; }

  int LabelAt(int position) const {
    return position <= m_ ? position : labels_[position - m_ - 1];
  }

  // True if the positions of the ones carry every label 1..m.
  bool IsCompletelyLabeled(const GaleString& s) const;

 private:
  int m_;
  std::vector<int> labels_;
};

struct LemkeOptions {
  std::uint64_t step_cap = kDefaultStepCap;
  bool record_path = true;
  // Keeps every visited string in a hash set and throws SolverError on a
  // revisit. Costs memory proportional to the path length.
  bool detect_revisits = true;
};

// Resumable cursor over a Lemke path: each Advance() performs one pivot.
class GaleLemkeWalker {
 public:
  struct Step {
    int left_position;
    int entered_position;
    int dropped_label;
    int picked_label;
  };

  // Starts at 1^m 0^n with `missing_label` in 1..m.
  GaleLemkeWalker(const LabeledGalePolytope& polytope, int missing_label);

  bool done() const { return done_; }
  std::uint64_t steps() const { return steps_; }
  const GaleString& current() const { return current_; }
  int missing_label() const { return missing_; }

  // Throws SolverError if called after done().
  Step Advance();

 private:
  const LabeledGalePolytope* polytope_;
  int missing_;
  GaleString current_;
  std::vector<int> holder_;  // label -> position of the one carrying it
  int next_drop_;
  std::uint64_t steps_ = 0;
  bool done_ = false;
};

// The Lemke path from 1^m 0^n for `missing_label`. Each step drops the facet
// holding the duplicate label. endpoint is kTruncated if the cap was hit.
PivotPath CombinatorialLemke(const LabeledGalePolytope& polytope,
                             int missing_label,
                             const LemkeOptions& options = {});

struct PathLength {
  std::uint64_t length = 0;
  bool truncated = false;
};

// Counts pivots without recording anything.
PathLength CombinatorialLemkeLength(const LabeledGalePolytope& polytope,
                                    int missing_label,
                                    std::uint64_t step_cap = kDefaultStepCap);

// Every completely labeled Gale string, ascending; includes 1^m 0^n.
std::vector<GaleString> CompletelyLabeledStrings(
    const LabeledGalePolytope& polytope,
    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace galelemke

#endif  // GALELEMKE_GALE_H_
