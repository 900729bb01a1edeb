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

#include "galelemke/gale.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

#include "galelemke/errors.h"
#include "galelemke/polytope_vertices.h"

namespace galelemke {
namespace {

void CheckEvenDimension(int m) {
  if (m < 2 || m % 2 != 0) {
    throw InvalidArgument("dimension m must be even and at least 2, got " +
                          std::to_string(m));
  }
}

int Wrap(int position, int length) {
  return ((position - 1) % length + length) % length + 1;
}

// Appends every {0, 11}-block string with `pairs` pairs and `zeros` zeros.
void Blocks(int pairs, int zeros, std::string& prefix,
            const std::function<void(const std::string&)>& emit) {
  if (pairs == 0 && zeros == 0) {
    emit(prefix);
    return;
  }
  if (zeros > 0) {
    prefix.push_back('0');
    Blocks(pairs, zeros - 1, prefix, emit);
    prefix.pop_back();
  }
  if (pairs > 0) {
    prefix += "11";
    Blocks(pairs - 1, zeros, prefix, emit);
    prefix.resize(prefix.size() - 2);
  }
}

}  // namespace

GaleString::GaleString(int length)
    : length_(length), words_((length + 63) / 64, 0) {
  if (length < 1) throw InvalidArgument("Gale string needs positive length");
}

GaleString GaleString::Origin(int m, int n) {
  GaleString s(m + n);
  for (int i = 1; i <= m; ++i) s.Set(i, true);
  return s;
}

GaleString GaleString::Parse(std::string_view text) {
  GaleString s(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '1') {
      s.Set(static_cast<int>(i) + 1, true);
    } else if (c != '0' && c != '.') {
      throw ParseError(1, i + 1, "Gale string characters are '1', '0', '.'");
    }
  }
  return s;
}

int GaleString::ones() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::string GaleString::ToString() const {
  std::string out(length_, '.');
  for (int p = 1; p <= length_; ++p) {
    if (bit(p)) out[p - 1] = '1';
  }
  return out;
}

std::string GaleString::ToBinaryString() const {
  std::string out(length_, '0');
  for (int p = 1; p <= length_; ++p) {
    if (bit(p)) out[p - 1] = '1';
  }
  return out;
}

std::vector<int> GaleString::OnePositions() const {
  std::vector<int> out;
  for (int p = 1; p <= length_; ++p) {
    if (bit(p)) out.push_back(p);
  }
  return out;
}

Basis GaleString::ZeroPositions() const {
  Basis out;
  for (int p = 1; p <= length_; ++p) {
    if (!bit(p)) out.push_back(p);
  }
  return out;
}

std::size_t GaleString::Hash() const {
  std::size_t h = std::hash<int>()(length_);
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const GaleString& a, const GaleString& b) {
  const int common = std::min(a.length_, b.length_);
  for (int p = 1; p <= common; ++p) {
    if (a.bit(p) != b.bit(p)) {
      return a.bit(p) ? std::strong_ordering::greater
                      : std::strong_ordering::less;
    }
  }
  return a.length_ <=> b.length_;
}

bool IsGaleEven(const GaleString& bits, int m) {
  CheckEvenDimension(m);
  if (bits.ones() != m) {
    throw InvalidArgument("Gale string has " + std::to_string(bits.ones()) +
                          " ones, expected " + std::to_string(m));
  }
  const int f = bits.length();
  if (m == f) return true;
  int start = 1;
  while (bits.bit(start)) ++start;
  // Walk once around the cycle from a zero, measuring runs of ones.
  int run = 0;
  for (int k = 1; k <= f; ++k) {
    if (bits.bit(Wrap(start + k, f))) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return true;
}

std::uint64_t CountGaleVertices(int m, int f) {
  CheckEvenDimension(m);
  if (f <= m) throw InvalidArgument("need f > m");
  // Strings starting with a zero or an even run, plus the wrapped ones that
  // start and end with an odd run.
  const int k = m / 2;
  const std::uint64_t a = Binomial(f - k, k);
  const std::uint64_t b = Binomial(f - k - 1, k - 1);
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a + b;
}

std::vector<GaleString> EnumerateGaleVertices(int m, int f,
                                              std::uint64_t budget) {
  const std::uint64_t count = CountGaleVertices(m, f);
  if (count > budget) {
    throw BudgetExceeded("C^" + std::to_string(m) + "_" + std::to_string(f) +
                         " has " + std::to_string(count) + " vertices");
  }
  std::vector<GaleString> out;
  out.reserve(count);
  std::string prefix;
  Blocks(m / 2, f - m, prefix,
         [&](const std::string& s) { out.push_back(GaleString::Parse(s)); });
  Blocks(m / 2 - 1, f - m, prefix, [&](const std::string& s) {
    out.push_back(GaleString::Parse("1" + s + "1"));
  });
  std::sort(out.begin(), out.end());
  return out;
}

int GalePivotInPlace(GaleString& s, int drop_position) {
  const int f = s.length();
  if (drop_position < 1 || drop_position > f || !s.bit(drop_position)) {
    throw InvalidArgument("drop position must hold a one");
  }
  s.Set(drop_position, false);
  // Dropping splits its run into a left part and a right part of total odd
  // length. The odd part is repaired on its far side; repairing at the drop
  // position would restore s.
  int left = 0;
  while (s.bit(Wrap(drop_position - left - 1, f))) ++left;
  int entered;
  if (left % 2 == 1) {
    entered = Wrap(drop_position - left - 1, f);
  } else {
    int right = 0;
    while (s.bit(Wrap(drop_position + right + 1, f))) ++right;
    entered = Wrap(drop_position + right + 1, f);
  }
  s.Set(entered, true);
  return entered;
}

GalePivotResult GalePivot(const GaleString& s, int drop_position) {
  GalePivotResult out{s, 0};
  out.entered_position = GalePivotInPlace(out.next, drop_position);
  return out;
}

LabeledGalePolytope::LabeledGalePolytope(int m, std::vector<int> labels)
    : m_(m), labels_(std::move(labels)) {
  CheckEvenDimension(m);
  if (labels_.empty()) throw InvalidArgument("label string is empty");
  for (int l : labels_) {
    if (l < 1 || l > m) {
      throw InvalidArgument("label " + std::to_string(l) + " outside 1.." +
                            std::to_string(m));
    }
  }
}

bool LabeledGalePolytope::IsCompletelyLabeled(const GaleString& s) const {
  std::vector<bool> seen(m_ + 1, false);
  int distinct = 0;
  for (int p = 1; p <= s.length(); ++p) {
    if (!s.bit(p)) continue;
    const int l = LabelAt(p);
    if (!seen[l]) {
      seen[l] = true;
      ++distinct;
    }
  }
  return distinct == m_;
}

GaleLemkeWalker::GaleLemkeWalker(const LabeledGalePolytope& polytope,
                                 int missing_label)
    : polytope_(&polytope),
      missing_(missing_label),
      current_(GaleString::Origin(polytope.m(), polytope.n())),
      holder_(polytope.m() + 1, 0),
      next_drop_(missing_label) {
  if (missing_label < 1 || missing_label > polytope.m()) {
    throw InvalidArgument("missing label must be in 1.." +
                          std::to_string(polytope.m()));
  }
  for (int i = 1; i <= polytope.m(); ++i) holder_[i] = i;
  holder_[missing_label] = 0;
}

GaleLemkeWalker::Step GaleLemkeWalker::Advance() {
  if (done_) throw SolverError("Lemke path already complete");
  const int left = next_drop_;
  const int dropped = polytope_->LabelAt(left);
  const int entered = GalePivotInPlace(current_, left);
  const int picked = polytope_->LabelAt(entered);
  ++steps_;
  if (picked == missing_) {
    done_ = true;
  } else {
    next_drop_ = holder_[picked];
    holder_[picked] = entered;
  }
  return {left, entered, dropped, picked};
}

PivotPath CombinatorialLemke(const LabeledGalePolytope& polytope,
                             int missing_label, const LemkeOptions& options) {
  GaleLemkeWalker walker(polytope, missing_label);
  PivotPath path;
  path.missing_label = missing_label;
  path.start_p = walker.current().ZeroPositions();
  std::unordered_set<GaleString, GaleStringHash> seen;
  if (options.detect_revisits) seen.insert(walker.current());
  while (!walker.done()) {
    if (walker.steps() >= options.step_cap) {
      path.endpoint = Endpoint::kTruncated;
      return path;
    }
    const GaleLemkeWalker::Step step = walker.Advance();
    if (options.detect_revisits && !seen.insert(walker.current()).second) {
      throw SolverError("Lemke path revisited " + walker.current().ToString());
    }
    if (options.record_path) {
      path.steps.push_back({Side::kP, step.dropped_label, step.picked_label,
                            walker.current().ZeroPositions()});
    }
  }
  path.endpoint = Endpoint::kEquilibrium;
  return path;
}

PathLength CombinatorialLemkeLength(const LabeledGalePolytope& polytope,
                                    int missing_label, std::uint64_t step_cap) {
  GaleLemkeWalker walker(polytope, missing_label);
  while (!walker.done()) {
    if (walker.steps() >= step_cap) return {walker.steps(), true};
    walker.Advance();
  }
  return {walker.steps(), false};
}

std::vector<GaleString> CompletelyLabeledStrings(
    const LabeledGalePolytope& polytope, std::uint64_t budget) {
  std::vector<GaleString> out;
  for (GaleString& s : EnumerateGaleVertices(polytope.m(), polytope.f(), budget)) {
    if (polytope.IsCompletelyLabeled(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace galelemke
