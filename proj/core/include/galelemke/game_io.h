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

#ifndef GALELEMKE_GAME_IO_H_
#define GALELEMKE_GAME_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "galelemke/game.h"

namespace galelemke {

// ".bgame": line 1 "m n"; m lines of n rationals (A); a blank line; m lines of
// n rationals (B). Rationals are "p" or "p/q". Throws ParseError with the
// offending line and column.
BimatrixGame ParseBimatrixGame(std::string_view text);
// Writes the original (unshifted) matrices.
std::string FormatBimatrixGame(const BimatrixGame& game);

// ".uvg": line 1 "m n"; line 2 the n labels; then m lines of n rationals (B).
UnitVectorGame ParseUnitVectorGame(std::string_view text);
std::string FormatUnitVectorGame(const UnitVectorGame& game);

// Loads either format, chosen by file extension; ".uvg" files are expanded
// with ToBimatrix. Throws ParseError (line 0) when the file cannot be read.
BimatrixGame LoadGame(const std::filesystem::path& path);
UnitVectorGame LoadUnitVectorGame(const std::filesystem::path& path);
void SaveText(const std::filesystem::path& path, std::string_view text);

// "x1 ... xm ; y1 ... yn", optionally with "x=" and "y=" prefixes.
MixedProfile ParseProfile(std::string_view text);

// Label strings: digits run together when m <= 9, otherwise comma separated.
std::string FormatLabelString(const std::vector<int>& labels, int m);
std::vector<int> ParseLabelString(std::string_view text, int m);

}  // namespace galelemke

#endif  // GALELEMKE_GAME_IO_H_
