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

#include "galelemke/game_io.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "galelemke/errors.h"

namespace galelemke {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
  std::size_t length;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}, raw.size()};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return lines;
}

// Walks nonblank lines, tracking the last position for end-of-file errors.
class LineCursor {
 public:
  explicit LineCursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& NextNonBlank(std::string_view expecting) {
    while (pos_ < lines_.size() && lines_[pos_].tokens.empty()) ++pos_;
    if (pos_ == lines_.size()) {
      throw ParseError(lines_.empty() ? 1 : lines_.back().number, 0,
                       "unexpected end of input, expected " +
                           std::string(expecting));
    }
    return lines_[pos_++];
  }

  // Requires a blank line before the next nonblank line.
  void ExpectBlank() {
    if (pos_ < lines_.size() && !lines_[pos_].tokens.empty()) {
      throw ParseError(lines_[pos_].number, 1,
                       "expected a blank line between A and B");
    }
  }

  void ExpectEnd() {
    while (pos_ < lines_.size() && lines_[pos_].tokens.empty()) ++pos_;
    if (pos_ < lines_.size()) {
      throw ParseError(lines_[pos_].number, lines_[pos_].tokens[0].column,
                       "trailing content");
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

int ParsePositiveInt(const Line& line, const Token& tok, const char* what) {
  int value = 0;
  for (char c : tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || value > 100000) {
      throw ParseError(line.number, tok.column,
                       std::string("expected a positive integer for ") + what);
    }
    value = value * 10 + (c - '0');
  }
  if (value < 1) {
    throw ParseError(line.number, tok.column,
                     std::string(what) + " must be at least 1");
  }
  return value;
}

std::pair<int, int> ParseHeader(LineCursor& cursor) {
  const Line& line = cursor.NextNonBlank("header \"m n\"");
  if (line.tokens.size() != 2) {
    throw ParseError(line.number, line.tokens.size() > 2 ? line.tokens[2].column : line.length + 1,
                     "header must be \"m n\"");
  }
  return {ParsePositiveInt(line, line.tokens[0], "m"),
          ParsePositiveInt(line, line.tokens[1], "n")};
}

RationalMatrix ParseMatrix(LineCursor& cursor, int m, int n, const char* name) {
  RationalMatrix out(m, n);
  for (int i = 0; i < m; ++i) {
    const Line& line = cursor.NextNonBlank(std::string("row of ") + name);
    if (static_cast<int>(line.tokens.size()) != n) {
      const std::size_t col = static_cast<int>(line.tokens.size()) > n
                                  ? line.tokens[n].column
                                  : line.length + 1;
      throw ParseError(line.number, col,
                       std::string("row of ") + name + " needs " +
                           std::to_string(n) + " entries, found " +
                           std::to_string(line.tokens.size()));
    }
    for (int j = 0; j < n; ++j) {
      auto r = Rational::Parse(line.tokens[j].text);
      if (!r) {
        throw ParseError(line.number, line.tokens[j].column,
                         "not a rational: \"" +
                             std::string(line.tokens[j].text) + "\"");
      }
      out(i, j) = std::move(*r);
    }
  }
  return out;
}

void AppendMatrix(std::ostringstream& os, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j ? " " : "") << m(i, j);
    }
    os << '\n';
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

BimatrixGame ParseBimatrixGame(std::string_view text) {
  LineCursor cursor(Tokenize(text));
  const auto [m, n] = ParseHeader(cursor);
  RationalMatrix a = ParseMatrix(cursor, m, n, "A");
  cursor.ExpectBlank();
  RationalMatrix b = ParseMatrix(cursor, m, n, "B");
  cursor.ExpectEnd();
  return BimatrixGame(std::move(a), std::move(b));
}

std::string FormatBimatrixGame(const BimatrixGame& game) {
  std::ostringstream os;
  os << game.rows() << ' ' << game.cols() << '\n';
  AppendMatrix(os, game.original_a());
  os << '\n';
  AppendMatrix(os, game.original_b());
  return os.str();
}

UnitVectorGame ParseUnitVectorGame(std::string_view text) {
  LineCursor cursor(Tokenize(text));
  const auto [m, n] = ParseHeader(cursor);
  const Line& line = cursor.NextNonBlank("label line");
  if (static_cast<int>(line.tokens.size()) != n) {
    throw ParseError(line.number, 1,
                     "label line needs " + std::to_string(n) + " labels");
  }
  UnitVectorGame game;
  game.m = m;
  for (const Token& tok : line.tokens) {
    const int label = ParsePositiveInt(line, tok, "label");
    if (label > m) {
      throw ParseError(line.number, tok.column,
                       "label " + std::to_string(label) + " exceeds m");
    }
    game.labels.push_back(label);
  }
  game.b = ParseMatrix(cursor, m, n, "B");
  cursor.ExpectEnd();
  return game;
}

std::string FormatUnitVectorGame(const UnitVectorGame& game) {
  std::ostringstream os;
  os << game.m << ' ' << game.n() << '\n';
  for (int j = 0; j < game.n(); ++j) os << (j ? " " : "") << game.labels[j];
  os << '\n';
  AppendMatrix(os, game.b);
  return os.str();
}

BimatrixGame LoadGame(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  if (path.extension() == ".uvg") return ToBimatrix(ParseUnitVectorGame(text));
  return ParseBimatrixGame(text);
}

UnitVectorGame LoadUnitVectorGame(const std::filesystem::path& path) {
  return ParseUnitVectorGame(ReadFile(path));
}

void SaveText(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

MixedProfile ParseProfile(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw ParseError(1, 0, "profile needs \"x... ; y...\"");
  }
  auto parse_half = [&](std::string_view half, std::size_t offset,
                        const char* prefix) {
    RationalVector out;
    for (const Line& line : Tokenize(half)) {
      for (Token tok : line.tokens) {
        std::string_view t = tok.text;
        if (out.empty() && t.starts_with(prefix)) t.remove_prefix(2);
        if (t.empty()) continue;
        auto r = Rational::Parse(t);
        if (!r) {
          throw ParseError(1, offset + tok.column,
                           "not a rational: \"" + std::string(t) + "\"");
        }
        out.push_back(std::move(*r));
      }
    }
    return out;
  };
  MixedProfile p;
  p.x = parse_half(text.substr(0, semi), 0, "x=");
  p.y = parse_half(text.substr(semi + 1), semi + 1, "y=");
  return p;
}

std::string FormatLabelString(const std::vector<int>& labels, int m) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (m > 9 && i > 0) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

std::vector<int> ParseLabelString(std::string_view text, int m) {
  std::vector<int> out;
  auto check = [&](int label, std::size_t column) {
    if (label < 1 || label > m) {
      throw ParseError(1, column, "label out of range 1.." + std::to_string(m));
    }
    out.push_back(label);
  };
  if (m <= 9 && text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(1, i + 1, "expected a digit");
      }
      check(text[i] - '0', i + 1);
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    if (tok.empty() || tok.size() > 6) throw ParseError(1, start + 1, "bad label");
    int value = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(1, start + 1, "expected a number");
      }
      value = value * 10 + (c - '0');
    }
    check(value, start + 1);
    start = end + 1;
  }
  return out;
}

}  // namespace galelemke
