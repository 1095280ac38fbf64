#include "qmm/textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qmm {

std::string to_text(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << "a[" << w[i].row << ',' << w[i].col << ']';
  }
  return os.str();
}

std::string to_text(const MixedMonomial& m) {
  std::ostringstream os;
  bool any = false;
  if (!m.word.empty()) {
    os << to_text(m.word);
    any = true;
  }
  for (std::size_t i = 0; i < m.xvec.size(); ++i) {
    if (m.xvec[i] == 0) continue;
    if (any) os << ' ';
    os << "x[" << (i + 1) << "]^" << m.xvec[i];
    any = true;
  }
  return any ? os.str() : "1";
}

namespace {

template <class P>
std::string poly_text(const P& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << "  +  ";
    if (!c.is_one()) os << '(' << c.str() << ") ";
    os << to_text(m);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_text(const NCPoly& p) { return poly_text(p); }
std::string to_text(const MixedPoly& p) { return poly_text(p); }

MixedMonomial parse_monomial(const std::string& text, int rank) {
  if (rank < 1) throw std::invalid_argument("parse_monomial: rank must be >= 1");
  MixedMonomial out{{}, XVec(static_cast<std::size_t>(rank), 0)};
  std::size_t i = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("parse_monomial: ") + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> int {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return std::stoi(text.substr(start, i - start));
  };
  skip_ws();
  if (i == text.size()) fail("empty input");
  if (text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) fail("unexpected trailing input after '1'");
    return out;
  }
  bool seen_x = false;
  int last_x_index = 0;
  while (i < text.size()) {
    if (text[i] == 'a') {
      if (seen_x) fail("generator after x variable (x part must be normal-ordered last)");
      ++i;
      if (i >= text.size() || text[i] != '[') fail("expected '[' after 'a'");
      ++i;
      int row = read_int();
      if (i >= text.size() || text[i] != ',') fail("expected ',' in a[i,j]");
      ++i;
      int col = read_int();
      if (i >= text.size() || text[i] != ']') fail("expected ']' in a[i,j]");
      ++i;
      if (row < 1 || row > rank || col < 1 || col > rank) fail("generator index out of range");
      out.word.push_back(Gen{row, col});
    } else if (text[i] == 'x') {
      ++i;
      if (i >= text.size() || text[i] != '[') fail("expected '[' after 'x'");
      ++i;
      int idx = read_int();
      if (i >= text.size() || text[i] != ']') fail("expected ']' in x[i]");
      ++i;
      if (idx < 1 || idx > rank) fail("x index out of range");
      if (seen_x && idx <= last_x_index) fail("x variables must appear with ascending indices");
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = read_int();
      }
      if (out.xvec[idx - 1] != 0) fail("repeated x variable");
      out.xvec[idx - 1] = e;
      seen_x = true;
      last_x_index = idx;
    } else {
      fail("expected 'a[...]' or 'x[...]'");
    }
    skip_ws();
  }
  return out;
}

}  // namespace qmm
