#include "spnkit/text_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spnkit/error.hpp"

namespace spnkit {
namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  bool next(Token& out) {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
        advance();
      } else {
        break;
      }
    }
    if (pos_ >= text_.size()) return false;
    out.line = line_;
    out.column = column_;
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#' || c == ',') break;
      advance();
    }
    out.text = std::string(text_.substr(start, pos_ - start));
    return true;
  }

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

double to_real(const Token& t) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.text.c_str(), &end);
  if (end != t.text.c_str() + t.text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError("expected a finite real, got '" + t.text + "'", t.line, t.column);
  }
  return v;
}

std::size_t to_dimension(const Token& t) {
  char* end = nullptr;
  const long v = std::strtol(t.text.c_str(), &end, 10);
  if (end != t.text.c_str() + t.text.size() || v < 1) {
    throw ParseError("expected a positive dimension, got '" + t.text + "'", t.line, t.column);
  }
  return static_cast<std::size_t>(v);
}

std::vector<double> read_values(Tokenizer& tok, std::size_t count) {
  std::vector<double> values;
  values.reserve(count);
  Token t;
  while (values.size() < count) {
    if (!tok.next(t)) {
      throw ParseError("expected " + std::to_string(count) + " values, found " +
                           std::to_string(values.size()),
                       tok.line(), tok.column());
    }
    values.push_back(to_real(t));
  }
  if (tok.next(t)) {
    throw ParseError("unexpected trailing token '" + t.text + "'", t.line, t.column);
  }
  return values;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SymMatrix parse_matrix(std::string_view text) {
  Tokenizer tok(text);
  Token t;
  if (!tok.next(t)) throw ParseError("empty input", tok.line(), tok.column());
  const std::size_t n = to_dimension(t);
  if (n > 4096) throw ParseError("dimension too large", t.line, t.column);
  std::vector<double> values = read_values(tok, n * n);
  try {
    return SymMatrix(n, std::move(values));
  } catch (const Error& e) {
    throw ParseError(e.what(), t.line, t.column);
  }
}

SymMatrix read_matrix(const std::filesystem::path& path) { return parse_matrix(slurp(path)); }

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_matrix(const SymMatrix& a) {
  std::string out = std::to_string(a.n()) + "\n";
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (j) out += ' ';
      out += format_real(a(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_matrix(const std::filesystem::path& path, const SymMatrix& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << format_matrix(a);
}

std::vector<double> parse_vector(std::string_view text) {
  Tokenizer tok(text);
  Token t;
  if (!tok.next(t)) throw ParseError("empty input", tok.line(), tok.column());
  const std::size_t n = to_dimension(t);
  return read_values(tok, n);
}

std::vector<double> read_vector(const std::filesystem::path& path) {
  return parse_vector(slurp(path));
}

std::string format_vector(const std::vector<double>& v) {
  std::string out = std::to_string(v.size()) + "\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_real(v[i]);
  }
  out += '\n';
  return out;
}

}  // namespace spnkit
