#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace noneven {

inline int sgn(double x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

// n x n grid over {-1, 0, +1}.
class SignPattern {
public:
  SignPattern() = default;
  explicit SignPattern(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("SignPattern: n must be >= 1");
  }
  SignPattern(int n, std::initializer_list<int> vals) : SignPattern(n) {
    if (static_cast<int>(vals.size()) != n * n)
      throw std::invalid_argument("SignPattern: wrong initializer size");
    int i = 0;
    for (int v : vals) set_linear(i++, v);
  }

  int order() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, int v) { set_linear(i * n_ + j, v); }

  bool operator==(const SignPattern&) const = default;

  SignPattern negated() const {
    SignPattern r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<int8_t>(-e_[i]);
    return r;
  }

private:
  void set_linear(int idx, int v) {
    if (v < -1 || v > 1)
      throw std::invalid_argument("SignPattern: entry must be -1, 0, or +1");
    e_[static_cast<size_t>(idx)] = static_cast<int8_t>(v);
  }
  int n_ = 0;
  std::vector<int8_t> e_;
};

// Dense square real matrix, row-major.
struct RealMatrix {
  int n = 0;
  std::vector<double> a;

  RealMatrix() = default;
  explicit RealMatrix(int order) : n(order), a(static_cast<size_t>(order) * order, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static RealMatrix identity(int order) {
    RealMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline RealMatrix to_real(const SignPattern& h) {
  RealMatrix m(h.order());
  for (int i = 0; i < h.order(); ++i)
    for (int j = 0; j < h.order(); ++j) m.at(i, j) = h.at(i, j);
  return m;
}

inline bool in_sign_class(const RealMatrix& a, const SignPattern& h) {
  if (a.n != h.order())
    throw std::invalid_argument("in_sign_class: dimension mismatch");
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (sgn(a.at(i, j)) != h.at(i, j)) return false;
  return true;
}

// Text format: line 1 holds n, then n lines of n tokens from
// {-1, 0, 1, -, +}.
inline SignPattern parse_pattern(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, 1, "missing order line");
  int n = 0;
  try {
    size_t pos = 0;
    n = std::stoi(line, &pos);
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos != line.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError(1, 1, "expected a positive integer order");
  }
  if (n < 1) throw ParseError(1, 1, "order must be >= 1");
  SignPattern h(n);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw ParseError(i + 2, 1, "missing matrix row");
    std::istringstream row(line);
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(row >> tok))
        throw ParseError(i + 2, 1, "row has fewer than " + std::to_string(n) + " entries");
      int v;
      if (tok == "-1" || tok == "-") v = -1;
      else if (tok == "0") v = 0;
      else if (tok == "1" || tok == "+1" || tok == "+") v = 1;
      else throw ParseError(i + 2, j + 1, "bad entry '" + tok + "'");
      h.set(i, j, v);
    }
    std::string extra;
    if (row >> extra)
      throw ParseError(i + 2, n + 1, "row has more than " + std::to_string(n) + " entries");
  }
  return h;
}

inline SignPattern parse_pattern(const std::string& text) {
  std::istringstream in(text);
  return parse_pattern(in);
}

inline void write_pattern(std::ostream& out, const SignPattern& h) {
  out << h.order() << '\n';
  for (int i = 0; i < h.order(); ++i) {
    for (int j = 0; j < h.order(); ++j) out << (j ? " " : "") << h.at(i, j);
    out << '\n';
  }
}

}  // namespace noneven
