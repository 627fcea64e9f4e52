#include "subsmooth/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "subsmooth/errors.hpp"

namespace subsmooth {

namespace {

struct Node {
  virtual ~Node() = default;
  virtual double eval(const Vec& x) const = 0;
  virtual int max_coord() const { return 0; }
};
using NodePtr = std::shared_ptr<const Node>;

struct Const : Node {
  double v;
  explicit Const(double v) : v(v) {}
  double eval(const Vec&) const override { return v; }
};

struct Coord : Node {
  int idx;  // zero-based
  explicit Coord(int i) : idx(i) {}
  double eval(const Vec& x) const override {
    if (idx >= x.dim()) throw ContractError("expression references x" + std::to_string(idx + 1) +
                                            " beyond the point dimension");
    return x[idx];
  }
  int max_coord() const override { return idx + 1; }
};

struct Unary : Node {
  char op;  // '-'
  NodePtr a;
  Unary(char op, NodePtr a) : op(op), a(std::move(a)) {}
  double eval(const Vec& x) const override { return -a->eval(x); }
  int max_coord() const override { return a->max_coord(); }
};

struct Binary : Node {
  char op;
  NodePtr a, b;
  Binary(char op, NodePtr a, NodePtr b) : op(op), a(std::move(a)), b(std::move(b)) {}
  double eval(const Vec& x) const override {
    double l = a->eval(x), r = b->eval(x);
    switch (op) {
      case '+': return l + r;
      case '-': return l - r;
      case '*': return l * r;
      case '/': return l / r;
    }
    throw ContractError("bad operator");
  }
  int max_coord() const override { return std::max(a->max_coord(), b->max_coord()); }
};

struct Call : Node {
  std::string name;
  std::vector<NodePtr> args;
  double eval(const Vec& x) const override {
    auto a = [&](size_t i) { return args[i]->eval(x); };
    if (name == "abs") return std::abs(a(0));
    if (name == "sqrt") return std::sqrt(a(0));
    if (name == "sin") return std::sin(a(0));
    if (name == "cos") return std::cos(a(0));
    if (name == "exp") return std::exp(a(0));
    if (name == "max") return std::max(a(0), a(1));
    if (name == "min") return std::min(a(0), a(1));
    throw ContractError("bad function");
  }
  int max_coord() const override {
    int m = 0;
    for (const auto& a : args) m = std::max(m, a->max_coord());
    return m;
  }
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        char op = s_[pos_++];
        left = std::make_shared<Binary>(op, left, term());
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*' || peek() == '/') {
        char op = s_[pos_++];
        left = std::make_shared<Binary>(op, left, factor());
      } else {
        return left;
      }
    }
  }

  NodePtr factor() {
    skip_ws();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return std::make_shared<Unary>('-', factor());
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return ident();
    fail("expected a factor");
    return nullptr;
  }

  NodePtr number() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == 'e' || s_[pos_] == 'E' ||
            ((s_[pos_] == '+' || s_[pos_] == '-') && pos_ > start &&
             (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    try {
      return std::make_shared<Const>(std::stod(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("bad numeric literal");
      return nullptr;
    }
  }

  NodePtr ident() {
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '5')
      return std::make_shared<Coord>(name[1] - '1');
    static const char* fns[] = {"abs", "sqrt", "sin", "cos", "exp", "max", "min"};
    bool known = false;
    for (const char* f : fns) known = known || name == f;
    if (!known) fail("unknown identifier '" + name + "'");
    size_t arity = (name == "max" || name == "min") ? 2 : 1;
    expect('(');
    auto call = std::make_shared<Call>();
    call->name = name;
    call->args.push_back(expr());
    for (size_t i = 1; i < arity; ++i) {
      expect(',');
      call->args.push_back(expr());
    }
    expect(')');
    return call;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("expression parse error at position " + std::to_string(pos_) + ": " + why);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

ScalarFn parse_expression(const std::string& text, int dim) {
  NodePtr root = Parser(text).parse();
  if (root->max_coord() > dim)
    throw ParseError("expression uses x" + std::to_string(root->max_coord()) +
                     " but dim is " + std::to_string(dim));
  return make_fn(
      [root](const Vec& x) -> ExtReal {
        double v = root->eval(x);
        if (std::isnan(v)) return ExtReal::pos_inf();  // sqrt of negative etc.
        return ExtReal(v);
      },
      dim);
}

int expression_max_coordinate(const std::string& text) {
  return Parser(text).parse()->max_coord();
}

}  // namespace subsmooth
