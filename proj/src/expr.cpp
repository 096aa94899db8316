#include "occam/expr.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <vector>

#include "occam/errors.hpp"

namespace occam {

namespace {

struct Env {
  double n, s, g;
};

struct Node {
  virtual ~Node() = default;
  virtual double eval(const Env& env) const = 0;
};
using NodePtr = std::shared_ptr<Node>;

struct Num : Node {
  double value;
  explicit Num(double v) : value(v) {}
  double eval(const Env&) const override { return value; }
};

struct Var : Node {
  char name;
  explicit Var(char c) : name(c) {}
  double eval(const Env& env) const override {
    switch (name) {
      case 'n':
        return env.n;
      case 's':
        return env.s;
      default:
        return env.g;
    }
  }
};

struct Binary : Node {
  char op;
  NodePtr lhs, rhs;
  Binary(char o, NodePtr l, NodePtr r)
      : op(o), lhs(std::move(l)), rhs(std::move(r)) {}
  double eval(const Env& env) const override {
    double a = lhs->eval(env), b = rhs->eval(env);
    switch (op) {
      case '+':
        return a + b;
      case '-':
        return a - b;
      case '*':
        return a * b;
      case '/':
        return a / b;
      default:
        return std::pow(a, b);
    }
  }
};

struct Call : Node {
  std::string fn;
  NodePtr arg;
  Call(std::string f, NodePtr a) : fn(std::move(f)), arg(std::move(a)) {}
  double eval(const Env& env) const override {
    double v = arg->eval(env);
    if (fn == "log") return std::log(v);
    if (fn == "log2") return std::log2(v);
    if (fn == "ceil") return std::ceil(v);
    return std::sqrt(v);
  }
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr parse() {
    NodePtr e = sum();
    skip_space();
    if (pos_ != text_.size())
      throw InputFormatError("trailing characters in expression: " +
                             text_.substr(pos_));
    return e;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(unsigned(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr sum() {
    NodePtr e = product();
    while (true) {
      if (eat('+'))
        e = std::make_shared<Binary>('+', e, product());
      else if (eat('-'))
        e = std::make_shared<Binary>('-', e, product());
      else
        return e;
    }
  }

  NodePtr product() {
    NodePtr e = power();
    while (true) {
      if (eat('*'))
        e = std::make_shared<Binary>('*', e, power());
      else if (eat('/'))
        e = std::make_shared<Binary>('/', e, power());
      else
        return e;
    }
  }

  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) return std::make_shared<Binary>('^', base, power());
    return base;
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size())
      throw InputFormatError("expression ends unexpectedly");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = sum();
      if (!eat(')')) throw InputFormatError("missing ')' in expression");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return std::make_shared<Binary>('-', std::make_shared<Num>(0.0), atom());
    }
    if (std::isdigit(unsigned(c)) || c == '.') return number();
    if (std::isalpha(unsigned(c))) return identifier();
    throw InputFormatError(std::string("unexpected character '") + c +
                           "' in expression");
  }

  NodePtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(unsigned(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
      ++pos_;
    try {
      std::size_t used = 0;
      double v = std::stod(text_.substr(start, pos_ - start), &used);
      if (used != pos_ - start) throw std::invalid_argument("partial");
      return std::make_shared<Num>(v);
    } catch (const std::exception&) {
      throw InputFormatError("bad number in expression: " +
                             text_.substr(start, pos_ - start));
    }
  }

  NodePtr identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(unsigned(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (name == "n" || name == "s" || name == "g" || name == "gamma") {
      return std::make_shared<Var>(name == "gamma" ? 'g' : name[0]);
    }
    if (name == "log" || name == "log2" || name == "ceil" || name == "sqrt") {
      if (!eat('(')) throw InputFormatError(name + " needs '('");
      NodePtr arg = sum();
      if (!eat(')')) throw InputFormatError("missing ')' after " + name);
      return std::make_shared<Call>(name, arg);
    }
    throw InputFormatError("unknown identifier in expression: " + name);
  }
};

}  // namespace

std::function<double(double, double, double)> compile_expression(
    const std::string& text) {
  Parser parser(text);
  NodePtr root = parser.parse();
  return [root](double n, double s, double g) {
    return root->eval(Env{n, s, g});
  };
}

}  // namespace occam
