#include "coxhodge/polynomial.hpp"

#include <cctype>
#include <utility>

#include "coxhodge/errors.hpp"

namespace coxhodge {

std::string VarNames::name(std::size_t i) const {
  if (i < nx) return "x" + std::to_string(i);
  if (i < nx + ny) return "y" + std::to_string(i - nx + 1);
  throw errors::index_out_of_range("variable index " + std::to_string(i));
}

GradedPolynomial::GradedPolynomial(const ClassGroup* cl, TermMap terms) : cl_(cl) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0) {
      it = terms.erase(it);
      continue;
    }
    if (it->first.size() != cl_->nvars())
      throw errors::length_mismatch("monomial", cl_->nvars(), it->first.size());
    for (const Int& e : it->first)
      if (e < 0) throw errors::input_error("negative exponent in monomial");
    ++it;
  }
  terms_ = std::move(terms);
  if (terms_.empty()) return;
  degree_ = cl_->degree_of(terms_.begin()->first);
  for (const auto& [mono, coeff] : terms_) {
    DivisorClass d = cl_->degree_of(mono);
    if (d != degree_)
      throw errors::not_homogeneous("monomial of degree " + d.to_string() +
                                    " in a polynomial of degree " + degree_.to_string());
  }
}

GradedPolynomial GradedPolynomial::zero(const ClassGroup& cl) {
  return GradedPolynomial(&cl, TermMap{});
}

GradedPolynomial GradedPolynomial::monomial(const ClassGroup& cl, IntVec exponents, Rat coeff) {
  TermMap terms;
  if (coeff != 0) terms.emplace(std::move(exponents), std::move(coeff));
  return GradedPolynomial(&cl, std::move(terms));
}

const DivisorClass& GradedPolynomial::degree() const {
  if (is_zero()) throw errors::internal_error("degree of the zero polynomial");
  return degree_;
}

GradedPolynomial GradedPolynomial::add(const GradedPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (degree_ != o.degree_)
    throw errors::not_homogeneous("adding degrees " + degree_.to_string() + " and " +
                                  o.degree_.to_string());
  TermMap out = terms_;
  for (const auto& [mono, coeff] : o.terms_) {
    auto [it, inserted] = out.emplace(mono, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) out.erase(it);
    }
  }
  return GradedPolynomial(cl_, std::move(out));
}

GradedPolynomial GradedPolynomial::subtract(const GradedPolynomial& o) const {
  return add(o.scale(Rat(-1)));
}

GradedPolynomial GradedPolynomial::multiply(const GradedPolynomial& o) const {
  TermMap out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      IntVec m(m1.size());
      for (std::size_t i = 0; i < m1.size(); ++i) m[i] = m1[i] + m2[i];
      Rat c = c1 * c2;
      auto [it, inserted] = out.emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
  return GradedPolynomial(cl_, std::move(out));
}

GradedPolynomial GradedPolynomial::scale(const Rat& c) const {
  TermMap out;
  if (c != 0)
    for (const auto& [mono, coeff] : terms_) out.emplace(mono, coeff * c);
  return GradedPolynomial(cl_, std::move(out));
}

GradedPolynomial GradedPolynomial::partial_derivative(std::size_t var) const {
  if (var >= cl_->nvars()) throw errors::index_out_of_range("variable " + std::to_string(var));
  TermMap out;
  for (const auto& [mono, coeff] : terms_) {
    if (mono[var] == 0) continue;
    IntVec m = mono;
    Rat c = coeff * Rat(m[var]);
    m[var] -= 1;
    out.emplace(std::move(m), std::move(c));
  }
  return GradedPolynomial(cl_, std::move(out));
}

GradedPolynomial GradedPolynomial::euler_derivative(std::size_t var) const {
  if (var >= cl_->nvars()) throw errors::index_out_of_range("variable " + std::to_string(var));
  TermMap out;
  for (const auto& [mono, coeff] : terms_) {
    if (mono[var] == 0) continue;
    out.emplace(mono, coeff * Rat(mono[var]));
  }
  return GradedPolynomial(cl_, std::move(out));
}

Rat GradedPolynomial::evaluate(const RatVec& point) const {
  if (point.size() != cl_->nvars())
    throw errors::length_mismatch("evaluation point", cl_->nvars(), point.size());
  Rat total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Rat term = coeff;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (point[i] == 0) {
        term = 0;
        break;
      }
      Rat p = point[i];
      for (Int e = 0; e < mono[i]; ++e) term *= p;
    }
    total += term;
  }
  return total;
}

std::string GradedPolynomial::to_string(const VarNames& names) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rat c = coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    bool constant = true;
    for (const Int& e : mono)
      if (e != 0) constant = false;
    std::string factors;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names.name(i);
      if (mono[i] != 1) factors += "^" + mono[i].get_str();
    }
    if (constant) {
      out += rat_to_string(c);
    } else if (c == 1) {
      out += factors;
    } else {
      out += rat_to_string(c) + "*" + factors;
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  const VarNames& names;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& why) {
    throw errors::parse_error(why + " at position " + std::to_string(pos));
  }

  Int read_integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(text.substr(start, pos - start));
  }

  // var index, or nvars() if the next token is not a variable
  std::size_t try_read_variable() {
    skip_space();
    if (pos >= text.size()) return names.count();
    char c = text[pos];
    if (c != 'x' && c != 'y') return names.count();
    std::size_t save = pos;
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      pos = save;
      fail("variable name must be x<k> or y<k>");
    }
    Int idx = read_integer();
    if (c == 'x') {
      if (idx >= Int(static_cast<long>(names.nx)))
        fail("variable x" + idx.get_str() + " outside the ring");
      return static_cast<std::size_t>(idx.get_ui());
    }
    if (idx < 1 || idx > Int(static_cast<long>(names.ny)))
      fail("variable y" + idx.get_str() + " outside the ring");
    return names.nx + static_cast<std::size_t>(idx.get_ui()) - 1;
  }
};

}  // namespace

GradedPolynomial parse_polynomial(const std::string& text, const ClassGroup& cl,
                                  const VarNames& names) {
  if (names.count() != cl.nvars())
    throw errors::length_mismatch("variable names", cl.nvars(), names.count());
  Parser p{text, names};
  GradedPolynomial::TermMap terms;
  bool any = false;
  while (!p.done()) {
    // sign
    int sign = 1;
    while (true) {
      char c = p.peek();
      if (c == '+') {
        ++p.pos;
      } else if (c == '-') {
        sign = -sign;
        ++p.pos;
      } else {
        break;
      }
    }
    if (p.done()) p.fail("dangling sign");

    Rat coeff(sign);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      Int num = p.read_integer();
      Int den = 1;
      if (p.peek() == '/') {
        ++p.pos;
        den = p.read_integer();
        if (den == 0) p.fail("zero denominator");
      }
      coeff *= make_rat(num, den);
      saw_factor = true;
    }
    IntVec mono(names.count(), Int(0));
    while (true) {
      if (p.peek() == '*') {
        ++p.pos;
        if (p.done()) p.fail("dangling '*'");
        continue;
      }
      std::size_t var = p.try_read_variable();
      if (var == names.count()) break;
      Int exp = 1;
      if (p.peek() == '^') {
        ++p.pos;
        exp = p.read_integer();
      }
      mono[var] += exp;
      saw_factor = true;
    }
    if (!saw_factor) p.fail("empty term");
    char c = p.peek();
    if (c != '\0' && c != '+' && c != '-') p.fail("unexpected character '" + std::string(1, c) + "'");

    auto [it, inserted] = terms.emplace(std::move(mono), coeff);
    if (!inserted) it->second += coeff;
    any = true;
  }
  if (!any) throw errors::parse_error("empty polynomial text");
  return GradedPolynomial(&cl, std::move(terms));
}

}  // namespace coxhodge
