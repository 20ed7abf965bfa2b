#include "powelem/poly_io.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace powelem {

namespace {

std::string monomial_text(const RingSignature& ring, const ExponentVector& exps) {
  std::string out;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += ring.name(k);
    if (exps[k] != 1) {
      out += '^';
      out += std::to_string(exps[k]);
    }
  }
  return out;
}

// Unsigned body of a term: "3*e1^2", "e1", "7".
std::string term_body(const RingSignature& ring, const Term& t) {
  const Integer magnitude = abs(t.coeff);
  const std::string mono = monomial_text(ring, t.exponents);
  if (mono.empty()) {
    return magnitude.get_str();
  }
  if (magnitude == 1) {
    return mono;
  }
  return magnitude.get_str() + "*" + mono;
}

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_space();
      if (at_end()) {
        break;
      }
      const char op = get();
      if (op != '+' && op != '-') {
        fail("expected '+' or '-'");
      }
      terms.push_back(parse_term(op == '-'));
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    skip_space();
    Term t{ExponentVector(ring_->size(), 0), 1};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = Integer(read_digits());
      skip_space();
      if (peek() == '*') {
        get();
      } else {
        need_factor = false;
      }
    }
    while (need_factor) {
      skip_space();
      const std::string name = read_name();
      auto idx = ring_->index_of(name);
      if (!idx) {
        fail("unknown variable '" + name + "'");
      }
      skip_space();
      int exponent = 1;
      if (peek() == '^') {
        get();
        skip_space();
        bool neg = false;
        if (peek() == '-') {
          get();
          neg = true;
        }
        const std::string digits = read_digits();
        if (digits.size() > 9) {
          fail("exponent too large");
        }
        exponent = std::stoi(digits) * (neg ? -1 : 1);
      }
      t.exponents[*idx] += exponent;
      skip_space();
      need_factor = peek() == '*';
      if (need_factor) {
        get();
      }
    }
    if (!ring_->conforms(t.exponents)) {
      fail("negative exponent on a non-invertible variable");
    }
    if (negative) {
      t.coeff = -t.coeff;
    }
    return t;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected digits");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_name() {
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected a variable name");
    }
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

const std::set<std::string>& greek_names() {
  static const std::set<std::string> names = {"alpha", "beta",  "gamma", "delta", "theta",
                                              "lambda", "mu",   "zeta",  "psi",   "phi"};
  return names;
}

std::string latex_variable(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) {
    --split;
  }
  std::string stem = name.substr(0, split);
  if (greek_names().count(stem)) {
    stem = "\\" + stem;
  }
  if (split == name.size() || split == 0) {
    return stem.empty() ? name : stem;
  }
  const std::string index = name.substr(split);
  return stem + "_" + (index.size() == 1 ? index : "{" + index + "}");
}

}  // namespace

std::string term_to_text(const RingSignature& ring, const Term& term) {
  return (term.coeff < 0 ? "-" : "") + term_body(ring, term);
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      out += t.coeff < 0 ? "-" : "";
      first = false;
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    out += term_body(p.signature(), t);
  }
  return out;
}

Polynomial parse_text(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

std::string to_latex(const Polynomial& p) {
  if (p.is_zero()) {
    return "0";
  }
  const auto& ring = p.signature();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      out += t.coeff < 0 ? "-" : "";
      first = false;
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      const int e = t.exponents[k];
      if (e == 0) {
        continue;
      }
      if (!mono.empty()) {
        mono += ' ';
      }
      mono += latex_variable(ring.name(k));
      if (e != 1) {
        mono += "^{" + std::to_string(e) + "}";
      }
    }
    const Integer magnitude = abs(t.coeff);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + " " + mono;
    }
  }
  return out;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"coeff", t.coeff.get_str()}, {"exp", t.exponents}});
  }
  std::vector<bool> flags = p.signature().invertible_flags();
  return {{"vars", p.signature().names()}, {"invertible", flags}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    auto ring = make_ring(j.at("vars").get<std::vector<std::string>>(),
                          j.at("invertible").get<std::vector<bool>>());
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      Term term;
      if (term.coeff.set_str(t.at("coeff").get<std::string>(), 10) != 0) {
        throw std::invalid_argument("polynomial json: malformed coefficient");
      }
      term.exponents = t.at("exp").get<ExponentVector>();
      terms.push_back(std::move(term));
    }
    return Polynomial(std::move(ring), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("polynomial json: ") + e.what());
  }
}

}  // namespace powelem
