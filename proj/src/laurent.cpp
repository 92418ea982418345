#include "vassiliev/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "vassiliev/error.hpp"

namespace vassiliev {

LaurentPoly::LaurentPoly(Coefficient constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, Coefficient coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(int exponent, Coefficient coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly::Coefficient LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly::Coefficient LaurentPoly::max_abs_coefficient() const {
  Coefficient best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, c < 0 ? -c : c);
  return best;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly product;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) product.add_term(e1 + e2, c1 * c2);
  *this = std::move(product);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

std::string LaurentPoly::to_string(char variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coefficient mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << variable;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

namespace {

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("laurent", msg + " at position " + std::to_string(pos), pos);
  }
  bool digit() const { return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); }
  long long integer() {
    std::size_t start = pos;
    while (digit()) ++pos;
    if (start == pos) fail("expected digits");
    return std::stoll(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  TermParser p{text};
  LaurentPoly result;
  if (p.at_end()) p.fail("empty polynomial");
  bool first = true;
  while (!p.at_end()) {
    int sign = 1;
    if (text[p.pos] == '+' || text[p.pos] == '-') {
      sign = text[p.pos] == '-' ? -1 : 1;
      ++p.pos;
      p.skip_space();
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    first = false;
    Coefficient coeff = 1;
    bool have_coeff = false;
    if (p.digit()) {
      coeff = p.integer();
      have_coeff = true;
      p.skip_space();
      if (p.pos < text.size() && text[p.pos] == '*') {
        ++p.pos;
        p.skip_space();
      }
    }
    int exponent = 0;
    if (p.pos < text.size() && text[p.pos] == 'z') {
      ++p.pos;
      exponent = 1;
      p.skip_space();
      if (p.pos < text.size() && text[p.pos] == '^') {
        ++p.pos;
        p.skip_space();
        int esign = 1;
        if (p.pos < text.size() && (text[p.pos] == '-' || text[p.pos] == '+')) {
          esign = text[p.pos] == '-' ? -1 : 1;
          ++p.pos;
        }
        exponent = esign * static_cast<int>(p.integer());
      }
    } else if (!have_coeff) {
      p.fail("expected a coefficient or 'z'");
    }
    result.add_term(exponent, sign * coeff);
  }
  return result;
}

}  // namespace vassiliev
