#include <cctype>
#include <string>

#include "cubictk/lattice.hpp"

namespace cubictk {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

Integer parse_int(const std::string& s, std::string_view whole) {
  if (s.empty()) throw ClassSyntaxError("bad class: '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ClassSyntaxError("bad class: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ClassSyntaxError("bad integer '" + s + "' in '" + std::string(whole) + "'");
  Integer v(s.substr(i));
  return s[0] == '-' ? Integer(-v) : v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out(1);
  for (char ch : s) {
    if (ch == ',')
      out.emplace_back();
    else
      out.back().push_back(ch);
  }
  return out;
}

DivisorClass parse_tuple(const SurfaceLattice& lat, const std::string& s, std::string_view whole) {
  std::string body = s.substr(1, s.size() - 2);
  auto semi = body.find(';');
  if (semi != std::string::npos) {
    // (a;b1,...,b6) means a*l - sum b_i e_i.
    if (lat.kind() != SurfaceKind::CubicSurface)
      throw ClassSyntaxError("';' tuples are only valid on the cubic surface");
    auto bs = split_commas(body.substr(semi + 1));
    if (bs.size() != 6) throw ClassSyntaxError("expected six b_i in '" + std::string(whole) + "'");
    std::vector<Integer> v{parse_int(body.substr(0, semi), whole)};
    for (const auto& b : bs) v.push_back(-parse_int(b, whole));
    return DivisorClass(lat, std::move(v));
  }
  auto parts = split_commas(body);
  if (parts.size() != lat.rank())
    throw ClassSyntaxError("expected " + std::to_string(lat.rank()) + " coordinates in '" +
                           std::string(whole) + "'");
  std::vector<Integer> v;
  for (const auto& p : parts) v.push_back(parse_int(p, whole));
  return DivisorClass(lat, std::move(v));
}

// Symbol lookup: basis names plus H and K shorthands.
bool lookup_symbol(const SurfaceLattice& lat, const std::string& name, DivisorClass& out) {
  const auto& names = lat.basis_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) {
      out = lat.basis(i);
      return true;
    }
  }
  if (name == "H") {
    out = lat.hyperplane();
    return true;
  }
  if (name == "K") {
    out = lat.canonical();
    return true;
  }
  return false;
}

}  // namespace

DivisorClass parse_class(const SurfaceLattice& lat, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ClassSyntaxError("empty class");
  if (s.front() == '(' && s.back() == ')') return parse_tuple(lat, s, text);

  DivisorClass total = DivisorClass::zero(lat);
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ClassSyntaxError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    std::string digits = s.substr(i, j - i);
    i = j;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    std::string name = s.substr(i, j - i);
    i = j;
    if (digits.empty() && name.empty())
      throw ClassSyntaxError("empty term in '" + std::string(text) + "'");
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    if (sign < 0) coeff = -coeff;
    if (name.empty()) {
      if (coeff != 0) throw ClassSyntaxError("bare integer term in '" + std::string(text) + "'");
      continue;
    }
    DivisorClass sym = DivisorClass::zero(lat);
    if (!lookup_symbol(lat, name, sym))
      throw ClassSyntaxError("unknown symbol '" + name + "' for " + std::string(lat.name()));
    total += coeff * sym;
  }
  return total;
}

std::string format_class(const DivisorClass& c) {
  const auto& lat = c.lattice();
  if (lat.kind() == SurfaceKind::Quadric) return "(" + c[0].str() + "," + c[1].str() + ")";
  std::string out;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    const Integer& k = c[i];
    if (k == 0) continue;
    if (k < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Integer a = abs(k);
    if (a != 1) out += a.str();
    out += lat.basis_names()[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace cubictk
