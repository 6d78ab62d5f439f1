#include <qfock/vaff.hpp>

#include <qfock/qint.hpp>

#include <sstream>

namespace qfock {

VaffVector VaffVector::unit(const CrystalElem& b, const RatQ& c) {
  VaffVector v;
  v.add(b, c);
  return v;
}

void VaffVector::add(const CrystalElem& b, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

RatQ VaffVector::coeff(const CrystalElem& b) const {
  auto it = terms.find(b);
  return it == terms.end() ? RatQ() : it->second;
}

VaffVector& VaffVector::operator+=(const VaffVector& o) {
  for (const auto& [b, c] : o.terms) add(b, c);
  return *this;
}

VaffVector& VaffVector::operator-=(const VaffVector& o) {
  for (const auto& [b, c] : o.terms) add(b, -c);
  return *this;
}

void VaffVector::scale(const RatQ& c) {
  if (c.is_zero()) {
    terms.clear();
    return;
  }
  for (auto& [b, coeff] : terms) coeff *= c;
}

std::string VaffVector::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") " << elem_str(b);
  }
  return os.str();
}

std::string Gen::str() const {
  switch (kind) {
    case Kind::kE:
      return "e_" + std::to_string(color);
    case Kind::kF:
      return "f_" + std::to_string(color);
    case Kind::kT:
      return "t_" + std::to_string(color);
    case Kind::kTinv:
      return "t_" + std::to_string(color) + "^-1";
    case Kind::kZ:
      return "z^" + std::to_string(shift);
  }
  return "?";
}

VaffVector vaff_act(const Crystal& crystal, const Gen& g, const VaffVector& v) {
  const long di = crystal.type().d(g.color);
  VaffVector out;
  for (const auto& [b, c] : v.terms) {
    switch (g.kind) {
      case Gen::Kind::kE: {
        if (auto eb = crystal.e(g.color, b))
          out.add(*eb, c * qint(crystal.phi(g.color, b.letter) + 1, di));
        break;
      }
      case Gen::Kind::kF: {
        if (auto fb = crystal.f(g.color, b))
          out.add(*fb, c * qint(crystal.eps(g.color, b.letter) + 1, di));
        break;
      }
      case Gen::Kind::kT:
        out.add(b, c * RatQ::q(di * crystal.weight(b).pair_h(g.color)));
        break;
      case Gen::Kind::kTinv:
        out.add(b, c * RatQ::q(-di * crystal.weight(b).pair_h(g.color)));
        break;
      case Gen::Kind::kZ:
        out.add(b.shifted(g.shift), c);
        break;
    }
  }
  return out;
}

}  // namespace qfock
