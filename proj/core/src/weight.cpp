#include <qfock/weight.hpp>

#include <sstream>
#include <stdexcept>

namespace qfock {

namespace {
void check_sizes(const Weight& a, const Weight& b) {
  if (a.nodes() != b.nodes())
    throw std::invalid_argument("weight arithmetic on mismatched node counts");
}
}  // namespace

bool Weight::is_zero() const {
  if (delta_ != 0) return false;
  for (long c : lam_)
    if (c != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  check_sizes(*this, o);
  for (std::size_t i = 0; i < lam_.size(); ++i) lam_[i] += o.lam_[i];
  delta_ += o.delta_;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  check_sizes(*this, o);
  for (std::size_t i = 0; i < lam_.size(); ++i) lam_[i] -= o.lam_[i];
  delta_ -= o.delta_;
  return *this;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& c : r.lam_) c = -c;
  r.delta_ = -r.delta_;
  return r;
}

Weight operator*(long s, Weight w) {
  for (auto& c : w.lam_) c *= s;
  w.delta_ *= s;
  return w;
}

std::string Weight::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const std::string& t, bool neg) {
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << t;
  };
  for (std::size_t i = 0; i < lam_.size(); ++i) {
    if (lam_[i] == 0) continue;
    long a = lam_[i] < 0 ? -lam_[i] : lam_[i];
    std::ostringstream t;
    if (a != 1) t << a << "*";
    t << "L" << i;
    term(t.str(), lam_[i] < 0);
  }
  if (delta_ != 0) {
    Rational a = delta_ < 0 ? Rational(-delta_) : delta_;
    std::ostringstream t;
    if (a != 1) t << a.get_str() << "*";
    t << "d";
    term(t.str(), delta_ < 0);
  }
  if (first) return "0";
  return os.str();
}

}  // namespace qfock
