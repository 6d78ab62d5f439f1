#include <qfock/crystal.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qfock {

namespace {
long floordiv(long a, long b) {
  long q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}
}  // namespace

std::string letter_str(int letter) {
  if (letter == kPhi) return "phi";
  return std::to_string(letter);
}

std::string elem_str(const CrystalElem& b) {
  std::ostringstream os;
  if (b.zpow != 0) os << "z^" << b.zpow << " ";
  os << "b[" << letter_str(b.letter) << "]";
  return os.str();
}

Crystal::Crystal(AffineType type) : type_(std::move(type)) {
  const int n = type_.rank();
  switch (type_.family()) {
    case Family::A1:
      for (int j = 0; j <= n; ++j) letters_.push_back(j);
      break;
    case Family::A1k:
      for (int j = 0; j <= type_.level(); ++j) letters_.push_back(j);
      break;
    case Family::A2even:
    case Family::B1:
      for (int j = -n; j <= n; ++j) letters_.push_back(j);
      break;
    case Family::A2odd:
    case Family::D1:
      for (int j = -n; j <= n; ++j)
        if (j != 0) letters_.push_back(j);
      break;
    case Family::D2:
      for (int j = -n; j <= n; ++j) letters_.push_back(j);
      letters_.push_back(kPhi);
      break;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) index_[letters_[i]] = static_cast<int>(i);
  build_graph();
  build_weights();
}

int Crystal::idx(int letter) const {
  auto it = index_.find(letter);
  if (it == index_.end())
    throw std::invalid_argument("letter " + letter_str(letter) + " not in " + type_.str());
  return it->second;
}

void Crystal::add_arrow(int color, int from, int to) {
  f_arrow_[color][idx(from)] = idx(to);
  e_arrow_[color][idx(to)] = idx(from);
}

void Crystal::build_graph() {
  const int n = type_.rank();
  const int colors = type_.nodes();
  f_arrow_.assign(colors, std::vector<int>(letters_.size(), -1));
  e_arrow_.assign(colors, std::vector<int>(letters_.size(), -1));

  switch (type_.family()) {
    case Family::A1:
      for (int j = 1; j <= n; ++j) add_arrow(j, j - 1, j);
      add_arrow(0, n, 0);
      break;
    case Family::A1k: {
      const int k = type_.level();
      for (int j = 0; j < k; ++j) add_arrow(1, j, j + 1);
      for (int j = 1; j <= k; ++j) add_arrow(0, j, j - 1);
      break;
    }
    case Family::A2even:
      for (int i = 1; i < n; ++i) {
        add_arrow(i, i, i + 1);
        add_arrow(i, -(i + 1), -i);
      }
      add_arrow(n, n, 0);
      add_arrow(n, 0, -n);
      add_arrow(0, -1, 1);
      break;
    case Family::B1:
      add_arrow(1, 1, 2);
      add_arrow(1, -2, -1);
      add_arrow(0, -1, 2);
      add_arrow(0, -2, 1);
      for (int i = 2; i < n; ++i) {
        add_arrow(i, i, i + 1);
        add_arrow(i, -(i + 1), -i);
      }
      add_arrow(n, n, 0);
      add_arrow(n, 0, -n);
      break;
    case Family::A2odd:
      add_arrow(1, 1, 2);
      add_arrow(1, -2, -1);
      add_arrow(0, -1, 2);
      add_arrow(0, -2, 1);
      for (int i = 2; i < n; ++i) {
        add_arrow(i, i, i + 1);
        add_arrow(i, -(i + 1), -i);
      }
      add_arrow(n, n, -n);
      break;
    case Family::D1:
      add_arrow(1, 1, 2);
      add_arrow(1, -2, -1);
      add_arrow(0, -1, 2);
      add_arrow(0, -2, 1);
      for (int i = 2; i < n - 1; ++i) {
        add_arrow(i, i, i + 1);
        add_arrow(i, -(i + 1), -i);
      }
      add_arrow(n - 1, n - 1, n);
      add_arrow(n - 1, -n, -(n - 1));
      add_arrow(n, n - 1, -n);
      add_arrow(n, n, -(n - 1));
      break;
    case Family::D2:
      for (int i = 1; i < n; ++i) {
        add_arrow(i, i, i + 1);
        add_arrow(i, -(i + 1), -i);
      }
      add_arrow(n, n, 0);
      add_arrow(n, 0, -n);
      add_arrow(0, -1, kPhi);
      add_arrow(0, kPhi, 1);
      break;
  }

  // String lengths by walking the arrows (every i-string in B is a path).
  eps_.assign(colors, std::vector<long>(letters_.size(), 0));
  phi_.assign(colors, std::vector<long>(letters_.size(), 0));
  for (int i = 0; i < colors; ++i) {
    for (std::size_t b = 0; b < letters_.size(); ++b) {
      long k = 0;
      for (int cur = static_cast<int>(b); e_arrow_[i][cur] >= 0; cur = e_arrow_[i][cur]) ++k;
      eps_[i][b] = k;
      k = 0;
      for (int cur = static_cast<int>(b); f_arrow_[i][cur] >= 0; cur = f_arrow_[i][cur]) ++k;
      phi_[i][b] = k;
    }
  }
}

void Crystal::build_weights() {
  const int n = type_.rank();
  wt_.assign(letters_.size(), type_.zero_weight());
  auto L = [&](int i) { return type_.fundamental(i); };
  auto set = [&](int letter, const Weight& w) { wt_[idx(letter)] = w; };

  switch (type_.family()) {
    case Family::A1:
      for (int j = 0; j <= n; ++j) set(j, L((j + 1) % (n + 1)) - L(j));
      break;
    case Family::A1k: {
      const int k = type_.level();
      for (int j = 0; j <= k; ++j) set(j, (k - 2 * j) * (L(1) - L(0)));
      break;
    }
    case Family::A2even:
      for (int i = 1; i <= n; ++i) {
        Weight w = (1 + (i == n ? 1 : 0)) * L(i) - L(i - 1);
        set(i, w);
        set(-i, -w);
      }
      break;
    case Family::B1:
      for (int i = 1; i <= n; ++i) {
        Weight w = (1 + (i == n ? 1 : 0)) * L(i) - L(i - 1);
        if (i == 2) w -= L(0);
        set(i, w);
        set(-i, -w);
      }
      break;
    case Family::A2odd:
      for (int i = 1; i <= n; ++i) {
        Weight w = L(i) - L(i - 1);
        if (i == 2) w -= L(0);
        set(i, w);
        set(-i, -w);
      }
      break;
    case Family::D1:
      for (int i = 1; i <= n; ++i) {
        Weight w = L(i) - L(i - 1);
        if (i == n - 1) w += L(n);
        if (i == 2) w -= L(0);
        set(i, w);
        set(-i, -w);
      }
      break;
    case Family::D2:
      for (int i = 1; i <= n; ++i) {
        Weight w = (1 + (i == n ? 1 : 0)) * L(i) - (1 + (i == 1 ? 1 : 0)) * L(i - 1);
        set(i, w);
        set(-i, -w);
      }
      break;
  }
}

std::optional<CrystalElem> Crystal::f(int i, CrystalElem b) const {
  int t = f_arrow_.at(i)[idx(b.letter)];
  if (t < 0) return std::nullopt;
  return CrystalElem{letters_[t], b.zpow - (i == 0 ? 1 : 0)};
}

std::optional<CrystalElem> Crystal::e(int i, CrystalElem b) const {
  int t = e_arrow_.at(i)[idx(b.letter)];
  if (t < 0) return std::nullopt;
  return CrystalElem{letters_[t], b.zpow + (i == 0 ? 1 : 0)};
}

long Crystal::eps(int i, int letter) const { return eps_.at(i)[idx(letter)]; }
long Crystal::phi(int i, int letter) const { return phi_.at(i)[idx(letter)]; }

Weight Crystal::eps_weight(int letter) const {
  Weight w = type_.zero_weight();
  for (int i = 0; i < type_.nodes(); ++i) w.lambda(i) = eps(i, letter);
  return w;
}

Weight Crystal::phi_weight(int letter) const {
  Weight w = type_.zero_weight();
  for (int i = 0; i < type_.nodes(); ++i) w.lambda(i) = phi(i, letter);
  return w;
}

Weight Crystal::weight(CrystalElem b) const {
  Weight w = wt_[idx(b.letter)];
  w.delta() += b.zpow;
  return w;
}

int Crystal::energy_letters(int i, int j) const {
  const int n = type_.rank();
  idx(i);
  idx(j);
  // Position in the printed total order (smaller = earlier = larger letter).
  auto rank = [&](int a) {
    if (a == kPhi) return 2 * n + 1;
    if (a >= 1) return a - 1;
    if (a == 0) return n;
    return 2 * n + 1 + a;  // a in [-n,-1] -> n+1 .. 2n
  };
  switch (type_.family()) {
    case Family::A1:
      return i > j ? 1 : 0;
    case Family::A1k:
      return std::min(static_cast<long>(i), type_.level() - static_cast<long>(j));
    case Family::A2even:
      if (i == j) return i == 0 ? 1 : 0;
      return rank(i) > rank(j) ? 1 : 0;
    case Family::B1:
      if (i == -1 && j == 1) return 2;
      if (i == j) return i == 0 ? 1 : 0;
      return rank(i) > rank(j) ? 1 : 0;
    case Family::A2odd:
      if (i == -1 && j == 1) return 2;
      if (i == j) return 0;
      return rank(i) > rank(j) ? 1 : 0;
    case Family::D1:
      if (i == -1 && j == 1) return 2;
      if (i == n && j == -n) return 1;
      if (i == j) return 0;
      return rank(i) > rank(j) ? 1 : 0;
    case Family::D2: {
      if (i == kPhi && j == kPhi) return 2;
      if (i == kPhi || j == kPhi) return 1;
      if (i == j) return i == 0 ? 2 : 0;
      return rank(i) > rank(j) ? 2 : 0;
    }
  }
  throw std::logic_error("unknown family");
}

long Crystal::energy(CrystalElem b1, CrystalElem b2) const {
  return energy_letters(b1.letter, b2.letter) - b1.zpow + b2.zpow;
}

long Crystal::grade(CrystalElem b) const {
  const int n = type_.rank();
  const long h = type_.coxeter();
  const long m = b.zpow;
  const int j = b.letter;
  switch (type_.family()) {
    case Family::A1:
    case Family::A1k:
      return h * m - j;
    case Family::A2even:
    case Family::B1:
    case Family::D2:
      if (j == 0 || j == kPhi) return h * m;
      if (j >= 1) return h * m + n + 1 - j;
      return h * m - (n + 1 + j);
    case Family::A2odd:
      if (j >= 1) return h * m + n - j;
      return h * m - (n + 1 + j);
    case Family::D1:
      if (j >= 1) return h * m + n - j;
      return h * m - (n + j);
  }
  throw std::logic_error("unknown family");
}

long Crystal::tensor_eps(int i, const std::vector<CrystalElem>& w) const {
  long E = 0, P = 0;
  bool first = true;
  for (const auto& b : w) {
    long eb = eps(i, b.letter), pb = phi(i, b.letter);
    if (first) {
      E = eb;
      P = pb;
      first = false;
      continue;
    }
    long prev_wt = P - E;
    E = std::max(E - (pb - eb), eb);
    P = std::max(P, pb + prev_wt);
  }
  return E;
}

long Crystal::tensor_phi(int i, const std::vector<CrystalElem>& w) const {
  long E = 0, P = 0;
  bool first = true;
  for (const auto& b : w) {
    long eb = eps(i, b.letter), pb = phi(i, b.letter);
    if (first) {
      E = eb;
      P = pb;
      first = false;
      continue;
    }
    long prev_wt = P - E;
    E = std::max(E - (pb - eb), eb);
    P = std::max(P, pb + prev_wt);
  }
  return P;
}

namespace {
// eps_i of every proper prefix w[0..j] (1-based length j+1).
std::vector<long> prefix_eps(const Crystal& c, int i, const std::vector<CrystalElem>& w) {
  std::vector<long> E(w.size()), P(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    long eb = c.eps(i, w[j].letter), pb = c.phi(i, w[j].letter);
    if (j == 0) {
      E[0] = eb;
      P[0] = pb;
    } else {
      long prev_wt = P[j - 1] - E[j - 1];
      E[j] = std::max(E[j - 1] - (pb - eb), eb);
      P[j] = std::max(P[j - 1], pb + prev_wt);
    }
  }
  return E;
}
}  // namespace

std::optional<std::pair<std::size_t, CrystalElem>> Crystal::tensor_f(
    int i, const std::vector<CrystalElem>& w) const {
  if (w.empty()) throw std::invalid_argument("tensor_f on empty word");
  auto E = prefix_eps(*this, i, w);
  std::size_t pos = w.size() - 1;
  while (pos > 0 && E[pos - 1] >= phi(i, w[pos].letter)) --pos;
  auto nb = f(i, w[pos]);
  if (!nb) return std::nullopt;
  return std::make_pair(pos, *nb);
}

std::optional<std::pair<std::size_t, CrystalElem>> Crystal::tensor_e(
    int i, const std::vector<CrystalElem>& w) const {
  if (w.empty()) throw std::invalid_argument("tensor_e on empty word");
  auto E = prefix_eps(*this, i, w);
  std::size_t pos = w.size() - 1;
  while (pos > 0 && E[pos - 1] > phi(i, w[pos].letter)) --pos;
  auto nb = e(i, w[pos]);
  if (!nb) return std::nullopt;
  return std::make_pair(pos, *nb);
}

int Crystal::branches() const {
  switch (type_.family()) {
    case Family::A1:
    case Family::A2even:
    case Family::A2odd:
      return 1;
    case Family::B1:
    case Family::D1:
    case Family::D2:
      return 2;
    case Family::A1k:
      return type_.level() + 1;
  }
  throw std::logic_error("unknown family");
}

CrystalElem Crystal::ground(int kappa, long m) const {
  if (kappa < 0 || kappa >= branches())
    throw std::invalid_argument("invalid ground-state branch");
  const int n = type_.rank();
  const bool even = ((m % 2) + 2) % 2 == 0;
  switch (type_.family()) {
    case Family::A1: {
      const long h = n + 1;
      long a = floordiv(m + h - 1, h);
      return {static_cast<int>(a * h - m), a};
    }
    case Family::A2even:
      return {0, 0};
    case Family::B1:
      if (kappa == 0) return {0, 0};
      return even ? CrystalElem{1, 0} : CrystalElem{-1, 1};
    case Family::A2odd:
      return even ? CrystalElem{1, 0} : CrystalElem{-1, 1};
    case Family::D1:
      if (kappa == 0) return even ? CrystalElem{n, 0} : CrystalElem{-n, 0};
      return even ? CrystalElem{1, 0} : CrystalElem{-1, 1};
    case Family::D2:
      return {kappa == 0 ? 0 : kPhi, -m};
    case Family::A1k: {
      const long k = type_.level();
      if (even) {
        long ell = m / 2;
        return {static_cast<int>(k - kappa), -ell * (k - 2) - kappa + 1};
      }
      long ell = (m + 1) / 2;
      return {kappa, -ell * (k - 2)};
    }
  }
  throw std::logic_error("unknown family");
}

Weight Crystal::ground_weight(int kappa, long m) const {
  Weight lam = phi_weight(ground(kappa, 0).letter);
  if (m >= 0) {
    for (long j = 0; j < m; ++j) lam -= weight(ground(kappa, j));
  } else {
    for (long j = m; j < 0; ++j) lam += weight(ground(kappa, j));
  }
  return lam;
}

int Crystal::period(int kappa) const {
  if (kappa < 0 || kappa >= branches())
    throw std::invalid_argument("invalid ground-state branch");
  switch (type_.family()) {
    case Family::A1:
      return type_.rank() + 1;
    case Family::A2even:
    case Family::D2:
      return 1;
    case Family::B1:
      return kappa == 0 ? 1 : 2;
    case Family::A2odd:
    case Family::D1:
      return 2;
    case Family::A1k:
      return 2;
  }
  throw std::logic_error("unknown family");
}

long Crystal::period_shift(int kappa) const {
  if (kappa < 0 || kappa >= branches())
    throw std::invalid_argument("invalid ground-state branch");
  switch (type_.family()) {
    case Family::A1:
      return 1;
    case Family::A2even:
    case Family::B1:
    case Family::A2odd:
    case Family::D1:
      return 0;
    case Family::D2:
      return -1;
    case Family::A1k:
      return -(type_.level() - 2);
  }
  throw std::logic_error("unknown family");
}

std::vector<int> Crystal::minimal_letters() const {
  std::vector<int> out;
  for (int j : letters_)
    if (type_.level_of(eps_weight(j)) == type_.level()) out.push_back(j);
  return out;
}

PerfectReport check_perfect(const Crystal& crystal) {
  const AffineType& type = crystal.type();
  PerfectReport report;
  report.level = type.level();
  report.minimal = crystal.minimal_letters();

  // Dominant classical weights of the crystal's level, as coefficient tuples.
  std::set<std::vector<long>> dominant;
  std::vector<long> coeff(type.nodes(), 0);
  auto enumerate = [&](auto&& self, int i, int remaining) -> void {
    if (i == type.nodes()) {
      if (remaining == 0) dominant.insert(coeff);
      return;
    }
    for (long m = 0; m * type.comark(i) <= remaining; ++m) {
      coeff[i] = m;
      self(self, i + 1, remaining - static_cast<int>(m) * type.comark(i));
    }
    coeff[i] = 0;
  };
  enumerate(enumerate, 0, report.level);

  auto classical = [&](const Weight& w) {
    std::vector<long> v(type.nodes());
    for (int i = 0; i < type.nodes(); ++i) v[i] = w.lambda(i);
    return v;
  };
  std::set<std::vector<long>> eps_image, phi_image;
  for (int letter : report.minimal) {
    eps_image.insert(classical(crystal.eps_weight(letter)));
    phi_image.insert(classical(crystal.phi_weight(letter)));
  }
  const std::size_t m = report.minimal.size();
  report.eps_bijective = eps_image == dominant && eps_image.size() == m;
  report.phi_bijective = phi_image == dominant && phi_image.size() == m;

  // Connectivity of B (x) B under the tensor operators (z-powers dropped).
  const auto& letters = crystal.letters();
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> queue{{letters[0], letters[0]}};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    auto [l1, l2] = queue.back();
    queue.pop_back();
    std::vector<CrystalElem> word{{l1, 0}, {l2, 0}};
    for (int i = 0; i < type.nodes(); ++i) {
      for (bool lower : {false, true}) {
        auto step = lower ? crystal.tensor_f(i, word) : crystal.tensor_e(i, word);
        if (!step) continue;
        auto next = std::make_pair(step->first == 0 ? step->second.letter : l1,
                                   step->first == 1 ? step->second.letter : l2);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  report.pair_connected = seen.size() == letters.size() * letters.size();
  return report;
}

}  // namespace qfock
