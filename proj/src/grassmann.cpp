#include "grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sqz::grassmann {

GeneratorSet::GeneratorSet(std::vector<std::string> names,
                           std::vector<std::size_t> partner)
    : names_(std::move(names)), partner_(std::move(partner)) {
  if (names_.empty() || names_.size() > 64)
    throw std::invalid_argument("generator set must contain 1..64 labels");
  if (partner_.size() != names_.size())
    throw std::invalid_argument("partner table size mismatch");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (partner_[i] >= names_.size() || partner_[i] == i ||
        partner_[partner_[i]] != i)
      throw std::invalid_argument("conjugation pairing must be an involution");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("generator labels must be unique");
  }
}

std::shared_ptr<const GeneratorSet> GeneratorSet::conjugate_pairs(
    const std::vector<std::string>& base_names) {
  std::vector<std::string> names;
  std::vector<std::size_t> partner;
  for (const auto& b : base_names) {
    names.push_back(b);
    names.push_back(b + "*");
    partner.push_back(names.size() - 1);
    partner.push_back(names.size() - 2);
  }
  return std::make_shared<GeneratorSet>(std::move(names), std::move(partner));
}

bool GeneratorSet::same_as(const GeneratorSet& other) const {
  return names_ == other.names_ && partner_ == other.partner_;
}

int mul_sign(Monomial a, Monomial b) {
  if (a & b) return 0;
  // Inversions: pairs (i in a, j in b) with j < i.
  int inv = 0;
  Monomial rest = a;
  while (rest) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    inv += std::popcount(b & ((Monomial{1} << i) - 1));
  }
  return (inv & 1) ? -1 : 1;
}

Element Element::scalar(GeneratorSetPtr gens, Complex c) {
  Element e(std::move(gens));
  e.insert(0, c);
  return e;
}

Element Element::generator(GeneratorSetPtr gens, std::size_t index) {
  if (index >= gens->size())
    throw std::invalid_argument("generator index out of range");
  Element e(std::move(gens));
  e.insert(Monomial{1} << index, Complex(1.0, 0.0));
  return e;
}

Element Element::monomial(GeneratorSetPtr gens, Monomial m, Complex c) {
  if (gens->size() < 64 && (m >> gens->size()) != 0)
    throw std::invalid_argument("monomial uses generators outside the set");
  Element e(std::move(gens));
  e.insert(m, c);
  return e;
}

Complex Element::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void Element::insert(Monomial m, Complex c) {
  if (c == Complex(0.0, 0.0)) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
}

void Element::check_set(const Element& rhs) const {
  if (gens_.get() != rhs.gens_.get() && !gens_->same_as(*rhs.gens_))
    throw std::invalid_argument("mismatched generator sets");
}

Element Element::operator+(const Element& rhs) const {
  check_set(rhs);
  Element out = *this;
  for (const auto& [m, c] : rhs.terms_) out.insert(m, c);
  return out;
}

Element Element::operator-(const Element& rhs) const {
  check_set(rhs);
  Element out = *this;
  for (const auto& [m, c] : rhs.terms_) out.insert(m, -c);
  return out;
}

Element Element::operator*(const Element& rhs) const {
  check_set(rhs);
  Element out(gens_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      const int s = mul_sign(ma, mb);
      if (s == 0) continue;
      out.insert(ma | mb, double(s) * ca * cb);
    }
  }
  return out;
}

Element Element::operator*(Complex c) const {
  Element out(gens_);
  for (const auto& [m, v] : terms_) out.insert(m, v * c);
  return out;
}

Element Element::conjugate() const {
  Element out(gens_);
  for (const auto& [m, c] : terms_) {
    // Factors of the canonical monomial, reversed, with each generator mapped
    // to its partner; the sign is the parity of the permutation that sorts
    // the resulting sequence back into ascending order.
    std::vector<std::size_t> seq;
    for (int i = 63; i >= 0; --i)
      if (m >> i & 1) seq.push_back(gens_->partner(std::size_t(i)));
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j)
        if (seq[i] > seq[j]) ++inv;
    Monomial mc = 0;
    for (auto g : seq) mc |= Monomial{1} << g;
    out.insert(mc, ((inv & 1) ? -1.0 : 1.0) * std::conj(c));
  }
  return out;
}

Element Element::berezin(std::size_t var) const {
  if (var >= gens_->size())
    throw std::invalid_argument("integration variable outside generator set");
  Element out(gens_);
  const Monomial bit = Monomial{1} << var;
  for (const auto& [m, c] : terms_) {
    if (!(m & bit)) continue;
    const int below = std::popcount(m & (bit - 1));
    out.insert(m & ~bit, ((below & 1) ? -1.0 : 1.0) * c);
  }
  return out;
}

bool Element::is_scalar() const {
  for (const auto& [m, c] : terms_)
    if (m != 0) return false;
  return true;
}

int Element::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

int Element::homogeneous_parity() const {
  int p = -1;
  for (const auto& [m, c] : terms_) {
    if (p < 0)
      p = parity(m);
    else if (p != parity(m))
      return -1;
  }
  return p < 0 ? 0 : p;
}

double Element::max_abs_diff(const Element& rhs) const {
  check_set(rhs);
  double dev = 0.0;
  for (const auto& [m, c] : terms_) dev = std::max(dev, std::abs(c - rhs.coeff(m)));
  for (const auto& [m, c] : rhs.terms_) dev = std::max(dev, std::abs(c - coeff(m)));
  return dev;
}

double Element::max_abs() const {
  double v = 0.0;
  for (const auto& [m, c] : terms_) v = std::max(v, std::abs(c));
  return v;
}

namespace {

std::string format_coeff(Complex c) {
  std::ostringstream os;
  os.precision(15);
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
  }
  return os.str();
}

}  // namespace

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_coeff(c);
    Monomial rest = m;
    while (rest) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      os << " " << gens_->name(std::size_t(i));
    }
  }
  return os.str();
}

}  // namespace sqz::grassmann
