#include "superop.hpp"

#include <sstream>
#include <stdexcept>

#include "linalg.hpp"

namespace sqz::grassmann {

namespace {

// Splits a matrix into Fock-parity-even and odd parts.
void split_parity(const Eigen::MatrixXcd& m, Eigen::MatrixXcd& even,
                  Eigen::MatrixXcd& odd) {
  even = m;
  odd = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if ((SuperOperator::fock_parity(i) ^ SuperOperator::fock_parity(j)) == 0)
        odd(i, j) = 0.0;
      else
        even(i, j) = 0.0;
    }
}

constexpr double kPruneTol = 0.0;  // exact zero pruning only

}  // namespace

SuperOperator::SuperOperator(GeneratorSetPtr gens, int fock_dim)
    : gens_(std::move(gens)), dim_(fock_dim) {
  if (dim_ != 2 && dim_ != 4)
    throw std::invalid_argument("fock_dim must be 2 (one mode) or 4 (two modes)");
}

SuperOperator SuperOperator::identity(GeneratorSetPtr gens, int fock_dim) {
  SuperOperator out(std::move(gens), fock_dim);
  out.insert(0, Eigen::MatrixXcd::Identity(fock_dim, fock_dim));
  return out;
}

SuperOperator SuperOperator::from_matrix(GeneratorSetPtr gens,
                                         const Eigen::MatrixXcd& mat) {
  if (mat.rows() != mat.cols() || (mat.rows() != 2 && mat.rows() != 4))
    throw std::invalid_argument("matrix must be 2x2 or 4x4");
  SuperOperator out(std::move(gens), int(mat.rows()));
  out.insert(0, mat);
  return out;
}

SuperOperator SuperOperator::from_element(int fock_dim, const Element& x) {
  SuperOperator out(x.generators(), fock_dim);
  for (const auto& [m, c] : x.terms())
    out.insert(m, c * Eigen::MatrixXcd::Identity(fock_dim, fock_dim));
  return out;
}

void SuperOperator::insert(Monomial m, const Eigen::MatrixXcd& mat) {
  if (mat.cwiseAbs().maxCoeff() <= kPruneTol) return;
  auto [it, fresh] = terms_.emplace(m, mat);
  if (!fresh) {
    it->second += mat;
    if (it->second.cwiseAbs().maxCoeff() <= kPruneTol) terms_.erase(it);
  }
}

void SuperOperator::check_compat(const SuperOperator& rhs) const {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("mismatched Fock dimensions");
  if (gens_.get() != rhs.gens_.get() && !gens_->same_as(*rhs.gens_))
    throw std::invalid_argument("mismatched generator sets");
}

SuperOperator SuperOperator::operator+(const SuperOperator& rhs) const {
  check_compat(rhs);
  SuperOperator out = *this;
  for (const auto& [m, mat] : rhs.terms_) out.insert(m, mat);
  return out;
}

SuperOperator SuperOperator::operator-(const SuperOperator& rhs) const {
  check_compat(rhs);
  SuperOperator out = *this;
  for (const auto& [m, mat] : rhs.terms_) out.insert(m, -mat);
  return out;
}

SuperOperator SuperOperator::operator*(const SuperOperator& rhs) const {
  check_compat(rhs);
  SuperOperator out(gens_, dim_);
  for (const auto& [mx, ax] : terms_) {
    const int px = parity(mx);
    for (const auto& [my, ay] : rhs.terms_) {
      const int s = mul_sign(mx, my);
      if (s == 0) continue;
      Eigen::MatrixXcd even, odd;
      split_parity(ay, even, odd);
      Eigen::MatrixXcd prod = ax * even;
      if (px)
        prod -= ax * odd;
      else
        prod += ax * odd;
      out.insert(mx | my, double(s) * prod);
    }
  }
  return out;
}

SuperOperator SuperOperator::operator*(Complex c) const {
  SuperOperator out(gens_, dim_);
  for (const auto& [m, mat] : terms_) out.insert(m, c * mat);
  return out;
}

SuperOperator SuperOperator::dagger() const {
  SuperOperator out(gens_, dim_);
  for (const auto& [m, mat] : terms_) {
    // Conjugate monomial and its reordering sign.
    const Element xc = Element::monomial(gens_, m, Complex(1.0, 0.0)).conjugate();
    const auto& [mc, sc] = *xc.terms().begin();
    Eigen::MatrixXcd even, odd;
    split_parity(mat, even, odd);
    // (A (x) x)+ = (-1)^{|A||x|} A+ (x) x*
    Eigen::MatrixXcd adj = even.adjoint();
    if (parity(m))
      adj -= odd.adjoint();
    else
      adj += odd.adjoint();
    out.insert(mc, sc * adj);
  }
  return out;
}

Element SuperOperator::trace() const {
  Element out(gens_);
  for (const auto& [m, mat] : terms_)
    out = out + Element::monomial(gens_, m, mat.trace());
  return out;
}

Element SuperOperator::matrix_element(int m, int n) const {
  if (m < 0 || m >= dim_ || n < 0 || n >= dim_)
    throw std::invalid_argument("matrix element index out of range");
  Element out(gens_);
  for (const auto& [mono, mat] : terms_) {
    const double sign = (parity(mono) && fock_parity(n)) ? -1.0 : 1.0;
    out = out + Element::monomial(gens_, mono, sign * mat(m, n));
  }
  return out;
}

SuperOperator SuperOperator::partial_trace_b() const {
  if (dim_ != 4)
    throw std::invalid_argument("partial trace requires the two-mode space");
  SuperOperator out(gens_, 2);
  for (const auto& [m, mat] : terms_) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(2, 2);
    for (int ma = 0; ma < 2; ++ma)
      for (int na = 0; na < 2; ++na)
        for (int rr = 0; rr < 2; ++rr) r(ma, na) += mat(2 * ma + rr, 2 * na + rr);
    out.insert(m, r);
  }
  return out;
}

double SuperOperator::max_abs_diff(const SuperOperator& rhs) const {
  check_compat(rhs);
  double dev = 0.0;
  auto entry = [&](const SuperOperator& x, Monomial m) -> Eigen::MatrixXcd {
    auto it = x.terms_.find(m);
    if (it == x.terms_.end()) return Eigen::MatrixXcd::Zero(x.dim_, x.dim_);
    return it->second;
  };
  for (const auto& [m, mat] : terms_)
    dev = std::max(dev, (mat - entry(rhs, m)).cwiseAbs().maxCoeff());
  for (const auto& [m, mat] : rhs.terms_)
    dev = std::max(dev, (mat - entry(*this, m)).cwiseAbs().maxCoeff());
  return dev;
}

double SuperOperator::max_abs() const {
  double v = 0.0;
  for (const auto& [m, mat] : terms_)
    v = std::max(v, mat.cwiseAbs().maxCoeff());
  return v;
}

std::string SuperOperator::to_string() const {
  std::ostringstream os;
  for (int m = 0; m < dim_; ++m) {
    for (int n = 0; n < dim_; ++n) {
      os << "[" << m << "," << n << "] " << matrix_element(m, n).to_string()
         << "\n";
    }
  }
  return os.str();
}

SuperOperator super_exp_nilpotent(const SuperOperator& x, int max_order) {
  SuperOperator out = SuperOperator::identity(x.generators(), x.fock_dim());
  SuperOperator term = out;
  for (int k = 1; k <= max_order; ++k) {
    term = term * x * Complex(1.0 / double(k), 0.0);
    if (term.is_zero()) return out;
    out = out + term;
  }
  if (!(term * x).is_zero())
    throw std::runtime_error("exponent is not nilpotent within max_order");
  return out;
}

Eigen::MatrixXcd fermion_mode_a(int fock_dim) {
  Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(2, 2);
  a1(0, 1) = 1.0;
  if (fock_dim == 2) return a1;
  if (fock_dim != 4) throw std::invalid_argument("fock_dim must be 2 or 4");
  return linalg::kron(a1, Eigen::MatrixXcd::Identity(2, 2));
}

Eigen::MatrixXcd fermion_mode_b() {
  Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(2, 2);
  a1(0, 1) = 1.0;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2, 2);
  p(0, 0) = 1.0;
  p(1, 1) = -1.0;
  return linalg::kron(p, a1);
}

}  // namespace sqz::grassmann
