#include "schwartz/atom.hpp"

#include <algorithm>
#include <cmath>

namespace schwartz {

GaussianAtom::GaussianAtom(Polynomial p, RealMatrix a, ComplexVector c)
    : poly_(std::move(p)), a_(std::move(a)), c_(std::move(c)) {
  const auto n = static_cast<Eigen::Index>(poly_.dimension());
  if (a_.rows() != n || a_.cols() != n) {
    throw DimensionError("GaussianAtom: quadratic form must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  require_dimension(poly_.dimension(), static_cast<std::size_t>(c_.size()), "GaussianAtom linear term");
  if (!a_.allFinite() || !c_.allFinite()) throw DomainError("GaussianAtom: non-finite parameters");
  if ((a_ - a_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
    throw DomainError("GaussianAtom: quadratic form is not symmetric");
  }
  a_ = (0.5 * (a_ + a_.transpose())).eval();
  Eigen::LDLT<RealMatrix> ldlt(a_);
  if (ldlt.info() != Eigen::Success || !(ldlt.vectorD().array() > 0.0).all()) {
    throw DomainError("GaussianAtom: quadratic form is not positive-definite");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(a_, Eigen::EigenvaluesOnly);
  lambda_min_ = eig.eigenvalues().minCoeff();
  lambda_max_ = eig.eigenvalues().maxCoeff();
  if (lambda_min_ < kMinEigenvalue) {
    throw DomainError("GaussianAtom: smallest eigenvalue " + std::to_string(lambda_min_) +
                      " is below the admissible floor");
  }
}

GaussianAtom::GaussianAtom(Polynomial p, RealMatrix a)
    : GaussianAtom(p, a, ComplexVector::Zero(static_cast<Eigen::Index>(p.dimension()))) {}

GaussianAtom GaussianAtom::with_polynomial(Polynomial p) const {
  require_dimension(dimension(), p.dimension(), "GaussianAtom::with_polynomial");
  GaussianAtom out;
  out.poly_ = std::move(p);
  out.a_ = a_;
  out.c_ = c_;
  out.lambda_min_ = lambda_min_;
  out.lambda_max_ = lambda_max_;
  return out;
}

Complex GaussianAtom::operator()(const RealVector& x) const {
  require_dimension(dimension(), static_cast<std::size_t>(x.size()), "atom_eval");
  const Complex exponent = -x.dot(a_ * x) + (c_.transpose() * x.cast<Complex>()).value();
  return poly_(x) * std::exp(exponent);
}

Real GaussianAtom::key_distance(const GaussianAtom& other) const {
  require_dimension(dimension(), other.dimension(), "GaussianAtom::key_distance");
  return std::max((a_ - other.a_).cwiseAbs().maxCoeff(), (c_ - other.c_).cwiseAbs().maxCoeff());
}

GaussianAtom gaussian(const RealMatrix& a) {
  return GaussianAtom(Polynomial::constant(static_cast<std::size_t>(a.rows()), 1.0), a);
}

GaussianAtom gaussian(const RealMatrix& a, const ComplexVector& c) {
  return GaussianAtom(Polynomial::constant(static_cast<std::size_t>(a.rows()), 1.0), a, c);
}

GaussianAtom gaussian(Real a) { return gaussian(RealMatrix::Constant(1, 1, a)); }

Complex atom_eval(const GaussianAtom& atom, const RealVector& x) { return atom(x); }

SchwartzFunction::SchwartzFunction(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw DimensionError("SchwartzFunction: dimension must be at least 1");
}

SchwartzFunction::SchwartzFunction(std::size_t dimension, std::vector<GaussianAtom> atoms)
    : SchwartzFunction(dimension) {
  for (const auto& atom : atoms) require_dimension(dimension_, atom.dimension(), "SchwartzFunction");
  atoms_ = std::move(atoms);
}

SchwartzFunction::SchwartzFunction(GaussianAtom atom)
    : SchwartzFunction(atom.dimension(), {std::move(atom)}) {}

Complex SchwartzFunction::operator()(const RealVector& x) const {
  require_dimension(dimension_, static_cast<std::size_t>(x.size()), "evaluate");
  Complex sum = 0.0;
  for (const auto& atom : atoms_) sum += atom(x);
  return sum;
}

namespace {

bool key_less(const GaussianAtom& a, const GaussianAtom& b) {
  const RealMatrix& qa = a.quadratic();
  const RealMatrix& qb = b.quadratic();
  for (Eigen::Index i = 0; i < qa.rows(); ++i) {
    for (Eigen::Index j = 0; j < qa.cols(); ++j) {
      if (qa(i, j) != qb(i, j)) return qa(i, j) < qb(i, j);
    }
  }
  const ComplexVector& ca = a.linear();
  const ComplexVector& cb = b.linear();
  for (Eigen::Index i = 0; i < ca.size(); ++i) {
    if (ca[i].real() != cb[i].real()) return ca[i].real() < cb[i].real();
    if (ca[i].imag() != cb[i].imag()) return ca[i].imag() < cb[i].imag();
  }
  return false;
}

}  // namespace

SchwartzFunction canonicalize(const SchwartzFunction& f) {
  std::vector<GaussianAtom> merged;
  for (const auto& atom : f.atoms()) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const GaussianAtom& m) {
      return m.key_distance(atom) <= kKeyMergeTolerance;
    });
    if (it == merged.end()) {
      merged.push_back(atom);
    } else {
      *it = it->with_polynomial(it->polynomial() + atom.polynomial());
    }
  }
  std::erase_if(merged, [](const GaussianAtom& a) { return a.polynomial().is_zero(); });
  std::stable_sort(merged.begin(), merged.end(), key_less);
  return SchwartzFunction(f.dimension(), std::move(merged));
}

Complex evaluate(const SchwartzFunction& f, const RealVector& x) { return f(x); }

Real coefficient_distance(const SchwartzFunction& f, const SchwartzFunction& g) {
  require_dimension(f.dimension(), g.dimension(), "coefficient_distance");
  const SchwartzFunction cf = canonicalize(f);
  const SchwartzFunction cg = canonicalize(g);
  std::vector<bool> used(cg.atoms().size(), false);
  Real d = 0.0;
  for (const auto& a : cf.atoms()) {
    bool matched = false;
    for (std::size_t k = 0; k < cg.atoms().size(); ++k) {
      if (used[k] || a.key_distance(cg.atoms()[k]) > kKeyMergeTolerance) continue;
      used[k] = true;
      matched = true;
      d = std::max(d, coefficient_distance(a.polynomial(), cg.atoms()[k].polynomial()));
      break;
    }
    if (!matched) d = std::max(d, coefficient_distance(a.polynomial(), Polynomial(f.dimension())));
  }
  for (std::size_t k = 0; k < cg.atoms().size(); ++k) {
    if (!used[k]) d = std::max(d, coefficient_distance(cg.atoms()[k].polynomial(), Polynomial(f.dimension())));
  }
  return d;
}

FunctionEvaluator::FunctionEvaluator(const SchwartzFunction& f) : n_(f.dimension()) {
  for (const auto& atom : f.atoms()) {
    Atom flat;
    flat.a.resize(n_ * n_);
    flat.c_re.resize(n_);
    flat.c_im.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) flat.a[i * n_ + j] = atom.quadratic()(i, j);
      flat.c_re[i] = atom.linear()[i].real();
      flat.c_im[i] = atom.linear()[i].imag();
      flat.oscillates = flat.oscillates || flat.c_im[i] != 0.0;
    }
    for (const auto& [alpha, coeff] : atom.polynomial().terms()) {
      flat.monomials.push_back({coeff, exponents_.size()});
      exponents_.insert(exponents_.end(), alpha.exponents().begin(), alpha.exponents().end());
    }
    atoms_.push_back(std::move(flat));
  }
}

Complex FunctionEvaluator::operator()(const Real* x) const {
  Complex sum = 0.0;
  for (const auto& atom : atoms_) {
    Real re = 0.0;
    Real im = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      Real ax = 0.0;
      for (std::size_t j = 0; j < n_; ++j) ax += atom.a[i * n_ + j] * x[j];
      re += x[i] * (atom.c_re[i] - ax);
      im += x[i] * atom.c_im[i];
    }
    Complex p = 0.0;
    for (const auto& m : atom.monomials) {
      Real v = 1.0;
      const int* e = exponents_.data() + m.exponent_offset;
      for (std::size_t j = 0; j < n_; ++j) {
        for (int k = 0; k < e[j]; ++k) v *= x[j];
      }
      p += m.coeff * v;
    }
    const Real mag = std::exp(re);
    sum += atom.oscillates ? p * Complex(mag * std::cos(im), mag * std::sin(im)) : p * mag;
  }
  return sum;
}

}  // namespace schwartz
