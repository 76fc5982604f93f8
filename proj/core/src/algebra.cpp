#include "chronoloop/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chronoloop/errors.hpp"

namespace chronoloop {

namespace {

void require_finite(const Complex& c, const char* what) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw std::invalid_argument(std::string(what) +
                                " must have finite components");
  }
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string("dimension mismatch in ") + what +
                                ": " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

}  // namespace

State::State(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  for (const auto& a : amplitudes_) {
    require_finite(a, "state amplitude");
  }
}

State State::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  State s(dim);
  s[index] = Complex{1.0, 0.0};
  return s;
}

State operator+(const State& x, const State& y) {
  require_same_size(x.size(), y.size(), "state addition");
  State out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] + y[i];
  }
  return out;
}

State operator-(const State& x, const State& y) {
  require_same_size(x.size(), y.size(), "state subtraction");
  State out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] - y[i];
  }
  return out;
}

State operator*(const Complex& c, const State& x) {
  State out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = c * x[i];
  }
  return out;
}

State operator*(double c, const State& x) {
  State out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = c * x[i];
  }
  return out;
}

double norm_sq(const State& s) {
  double total = 0.0;
  for (const auto& a : s) {
    total += a.real() * a.real() + a.imag() * a.imag();
  }
  return total;
}

double norm(const State& s) { return std::sqrt(norm_sq(s)); }

Operator::Operator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("operator entries must form a square matrix");
  }
  for (const auto& e : entries_) {
    require_finite(e, "operator entry");
  }
}

Operator Operator::identity(std::size_t dim) {
  Operator op(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    op(i, i) = Complex{1.0, 0.0};
  }
  return op;
}

Operator Operator::adjoint() const {
  Operator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_size(a.dim(), b.dim(), "operator addition");
  Operator out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      out(i, j) = a(i, j) + b(i, j);
    }
  }
  return out;
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_size(a.dim(), b.dim(), "operator subtraction");
  Operator out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      out(i, j) = a(i, j) - b(i, j);
    }
  }
  return out;
}

Operator operator*(const Complex& c, const Operator& a) {
  Operator out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      out(i, j) = c * a(i, j);
    }
  }
  return out;
}

Operator operator*(double c, const Operator& a) {
  return Complex{c, 0.0} * a;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_size(a.dim(), b.dim(), "operator product");
  Operator out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < a.dim(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

State apply(const Operator& op, const State& s) {
  require_same_size(op.dim(), s.size(), "operator application");
  State out(op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < op.dim(); ++j) {
      acc += op(i, j) * s[j];
    }
    out[i] = acc;
  }
  return out;
}

bool is_unitary(const Operator& op, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("unitarity tolerance must be positive");
  }
  const Operator product = op.adjoint() * op;
  double max_dev = 0.0;
  for (std::size_t i = 0; i < op.dim(); ++i) {
    for (std::size_t j = 0; j < op.dim(); ++j) {
      const Complex expected = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      max_dev = std::max(max_dev, std::abs(product(i, j) - expected));
    }
  }
  return max_dev <= tol;
}

namespace {

struct LuFactors {
  std::size_t dim;
  std::vector<Complex> lu;       // packed L (unit diag) and U
  std::vector<std::size_t> piv;  // row permutation

  State solve(const State& b) const {
    State y(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      Complex acc = b[piv[i]];
      for (std::size_t j = 0; j < i; ++j) {
        acc -= lu[i * dim + j] * y[j];
      }
      y[i] = acc;
    }
    State x(dim);
    for (std::size_t ii = dim; ii-- > 0;) {
      Complex acc = y[ii];
      for (std::size_t j = ii + 1; j < dim; ++j) {
        acc -= lu[ii * dim + j] * x[j];
      }
      x[ii] = acc / lu[ii * dim + ii];
    }
    return x;
  }
};

LuFactors factorize(const Operator& a, double cond_limit) {
  const std::size_t d = a.dim();
  LuFactors f{d, std::vector<Complex>(a.entries()), std::vector<std::size_t>(d)};
  std::iota(f.piv.begin(), f.piv.end(), std::size_t{0});

  // Row-swapping partial pivoting; the permutation is tracked in piv.
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t best = k;
    double best_mag = std::abs(f.lu[k * d + k]);
    for (std::size_t r = k + 1; r < d; ++r) {
      const double mag = std::abs(f.lu[r * d + k]);
      if (mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best_mag == 0.0) {
      throw SingularError("matrix is singular");
    }
    if (best != k) {
      for (std::size_t c = 0; c < d; ++c) {
        std::swap(f.lu[k * d + c], f.lu[best * d + c]);
      }
      std::swap(f.piv[k], f.piv[best]);
    }
    const Complex pivot = f.lu[k * d + k];
    for (std::size_t r = k + 1; r < d; ++r) {
      const Complex factor = f.lu[r * d + k] / pivot;
      f.lu[r * d + k] = factor;
      for (std::size_t c = k + 1; c < d; ++c) {
        f.lu[r * d + c] -= factor * f.lu[k * d + c];
      }
    }
  }

  double max_diag = 0.0;
  double min_diag = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < d; ++k) {
    const double mag = std::abs(f.lu[k * d + k]);
    max_diag = std::max(max_diag, mag);
    min_diag = std::min(min_diag, mag);
  }
  // Unit-scale floor: pivots uniformly at machine-noise scale mean the
  // system was assembled by catastrophic cancellation and has no usable
  // solution at this precision.
  const double cond_estimate = std::max(1.0, max_diag) / min_diag;
  if (min_diag == 0.0 || cond_estimate > cond_limit) {
    throw SingularError("condition estimate " + std::to_string(cond_estimate) +
                        " exceeds limit");
  }
  return f;
}

}  // namespace

State solve_linear(const Operator& a, const State& b, double cond_limit) {
  require_same_size(a.dim(), b.size(), "linear solve");
  if (!(cond_limit > 0.0)) {
    throw std::invalid_argument("cond_limit must be positive");
  }
  if (a.dim() == 0) {
    return State();
  }

  const LuFactors factors = factorize(a, cond_limit);
  State x = factors.solve(b);

  // One refinement step, then enforce the residual contract.
  State residual = b - apply(a, x);
  x = x + factors.solve(residual);
  residual = b - apply(a, x);
  if (norm(residual) > 1e-10 * std::max(1.0, norm(b))) {
    throw SingularError("solution residual exceeds contract; system treated "
                        "as numerically singular");
  }
  return x;
}

}  // namespace chronoloop
