#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace chronoloop {

using Complex = std::complex<double>;

/// Tolerance used wherever an operation does not take one explicitly.
inline constexpr double kUnitaryTol = 1e-12;

/// Default cap on the condition estimate accepted by solve_linear.
inline constexpr double kCondLimit = 1e12;

/// Vector of complex amplitudes for the internal degree of freedom carried
/// through one spatial channel. Construction rejects NaN/Inf components.
class State {
 public:
  State() = default;

  /// Zero state of the given dimension.
  explicit State(std::size_t dim) : amplitudes_(dim, Complex{0.0, 0.0}) {}

  explicit State(std::vector<Complex> amplitudes);

  /// Unit amplitude in component `index`, zero elsewhere.
  static State basis(std::size_t dim, std::size_t index);

  std::size_t size() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  auto begin() const { return amplitudes_.begin(); }
  auto end() const { return amplitudes_.end(); }

  bool operator==(const State&) const = default;

 private:
  std::vector<Complex> amplitudes_;
};

State operator+(const State& x, const State& y);
State operator-(const State& x, const State& y);
State operator*(const Complex& c, const State& x);
State operator*(double c, const State& x);

/// Sum of |a_i|^2.
double norm_sq(const State& s);
double norm(const State& s);

/// Dense square complex matrix, row-major. Construction rejects NaN/Inf
/// entries.
class Operator {
 public:
  Operator() = default;

  /// Zero matrix of the given dimension.
  explicit Operator(std::size_t dim)
      : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

  Operator(std::size_t dim, std::vector<Complex> entries);

  static Operator identity(std::size_t dim);
  static Operator zero(std::size_t dim) { return Operator(dim); }

  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  Operator adjoint() const;

  bool operator==(const Operator&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Complex& c, const Operator& a);
Operator operator*(double c, const Operator& a);
Operator operator*(const Operator& a, const Operator& b);

/// Matrix-vector product op * s. Throws std::invalid_argument on dimension
/// mismatch.
State apply(const Operator& op, const State& s);

/// True iff the max-entry deviation of op† * op from the identity is at most
/// tol. A global phase does not spoil unitarity.
bool is_unitary(const Operator& op, double tol = kUnitaryTol);

/// Solves a * x = b by LU factorization with partial pivoting, plus one step
/// of iterative refinement. The returned x satisfies
/// ‖a·x − b‖ ≤ 1e-10·max(1, ‖b‖).
///
/// Throws SingularError when a pivot vanishes or the condition bound taken
/// from the factorization diagonal, max(1, max|u_ii|) / min|u_ii|, exceeds
/// cond_limit. The numerator is floored at 1 because amplitudes and
/// propagators in this domain are unit-scale (the residual contract uses
/// the same floor); a system whose every pivot sits at machine-noise scale
/// is then reported as singular rather than solved to a garbage magnitude.
State solve_linear(const Operator& a, const State& b,
                   double cond_limit = kCondLimit);

}  // namespace chronoloop
