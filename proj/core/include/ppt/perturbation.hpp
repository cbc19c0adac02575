#ifndef PPT_PERTURBATION_HPP
#define PPT_PERTURBATION_HPP

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "ppt/geometry.hpp"
#include "ppt/rigidity.hpp"

namespace ppt {

/// Index of the unordered pair {i,j} among the n(n-1)/2 pairs in
/// lexicographic order.
std::size_t pair_index(std::size_t n, Edge e);
std::vector<Edge> all_pairs(std::size_t n);

/// Right-hand sides f_ij of the constraints strain_ij >= f_ij, one per pair.
class PerturbationTable {
 public:
  PerturbationTable() = default;
  explicit PerturbationTable(std::size_t n) : n_(n), values_(n * (n - 1) / 2) {}

  std::size_t point_count() const noexcept { return n_; }
  const Rational& operator[](Edge e) const { return values_[pair_index(n_, e)]; }
  Rational& operator[](Edge e) { return values_[pair_index(n_, e)]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  friend bool operator==(const PerturbationTable&, const PerturbationTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

/// f_ij = det(a,p_i,p_j) det(b,p_i,p_j).
struct DetProduct {
  Point a;
  Point b;
};
/// f_ij = (|p_i|^2 + |p_j|^2 + <p_i,p_j>) |p_i - p_j|^2 / 2.
struct NormHeuristic {};
struct ExplicitTable {
  PerturbationTable table;
};
using FScheme = std::variant<DetProduct, NormHeuristic, ExplicitTable>;

Point centroid(const PointSet& ps);
/// DetProduct with a = b = centroid.
FScheme default_scheme(const PointSet& ps);

/// Throws InputError when an explicit table has the wrong size.
PerturbationTable make_f(const PointSet& ps, const FScheme& scheme);

using Quadruple = std::array<std::size_t, 4>;
std::vector<Quadruple> all_quadruples(std::size_t n);

/// sum over the six pairs of the quadruple of w_ij * value(ij), with w the
/// four-point stress.
template <class Lookup>
Rational stress_pairing(const PointSet& ps, const Quadruple& q, Lookup&& value);

struct QuadrupleValue {
  Quadruple quad;
  Rational r;
};

struct ValidityReport {
  bool valid = false;
  std::vector<QuadrupleValue> witnesses;  // every quadruple with its R

  std::vector<QuadrupleValue> failures() const;  // those with R <= 0
};

/// f is valid iff R = sum w_ij f_ij > 0 on every quadruple.
ValidityReport check_validity(const PointSet& ps, const PerturbationTable& f);

template <class Lookup>
Rational stress_pairing(const PointSet& ps, const Quadruple& q, Lookup&& value) {
  const Stress w = four_point_stress(ps, q);
  Rational sum = 0;
  for (const auto& [e, weight] : w.weights) sum += weight * value(e);
  return sum;
}

}  // namespace ppt

#endif  // PPT_PERTURBATION_HPP
