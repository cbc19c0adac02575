#include "ppt/perturbation.hpp"

#include <algorithm>
#include <type_traits>

#include "ppt/errors.hpp"

namespace ppt {

std::size_t pair_index(std::size_t n, Edge e) {
  if (e.i == e.j || e.j >= n) throw PreconditionError("pair_index: invalid pair " + to_string(e));
  return e.i * (2 * n - e.i - 1) / 2 + (e.j - e.i - 1);
}

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

Point centroid(const PointSet& ps) {
  Point c{0, 0};
  for (const Point& p : ps) c = c + p;
  const Rational inv = Rational(1) / static_cast<unsigned long>(ps.size());
  return inv * c;
}

FScheme default_scheme(const PointSet& ps) {
  const Point c = centroid(ps);
  return DetProduct{c, c};
}

PerturbationTable make_f(const PointSet& ps, const FScheme& scheme) {
  const std::size_t n = ps.size();
  return std::visit(
      [&](const auto& s) -> PerturbationTable {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ExplicitTable>) {
          if (s.table.point_count() != n) throw InputError("perturbation table size does not match point count");
          return s.table;
        } else {
          PerturbationTable f(n);
          for (const Edge& e : all_pairs(n)) {
            const Point& p = ps[e.i];
            const Point& q = ps[e.j];
            if constexpr (std::is_same_v<S, DetProduct>) {
              f[e] = det3(s.a, p, q) * det3(s.b, p, q);
            } else {
              const Point d = p - q;
              f[e] = (dot(p, p) + dot(q, q) + dot(p, q)) * dot(d, d) / 2;
            }
          }
          return f;
        }
      },
      scheme);
}

std::vector<Quadruple> all_quadruples(std::size_t n) {
  std::vector<Quadruple> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) out.push_back({a, b, c, d});
  return out;
}

std::vector<QuadrupleValue> ValidityReport::failures() const {
  std::vector<QuadrupleValue> out;
  std::copy_if(witnesses.begin(), witnesses.end(), std::back_inserter(out),
               [](const QuadrupleValue& q) { return sgn(q.r) <= 0; });
  return out;
}

ValidityReport check_validity(const PointSet& ps, const PerturbationTable& f) {
  if (f.point_count() != ps.size()) throw PreconditionError("check_validity: table size mismatch");
  ValidityReport report;
  report.valid = true;
  for (const Quadruple& q : all_quadruples(ps.size())) {
    Rational r = stress_pairing(ps, q, [&](Edge e) { return f[e]; });
    if (sgn(r) <= 0) report.valid = false;
    report.witnesses.push_back({q, std::move(r)});
  }
  return report;
}

}  // namespace ppt
