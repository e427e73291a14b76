#include "wellcovered/wc_space.hpp"

#include <string>

#include "wellcovered/errors.hpp"

namespace wc {

namespace {

std::vector<mpq_class> integerize(std::vector<mpq_class> v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  mpz_class content = 0;
  for (auto& x : v) {
    x *= den_lcm;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
  }
  if (content > 1)
    for (auto& x : v) x /= content;
  return v;
}

template <ExactField F>
WcSpace space_over(const Graph& g, const MisList& mis, const F& field) {
  const std::size_t n = g.order();
  RowSpaceBuilder<F> rows(field, n);
  std::vector<long long> diff(n);
  for (std::size_t k = 1; k < mis.size() && !rows.full(); ++k) {
    std::fill(diff.begin(), diff.end(), 0);
    for (Vertex v : mis.sets[k]) diff[v] += 1;
    for (Vertex v : mis.sets[0]) diff[v] -= 1;
    std::vector<typename F::value_type> row;
    row.reserve(n);
    for (auto d : diff) row.push_back(field.from_int(d));
    rows.add_row(std::move(row));
  }
  WcSpace space;
  space.field = field.spec();
  space.mis_count = mis.size();
  space.constraint_rank = rows.rank();
  for (auto& v : rows.nullspace_basis()) {
    if constexpr (std::is_same_v<F, RationalField>)
      space.basis.push_back(from_vector(field, integerize(std::move(v))));
    else
      space.basis.push_back(from_vector(field, v));
  }
  space.dimension = space.basis.size();
  return space;
}

template <ExactField F>
typename F::value_type sum_over(const F& field, const std::vector<typename F::value_type>& f, const VertexSet& s) {
  auto acc = field.zero();
  for (Vertex v : s) acc = field.add(acc, f[v]);
  return acc;
}

}  // namespace

WcSpace well_covered_space(const Graph& g, const MisList& mis, const FieldSpec& field) {
  if (mis.sets.empty()) throw Error("well_covered_space: empty MIS list");
  if (mis.order != g.order()) throw DimensionMismatchError("MIS list belongs to a graph of different order");
  return visit_field(field, [&](const auto& f) { return space_over(g, mis, f); });
}

WcSpace well_covered_space(const Graph& g, const FieldSpec& field, std::size_t mis_cap) {
  return well_covered_space(g, enumerate_mis(g, mis_cap), field);
}

std::size_t wcdim(const Graph& g, const FieldSpec& field, std::size_t mis_cap) {
  return well_covered_space(g, field, mis_cap).dimension;
}

WeightingVerdict verify_weighting(const Graph& g, const Weighting& w, const MisList& mis) {
  if (w.values.size() != g.order())
    throw DimensionMismatchError("weighting has " + std::to_string(w.values.size()) + " entries for " +
                                 std::to_string(g.order()) + " vertices");
  return visit_field(w.field, [&](const auto& field) {
    const auto f = to_vector(field, w);
    WeightingVerdict verdict;
    verdict.well_covered = true;
    if (mis.sets.empty()) return verdict;
    const auto first = sum_over(field, f, mis.sets[0]);
    for (std::size_t k = 1; k < mis.size(); ++k) {
      auto s = sum_over(field, f, mis.sets[k]);
      if (!field.equal(s, first)) {
        verdict.well_covered = false;
        verdict.witness = std::pair{mis.sets[0], mis.sets[k]};
        verdict.witness_sums = std::pair{to_scalar(field, first), to_scalar(field, s)};
        break;
      }
    }
    return verdict;
  });
}

bool is_well_covered(const Graph& g, const MisList& mis) {
  return verify_weighting(g, constant_weighting(g.order(), FieldSpec::rationals(), 1), mis).well_covered;
}

bool is_well_covered(const Graph& g, std::size_t mis_cap) { return is_well_covered(g, enumerate_mis(g, mis_cap)); }

Weighting constant_weighting(std::size_t n, const FieldSpec& field, long long value) {
  return visit_field(field, [&](const auto& f) {
    return from_vector(f, std::vector<typename std::decay_t<decltype(f)>::value_type>(n, f.from_int(value)));
  });
}

Weighting zero_weighting(std::size_t n, const FieldSpec& field) { return constant_weighting(n, field, 0); }

Weighting indicator_weighting(std::size_t n, const VertexSet& support, const FieldSpec& field) {
  return visit_field(field, [&](const auto& f) {
    std::vector<typename std::decay_t<decltype(f)>::value_type> v(n, f.zero());
    for (Vertex x : support) {
      if (x >= n) throw VertexRangeError("indicator support outside 0.." + std::to_string(n - 1));
      v[x] = f.one();
    }
    return from_vector(f, v);
  });
}

Weighting linear_combination(std::size_t n, const FieldSpec& field, const std::vector<Weighting>& basis,
                             const std::vector<long long>& coeffs) {
  if (coeffs.size() != basis.size()) throw DimensionMismatchError("coefficient count differs from basis size");
  return visit_field(field, [&](const auto& f) {
    std::vector<typename std::decay_t<decltype(f)>::value_type> acc(n, f.zero());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto v = to_vector(f, basis[i]);
      if (v.size() != n) throw DimensionMismatchError("basis vector length differs from n");
      const auto c = f.from_int(coeffs[i]);
      for (std::size_t k = 0; k < n; ++k) acc[k] = f.add(acc[k], f.mul(c, v[k]));
    }
    return from_vector(f, acc);
  });
}

FieldScalar weight_of(const Weighting& w, const VertexSet& s) {
  return visit_field(w.field, [&](const auto& f) {
    const auto v = to_vector(f, w);
    if (!s.empty() && s.members().back() >= v.size()) throw VertexRangeError("weight_of: vertex out of range");
    return to_scalar(f, sum_over(f, v, s));
  });
}

bool span_equal(const std::vector<Weighting>& a, const std::vector<Weighting>& b, const FieldSpec& field) {
  return visit_field(field, [&](const auto& f) {
    using V = std::vector<typename std::decay_t<decltype(f)>::value_type>;
    std::vector<V> va, vb;
    for (const auto& w : a) va.push_back(to_vector(f, w));
    for (const auto& w : b) vb.push_back(to_vector(f, w));
    return span_equal(va, vb, f);
  });
}

}  // namespace wc
