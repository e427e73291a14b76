#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wellcovered/field.hpp"
#include "wellcovered/graph.hpp"
#include "wellcovered/matrix.hpp"
#include "wellcovered/mis.hpp"

namespace wc {

/// Vertex-indexed vector of scalars over one field.
struct Weighting {
  FieldSpec field = FieldSpec::rationals();
  std::vector<FieldScalar> values;

  friend bool operator==(const Weighting&, const Weighting&) = default;
};

struct WcSpace {
  FieldSpec field = FieldSpec::rationals();
  /// Nullspace basis, one vector per free column. Over Q each vector is scaled
  /// to integer entries with content 1.
  std::vector<Weighting> basis;
  std::size_t dimension = 0;
  std::size_t mis_count = 0;
  std::size_t constraint_rank = 0;
};

/// Rows indicator(M_k) - indicator(M_0) for k = 1..|mis|-1. Throws Error if
/// `mis` is empty.
template <ExactField F>
Matrix<F> constraint_matrix(const Graph& g, const MisList& mis, const F& field) {
  if (mis.sets.empty()) throw Error("constraint_matrix: empty MIS list");
  const std::size_t n = g.order();
  Matrix<F> m(field, mis.size() - 1, n);
  for (std::size_t k = 1; k < mis.size(); ++k) {
    std::vector<long long> row(n, 0);
    for (Vertex v : mis.sets[k]) row[v] += 1;
    for (Vertex v : mis.sets[0]) row[v] -= 1;
    for (std::size_t c = 0; c < n; ++c) m.at(k - 1, c) = field.from_int(row[c]);
  }
  return m;
}

/// Streams the MIS difference rows through an incremental row reduction; the
/// full constraint matrix is never materialized.
WcSpace well_covered_space(const Graph& g, const MisList& mis, const FieldSpec& field);
WcSpace well_covered_space(const Graph& g, const FieldSpec& field, std::size_t mis_cap = kDefaultMisCap);

std::size_t wcdim(const Graph& g, const FieldSpec& field, std::size_t mis_cap = kDefaultMisCap);

struct WeightingVerdict {
  bool well_covered = false;
  /// Two MISs whose weight sums differ, when not well covered.
  std::optional<std::pair<VertexSet, VertexSet>> witness;
  std::optional<std::pair<FieldScalar, FieldScalar>> witness_sums;
};

/// Throws DimensionMismatchError if the weighting length differs from n.
WeightingVerdict verify_weighting(const Graph& g, const Weighting& f, const MisList& mis);

bool is_well_covered(const Graph& g, std::size_t mis_cap = kDefaultMisCap);
bool is_well_covered(const Graph& g, const MisList& mis);

Weighting zero_weighting(std::size_t n, const FieldSpec& field);
Weighting constant_weighting(std::size_t n, const FieldSpec& field, long long value);
/// 1 on `support`, 0 elsewhere.
Weighting indicator_weighting(std::size_t n, const VertexSet& support, const FieldSpec& field);

/// sum_i coeffs[i] * basis[i]; all weightings must share the field.
Weighting linear_combination(std::size_t n, const FieldSpec& field, const std::vector<Weighting>& basis,
                             const std::vector<long long>& coeffs);

/// Sum of f over the vertices of s.
FieldScalar weight_of(const Weighting& f, const VertexSet& s);

/// Converts weightings into field vectors and back.
template <ExactField F>
std::vector<typename F::value_type> to_vector(const F& field, const Weighting& w) {
  if (!(w.field == field.spec())) throw FieldMismatchError("weighting field differs from " + field.spec().name());
  std::vector<typename F::value_type> out;
  out.reserve(w.values.size());
  for (const auto& s : w.values) out.push_back(from_scalar(field, s));
  return out;
}

template <ExactField F>
Weighting from_vector(const F& field, const std::vector<typename F::value_type>& v) {
  Weighting w{field.spec(), {}};
  w.values.reserve(v.size());
  for (const auto& x : v) w.values.push_back(to_scalar(field, x));
  return w;
}

/// True iff the two weighting families span the same subspace.
bool span_equal(const std::vector<Weighting>& a, const std::vector<Weighting>& b, const FieldSpec& field);

}  // namespace wc
