#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wellcovered/errors.hpp"
#include "wellcovered/matrix.hpp"

using namespace wc;

namespace {

using QRows = std::vector<std::vector<mpq_class>>;

Matrix<RationalField> q_matrix(const std::vector<std::vector<long long>>& rows) {
  QRows q;
  for (const auto& r : rows) {
    std::vector<mpq_class> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    q.push_back(row);
  }
  return Matrix<RationalField>::from_rows(RationalField{}, rows.empty() ? 0 : rows[0].size(), q);
}

Matrix<PrimeField> p_matrix(std::uint64_t p, const std::vector<std::vector<long long>>& rows) {
  PrimeField f(p);
  std::vector<std::vector<std::uint64_t>> v;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> row;
    for (auto x : r) row.push_back(f.from_int(x));
    v.push_back(row);
  }
  return Matrix<PrimeField>::from_rows(f, rows.empty() ? 0 : rows[0].size(), v);
}

std::vector<std::vector<long long>> random_int_matrix(std::mt19937_64& rng) {
  const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
  const long long max = 1 + static_cast<long long>(rng() % 5);
  std::vector<std::vector<long long>> rows(m, std::vector<long long>(n));
  const bool low_rank = rng() % 3 == 0;
  for (auto& r : rows)
    for (auto& x : r) x = static_cast<long long>(rng() % (2 * max + 1)) - max;
  if (low_rank && m > 2)
    for (std::size_t c = 0; c < n; ++c) rows[m - 1][c] = 2 * rows[0][c] - 3 * rows[1][c];
  return rows;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("q").is_rationals());
  CHECK(FieldSpec::parse("Q").name() == "Q");
  CHECK(FieldSpec::parse("gf:2").modulus() == 2);
  CHECK(FieldSpec::parse("GF3").name() == "GF3");
  CHECK(FieldSpec::parse("gf:2305843009213693951").modulus() == 2305843009213693951ULL);
  CHECK_THROWS_AS(FieldSpec::parse("gf:4"), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::parse("gf:1"), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::parse("gf:x"), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::parse("r"), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 61), PreconditionError);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(0));
}

TEST_CASE("rational scalars are canonical") {
  const RationalField f;
  const auto a = f.add(mpq_class(1, 2), mpq_class(1, 3));
  CHECK(to_scalar(f, a).to_string() == "5/6");
  CHECK(to_scalar(f, f.mul(mpq_class(2, 4), mpq_class(4))).to_string() == "2");
  CHECK(to_scalar(f, mpq_class(-3, 6)).to_string() == "-1/2");
  CHECK(FieldScalar(mpq_class(2, 4)) == FieldScalar(mpq_class(1, 2)));
  CHECK_THROWS_AS(from_scalar(f, FieldScalar(FieldScalar::Residue{1})), FieldMismatchError);
  CHECK_THROWS_AS(from_scalar(PrimeField(5), FieldScalar(mpq_class(1))), FieldMismatchError);
  CHECK_THROWS_AS(from_scalar(PrimeField(5), FieldScalar(FieldScalar::Residue{5})), FieldMismatchError);
}

TEST_CASE("prime field inverses") {
  std::mt19937_64 rng(1);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL, 1000000007ULL, 2305843009213693951ULL}) {
    const PrimeField f(p);
    for (int t = 0; t < 500; ++t) {
      const std::uint64_t x = 1 + rng() % (p - 1);
      CHECK(f.mul(f.inv(x), x) == 1);
    }
    CHECK(f.from_int(-1) == p - 1);
    CHECK(f.add(p - 1, 1) == 0);
    CHECK(f.sub(0, 1) == p - 1);
  }
}

TEST_CASE("rref examples") {
  const auto id = q_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto r = rref(id);
  CHECK(r.rank == 3);
  CHECK(r.reduced == id);

  const auto g2 = rref(p_matrix(2, {{1, 1}, {1, 1}}));
  CHECK(g2.rank == 1);
  CHECK(g2.reduced == p_matrix(2, {{1, 1}, {0, 0}}));

  const auto one = q_matrix({{1, 1, -1, -1}});
  CHECK(rank(one) == 1);
  CHECK(nullspace_basis(one).size() == 3);

  const auto r2 = rref(q_matrix({{0, 2, 4}, {3, 6, 9}}));
  CHECK(r2.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(r2.reduced == q_matrix({{1, 0, -1}, {0, 1, 2}}));
}

TEST_CASE("nullspace examples") {
  const Matrix<RationalField> zero(RationalField{}, 3, 3);
  const auto basis = nullspace_basis(zero);
  REQUIRE(basis.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(basis[i][j] == (i == j ? 1 : 0));

  CHECK(nullspace_basis(q_matrix({{2, 1}, {1, 1}})).empty());

  const auto m = q_matrix({{1, 1, -1, -1}});
  for (const auto& v : nullspace_basis(m)) {
    const auto prod = multiply(m, std::span<const mpq_class>(v));
    CHECK(prod[0] == 0);
  }
}

TEST_CASE("span equality") {
  const RationalField q;
  const QRows e1{{1, 0}}, e1x2{{2, 0}}, e2{{0, 1}};
  CHECK(span_equal(e1, e1, q));
  CHECK(span_equal(e1, e1x2, q));
  CHECK_FALSE(span_equal(e1, e2, q));
  const QRows short_row{{1}};
  CHECK_THROWS_AS(span_equal(e1, short_row, q), DimensionMismatchError);
}

TEST_CASE("property: 200 random matrices over each field") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto rows = random_int_matrix(rng);
    const std::size_t cols = rows[0].size();

    const auto mq = q_matrix(rows);
    const auto rq = rref(mq);
    QRows as_q;
    for (std::size_t i = 0; i < mq.rows(); ++i) as_q.emplace_back(mq.row(i).begin(), mq.row(i).end());
    CHECK(rq.rank == oracle::bareiss_rank(as_q));
    CHECK(rref(rq.reduced).reduced == rq.reduced);
    const auto nq = nullspace_basis(mq);
    CHECK(nq.size() + rq.rank == cols);
    for (const auto& v : nq)
      for (const auto& x : multiply(mq, std::span<const mpq_class>(v))) CHECK(x == 0);
    CHECK(rank(Matrix<RationalField>::from_rows(RationalField{}, cols, nq)) == nq.size());

    for (std::uint64_t p : {2ULL, 3ULL, 7ULL}) {
      const auto mp = p_matrix(p, rows);
      const auto rp = rref(mp);
      CHECK(rp.rank == oracle::rank_mod_p(rows, p));
      CHECK(rref(rp.reduced).reduced == rp.reduced);
      const auto np = nullspace_basis(mp);
      CHECK(np.size() + rp.rank == cols);
      for (const auto& v : np)
        for (auto x : multiply(mp, std::span<const std::uint64_t>(v))) CHECK(x == 0);
    }
  }
}

TEST_CASE("property: streaming row space matches batch rref") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const auto rows = random_int_matrix(rng);
    const std::size_t cols = rows[0].size();
    const auto mq = q_matrix(rows);
    RowSpaceBuilder<RationalField> b(RationalField{}, cols);
    for (std::size_t i = 0; i < mq.rows(); ++i) b.add_row({mq.row(i).begin(), mq.row(i).end()});
    const auto batch = rref(mq);
    CHECK(b.rank() == batch.rank);
    CHECK(b.pivot_columns() == batch.pivot_columns);
    const auto streamed = b.reduced();
    for (std::size_t i = 0; i < batch.rank; ++i)
      for (std::size_t c = 0; c < cols; ++c) CHECK(streamed.at(i, c) == batch.reduced.at(i, c));
    CHECK(b.nullspace_basis() == nullspace_basis(mq));

    RowSpaceBuilder<PrimeField> b3(PrimeField(3), cols);
    const auto m3 = p_matrix(3, rows);
    for (std::size_t i = 0; i < m3.rows(); ++i) b3.add_row({m3.row(i).begin(), m3.row(i).end()});
    CHECK(b3.nullspace_basis() == nullspace_basis(m3));
  }
}
