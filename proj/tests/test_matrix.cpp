#include <doctest.h>

#include <limits>

#include "oracle.hpp"
#include "specbound/spectral.hpp"

using namespace specbound;

namespace {

Matrix six_by_six() {
  return Matrix::from_rows({{1, 2, 0, 3, 7, 1},
                            {4, 1, 0, 5, 1, 0},
                            {0, 2, 3, 0, 0, 5},
                            {5, 2, 0, 1, 3, 1},
                            {0, 0, 3, 5, 0, 2},
                            {4, 1, 3, 0, 1, 3}});
}

Matrix simultaneous_expansion() {
  return Matrix::from_rows({{3, 2, 1, 4, 2},
                            {0, 5, 3, 1.5, 2.5},
                            {1, 1, 3, 0.5, 0.5},
                            {0, 2, 1, 1, 2},
                            {1.5, 0.5, 0, 4, 0}});
}

}  // namespace

TEST_CASE("validate accepts nonnegative square input") {
  CHECK(Matrix::from_rows({{0}}).n() == 1);
  CHECK(Matrix::from_rows({{1, 3, 2}, {5, 1, 1}, {2, 4, 3}}).n() == 3);
}

TEST_CASE("validate reports the offending entry") {
  try {
    Matrix::from_rows({{-1}});
    FAIL("expected NegativeEntry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeEntry);
    CHECK(e.row() == 0u);
    CHECK(e.col() == 0u);
  }
  try {
    Matrix::from_rows({{1, 2}, {std::numeric_limits<double>::infinity(), 0}});
    FAIL("expected NonFinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFinite);
    CHECK(e.row() == 1u);
    CHECK(e.col() == 0u);
  }
  try {
    Matrix::from_rows({{1, 2}, {3}});
    FAIL("expected NonSquare");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSquare);
  }
  CHECK_THROWS_AS(Matrix::validate(Eigen::MatrixXd(2, 3)), Error);
  CHECK_THROWS_AS(Matrix::validate(Eigen::MatrixXd(0, 0)), Error);
  CHECK_THROWS_AS(Matrix::from_rows({{std::nan("")}}), Error);
}

TEST_CASE("partitions are canonical restricted growth strings") {
  const IndexPartition p{2, 0, 0, 5, 2};
  CHECK(p.to_string() == "0,1,1,2,0");
  CHECK(p.k() == 3);
  CHECK(p == IndexPartition{0, 1, 1, 2, 0});
  CHECK(IndexPartition::from_groups({{1, 2, 3}, {0}, {4, 5}}, 6) == IndexPartition{0, 1, 1, 1, 2, 2});
  CHECK(IndexPartition::parse("0, 1,1,1,2,2").to_group_string() == "{1},{2,3,4},{5,6}");
  CHECK(IndexPartition::parse("0,1,1").to_group_string(false) == "{0},{1,2}");
  CHECK(IndexPartition::singletons(3).is_singletons());
  CHECK(IndexPartition::one_group(3).k() == 1);
  CHECK_THROWS_AS(IndexPartition::from_groups({{0, 1}, {1}}, 2), Error);
  CHECK_THROWS_AS(IndexPartition::from_groups({{0}}, 2), Error);
  CHECK_THROWS_AS(IndexPartition::parse("0,x"), Error);
}

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  const auto p = Permutation::from_one_based({1, 3, 5, 2, 4});
  CHECK(p(1) == 2u);
  CHECK(compose(p, p.inverse()) == Permutation::identity(5));
}

TEST_CASE("transpose") {
  const auto m = Matrix::from_rows({{2, 3}, {4, 1}});
  CHECK(transpose(m) == Matrix::from_rows({{2, 4}, {3, 1}}));
  CHECK(transpose(Matrix::identity(2)) == Matrix::identity(2));
  oracle::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto r = rng.matrix(rng.index(1, 6));
    CHECK(transpose(transpose(r)) == r);
  }
}

TEST_CASE("permute_symmetric") {
  const auto m = Matrix::from_rows({{1, 3, 2, 1, 2},
                                    {7, 1, 1, 3, 3},
                                    {2, 4, 3, 1, 0},
                                    {1, 1, 5, 2, 2},
                                    {4, 3, 0, 2, 1}});
  const auto p = Permutation::from_one_based({1, 3, 5, 2, 4});
  const auto out = permute_symmetric(m, p);
  const std::vector<std::size_t> lead{0, 2, 4};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(out(i, j) == m(lead[i], lead[j]));
  CHECK(permute_symmetric(m, Permutation::identity(5)) == m);
  CHECK_THROWS_AS(permute_symmetric(m, Permutation::identity(4)), Error);

  oracle::Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.index(1, 6);
    const auto r = rng.matrix(n);
    const auto a = rng.permutation(n);
    const auto b = rng.permutation(n);
    CHECK(permute_symmetric(permute_symmetric(r, a), b) == permute_symmetric(r, compose(a, b)));

    // Entry multiset is preserved.
    std::vector<double> before(r.dense().data(), r.dense().data() + n * n);
    const auto pr = permute_symmetric(r, a);
    std::vector<double> after(pr.dense().data(), pr.dense().data() + n * n);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    CHECK(before == after);

    CHECK(std::abs(rho(pr).value - oracle::spectral_radius(r)) <= 1e-8 * oracle::scale_of(rho(pr).value));
  }
}

TEST_CASE("block_row_sums") {
  const auto sums = block_row_sums(six_by_six(), IndexPartition{0, 1, 1, 1, 2, 2});
  CHECK(sums(1, 1) == std::vector<double>{6, 5, 3});
  CHECK(sums(0, 2) == std::vector<double>{8});

  const auto m = Matrix::from_rows({{1, 2}, {3, 4}});
  const auto single = block_row_sums(m, IndexPartition::singletons(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(single(i, j) == std::vector<double>{m(i, j)});

  const auto z = block_row_sums(Matrix::zero(4), IndexPartition{0, 1, 0, 1});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(z(i, j) == std::vector<double>{0, 0});

  CHECK_THROWS_AS(block_row_sums(m, IndexPartition{0, 0, 1}), Error);
}

TEST_CASE("is_equitable and quotient") {
  const IndexPartition p{0, 0, 1, 1, 1};
  CHECK(is_equitable(simultaneous_expansion(), p));
  CHECK(quotient(simultaneous_expansion(), p) == Matrix::from_rows({{5, 7}, {2, 4}}));

  const auto m = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK_FALSE(is_equitable(m, IndexPartition::one_group(2)));
  try {
    quotient(m, IndexPartition::one_group(2));
    FAIL("expected NotEquitable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEquitable);
    CHECK(e.row() == 0u);
  }
  CHECK(quotient(Matrix::from_rows({{2, 3}, {4, 1}}), IndexPartition::one_group(2)) ==
        Matrix::from_rows({{5}}));

  oracle::Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const auto r = rng.matrix(rng.index(1, 6));
    const auto s = IndexPartition::singletons(r.n());
    CHECK(is_equitable(r, s, 0.0));
    CHECK(quotient(r, s, 0.0) == r);
  }
}

TEST_CASE("is_equitable honours the tolerance") {
  const auto m = Matrix::from_rows({{1, 1}, {1, 1 + 1e-7}});
  CHECK_FALSE(is_equitable(m, IndexPartition::one_group(2)));
  CHECK(is_equitable(m, IndexPartition::one_group(2), 1e-6));
}

TEST_CASE("componentwise_le is a partial order") {
  CHECK_FALSE(componentwise_le(Matrix::from_rows({{1}}), Matrix::from_rows({{0}})));
  CHECK_THROWS_AS(componentwise_le(Matrix::zero(2), Matrix::zero(3)), Error);

  oracle::Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.index(1, 4);
    const auto a = rng.int_matrix(n, 2);
    const auto b = rng.int_matrix(n, 2);
    const auto c = rng.int_matrix(n, 2);
    CHECK(componentwise_le(a, a));
    if (componentwise_le(a, b) && componentwise_le(b, a)) CHECK(a == b);
    if (componentwise_le(a, b) && componentwise_le(b, c)) CHECK(componentwise_le(a, c));
  }
}

TEST_CASE("core operations work for long double") {
  using M = NonnegativeMatrix<long double>;
  const auto m = M::from_rows({{2, 3}, {4, 1}});
  CHECK(quotient(m, IndexPartition::one_group(2))(0, 0) == 5.0L);
  CHECK(transpose(m)(0, 1) == 4.0L);
}
