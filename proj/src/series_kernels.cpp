#include <wallcross/series_kernels.hpp>

#include <vector>

namespace wallcross::kernels
{

BiSeries mul_serial(const BiSeries &a, const BiSeries &b)
{
    if (!(a.box() == b.box())) {
        throw box_mismatch("series have different truncation boxes");
    }
    const TruncationBox box = a.box();
    BiSeries out(box);
    std::vector<Integer> acc(out.dense().size());
    const std::size_t cols = static_cast<std::size_t>(box.cols());
    const auto lhs = a.terms();
    const auto rhs = b.terms();
    for (const auto &[da, ca] : lhs) {
        for (const auto &[db, cb] : rhs) {
            const Bidegree d{da.v0 + db.v0, da.v1 + db.v1};
            if (box.contains(d)) {
                acc[static_cast<std::size_t>(d.v0) * cols + static_cast<std::size_t>(d.v1)] += ca * cb;
            }
        }
    }
    return BiSeries::from_dense(box, std::move(acc));
}

BiSeries mul_parallel(const BiSeries &a, const BiSeries &b)
{
    if (!(a.box() == b.box())) {
        throw box_mismatch("series have different truncation boxes");
    }
    const TruncationBox box = a.box();
    const std::int64_t rows = box.rows();
    const std::int64_t cols = box.cols();
    const auto lhs = a.dense();
    const auto rhs = b.dense();

    // Nonzero columns of each row of a.
    std::vector<std::vector<std::int64_t>> support(static_cast<std::size_t>(rows));
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::int64_t j = 0; j < cols; ++j) {
            if (lhs[static_cast<std::size_t>(i * cols + j)] != 0) {
                support[static_cast<std::size_t>(i)].push_back(j);
            }
        }
    }

    std::vector<Integer> out(static_cast<std::size_t>(rows * cols));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t row = 0; row < rows; ++row) {
        for (std::int64_t i = 0; i <= row; ++i) {
            const std::int64_t k = row - i;
            for (const std::int64_t j : support[static_cast<std::size_t>(i)]) {
                mpz_srcptr x = lhs[static_cast<std::size_t>(i * cols + j)].get_mpz_t();
                for (std::int64_t l = 0; l + j < cols; ++l) {
                    const Integer &y = rhs[static_cast<std::size_t>(k * cols + l)];
                    if (y != 0) {
                        mpz_addmul(out[static_cast<std::size_t>(row * cols + j + l)].get_mpz_t(), x,
                                   y.get_mpz_t());
                    }
                }
            }
        }
    }
    return BiSeries::from_dense(box, std::move(out));
}

} // namespace wallcross::kernels
