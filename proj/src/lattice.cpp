#include "symprod/lattice.hpp"

#include "symprod/errors.hpp"

#include <algorithm>
#include <utility>

namespace symprod {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionMismatch("ragged matrix literal");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector>& rows, std::size_t cols)
{
    IntegerMatrix m(0, cols);
    for (const auto& r : rows)
        m.append_row(r);
    return m;
}

IntegerVector IntegerMatrix::row(std::size_t r) const
{
    return IntegerVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void IntegerMatrix::append_row(const IntegerVector& v)
{
    if (v.size() != cols_)
        throw DimensionMismatch("row of length " + std::to_string(v.size()) + " appended to a matrix with " +
                                std::to_string(cols_) + " columns");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product dimensions");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::string to_string(const IntegerMatrix& m)
{
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += r ? ",[" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c)
            s += (c ? "," : "") + m(r, c).get_str();
        s += "]";
    }
    return s + "]";
}

namespace {

using Rows = std::vector<IntegerVector>;

// Row ops on `rows`, mirrored on `u` when given. Leaves rows in Hermite form and returns the rank.
std::size_t hnf_inplace(Rows& rows, std::size_t cols, Rows* u)
{
    const std::size_t m = rows.size();
    std::size_t pivot = 0;
    Integer g, s, t, a, b, q;
    auto combine = [&](std::size_t p, std::size_t r, std::size_t from, Rows& target) {
        // [p; r] <- [s t; -b/g a/g] [p; r]
        for (std::size_t c = from; c < target[p].size(); ++c) {
            Integer x = target[p][c];
            Integer y = target[r][c];
            target[p][c] = s * x + t * y;
            target[r][c] = a * y - b * x;
        }
    };
    for (std::size_t col = 0; col < cols && pivot < m; ++col) {
        for (std::size_t r = pivot + 1; r < m; ++r) {
            if (rows[r][col] == 0)
                continue;
            if (rows[pivot][col] == 0) {
                std::swap(rows[pivot], rows[r]);
                if (u)
                    std::swap((*u)[pivot], (*u)[r]);
                continue;
            }
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[pivot][col].get_mpz_t(),
                       rows[r][col].get_mpz_t());
            b = rows[r][col] / g;
            a = rows[pivot][col] / g;
            combine(pivot, r, col, rows);
            if (u)
                combine(pivot, r, 0, *u);
        }
        if (rows[pivot][col] == 0)
            continue;
        if (rows[pivot][col] < 0) {
            for (auto& x : rows[pivot])
                x = -x;
            if (u)
                for (auto& x : (*u)[pivot])
                    x = -x;
        }
        for (std::size_t r = 0; r < pivot; ++r) {
            if (rows[r][col] == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= q * rows[pivot][c];
            if (u)
                for (std::size_t c = 0; c < (*u)[r].size(); ++c)
                    (*u)[r][c] -= q * (*u)[pivot][c];
        }
        ++pivot;
    }
    return pivot;
}

Rows to_rows(const IntegerMatrix& m)
{
    Rows rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows[r] = m.row(r);
    return rows;
}

}  // namespace

HermiteResult hermite(const IntegerMatrix& m)
{
    Rows rows = to_rows(m);
    Rows u = to_rows(IntegerMatrix::identity(m.rows()));
    hnf_inplace(rows, m.cols(), &u);
    HermiteResult result{IntegerMatrix::from_rows(rows, m.cols()), IntegerMatrix::from_rows(u, m.rows())};
    return result;
}

IntegerMatrix hermite_form(const IntegerMatrix& m)
{
    const std::size_t block = std::max<std::size_t>(m.cols(), 16);
    Rows basis;
    for (std::size_t start = 0; start < m.rows(); start += block) {
        std::size_t end = std::min(m.rows(), start + block);
        for (std::size_t r = start; r < end; ++r)
            basis.push_back(m.row(r));
        std::size_t rk = hnf_inplace(basis, m.cols(), nullptr);
        basis.resize(rk);
    }
    return IntegerMatrix::from_rows(basis, m.cols());
}

std::size_t rank(const IntegerMatrix& m) { return hermite_form(m).rows(); }

std::vector<Integer> smith(const IntegerMatrix& m)
{
    IntegerMatrix a = hermite_form(m);
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t diag = std::min(rows, cols);
    Integer q;

    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                break;
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(t, j), a(pr, j));
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(a(i, t), a(i, pc));

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    a(i, j) -= q * a(t, j);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    a(i, j) -= q * a(i, t);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t c = t; c < cols; ++c)
                            a(t, c) += a(i, c);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a(t, t) < 0)
            a(t, t) = -a(t, t);
    }

    std::vector<Integer> d;
    for (std::size_t t = 0; t < diag; ++t)
        if (a(t, t) != 0)
            d.push_back(a(t, t));
    d.resize(std::min(m.rows(), m.cols()), Integer(0));
    return d;
}

bool lattice_membership(const IntegerVector& v, const IntegerMatrix& generators)
{
    if (v.size() != generators.cols())
        throw DimensionMismatch("vector length " + std::to_string(v.size()) + " vs lattice dimension " +
                                std::to_string(generators.cols()));
    IntegerMatrix h = hermite_form(generators);
    IntegerVector w = v;
    std::size_t col = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        while (h(r, col) == 0)
            ++col;
        for (std::size_t c = 0; c < col; ++c)
            if (w[c] != 0)
                return false;
        if (w[col] % h(r, col) != 0)
            return false;
        Integer q = w[col] / h(r, col);
        for (std::size_t c = col; c < w.size(); ++c)
            w[c] -= q * h(r, c);
    }
    return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

bool lattice_equal(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("lattices in spaces of different dimension");
    return hermite_form(a) == hermite_form(b);
}

bool is_unimodular(const IntegerMatrix& m)
{
    if (m.rows() != m.cols())
        return false;
    return hermite_form(m) == IntegerMatrix::identity(m.rows());
}

}  // namespace symprod
