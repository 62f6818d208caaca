#pragma once

#include "symprod/numeric.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace symprod {

using IntegerVector = std::vector<Integer>;

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix identity(std::size_t n);
    /// Throws DimensionMismatch on ragged input.
    static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    IntegerVector row(std::size_t r) const;
    void append_row(const IntegerVector& v);

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::string to_string(const IntegerMatrix& m);

/// Row Hermite normal form: H = U * M with U unimodular, pivots positive, entries above a
/// pivot reduced into [0, pivot), zero rows last. H has the shape of M.
struct HermiteResult {
    IntegerMatrix H;
    IntegerMatrix U;
};
HermiteResult hermite(const IntegerMatrix& m);

/// The nonzero rows of the Hermite form, computed in row blocks without tracking U.
IntegerMatrix hermite_form(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

/// Smith invariants d_1 | d_2 | ... (min(rows, cols) entries, zeros last).
std::vector<Integer> smith(const IntegerMatrix& m);

bool lattice_membership(const IntegerVector& v, const IntegerMatrix& generators);
bool lattice_equal(const IntegerMatrix& a, const IntegerMatrix& b);
bool is_unimodular(const IntegerMatrix& m);

}  // namespace symprod
