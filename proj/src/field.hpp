// Exact arithmetic over prime fields GF(p) and the dense row/matrix
// primitives (rank, span membership, per-message information counts) the
// verifier and the search are built on.
//
// Row width is m*t with message-major column order: the t symbols of
// message 1 first, then message 2, and so on. Coefficients are stored as
// bytes, so p must be a prime below 256; the intended regime is small
// (p = 2 by default, m*t <= ~64 columns).

#ifndef PICOD_FIELD_HPP
#define PICOD_FIELD_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace picod {

/// A prime field GF(p). Construction checks primality.
class Field {
public:
    explicit Field(unsigned modulus);

    unsigned p() const { return p_; }

    uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % p_); }
    uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + p_ - b) % p_); }
    uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a * b) % p_); }
    uint8_t neg(uint8_t a) const { return static_cast<uint8_t>((p_ - a) % p_); }
    uint8_t inv(uint8_t a) const;

    static bool is_prime(unsigned n);

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
    unsigned p_;
};

/// A field scalar reduced into [0, p-1].
struct FieldScalar {
    uint8_t value = 0;
    Field field;

    FieldScalar(unsigned v, Field f);
};

/// A fixed-width coefficient row over one field.
class RowVector {
public:
    RowVector(Field f, std::size_t width);
    RowVector(Field f, std::vector<uint8_t> coeffs);

    const Field& field() const { return field_; }
    std::size_t width() const { return c_.size(); }
    uint8_t at(std::size_t i) const { return c_[i]; }
    void set(std::size_t i, unsigned v);
    const std::vector<uint8_t>& coeffs() const { return c_; }

    bool is_zero() const;
    /// Index of the first nonzero coefficient, or width() if zero.
    std::size_t leading() const;

    /// this += k * other (in place).
    void add_scaled(const RowVector& other, uint8_t k);
    /// this *= k (in place).
    void scale(uint8_t k);

    friend bool operator==(const RowVector& a, const RowVector& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

private:
    Field field_;
    std::vector<uint8_t> c_;
};

/// A rectangular matrix: a list of rows of uniform width over one field.
class Matrix {
public:
    Matrix(Field f, std::size_t width);

    const Field& field() const { return field_; }
    std::size_t width() const { return width_; }
    std::size_t row_count() const { return rows_.size(); }
    const RowVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<RowVector>& rows() const { return rows_; }

    void append_row(RowVector r);

private:
    Field field_;
    std::size_t width_;
    std::vector<RowVector> rows_;
};

// An incrementally built row-echelon basis. Pivots are chosen at the
// lowest column index first so reduced forms are canonical.
class RowBasis {
public:
    RowBasis(Field f, std::size_t width);

    /// Reduce v against the basis (in place). Returns the residual's
    /// leading column, or width() if v reduced to zero.
    std::size_t reduce(RowVector& v) const;

    /// Insert a row. Returns true if it was independent (rank grew).
    bool insert(RowVector v);

    bool contains(RowVector v) const;
    std::size_t rank() const { return rows_.size(); }
    const std::vector<RowVector>& rows() const { return rows_; }

private:
    Field field_;
    std::size_t width_;
    std::vector<RowVector> rows_;
    std::vector<int> pivot_row_;  // column -> row index, or -1
};

/// Rank of the row span. Pure; the empty matrix has rank 0.
std::size_t rank(const Matrix& m);

/// True iff v is a linear combination of the rows of m.
/// Throws picod::error(kind::dimension) on width mismatch.
bool in_rowspan(const RowVector& v, const Matrix& m);

/// Symbols a linear observer of M learns about message `block` (1-based)
/// when each message spans t consecutive columns: rank(M) minus the rank
/// of M with the block's t columns deleted. The result lies in [0, t]
/// and is 0 exactly when the observer's posterior on the block stays
/// uniform (messages uniform, independent).
std::size_t info_symbols(const Matrix& m, int block, int t);

}  // namespace picod

#endif
