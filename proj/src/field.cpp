#include "field.hpp"

#include "error.hpp"

namespace picod {

bool Field::is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(unsigned modulus) : p_(modulus) {
    if (!is_prime(modulus))
        throw error(errc::invalid_argument, "field modulus " + std::to_string(modulus) + " is not prime");
    if (modulus > 255)
        throw error(errc::invalid_argument, "field modulus too large (max 251)");
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw error(errc::invalid_argument, "inverse of zero");
    // extended Euclid
    int t = 0, newt = 1, r = static_cast<int>(p_), newr = a;
    while (newr != 0) {
        int q = r / newr;
        int tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += static_cast<int>(p_);
    return static_cast<uint8_t>(t);
}

FieldScalar::FieldScalar(unsigned v, Field f) : value(0), field(f) {
    if (v >= f.p())
        throw error(errc::invalid_argument, "scalar value out of range for GF(" + std::to_string(f.p()) + ")");
    value = static_cast<uint8_t>(v);
}

RowVector::RowVector(Field f, std::size_t width) : field_(f), c_(width, 0) {}

RowVector::RowVector(Field f, std::vector<uint8_t> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (uint8_t v : c_)
        if (v >= field_.p())
            throw error(errc::invalid_argument, "coefficient out of range for GF(" + std::to_string(field_.p()) + ")");
}

void RowVector::set(std::size_t i, unsigned v) {
    if (i >= c_.size()) throw error(errc::dimension, "column index out of range");
    if (v >= field_.p()) throw error(errc::invalid_argument, "coefficient out of range");
    c_[i] = static_cast<uint8_t>(v);
}

bool RowVector::is_zero() const {
    for (uint8_t v : c_)
        if (v != 0) return false;
    return true;
}

std::size_t RowVector::leading() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return c_.size();
}

void RowVector::add_scaled(const RowVector& other, uint8_t k) {
    if (other.width() != width()) throw error(errc::dimension, "row width mismatch");
    if (k == 0) return;
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = field_.add(c_[i], field_.mul(k, other.c_[i]));
}

void RowVector::scale(uint8_t k) {
    for (auto& v : c_) v = field_.mul(v, k);
}

Matrix::Matrix(Field f, std::size_t width) : field_(f), width_(width) {}

void Matrix::append_row(RowVector r) {
    if (r.width() != width_) throw error(errc::dimension, "row width mismatch");
    if (r.field() != field_) throw error(errc::dimension, "row field mismatch");
    rows_.push_back(std::move(r));
}

RowBasis::RowBasis(Field f, std::size_t width)
    : field_(f), width_(width), pivot_row_(width, -1) {}

std::size_t RowBasis::reduce(RowVector& v) const {
    for (;;) {
        std::size_t lead = v.leading();
        if (lead == width_) return width_;
        int r = pivot_row_[lead];
        if (r < 0) return lead;
        // cancel the leading coefficient against the pivot row
        uint8_t factor = field_.mul(v.at(lead), field_.inv(rows_[r].at(lead)));
        v.add_scaled(rows_[r], field_.neg(factor));
    }
}

bool RowBasis::insert(RowVector v) {
    if (v.width() != width_) throw error(errc::dimension, "row width mismatch");
    std::size_t lead = reduce(v);
    if (lead == width_) return false;
    // normalize the pivot to 1 for a canonical echelon form
    v.scale(field_.inv(v.at(lead)));
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

bool RowBasis::contains(RowVector v) const {
    return reduce(v) == width_;
}

std::size_t rank(const Matrix& m) {
    RowBasis b(m.field(), m.width());
    for (const auto& r : m.rows()) b.insert(r);
    return b.rank();
}

bool in_rowspan(const RowVector& v, const Matrix& m) {
    if (v.width() != m.width()) throw error(errc::dimension, "vector width does not match matrix width");
    RowBasis b(m.field(), m.width());
    for (const auto& r : m.rows()) b.insert(r);
    return b.contains(v);
}

std::size_t info_symbols(const Matrix& m, int block, int t) {
    if (t < 1) throw error(errc::invalid_argument, "subpacketization must be >= 1");
    if (m.width() % static_cast<std::size_t>(t) != 0)
        throw error(errc::dimension, "matrix width is not a multiple of t");
    std::size_t blocks = m.width() / static_cast<std::size_t>(t);
    if (block < 1 || static_cast<std::size_t>(block) > blocks)
        throw error(errc::dimension, "block index out of range");

    std::size_t lo = static_cast<std::size_t>(block - 1) * t;
    std::size_t hi = lo + static_cast<std::size_t>(t);

    // rank with the block's columns deleted
    Matrix reduced(m.field(), m.width() - static_cast<std::size_t>(t));
    for (const auto& r : m.rows()) {
        std::vector<uint8_t> c;
        c.reserve(reduced.width());
        for (std::size_t i = 0; i < m.width(); ++i)
            if (i < lo || i >= hi) c.push_back(r.at(i));
        reduced.append_row(RowVector(m.field(), std::move(c)));
    }
    return rank(m) - rank(reduced);
}

}  // namespace picod
