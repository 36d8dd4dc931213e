// Decentralized linear codes: generator rows attributed to sending users.
// Each row's message support must fit inside the sender's circular side
// information window. Codes serialize to a JSON document that is the
// interchange format between the scheme, verify and search commands.

#ifndef PICOD_CODE_HPP
#define PICOD_CODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "instance.hpp"
#include "rational.hpp"

namespace picod {

struct CodeRow {
    RowVector coeffs;           // width m*t, message-major
    std::optional<int> sender;  // user whose window carries the support
};

class LinearCode {
public:
    LinearCode(Instance inst, Field field, int t, std::vector<CodeRow> rows);

    const Instance& instance() const { return inst_; }
    const Field& field() const { return field_; }
    int t() const { return t_; }
    const std::vector<CodeRow>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t width() const { return static_cast<std::size_t>(inst_.m()) * t_; }

    bool validated() const { return validated_; }

    /// Normalized code length: rows / t, exact.
    Rational length() const { return Rational(static_cast<long long>(rows_.size()), t_); }

    friend bool operator==(const LinearCode& a, const LinearCode& b);

private:
    friend LinearCode validate(LinearCode code);
    Instance inst_;
    Field field_;
    int t_;
    std::vector<CodeRow> rows_;
    bool validated_ = false;
};

/// Message indices (1-based, ascending) with a nonzero coefficient in any
/// of their t columns.
std::vector<int> row_support(const CodeRow& row, int m, int t);

/// Length of the shortest circular interval of message indices covering
/// the row's support (the row's range b). Throws on a zero row.
int row_range(const CodeRow& row, int m, int t);

/// Smallest window start a such that the support fits in [a : a+s-1]
/// circularly, preferring the start of the support's minimal covering
/// interval; nullopt if no window of length s contains the support.
std::optional<int> fitting_window_start(const std::vector<int>& support, int m, int s);

/// Checks every row's support against its sender's window, assigns a
/// sender to rows that lack one, and returns the annotated code.
/// Throws errc::window_violation naming the first offending row.
LinearCode validate(LinearCode code);

/// JSON document; deserialize(serialize(c)) reproduces c exactly.
std::string serialize(const LinearCode& code);
LinearCode deserialize(const std::string& document);

/// Convenience: build a row over GF(p) from {message -> coefficient}
/// pairs at t = 1, or from explicit column values.
CodeRow make_row(const Instance& inst, const Field& f, int t,
                 const std::vector<std::pair<int, unsigned>>& message_coeffs,
                 std::optional<int> sender = std::nullopt);

}  // namespace picod

#endif
