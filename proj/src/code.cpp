#include "code.hpp"

#include <algorithm>

#include <json.hpp>

#include "error.hpp"

namespace picod {

LinearCode::LinearCode(Instance inst, Field field, int t, std::vector<CodeRow> rows)
    : inst_(inst), field_(field), t_(t), rows_(std::move(rows)) {
    if (t_ < 1) throw error(errc::invalid_argument, "subpacketization t must be >= 1");
    for (const auto& r : rows_) {
        if (r.coeffs.width() != width())
            throw error(errc::dimension, "row width must be m*t");
        if (r.coeffs.field() != field_)
            throw error(errc::dimension, "row field mismatch");
        if (r.sender && (*r.sender < 1 || *r.sender > inst_.m()))
            throw error(errc::invalid_argument, "sender index out of range");
    }
}

bool operator==(const LinearCode& a, const LinearCode& b) {
    if (!(a.inst_ == b.inst_) || a.field_ != b.field_ || a.t_ != b.t_ ||
        a.rows_.size() != b.rows_.size())
        return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
        if (!(a.rows_[i].coeffs == b.rows_[i].coeffs) || a.rows_[i].sender != b.rows_[i].sender)
            return false;
    }
    return true;
}

std::vector<int> row_support(const CodeRow& row, int m, int t) {
    std::vector<int> out;
    for (int i = 1; i <= m; ++i) {
        for (int k = 0; k < t; ++k) {
            if (row.coeffs.at(static_cast<std::size_t>(i - 1) * t + k) != 0) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

static int support_range(const std::vector<int>& support, int m) {
    // b = m - g + 1 where g is the largest circular gap between
    // consecutive support indices; a singleton has the full-circle gap m.
    int k = static_cast<int>(support.size());
    int max_gap = support[0] + m - support[k - 1];
    for (int i = 0; i + 1 < k; ++i) max_gap = std::max(max_gap, support[i + 1] - support[i]);
    return m - max_gap + 1;
}

int row_range(const CodeRow& row, int m, int t) {
    std::vector<int> support = row_support(row, m, t);
    if (support.empty()) throw error(errc::degenerate_row, "zero row has no range");
    return support_range(support, m);
}

std::optional<int> fitting_window_start(const std::vector<int>& support, int m, int s) {
    if (support.empty()) return std::nullopt;
    int b = support_range(support, m);
    if (b > s) return std::nullopt;
    // anchors of minimal covering intervals: supports preceded by a maximal gap
    int k = static_cast<int>(support.size());
    int best = m + 1;
    for (int i = 0; i < k; ++i) {
        int prev = (i == 0) ? support[k - 1] - m : support[i - 1];
        if (support[i] - prev == m - b + 1) best = std::min(best, support[i]);
    }
    return best;
}

LinearCode validate(LinearCode code) {
    const Instance& inst = code.instance();
    int m = inst.m(), s = inst.s(), t = code.t();
    for (std::size_t i = 0; i < code.rows_.size(); ++i) {
        CodeRow& row = code.rows_[i];
        std::vector<int> support = row_support(row, m, t);
        if (support.empty())
            throw error(errc::degenerate_row, "row " + std::to_string(i + 1) + " is zero");
        int b = support_range(support, m);
        if (b > s)
            throw error(errc::window_violation,
                        "row " + std::to_string(i + 1) + " has range " + std::to_string(b) +
                            " exceeding the window length " + std::to_string(s));
        if (row.sender) {
            for (int x : support) {
                if (!inst.knows(*row.sender, x))
                    throw error(errc::window_violation,
                                "row " + std::to_string(i + 1) + " is not contained in the window of user " +
                                    std::to_string(*row.sender));
            }
        } else {
            row.sender = fitting_window_start(support, m, s);
            if (!row.sender)
                throw error(errc::window_violation,
                            "row " + std::to_string(i + 1) + " fits no sender window");
        }
    }
    code.validated_ = true;
    return code;
}

std::string serialize(const LinearCode& code) {
    nlohmann::json doc;
    doc["m"] = code.instance().m();
    doc["s"] = code.instance().s();
    doc["p"] = code.field().p();
    doc["t"] = code.t();
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : code.rows()) {
        nlohmann::json jr;
        jr["sender"] = row.sender ? nlohmann::json(*row.sender) : nlohmann::json(nullptr);
        jr["coeffs"] = nlohmann::json::array();
        for (std::size_t i = 0; i < row.coeffs.width(); ++i) jr["coeffs"].push_back(row.coeffs.at(i));
        doc["rows"].push_back(std::move(jr));
    }
    return doc.dump(2);
}

LinearCode deserialize(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse, std::string("bad code document: ") + e.what());
    }
    try {
        int m = doc.at("m").get<int>();
        int s = doc.at("s").get<int>();
        unsigned p = doc.at("p").get<unsigned>();
        int t = doc.value("t", 1);
        Instance inst(m, s);
        Field f(p);  // rejects non-prime moduli
        std::size_t width = static_cast<std::size_t>(m) * t;
        std::vector<CodeRow> rows;
        for (const auto& jr : doc.at("rows")) {
            const auto& jc = jr.at("coeffs");
            if (jc.size() != width)
                throw error(errc::parse, "row has " + std::to_string(jc.size()) +
                                             " coefficients, expected m*t = " + std::to_string(width));
            std::vector<uint8_t> c;
            c.reserve(width);
            for (const auto& v : jc) {
                long long x = v.get<long long>();
                if (x < 0 || x >= static_cast<long long>(p))
                    throw error(errc::parse, "coefficient out of range [0, p-1]");
                c.push_back(static_cast<uint8_t>(x));
            }
            std::optional<int> sender;
            if (jr.contains("sender") && !jr.at("sender").is_null()) sender = jr.at("sender").get<int>();
            rows.push_back(CodeRow{RowVector(f, std::move(c)), sender});
        }
        return LinearCode(inst, f, t, std::move(rows));
    } catch (const error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse, std::string("bad code document: ") + e.what());
    }
}

CodeRow make_row(const Instance& inst, const Field& f, int t,
                 const std::vector<std::pair<int, unsigned>>& message_coeffs,
                 std::optional<int> sender) {
    RowVector v(f, static_cast<std::size_t>(inst.m()) * t);
    for (auto [msg, coeff] : message_coeffs) {
        int i = inst.wrap(msg);
        v.set(static_cast<std::size_t>(i - 1) * t, coeff);  // first symbol of the message
    }
    return CodeRow{std::move(v), sender};
}

}  // namespace picod
