#include "verifier.hpp"

#include <algorithm>

#include <json.hpp>

#include "error.hpp"

namespace picod {

static Matrix generator_matrix(const LinearCode& code) {
    Matrix g(code.field(), code.width());
    for (const auto& row : code.rows()) g.append_row(row.coeffs);
    return g;
}

// Generator rows plus the t*s standard basis rows of user j's window.
static Matrix observer_matrix(const LinearCode& code, int j) {
    Matrix m = generator_matrix(code);
    const Instance& inst = code.instance();
    int t = code.t();
    for (int i : inst.side_info(j)) {
        for (int k = 0; k < t; ++k) {
            RowVector e(code.field(), code.width());
            e.set(static_cast<std::size_t>(i - 1) * t + k, 1);
            m.append_row(std::move(e));
        }
    }
    return m;
}

UserReport leakage_profile(const LinearCode& code, int j) {
    if (!code.validated())
        throw error(errc::invalid_argument, "leakage_profile requires a validated code");
    const Instance& inst = code.instance();
    if (j < 1 || j > inst.m()) throw error(errc::invalid_argument, "user index out of range");

    Matrix mj = observer_matrix(code, j);
    int t = code.t();

    UserReport rep;
    rep.user = j;
    int positive = 0, full = 0;
    for (int i = 1; i <= inst.m(); ++i) {
        if (inst.knows(j, i)) continue;
        int lk = static_cast<int>(info_symbols(mj, i, t));
        rep.leakage.emplace_back(i, lk);
        if (lk > 0) ++positive;
        if (lk == t) {
            ++full;
            rep.decoded = i;
        }
    }
    if (full != 1) rep.decoded = std::nullopt;

    if (positive >= 2)
        rep.status = UserStatus::SecurityViolation;
    else if (full == 1)
        rep.status = UserStatus::SatisfiedSecure;
    else
        rep.status = UserStatus::UnsatisfiedSecure;
    return rep;
}

VerificationReport verify(const LinearCode& code) {
    if (!code.validated())
        throw error(errc::invalid_argument, "verify requires a validated code");
    const Instance& inst = code.instance();

    VerificationReport out;
    out.length = code.length();
    out.feasible = true;
    for (int j = 1; j <= inst.m(); ++j) {
        out.per_user.push_back(leakage_profile(code, j));
        if (out.per_user.back().status != UserStatus::SatisfiedSecure) out.feasible = false;
    }
    for (const auto& row : code.rows()) {
        int b = row_range(row, inst.m(), code.t());
        out.ranges.push_back(b);
        out.sum_ranges += b;
    }
    std::sort(out.ranges.begin(), out.ranges.end());
    return out;
}

bool check_no_basis_vector(const LinearCode& code) {
    if (!code.validated())
        throw error(errc::invalid_argument, "check_no_basis_vector requires a validated code");
    Matrix g = generator_matrix(code);
    // info_symbols(G, i, t) counts independent vectors of Span(G) supported
    // on message i's columns alone; any positive count exhibits one.
    for (int i = 1; i <= code.instance().m(); ++i)
        if (info_symbols(g, i, code.t()) > 0) return false;
    return true;
}

RangeAccounting check_range_accounting(const LinearCode& code) {
    if (!code.validated())
        throw error(errc::invalid_argument, "check_range_accounting requires a validated code");
    if (code.t() != 1)
        throw error(errc::unsupported,
                    "range accounting is a per-transmission count, defined for t = 1 only");
    RangeAccounting out;
    for (const auto& row : code.rows())
        out.sum_b += row_range(row, code.instance().m(), 1);
    long long l = static_cast<long long>(code.row_count());
    out.threshold = Rational(code.instance().m(), 2) + Rational(l);
    out.pass = Rational(out.sum_b) >= out.threshold;
    return out;
}

const char* status_name(UserStatus s) {
    switch (s) {
        case UserStatus::SatisfiedSecure: return "SatisfiedSecure";
        case UserStatus::UnsatisfiedSecure: return "UnsatisfiedSecure";
        case UserStatus::SecurityViolation: return "SecurityViolation";
    }
    return "?";
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json doc;
    doc["feasible"] = report.feasible;
    doc["length"] = {{"num", report.length.num}, {"den", report.length.den}};
    doc["sum_ranges"] = report.sum_ranges;
    doc["ranges"] = report.ranges;
    doc["users"] = nlohmann::json::array();
    for (const auto& u : report.per_user) {
        nlohmann::json ju;
        ju["user"] = u.user;
        ju["status"] = status_name(u.status);
        ju["decoded"] = u.decoded ? nlohmann::json(*u.decoded) : nlohmann::json(nullptr);
        ju["leakage"] = nlohmann::json::array();
        for (auto [msg, sym] : u.leakage)
            ju["leakage"].push_back({{"message", msg}, {"symbols", sym}});
        doc["users"].push_back(std::move(ju));
    }
    return doc.dump(2);
}

}  // namespace picod
