// Exact feasibility/security decision for a linear code. A user j
// observing all transmissions on top of its side information learns
// info_symbols worth of each outside message; "learns nothing" is a zero
// rank drop, which is exact for uniform independent messages under linear
// observations. The decoded message d_j is an output: the unique outside
// message learned in full.

#ifndef PICOD_VERIFIER_HPP
#define PICOD_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "code.hpp"
#include "rational.hpp"

namespace picod {

enum class UserStatus {
    SatisfiedSecure,    // exactly one outside message fully learned, all others zero
    UnsatisfiedSecure,  // nothing fully learned, at most one partial
    SecurityViolation,  // two or more outside messages with positive leakage
};

struct UserReport {
    int user = 0;
    /// (message, symbols learned) for every message outside the window,
    /// ascending by message index; symbols in [0, t].
    std::vector<std::pair<int, int>> leakage;
    std::optional<int> decoded;  // unique message with leakage == t, if any
    UserStatus status = UserStatus::UnsatisfiedSecure;
};

struct VerificationReport {
    std::vector<UserReport> per_user;
    bool feasible = false;       // all users SatisfiedSecure
    std::vector<int> ranges;     // multiset {b_i}, ascending
    long long sum_ranges = 0;
    Rational length;
};

struct RangeAccounting {
    long long sum_b = 0;
    Rational threshold;  // m/2 + l
    bool pass = false;
};

/// Leakage of every outside message at user j, on a validated code.
UserReport leakage_profile(const LinearCode& code, int j);

/// Evaluate all m users; feasible iff everyone is SatisfiedSecure.
VerificationReport verify(const LinearCode& code);

/// True iff no vector supported on a single message's columns lies in the
/// row span of the generator matrix.
bool check_no_basis_vector(const LinearCode& code);

/// Necessary condition sum(b_i) >= m/2 + l for scalar codes; refuses t > 1.
RangeAccounting check_range_accounting(const LinearCode& code);

std::string report_to_json(const VerificationReport& report);
const char* status_name(UserStatus s);

}  // namespace picod

#endif
