// An (m, s) circular-shift instance: m users/messages, each user j holding
// the s circularly consecutive messages {j, ..., j+s-1}. Classification
// into feasibility regimes and the closed-form bounds on the optimal
// secure code length, exact rationals throughout.

#ifndef PICOD_INSTANCE_HPP
#define PICOD_INSTANCE_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace picod {

class Instance {
public:
    /// Requires m >= 2 and 1 <= s <= m-1 (users have some but not all messages).
    Instance(int m, int s);

    int m() const { return m_; }
    int s() const { return s_; }

    /// Maps any integer onto the circular message index range [1..m].
    int wrap(int i) const;

    /// Side information window of user j, in circular order {j, j+1, ...}.
    std::vector<int> side_info(int j) const;

    /// True iff message i lies in user j's window.
    bool knows(int j, int i) const;

    /// (m - s) divides m: one-shot centralized regime, secure optimum m/s.
    bool divisible() const { return m_ % (m_ - s_) == 0; }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.m_ == b.m_ && a.s_ == b.s_;
    }

private:
    int m_;
    int s_;
};

enum class Regime {
    Divisible,           // (m-s) | m
    InfeasibleLinear,    // one of the four known infeasible families
    GeneralNonDivisible, // everything else
};

struct RegimeClassification {
    Regime regime;
    /// 1: s=1, m>=3; 2: s=2, m>=5; 3: s=3, odd m; 4: s=m-2, odd m.
    std::optional<int> infeasibility_case;
    std::optional<Rational> lower_bound;
    std::optional<Rational> upper_bound;  // nullopt = open/unknown
};

struct CentralizedBounds {
    std::optional<Rational> it_optimal;
    std::optional<Rational> linear_optimal;
    bool infeasible = false;
};

/// Total on valid instances; the regimes are mutually exclusive.
RegimeClassification classify(const Instance& inst);

/// ceil(3m / 2s): the scalar (t = 1) converse. Only defined off the
/// divisible regime; throws errc::regime otherwise.
long long scalar_lower_bound(const Instance& inst);

/// Centralized secure PICOD bounds for the same (m, s), for gap reporting.
CentralizedBounds centralized_bounds(const Instance& inst);

/// Decentralized best-known length over the centralized linear optimum
/// (falling back to the centralized it-optimum when the linear value is
/// not defined). nullopt when either side is unknown or infeasible.
std::optional<Rational> gap_report(const Instance& inst);

const char* regime_name(Regime r);

}  // namespace picod

#endif
