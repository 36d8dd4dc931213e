#include "instance.hpp"

#include <cassert>

#include "error.hpp"

namespace picod {

Instance::Instance(int m, int s) : m_(m), s_(s) {
    if (m < 2)
        throw error(errc::invalid_argument, "need at least two messages (m >= 2)");
    if (s < 1 || s > m - 1)
        throw error(errc::invalid_argument,
                    "side information length s must satisfy 1 <= s <= m-1");
}

int Instance::wrap(int i) const {
    int r = i % m_;
    if (r <= 0) r += m_;
    return r;
}

std::vector<int> Instance::side_info(int j) const {
    if (j < 1 || j > m_) throw error(errc::invalid_argument, "user index out of range");
    std::vector<int> out;
    out.reserve(s_);
    for (int k = 0; k < s_; ++k) out.push_back(wrap(j + k));
    return out;
}

bool Instance::knows(int j, int i) const {
    int d = i - j;
    d %= m_;
    if (d < 0) d += m_;
    return d < s_;
}

static std::optional<int> infeasible_case(const Instance& inst) {
    int m = inst.m(), s = inst.s();
    if (s == 1 && m >= 3) return 1;
    if (s == 2 && m >= 5) return 2;
    if (s == 3 && m % 2 == 1) return 3;
    if (s == m - 2 && m % 2 == 1) return 4;
    return std::nullopt;
}

RegimeClassification classify(const Instance& inst) {
    int m = inst.m(), s = inst.s();

    if (auto c = infeasible_case(inst)) {
        // The infeasible families never overlap the divisible regime.
        assert(!inst.divisible());
        return {Regime::InfeasibleLinear, c, std::nullopt, std::nullopt};
    }

    if (inst.divisible()) {
        Rational v(m, s);
        return {Regime::Divisible, std::nullopt, v, v};
    }

    RegimeClassification out{Regime::GeneralNonDivisible, std::nullopt,
                             Rational(3LL * m, 2LL * s), std::nullopt};
    if (m % (2 * s) == 0) {
        out.upper_bound = Rational(3LL * m, 2LL * s);
    } else if (m % 2 == 0) {
        out.upper_bound = Rational(m / 2 + 2 - (s + 1) / 2);
    } else if (s == m - 3 && s >= 8) {
        // explicit four-transmission construction for odd m, s = m-3
        out.upper_bound = Rational(4);
    }
    return out;
}

long long scalar_lower_bound(const Instance& inst) {
    if (inst.divisible())
        throw error(errc::regime, "scalar lower bound is defined off the divisible regime");
    return ceil_div(3LL * inst.m(), 2LL * inst.s());
}

CentralizedBounds centralized_bounds(const Instance& inst) {
    int m = inst.m(), s = inst.s();
    CentralizedBounds out;

    if (inst.divisible()) {
        out.it_optimal = Rational(1);
        out.linear_optimal = Rational(1);
        return out;
    }

    out.infeasible = (m % 2 == 1) && (s == 1 || s == m - 2);
    if (out.infeasible) return out;

    if (2 * s > m) {
        out.it_optimal = Rational(2);
        out.linear_optimal = Rational(2);
        return out;
    }
    if (2 * s < m) {
        long long v = ceil_div(m / s, 2);  // floor(m/s) then halve, rounded up
        if (m % s != 0) v += 1;
        out.linear_optimal = Rational(v);
    }
    // 2s == m cannot happen off the divisible regime: m - s = m/2 divides m.
    return out;
}

std::optional<Rational> gap_report(const Instance& inst) {
    RegimeClassification rc = classify(inst);
    if (!rc.upper_bound) return std::nullopt;

    CentralizedBounds cb = centralized_bounds(inst);
    std::optional<Rational> denom = cb.linear_optimal ? cb.linear_optimal : cb.it_optimal;
    if (!denom || denom->num == 0) return std::nullopt;
    return *rc.upper_bound / *denom;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Divisible: return "Divisible";
        case Regime::InfeasibleLinear: return "InfeasibleLinear";
        case Regime::GeneralNonDivisible: return "GeneralNonDivisible";
    }
    return "?";
}

}  // namespace picod
