#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace fold {

// Laurent polynomial in v with integer coefficients; no stored zeros.
class LaurentInt {
public:
    using Terms = std::map<int, long long>;

    LaurentInt() = default;
    explicit LaurentInt(long long c) {
        if (c != 0) terms_[0] = c;
    }
    static LaurentInt v_pow(int k, long long c = 1) {
        LaurentInt r;
        if (c != 0) r.terms_[k] = c;
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? 0 : it->second;
    }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    LaurentInt& operator+=(const LaurentInt& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LaurentInt& operator-=(const LaurentInt& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
    friend LaurentInt operator-(const LaurentInt& a) {
        LaurentInt r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
        LaurentInt r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
        return r;
    }
    LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }

    // Drops all terms of degree > bound.
    LaurentInt truncate(int bound) const {
        LaurentInt r;
        for (const auto& [k, c] : terms_)
            if (k <= bound) r.terms_[k] = c;
        return r;
    }

    // Substitute v -> x for x = +1 or -1.
    long long evaluate_sign(int x) const {
        long long acc = 0;
        for (const auto& [k, c] : terms_) acc += (x == -1 && (k % 2 != 0)) ? -c : c;
        return acc;
    }

    bool nonnegative() const {
        for (const auto& [k, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    friend bool operator==(const LaurentInt&, const LaurentInt&) = default;

private:
    Terms terms_;

    void add(int k, long long c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
};

inline std::string to_string(const LaurentInt& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        long long a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        if (k == 1) mono = "v";
        else if (k != 0) mono = "v^" + std::to_string(k);
        if (mono.empty()) out += std::to_string(a);
        else if (a == 1) out += mono;
        else out += std::to_string(a) + mono;
    }
    return out;
}

// Truncation of the Hilbert series of R^tau = k[as+at, as*at]
// (generator degrees 2 and 4): 1 / ((1 - v^2)(1 - v^4)).
inline LaurentInt rtau_hilbert_series(int bound) {
    LaurentInt r;
    for (int a = 0; 2 * a <= bound; ++a)
        for (int b = 0; 2 * a + 4 * b <= bound; ++b) r += LaurentInt::v_pow(2 * a + 4 * b);
    return r;
}

}  // namespace fold
