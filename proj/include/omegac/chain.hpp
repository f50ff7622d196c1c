#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>

#include "error.hpp"

namespace omegac {

using Int = boost::multiprecision::cpp_int;

/* Integer formal sum of basis elements of a single degree.  Zero coefficients
 * are never stored; the zero chain of any degree is the empty map.  Iteration
 * order (std::map, lexicographic on ids) fixes all output orders. */
struct Chain {
    int deg = 0;
    std::map<std::string, Int> coeffs;

    Chain() = default;
    explicit Chain(int d) : deg(d) {}
    Chain(int d, std::map<std::string, Int> c) : deg(d), coeffs(std::move(c)) {
        prune();
    }

    static Chain unit(int d, const std::string& id, Int c = 1) {
        Chain x(d);
        x.add(id, c);
        return x;
    }

    void prune() {
        for (auto it = coeffs.begin(); it != coeffs.end();) {
            if (it->second == 0)
                it = coeffs.erase(it);
            else
                ++it;
        }
    }

    bool is_zero() const { return coeffs.empty(); }

    Int coeff(const std::string& id) const {
        auto it = coeffs.find(id);
        return it == coeffs.end() ? Int(0) : it->second;
    }

    void add(const std::string& id, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs.emplace(id, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    Chain& operator+=(const Chain& o) {
        if (!o.is_zero() && !is_zero() && deg != o.deg)
            throw Error("DegreeMismatch", "chain addition of degrees " + std::to_string(deg) + " and " + std::to_string(o.deg));
        if (is_zero()) deg = o.deg;
        for (auto& [id, c] : o.coeffs) add(id, c);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        if (!o.is_zero() && !is_zero() && deg != o.deg)
            throw Error("DegreeMismatch", "chain subtraction of degrees " + std::to_string(deg) + " and " + std::to_string(o.deg));
        if (is_zero()) deg = o.deg;
        for (auto& [id, c] : o.coeffs) add(id, -c);
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Int& n, const Chain& x) {
        Chain r(x.deg);
        if (n != 0)
            for (auto& [id, c] : x.coeffs) r.coeffs.emplace(id, n * c);
        return r;
    }
    friend Chain operator-(const Chain& x) { return Int(-1) * x; }

    bool operator==(const Chain& o) const {
        if (is_zero() && o.is_zero()) return true;
        return deg == o.deg && coeffs == o.coeffs;
    }
    bool operator!=(const Chain& o) const { return !(*this == o); }
    bool operator<(const Chain& o) const {
        if (deg != o.deg) return deg < o.deg;
        return coeffs < o.coeffs;
    }

    /* (x)_+ : keep positive coefficients. */
    Chain positive_part() const {
        Chain r(deg);
        for (auto& [id, c] : coeffs)
            if (c > 0) r.coeffs.emplace(id, c);
        return r;
    }
    /* (x)_- : negated negative coefficients, so x = (x)_+ - (x)_-. */
    Chain negative_part() const {
        Chain r(deg);
        for (auto& [id, c] : coeffs)
            if (c < 0) r.coeffs.emplace(id, -c);
        return r;
    }
    bool is_nonnegative() const {
        for (auto& [id, c] : coeffs)
            if (c < 0) return false;
        return true;
    }
    /* x ∧ y : elementwise minimum (intended for nonnegative chains). */
    Chain meet(const Chain& o) const {
        if (!is_zero() && !o.is_zero() && deg != o.deg)
            throw Error("DegreeMismatch", "meet of degrees " + std::to_string(deg) + " and " + std::to_string(o.deg));
        Chain r(deg);
        for (auto& [id, c] : coeffs) {
            Int m = c < o.coeff(id) ? c : o.coeff(id);
            if (m != 0) r.coeffs.emplace(id, m);
        }
        return r;
    }

    Int coeff_sum() const {
        Int s = 0;
        for (auto& [id, c] : coeffs) s += c;
        return s;
    }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [id, c] : coeffs) {
            if (c > 0 && !first) os << "+";
            if (c == -1)
                os << "-";
            else if (c != 1)
                os << c << "*";
            os << id;
            first = false;
        }
        return os.str();
    }
};

} // namespace omegac
