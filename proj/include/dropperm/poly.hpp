#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dropperm/bigint.hpp"

namespace dropperm {

/// Dense integer polynomial in x. Canonical form: no trailing zero
/// coefficients, the zero polynomial is the empty vector.
class PolyX {
public:
    PolyX() = default;
    PolyX(std::initializer_list<Int> cs) : coeffs_(cs) { normalize(); }
    explicit PolyX(std::vector<Int> cs) : coeffs_(std::move(cs)) { normalize(); }
    explicit PolyX(Int c) : coeffs_{std::move(c)} { normalize(); }
    explicit PolyX(long long c) : coeffs_{Int(c)} { normalize(); }

    static PolyX zero() { return PolyX{}; }
    static PolyX one() { return PolyX{Int(1)}; }
    static PolyX x() { return PolyX{Int(0), Int(1)}; }

    // x^d with coefficient c
    static PolyX monomial(Int c, std::size_t d) {
        std::vector<Int> cs(d + 1, Int(0));
        cs[d] = std::move(c);
        return PolyX(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    // degree of the zero polynomial is -1
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    Int coeff(std::size_t r) const {
        return r < coeffs_.size() ? coeffs_[r] : Int(0);
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int eval_at_one() const {
        Int s = 0;
        for (const Int& c : coeffs_) s += c;
        return s;
    }

    Int eval(const Int& v) const {
        Int s = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * v + *it;
        return s;
    }

    // substitute x -> x^m (spreads coefficients; used for A_r(u^{k+1}))
    PolyX inflate(std::size_t m) const {
        if (is_zero() || m == 1) return *this;
        std::vector<Int> cs(coeffs_.size() * m - m + 1, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i * m] = coeffs_[i];
        return PolyX(std::move(cs));
    }

    friend PolyX operator+(const PolyX& a, const PolyX& b) {
        std::vector<Int> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
        return PolyX(std::move(cs));
    }

    friend PolyX operator-(const PolyX& a) {
        std::vector<Int> cs(a.coeffs_);
        for (Int& c : cs) c = -c;
        return PolyX(std::move(cs));
    }

    friend PolyX operator-(const PolyX& a, const PolyX& b) { return a + (-b); }

    friend PolyX operator*(const PolyX& a, const PolyX& b) {
        if (a.is_zero() || b.is_zero()) return PolyX{};
        std::vector<Int> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyX(std::move(cs));
    }

    friend PolyX operator*(const Int& s, const PolyX& a) {
        if (s == 0) return PolyX{};
        std::vector<Int> cs(a.coeffs_);
        for (Int& c : cs) c *= s;
        return PolyX(std::move(cs));
    }

    bool operator==(const PolyX& o) const { return coeffs_ == o.coeffs_; }

    /// Render as "c0 + c1*x + c2*x^2", zero terms omitted.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            Int a = c < 0 ? Int(-c) : c;
            if (i == 0) {
                os << a.str();
            } else {
                if (a != 1) os << a.str() << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Truncated power series in t with PolyX coefficients. Exactly order+1
/// coefficients are kept; arithmetic never changes the order silently.
class SeriesTX {
public:
    SeriesTX(std::size_t order, std::vector<PolyX> cs)
        : order_(order), coeffs_(std::move(cs)) {
        if (coeffs_.size() != order_ + 1)
            throw std::invalid_argument("SeriesTX: coefficient count must equal order+1");
    }

    static SeriesTX zero(std::size_t order) {
        return SeriesTX(order, std::vector<PolyX>(order + 1));
    }

    static SeriesTX one(std::size_t order) {
        auto s = zero(order);
        s.coeffs_[0] = PolyX::one();
        return s;
    }

    /// series from a polynomial in t (truncating or zero-padding)
    static SeriesTX from_tpoly(std::size_t order, const std::vector<PolyX>& tp) {
        auto s = zero(order);
        for (std::size_t i = 0; i <= order && i < tp.size(); ++i) s.coeffs_[i] = tp[i];
        return s;
    }

    std::size_t order() const { return order_; }
    const PolyX& coeff(std::size_t n) const { return coeffs_.at(n); }
    const std::vector<PolyX>& coeffs() const { return coeffs_; }

    friend SeriesTX operator+(const SeriesTX& a, const SeriesTX& b) {
        a.check(b);
        auto s = zero(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return s;
    }

    friend SeriesTX operator-(const SeriesTX& a, const SeriesTX& b) {
        a.check(b);
        auto s = zero(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return s;
    }

    /// Cauchy product, truncated at the common order.
    friend SeriesTX operator*(const SeriesTX& a, const SeriesTX& b) {
        a.check(b);
        auto s = zero(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i)
            for (std::size_t j = 0; i + j <= a.order_; ++j)
                s.coeffs_[i + j] = s.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return s;
    }

    friend SeriesTX operator*(const PolyX& p, const SeriesTX& a) {
        auto s = zero(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i) s.coeffs_[i] = p * a.coeffs_[i];
        return s;
    }

    /// multiply by t (shift up, dropping the top coefficient)
    SeriesTX shift_t() const {
        auto s = zero(order_);
        for (std::size_t i = 1; i <= order_; ++i) s.coeffs_[i] = coeffs_[i - 1];
        return s;
    }

    bool operator==(const SeriesTX& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    /// specialization x := 1 per power of t
    std::vector<Int> at_x_one() const {
        std::vector<Int> v;
        v.reserve(order_ + 1);
        for (const PolyX& p : coeffs_) v.push_back(p.eval_at_one());
        return v;
    }

    /// Per-power-of-t rendering in the display style "(...)*t^n".
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t n = 0; n <= order_; ++n) {
            if (coeffs_[n].is_zero()) continue;
            if (!first) os << " + ";
            if (n == 0) {
                os << coeffs_[n].str();
            } else {
                os << "(" << coeffs_[n].str() << ")*t";
                if (n > 1) os << "^" << n;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void check(const SeriesTX& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("SeriesTX: truncation order mismatch");
    }

    std::size_t order_;
    std::vector<PolyX> coeffs_;
};

/// Reciprocal of a series whose constant term is the constant polynomial
/// 1 or -1, by the convolution recurrence.
inline SeriesTX series_reciprocal(const SeriesTX& a) {
    const PolyX& c0 = a.coeff(0);
    bool plus = c0 == PolyX::one();
    bool minus = c0 == PolyX{Int(-1)};
    if (!plus && !minus)
        throw std::invalid_argument("series_reciprocal: constant term must be 1 or -1");
    const std::size_t N = a.order();
    std::vector<PolyX> b(N + 1);
    b[0] = plus ? PolyX::one() : PolyX{Int(-1)};
    for (std::size_t n = 1; n <= N; ++n) {
        PolyX acc;
        for (std::size_t i = 1; i <= n; ++i) acc = acc + a.coeff(i) * b[n - i];
        b[n] = plus ? -acc : acc;  // divide by the unit constant term
    }
    return SeriesTX(N, std::move(b));
}

/// Ratio of polynomials in t over PolyX. Denominator must have constant
/// term with nonzero evaluation at t=0 (unit 1 in all uses here).
struct RationalTX {
    std::vector<PolyX> num;
    std::vector<PolyX> den;

    RationalTX(std::vector<PolyX> n, std::vector<PolyX> d)
        : num(std::move(n)), den(std::move(d)) {
        if (den.empty() || den[0].is_zero())
            throw std::invalid_argument("RationalTX: denominator needs nonzero constant term");
    }

    SeriesTX to_series(std::size_t order) const {
        SeriesTX n = SeriesTX::from_tpoly(order, num);
        SeriesTX d = SeriesTX::from_tpoly(order, den);
        return n * series_reciprocal(d);
    }

    /// substitute x := v, giving integer numerator/denominator coefficients in t
    std::pair<std::vector<Int>, std::vector<Int>> substitute_x(const Int& v) const {
        std::vector<Int> n, d;
        for (const PolyX& p : num) n.push_back(p.eval(v));
        for (const PolyX& p : den) d.push_back(p.eval(v));
        while (!n.empty() && n.back() == 0) n.pop_back();
        while (!d.empty() && d.back() == 0) d.pop_back();
        return {n, d};
    }
};

/// product of two polynomials in t with PolyX coefficients
inline std::vector<PolyX> tpoly_mul(const std::vector<PolyX>& a, const std::vector<PolyX>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<PolyX> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = c[i + j] + a[i] * b[j];
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

inline std::vector<PolyX> tpoly_sub(const std::vector<PolyX>& a, const std::vector<PolyX>& b) {
    std::vector<PolyX> c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        PolyX ai = i < a.size() ? a[i] : PolyX{};
        PolyX bi = i < b.size() ? b[i] : PolyX{};
        c[i] = ai - bi;
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

/// render a polynomial in t with PolyX coefficients, display style
inline std::string tpoly_str(const std::vector<PolyX>& tp) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < tp.size(); ++n) {
        if (tp[n].is_zero()) continue;
        if (!first) os << " + ";
        if (n == 0) {
            os << tp[n].str();
        } else {
            os << "(" << tp[n].str() << ")*t";
            if (n > 1) os << "^" << n;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace dropperm
