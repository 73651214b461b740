#pragma once

#include <ncsf/rational.hpp>

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ncsf {

// Dense polynomial in the formal parameter q with rational coefficients.
// coeffs_[i] is the coefficient of q^i; the top coefficient is nonzero.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& c)
    {
        if (!ncsf::is_zero(c)) c_.push_back(c);
    }
    QPoly(long n) : QPoly(Rat(n)) {}

    static QPoly monomial(const Rat& c, int e)
    {
        assert(e >= 0);
        QPoly p;
        if (ncsf::is_zero(c)) return p;
        p.c_.assign(e + 1, Rat(0));
        p.c_[e] = c;
        return p;
    }
    static QPoly q() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const Rat& coeff(int e) const
    {
        static const Rat zero(0);
        if (e < 0 || e >= static_cast<int>(c_.size())) return zero;
        return c_[e];
    }
    const Rat& lead() const { return c_.back(); }

    // Lowest exponent with nonzero coefficient; 0 for the zero polynomial.
    int low_order() const
    {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!ncsf::is_zero(c_[i])) return static_cast<int>(i);
        return 0;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b)
    {
        QPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b)
    {
        QPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.trim();
        return r;
    }
    QPoly operator-() const
    {
        QPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b)
    {
        QPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (ncsf::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const
    {
        assert(!d.is_zero());
        QPoly quo, rem(*this);
        if (rem.degree() >= d.degree())
            quo.c_.assign(rem.degree() - d.degree() + 1, Rat(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int e = rem.degree() - d.degree();
            Rat f = rem.lead() / d.lead();
            quo.c_[e] = f;
            for (int i = 0; i <= d.degree(); ++i) rem.c_[e + i] -= f * d.c_[i];
            rem.trim();
        }
        quo.trim();
        return {quo, rem};
    }

    // Monic gcd.
    static QPoly gcd(QPoly a, QPoly b)
    {
        while (!b.is_zero()) {
            QPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero() && !ncsf::is_one(a.lead())) {
            Rat inv = Rat(1) / a.lead();
            for (auto& c : a.c_) c *= inv;
        }
        return a;
    }

    bool is_monomial() const
    {
        if (is_zero()) return false;
        for (size_t i = 0; i + 1 < c_.size(); ++i)
            if (!ncsf::is_zero(c_[i])) return false;
        return true;
    }

private:
    void trim()
    {
        while (!c_.empty() && ncsf::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Rational function in q, kept reduced with a monic denominator.
// Laurent polynomials are the special case den = q^k.
class QFrac {
public:
    QFrac() : num_(), den_(1) {}
    QFrac(const Rat& c) : num_(c), den_(1) {}
    QFrac(long n) : num_(n), den_(1) {}
    QFrac(QPoly n, QPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    QFrac(QPoly n) : num_(std::move(n)), den_(1) {}

    static QFrac q_power(int e)
    {
        if (e >= 0) return QFrac(QPoly::monomial(1, e));
        return QFrac(QPoly(1), QPoly::monomial(1, -e));
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend QFrac operator+(const QFrac& a, const QFrac& b)
    {
        return QFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QFrac operator-(const QFrac& a, const QFrac& b)
    {
        return QFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    QFrac operator-() const
    {
        QFrac r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend QFrac operator*(const QFrac& a, const QFrac& b)
    {
        return QFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QFrac operator/(const QFrac& a, const QFrac& b)
    {
        if (b.is_zero()) throw std::domain_error("QFrac: division by zero");
        return QFrac(a.num_ * b.den_, a.den_ * b.num_);
    }
    QFrac& operator+=(const QFrac& o) { return *this = *this + o; }
    QFrac& operator-=(const QFrac& o) { return *this = *this - o; }
    QFrac& operator*=(const QFrac& o) { return *this = *this * o; }
    QFrac& operator/=(const QFrac& o) { return *this = *this / o; }
    friend bool operator==(const QFrac& a, const QFrac& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // True when the value is c*q^e + ... with den = q^k, i.e. a Laurent polynomial.
    bool is_laurent() const { return den_.is_monomial(); }

private:
    void normalize()
    {
        if (den_.is_zero()) throw std::domain_error("QFrac: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        if (!ncsf::is_one(den_.lead())) {
            QFrac scaled;
            Rat inv = Rat(1) / den_.lead();
            num_ = num_ * QPoly(inv);
            den_ = den_ * QPoly(inv);
        }
    }
    QPoly num_, den_;
};

inline bool is_zero(const QFrac& a) { return a.is_zero(); }
inline bool is_one(const QFrac& a) { return a == QFrac(1); }

// Laurent text form: "c*q^e" terms joined with +/-, exponent ascending.
// "1" is omitted as a coefficient, q^0 prints as the bare coefficient,
// q^1 prints as "q".
inline std::string to_string(const QFrac& a)
{
    if (a.is_zero()) return "0";
    if (!a.is_laurent()) {
        auto poly_str = [](const QPoly& p) {
            std::string s;
            for (int e = 0; e <= p.degree(); ++e) {
                const Rat& c = p.coeff(e);
                if (ncsf::is_zero(c)) continue;
                if (!s.empty()) s += (c > 0 ? " + " : " - ");
                else if (c < 0) s += "-";
                Rat ac = abs(c);
                std::string cs = to_string(ac);
                if (e == 0) s += cs;
                else {
                    if (!is_one(ac)) s += cs + "*";
                    s += (e == 1) ? "q" : "q^" + std::to_string(e);
                }
            }
            return s;
        };
        return "(" + poly_str(a.num()) + ")/(" + poly_str(a.den()) + ")";
    }
    int shift = a.den().degree();
    std::string s;
    for (int e = 0; e <= a.num().degree(); ++e) {
        const Rat& c = a.num().coeff(e);
        if (ncsf::is_zero(c)) continue;
        if (!s.empty()) s += (c > 0 ? " + " : " - ");
        else if (c < 0) s += "-";
        Rat ac = abs(c);
        int ex = e - shift;
        if (ex == 0) s += to_string(ac);
        else {
            if (!is_one(ac)) s += to_string(ac) + "*";
            s += (ex == 1) ? "q" : "q^" + std::to_string(ex);
        }
    }
    return s;
}

} // namespace ncsf
