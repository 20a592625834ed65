#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace presched {

/// Exact rational number.
///
/// Thin wrapper over GMP's mpq_class that keeps every value canonical
/// (reduced fraction, positive denominator) and adds the textual forms
/// used throughout the toolkit: plain integers or "a/b".  There is no
/// floating point anywhere in the library; all time quantities are
/// instances of this type.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(int64_str(n), 10) {}

    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }

    /// Parses "a", "-a" or "a/b" (b > 0 after sign normalization).
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        std::size_t slash = s.find('/');
        if (slash == 0 || slash == s.size() - 1)
            throw std::invalid_argument("Rational: malformed '" + s + "'");
        check_int_token(slash == std::string::npos ? s : s.substr(0, slash), true);
        if (slash != std::string::npos) check_int_token(s.substr(slash + 1), false);
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: malformed '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    /// Canonical text: "a/b", or just "a" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    bool is_integer() const { return v_.get_den() == 1; }
    bool fits_int64() const {
        return is_integer() && v_.get_num() >= INT64_MIN_Z() && v_.get_num() <= INT64_MAX_Z();
    }
    std::int64_t as_int64() const {
        if (!fits_int64()) throw std::domain_error("Rational: not an int64");
        return static_cast<std::int64_t>(mpz_get_si(v_.get_num().get_mpz_t()));
    }

    int sign() const { return sgn(v_); }

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    /// Truncated decimal expansion with `digits` fractional digits,
    /// computed in exact integer arithmetic (used only for rendering).
    std::string decimal(int digits) const {
        mpz_class scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        mpz_class num = v_.get_num() * scale;
        mpz_class q = num / v_.get_den();  // truncates toward zero
        bool neg = q < 0;
        mpz_class a = abs(q);
        std::string whole = mpz_class(a / scale).get_str();
        std::string frac = mpz_class(a % scale).get_str();
        frac.insert(frac.begin(), digits - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        std::string out = neg ? "-" : "";
        out += whole;
        if (!frac.empty()) {
            out += '.';
            out += frac;
        }
        return out;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);  // arithmetic on canonical operands stays canonical
        return r;
    }
    static std::string int64_str(long long n) {
        return std::to_string(n);
    }
    static const mpz_class& INT64_MIN_Z() {
        static const mpz_class v("-9223372036854775808");
        return v;
    }
    static const mpz_class& INT64_MAX_Z() {
        static const mpz_class v("9223372036854775807");
        return v;
    }
    static void check_int_token(std::string_view t, bool allow_sign) {
        if (t.empty()) throw std::invalid_argument("Rational: malformed number");
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) throw std::invalid_argument("Rational: malformed number");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("Rational: malformed number");
    }

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace presched
