#include "trop/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace trop {
namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(i128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw OverflowError("tropical scalar overflow");
    return static_cast<long long>(v);
}

TropScalar make_reduced(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return TropScalar::ratio(0, 1);
    i128 g = gcd128(num, den);
    return TropScalar::ratio(narrow(num / g), narrow(den / g));
}

// exact rational sum of two finite scalars
TropScalar add_finite(const TropScalar& a, const TropScalar& b) {
    if (a.denominator() == 1 && b.denominator() == 1)
        return TropScalar(narrow(i128(a.numerator()) + i128(b.numerator())));
    i128 num = i128(a.numerator()) * b.denominator() + i128(b.numerator()) * a.denominator();
    i128 den = i128(a.denominator()) * b.denominator();
    return make_reduced(num, den);
}

// exact comparison of two finite scalars
bool less_finite(const TropScalar& a, const TropScalar& b) {
    if (a.denominator() == b.denominator()) return a.numerator() < b.numerator();
    return i128(a.numerator()) * b.denominator() < i128(b.numerator()) * a.denominator();
}

bool parse_integer(std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto first = s.data();
    auto last = s.data() + s.size();
    if (*first == '+') ++first; // from_chars rejects a leading plus
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

} // namespace

TropScalar TropScalar::ratio(long long num, long long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) return make_reduced(i128(num), i128(den));
    if (num == 0) return TropScalar(Kind::Finite, 0, 1);
    long long g = static_cast<long long>(gcd128(num, den));
    return TropScalar(Kind::Finite, num / g, den / g);
}

double TropScalar::to_double() const {
    if (is_eps()) return -std::numeric_limits<double>::infinity();
    if (is_top()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

bool operator<(const TropScalar& a, const TropScalar& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    if (!a.is_finite()) return false;
    return less_finite(a, b);
}

TropScalar oplus(const TropScalar& a, const TropScalar& b) { return a < b ? b : a; }

TropScalar oplus_prime(const TropScalar& a, const TropScalar& b) { return b < a ? b : a; }

TropScalar otimes(const TropScalar& a, const TropScalar& b) {
    if (a.is_eps() || b.is_eps()) return TropScalar::eps();
    if (a.is_top() || b.is_top()) return TropScalar::top();
    return add_finite(a, b);
}

TropScalar otimes_prime(const TropScalar& a, const TropScalar& b) {
    if (a.is_top() || b.is_top()) return TropScalar::top();
    if (a.is_eps() || b.is_eps()) return TropScalar::eps();
    return add_finite(a, b);
}

TropScalar neg(const TropScalar& a) {
    if (a.is_eps()) return TropScalar::top();
    if (a.is_top()) return TropScalar::eps();
    return TropScalar(TropScalar::Kind::Finite, narrow(-i128(a.num_)), a.den_);
}

TropScalar div_int(const TropScalar& a, long long k) {
    if (k <= 0) throw DomainError("division by non-positive integer");
    if (!a.is_finite()) return a;
    return make_reduced(i128(a.num_), i128(a.den_) * k);
}

TropScalar mul_int(const TropScalar& a, long long k) {
    if (k < 0) throw DomainError("tropical power with negative exponent");
    if (k == 0) return TropScalar(0);
    if (!a.is_finite()) return a;
    return make_reduced(i128(a.num_) * k, i128(a.den_));
}

std::string TropScalar::token() const {
    if (is_eps()) return "*";
    if (is_top()) return "+inf";
    if (den_ == 1) return std::to_string(num_);
    // den = 2^a * 5^b has an exact decimal expansion with max(a,b) digits
    long long d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    int digits = twos > fives ? twos : fives;
    i128 scaled = i128(num_);
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= den_;
    bool negative = scaled < 0;
    std::string body;
    i128 mag = abs128(scaled);
    while (mag != 0) {
        body.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    while (static_cast<int>(body.size()) <= digits) body.push_back('0');
    std::string out;
    if (negative) out.push_back('-');
    for (int i = static_cast<int>(body.size()) - 1; i >= 0; --i) {
        out.push_back(body[static_cast<size_t>(i)]);
        if (i == digits) out.push_back('.');
    }
    return out;
}

TropScalar TropScalar::parse(std::string_view tok) {
    if (tok == "*" || tok == "-inf") return eps();
    if (tok == "+inf") return top();
    if (tok.empty()) throw ParseError("empty scalar token");

    if (auto slash = tok.find('/'); slash != std::string_view::npos) {
        long long num = 0, den = 0;
        if (!parse_integer(tok.substr(0, slash), num) || !parse_integer(tok.substr(slash + 1), den))
            throw ParseError("bad rational token '" + std::string(tok) + "'");
        if (den == 0) throw ParseError("zero denominator in '" + std::string(tok) + "'");
        return ratio(num, den);
    }

    // decimal literal: [sign] digits [. digits] [e [sign] digits]
    size_t pos = 0;
    bool negative = false;
    if (tok[pos] == '+' || tok[pos] == '-') {
        negative = tok[pos] == '-';
        ++pos;
    }
    i128 mantissa = 0;
    int digits_seen = 0, frac_digits = 0;
    bool seen_point = false;
    for (; pos < tok.size(); ++pos) {
        char c = tok[pos];
        if (c == '.') {
            if (seen_point) throw ParseError("bad scalar token '" + std::string(tok) + "'");
            seen_point = true;
            continue;
        }
        if (c == 'e' || c == 'E') break;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad scalar token '" + std::string(tok) + "'");
        mantissa = mantissa * 10 + (c - '0');
        if (mantissa > i128(std::numeric_limits<long long>::max()) * 1000)
            throw ParseError("scalar literal out of range '" + std::string(tok) + "'");
        ++digits_seen;
        if (seen_point) ++frac_digits;
    }
    if (digits_seen == 0 || (seen_point && frac_digits == 0))
        throw ParseError("bad scalar token '" + std::string(tok) + "'");
    long long exponent = 0;
    if (pos < tok.size()) {
        if (!parse_integer(tok.substr(pos + 1), exponent) || exponent > 30 || exponent < -30)
            throw ParseError("bad scalar token '" + std::string(tok) + "'");
    }
    if (negative) mantissa = -mantissa;
    i128 num = mantissa, den = 1;
    long long shift = exponent - frac_digits;
    for (long long i = 0; i < shift; ++i) num *= 10;
    for (long long i = 0; i > shift; --i) den *= 10;
    return make_reduced(num, den);
}

} // namespace trop
