#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "trop/errors.hpp"

namespace trop {

/// Scalar of the max-plus semiring: a finite rational value, eps = -infinity
/// (the tropical zero), or top = +infinity.  top never appears in primal
/// inputs; it enters through conjugation and is consumed by the dual product.
///
/// Finite values are exact rationals (reduced num/den, den > 0) so that every
/// comparison in the library is exact.  Cycle means and eigenvector entries
/// are rationals like 5/2 or 7/3, and the whole test surface asserts equality
/// without tolerances; a binary floating payload cannot keep those checks
/// exact once the denominator is not a power of two.
///
/// Text tokens: `*` (alias `-inf`) for eps, `+inf` for top, decimal literals
/// for finite values; a finite value whose denominator has a prime factor
/// other than 2 and 5 has no finite decimal form and is written `num/den`.
class TropScalar {
public:
    /// Default is the tropical one (finite 0).
    constexpr TropScalar() = default;

    /// Implicit from integers: integers are the common case throughout.
    constexpr TropScalar(long long v) : num_(v) {}
    constexpr TropScalar(int v) : num_(v) {}

    static constexpr TropScalar eps() { return TropScalar(Kind::NegInf, 0, 1); }
    static constexpr TropScalar top() { return TropScalar(Kind::PosInf, 0, 1); }

    /// Exact rational num/den; throws DomainError on den == 0.
    static TropScalar ratio(long long num, long long den);

    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_eps() const { return kind_ == Kind::NegInf; }
    constexpr bool is_top() const { return kind_ == Kind::PosInf; }
    constexpr bool is_integer() const { return kind_ == Kind::Finite && den_ == 1; }

    /// Numerator/denominator of a finite value (reduced, den > 0).
    constexpr long long numerator() const { return num_; }
    constexpr long long denominator() const { return den_; }

    /// Lossy view for display and benchmarks; eps/top map to +-infinity.
    double to_double() const;

    friend constexpr bool operator==(const TropScalar& a, const TropScalar& b) {
        return a.kind_ == b.kind_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr bool operator!=(const TropScalar& a, const TropScalar& b) { return !(a == b); }

    /// Total order eps < every finite < top.
    friend bool operator<(const TropScalar& a, const TropScalar& b);
    friend bool operator<=(const TropScalar& a, const TropScalar& b) { return !(b < a); }
    friend bool operator>(const TropScalar& a, const TropScalar& b) { return b < a; }
    friend bool operator>=(const TropScalar& a, const TropScalar& b) { return !(a < b); }

    /// Token in the shared text grammar (see class comment).
    std::string token() const;

    /// Parses one token; throws ParseError on anything else.
    static TropScalar parse(std::string_view token);

private:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    constexpr TropScalar(Kind k, long long num, long long den)
        : num_(num), den_(den), kind_(k) {}

    long long num_ = 0;
    long long den_ = 1;
    Kind kind_ = Kind::Finite;

    friend TropScalar oplus(const TropScalar&, const TropScalar&);
    friend TropScalar otimes(const TropScalar&, const TropScalar&);
    friend TropScalar oplus_prime(const TropScalar&, const TropScalar&);
    friend TropScalar otimes_prime(const TropScalar&, const TropScalar&);
    friend TropScalar neg(const TropScalar&);
    friend TropScalar div_int(const TropScalar&, long long);
    friend TropScalar mul_int(const TropScalar&, long long);
};

/// a (+) b = max(a, b).
TropScalar oplus(const TropScalar& a, const TropScalar& b);

/// a (x) b = a + b; eps absorbs everything, including top.
TropScalar otimes(const TropScalar& a, const TropScalar& b);

/// a (+)' b = min(a, b).
TropScalar oplus_prime(const TropScalar& a, const TropScalar& b);

/// a (x)' b = a + b, except that the {eps, top} clash resolves to top.
TropScalar otimes_prime(const TropScalar& a, const TropScalar& b);

/// -a; swaps eps and top.
TropScalar neg(const TropScalar& a);

/// Exact a / k for finite a and k > 0 (cycle means).
TropScalar div_int(const TropScalar& a, long long k);

/// Exact k * a for finite a and integer k >= 0 (tropical powers); eps stays
/// eps for k > 0, and k == 0 yields the tropical one.
TropScalar mul_int(const TropScalar& a, long long k);

} // namespace trop
