#ifndef THF_DYADIC_HPP
#define THF_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace thf {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational num / 2^exp.  Canonical form: exp >= 0, and either
// exp == 0 or num is odd.  All arithmetic stays exact; numerators grow as
// needed.  Constructions deep in the witness machinery push exponents past
// several thousand, which is why the numerator is arbitrary precision.
class Dyadic {
  public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}  // NOLINT: implicit on purpose
    Dyadic(BigInt n, std::int64_t e) : num_(std::move(n)), exp_(e) { canonicalize(); }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1); }
    // 2^k for any integer k, negative allowed.
    static Dyadic pow2(std::int64_t k);

    const BigInt& numerator() const { return num_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Dyadic operator-() const;
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    // this * 2^k.
    Dyadic mul_pow2(std::int64_t k) const;

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    std::strong_ordering operator<=>(const Dyadic& o) const;

    // floor(log2 |x|); requires x != 0.
    std::int64_t floor_log2() const;

    // x = odd * 2^v with odd odd; requires x != 0.  v is negative for
    // non-integers, e.g. 3/8 -> (3, -3).
    std::pair<BigInt, std::int64_t> two_adic_split() const;

    // "0", "1", "-3", "3/8": integers plain, otherwise num/2^exp with the
    // denominator spelled out as a decimal power of two.
    std::string str() const;
    // Accepts the str() forms plus unreduced inputs like "2/4" and "6/8".
    // The denominator must be a positive power of two.  Throws ParseError.
    static Dyadic parse(const std::string& text);

  private:
    void canonicalize();

    BigInt num_;
    std::int64_t exp_;
};

inline Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
    return (a + b).mul_pow2(-1);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace thf

#endif
