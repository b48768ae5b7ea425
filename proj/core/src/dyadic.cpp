#include "thf/dyadic.hpp"

#include "thf/errors.hpp"

#include <cctype>
#include <ostream>

namespace thf {
namespace {

// cpp_int shifts are only well defined for nonnegative values, so shifts go
// through the magnitude.
BigInt shl(const BigInt& x, std::int64_t k) {
    if (k == 0 || x == 0) return x;
    if (x < 0) return -BigInt(BigInt(-x) << static_cast<unsigned>(k));
    return BigInt(x << static_cast<unsigned>(k));
}

BigInt shr_exact(const BigInt& x, std::int64_t k) {
    if (k == 0 || x == 0) return x;
    if (x < 0) return -BigInt(BigInt(-x) >> static_cast<unsigned>(k));
    return BigInt(x >> static_cast<unsigned>(k));
}

std::int64_t low_zero_bits(const BigInt& x) {
    return static_cast<std::int64_t>(lsb(x < 0 ? BigInt(-x) : x));
}

}  // namespace

void Dyadic::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ < 0) {
        num_ = shl(num_, -exp_);
        exp_ = 0;
        return;
    }
    if (exp_ > 0) {
        std::int64_t v = low_zero_bits(num_);
        std::int64_t drop = v < exp_ ? v : exp_;
        if (drop > 0) {
            num_ = shr_exact(num_, drop);
            exp_ -= drop;
        }
    }
}

Dyadic Dyadic::pow2(std::int64_t k) {
    if (k >= 0) return Dyadic(shl(1, k), 0);
    return Dyadic(1, -k);
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.num_ = -num_;
    r.exp_ = exp_;
    return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    std::int64_t e = exp_ > o.exp_ ? exp_ : o.exp_;
    return Dyadic(shl(num_, e - exp_) + shl(o.num_, e - o.exp_), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::mul_pow2(std::int64_t k) const {
    return Dyadic(num_, exp_ - k);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    std::int64_t e = exp_ > o.exp_ ? exp_ : o.exp_;
    BigInt a = shl(num_, e - exp_);
    BigInt b = shl(o.num_, e - o.exp_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Dyadic::floor_log2() const {
    if (num_ == 0) throw InvariantError("floor_log2 of zero");
    BigInt a = num_ < 0 ? BigInt(-num_) : num_;
    return static_cast<std::int64_t>(msb(a)) - exp_;
}

std::pair<BigInt, std::int64_t> Dyadic::two_adic_split() const {
    if (num_ == 0) throw InvariantError("two_adic_split of zero");
    std::int64_t v = low_zero_bits(num_);
    return {shr_exact(num_, v), v - exp_};
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + shl(1, exp_).str();
}

Dyadic Dyadic::parse(const std::string& text) {
    auto bad = [&]() -> ParseError { return ParseError("bad dyadic: '" + text + "'"); };
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
    }
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) throw bad();
    BigInt num(text.substr(num_start, i - num_start));
    std::int64_t exp = 0;
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) throw bad();
        BigInt den(text.substr(den_start, i - den_start));
        if (den <= 0 || lsb(den) != msb(den)) throw ParseError("denominator of '" + text + "' is not a power of two");
        exp = static_cast<std::int64_t>(lsb(den));
    }
    return Dyadic(neg ? BigInt(-num) : num, exp);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

}  // namespace thf
