// Coefficient fields: prime fields GF(p) with machine-word arithmetic and
// exact rationals backed by GMP. Every algorithm in the library is templated
// on one of these; no floating point appears anywhere.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace milnor {

// Computational failure (bad input, cap exceeded, ...). CLI maps this to exit 1.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check required to hold by theory failed; this indicates a bug in the
// implementation, never in the inputs. CLI maps this to exit 2.
struct verification_error : error {
    using error::error;
};

inline bool is_prime_u64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// characteristic 0 selects the rationals, otherwise a prime field.
struct FieldSpec {
    std::int64_t characteristic = 32003;

    bool is_rationals() const { return characteristic == 0; }

    void validate() const {
        if (characteristic == 0) return;
        if (characteristic < 2 || characteristic >= (std::int64_t(1) << 31))
            throw error("field characteristic out of range: " + std::to_string(characteristic));
        if (!is_prime_u64(characteristic))
            throw error("field characteristic is not prime: " + std::to_string(characteristic));
    }
};

// GF(p), p < 2^31 so that products fit in a signed 64-bit word.
class PrimeField {
  public:
    using Elt = std::int64_t;

    explicit PrimeField(std::int64_t p) : p_(p) { FieldSpec{p}.validate(); }

    std::int64_t characteristic() const { return p_; }
    std::int64_t modulus() const { return p_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    bool is_zero(Elt a) const { return a == 0; }
    bool is_one(Elt a) const { return a == 1; }
    bool equal(Elt a, Elt b) const { return a == b; }

    Elt add(Elt a, Elt b) const {
        Elt s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elt sub(Elt a, Elt b) const {
        Elt s = a - b;
        return s < 0 ? s + p_ : s;
    }
    Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p_; }

    Elt inv(Elt a) const {
        if (a == 0) throw error("division by zero in GF(" + std::to_string(p_) + ")");
        // extended Euclid
        Elt t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            Elt q = r / new_r;
            Elt tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return t < 0 ? t + p_ : t;
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    Elt from_int(std::int64_t n) const {
        Elt r = n % p_;
        return r < 0 ? r + p_ : r;
    }
    Elt from_string(const std::string& s) const {
        // reduce an arbitrarily long decimal literal mod p
        Elt r = 0;
        bool negv = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) negv = s[i++] == '-';
        if (i == s.size()) throw error("empty integer literal");
        for (; i < s.size(); ++i) {
            if (s[i] == '/') {  // p/q form
                Elt den = from_string(s.substr(i + 1));
                Elt num = negv ? neg(r) : r;
                return div(num, den);
            }
            if (s[i] < '0' || s[i] > '9') throw error("bad integer literal: " + s);
            r = (r * 10 + (s[i] - '0')) % p_;
        }
        return negv ? neg(r) : r;
    }

    // symmetric representative in (-p/2, p/2], used for printing only
    std::int64_t lift_symmetric(Elt a) const { return a > p_ / 2 ? a - p_ : a; }

    std::string to_string(Elt a) const { return std::to_string(lift_symmetric(a)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    std::int64_t p_;
};

// The rationals; mpq_class keeps values canonical after every operation.
class RationalField {
  public:
    using Elt = mpq_class;

    RationalField() = default;

    std::int64_t characteristic() const { return 0; }

    Elt zero() const { return Elt(0); }
    Elt one() const { return Elt(1); }
    bool is_zero(const Elt& a) const { return sgn(a) == 0; }
    bool is_one(const Elt& a) const { return a == 1; }
    bool equal(const Elt& a, const Elt& b) const { return a == b; }

    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt inv(const Elt& a) const {
        if (sgn(a) == 0) throw error("division by zero in QQ");
        return 1 / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return a / inv_guard(b); }

    Elt from_int(std::int64_t n) const { return Elt(static_cast<long>(n)); }
    Elt from_string(const std::string& s) const {
        try {
            Elt q(s);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw error("bad rational literal: " + s);
        }
    }

    std::string to_string(const Elt& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const { return true; }

  private:
    const Elt& inv_guard(const Elt& b) const {
        if (sgn(b) == 0) throw error("division by zero in QQ");
        return b;
    }
};

}  // namespace milnor
