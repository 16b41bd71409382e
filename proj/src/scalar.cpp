#include "koszul/scalar.hpp"

#include <cctype>

namespace koszul {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw Error("division by zero");
    // extended Euclid on (a, p); p is prime so gcd = 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mod_of_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

}  // namespace

Field::Field(std::uint64_t p) : p_(p) {
    if (p == 0) return;
    if (p >= (1ull << 31)) throw ValidationError("modulus too large (must be < 2^31)");
    if (!is_prime(p)) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
}

Scalar Field::zero() const { return integer(0); }

Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long value) const {
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.q_ = value;
    } else {
        long m = value % static_cast<long>(p_);
        if (m < 0) m += static_cast<long>(p_);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Field::fraction(long num, long den) const {
    if (den == 0) throw Error("division by zero");
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
    } else {
        std::uint64_t d = integer(den).r_;
        if (d == 0) throw Error("denominator divisible by the characteristic");
        s.r_ = integer(num).r_ * mod_inverse(d, p_) % p_;
    }
    return s;
}

Scalar Field::parse(const std::string& text) const {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) throw ValidationError("bad scalar literal '" + text + "'");
    std::string num = text.substr(num_start, i - num_start);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start) throw ValidationError("bad scalar literal '" + text + "'");
        den = text.substr(den_start, i - den_start);
    }
    if (i != text.size()) throw ValidationError("bad scalar literal '" + text + "'");

    mpz_class num_z(num);
    mpz_class den_z(den);
    if (den_z == 0) throw Error("division by zero");
    mpq_class q{num_z, den_z};
    q.canonicalize();
    if (neg) q = -q;

    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.q_ = q;
    } else {
        std::uint64_t d = mod_of_mpz(q.get_den(), p_);
        if (d == 0) throw Error("denominator divisible by the characteristic");
        s.r_ = mod_of_mpz(q.get_num(), p_) * mod_inverse(d, p_) % p_;
    }
    return s;
}

std::string Field::description() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

void Scalar::check_compatible(const Scalar& o) const {
    if (p_ != o.p_) {
        throw FieldMismatchError("mixing scalars of characteristic " + std::to_string(p_) +
                                 " and " + std::to_string(o.p_));
    }
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

int Scalar::sign() const {
    if (p_ == 0) return sgn(q_);
    return r_ == 0 ? 0 : 1;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (p_ == 0) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar s(*this);
    if (p_ == 0) {
        s.q_ = 1 / q_;
    } else {
        s.r_ = mod_inverse(r_, p_);
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_compatible(o);
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        r_ = (r_ + o.r_) % p_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_compatible(o);
    if (p_ == 0) {
        q_ -= o.q_;
    } else {
        r_ = (r_ + p_ - o.r_) % p_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_compatible(o);
    if (p_ == 0) {
        q_ *= o.q_;
    } else {
        r_ = r_ * o.r_ % p_;  // p < 2^31 keeps the product in range
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_compatible(o);
    if (o.is_zero()) throw Error("division by zero");
    if (p_ == 0) {
        q_ /= o.q_;
    } else {
        r_ = r_ * mod_inverse(o.r_, p_) % p_;
    }
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    check_compatible(o);
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

const mpq_class& Scalar::rational() const {
    if (p_ != 0) throw FieldMismatchError("scalar is not rational");
    return q_;
}

}  // namespace koszul
