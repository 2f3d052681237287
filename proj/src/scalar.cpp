#include "symker/scalar.hpp"

#include <cctype>
#include <ostream>

namespace symker {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= kMaxPrime) throw std::invalid_argument("prime field modulus must be below 2^31");
    if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    return {Kind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])) || p > kMaxPrime)
                throw std::invalid_argument("invalid field '" + text + "'");
            p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
        }
        return prime(p);
    }
    throw std::invalid_argument("invalid field '" + text + "' (expected q or f<prime>)");
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long value) {
    return from_fraction(field, mpz_class(value), mpz_class(1));
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Scalar s;
    if (field.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        s.rep_ = std::move(q);
        return s;
    }
    s.p_ = field.p;
    const std::uint64_t d = reduce_mpz(den, field.p);
    if (d == 0) throw std::domain_error("denominator vanishes in " + field.name());
    const std::uint64_t n = reduce_mpz(num, field.p);
    s.rep_ = n * mod_pow(d, field.p - 2, field.p) % field.p;
    return s;
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
    const auto slash = text.find('/');
    mpz_class num, den(1);
    auto read = [&](const std::string& part, mpz_class& out) {
        std::string digits = part;
        if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
        if (digits.empty() || out.set_str(digits, 10) != 0)
            throw std::invalid_argument("invalid scalar '" + text + "'");
    };
    read(text.substr(0, slash), num);
    if (slash != std::string::npos) read(text.substr(slash + 1), den);
    return from_fraction(field, num, den);
}

FieldSpec Scalar::field() const {
    return p_ == 0 ? FieldSpec::rationals() : FieldSpec{FieldSpec::Kind::PrimeField, p_};
}

bool Scalar::is_zero() const {
    if (p_ == 0) return std::get<mpq_class>(rep_) == 0;
    return std::get<std::uint64_t>(rep_) == 0;
}

bool Scalar::is_one() const {
    if (p_ == 0) return std::get<mpq_class>(rep_) == 1;
    return std::get<std::uint64_t>(rep_) == 1;
}

mpq_class Scalar::as_rational() const {
    if (p_ == 0) return std::get<mpq_class>(rep_);
    return mpq_class(mpz_class(static_cast<unsigned long>(std::get<std::uint64_t>(rep_))));
}

void Scalar::require_same_field(const Scalar& other, const char* op) const {
    if (p_ != other.p_)
        throw FieldMismatch(std::string("operator") + op + ": " + field().name() + " vs " +
                            other.field().name());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (p_ == 0) {
        mpq_class& q = std::get<mpq_class>(s.rep_);
        mpq_inv(q.get_mpq_t(), q.get_mpq_t());
    } else {
        s.rep_ = mod_pow(std::get<std::uint64_t>(rep_), p_ - 2, p_);
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    require_same_field(other, "+");
    if (p_ == 0) {
        std::get<mpq_class>(rep_) += std::get<mpq_class>(other.rep_);
    } else {
        auto& r = std::get<std::uint64_t>(rep_);
        r = (r + std::get<std::uint64_t>(other.rep_)) % p_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    require_same_field(other, "-");
    if (p_ == 0) {
        std::get<mpq_class>(rep_) -= std::get<mpq_class>(other.rep_);
    } else {
        auto& r = std::get<std::uint64_t>(rep_);
        r = (r + p_ - std::get<std::uint64_t>(other.rep_)) % p_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    require_same_field(other, "*");
    if (p_ == 0) {
        std::get<mpq_class>(rep_) *= std::get<mpq_class>(other.rep_);
    } else {
        auto& r = std::get<std::uint64_t>(rep_);
        r = r * std::get<std::uint64_t>(other.rep_) % p_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    require_same_field(other, "/");
    return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0) {
        mpq_class& q = std::get<mpq_class>(s.rep_);
        mpq_neg(q.get_mpq_t(), q.get_mpq_t());
    } else {
        auto& r = std::get<std::uint64_t>(s.rep_);
        r = (p_ - r) % p_;
    }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    if (a.p_ == 0) return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
    return std::get<std::uint64_t>(a.rep_) == std::get<std::uint64_t>(b.rep_);
}

std::string Scalar::to_string() const {
    if (p_ == 0) return std::get<mpq_class>(rep_).get_str();
    return std::to_string(std::get<std::uint64_t>(rep_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.name(); }

}  // namespace symker
