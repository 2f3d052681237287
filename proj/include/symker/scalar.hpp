#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace symker {

/// Raised when two values over different fields meet in one operation.
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when vector/matrix/element shapes disagree.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The coefficient field: the rationals, or F_p for a prime p < 2^31.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {}; }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "q", "Q", "f<p>", "F<p>".
    static FieldSpec parse(const std::string& text);

    bool is_rational() const { return kind == Kind::Rationals; }
    std::uint64_t characteristic() const { return is_rational() ? 0 : p; }
    /// "Q" or "F<p>".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
    friend auto operator<=>(const FieldSpec& a, const FieldSpec& b) {
        return std::pair{a.kind, a.p} <=> std::pair{b.kind, b.p};
    }
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator, F_p residues in [0, p).
class Scalar {
public:
    /// Zero over the rationals.
    Scalar() = default;

    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);
    static Scalar from_int(const FieldSpec& field, long value);
    /// num/den reduced into the field; den must be invertible there.
    static Scalar from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
    /// Parses "a" or "a/b" (optionally signed) into the field.
    static Scalar parse(const FieldSpec& field, const std::string& text);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    /// Numerator/denominator for rationals; residue and 1 for F_p.
    mpq_class as_rational() const;
    std::uint64_t residue() const { return std::get<std::uint64_t>(rep_); }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Rationals as "p/q" (bare "p" when q = 1), residues in decimal.
    std::string to_string() const;

private:
    std::uint64_t p_ = 0;  // 0 <=> rationals
    std::variant<mpq_class, std::uint64_t> rep_;

    void require_same_field(const Scalar& other, const char* op) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

}  // namespace symker
