#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "symker/scalar.hpp"

namespace symker {

/// dim V together with the coefficient field. Basis indices are 1..m.
struct Space {
    int m = 0;
    FieldSpec field;

    Space() = default;
    Space(int m, FieldSpec field) : m(m), field(field) {
        if (m < 0) throw std::invalid_argument("dimension must be non-negative");
    }

    friend bool operator==(const Space&, const Space&) = default;
};

class SpaceMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Homogeneous finite linear combination of basis keys with no zero
/// coefficients stored. Traits supply key validation:
///   static void validate(const Space&, const Key&, int degree);
///   static int degree_of(const Key&);
template <class Key, class Traits>
class Combination {
public:
    using key_type = Key;
    using TermMap = std::map<Key, Scalar>;

    Combination(Space space, int degree) : space_(space), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static Combination basis(const Space& space, const Key& key) {
        Combination c(space, Traits::degree_of(key));
        c.add(key, Scalar::one(space.field));
        return c;
    }

    const Space& space() const { return space_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar::zero(space_.field) : it->second;
    }

    void add(const Key& key, const Scalar& value) {
        if (value.field() != space_.field)
            throw FieldMismatch("coefficient over " + value.field().name() + " in element over " +
                                space_.field.name());
        Traits::validate(space_, key, degree_);
        if (value.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Combination& operator+=(const Combination& other) {
        require_compatible(other);
        for (const auto& [k, v] : other.terms_) add(k, v);
        return *this;
    }
    Combination& operator-=(const Combination& other) {
        require_compatible(other);
        for (const auto& [k, v] : other.terms_) add(k, -v);
        return *this;
    }
    Combination& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= s;
        return *this;
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(const Scalar& s, Combination a) { return a *= s; }
    friend Combination operator*(Combination a, const Scalar& s) { return a *= s; }
    Combination operator-() const {
        Combination out = *this;
        for (auto& [k, v] : out.terms_) v = -v;
        return out;
    }

    friend bool operator==(const Combination& a, const Combination& b) {
        return a.space_ == b.space_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    Space space_;
    int degree_;
    TermMap terms_;

    void require_compatible(const Combination& other) const {
        if (!(space_ == other.space_)) throw SpaceMismatch("elements over different spaces");
        if (degree_ != other.degree_)
            throw DimensionMismatch("degree " + std::to_string(degree_) + " vs " +
                                    std::to_string(other.degree_));
    }
};

inline void require_same_space(const Space& a, const Space& b) {
    if (!(a == b)) throw SpaceMismatch("elements over different spaces");
}

}  // namespace symker
