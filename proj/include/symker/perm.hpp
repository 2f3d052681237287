#pragma once

#include <string>
#include <vector>

namespace symker {

/// A permutation of {1..n}, stored in one-line notation.
/// Composition is as functions: (s * t)(i) = s(t(i)).
class Perm {
public:
    Perm() = default;
    /// images[k] is the image of k+1; throws unless a bijection on {1..n}.
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    /// The adjacent transposition (i, i+1), 1 <= i < n.
    static Perm adjacent(int n, int i);
    /// tau_{i_s} * ... * tau_{i_1} for word = [i_1, ..., i_s].
    static Perm from_adjacent_word(int n, const std::vector<int>& word);
    /// All of S_n in lexicographic one-line order.
    static std::vector<Perm> all(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Perm inverse() const;
    bool is_identity() const;
    int inversions() const;
    bool is_even() const { return inversions() % 2 == 0; }

    friend Perm operator*(const Perm& s, const Perm& t);
    friend bool operator==(const Perm&, const Perm&) = default;

    std::string to_string() const;

private:
    std::vector<int> images_;
};

enum class Factorization {
    LeftmostDescent,   // bubble sort, always swapping the first descent
    RightmostDescent,  // always swapping the last descent
};

/// Adjacent-transposition word [i_1, ..., i_s] with t = tau_{i_s} ... tau_{i_1}.
/// Both strategies give reduced words (length = inversions(t)).
std::vector<int> perm_word(const Perm& t, Factorization how = Factorization::LeftmostDescent);

}  // namespace symker
