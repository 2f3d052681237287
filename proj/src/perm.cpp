#include "symker/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symker {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation: " + to_string());
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::adjacent(int n, int i) {
    if (i < 1 || i >= n)
        throw std::out_of_range("adjacent transposition " + std::to_string(i) + " in S_" +
                                std::to_string(n));
    Perm p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
    return p;
}

Perm Perm::from_adjacent_word(int n, const std::vector<int>& word) {
    Perm result = identity(n);
    for (int i : word) result = adjacent(n, i) * result;
    return result;
}

std::vector<Perm> Perm::all(int n) {
    std::vector<Perm> out;
    Perm p = identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.images_.begin(), p.images_.end()));
    return out;
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int k = 1; k <= size(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return Perm(std::move(inv));
}

bool Perm::is_identity() const {
    for (int k = 1; k <= size(); ++k)
        if ((*this)(k) != k) return false;
    return true;
}

int Perm::inversions() const {
    int count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++count;
    return count;
}

Perm operator*(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> out(s.images_.size());
    for (int k = 1; k <= t.size(); ++k) out[static_cast<std::size_t>(k - 1)] = s(t(k));
    Perm p;
    p.images_ = std::move(out);
    return p;
}

std::string Perm::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

std::vector<int> perm_word(const Perm& t, Factorization how) {
    // Swapping one-line positions j, j+1 is right multiplication by tau_j, so
    // sorting t with swaps j_1, ..., j_r gives t = tau_{j_r} ... tau_{j_1}.
    std::vector<int> line = t.images();
    std::vector<int> word;
    const int n = t.size();
    for (;;) {
        int descent = -1;
        if (how == Factorization::LeftmostDescent) {
            for (int j = 0; j + 1 < n && descent < 0; ++j)
                if (line[static_cast<std::size_t>(j)] > line[static_cast<std::size_t>(j + 1)]) descent = j;
        } else {
            for (int j = n - 2; j >= 0 && descent < 0; --j)
                if (line[static_cast<std::size_t>(j)] > line[static_cast<std::size_t>(j + 1)]) descent = j;
        }
        if (descent < 0) break;
        std::swap(line[static_cast<std::size_t>(descent)], line[static_cast<std::size_t>(descent + 1)]);
        word.push_back(descent + 1);
    }
    return word;
}

}  // namespace symker
