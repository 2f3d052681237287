#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "symker/m_bimodule.hpp"
#include "symker/sprime.hpp"
#include "symker/tensor.hpp"

namespace symker {

/// Malformed element text; position() is the 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar:
//   element := [sign] term { sign term }
//   term    := [coeff "*"] body
//   coeff   := integer [ "/" integer ]
//   word    := "()" | integer { "," integer }
//   mterm   := [word] "(" integer "^" integer ")" [word]      e.g. 1,2(1^3)2

Word parse_word(const std::string& text);
TensorElement parse_tensor(const Space& space, const std::string& text);
/// Words in any order, each mapped to its class in S'.
SPrimeElement parse_sprime(const Space& space, const std::string& text);
/// Wedge pairs in either order; a^b = -b^a, a^a = 0.
MElementRaw parse_m(const Space& space, const std::string& text);

std::string format_word(const Word& w);
/// "(1,2,3) twisted"
std::string format_sprime_basis(const SPrimeBasisElem& e);
/// "c*w + ..." or "0".
std::string format(const TensorElement& a);
std::string format(const SPrimeElement& a);
std::string format(const MElementRaw& a);

}  // namespace symker
