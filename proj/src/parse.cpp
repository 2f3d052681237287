#include "symker/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace symker {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_spaces();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    std::string digits() {
        skip_spaces();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return text_.substr(start, pos_ - start);
    }
    int integer() {
        const std::size_t start = pos_;
        const std::string d = digits();
        if (d.size() > 6) fail_at("number too large", start);
        return std::stoi(d);
    }
    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] static void fail_at(const std::string& what, std::size_t at) { throw ParseError(what, at); }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

/// Comma-separated letters; empty when no digit follows.
Word read_word(Cursor& cur) {
    Word w;
    if (!cur.at_digit()) return w;
    w.push_back(cur.integer());
    while (cur.accept(',')) w.push_back(cur.integer());
    return w;
}

/// A word body: "()" or a non-empty letter list.
Word read_term_word(Cursor& cur) {
    if (cur.accept('(')) {
        cur.expect(')');
        return {};
    }
    Word w = read_word(cur);
    if (w.empty()) cur.fail("expected a word");
    return w;
}

/// Reads "[coeff *]" if present; otherwise returns 1.
Scalar read_coefficient(Cursor& cur, const FieldSpec& field) {
    const std::size_t start = cur.pos();
    if (!cur.at_digit()) return Scalar::one(field);
    std::string num = cur.digits();
    std::string den = "1";
    if (cur.accept('/')) den = cur.digits();
    if (!cur.accept('*')) {
        cur.set_pos(start);
        return Scalar::one(field);
    }
    try {
        return Scalar::from_fraction(field, mpz_class(num), mpz_class(den));
    } catch (const std::domain_error& e) {
        Cursor::fail_at(e.what(), start);
    }
}

/// Parses a signed sum, handing each term's coefficient to `body`.
void parse_sum(const std::string& text, const FieldSpec& field,
               const std::function<void(Cursor&, const Scalar&, std::size_t)>& body) {
    Cursor cur(text);
    if (cur.at_end()) cur.fail("empty element");
    bool first = true;
    while (!cur.at_end()) {
        bool negative = false;
        if (cur.accept('-')) negative = true;
        else if (!cur.accept('+') && !first) cur.fail("expected '+' or '-'");
        const std::size_t term_start = cur.pos();
        Scalar c = read_coefficient(cur, field);
        if (negative) c = -c;
        body(cur, c, term_start);
        first = false;
    }
}

template <class Fn>
auto rethrow_at(std::size_t pos, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what(), pos);
    }
}

template <class Element>
std::string format_terms(const Element& a, const std::function<std::string(const typename Element::key_type&)>& key) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        std::string coeff = c.to_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (coeff != "1") out += coeff + "*";
        out += key(k);
        first = false;
    }
    return out;
}

}  // namespace

Word parse_word(const std::string& text) {
    Cursor cur(text);
    if (cur.accept('(')) {
        cur.expect(')');
        if (!cur.at_end()) cur.fail("trailing input");
        return {};
    }
    Word w = read_word(cur);
    if (w.empty()) cur.fail("expected a word");
    if (!cur.at_end()) cur.fail("trailing input");
    return w;
}

TensorElement parse_tensor(const Space& space, const std::string& text) {
    std::optional<TensorElement> out;
    parse_sum(text, space.field, [&](Cursor& cur, const Scalar& c, std::size_t at) {
        const Word w = read_term_word(cur);
        rethrow_at(at, [&] {
            if (!out) out.emplace(space, static_cast<int>(w.size()));
            out->add(w, c);
            return 0;
        });
    });
    return *out;
}

SPrimeElement parse_sprime(const Space& space, const std::string& text) {
    std::optional<SPrimeElement> out;
    parse_sum(text, space.field, [&](Cursor& cur, const Scalar& c, std::size_t at) {
        const Word w = read_term_word(cur);
        rethrow_at(at, [&] {
            TensorTraits::validate(space, w, static_cast<int>(w.size()));
            if (!out) out.emplace(space, static_cast<int>(w.size()));
            out->add(sprime_normal_form(w), c);
            return 0;
        });
    });
    return *out;
}

MElementRaw parse_m(const Space& space, const std::string& text) {
    std::optional<MElementRaw> out;
    parse_sum(text, space.field, [&](Cursor& cur, const Scalar& c, std::size_t at) {
        Word left = read_word(cur);
        cur.expect('(');
        const int a = cur.integer();
        cur.expect('^');
        const int b = cur.integer();
        cur.expect(')');
        Word right = read_word(cur);
        rethrow_at(at, [&] {
            if (a < 1 || b < 1 || a > space.m || b > space.m) throw std::out_of_range("wedge letter out of range");
            const MElementRaw wedge = m_wedge(space, a, b);
            MElementRaw term = bimodule_mult(tensor_word(space, left), wedge, tensor_word(space, right));
            if (!out) out.emplace(space, term.degree());
            *out += c * term;
            return 0;
        });
    });
    return *out;
}

std::string format_word(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::string format_sprime_basis(const SPrimeBasisElem& e) {
    return format_word(e.word) + (e.twisted ? " twisted" : " plain");
}

std::string format(const TensorElement& a) {
    return format_terms<TensorElement>(a, [](const Word& w) { return format_word(w); });
}

std::string format(const SPrimeElement& a) {
    return format_terms<SPrimeElement>(a, [](const SPrimeBasisElem& e) { return format_sprime_basis(e); });
}

std::string format(const MElementRaw& a) {
    return format_terms<MElementRaw>(a, [](const MTerm& t) {
        std::string s;
        for (std::size_t i = 0; i < t.left.size(); ++i) s += (i ? "," : "") + std::to_string(t.left[i]);
        s += "(" + std::to_string(t.a) + "^" + std::to_string(t.b) + ")";
        for (std::size_t i = 0; i < t.right.size(); ++i) s += (i ? "," : "") + std::to_string(t.right[i]);
        return s;
    });
}

}  // namespace symker
