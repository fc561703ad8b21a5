#include "intermute/parser.hpp"

#include <cctype>

#include "intermute/error.hpp"

namespace intermute {

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool at_end() { return peek() == '\0'; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
        throw ParseError(pos_, msg + ", found " + found);
    }
    std::size_t pos() const { return pos_; }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) fail("expected a letter");
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // Generator names: lower-case alphanumerics with an optional trailing sign.
    std::string generator_word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::islower(static_cast<unsigned char>(text_[pos_])) || std::isdigit(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void reset(std::size_t p) { pos_ = p; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Formula formula_disj(Reader& r);

Formula formula_atom(Reader& r) {
    char c = r.peek();
    if (c == '(') {
        r.expect('(');
        Formula f = formula_disj(r);
        r.expect(')');
        return f;
    }
    if (c == 'T') {
        r.expect('T');
        return Formula::top();
    }
    if (c == 'F') {
        r.expect('F');
        return Formula::bot();
    }
    if (std::islower(static_cast<unsigned char>(c))) return Formula::letter(r.identifier());
    r.fail("expected a letter, 'T', 'F' or '('");
}

Formula formula_conj(Reader& r) {
    Formula f = formula_atom(r);
    while (r.accept('&')) f = Formula::conj(f, formula_atom(r));
    return f;
}

Formula formula_disj(Reader& r) {
    Formula f = formula_conj(r);
    while (r.accept('|')) f = Formula::disj(f, formula_conj(r));
    return f;
}

ArrowTerm arrow_comp(Reader& r);

ArrowTerm arrow_prim(Reader& r) {
    if (r.accept('(')) {
        ArrowTerm f = arrow_comp(r);
        r.expect(')');
        return f;
    }
    const std::size_t start = r.pos();
    r.skip_space();
    const std::size_t word_start = r.pos();
    std::string word = r.generator_word();
    if (word.empty()) r.fail("expected an arrow term");
    if (word == "id") {
        r.expect('{');
        Formula a = formula_disj(r);
        r.expect('}');
        return ArrowTerm::id(a);
    }
    auto kind = gen_from_name(word);
    if (!kind) {
        r.reset(word_start);
        throw ParseError(word_start, "unknown generator '" + word + "'");
    }
    std::vector<Formula> args;
    if (r.accept('{')) {
        args.push_back(formula_disj(r));
        while (r.accept(',')) args.push_back(formula_disj(r));
        r.expect('}');
    }
    if (args.size() != gen_arity(*kind))
        throw ParseError(start, word + " expects " + std::to_string(gen_arity(*kind)) + " indices, got " +
                                    std::to_string(args.size()));
    return ArrowTerm::prim(*kind, std::move(args));
}

ArrowTerm arrow_par(Reader& r) {
    ArrowTerm f = arrow_prim(r);
    for (;;) {
        if (r.accept('&'))
            f = ArrowTerm::conj_par(f, arrow_prim(r));
        else if (r.accept('|'))
            f = ArrowTerm::disj_par(f, arrow_prim(r));
        else
            return f;
    }
}

ArrowTerm arrow_comp(Reader& r) {
    ArrowTerm f = arrow_par(r);
    if (r.accept('.')) return ArrowTerm::compose(f, arrow_comp(r));
    return f;
}

}  // namespace

Formula parse_formula(std::string_view text) {
    Reader r(text);
    Formula f = formula_disj(r);
    if (!r.at_end()) r.fail("unexpected trailing input");
    return f;
}

ArrowTerm parse_arrow(std::string_view text) {
    Reader r(text);
    ArrowTerm f = arrow_comp(r);
    if (!r.at_end()) r.fail("unexpected trailing input");
    return f;
}

}  // namespace intermute
