#pragma once

#include <cstddef>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace intermute {

enum class Conn : unsigned char { And, Or };
enum class Unit : unsigned char { Top, Bot };

constexpr Conn dual(Conn c) { return c == Conn::And ? Conn::Or : Conn::And; }
constexpr Unit dual(Unit u) { return u == Unit::Top ? Unit::Bot : Unit::Top; }
// The unit that is neutral for a connective: top for and, bottom for or.
constexpr Unit neutral_unit(Conn c) { return c == Conn::And ? Unit::Top : Unit::Bot; }
constexpr char symbol(Conn c) { return c == Conn::And ? '&' : '|'; }

class Formula {
public:
    enum class Kind : unsigned char { Letter, Top, Bot, Conj, Disj };

    static Formula letter(std::string name);
    static Formula top();
    static Formula bot();
    static Formula unit(Unit u);
    static Formula conj(Formula left, Formula right);
    static Formula disj(Formula left, Formula right);
    static Formula binary(Conn c, Formula left, Formula right);

    Kind kind() const noexcept;
    bool is_letter() const noexcept { return kind() == Kind::Letter; }
    bool is_unit() const noexcept { return kind() == Kind::Top || kind() == Kind::Bot; }
    bool is_binary() const noexcept { return kind() == Kind::Conj || kind() == Kind::Disj; }
    bool is(Conn c) const noexcept { return kind() == (c == Conn::And ? Kind::Conj : Kind::Disj); }
    bool is(Unit u) const noexcept { return kind() == (u == Unit::Top ? Kind::Top : Kind::Bot); }

    Conn conn() const;
    Unit unit_value() const;
    const std::string& name() const;
    const Formula& left() const;
    const Formula& right() const;

    // Number of nodes.
    std::size_t size() const noexcept;
    // Number of letter occurrences.
    std::size_t letter_count() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Formula& a, const Formula& b);
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

    struct Node;

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

std::string to_string(const Formula& f);

// Multiset of letters.
std::map<std::string, std::size_t> letters(const Formula& f);
// Letter occurrences from left to right.
std::vector<std::string> letter_sequence(const Formula& f);
bool is_letterless(const Formula& f);
bool has_units(const Formula& f);
bool is_diversified(const Formula& f);
std::size_t count_conn(const Formula& f, Conn c);

// Swaps the connectives and the units.
Formula dual(const Formula& f);

Formula normal_form(const Formula& f);
bool contains_unit(const Formula& f, Unit u);
bool is_pure(const Formula& f, Unit u);
bool is_pure(const Formula& f);

struct Diversified {
    Formula formula;
    // New letter name to original letter name, for every letter of the result.
    std::map<std::string, std::string> origin;
};
Diversified diversify(const Formula& f);

Formula rename_letters(const Formula& f, const std::map<std::string, std::string>& renaming);
Formula substitute(const Formula& f, const std::map<std::string, Formula>& assignment);

enum class Side : unsigned char { Left, Right };
using OccurrencePath = std::vector<Side>;

std::optional<Formula> subformula_at(const Formula& f, const OccurrencePath& path);

}  // namespace intermute
