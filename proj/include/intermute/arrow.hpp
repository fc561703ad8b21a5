#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intermute/formula.hpp"

namespace intermute {

enum class GenKind : unsigned char {
    HbPlus, HbMinus, VbPlus, VbMinus,
    Hc, Vc,
    HdPlus, HdMinus, HsPlus, HsMinus,
    VdPlus, VdMinus, VsPlus, VsMinus,
    HwBotMinus, HwBotPlus, VwTopPlus, VwTopMinus,
    Kappa,
    Ck,
    Hw, Vw, Hk1, Hk2, Vk1, Vk2,
};

inline constexpr std::size_t gen_kind_count = 26;

std::string_view gen_name(GenKind k);
std::size_t gen_arity(GenKind k);
std::optional<GenKind> gen_from_name(std::string_view name);
const std::vector<GenKind>& all_gen_kinds();

struct Type {
    Formula source;
    Formula target;
    friend bool operator==(const Type&, const Type&) = default;
};

class Generator {
public:
    Generator(GenKind kind, std::vector<Formula> args);

    GenKind kind() const noexcept { return kind_; }
    const std::vector<Formula>& args() const noexcept { return args_; }
    const Formula& arg(std::size_t i) const { return args_.at(i); }

    friend bool operator==(const Generator&, const Generator&) = default;

private:
    GenKind kind_;
    std::vector<Formula> args_;
};

Type generator_type(const Generator& g);

class ArrowTerm {
public:
    enum class Kind : unsigned char { Id, Prim, Comp, ConjPar, DisjPar };

    static ArrowTerm id(Formula object);
    static ArrowTerm prim(Generator g);
    static ArrowTerm prim(GenKind k, std::vector<Formula> args);
    static ArrowTerm prim(GenKind nullary) { return prim(nullary, std::vector<Formula>{}); }
    // after . before
    static ArrowTerm compose(ArrowTerm after, ArrowTerm before);
    static ArrowTerm par(Conn c, ArrowTerm left, ArrowTerm right);
    static ArrowTerm conj_par(ArrowTerm left, ArrowTerm right) { return par(Conn::And, std::move(left), std::move(right)); }
    static ArrowTerm disj_par(ArrowTerm left, ArrowTerm right) { return par(Conn::Or, std::move(left), std::move(right)); }

    Kind kind() const noexcept;
    bool is_id() const noexcept { return kind() == Kind::Id; }
    bool is_prim() const noexcept { return kind() == Kind::Prim; }
    bool is_comp() const noexcept { return kind() == Kind::Comp; }
    bool is_par() const noexcept { return kind() == Kind::ConjPar || kind() == Kind::DisjPar; }

    const Formula& object() const;      // Id
    const Generator& generator() const; // Prim
    const ArrowTerm& after() const;     // Comp
    const ArrowTerm& before() const;    // Comp
    Conn conn() const;                  // Par
    const ArrowTerm& left() const;      // Par
    const ArrowTerm& right() const;     // Par

    std::size_t size() const noexcept;

    friend bool operator==(const ArrowTerm& a, const ArrowTerm& b);

    struct Node;

private:
    explicit ArrowTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const Generator& g);
std::string to_string(const ArrowTerm& f);

// How objects are compared at composition boundaries.
enum class Objects : unsigned char {
    Formulas,       // syntactic identity
    FormSequences,  // modulo associativity
    FormSets,       // modulo associativity and commutativity
};

// Throws IllTyped.
Type type_of(const ArrowTerm& f, Objects mode = Objects::Formulas);
bool objects_equal(const Formula& a, const Formula& b, Objects mode);

// Composition-free factors with exactly one generator each, in order of application.
struct Development {
    Formula source;
    std::vector<ArrowTerm> factors;
};
Development develop(const ArrowTerm& f, Objects mode = Objects::Formulas);
ArrowTerm compose_all(const Formula& source, const std::vector<ArrowTerm>& factors_in_order);

// Collapses identity composites and parallel identities.
ArrowTerm simplify_identities(const ArrowTerm& f);

std::size_t count_generators(const ArrowTerm& f);
std::size_t count_generators(const ArrowTerm& f, GenKind k);
std::vector<Generator> generators_of(const ArrowTerm& f);
bool is_identity_term(const ArrowTerm& f);

ArrowTerm rename_letters(const ArrowTerm& f, const std::map<std::string, std::string>& renaming);
ArrowTerm substitute(const ArrowTerm& f, const std::map<std::string, Formula>& assignment);

bool is_invertible(GenKind k);
// Throws PreconditionViolated when a generator has no inverse among the generators.
ArrowTerm inverse(const ArrowTerm& f);

// The dual term: connectives and units swapped, arrows reversed.
Generator dual(const Generator& g);
ArrowTerm dual(const ArrowTerm& f);

}  // namespace intermute
