#include "intermute/equations.hpp"

#include "intermute/error.hpp"
#include "intermute/semantics.hpp"

namespace intermute {

namespace {

using F = Formula;
using A = ArrowTerm;
using Args = std::vector<F>;

const F top = F::top();
const F bot = F::bot();

F cj(const F& a, const F& b) { return F::conj(a, b); }
F dj(const F& a, const F& b) { return F::disj(a, b); }
F op(Conn c, const F& a, const F& b) { return F::binary(c, a, b); }

A id(const F& a) { return A::id(a); }
A g(GenKind k, Args a = {}) { return A::prim(k, std::move(a)); }
A o(A after, A before) { return A::compose(std::move(after), std::move(before)); }
A o(A h, A g2, A f) { return o(std::move(h), o(std::move(g2), std::move(f))); }
A o(A i, A h, A g2, A f) { return o(std::move(i), o(std::move(h), std::move(g2), std::move(f))); }
A o(A j, A i, A h, A g2, A f) { return o(std::move(j), o(std::move(i), std::move(h), std::move(g2), std::move(f))); }
A land(A a, A b) { return A::conj_par(std::move(a), std::move(b)); }
A lor(A a, A b) { return A::disj_par(std::move(a), std::move(b)); }
A par(Conn c, A a, A b) { return A::par(c, std::move(a), std::move(b)); }

A b_to(Conn c, const F& a, const F& b, const F& d) { return g(c == Conn::And ? GenKind::HbPlus : GenKind::VbPlus, {a, b, d}); }
A b_from(Conn c, const F& a, const F& b, const F& d) { return g(c == Conn::And ? GenKind::HbMinus : GenKind::VbMinus, {a, b, d}); }
A sym(Conn c, const F& a, const F& b) { return g(c == Conn::And ? GenKind::Hc : GenKind::Vc, {a, b}); }
A delta_to(Conn c, const F& a) { return g(c == Conn::And ? GenKind::HdPlus : GenKind::VdPlus, {a}); }
A delta_from(Conn c, const F& a) { return g(c == Conn::And ? GenKind::HdMinus : GenKind::VdMinus, {a}); }
A sigma_to(Conn c, const F& a) { return g(c == Conn::And ? GenKind::HsPlus : GenKind::VsPlus, {a}); }
A sigma_from(Conn c, const F& a) { return g(c == Conn::And ? GenKind::HsMinus : GenKind::VsMinus, {a}); }
A ck(const F& a, const F& b, const F& c, const F& d) { return g(GenKind::Ck, {a, b, c, d}); }
A w_bot() { return g(GenKind::HwBotMinus); }
A w_top() { return g(GenKind::VwTopPlus); }
A kappa() { return g(GenKind::Kappa); }
A hw(const F& a) { return g(GenKind::Hw, {a}); }
A vw(const F& a) { return g(GenKind::Vw, {a}); }
A hk1(const F& a, const F& b) { return g(GenKind::Hk1, {a, b}); }
A hk2(const F& a, const F& b) { return g(GenKind::Hk2, {a, b}); }
A vk1(const F& a, const F& b) { return g(GenKind::Vk1, {a, b}); }
A vk2(const F& a, const F& b) { return g(GenKind::Vk2, {a, b}); }

Conn conn_of(const std::string& tag) { return tag == "and" ? Conn::And : Conn::Or; }
Unit unit_of(Conn c) { return neutral_unit(c); }

std::vector<Schema> make_catalogue() {
    std::vector<Schema> out;
    auto add = [&](std::string name, std::string family, std::size_t arity,
                   std::function<Equation(const Args&)> build) {
        out.push_back({std::move(name), std::move(family), arity, std::move(build)});
    };
    auto add_with_dual = [&](const std::string& name, const std::string& family, std::size_t arity,
                             std::function<Equation(const Args&)> build) {
        add(name, family, arity, build);
        add(name + "-dual", family, arity, [build](const Args& x) {
            Equation e = build(x);
            return Equation{dual(e.lhs), dual(e.rhs)};
        });
    };

    for (const std::string tag : {"and", "or"}) {
        const Conn c = conn_of(tag);
        add("pentagon-" + tag, "pentagon", 4, [c](const Args& x) {
            const F &a = x[0], &b = x[1], &cc = x[2], &d = x[3];
            return Equation{o(b_to(c, op(c, a, b), cc, d), b_to(c, a, b, op(c, cc, d))),
                            o(par(c, b_to(c, a, b, cc), id(d)), b_to(c, a, op(c, b, cc), d),
                              par(c, id(a), b_to(c, b, cc, d)))};
        });
        add("b-iso-" + tag, "isomorphism", 3, [c](const Args& x) {
            return Equation{o(b_from(c, x[0], x[1], x[2]), b_to(c, x[0], x[1], x[2])),
                            id(op(c, x[0], op(c, x[1], x[2])))};
        });
        add("hexagon-" + tag, "hexagon", 3, [c](const Args& x) {
            const F &a = x[0], &b = x[1], &cc = x[2];
            return Equation{sym(c, a, op(c, b, cc)),
                            o(b_to(c, b, cc, a), par(c, id(b), sym(c, a, cc)), b_from(c, b, a, cc),
                              par(c, sym(c, a, b), id(cc)), b_to(c, a, b, cc))};
        });
        add("c-involution-" + tag, "isomorphism", 2, [c](const Args& x) {
            return Equation{o(sym(c, x[1], x[0]), sym(c, x[0], x[1])), id(op(c, x[0], x[1]))};
        });
        const F z = F::unit(unit_of(c));
        add("delta-sigma-unit-" + tag, "biunital", 0,
            [c, z](const Args&) { return Equation{delta_to(c, z), sigma_to(c, z)}; });
        add("unit-b-middle-" + tag, "unit-b", 2, [c, z](const Args& x) {
            return Equation{b_to(c, x[0], z, x[1]), par(c, delta_from(c, x[0]), sigma_to(c, x[1]))};
        });
        add("unit-b-right-" + tag, "unit-b", 2, [c, z](const Args& x) {
            return Equation{b_to(c, x[0], x[1], z), o(delta_from(c, op(c, x[0], x[1])), par(c, id(x[0]), delta_to(c, x[1])))};
        });
        add("unit-b-left-" + tag, "unit-b", 2, [c, z](const Args& x) {
            return Equation{b_to(c, z, x[0], x[1]), o(par(c, sigma_from(c, x[0]), id(x[1])), sigma_to(c, op(c, x[0], x[1])))};
        });
        add("c-unit-left-" + tag, "c-unit", 1, [c, z](const Args& x) {
            return Equation{sym(c, z, x[0]), o(delta_from(c, x[0]), sigma_to(c, x[0]))};
        });
        add("c-unit-right-" + tag, "c-unit", 1, [c, z](const Args& x) {
            return Equation{sym(c, x[0], z), o(sigma_from(c, x[0]), delta_to(c, x[0]))};
        });
    }

    add("ckc-psi-vc", "ckc", 4, [](const Args& x) {
        const F &a1 = x[0], &a1p = x[1], &a2 = x[2], &a2p = x[3];
        return Equation{o(ck(a2, a2p, a1, a1p), sym(Conn::Or, cj(a1, a1p), cj(a2, a2p))),
                        o(land(sym(Conn::Or, a1, a2), sym(Conn::Or, a1p, a2p)), ck(a1, a1p, a2, a2p))};
    });
    add("ckc-psibar-hc", "ckc", 4, [](const Args& x) {
        const F &a1 = x[0], &a1p = x[1], &a2 = x[2], &a2p = x[3];
        return Equation{o(sym(Conn::And, dj(a1, a1p), dj(a2, a2p)), ck(a1, a2, a1p, a2p)),
                        o(ck(a2, a1, a2p, a1p), lor(sym(Conn::And, a1, a2), sym(Conn::And, a1p, a2p)))};
    });
    add("ckcm-psi-vcm", "ckcm", 8, [](const Args& x) {
        const F &a1 = x[0], &a1p = x[1], &a2 = x[2], &a2p = x[3], &a3 = x[4], &a3p = x[5], &a4 = x[6], &a4p = x[7];
        return Equation{
            o(ck(dj(a1, a3), dj(a1p, a3p), dj(a2, a4), dj(a2p, a4p)), lor(ck(a1, a1p, a3, a3p), ck(a2, a2p, a4, a4p)),
              middle_interchange(Conn::Or, cj(a1, a1p), cj(a2, a2p), cj(a3, a3p), cj(a4, a4p))),
            o(land(middle_interchange(Conn::Or, a1, a2, a3, a4), middle_interchange(Conn::Or, a1p, a2p, a3p, a4p)),
              ck(dj(a1, a2), dj(a1p, a2p), dj(a3, a4), dj(a3p, a4p)), lor(ck(a1, a1p, a2, a2p), ck(a3, a3p, a4, a4p)))};
    });
    add("ckcm-psibar-hcm", "ckcm", 8, [](const Args& x) {
        const F &a1 = x[0], &a1p = x[1], &a2 = x[2], &a2p = x[3], &a3 = x[4], &a3p = x[5], &a4 = x[6], &a4p = x[7];
        return Equation{
            o(middle_interchange(Conn::And, dj(a1, a3), dj(a1p, a3p), dj(a2, a4), dj(a2p, a4p)),
              land(ck(a1, a1p, a3, a3p), ck(a2, a2p, a4, a4p)), ck(cj(a1, a1p), cj(a2, a2p), cj(a3, a3p), cj(a4, a4p))),
            o(land(ck(a1, a2, a3, a4), ck(a1p, a2p, a3p, a4p)), ck(cj(a1, a2), cj(a1p, a2p), cj(a3, a4), cj(a3p, a4p)),
              lor(middle_interchange(Conn::And, a1, a1p, a2, a2p), middle_interchange(Conn::And, a3, a3p, a4, a4p)))};
    });

    add("ckb-psi-vb", "ckb", 6, [](const Args& x) {
        const F &a1 = x[0], &a1p = x[1], &a2 = x[2], &a2p = x[3], &a3 = x[4], &a3p = x[5];
        return Equation{o(ck(dj(a1, a2), dj(a1p, a2p), a3, a3p), lor(ck(a1, a1p, a2, a2p), id(cj(a3, a3p))),
                          b_to(Conn::Or, cj(a1, a1p), cj(a2, a2p), cj(a3, a3p))),
                        o(land(b_to(Conn::Or, a1, a2, a3), b_to(Conn::Or, a1p, a2p, a3p)),
                          ck(a1, a1p, dj(a2, a3), dj(a2p, a3p)), lor(id(cj(a1, a1p)), ck(a2, a2p, a3, a3p)))};
    });
    add("ckb-psibar-hb", "ckb", 6, [](const Args& x) {
        const F &a1 = x[0], &a1p = x[1], &a2 = x[2], &a2p = x[3], &a3 = x[4], &a3p = x[5];
        return Equation{o(b_from(Conn::And, dj(a1, a1p), dj(a2, a2p), dj(a3, a3p)), land(ck(a1, a2, a1p, a2p), id(dj(a3, a3p))),
                          ck(cj(a1, a2), a3, cj(a1p, a2p), a3p)),
                        o(land(id(dj(a1, a1p)), ck(a2, a3, a2p, a3p)), ck(a1, cj(a2, a3), a1p, cj(a2p, a3p)),
                          lor(b_from(Conn::And, a1, a2, a3), b_from(Conn::And, a1p, a2p, a3p)))};
    });

    add("ckds-psi-vd", "ckds", 2, [](const Args& x) {
        return Equation{delta_to(Conn::Or, cj(x[0], x[1])),
                        o(land(delta_to(Conn::Or, x[0]), delta_to(Conn::Or, x[1])), ck(x[0], x[1], bot, bot),
                          lor(id(cj(x[0], x[1])), w_bot()))};
    });
    add("ckds-psi-vs", "ckds", 2, [](const Args& x) {
        return Equation{sigma_to(Conn::Or, cj(x[0], x[1])),
                        o(land(sigma_to(Conn::Or, x[0]), sigma_to(Conn::Or, x[1])), ck(bot, bot, x[0], x[1]),
                          lor(w_bot(), id(cj(x[0], x[1]))))};
    });
    add("ckds-psibar-hd", "ckds", 2, [](const Args& x) {
        return Equation{delta_from(Conn::And, dj(x[0], x[1])),
                        o(land(id(dj(x[0], x[1])), w_top()), ck(x[0], top, x[1], top),
                          lor(delta_from(Conn::And, x[0]), delta_from(Conn::And, x[1])))};
    });
    add("ckds-psibar-hs", "ckds", 2, [](const Args& x) {
        return Equation{sigma_from(Conn::And, dj(x[0], x[1])),
                        o(land(w_top(), id(dj(x[0], x[1]))), ck(top, x[0], top, x[1]),
                          lor(sigma_from(Conn::And, x[0]), sigma_from(Conn::And, x[1])))};
    });

    add("wb-top", "wb", 0, [](const Args&) {
        return Equation{o(w_top(), lor(w_top(), id(top)), b_to(Conn::Or, top, top, top)), o(w_top(), lor(id(top), w_top()))};
    });
    add("wb-bot", "wb", 0, [](const Args&) {
        return Equation{o(b_from(Conn::And, bot, bot, bot), land(w_bot(), id(bot)), w_bot()), o(land(id(bot), w_bot()), w_bot())};
    });

    add("kds-vd", "kds", 0, [](const Args&) { return Equation{delta_to(Conn::Or, top), o(w_top(), lor(id(top), kappa()))}; });
    add("kds-vs", "kds", 0, [](const Args&) { return Equation{sigma_to(Conn::Or, top), o(w_top(), lor(kappa(), id(top)))}; });
    add("kds-hd", "kds", 0, [](const Args&) { return Equation{delta_from(Conn::And, bot), o(land(id(bot), kappa()), w_bot())}; });
    add("kds-hs", "kds", 0, [](const Args&) { return Equation{sigma_from(Conn::And, bot), o(land(kappa(), id(bot)), w_bot())}; });

    add("ck-kappa-1", "ckk", 0, [](const Args&) {
        return Equation{o(delta_to(Conn::And, top), land(delta_to(Conn::Or, top), sigma_to(Conn::Or, top)), ck(top, bot, bot, top)),
                        o(kappa(), delta_to(Conn::Or, bot), lor(sigma_to(Conn::And, bot), delta_to(Conn::And, bot)))};
    });
    add("ck-kappa-2", "ckk", 0, [](const Args&) {
        return Equation{o(delta_to(Conn::And, top), land(sigma_to(Conn::Or, top), delta_to(Conn::Or, top)), ck(bot, top, top, bot)),
                        o(kappa(), delta_to(Conn::Or, bot), lor(delta_to(Conn::And, bot), sigma_to(Conn::And, bot)))};
    });

    add("kappa-nat-hd", "kappa-nat", 0, [](const Args&) {
        return Equation{land(kappa(), id(top)), o(delta_from(Conn::And, top), kappa(), delta_to(Conn::And, bot))};
    });
    add("kappa-nat-hs", "kappa-nat", 0, [](const Args&) {
        return Equation{land(id(top), kappa()), o(sigma_from(Conn::And, top), kappa(), sigma_to(Conn::And, bot))};
    });
    add("kappa-nat-vd", "kappa-nat", 0, [](const Args&) {
        return Equation{lor(kappa(), id(bot)), o(delta_from(Conn::Or, top), kappa(), delta_to(Conn::Or, bot))};
    });
    add("kappa-nat-vs", "kappa-nat", 0, [](const Args&) {
        return Equation{lor(id(bot), kappa()), o(sigma_from(Conn::Or, top), kappa(), sigma_to(Conn::Or, bot))};
    });
    add("kappa-context-hd", "kappa-context", 1, [](const Args& x) {
        const F& a = x[0];
        return Equation{o(delta_to(Conn::And, cj(a, bot)), land(id(cj(a, bot)), kappa())),
                        land(o(delta_to(Conn::And, a), land(id(a), kappa())), id(bot))};
    });
    add("kappa-context-vd", "kappa-context", 1, [](const Args& x) {
        const F& a = x[0];
        return Equation{o(lor(id(dj(a, top)), kappa()), delta_from(Conn::Or, dj(a, top))),
                        lor(o(lor(id(a), kappa()), delta_from(Conn::Or, a)), id(top))};
    });
    add("kappa-context-hs", "kappa-context", 1, [](const Args& x) {
        const F& a = x[0];
        return Equation{o(sigma_to(Conn::And, cj(bot, a)), land(kappa(), id(cj(bot, a)))),
                        land(id(bot), o(sigma_to(Conn::And, a), land(kappa(), id(a))))};
    });
    add("kappa-context-vs", "kappa-context", 1, [](const Args& x) {
        const F& a = x[0];
        return Equation{o(lor(kappa(), id(dj(top, a))), sigma_from(Conn::Or, dj(top, a))),
                        lor(id(top), o(lor(kappa(), id(a)), sigma_from(Conn::Or, a)))};
    });

    add("wc-top", "wc", 0, [](const Args&) { return Equation{o(w_top(), sym(Conn::Or, top, top)), w_top()}; });
    add("wc-bot", "wc", 0, [](const Args&) { return Equation{o(sym(Conn::And, bot, bot), w_bot()), w_bot()}; });
    add("c1-top", "c1", 0, [](const Args&) { return Equation{sym(Conn::Or, top, top), id(dj(top, top))}; });
    add("c1-bot", "c1", 0, [](const Args&) { return Equation{sym(Conn::And, bot, bot), id(cj(bot, bot))}; });

    add_with_dual("def-hb-to", "lattice-definition", 3, [](const Args& x) {
        const F &a = x[0], &b = x[1], &c = x[2];
        return Equation{b_to(Conn::And, a, b, c),
                        o(land(land(id(a), hk1(b, c)), o(hk2(b, c), hk2(a, cj(b, c)))), hw(cj(a, cj(b, c))))};
    });
    add_with_dual("def-hb-from", "lattice-definition", 3, [](const Args& x) {
        const F &c = x[0], &b = x[1], &a = x[2];
        return Equation{b_from(Conn::And, c, b, a),
                        o(land(o(hk1(c, b), hk1(cj(c, b), a)), land(hk2(c, b), id(a))), hw(cj(cj(c, b), a)))};
    });
    add_with_dual("def-hc", "lattice-definition", 2, [](const Args& x) {
        return Equation{sym(Conn::And, x[0], x[1]), o(land(hk2(x[0], x[1]), hk1(x[0], x[1])), hw(cj(x[0], x[1])))};
    });
    add("def-ck-hat", "lattice-definition", 4, [](const Args& x) {
        const F &a = x[0], &b = x[1], &c = x[2], &d = x[3];
        return Equation{ck(a, b, c, d), o(land(lor(hk1(a, b), hk1(c, d)), lor(hk2(a, b), hk2(c, d))), hw(dj(cj(a, b), cj(c, d))))};
    });
    add("def-ck-check", "lattice-definition", 4, [](const Args& x) {
        const F &a = x[0], &b = x[1], &c = x[2], &d = x[3];
        return Equation{ck(a, b, c, d), o(vw(cj(dj(a, c), dj(b, d))), lor(land(vk1(a, c), vk1(b, d)), land(vk2(a, c), vk2(b, d))))};
    });

    add_with_dual("elim-w-and", "lattice-elimination", 2, [](const Args& x) {
        return Equation{hw(cj(x[0], x[1])), o(middle_interchange(Conn::And, x[0], x[0], x[1], x[1]), land(hw(x[0]), hw(x[1])))};
    });
    add_with_dual("elim-w-or", "lattice-elimination", 2, [](const Args& x) {
        return Equation{hw(dj(x[0], x[1])), o(ck(x[0], x[0], x[1], x[1]), lor(hw(x[0]), hw(x[1])))};
    });
    add_with_dual("elim-k1-assoc", "lattice-elimination", 3, [](const Args& x) {
        const F &c = x[0], &a = x[1], &b = x[2];
        return Equation{hk1(c, cj(a, b)), o(hk1(c, a), land(id(c), hk1(a, b)))};
    });
    add_with_dual("elim-k2-assoc", "lattice-elimination", 3, [](const Args& x) {
        const F &a = x[0], &b = x[1], &c = x[2];
        return Equation{hk2(cj(a, b), c), o(hk2(b, c), land(hk2(a, b), id(c)))};
    });
    add_with_dual("elim-k-b-1", "lattice-elimination", 3, [](const Args& x) {
        const F &a = x[0], &d = x[1], &c = x[2];
        return Equation{o(land(hk1(a, d), id(c)), b_to(Conn::And, a, d, c)), land(id(a), hk2(d, c))};
    });
    add_with_dual("elim-k-b-2", "lattice-elimination", 3, [](const Args& x) {
        const F &a = x[0], &b = x[1], &d = x[2];
        return Equation{o(hk1(cj(a, b), d), b_to(Conn::And, a, b, d)), land(id(a), hk1(b, d))};
    });
    add_with_dual("elim-k-b-3", "lattice-elimination", 3, [](const Args& x) {
        const F &d = x[0], &b = x[1], &c = x[2];
        return Equation{o(land(hk2(d, b), id(c)), b_to(Conn::And, d, b, c)), hk2(d, cj(b, c))};
    });
    add_with_dual("elim-k-binv-1", "lattice-elimination", 3, [](const Args& x) {
        const F &a = x[0], &d = x[1], &c = x[2];
        return Equation{o(land(id(a), hk2(d, c)), b_from(Conn::And, a, d, c)), land(hk1(a, d), id(c))};
    });
    add_with_dual("elim-k-binv-2", "lattice-elimination", 3, [](const Args& x) {
        const F &a = x[0], &b = x[1], &d = x[2];
        return Equation{o(land(id(a), hk1(b, d)), b_from(Conn::And, a, b, d)), hk1(cj(a, b), d)};
    });
    add_with_dual("elim-k-binv-3", "lattice-elimination", 3, [](const Args& x) {
        const F &d = x[0], &b = x[1], &c = x[2];
        return Equation{o(hk2(d, cj(b, c)), b_from(Conn::And, d, b, c)), land(hk2(d, b), id(c))};
    });
    add_with_dual("elim-k1-c", "lattice-elimination", 2, [](const Args& x) {
        return Equation{o(hk1(x[0], x[1]), sym(Conn::And, x[1], x[0])), hk2(x[1], x[0])};
    });
    add_with_dual("elim-k2-c", "lattice-elimination", 2, [](const Args& x) {
        return Equation{o(hk2(x[1], x[0]), sym(Conn::And, x[0], x[1])), hk1(x[0], x[1])};
    });
    add_with_dual("elim-k1-ck", "lattice-elimination", 4, [](const Args& x) {
        const F &a = x[0], &b = x[1], &d1 = x[2], &d2 = x[3];
        return Equation{o(hk1(dj(a, b), dj(d1, d2)), ck(a, d1, b, d2)), lor(hk1(a, d1), hk1(b, d2))};
    });
    add_with_dual("elim-k2-ck", "lattice-elimination", 4, [](const Args& x) {
        const F &a = x[0], &b = x[1], &d1 = x[2], &d2 = x[3];
        return Equation{o(hk2(dj(d1, d2), dj(a, b)), ck(d1, a, d2, b)), lor(hk2(d1, a), hk2(d2, b))};
    });
    add_with_dual("elim-k1-w", "lattice-elimination", 1,
                  [](const Args& x) { return Equation{o(hk1(x[0], x[0]), hw(x[0])), id(x[0])}; });
    add_with_dual("elim-k2-w", "lattice-elimination", 1,
                  [](const Args& x) { return Equation{o(hk2(x[0], x[0]), hw(x[0])), id(x[0])}; });
    add_with_dual("product-w-k-k", "lattice-elimination", 2, [](const Args& x) {
        return Equation{o(land(hk1(x[0], x[1]), hk2(x[0], x[1])), hw(cj(x[0], x[1]))), id(cj(x[0], x[1]))};
    });
    return out;
}

}  // namespace

ArrowTerm middle_interchange(Conn c, const Formula& a, const Formula& b, const Formula& cc, const Formula& d) {
    return o(b_to(c, a, cc, op(c, b, d)),
             par(c, id(a), o(b_from(c, cc, b, d), par(c, sym(c, b, cc), id(d)), b_to(c, b, cc, d))),
             b_from(c, a, b, op(c, cc, d)));
}

const std::vector<Schema>& schema_catalogue() {
    static const std::vector<Schema> catalogue = make_catalogue();
    return catalogue;
}

const Schema& find_schema(const std::string& name) {
    for (const auto& s : schema_catalogue())
        if (s.name == name) return s;
    throw UnknownSchema("unknown schema " + name);
}

std::vector<TheoryId> schema_theories(const Schema& s) {
    std::vector<Formula> letters;
    for (std::size_t i = 0; i < s.arity; ++i) letters.push_back(Formula::letter("p" + std::to_string(i + 1)));
    const Equation e = s.build(letters);
    std::vector<TheoryId> out;
    for (TheoryId t : all_theories()) {
        if (theory(t).letterless_only && s.arity > 0) continue;
        if (validate_in_theory(e.lhs, t) && validate_in_theory(e.rhs, t)) out.push_back(t);
    }
    return out;
}

bool check_equation(const Schema& s, const std::vector<Formula>& instantiation) {
    if (instantiation.size() != s.arity)
        throw ArityMismatch("schema " + s.name + " takes " + std::to_string(s.arity) + " formulas, got " +
                            std::to_string(instantiation.size()));
    const Equation e = s.build(instantiation);
    try {
        if (!(type_of(e.lhs) == type_of(e.rhs))) return false;
    } catch (const IllTyped&) {
        return false;
    }
    return eval_mat(e.lhs) == eval_mat(e.rhs);
}

bool check_equation(const std::string& name, const std::vector<Formula>& instantiation) {
    return check_equation(find_schema(name), instantiation);
}

}  // namespace intermute
