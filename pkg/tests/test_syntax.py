"""Substitution, instantiation and alpha-equivalence."""

import random

from folproof.syntax import (And, Binder, ConnApp, Eq, Exists, ExistsOne,
                             Forall, Formula, Iff, Implies, LambdaConnector,
                             LambdaFormula, LambdaTerm, Not, Or, PredApp,
                             Term, alpha_equivalent, alpha_key, cfun, cpred,
                             free_vars, inst_pred_schemas, inst_term_schemas,
                             sconn, sfun, spred, subst_vars, var, vt)

x, y, z = var("x"), var("y"), var("z")
P = cpred("P", 1)
Q = cpred("Q", 2)
f = cfun("f", 1)
g = cfun("g", 2)
c = cfun("c", 0)


def fx(*ts):
    return Term(f, ts)


def test_free_vars():
    assert free_vars(PredApp(P, (vt("x"),))) == {x}
    assert free_vars(Forall(x, PredApp(P, (vt("x"),)))) == set()
    assert free_vars(Forall(x, PredApp(Q, (vt("x"), vt("y"))))) == {y}


def test_subst_basic():
    fy = Term(f, (vt("y"),))
    assert subst_vars(PredApp(P, (vt("x"),)), {x: fy}) == PredApp(P, (fy,))


def test_subst_bound_untouched():
    fa = Forall(x, PredApp(P, (vt("x"),)))
    assert subst_vars(fa, {x: Term(c)}) == fa


def test_subst_capture_renames():
    # forall y. Q(x, y) [x := y]  ->  forall y0. Q(y, y0)
    fa = Forall(y, PredApp(Q, (vt("x"), vt("y"))))
    got = subst_vars(fa, {x: vt("y")})
    y0 = var("y0")
    assert got == Forall(y0, PredApp(Q, (vt("y"), Term(y0))))


def test_inst_term_schema_beta():
    fs = sfun("f", 1)
    lam = LambdaTerm((var("v"),), Term(g, (vt("v"), Term(c))))
    before = PredApp(P, (Term(fs, (vt("x"),)),))
    assert inst_term_schemas(before, {fs: lam}) == \
        PredApp(P, (Term(g, (vt("x"), Term(c))),))


def test_inst_term_schema_capture():
    # forall x. P('f(y))  with 'f -> (\v. x)  =>  forall x0. P(x)
    fs = sfun("f", 1)
    before = Forall(x, PredApp(P, (Term(fs, (vt("y"),)),)))
    got = inst_term_schemas(before, {fs: LambdaTerm((var("v"),), vt("x"))})
    assert got == Forall(var("x0"), PredApp(P, (vt("x"),)))


def test_inst_term_schema_identity_map():
    fs = sfun("f", 1)
    before = PredApp(P, (Term(fs, (vt("x"),)),))
    assert inst_term_schemas(before, {}) == before


def test_inst_pred_schema_example():
    # forall x.('P(x) -> 'P(f(x)))  with 'P -> (\v. v = c)
    Ps = spred("P", 1)
    before = Forall(x, Implies(PredApp(Ps, (vt("x"),)),
                               PredApp(Ps, (fx(vt("x")),))))
    lam = LambdaFormula((var("v"),), Eq(vt("v"), Term(c)))
    got = inst_pred_schemas(before, {Ps: lam})
    want = Forall(x, Implies(Eq(vt("x"), Term(c)),
                             Eq(fx(vt("x")), Term(c))))
    assert got == want


def test_inst_connector():
    C = sconn("C", 1)
    p = cpred("p", 0)
    h = spred("h", 0)
    before = ConnApp(C, (PredApp(p),))
    lam = LambdaConnector((h,), Not(PredApp(h)))
    assert inst_pred_schemas(before, {C: lam}) == Not(PredApp(p))


def test_inst_pred_capture():
    # forall x. 'P(y)  with 'P -> (\v. Q(x, x))  =>  forall x0. Q(x, x)
    Ps = spred("P", 1)
    before = Forall(x, PredApp(Ps, (vt("y"),)))
    lam = LambdaFormula((var("v"),), PredApp(Q, (vt("x"), vt("x"))))
    got = inst_pred_schemas(before, {Ps: lam})
    assert got == Forall(var("x0"), PredApp(Q, (vt("x"), vt("x"))))


def test_alpha():
    a = Forall(x, PredApp(P, (vt("x"),)))
    b = Forall(y, PredApp(P, (vt("y"),)))
    assert alpha_equivalent(a, b)
    assert not alpha_equivalent(a, Forall(x, PredApp(P, (Term(c),))))
    a2 = Forall(x, Exists(y, PredApp(Q, (vt("x"), vt("y")))))
    b2 = Forall(y, Exists(x, PredApp(Q, (vt("y"), vt("x")))))
    assert alpha_equivalent(a2, b2)


def test_existsone_desugar():
    got = ExistsOne(x, PredApp(P, (vt("x"),)))
    x0 = var("x0")
    want = Exists(x0, Forall(x, Iff(PredApp(P, (vt("x"),)),
                                    Eq(vt("x"), Term(x0)))))
    assert got == want


# ---------------------------------------------------------------------------
# randomized properties

ATOMVARS = [var(n) for n in ("x", "y", "z", "w")]


def rand_term(rng, depth):
    if depth <= 0 or rng.random() < 0.4:
        if rng.random() < 0.2:
            return Term(c)
        return Term(rng.choice(ATOMVARS))
    if rng.random() < 0.5:
        return Term(f, (rand_term(rng, depth - 1),))
    return Term(g, (rand_term(rng, depth - 1), rand_term(rng, depth - 1)))


def rand_formula(rng, depth):
    r = rng.random()
    if depth <= 0 or r < 0.25:
        if rng.random() < 0.5:
            return PredApp(P, (rand_term(rng, depth),))
        return Eq(rand_term(rng, depth), rand_term(rng, depth))
    if r < 0.4:
        return Not(rand_formula(rng, depth - 1))
    if r < 0.7:
        ctor = rng.choice([And, Or, Implies, Iff])
        return ctor(rand_formula(rng, depth - 1), rand_formula(rng, depth - 1))
    ctor = Forall if rng.random() < 0.5 else Exists
    return ctor(rng.choice(ATOMVARS), rand_formula(rng, depth - 1))


def test_subst_composition():
    from folproof.syntax import subst_term, term_vars
    rng = random.Random(31)
    for _ in range(300):
        fm = rand_formula(rng, rng.randint(0, 4))
        t = rand_term(rng, 2)
        s = rand_term(rng, 2)
        if y in term_vars(t):
            continue  # sequencing == simultaneity needs y not free in t
        lhs = subst_vars(subst_vars(fm, {x: t}), {y: s})
        rhs = subst_vars(fm, {x: subst_term(t, {y: s}), y: s})
        assert alpha_equivalent(lhs, rhs), (fm, t, s)


def test_free_vars_after_subst():
    rng = random.Random(37)
    from folproof.syntax import term_vars
    for _ in range(300):
        fm = rand_formula(rng, rng.randint(0, 4))
        t = rand_term(rng, 2)
        out = free_vars(subst_vars(fm, {x: t}))
        bound = (free_vars(fm) - {x}) | term_vars(t)
        assert out <= bound
        if x in free_vars(fm):
            assert out == bound


def test_alpha_is_equivalence():
    rng = random.Random(41)
    pool = [rand_formula(rng, rng.randint(0, 4)) for _ in range(40)]
    for fm in pool:
        assert alpha_equivalent(fm, fm)
    for a in pool:
        for b in pool:
            assert alpha_equivalent(a, b) == alpha_equivalent(b, a)
    # transitivity via canonical keys is immediate, spot-check anyway
    for a in pool:
        for b in pool:
            for cph in pool:
                if alpha_equivalent(a, b) and alpha_equivalent(b, cph):
                    assert alpha_equivalent(a, cph)


def test_identity_lambda_instantiation():
    rng = random.Random(43)
    Ps = spred("P", 1)
    fs = sfun("f", 1)

    def rand_schematic(rng, depth):
        r = rng.random()
        if depth <= 0 or r < 0.3:
            if rng.random() < 0.5:
                return PredApp(Ps, (rand_term(rng, 1),))
            return PredApp(P, (Term(fs, (rand_term(rng, 1),)),))
        if r < 0.6:
            return And(rand_schematic(rng, depth - 1), rand_schematic(rng, depth - 1))
        return Forall(rng.choice(ATOMVARS), rand_schematic(rng, depth - 1))

    v = var("v")
    id_p = LambdaFormula((v,), PredApp(Ps, (Term(v),)))
    id_f = LambdaTerm((v,), Term(fs, (Term(v),)))
    for _ in range(200):
        fm = rand_schematic(rng, rng.randint(0, 4))
        assert inst_pred_schemas(fm, {Ps: id_p}) == fm
        assert inst_term_schemas(fm, {fs: id_f}) == fm
