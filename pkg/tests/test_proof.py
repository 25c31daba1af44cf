"""Proof checker: the Pierce corpus, rule side conditions, subproofs."""

import pytest

from folproof.fol2 import Fol2Engine
from folproof.proof import (EIGENVARIABLE_VIOLATION, FORWARD_REFERENCE,
                            RULE_MISMATCH, SUBPROOF_IMPORT_MISMATCH,
                            CheckResult, Proof, ProofStep, Sequent,
                            check_proof, conclusion_of, flatten_subproofs)
from folproof.syntax import (And, Eq, Forall, Iff, Implies, Not, Or, PredApp,
                             Term, cfun, cpred, spred, var, vt)

phi = PredApp(spred("phi", 0))
psi = PredApp(spred("psi", 0))
P = cpred("P", 1)
Q = cpred("Q", 2)
f = cfun("f", 1)
c = cfun("c", 0)
x, y = var("x"), var("y")


def pierce_formula():
    return Implies(Implies(Implies(phi, psi), phi), phi)


def pierce_proof():
    s0 = Sequent([phi], [phi])
    s1 = Sequent([phi], [phi, psi])
    s2 = Sequent([], [phi, Implies(phi, psi)])
    s3 = Sequent([Implies(Implies(phi, psi), phi)], [phi])
    s4 = Sequent([], [pierce_formula()])
    return Proof([
        ProofStep("Hypothesis", s0),
        ProofStep("Weakening", s1, (0,)),
        ProofStep("RightImplies", s2, (1,), {"phi": phi, "psi": psi}),
        ProofStep("LeftImplies", s3, (2, 0),
                  {"phi": Implies(phi, psi), "psi": phi}),
        ProofStep("RightImplies", s4, (3,),
                  {"phi": Implies(Implies(phi, psi), phi), "psi": phi}),
    ])


def test_pierce_checks():
    e = Fol2Engine()
    res = check_proof(pierce_proof(), e)
    assert res.valid, res.failure
    assert e.sequent_same(res.conclusion, Sequent([], [pierce_formula()]))


def test_pierce_one_step_restate():
    e = Fol2Engine()
    proof = Proof([ProofStep("Restate", Sequent([], [pierce_formula()]))])
    assert check_proof(proof, e).valid


def test_mutated_pierce_fails():
    base = pierce_proof()
    # drop step 2 and shift indices down: old step 3 no longer matches
    steps = list(base.steps)
    del steps[2]
    shifted = []
    for s in steps:
        prem = tuple(p - 1 if p >= 2 else p for p in s.premises)
        shifted.append(ProofStep(s.rule, s.conclusion, prem, s.params))
    res = check_proof(Proof(shifted), Fol2Engine())
    assert not res.valid
    assert res.failure[0] == 2
    assert res.failure[1] == RULE_MISMATCH


def test_forward_reference_detected():
    s = Sequent([phi], [phi])
    proof = Proof([ProofStep("Restate", s, (7,))])
    res = check_proof(proof, Fol2Engine())
    assert not res.valid and res.failure[1] == FORWARD_REFERENCE


def test_import_premises():
    e = Fol2Engine()
    A = PredApp(cpred("A", 0))
    B = PredApp(cpred("B", 0))
    proof = Proof(
        [ProofStep("Weakening", Sequent([], [A, B]), (-1,))],
        imports=[Sequent([], [A])])
    res = check_proof(proof, e)
    assert res.valid


def test_eigenvariable_violation():
    e = Fol2Engine()
    px = PredApp(P, (vt("x"),))
    prem = Sequent([px], [px])
    concl = Sequent([px], [Forall(x, px)])
    proof = Proof([
        ProofStep("Hypothesis", prem),
        ProofStep("RightForall", concl, (0,), {"x": x, "phi": px}),
    ])
    res = check_proof(proof, e)
    assert not res.valid and res.failure[1] == EIGENVARIABLE_VIOLATION


def test_right_forall_ok_when_fresh():
    e = Fol2Engine()
    px = PredApp(P, (vt("x"),))
    proof = Proof([
        ProofStep("Restate", Sequent([], [Implies(px, px)])),
        ProofStep("RightForall", Sequent([], [Forall(x, Implies(px, px))]),
                  (0,), {"x": x, "phi": Implies(px, px)}),
    ])
    assert check_proof(proof, e).valid


def test_right_subst_eq_example():
    # from |- f(s) = f(s), with context f(s) = f('h) and pair (s, t):
    #   s = t |- f(s) = f(t)
    e = Fol2Engine()
    s, t = vt("y"), Term(c)
    hole = cfun("h", 0)
    from folproof.syntax import sfun
    h = sfun("h", 0)
    ctx = Eq(Term(f, (s,)), Term(f, (Term(h),)))
    prem = Sequent([], [Eq(Term(f, (s,)), Term(f, (s,)))])
    concl = Sequent([Eq(s, t)], [Eq(Term(f, (s,)), Term(f, (t,)))])
    proof = Proof([
        ProofStep("RightRefl", prem, (), {"t": Term(f, (s,))}),
        ProofStep("RightSubstEq", concl, (0,),
                  {"ctx": ctx, "hole": h, "s": s, "t": t}),
    ])
    res = check_proof(proof, e)
    assert res.valid, res.failure


def test_subst_iff_special_case():
    # phi |- psi  gives  phi |- psi[phi := top]  in one step
    e = Fol2Engine()
    a = PredApp(cpred("a", 0))
    b = PredApp(cpred("b", 0))
    h = spred("h", 0)
    psi_f = Or(a, b)
    ctx = Or(PredApp(h), b)
    from folproof.syntax import Top
    prem = Sequent([a], [psi_f])
    concl = Sequent([a], [Or(Top(), b)])
    proof = Proof([
        ProofStep("Hypothesis", Sequent([a], [a])),
        ProofStep("RightOr", prem, (0,), {"phi": a, "psi": b}),
        ProofStep("RightSubstIff", concl, (1,),
                  {"ctx": ctx, "hole": h, "a": a, "b": Top()}),
    ])
    res = check_proof(proof, e)
    assert res.valid, res.failure


def test_restate_reversible_and_weakening_subsumes():
    e = Fol2Engine()
    a = PredApp(cpred("a", 0))
    b = PredApp(cpred("b", 0))
    s1 = Sequent([a], [b])
    s2 = Sequent([], [Implies(a, b)])
    for prem, concl in ((s1, s2), (s2, s1)):
        proof = Proof([ProofStep("Restate", concl, (-1,))], imports=[prem])
        assert check_proof(proof, e).valid
        proof = Proof([ProofStep("Weakening", concl, (-1,))], imports=[prem])
        assert check_proof(proof, e).valid


def test_quantifier_rules_roundtrip():
    # forall x. P(x) |- exists y. P(y)
    e = Fol2Engine()
    px = PredApp(P, (vt("x"),))
    pc = PredApp(P, (Term(c),))
    fa = Forall(x, px)
    ex = Sequent([fa], [PredApp(P, (vt("y"),))])
    proof = Proof([
        ProofStep("Hypothesis", Sequent([pc], [pc])),
        ProofStep("LeftForall", Sequent([fa], [pc]), (0,),
                  {"x": x, "phi": px, "t": Term(c)}),
        ProofStep("RightExists", Sequent([fa], [_exists(y, PredApp(P, (vt("y"),)))]),
                  (1,), {"x": y, "phi": PredApp(P, (vt("y"),)), "t": Term(c)}),
    ])
    res = check_proof(proof, e)
    assert res.valid, res.failure


def _exists(v, body):
    from folproof.syntax import Exists
    return Exists(v, body)


def test_subproof_and_flatten():
    e = Fol2Engine()
    a = PredApp(cpred("a", 0))
    b = PredApp(cpred("b", 0))
    inner = Proof(
        [ProofStep("Weakening", Sequent([], [a, b]), (-1,))],
        imports=[Sequent([], [a])])
    outer = Proof([
        ProofStep("Restate", Sequent([], [a]), (-1,)),
        ProofStep("Subproof", Sequent([], [a, b]), (0,), {"proof": inner}),
        ProofStep("Weakening", Sequent([Not(b)], [a, b]), (1,)),
    ], imports=[Sequent([], [a])])
    res = check_proof(outer, e)
    assert res.valid, res.failure
    assert conclusion_of(outer) == Sequent([Not(b)], [a, b])

    flat = flatten_subproofs(outer, e)
    assert all(s.rule != "Subproof" for s in flat.steps)
    res2 = check_proof(flat, e)
    assert res2.valid
    assert e.sequent_same(res2.conclusion, res.conclusion)


def test_subproof_import_mismatch():
    e = Fol2Engine()
    a = PredApp(cpred("a", 0))
    b = PredApp(cpred("b", 0))
    inner = Proof(
        [ProofStep("Weakening", Sequent([], [a, b]), (-1,))],
        imports=[Sequent([], [b])])
    outer = Proof([
        ProofStep("Restate", Sequent([], [a]), (-1,)),
        ProofStep("Subproof", Sequent([], [a, b]), (0,), {"proof": inner}),
    ], imports=[Sequent([], [a])])
    res = check_proof(outer, e)
    assert not res.valid and res.failure[1] == SUBPROOF_IMPORT_MISMATCH


def test_mutation_single_steps_detected():
    e = Fol2Engine()
    base = pierce_proof()
    assert check_proof(base, e).valid
    # corrupt each step in turn: swap the rule, drop a premise, or tweak
    # the conclusion; the checker must localize a failure every time
    for i, step in enumerate(base.steps):
        steps = list(base.steps)
        steps[i] = ProofStep("RightRefl" if step.rule != "RightRefl" else "Hypothesis",
                             step.conclusion, (), {"t": vt("x")})
        assert not check_proof(Proof(steps), e).valid
        if step.premises:
            steps = list(base.steps)
            steps[i] = ProofStep(step.rule, step.conclusion,
                                 step.premises[:-1], step.params)
            assert not check_proof(Proof(steps), e).valid
        steps = list(base.steps)
        steps[i] = ProofStep(step.rule, Sequent([psi], [phi]), step.premises,
                             step.params)
        assert not check_proof(Proof(steps), e).valid
