"""Sequents, proof objects and the proof checker.

A proof is a linearized DAG: an indexed list of steps, each referring to
earlier steps by position or to imported sequents by negative position
(-1 is the first import).  Checking is unification-free: every step
carries the formulas/terms the rule needs, and each rule reduces to set
equations over formula normal forms, so any side condition is decided up
to the ortholattice-based equivalence rather than syntactically.  The
only sequent-level comparisons are Restate (interpretations equivalent)
and Weakening (premise interpretation below the conclusion's); the
substitution rules also compare their canonical conclusion modulo the
sequent interpretation so that the extra  s = t  (or  a <-> b)  hypothesis
may be absorbed by an equivalent formula anywhere in the sequent, which
is what lets the tautology solver spend a single step per branch.

Subproofs encapsulate an inner proof whose imports are the outer step's
premises; `flatten_subproofs` inlines them, leaving a kernel-rule-only
proof with the same conclusion.
"""

from dataclasses import dataclass, field

from . import fol2, printer
from .syntax import (And, Binder, Eq, Forall, Iff, Implies, LambdaFormula,
                     LambdaTerm, Not, Or, alpha_key, free_vars,
                     inst_pred_schemas, inst_term_schemas, subst_vars)

# stable error codes (the CLI and the tests key on these)
PREMISE_OUT_OF_RANGE = "PremiseOutOfRange"
FORWARD_REFERENCE = "ForwardReference"
RULE_MISMATCH = "RuleMismatch"
EIGENVARIABLE_VIOLATION = "EigenvariableViolation"
ARITY_MISMATCH = "ArityMismatch"
SUBPROOF_IMPORT_MISMATCH = "SubproofImportMismatch"
EMPTY_PROOF = "EmptyProof"
INVALID_INPUT = "InvalidInput"
UNKNOWN_RULE = "UnknownRule"


@dataclass(frozen=True)
class Sequent:
    """Pair of formula sets; reads as  /\\ left -> \\/ right.

    Sides are stored as vectors deduplicated up to alpha-equivalence and
    sorted by canonical printed form, so equal sequents print identically.
    """
    left: tuple
    right: tuple

    def __init__(self, left=(), right=()):
        object.__setattr__(self, "left", _side(left))
        object.__setattr__(self, "right", _side(right))

    def __str__(self):
        return printer.format_sequent(self)


def _side(fs):
    seen = {}
    for f in fs:
        seen.setdefault(alpha_key(f), f)
    return tuple(sorted(seen.values(), key=printer.format_formula))


@dataclass(frozen=True)
class ProofStep:
    rule: str
    conclusion: Sequent
    premises: tuple = ()
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Proof:
    steps: tuple
    imports: tuple = ()

    def __init__(self, steps, imports=()):
        object.__setattr__(self, "steps", tuple(steps))
        object.__setattr__(self, "imports", tuple(imports))


@dataclass(frozen=True)
class CheckResult:
    valid: bool
    conclusion: Sequent = None
    failure: tuple = None     # (step index, error code, message)

    def __bool__(self):
        return self.valid


def conclusion_of(proof):
    if not proof.steps:
        raise ValueError(EMPTY_PROOF)
    return proof.steps[-1].conclusion


def check_proof(proof, engine=None):
    engine = engine or fol2.default_engine()
    if not proof.steps:
        return CheckResult(False, failure=(0, EMPTY_PROOF, "proof has no steps"))
    for i in range(len(proof.steps)):
        ok, code, msg = check_step(proof, i, engine)
        if not ok:
            return CheckResult(False, failure=(i, code, msg))
    return CheckResult(True, conclusion=conclusion_of(proof))


def check_step(proof, i, engine=None):
    """Validate step i assuming all earlier steps check."""
    engine = engine or fol2.default_engine()
    step = proof.steps[i]
    fn = _CHECKERS.get(step.rule)
    if fn is None:
        return False, UNKNOWN_RULE, f"unknown rule {step.rule}"
    prems = []
    for p in step.premises:
        if p >= i:
            return False, FORWARD_REFERENCE, f"premise {p} not before step {i}"
        if p >= 0:
            prems.append(proof.steps[p].conclusion)
        else:
            k = -p - 1
            if k >= len(proof.imports):
                return False, PREMISE_OUT_OF_RANGE, f"no import {p}"
            prems.append(proof.imports[k])
    try:
        return fn(engine, step, prems)
    except (ValueError, KeyError, TypeError) as exc:
        return False, ARITY_MISMATCH, f"bad step parameters: {exc}"


# ---------------------------------------------------------------------------
# rule checkers.  Each computes the expected conclusion sides as sets of
# normal forms and compares with the stated conclusion.


def _nfset(engine, fs):
    return frozenset(engine.nf_id(f) for f in fs)


def _sides(engine, seq):
    return _nfset(engine, seq.left), _nfset(engine, seq.right)


def _expect(engine, step, left, right, detail):
    cl, cr = _sides(engine, step.conclusion)
    if cl == left and cr == right:
        return True, None, None
    return False, RULE_MISMATCH, f"{step.rule}: conclusion differs from {detail}"


def _nprem(step, prems, n):
    if len(prems) != n:
        raise ValueError(f"{step.rule} takes {n} premise(s), got {len(prems)}")
    return prems if n != 1 else prems[0]


def _check_hypothesis(engine, step, prems):
    _nprem(step, prems, 0)
    cl, cr = _sides(engine, step.conclusion)
    if "phi" in step.params:
        n = engine.nf_id(step.params["phi"])
        ok = n in cl and n in cr
    else:
        ok = bool(cl & cr)
    if ok:
        return True, None, None
    return False, RULE_MISMATCH, "Hypothesis: no common formula on both sides"


def _check_cut(engine, step, prems):
    p1, p2 = _nprem(step, prems, 2)
    phi = engine.nf_id(step.params["phi"])
    l1, r1 = _sides(engine, p1)
    l2, r2 = _sides(engine, p2)
    return _expect(engine, step, l1 | (l2 - {phi}), (r1 - {phi}) | r2,
                   "cutting phi between the premises")


def _binary_left(mk):
    def chk(engine, step, prems):
        p = _nprem(step, prems, 1)
        phi, psi = step.params["phi"], step.params["psi"]
        pl, pr = _sides(engine, p)
        drop = {engine.nf_id(phi), engine.nf_id(psi)}
        main = engine.nf_id(mk(phi, psi))
        return _expect(engine, step, (pl - drop) | {main}, pr,
                       "replacing the components on the left")
    return chk


def _binary_right(mk):
    def chk(engine, step, prems):
        p = _nprem(step, prems, 1)
        phi, psi = step.params["phi"], step.params["psi"]
        pl, pr = _sides(engine, p)
        drop = {engine.nf_id(phi), engine.nf_id(psi)}
        main = engine.nf_id(mk(phi, psi))
        return _expect(engine, step, pl, (pr - drop) | {main},
                       "replacing the components on the right")
    return chk


def _check_right_and(engine, step, prems):
    p1, p2 = _nprem(step, prems, 2)
    phi, psi = step.params["phi"], step.params["psi"]
    l1, r1 = _sides(engine, p1)
    l2, r2 = _sides(engine, p2)
    main = engine.nf_id(And(phi, psi))
    left = l1 | l2
    right = (r1 - {engine.nf_id(phi)}) | (r2 - {engine.nf_id(psi)}) | {main}
    return _expect(engine, step, left, right, "conjoining the premises")


def _check_left_or(engine, step, prems):
    p1, p2 = _nprem(step, prems, 2)
    phi, psi = step.params["phi"], step.params["psi"]
    l1, r1 = _sides(engine, p1)
    l2, r2 = _sides(engine, p2)
    main = engine.nf_id(Or(phi, psi))
    left = (l1 - {engine.nf_id(phi)}) | (l2 - {engine.nf_id(psi)}) | {main}
    return _expect(engine, step, left, r1 | r2, "case split on the disjunction")


def _check_right_implies(engine, step, prems):
    p = _nprem(step, prems, 1)
    phi, psi = step.params["phi"], step.params["psi"]
    pl, pr = _sides(engine, p)
    left = pl - {engine.nf_id(phi)}
    right = (pr - {engine.nf_id(psi)}) | {engine.nf_id(Implies(phi, psi))}
    return _expect(engine, step, left, right, "discharging the antecedent")


def _check_left_implies(engine, step, prems):
    p1, p2 = _nprem(step, prems, 2)
    phi, psi = step.params["phi"], step.params["psi"]
    l1, r1 = _sides(engine, p1)
    l2, r2 = _sides(engine, p2)
    main = engine.nf_id(Implies(phi, psi))
    left = l1 | (l2 - {engine.nf_id(psi)}) | {main}
    right = (r1 - {engine.nf_id(phi)}) | r2
    return _expect(engine, step, left, right, "discharging the implication")


def _check_right_iff(engine, step, prems):
    p1, p2 = _nprem(step, prems, 2)
    phi, psi = step.params["phi"], step.params["psi"]
    l1, r1 = _sides(engine, p1)
    l2, r2 = _sides(engine, p2)
    main = engine.nf_id(Iff(phi, psi))
    right = ((r1 - {engine.nf_id(Implies(phi, psi))})
             | (r2 - {engine.nf_id(Implies(psi, phi))}) | {main})
    return _expect(engine, step, l1 | l2, right, "joining both directions")


def _check_left_iff(engine, step, prems):
    p = _nprem(step, prems, 1)
    phi, psi = step.params["phi"], step.params["psi"]
    pl, pr = _sides(engine, p)
    left = (pl - {engine.nf_id(Implies(phi, psi))}) | {engine.nf_id(Iff(phi, psi))}
    return _expect(engine, step, left, pr, "strengthening to the biconditional")


def _check_left_not(engine, step, prems):
    p = _nprem(step, prems, 1)
    phi = step.params["phi"]
    pl, pr = _sides(engine, p)
    return _expect(engine, step, pl | {engine.nf_id(Not(phi))},
                   pr - {engine.nf_id(phi)}, "moving phi to the left negated")


def _check_right_not(engine, step, prems):
    p = _nprem(step, prems, 1)
    phi = step.params["phi"]
    pl, pr = _sides(engine, p)
    return _expect(engine, step, pl - {engine.nf_id(phi)},
                   pr | {engine.nf_id(Not(phi))}, "moving phi to the right negated")


def _check_left_forall(engine, step, prems):
    p = _nprem(step, prems, 1)
    x, phi, t = step.params["x"], step.params["phi"], step.params["t"]
    pl, pr = _sides(engine, p)
    inst = engine.nf_id(subst_vars(phi, {x: t}))
    main = engine.nf_id(Forall(x, phi))
    return _expect(engine, step, (pl - {inst}) | {main}, pr,
                   "generalizing the instantiated hypothesis")


def _check_right_exists(engine, step, prems):
    p = _nprem(step, prems, 1)
    x, phi, t = step.params["x"], step.params["phi"], step.params["t"]
    pl, pr = _sides(engine, p)
    inst = engine.nf_id(subst_vars(phi, {x: t}))
    main = engine.nf_id(Binder("exists", x, phi))
    return _expect(engine, step, pl, (pr - {inst}) | {main},
                   "abstracting the witness")


def _eigen_ok(engine, step, x, main_nf):
    rest = [f for f in step.conclusion.left if engine.nf_id(f) != main_nf]
    rest += [f for f in step.conclusion.right if engine.nf_id(f) != main_nf]
    return all(x not in free_vars(f) for f in rest)


def _check_right_forall(engine, step, prems):
    p = _nprem(step, prems, 1)
    x, phi = step.params["x"], step.params["phi"]
    pl, pr = _sides(engine, p)
    main = engine.nf_id(Forall(x, phi))
    ok, code, msg = _expect(engine, step, pl, (pr - {engine.nf_id(phi)}) | {main},
                            "generalizing on the right")
    if not ok:
        return ok, code, msg
    if not _eigen_ok(engine, step, x, main):
        return False, EIGENVARIABLE_VIOLATION, \
            f"{x.name} is free in the rest of the conclusion"
    return True, None, None


def _check_left_exists(engine, step, prems):
    p = _nprem(step, prems, 1)
    x, phi = step.params["x"], step.params["phi"]
    pl, pr = _sides(engine, p)
    main = engine.nf_id(Binder("exists", x, phi))
    ok, code, msg = _expect(engine, step, (pl - {engine.nf_id(phi)}) | {main}, pr,
                            "abstracting the eigenvariable on the left")
    if not ok:
        return ok, code, msg
    if not _eigen_ok(engine, step, x, main):
        return False, EIGENVARIABLE_VIOLATION, \
            f"{x.name} is free in the rest of the conclusion"
    return True, None, None


def _apply_maps(f, params):
    out = f
    pm = dict(params.get("pmaps", {}))
    pm.update(params.get("cmaps", {}))
    if pm:
        out = inst_pred_schemas(out, pm)
    tm = params.get("tmaps")
    if tm:
        out = inst_term_schemas(out, tm)
    vm = params.get("vars")
    if vm:
        out = subst_vars(out, vm)
    return out


def _check_inst_schema(engine, step, prems):
    p = _nprem(step, prems, 1)
    left = _nfset(engine, [_apply_maps(f, step.params) for f in p.left])
    right = _nfset(engine, [_apply_maps(f, step.params) for f in p.right])
    return _expect(engine, step, left, right, "instantiating the premise")


def _subst_variants(engine, step, prems, is_eq, on_left):
    p = _nprem(step, prems, 1)
    ctx, hole = step.params["ctx"], step.params["hole"]
    if is_eq:
        s, t = step.params["s"], step.params["t"]
        plug_s = inst_term_schemas(ctx, {hole: _nullary_lambda_t(s)})
        plug_t = inst_term_schemas(ctx, {hole: _nullary_lambda_t(t)})
        extra = Eq(s, t)
    else:
        a, b = step.params["a"], step.params["b"]
        plug_s = inst_pred_schemas(ctx, {hole: _nullary_lambda_f(a)})
        plug_t = inst_pred_schemas(ctx, {hole: _nullary_lambda_f(b)})
        extra = Iff(a, b)
    pl, pr = _sides(engine, p)
    ns, nt = engine.nf_id(plug_s), engine.nf_id(plug_t)
    if on_left:
        left = (pl - {ns}) | {engine.nf_id(extra), nt}
        right = pr
    else:
        left = pl | {engine.nf_id(extra)}
        right = (pr - {ns}) | {nt}
    # compare modulo the sequent interpretation so the added equation may
    # be picked up by an equivalent formula already present
    want = engine.core.nf(engine.core.join(
        [engine.core.neg(n) for n in left] + list(right)))
    got = engine.sequent_nf(step.conclusion.left, step.conclusion.right)
    if got == want:
        return True, None, None
    return False, RULE_MISMATCH, f"{step.rule}: conclusion does not match the rewrite"


def _nullary_lambda_t(term):
    return LambdaTerm((), term)


def _nullary_lambda_f(formula):
    return LambdaFormula((), formula)


def _check_left_subst_eq(engine, step, prems):
    return _subst_variants(engine, step, prems, True, True)


def _check_right_subst_eq(engine, step, prems):
    return _subst_variants(engine, step, prems, True, False)


def _check_left_subst_iff(engine, step, prems):
    return _subst_variants(engine, step, prems, False, True)


def _check_right_subst_iff(engine, step, prems):
    return _subst_variants(engine, step, prems, False, False)


def _check_left_refl(engine, step, prems):
    p = _nprem(step, prems, 1)
    t = step.params["t"]
    pl, pr = _sides(engine, p)
    return _expect(engine, step, pl - {engine.nf_id(Eq(t, t))}, pr,
                   "dropping the reflexive equation")


def _check_right_refl(engine, step, prems):
    _nprem(step, prems, 0)
    t = step.params["t"]
    return _expect(engine, step, frozenset(),
                   frozenset({engine.nf_id(Eq(t, t))}), "|- t = t")


def _check_restate(engine, step, prems):
    if len(prems) > 1:
        raise ValueError("Restate takes at most one premise")
    if prems:
        if engine.sequent_same(prems[0], step.conclusion):
            return True, None, None
        return False, RULE_MISMATCH, "Restate: sequents are not equivalent"
    if engine.sequent_taut(step.conclusion):
        return True, None, None
    return False, RULE_MISMATCH, "Restate: conclusion is not equivalent to top"


def _check_weakening(engine, step, prems):
    p = _nprem(step, prems, 1)
    if engine.sequent_leq(p, step.conclusion):
        return True, None, None
    return False, RULE_MISMATCH, "Weakening: premise is not below the conclusion"


def _check_subproof(engine, step, prems):
    inner = step.params["proof"]
    if not isinstance(inner, Proof):
        return False, INVALID_INPUT, "Subproof step carries no proof"
    if len(inner.imports) != len(prems):
        return False, SUBPROOF_IMPORT_MISMATCH, \
            f"inner proof declares {len(inner.imports)} imports, step has {len(prems)} premises"
    for k, (imp, prem) in enumerate(zip(inner.imports, prems)):
        if not engine.sequent_same(imp, prem):
            return False, SUBPROOF_IMPORT_MISMATCH, \
                f"inner import -{k + 1} differs from premise"
    res = check_proof(inner, engine)
    if not res.valid:
        i, code, msg = res.failure
        return False, code, f"inner step {i}: {msg}"
    if engine.sequent_same(res.conclusion, step.conclusion):
        return True, None, None
    return False, RULE_MISMATCH, "Subproof: stated conclusion differs from inner proof"


_CHECKERS = {
    "Hypothesis": _check_hypothesis,
    "Cut": _check_cut,
    "LeftAnd": _binary_left(And),
    "RightAnd": _check_right_and,
    "LeftOr": _check_left_or,
    "RightOr": _binary_right(Or),
    "LeftImplies": _check_left_implies,
    "RightImplies": _check_right_implies,
    "LeftIff": _check_left_iff,
    "RightIff": _check_right_iff,
    "LeftNot": _check_left_not,
    "RightNot": _check_right_not,
    "LeftForall": _check_left_forall,
    "RightForall": _check_right_forall,
    "LeftExists": _check_left_exists,
    "RightExists": _check_right_exists,
    "InstSchema": _check_inst_schema,
    "LeftSubstEq": _check_left_subst_eq,
    "RightSubstEq": _check_right_subst_eq,
    "LeftSubstIff": _check_left_subst_iff,
    "RightSubstIff": _check_right_subst_iff,
    "LeftRefl": _check_left_refl,
    "RightRefl": _check_right_refl,
    "Restate": _check_restate,
    "Weakening": _check_weakening,
    "Subproof": _check_subproof,
}

RULES = frozenset(_CHECKERS)


def flatten_subproofs(proof, engine=None):
    """Inline every subproof; the result checks iff the input does."""
    engine = engine or fol2.default_engine()
    if not check_proof(proof, engine).valid:
        raise ValueError(INVALID_INPUT)
    return _flatten(proof)


def _flatten(proof):
    steps = []
    mapping = {}

    def emit(step):
        steps.append(step)
        return len(steps) - 1

    for i, step in enumerate(proof.steps):
        if step.rule != "Subproof":
            prem = tuple(mapping[p] if p >= 0 else p for p in step.premises)
            mapping[i] = emit(ProofStep(step.rule, step.conclusion, prem, step.params))
            continue
        inner = _flatten(step.params["proof"])
        outer_ref = [mapping[p] if p >= 0 else p for p in step.premises]
        local = {}
        for j, istep in enumerate(inner.steps):
            prem = tuple(local[p] if p >= 0 else outer_ref[-p - 1]
                         for p in istep.premises)
            local[j] = emit(ProofStep(istep.rule, istep.conclusion, prem, istep.params))
        # restate the advertised conclusion (inner's may only be equivalent)
        mapping[i] = emit(ProofStep("Restate", step.conclusion,
                                    (local[len(inner.steps) - 1],), {}))
    return Proof(steps, proof.imports)
