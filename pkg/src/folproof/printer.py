"""Canonical ASCII rendering of terms, formulas, sequents and proofs.

Minimal parentheses under the precedence
    ~  >  /\\  >  \\/  >  =>  >  <=>
with => and <=> associating to the right and binders extending maximally
to the right (a binder in operand position is always parenthesized).
Printing is deterministic, so golden files are byte-stable; `parse . print`
is the identity on the structural level.
"""

from .syntax import (CONN, SCONN, SPRED, Binder, ConnApp, PredApp, Term)

_IFF, _IMPLIES, _OR, _AND, _NOT, _ATOM = 1, 2, 3, 4, 5, 6
_PREC = {"<=>": _IFF, "=>": _IMPLIES, "\\/": _OR, "/\\": _AND, "~": _NOT}


def format_term(t):
    h = t.head
    name = f"'{h.name}" if h.kind == "sfun" else h.name
    if not t.args:
        return name
    return f"{name}({', '.join(format_term(a) for a in t.args)})"


def format_formula(f):
    return _fmt(f, 0)


def _fmt(f, prec):
    if isinstance(f, PredApp):
        sym = f.sym
        if sym.name == "=" and sym.arity == 2:
            return f"{format_term(f.args[0])} = {format_term(f.args[1])}"
        name = f"'{sym.name}" if sym.kind == SPRED else sym.name
        if not f.args:
            return name
        return f"{name}({', '.join(format_term(a) for a in f.args)})"
    if isinstance(f, ConnApp):
        op = f.op
        if op.kind == SCONN:
            return f"'{op.name}({', '.join(_fmt(a, 0) for a in f.args)})"
        if op.name == "~":
            return _wrap(f"~{_fmt(f.args[0], _NOT)}", _NOT, prec)
        p = _PREC[op.name]
        if op.name in ("=>", "<=>"):
            body = f"{_fmt(f.args[0], p + 1)} {op.name} {_fmt(f.args[1], p)}"
        else:
            body = f"{_fmt(f.args[0], p)} {op.name} {_fmt(f.args[1], p + 1)}"
        return _wrap(body, p, prec)
    assert isinstance(f, Binder)
    return _wrap(f"{f.q} {f.v.name}. {_fmt(f.body, 0)}", 0, prec)


def _wrap(s, mine, outer):
    return f"({s})" if mine < outer else s


def format_sequent(s):
    left = "; ".join(format_formula(f) for f in s.left)
    right = "; ".join(format_formula(f) for f in s.right)
    if left:
        return f"{left} |- {right}" if right else f"{left} |-"
    return f"|- {right}" if right else "|-"


# ---------------------------------------------------------------------------
# proofs


def format_proof(proof, indent=""):
    lines = []
    for k, imp in enumerate(proof.imports):
        lines.append(f"{indent}import -{k + 1}: {format_sequent(imp)}")
    for i, step in enumerate(proof.steps):
        lines.extend(_step_lines(i, step, indent))
    return "\n".join(lines) + "\n"


def _step_lines(i, step, indent):
    prem = ", ".join(str(p) for p in step.premises)
    head = f"{indent}{i}. {step.rule}({prem})"
    if step.rule == "Subproof":
        inner = format_proof(step.params["proof"], indent + "    ")
        return [f"{head} : {format_sequent(step.conclusion)} {{",
                inner.rstrip("\n"),
                f"{indent}}}"]
    ps = _format_params(step.rule, step.params)
    if ps:
        head = f"{head} {{{ps}}}"
    return [f"{head} : {format_sequent(step.conclusion)}"]


def _format_params(rule, params):
    out = []
    for key in _PARAM_ORDER.get(rule, ()):
        if key not in params:
            continue
        v = params[key]
        if key in ("t", "s"):
            out.append(f"{key}={format_term(v)}")
        elif key == "x":
            out.append(f"x={v.name}")
        elif key == "hole":
            out.append(f"hole='{v.name}")
        elif key == "terms":
            out.append("terms=" + ", ".join(format_term(t) for t in v))
        elif key in ("vars", "tmaps", "pmaps", "cmaps"):
            out.append(f"{key}=" + ", ".join(_map_entry(key, s, l)
                                             for s, l in sorted(v.items(), key=lambda kv: kv[0].name)))
        else:
            out.append(f"{key}={format_formula(v)}")
    return "; ".join(out)


def _map_entry(kind, sym, lam):
    if kind == "vars":
        return f"{sym.name} := {format_term(lam)}"
    if kind == "tmaps":
        ps = ", ".join(p.name for p in lam.params)
        return f"'{sym.name}({ps}) := {format_term(lam.body)}"
    if kind == "pmaps":
        ps = ", ".join(p.name for p in lam.params)
        return f"'{sym.name}({ps}) := {format_formula(lam.body)}"
    ps = ", ".join(f"'{p.name}" for p in lam.params)
    return f"'{sym.name}({ps}) := {format_formula(lam.body)}"


_PARAM_ORDER = {
    "Hypothesis": ("phi",),
    "Cut": ("phi",),
    "LeftAnd": ("phi", "psi"),
    "RightAnd": ("phi", "psi"),
    "LeftOr": ("phi", "psi"),
    "RightOr": ("phi", "psi"),
    "LeftImplies": ("phi", "psi"),
    "RightImplies": ("phi", "psi"),
    "LeftIff": ("phi", "psi"),
    "RightIff": ("phi", "psi"),
    "LeftNot": ("phi",),
    "RightNot": ("phi",),
    "LeftForall": ("x", "phi", "t"),
    "RightForall": ("x", "phi"),
    "LeftExists": ("x", "phi"),
    "RightExists": ("x", "phi", "t"),
    "InstSchema": ("vars", "tmaps", "pmaps", "cmaps"),
    "LeftSubstEq": ("ctx", "hole", "s", "t"),
    "RightSubstEq": ("ctx", "hole", "s", "t"),
    "LeftSubstIff": ("ctx", "hole", "a", "b"),
    "RightSubstIff": ("ctx", "hole", "a", "b"),
    "LeftRefl": ("t",),
    "RightRefl": ("t",),
    "Restate": (),
    "Weakening": (),
}
