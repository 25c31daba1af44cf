"""Terms and formulas of schematic first-order logic.

Symbols come in first-order flavours (variables, schematic functions,
constant functions) and formula-level flavours (constant predicates,
schematic predicates, schematic connectors).  Schematic symbols stand for
arbitrary well-typed terms/formulas and can be instantiated across a whole
sequent; variables are the arity-0 first-order schematics and can also be
bound by quantifiers.

All trees are immutable.  Substitution and instantiation are
capture-avoiding: a binder is renamed (smallest free numeric suffix)
whenever a substituted value would bring one of its free variables into
scope.  The kernel has no unique-existence binder; `existsone` desugars
to  exists u. forall x. (phi <-> x = u)  right here.
"""

from dataclasses import dataclass, field

VAR = "var"
SFUN = "sfun"
CFUN = "cfun"
CPRED = "cpred"
SPRED = "spred"
SCONN = "sconn"
CONN = "conn"


@dataclass(frozen=True, slots=True)
class TermSymbol:
    name: str
    arity: int
    kind: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("empty symbol name")
        if self.kind == VAR and self.arity != 0:
            raise ValueError("variables have arity 0")


@dataclass(frozen=True, slots=True)
class FormulaSymbol:
    name: str
    arity: int
    kind: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("empty symbol name")


def var(name):
    return TermSymbol(name, 0, VAR)


def sfun(name, arity):
    return TermSymbol(name, arity, SFUN)


def cfun(name, arity):
    return TermSymbol(name, arity, CFUN)


def cpred(name, arity):
    return FormulaSymbol(name, arity, CPRED)


def spred(name, arity):
    return FormulaSymbol(name, arity, SPRED)


def sconn(name, arity):
    return FormulaSymbol(name, arity, SCONN)


EQ = cpred("=", 2)
TOP = cpred("top", 0)
BOT = cpred("bot", 0)

NOT = FormulaSymbol("~", 1, CONN)
AND = FormulaSymbol("/\\", 2, CONN)
OR = FormulaSymbol("\\/", 2, CONN)
IMPLIES = FormulaSymbol("=>", 2, CONN)
IFF = FormulaSymbol("<=>", 2, CONN)

FORALL = "forall"
EXISTS = "exists"


@dataclass(frozen=True, slots=True)
class Term:
    head: TermSymbol
    args: tuple = ()

    def __post_init__(self):
        if len(self.args) != self.head.arity:
            raise ValueError(
                f"{self.head.name} expects {self.head.arity} args, got {len(self.args)}")


class Formula:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class PredApp(Formula):
    sym: FormulaSymbol
    args: tuple = ()

    def __post_init__(self):
        if self.sym.kind not in (CPRED, SPRED):
            raise ValueError(f"{self.sym.name} is not a predicate symbol")
        if len(self.args) != self.sym.arity:
            raise ValueError(
                f"{self.sym.name} expects {self.sym.arity} args, got {len(self.args)}")


@dataclass(frozen=True, slots=True)
class ConnApp(Formula):
    op: FormulaSymbol
    args: tuple

    def __post_init__(self):
        if self.op.kind not in (CONN, SCONN):
            raise ValueError(f"{self.op.name} is not a connective")
        if self.op.kind == CONN and len(self.args) != self.op.arity:
            raise ValueError(f"{self.op.name} expects {self.op.arity} args")
        if self.op.kind == SCONN and len(self.args) != self.op.arity:
            raise ValueError(
                f"{self.op.name} expects {self.op.arity} args, got {len(self.args)}")


@dataclass(frozen=True, slots=True)
class Binder(Formula):
    q: str
    v: TermSymbol
    body: Formula

    def __post_init__(self):
        if self.q not in (FORALL, EXISTS):
            raise ValueError(f"unknown binder {self.q}")
        if self.v.kind != VAR:
            raise ValueError("binder variable must be a variable symbol")


@dataclass(frozen=True, slots=True)
class LambdaTerm:
    params: tuple       # variable symbols, distinct
    body: Term

    def __post_init__(self):
        _check_params(self.params)


@dataclass(frozen=True, slots=True)
class LambdaFormula:
    params: tuple       # variable symbols for predicate instantiation
    body: Formula

    def __post_init__(self):
        _check_params(self.params)


@dataclass(frozen=True, slots=True)
class LambdaConnector:
    params: tuple       # arity-0 schematic predicates as formula slots
    body: Formula

    def __post_init__(self):
        if len(set(self.params)) != len(self.params):
            raise ValueError("lambda parameters must be distinct")
        for p in self.params:
            if not (isinstance(p, FormulaSymbol) and p.kind == SPRED and p.arity == 0):
                raise ValueError("connector lambda params are arity-0 schematic predicates")


def _check_params(params):
    if len(set(params)) != len(params):
        raise ValueError("lambda parameters must be distinct")
    for p in params:
        if p.kind != VAR:
            raise ValueError("lambda parameters must be variables")


# ---------------------------------------------------------------------------
# convenient constructors


def vt(name):
    return Term(var(name))


def Not(f):
    return ConnApp(NOT, (f,))


def And(a, b):
    return ConnApp(AND, (a, b))


def Or(a, b):
    return ConnApp(OR, (a, b))


def Implies(a, b):
    return ConnApp(IMPLIES, (a, b))


def Iff(a, b):
    return ConnApp(IFF, (a, b))


def Forall(v, body):
    return Binder(FORALL, v, body)


def Exists(v, body):
    return Binder(EXISTS, v, body)


def Eq(s, t):
    return PredApp(EQ, (s, t))


def Top():
    return PredApp(TOP)


def Bot():
    return PredApp(BOT)


def ExistsOne(v, body):
    """exists-unique sugar: exists u. forall v. (body <-> v = u), u fresh."""
    taken = {s.name for s in free_vars(body)} | {v.name}
    u = var(fresh_name(v.name, taken))
    return Exists(u, Forall(v, Iff(body, Eq(Term(v), Term(u)))))


def and_all(fs, empty=None):
    fs = list(fs)
    if not fs:
        return empty if empty is not None else Top()
    out = fs[0]
    for f in fs[1:]:
        out = And(out, f)
    return out


def or_all(fs, empty=None):
    fs = list(fs)
    if not fs:
        return empty if empty is not None else Bot()
    out = fs[0]
    for f in fs[1:]:
        out = Or(out, f)
    return out


# ---------------------------------------------------------------------------
# free variables and symbol collection


def term_vars(t):
    if t.head.kind == VAR:
        return {t.head}
    out = set()
    for a in t.args:
        out |= term_vars(a)
    return out


def free_vars(f):
    if isinstance(f, PredApp):
        out = set()
        for a in f.args:
            out |= term_vars(a)
        return out
    if isinstance(f, ConnApp):
        out = set()
        for a in f.args:
            out |= free_vars(a)
        return out
    return free_vars(f.body) - {f.v}


def term_symbols(x):
    """All term symbols in a term or formula."""
    out = set()
    if isinstance(x, Term):
        out.add(x.head)
        for a in x.args:
            out |= term_symbols(a)
    elif isinstance(x, PredApp):
        for a in x.args:
            out |= term_symbols(a)
    elif isinstance(x, ConnApp):
        for a in x.args:
            out |= term_symbols(a)
    elif isinstance(x, Binder):
        out |= term_symbols(x.body)
    return out


def formula_symbols(f):
    out = set()
    if isinstance(f, PredApp):
        out.add(f.sym)
    elif isinstance(f, ConnApp):
        out.add(f.op)
        for a in f.args:
            out |= formula_symbols(a)
    elif isinstance(f, Binder):
        out |= formula_symbols(f.body)
    return out


def fresh_name(base, taken):
    """base with the smallest numeric suffix avoiding `taken`."""
    i = 0
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def _fresh_var(v, forbidden_names):
    return var(fresh_name(v.name, forbidden_names))


# ---------------------------------------------------------------------------
# capture-avoiding variable substitution


def subst_term(t, mapping):
    if t.head.kind == VAR:
        return mapping.get(t.head, t)
    if not t.args:
        return t
    return Term(t.head, tuple(subst_term(a, mapping) for a in t.args))


def subst_vars(f, mapping):
    """Simultaneous substitution of terms for free variables."""
    if not mapping:
        return f
    return _subst_f(f, mapping)


def _subst_f(f, m):
    if isinstance(f, PredApp):
        if not f.args:
            return f
        return PredApp(f.sym, tuple(subst_term(a, m) for a in f.args))
    if isinstance(f, ConnApp):
        return ConnApp(f.op, tuple(_subst_f(a, m) for a in f.args))
    v, body = f.v, f.body
    fv = free_vars(body)
    m2 = {k: t for k, t in m.items() if k != v and k in fv}
    if not m2:
        return f
    incoming = set()
    for t in m2.values():
        incoming |= term_vars(t)
    if v in incoming:
        names = {s.name for s in incoming | fv} | {v.name}
        w = _fresh_var(v, names)
        body = _subst_f(body, {v: Term(w)})
        v = w
    return Binder(f.q, v, _subst_f(body, m2))


# ---------------------------------------------------------------------------
# second-order instantiation


def inst_term_schemas(x, mapping):
    """Replace applications of schematic function symbols by lambda bodies."""
    for sym, lam in mapping.items():
        if sym.kind != SFUN:
            raise ValueError(f"{sym.name} is not a schematic function")
        if len(lam.params) != sym.arity:
            raise ValueError(f"arity mismatch instantiating {sym.name}")
    if isinstance(x, Term):
        return _inst_t(x, mapping)
    return _inst_schemas_f(x, mapping, {})


def inst_pred_schemas(f, mapping):
    """Replace schematic predicate / connector applications by lambda bodies."""
    for sym, lam in mapping.items():
        if sym.kind == SPRED:
            if not isinstance(lam, LambdaFormula) or len(lam.params) != sym.arity:
                raise ValueError(f"arity mismatch instantiating {sym.name}")
        elif sym.kind == SCONN:
            if not isinstance(lam, LambdaConnector) or len(lam.params) != sym.arity:
                raise ValueError(f"arity mismatch instantiating {sym.name}")
        else:
            raise ValueError(f"{sym.name} is not schematic")
    return _inst_schemas_f(f, {}, mapping)


def _inst_t(t, tm):
    if t.head.kind == VAR:
        return t
    args = tuple(_inst_t(a, tm) for a in t.args)
    lam = tm.get(t.head)
    if lam is None:
        return Term(t.head, args)
    return subst_term(lam.body, dict(zip(lam.params, args)))


def _lambda_free_vars(lam):
    if isinstance(lam, LambdaTerm):
        return term_vars(lam.body) - set(lam.params)
    if isinstance(lam, LambdaFormula):
        return free_vars(lam.body) - set(lam.params)
    return free_vars(lam.body)


def _inst_schemas_f(f, tm, pm):
    if isinstance(f, PredApp):
        lam = pm.get(f.sym)
        args = tuple(_inst_t(a, tm) for a in f.args)
        if lam is None:
            return PredApp(f.sym, args) if args != f.args else f
        return subst_vars(lam.body, dict(zip(lam.params, args)))
    if isinstance(f, ConnApp):
        args = tuple(_inst_schemas_f(a, tm, pm) for a in f.args)
        lam = pm.get(f.op)
        if lam is None:
            return ConnApp(f.op, args)
        return _subst_slots(lam.body, dict(zip(lam.params, args)))
    # binder: rename if any relevant lambda body smuggles our variable in
    v, body = f.v, f.body
    used = _symbols_under(body)
    incoming = set()
    for sym, lam in list(tm.items()) + list(pm.items()):
        if sym in used:
            incoming |= _lambda_free_vars(lam)
    if v in incoming:
        names = {s.name for s in incoming | free_vars(body)} | {v.name}
        w = _fresh_var(v, names)
        body = _subst_f(body, {v: Term(w)})
        v = w
    return Binder(f.q, v, _inst_schemas_f(body, tm, pm))


def _symbols_under(f):
    return term_symbols(f) | formula_symbols(f)


def _subst_slots(f, slots):
    """Plug formulas into arity-0 schematic predicate placeholders."""
    if isinstance(f, PredApp):
        return slots.get(f.sym, f)
    if isinstance(f, ConnApp):
        return ConnApp(f.op, tuple(_subst_slots(a, slots) for a in f.args))
    v, body = f.v, f.body
    incoming = set()
    used = formula_symbols(body)
    for sym, g in slots.items():
        if sym in used:
            incoming |= free_vars(g)
    if v in incoming:
        names = {s.name for s in incoming | free_vars(body)} | {v.name}
        w = _fresh_var(v, names)
        body = _subst_f(body, {v: Term(w)})
        v = w
    return Binder(f.q, v, _subst_slots(body, slots))


# ---------------------------------------------------------------------------
# de Bruijn keys and alpha-equivalence


def term_key(t, env=()):
    h = t.head
    if h.kind == VAR:
        for i in range(len(env) - 1, -1, -1):
            if env[i] == h:
                return ("i", len(env) - 1 - i)
        return ("v", h.name)
    return ("t", h.name, h.arity, h.kind,
            tuple(term_key(a, env) for a in t.args))


def alpha_key(f, env=()):
    """Canonical de Bruijn encoding; equal keys == alpha-equivalent."""
    if isinstance(f, PredApp):
        return ("p", f.sym.name, f.sym.arity, f.sym.kind,
                tuple(term_key(a, env) for a in f.args))
    if isinstance(f, ConnApp):
        return ("c", f.op.name, f.op.arity, f.op.kind,
                tuple(alpha_key(a, env) for a in f.args))
    return ("b", f.q, alpha_key(f.body, env + (f.v,)))


def alpha_equivalent(f, g):
    return f is g or alpha_key(f) == alpha_key(g)
