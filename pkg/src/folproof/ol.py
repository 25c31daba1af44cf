"""Propositional ortholattice terms and their normal form / ordering.

Thin immutable AST over the signature (∧, ∨, ¬, 0, 1) with named atoms,
backed by the arena kernel in `folproof.olcore`.  Two terms get the same
normal form exactly when the ortholattice laws (commutativity,
associativity, idempotence, bounds, double negation, complement,
De Morgan, absorption) prove them equal; `ol_leq` decides the induced
partial order s <= t, i.e. s ∧ t = s.
"""

from dataclasses import dataclass

from .olcore import JOIN, LIT, MEET, ONE, ZERO, OLCore


class OLTerm:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Zero(OLTerm):
    pass


@dataclass(frozen=True, slots=True)
class One(OLTerm):
    pass


@dataclass(frozen=True, slots=True)
class Lit(OLTerm):
    atom: str
    positive: bool = True


@dataclass(frozen=True, slots=True)
class Not(OLTerm):
    arg: OLTerm


@dataclass(frozen=True, slots=True)
class Meet(OLTerm):
    args: tuple

    def __init__(self, *args):
        object.__setattr__(self, "args", _splat(args))


@dataclass(frozen=True, slots=True)
class Join(OLTerm):
    args: tuple

    def __init__(self, *args):
        object.__setattr__(self, "args", _splat(args))


def _splat(args):
    if len(args) == 1 and isinstance(args[0], (tuple, list)):
        return tuple(args[0])
    return tuple(args)


class OLContext:
    """Shared arena + atom table for a batch of related queries."""

    def __init__(self):
        self.core = OLCore()
        self._atoms = {}
        self._names = []
        self._enc = {}    # id(term) -> (term, node); keeps terms alive
        self._dec = {}    # node -> term, so decoded trees share structure

    def atom(self, name):
        a = self._atoms.get(name)
        if a is None:
            a = len(self._names)
            self._atoms[name] = a
            self._names.append(name)
        return a

    def encode(self, t):
        hit = self._enc.get(id(t))
        if hit is not None:
            return hit[1]
        core = self.core
        if isinstance(t, Lit):
            x = core.var(self.atom(t.atom), t.positive)
        elif isinstance(t, Not):
            x = core.neg(self.encode(t.arg))
        elif isinstance(t, Meet):
            x = core.meet([self.encode(a) for a in t.args])
        elif isinstance(t, Join):
            x = core.join([self.encode(a) for a in t.args])
        elif isinstance(t, Zero):
            x = core.zero()
        elif isinstance(t, One):
            x = core.one()
        else:
            raise TypeError(f"not an OLTerm: {t!r}")
        self._enc[id(t)] = (t, x)
        return x

    def decode(self, x):
        t = self._dec.get(x)
        if t is not None:
            return t
        core = self.core
        k = core.kind(x)
        if k == ZERO:
            t = Zero()
        elif k == ONE:
            t = One()
        elif k == LIT:
            t = Lit(self._names[core.lit_atom(x)], core.lit_positive(x))
        else:
            args = tuple(self.decode(c) for c in core.children(x))
            t = Meet(args) if k == MEET else Join(args)
        self._dec[x] = t
        return t


_default = None


def _ctx(ctx):
    global _default
    if ctx is not None:
        return ctx
    if _default is None:
        _default = OLContext()
    return _default


def ol_normal_form(t, ctx=None):
    c = _ctx(ctx)
    return c.decode(c.core.nf(c.encode(t)))


def ol_leq(s, t, ctx=None):
    c = _ctx(ctx)
    return c.core.leq(c.encode(s), c.encode(t))


def ol_equivalent(s, t, ctx=None):
    c = _ctx(ctx)
    return c.core.nf(c.encode(s)) == c.core.nf(c.encode(t))
