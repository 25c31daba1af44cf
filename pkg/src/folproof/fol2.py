"""First-order extension of the ortholattice engine (the F(OL)^2 relation).

Formulas are interned as de Bruijn trees, `exists` is desugared into
~forall~, implications and biconditionals expand into the (∧, ∨, ¬)
signature with structure sharing, and every propositional layer is handed
to the ortholattice kernel.  Non-propositional subformulas become opaque
atoms, with three twists beyond plain propositional abstraction:

* s = t and t = s share an atom (unordered argument pair), and t = t is
  the constant 1, so reflexivity and symmetry of equality hold for free;
* two quantified formulas share an atom exactly when their bodies share a
  normal form, and distinct universal atoms are ordered by the ordering
  of their bodies (the kernel consults `atom_leq` for that);
* applications of the same schematic connector share an atom exactly when
  their arguments are pairwise equivalent.

No rule relates a quantified atom to its instances: forall x. P(x) and
P(c) are deliberately incomparable here, that kind of step belongs to
explicit proof rules.

An engine instance owns every cache, so equivalence classes and atom ids
are consistent across all formulas compared through it.  Engines are
cheap; tests create fresh ones to bound memory.
"""

from dataclasses import dataclass

from .olcore import JOIN, LIT, MEET, ONE, ZERO, OLCore
from .syntax import (CONN, CPRED, Binder, ConnApp, FormulaSymbol, PredApp,
                     Term, TermSymbol, free_vars, fresh_name, sconn,
                     subst_vars, var)


class Fol2Engine:
    def __init__(self):
        self.core = OLCore(atom_leq=self._atom_leq)
        self._db = {}         # structural key (child ids inlined) -> db id
        self._info = []       # db id -> key
        self._skel = {}       # formula db id -> kernel node
        self._atoms = {}      # atom key -> atom id
        self._ainfo = []      # atom id -> payload for ordering/decoding
        self._hints = []      # atom id -> binder name hint (forall atoms)
        self._binder_names = {}   # binder db id -> first-seen surface name

    # ------------------------------------------------------------------
    # interning of de Bruijn trees

    def _intern(self, key):
        i = self._db.get(key)
        if i is None:
            i = len(self._info)
            self._db[key] = i
            self._info.append(key)
        return i

    def dbterm(self, t, env=()):
        h = t.head
        if h.kind == "var":
            for i in range(len(env) - 1, -1, -1):
                if env[i] == h:
                    return self._intern(("i", len(env) - 1 - i))
            return self._intern(("v", h.name))
        args = tuple(self.dbterm(a, env) for a in t.args)
        return self._intern(("t", h.name, h.arity, h.kind, args))

    def dbf(self, f, env=()):
        if isinstance(f, PredApp):
            args = tuple(self.dbterm(a, env) for a in f.args)
            return self._intern(("p", f.sym.name, f.sym.arity, f.sym.kind, args))
        if isinstance(f, ConnApp):
            args = tuple(self.dbf(a, env) for a in f.args)
            return self._intern(("c", f.op.name, f.op.arity, f.op.kind, args))
        body = self.dbf(f.body, env + (f.v,))
        i = self._intern(("A" if f.q == "forall" else "E", body))
        self._binder_names.setdefault(i, f.v.name)
        return i

    # ------------------------------------------------------------------
    # skeletons: kernel nodes for formula db ids

    def skel(self, fid):
        x = self._skel.get(fid)
        if x is None:
            x = self._compute_skel(fid)
            self._skel[fid] = x
        return x

    def _compute_skel(self, fid):
        core = self.core
        key = self._info[fid]
        tag = key[0]
        if tag == "p":
            _, name, arity, kind, args = key
            if kind == CPRED:
                if name == "top" and arity == 0:
                    return core.one()
                if name == "bot" and arity == 0:
                    return core.zero()
                if name == "=" and arity == 2:
                    s, t = args
                    if s == t:
                        return core.one()
                    pair = (s, t) if s < t else (t, s)
                    return core.var(self._atom(("eq", pair)))
            return core.var(self._atom(("pred", fid)))
        if tag == "c":
            _, name, arity, kind, args = key
            if kind == CONN:
                if name == "~":
                    return core.neg(self.skel(args[0]))
                a = self.skel(args[0])
                b = self.skel(args[1])
                if name == "/\\":
                    return core.meet((a, b))
                if name == "\\/":
                    return core.join((a, b))
                if name == "=>":
                    return core.join((core.neg(a), b))
                # iff expands as (a ∧ b) ∨ (¬a ∧ ¬b)
                return core.join((core.meet((a, b)),
                                  core.meet((core.neg(a), core.neg(b)))))
            nfs = tuple(core.nf(self.skel(a)) for a in args)
            return core.var(self._atom(("conn", name, arity, nfs)))
        if tag == "A":
            body = core.nf(self.skel(key[1]))
            return core.var(self._atom(("all", body), hint=self._hint_for(fid)))
        # exists: ¬ forall ¬
        body = core.nf(core.neg(self.skel(key[1])))
        inner = core.var(self._atom(("all", body), hint=self._hint_for(fid)))
        return core.neg(inner)

    def _hint_for(self, fid):
        return self._binder_names.get(fid, "x")

    def _atom(self, key, hint="x"):
        a = self._atoms.get(key)
        if a is None:
            a = len(self._ainfo)
            self._atoms[key] = a
            self._ainfo.append(key)
            self._hints.append(hint)
        return a

    def _atom_leq(self, a, b):
        if a == b:
            return True
        ka, kb = self._ainfo[a], self._ainfo[b]
        if ka[0] == "all" and kb[0] == "all":
            return self.core.leq(ka[1], kb[1])
        return False

    # ------------------------------------------------------------------
    # public entry points

    def formula_skel(self, f):
        return self.skel(self.dbf(f))

    def nf_id(self, f):
        return self.core.nf(self.formula_skel(f))

    def leq(self, f, g):
        return self.core.leq(self.formula_skel(f), self.formula_skel(g))

    def equivalent(self, f, g):
        return self.nf_id(f) == self.nf_id(g)

    def sequent_skel(self, left, right):
        """Kernel node for the interpretation  /\\ left -> \\/ right."""
        core = self.core
        parts = [core.neg(self.formula_skel(f)) for f in left]
        parts += [self.formula_skel(f) for f in right]
        return core.join(parts)

    def sequent_nf(self, left, right):
        return self.core.nf(self.sequent_skel(left, right))

    def sequent_leq(self, s1, s2):
        return self.core.leq(self.sequent_skel(s1.left, s1.right),
                             self.sequent_skel(s2.left, s2.right))

    def sequent_same(self, s1, s2):
        return (self.sequent_nf(s1.left, s1.right)
                == self.sequent_nf(s2.left, s2.right))

    def sequent_taut(self, s):
        return self.sequent_nf(s.left, s.right) == self.core.one()

    def normal_form(self, f):
        return NormalForm(self, self.nf_id(f))

    # ------------------------------------------------------------------
    # decoding kernel nodes back into formulas (canonical pick of the
    # equivalence class; used by the norm command and the solver)

    def decode(self, x, env=()):
        core = self.core
        k = core.kind(x)
        if k == ZERO:
            return PredApp(FormulaSymbol("bot", 0, CPRED))
        if k == ONE:
            return PredApp(FormulaSymbol("top", 0, CPRED))
        if k == LIT:
            f = self._decode_atom(core.lit_atom(x), env)
            return f if core.lit_positive(x) else ConnApp(_NOT, (f,))
        parts = [self.decode(c, env) for c in core.children(x)]
        op = _AND if k == MEET else _OR
        out = parts[0]
        for p in parts[1:]:
            out = ConnApp(op, (out, p))
        return out

    def _decode_atom(self, a, env):
        key = self._ainfo[a]
        tag = key[0]
        if tag == "pred":
            return self._decode_formula(key[1], env)
        if tag == "eq":
            s, t = key[1]
            return PredApp(_EQ, (self._decode_term(s, env),
                                 self._decode_term(t, env)))
        if tag == "conn":
            _, name, arity, nfs = key
            return ConnApp(sconn(name, arity),
                           tuple(self.decode(n, env) for n in nfs))
        # universal atom: decode the body below a placeholder binder, then
        # pick a printable name that no free occurrence collides with
        sent = var(f"\x00b{len(env)}")
        body = self.decode(key[1], env + (sent,))
        taken = {s.name for s in free_vars(body) if not s.name.startswith("\x00")}
        hint = self._hints[a]
        name = hint if hint not in taken else fresh_name(hint, taken)
        v = var(name)
        return Binder("forall", v, subst_vars(body, {sent: Term(v)}))

    def _decode_term(self, tid, env):
        key = self._info[tid]
        if key[0] == "i":
            return Term(env[len(env) - 1 - key[1]])
        if key[0] == "v":
            return Term(var(key[1]))
        _, name, arity, kind, args = key
        return Term(TermSymbol(name, arity, kind),
                    tuple(self._decode_term(a, env) for a in args))

    def _decode_formula(self, fid, env):
        key = self._info[fid]
        tag = key[0]
        if tag == "p":
            _, name, arity, kind, args = key
            return PredApp(FormulaSymbol(name, arity, kind),
                           tuple(self._decode_term(a, env) for a in args))
        if tag == "c":
            _, name, arity, kind, args = key
            return ConnApp(FormulaSymbol(name, arity, kind),
                           tuple(self._decode_formula(a, env) for a in args))
        sent = var(f"\x00b{len(env)}")
        body = self._decode_formula(key[1], env + (sent,))
        taken = {s.name for s in free_vars(body) if not s.name.startswith("\x00")}
        hint = self._binder_names.get(fid, "x")
        name = hint if hint not in taken else fresh_name(hint, taken)
        v = var(name)
        return Binder("forall" if tag == "A" else "exists", v,
                      subst_vars(body, {sent: Term(v)}))


_EQ = FormulaSymbol("=", 2, CPRED)
_NOT = FormulaSymbol("~", 1, CONN)
_AND = FormulaSymbol("/\\", 2, CONN)
_OR = FormulaSymbol("\\/", 2, CONN)


@dataclass(frozen=True)
class NormalForm:
    engine: Fol2Engine
    node: int

    def __eq__(self, other):
        return (isinstance(other, NormalForm)
                and self.engine is other.engine and self.node == other.node)

    def __hash__(self):
        return hash((id(self.engine), self.node))

    def to_formula(self):
        return self.engine.decode(self.node)


_default = None


def default_engine():
    global _default
    if _default is None:
        _default = Fol2Engine()
    return _default


def reset_default_engine():
    global _default
    _default = None


def fol2_normal_form(f, engine=None):
    return (engine or default_engine()).normal_form(f)


def fol2_leq(f, g, engine=None):
    return (engine or default_engine()).leq(f, g)


def fol2_equivalent(f, g, engine=None):
    return (engine or default_engine()).equivalent(f, g)
