"""folproof: proof checking for schematic first-order logic.

Sequent-calculus proofs are validated modulo an ortholattice-based
equivalence on formulas, so reordering conjuncts, double negations and
similar noise never needs explicit proof steps.  The package bundles the
checker kernel, a theory manager with sound (optionally underspecified)
definitions, a proof-producing propositional solver, a text format with
parser and canonical printer, a CLI, and a small set-theory corpus.
"""

__version__ = "0.1.0"
