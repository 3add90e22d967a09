"""Two-sided Karnofsky-Rhodes, connected and content expansions of finite semigroups."""
from ._jit import BACKEND
from .cayley import PathRecord, TwoSidedCayleyGraph, build_graph
from .expansions import (ExpansionKind, ExpansionResult, expand, induced_morphism,
                         iterate, letter_substitution_quotient, project)
from .generated import GeneratedSemigroup, Morphism, check_morphism, evaluate_word
from .omega import (Pseudoidentity, check_pseudoidentity, eval_term, named_basis,
                    parse_pseudoidentity, parse_term)
from .predicates import (Pseudovariety, Verdict, is_equidivisible, is_member,
                         is_strongly_equidivisible, letter_cancelative)
from .semigroup import (I, FiniteSemigroup, Transformation, from_table, from_transformations,
                        idempotent_power, local_monoid, omega_minus_one)

__version__ = "0.1.0"
