"""First-order linear logic theorem proving for type-logical grammars.

The pipeline: translate Lambek categories (or use first-order formulas
directly), unfold a sequent into a proof structure, search for axiom
matchings, and accept exactly those whose abstract graph contracts to a
single vertex. Readings come with substitutions and, through the
semantics module, normalized lambda terms.
"""

from .contraction import (
    ContractionGraph,
    ContractionStep,
    abstract,
    contract_fully,
    doomed,
    graph_signature,
    is_proof_net,
)
from .formulas import (
    Atom,
    Exists,
    Forall,
    Formula,
    LAtom,
    LambekFormula,
    Lolli,
    Over,
    Prod,
    Sequent,
    Tensor,
    Under,
    alpha_equal,
    format_lambek,
    format_mill1,
    format_sequent,
    make_sequent,
)
from .lexicon import Lexicon, load_lexicon, parse_lexicon, sentence_sequents
from .oracle import OracleBudget, lambek_derivable, oracle_derivable
from .parsing import (
    ParseError,
    parse_formula_file,
    parse_lambda,
    parse_lambek,
    parse_mill1,
    parse_sequent,
)
from .prover import (
    BudgetExhausted,
    ProveResult,
    Reading,
    SearchConfig,
    compare,
    derivable,
    prove,
)
from .semantics import LambdaTerm, extract_term, format_lambda, is_linear, meaning
from .structure import ProofStructure, add_axiom_link, unfold
from .terms import EigenVar, MetaVar, Pos, Var
from .translate import Span, lint_two_occurrence, span_at, translate_lambek
from .unify import EMPTY, Substitution, unify

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "BudgetExhausted",
    "ContractionGraph",
    "ContractionStep",
    "EMPTY",
    "EigenVar",
    "Exists",
    "Forall",
    "Formula",
    "LAtom",
    "LambdaTerm",
    "LambekFormula",
    "Lexicon",
    "Lolli",
    "MetaVar",
    "OracleBudget",
    "Over",
    "ParseError",
    "Pos",
    "Prod",
    "ProofStructure",
    "ProveResult",
    "Reading",
    "SearchConfig",
    "Sequent",
    "Span",
    "Substitution",
    "Tensor",
    "Under",
    "Var",
    "abstract",
    "add_axiom_link",
    "alpha_equal",
    "compare",
    "contract_fully",
    "derivable",
    "doomed",
    "extract_term",
    "format_lambda",
    "format_lambek",
    "format_mill1",
    "format_sequent",
    "graph_signature",
    "is_linear",
    "is_proof_net",
    "lambek_derivable",
    "lint_two_occurrence",
    "load_lexicon",
    "make_sequent",
    "meaning",
    "oracle_derivable",
    "parse_formula_file",
    "parse_lambda",
    "parse_lambek",
    "parse_mill1",
    "parse_sequent",
    "parse_lexicon",
    "prove",
    "sentence_sequents",
    "span_at",
    "translate_lambek",
    "unfold",
    "unify",
]
