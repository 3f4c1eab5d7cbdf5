"""Justification logic workbench: basic models, J⁻ consequence, and JEMs."""
from .axioms import ConstantSpecification, CSKind, is_axiom
from .consequence import countermodel, consistent, entails
from .document import DocumentError, ModelDocument, dump_model, load_document, parse_document
from .errors import PreconditionError, ResourceLimitError, SymbolicError
from .formulaset import ALL, EMPTY, FormulaSet, mp_apply
from .godel import godel_formula, godel_number
from .jem import (
    JEM,
    Holds,
    NotFoundWithinBound,
    RefutedExact,
    believed,
    evidenced,
    known,
    modal_projection,
    proper_closure,
    validate_jem,
)
from .jminus import Derivable, NotFoundAtDepth, derive_jminus, find_countermodel_jminus
from .models import BasicModel, check_closure, eval_formula, eval_term, is_factive, is_injective, satisfies_cs
from .multiworld import MultiJEM, check_fully_explanatory, check_justification_indifference, derive_accessibility, extract_kripke
from .russell import build_russell, theorem3_report
from .syntax import (
    FALSUM,
    And,
    App,
    Atom,
    Const,
    Falsum,
    Formula,
    Implies,
    Just,
    Not,
    Or,
    ParseError,
    Term,
    Var,
    parse_formula,
    parse_term,
    print_formula,
    print_term,
)

__version__ = "0.1.0"
