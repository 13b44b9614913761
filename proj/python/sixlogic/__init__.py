"""Decision procedures, normal forms and proofs for the six-valued logic Six."""

from ._core import (
    AlgebraError,
    BudgetError,
    LanguageError,
    ParseError,
    ProofFormatError,
    audit_identities,
    conjunctive_form,
    dat_check,
    entails,
    equivalent,
    lfi_audit,
    normalize,
    prove,
    run_cli,
    truth_table,
    verify,
)

__all__ = [
    "AlgebraError",
    "BudgetError",
    "LanguageError",
    "ParseError",
    "ProofFormatError",
    "audit_identities",
    "conjunctive_form",
    "dat_check",
    "entails",
    "equivalent",
    "lfi_audit",
    "normalize",
    "prove",
    "run_cli",
    "truth_table",
    "verify",
]
