from ._electsys import (
    BoundExceeded,
    Election,
    ElectionFile,
    Error,
    InvalidInput,
    Unreachable,
    approval_scores,
    bribe,
    check_equivalence,
    classify_bribery,
    classify_control,
    classify_manipulation,
    condorcet_winner,
    control,
    dodgson_score,
    dodgson_winners,
    equivalence_families,
    kemeny_winners,
    manipulate,
    parse_election,
    run_cli,
    scores,
    serialize_election,
    young_score,
)

__all__ = [
    "BoundExceeded",
    "Election",
    "ElectionFile",
    "Error",
    "InvalidInput",
    "Unreachable",
    "approval_scores",
    "bribe",
    "check_equivalence",
    "classify_bribery",
    "classify_control",
    "classify_manipulation",
    "condorcet_winner",
    "control",
    "dodgson_score",
    "dodgson_winners",
    "equivalence_families",
    "kemeny_winners",
    "manipulate",
    "parse_election",
    "run_cli",
    "scores",
    "serialize_election",
    "young_score",
]
