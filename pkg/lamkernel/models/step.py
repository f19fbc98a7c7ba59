from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from lamkernel.models.term import Term


class Move(Enum):
    """One move from a term into an immediate subterm."""
    INTO_BODY = "B"
    INTO_FUN = "L"
    INTO_ARG = "R"


Path = Tuple[Move, ...]


def path_label(path: Path) -> str:
    return "".join(move.value for move in path) or "ε"


class RuleTag(Enum):
    BETA = "Beta"
    REC0 = "Rec0"
    RECS = "RecS"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Step:
    """A single contraction of the redex at ``path`` inside ``source``."""
    source: Term
    target: Term
    tag: RuleTag
    path: Path = ()

    @property
    def label(self) -> str:
        return f"{self.tag}@{path_label(self.path)}"
