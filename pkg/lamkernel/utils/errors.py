from typing import Iterable, List, Optional


class KernelError(Exception):
    """Base class for every domain error raised by lamkernel."""
    pass


class ConfigError(KernelError):
    """Raised when a corpus configuration fails validation"""

    def __init__(self, messages):
        self.messages = messages
        super().__init__(f"Invalid configuration: {messages}")


class ParseError(KernelError):
    """Raised when concrete syntax cannot be parsed"""

    def __init__(self, message: str, line: int = 0, column: int = 0,
                 expected: Optional[Iterable[str]] = None):
        self.line = line
        self.column = column
        self.expected: List[str] = sorted(set(expected or []))
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f"; expected one of: {', '.join(self.expected)}"
        super().__init__(detail)


class TypingError(KernelError):
    pass


class UnboundVariable(TypingError):
    def __init__(self, var):
        self.var = var
        super().__init__(f"Unbound variable {var}")


class UnificationClash(TypingError):
    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__(f"Cannot unify {expected} with {found}")


class OccursCheck(TypingError):
    def __init__(self, meta, type_):
        self.meta = meta
        self.type = type_
        super().__init__(f"Occurs check: {meta} occurs in {type_}")


class FuelExhausted(KernelError):
    """Raised when normalization runs out of fuel before reaching a normal form"""

    def __init__(self, steps):
        self.steps = steps
        super().__init__(f"No normal form reached within {len(steps)} steps")


class NodeAbsent(KernelError):
    def __init__(self, term):
        self.term = term
        super().__init__(f"Term is not a node of the reduction graph: {term}")


class GraphNotFinite(KernelError):
    def __init__(self, status):
        self.status = status
        super().__init__(f"Reduction graph is not finite (status: {status})")
