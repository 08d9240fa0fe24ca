"""Exception types shared across the package.

The CLI maps these onto exit codes: parse errors exit 1, verification
failures exit 2, exhausted budgets exit 3.
"""

from __future__ import annotations


class WicketlabError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(WicketlabError, ValueError):
    """Vectors of different dimensions were combined."""


class CapFileError(WicketlabError, ValueError):
    """A cap file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapVerificationError(WicketlabError):
    """A set claimed to be progression-free contains a zero-sum triple."""

    def __init__(self, witness, message: str = "set contains a progression"):
        self.witness = witness
        super().__init__(f"{message}: {witness}")


class HypergraphFileError(WicketlabError, ValueError):
    """A hypergraph file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SetFileError(WicketlabError, ValueError):
    """A set file (integers or lattice pairs) could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonLinearError(WicketlabError, ValueError):
    """An operation that requires a linear hypergraph got a non-linear one."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"edges {pair[0]} and {pair[1]} share two or more vertices")


class DomainTooLargeError(WicketlabError, ValueError):
    """Exhaustive search was asked for on a domain beyond its size guard."""


class ColoringBudgetError(WicketlabError):
    """Resampling did not reach a wicket-free coloring within its budget."""

    def __init__(self, diagnostics: dict):
        self.diagnostics = diagnostics
        super().__init__(
            "resample budget exhausted "
            f"(attempts={diagnostics.get('attempts')}, "
            f"resamples={diagnostics.get('resamples')}, "
            f"violated={diagnostics.get('violated')}); retry with a new seed"
        )


class WicketDecodeError(WicketlabError):
    """A wicket witness could not be matched to the build's labeling."""
