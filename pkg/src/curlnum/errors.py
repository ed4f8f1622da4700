"""Typed errors shared across the package.

Every failure mode a caller is expected to branch on gets its own class so
tests and the CLI can catch precisely.  All inherit from CurlError.
"""


class CurlError(Exception):
    """Base class for all package errors."""


class EmptyInput(CurlError):
    """The operation needs a nonempty sequence."""


class LengthOne(CurlError):
    """The operation needs a sequence of length at least two."""


class ContainsOne(CurlError):
    """Merge analysis only applies to sequences without the symbol 1."""


class CapExceeded(CurlError):
    """Requested size is above the hard cap wired into the operation."""


class StepLimitExceeded(CurlError):
    """Tail extension ran past its step limit.

    Carries the sequence reached so far so the caller can inspect or resume.
    """

    def __init__(self, sequence, steps):
        self.sequence = tuple(sequence)
        self.steps = steps
        super().__init__(
            "no curl 1 reached after %d steps; sequence so far: %s"
            % (steps, ",".join(str(x) for x in self.sequence))
        )


class FormulaOutOfRange(CurlError):
    """Closed-form shortcut asked for arguments outside its proven range."""


class MissingDependency(CurlError):
    """A derived count needs a table cell that is not available.

    Carries (kind, n, i, j) of the exact missing cell.
    """

    def __init__(self, kind, n, i, j=None):
        self.kind = kind
        self.n = n
        self.i = i
        self.j = j
        where = "(%s, n=%d, i=%d%s)" % (kind, n, i, "" if j is None else ", j=%d" % j)
        super().__init__("missing table cell %s" % where)


class FormatError(CurlError):
    """A text payload (b-file, fixture CSV) violates its format contract."""


class NotAPeriod(CurlError):
    """A claimed period does not actually hold for the sequence."""


class NotPrimitive(CurlError):
    """The operation is only defined for primitive sequences."""


class CurlMismatch(CurlError):
    """The sequence's curling number does not match the stated one."""


class RobustnessUndefined(CurlError):
    """Robustness is not defined for this input (imprimitive sequence)."""


class IndexOutOfRange(CurlError):
    """A suffix index or table coordinate is outside its valid domain."""
