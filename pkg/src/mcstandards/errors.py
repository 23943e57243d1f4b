"""Exception hierarchy shared by every mcstandards module."""


class McsError(Exception):
    """Base class for all library errors."""


class ParseError(McsError):
    """Malformed expression, problem file or graph file.

    ``position`` is a 0-based character offset into ``source`` when known;
    ``line``/``path`` are filled in by the file readers.
    """

    def __init__(self, message, position=None, source=None, line=None, path=None):
        self.message = message
        self.position = position
        self.source = source
        self.line = line
        self.path = path
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.path is not None:
            where.append(str(self.path))
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.position is not None:
            where.append(f"offset {self.position}")
        prefix = ":".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message

    def located(self, line=None, path=None, shift=0):
        """Return a copy with file location attached and the offset shifted."""
        pos = None if self.position is None else self.position + shift
        return ParseError(self.message, pos, self.source,
                          line if line is not None else self.line,
                          path if path is not None else self.path)


class EvaluationError(McsError):
    pass


class MissingVariableError(EvaluationError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"no value supplied for variable {name!r}")


class DivisionByZeroError(EvaluationError):
    def __init__(self, expr_text=""):
        super().__init__(f"division by zero in {expr_text}" if expr_text else "division by zero")


class ProblemError(McsError):
    """Structurally invalid problem, domain or standards."""


class InfeasibleError(McsError):
    """The enumerated feasible set is empty."""


class GridCapError(McsError):
    def __init__(self, required, allowed):
        self.required = required
        self.allowed = allowed
        super().__init__(f"grid requires {required} points, cap is {allowed}")


class ConstantCriterionError(ProblemError):
    def __init__(self, index, name, value):
        self.index = index
        self.name = name
        self.value = value
        super().__init__(f"criterion {name!r} is constant ({value!r}) on the feasible set")


class StandardsError(ProblemError):
    """Ideal/anti-ideal vectors violate the direction invariant."""


class InfeasibleCandidateError(McsError):
    pass


class CircuitError(McsError):
    pass


class CircuitCapError(CircuitError):
    def __init__(self, allowed):
        self.allowed = allowed
        super().__init__(f"more than {allowed} simple circuits")
