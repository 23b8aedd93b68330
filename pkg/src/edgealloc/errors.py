"""Exception types shared across the package."""


class AllocationError(ValueError):
    """An allocation violates its box bounds for the given server."""


class InfeasibleScenarioError(ValueError):
    """A scenario cannot be solved (storage budget exceeded)."""


class ScenarioParseError(ValueError):
    """A scenario file is malformed or missing required fields."""


class ScalarOptError(RuntimeError):
    """The bounded scalar minimizer could not complete within its budget."""


class NonFiniteObjectiveError(ScalarOptError):
    """An objective returned a non-finite value at a probed point."""

    def __init__(self, x, value):
        super().__init__(f"objective returned non-finite value {value!r} at x={x!r}")
        self.x = x
        self.value = value


class SolverStepError(RuntimeError):
    """An inner minimization inside an ADMM step failed; names the variable."""
