class OspError(Exception):
    """Base error. `invariant` names the broken rule for CLI messages."""

    invariant = "input"

    def __init__(self, msg, invariant=None):
        super().__init__(msg)
        if invariant:
            self.invariant = invariant


class HookViolation(OspError):
    invariant = "HookPartition: part n+1 must be <= m"


class DominanceViolation(OspError):
    invariant = "WeightCoefficients: dominance condition"


class SignContractViolation(OspError):
    invariant = "HookPartition: sign present iff required"


class InvalidDiagram(OspError):
    invariant = "CupDiagram: well-formed arcs and rays"


class CoreMismatch(OspError):
    invariant = "CircleDiagram: bottom and top core diagrams agree"


class ParseError(OspError):
    invariant = "input syntax"
