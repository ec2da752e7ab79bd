"""Exception hierarchy shared by every module of the package."""


class SkewBraceError(Exception):
    """Base class for all errors raised by this package."""


class BudgetExceeded(SkewBraceError):
    """A backtracking search ran out of its node budget."""

    def __init__(self, operation, budget):
        super().__init__(f"{operation}: node budget {budget} exceeded")
        self.operation = operation
        self.budget = budget


class GroupError(SkewBraceError, ValueError):
    pass


class NotLatinSquare(GroupError):
    def __init__(self, row=None, column=None):
        where = f"row {row}" if row is not None else f"column {column}"
        super().__init__(f"table is not a Latin square ({where} repeats an entry)")
        self.row = row
        self.column = column


class NoIdentity(GroupError):
    def __init__(self):
        super().__init__("table has no two-sided identity")


class NotAssociative(GroupError):
    def __init__(self, a, b, c):
        super().__init__(f"associativity fails at ({a}, {b}, {c})")
        self.witness = (a, b, c)


class NoInverse(GroupError):
    def __init__(self, x):
        super().__init__(f"element {x} has no two-sided inverse")
        self.witness = x


class ActionNotAutomorphism(GroupError):
    def __init__(self, h):
        super().__init__(f"action of {h} is not an automorphism")
        self.witness = h


class ActionNotHomomorphism(GroupError):
    def __init__(self, h1, h2):
        super().__init__(f"action is not a homomorphism at ({h1}, {h2})")
        self.witness = (h1, h2)


class BraceError(SkewBraceError, ValueError):
    pass


class AddNotGroup(BraceError):
    def __init__(self, cause):
        super().__init__(f"additive table is not a group: {cause}")
        self.cause = cause


class CircNotGroup(BraceError):
    def __init__(self, cause):
        super().__init__(f"multiplicative table is not a group: {cause}")
        self.cause = cause


class IdentityMismatch(BraceError):
    def __init__(self, add_identity, circ_identity):
        super().__init__(
            f"identities differ: additive {add_identity}, multiplicative {circ_identity}"
        )
        self.add_identity = add_identity
        self.circ_identity = circ_identity


class CompatibilityFailed(BraceError):
    def __init__(self, a, b, c):
        super().__init__(f"a∘(b+c) = a∘b - a + a∘c fails at ({a}, {b}, {c})")
        self.witness = (a, b, c)


class NotIdeal(BraceError):
    def __init__(self, reason):
        super().__init__(f"not an ideal: {reason}")
        self.reason = reason


class BadParameters(SkewBraceError, ValueError):
    pass


class UnknownName(SkewBraceError, KeyError):
    pass


class NotOneVertex(SkewBraceError, ValueError):
    pass


class NoFamilyMatch(SkewBraceError):
    """No family of the one-vertex classification matches: a counterexample."""


class UnsupportedOrder(SkewBraceError, ValueError):
    pass


class NotGenerating(SkewBraceError, ValueError):
    pass


class NotSubsolution(SkewBraceError, ValueError):
    pass
