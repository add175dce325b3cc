"""Shared exception types."""


class GaltanError(Exception):
    pass


class ValidationError(GaltanError):
    """A structural axiom failed; names the axiom and a witness."""

    def __init__(self, axiom, witness=None):
        self.axiom = axiom
        self.witness = witness
        msg = axiom if witness is None else f"{axiom} at {witness}"
        super().__init__(msg)


class SearchBudgetExceeded(GaltanError):
    """An enumeration would exceed its explicit budget."""

    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(f"search needs {needed} > budget {budget}")


class NonRationalIdempotents(GaltanError):
    """Primitive idempotents live in a proper extension of the base.

    degree is the minimal extension degree over which they all become
    rational; this is a demand for a larger base field, not a failure.
    """

    def __init__(self, degree):
        self.degree = degree
        super().__init__(f"needs base extension of degree {degree}")
