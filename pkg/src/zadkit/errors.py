class ZadkitError(Exception):
    """Base class for all errors raised by zadkit."""


class InvalidAlgebra(ZadkitError):
    pass


class InvalidModule(ZadkitError):
    pass


class NotAnIdeal(ZadkitError):
    pass


class UnsupportedRadicalRegime(ZadkitError):
    """Small characteristic, no supplied radical, and too many elements to enumerate."""


class OverBudget(ZadkitError):
    """An exhaustive enumeration would exceed the configured vector budget."""


class NotIdempotent(ZadkitError):
    pass


class NotIrreducible(ZadkitError):
    pass


class InvalidCharacter(ZadkitError):
    pass


DEFAULT_BUDGET = 2 ** 16


def check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise OverBudget(f"{what}: {count} vectors exceed the budget of {budget}")


def check_enumerable(F, dim: int, budget: int, what: str) -> None:
    """Raise OverBudget unless all of ``F^dim`` can be visited within ``budget``."""
    if not F.is_finite:
        raise OverBudget(f"{what}: the rational field cannot be enumerated")
    check_budget(F.count_vectors(dim), budget, what)
