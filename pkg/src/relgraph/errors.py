"""Exception types shared across the package."""


class RelgraphError(ValueError):
    """Invalid input or violated precondition."""


class BudgetExceeded(RelgraphError):
    """An exhaustive computation would exceed its enumeration budget."""


class MalformedGraphFile(RelgraphError):
    pass
