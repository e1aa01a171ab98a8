# services/errors.py
# One hierarchy for every failure the library can raise.
# The CLI maps all of these to exit code 2; mathematical falsity is never an exception.


class PropConnError(Exception):
    """Base class for all library errors"""


class GraphParseError(PropConnError):
    def __init__(self, message: str, offset: int = None, line: int = None):
        self.offset = offset
        self.line   = line
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif offset is not None:
            where = f"byte {offset}: "
        super().__init__(f"{where}{message}")


class UnsupportedSizeError(PropConnError):
    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap  = cap
        super().__init__(f"{what}: size {size} exceeds supported maximum {cap}")


class ConnectivityError(PropConnError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a connected graph")


class ContractError(PropConnError):
    pass


class ConstructionError(PropConnError):
    pass


class InfeasibleBoundError(PropConnError):
    def __init__(self, constraint: str):
        self.constraint = constraint
        super().__init__(f"infeasible parameters: {constraint}")


class SourceError(PropConnError):
    pass
