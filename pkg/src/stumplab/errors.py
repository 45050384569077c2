"""Error types shared across the engine.

Every error carries a stable ``code`` string so the HTTP layer can map
exceptions to machine-readable validation responses without parsing
messages.
"""

from __future__ import annotations


class StumplabError(Exception):
    """Base class for all engine errors."""

    code = "EngineError"


class MissingColumn(StumplabError):
    code = "MissingColumn"

    def __init__(self, column: str):
        self.column = column
        super().__init__(f"column {column!r} not found in header")


class NonNumericCell(StumplabError):
    code = "NonNumericCell"

    def __init__(self, row: int, col: str):
        self.row = row
        self.col = col
        super().__init__(f"cell at row {row}, column {col!r} is not a finite number")


class MoreThanTwoClasses(StumplabError):
    code = "MoreThanTwoClasses"

    def __init__(self, values):
        self.values = list(values)
        super().__init__(f"label column has {len(self.values)} distinct values: {self.values}")


class EmptyDataset(StumplabError):
    code = "EmptyDataset"

    def __init__(self, msg="no data rows found"):
        super().__init__(msg)


class NonFiniteInput(StumplabError):
    code = "NonFiniteInput"

    def __init__(self, msg="input contains NaN or infinite values"):
        super().__init__(msg)


class ClassTooSmall(StumplabError):
    code = "ClassTooSmall"

    def __init__(self, label: int, size: int):
        self.label = label
        self.size = size
        super().__init__(f"class {label} has only {size} sample(s); need at least 2")


class DegenerateTraining(StumplabError):
    code = "DegenerateTraining"

    def __init__(self, msg="training partition contains a single class"):
        super().__init__(msg)


class DimensionMismatch(StumplabError):
    code = "DimensionMismatch"

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected} feature column(s), got {got}")


class MissingIndex(StumplabError):
    code = "MissingIndex"

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"prediction file has no label for sample index {index}")


class InvalidLabel(StumplabError):
    code = "InvalidLabel"

    def __init__(self, value, expected="0 or 1"):
        self.value = value
        super().__init__(f"label {value!r} is not {expected}")


class RangeTooSmall(StumplabError):
    code = "RangeTooSmall"

    def __init__(self, iterations: int, max_n: int):
        super().__init__(
            f"cannot draw {iterations} distinct complexities from [1, {max_n}]"
        )


class IndexOutOfRange(StumplabError):
    code = "IndexOutOfRange"

    def __init__(self, what: str, index, limit):
        super().__init__(f"{what} {index!r} out of range (limit {limit!r})")


class StumpIndexOutOfRange(StumplabError):
    code = "StumpIndexOutOfRange"

    def __init__(self, index: int, n_stumps: int):
        super().__init__(f"stump index {index} out of range for model with {n_stumps} stumps")


class ThresholdOutOfDomain(StumplabError):
    code = "ThresholdOutOfDomain"

    def __init__(self, value: float):
        super().__init__(f"threshold {value!r} outside [0, 1]")


class NothingToUndo(StumplabError):
    code = "NothingToUndo"

    def __init__(self):
        super().__init__("edit log is empty")
