"""
Error types shared by the library, the CLI and the HTTP API
"""


class CaError(ValueError):
    """Base class for every rejected input or violated bound"""


class RuleRangeError(CaError):
    """A rule code outside 0..255"""


class RuleVectorFormatError(CaError):
    """Rule vector text that does not parse"""


class StateFormatError(CaError):
    """State text that is not a binary string"""


class LengthMismatchError(CaError):
    """Rule vector and state disagree on the cell count"""


class CellCountError(CaError):
    """Cell count outside the bounds of an operation"""


class OddMaskError(CaError):
    """Balance was requested over an odd number of RMTs"""


class ClassMembershipError(CaError):
    """A rule was applied to a class it does not belong to"""


class OracleLimitError(CaError):
    """The state transition graph would not fit the configured limits"""


class NodeBoundError(RuntimeError):
    """A compressed tree level grew past the unique node bound"""


class TableMismatchError(CaError):
    """Derived tables differ from the published ones; carries every differing row"""

    def __init__(self, mismatches):
        self.mismatches = list(mismatches)
        lines = [f"{m.table} row {m.row}: derived {m.derived} != published {m.published}"
                 for m in self.mismatches]
        super().__init__("Table mismatch:\n" + "\n".join(lines))
