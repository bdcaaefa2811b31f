"""
Error types for the sequentially gCM toolkit
Every library failure derives from SgcmError so the command layer can catch one type
"""
from typing import Any, Dict, Optional


class SgcmError(Exception):
    """Base class for toolkit errors"""


class RingMismatchError(SgcmError):
    """Operands live in different polynomial rings"""


class OrderMismatchError(SgcmError):
    """A basis computed for one monomial order was used with another"""


class PolynomialParseError(SgcmError):
    """Polynomial text could not be parsed"""

    def __init__(self, message: str, column: Optional[int] = None):
        super().__init__(message)
        self.column = column


class ColonByZeroError(SgcmError):
    """Colon or saturation by the zero ideal"""

    def __init__(self) -> None:
        super().__init__("colon by zero ideal")


class NotMonomialError(SgcmError):
    """A monomial-only routine received a non-monomial generator"""


class NotSquarefreeError(SgcmError):
    """Hochster's formula needs squarefree monomial generators"""


class NotHomogeneousError(SgcmError):
    """Graded computations need homogeneous input"""


class ContainmentError(SgcmError):
    """A submodule or chain violates the required containment"""


class DimensionConditionError(SgcmError):
    """Filtration dimensions are not strictly increasing"""


class DecompositionRequiredError(SgcmError):
    """A non-monomial component needs a user supplied primary decomposition"""


class NotSystemOfParametersError(SgcmError):
    """Some quotient by the parameter elements has infinite length"""

    def __init__(self, message: str = "not a system of parameters"):
        super().__init__(message)


class MultiplicityNotStabilizedError(SgcmError):
    """Mixed differences at n0 and n0+1 disagree"""

    def __init__(self, at_base: int, at_next: int):
        super().__init__(
            f"multiplicity not stabilized, increase base point ({at_base} != {at_next})"
        )
        self.at_base = at_base
        self.at_next = at_next


class SearchExhaustedError(SgcmError):
    """The randomized sop search ran out of tries"""

    def __init__(self, message: str, progress: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.progress = progress or {}


class SessionError(SgcmError):
    """Syntax or semantic error in a session file"""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        name: Optional[str] = None,
    ):
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        if name is not None:
            location += f"[{name}] "
        super().__init__(location + message)
        self.line = line
        self.column = column
        self.name = name
