"""Exception types, tagged with the module they originate from.

The CLI turns these into machine-readable error JSON; library users can
catch ``DomainError`` to handle any invalid-input or unsatisfiable-request
condition.
"""


class DomainError(Exception):
    """Invalid domain input or an unsatisfiable request."""

    module = "plueckerdec"


class FieldError(DomainError):
    module = "gf"


class MatrixError(DomainError):
    module = "matgf"


class CodeError(DomainError):
    module = "gabidulin"


class GrassmannError(DomainError):
    module = "pluecker"


class DecodeError(DomainError):
    module = "listdec"


class ChannelError(DomainError):
    module = "channel"
