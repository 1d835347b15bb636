# Reexport all handlers

from .check import handle_check
from .compare import handle_compare
from .decode import handle_decode
from .example import handle_example
from .oracle import handle_oracle
from .region import handle_region
from .simulate import handle_simulate
from .validate import handle_validate

__all__ = [
    "handle_check",
    "handle_compare",
    "handle_decode",
    "handle_example",
    "handle_oracle",
    "handle_region",
    "handle_simulate",
    "handle_validate",
]
