"""Argumentation frameworks where every argument is credulously accepted: semantics, analysis, counting, realization."""

from .core import (APXSyntaxError, ArgumentationFramework, FrameworkError, parse_apx, range_of,
                   restriction, to_apx, weak_components)
from .semantics import (ExtensionSet, Semantics, enumerate_extensions, parse_extensions, skeptical,
                        credulous, verify)

__all__ = [
    "APXSyntaxError", "ArgumentationFramework", "ExtensionSet", "FrameworkError", "Semantics",
    "credulous", "enumerate_extensions", "parse_apx", "parse_extensions", "range_of", "restriction",
    "skeptical", "to_apx", "verify", "weak_components",
]
