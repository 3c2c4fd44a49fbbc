"""Canonical forms for tensor polynomials with abstract indices.

The heavy lifting lives in the compiled ``_tenscanon`` extension; this
package re-exports its surface. The extension is packaged alongside this
module, but a build-tree copy on ``sys.path`` works too (used by the
smoke tests).
"""

try:
    from ._tenscanon import InputError, ResourceCapError, Session
except ImportError:  # build-tree layout: extension next to the package
    from _tenscanon import InputError, ResourceCapError, Session

__all__ = ["Session", "InputError", "ResourceCapError"]
