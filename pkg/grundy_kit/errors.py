# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Exception hierarchy shared by every Grundy Kit module.
"""

from typing import Any, Optional


class GrundyKitError(Exception):
    """Base class for all toolkit errors"""


class InvalidInputError(GrundyKitError, ValueError):
    """Bad parameters, malformed text input or impossible topology events"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedColoringError(InvalidInputError):
    """A coloring that cannot even be checked (color < 1, wrong vertex count)"""


class LimitExceededError(GrundyKitError):
    """An exact computation was asked for an instance above its configured size limit"""

    def __init__(self, what: str, limit: int, actual: int):
        self.what = what
        self.limit = limit
        self.actual = actual
        super().__init__(
            f"{what}: size {actual} exceeds the limit of {limit} "
            f"(raise it with --limit at your own cost)"
        )


class NotChordalError(GrundyKitError):
    """Raised by operations that require a chordal graph"""

    def __init__(self, certificate: Any):
        self.certificate = certificate
        super().__init__(f"graph is not chordal: {certificate}")
