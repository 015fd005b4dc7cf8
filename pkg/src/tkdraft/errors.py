"""Exception types shared across the design engine."""

from __future__ import annotations


class DesignError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(DesignError):
    """A document (or a mutation of one) breaks a document invariant."""


class OverlapError(ValidationError):
    """Two widget rects intersect with positive area."""

    def __init__(self, first: str, second: str) -> None:
        super().__init__(f"widgets {first!r} and {second!r} overlap")
        self.first = first
        self.second = second


class DuplicateNameError(ValidationError):
    def __init__(self, name: str, reason: str = "already in use") -> None:
        super().__init__(f"widget name {name!r} {reason}")
        self.name = name


class OutOfBoundsError(ValidationError):
    def __init__(self, message: str) -> None:
        super().__init__(message)


class UnknownNameError(DesignError):
    def __init__(self, name: str) -> None:
        super().__init__(f"no widget named {name!r}")
        self.name = name


class PointOutsideCanvas(DesignError):
    def __init__(self, x: int, y: int) -> None:
        super().__init__(f"point ({x}, {y}) lies outside the canvas")
        self.x = x
        self.y = y


class EmptySelection(DesignError):
    """A selection box contained no widgets; the UI may skip the function menu."""


class MoveCollisionError(DesignError):
    def __init__(self, moved: str, obstacle: str) -> None:
        super().__init__(f"moving {moved!r} would overlap {obstacle!r}")
        self.moved = moved
        self.obstacle = obstacle


class MoveOutOfBoundsError(DesignError):
    def __init__(self, moved: str) -> None:
        super().__init__(f"moving {moved!r} would leave the canvas")
        self.moved = moved


class InteractionStateError(DesignError):
    """A gesture command arrived in a state that cannot accept it."""


# --- menu model ---

class InvalidWidth(DesignError):
    def __init__(self, width: int) -> None:
        super().__init__(f"submenu width must be >= 1, got {width}")


class UnknownSerial(DesignError):
    def __init__(self, serial: int) -> None:
        super().__init__(f"no submenu with serial {serial}")
        self.serial = serial


class AlreadyDeleted(DesignError):
    def __init__(self, serial: int) -> None:
        super().__init__(f"submenu {serial} was already deleted")
        self.serial = serial


class DeletedSubmenu(DesignError):
    def __init__(self, serial: int) -> None:
        super().__init__(f"submenu {serial} has been deleted")
        self.serial = serial


class IndexOutOfRange(DesignError):
    def __init__(self, serial: int, index: int, length: int) -> None:
        super().__init__(
            f"item index {index} out of range for submenu {serial} (length {length})"
        )


# --- property registry ---

class UnknownProperty(DesignError):
    def __init__(self, prop: str) -> None:
        super().__init__(f"property {prop!r} is not in the registry")
        self.prop = prop


class UnsupportedProperty(DesignError):
    def __init__(self, kind: str, prop: str) -> None:
        super().__init__(f"{kind} does not support property {prop!r}")
        self.kind = kind
        self.prop = prop


class TypeMismatch(DesignError):
    def __init__(self, prop: str, message: str) -> None:
        super().__init__(f"bad value for {prop!r}: {message}")
        self.prop = prop


class CommandUnsupported(DesignError):
    def __init__(self, kind: str) -> None:
        super().__init__(f"{kind} does not support the command trigger")
        self.kind = kind


class BadHandlerName(DesignError):
    def __init__(self, handler: str) -> None:
        super().__init__(f"handler {handler!r} is not a valid identifier")
        self.handler = handler


# --- traces ---

class TraceParseError(DesignError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"trace line {line_no}: {message}")
        self.line_no = line_no


class TraceReplayError(DesignError):
    """An engine error raised while replaying, tagged with the command index."""

    def __init__(self, index: int, line_no: int, command: object, cause: DesignError) -> None:
        super().__init__(f"command {index} (line {line_no}): {cause}")
        self.index = index
        self.line_no = line_no
        self.command = command
        self.cause = cause


# --- generated-source parsing ---

class ParseError(DesignError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# --- persistence ---

class FormatError(DesignError):
    """A document file is not syntactically a document."""


class VersionError(DesignError):
    def __init__(self, version: object) -> None:
        super().__init__(f"unsupported document format_version {version!r}")
        self.version = version
