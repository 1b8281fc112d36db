"""Python bindings for the amcm content machine."""

from ._core import (
    BindError,
    ParseError,
    StrictModeError,
    check_slots,
    check_type,
    parse,
    render,
    run,
    trace,
)

__all__ = [
    "BindError",
    "ParseError",
    "StrictModeError",
    "check_slots",
    "check_type",
    "parse",
    "render",
    "run",
    "trace",
]
