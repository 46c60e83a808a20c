"""Digit-string arithmetic in rings with a hold table."""

from ._core import (
    Binding,
    DigitString,
    Error,
    InvalidSystem,
    IoError,
    NoResidueDigit,
    NonTerminating,
    NotDivisible,
    ParseError,
    System,
    TooLarge,
    add,
    add_mod,
    attractor_test,
    binding,
    catalog,
    check_bounds,
    degree_table,
    figure_presets,
    mul,
    mul_mod,
    negabinary_bound,
    plus_one_growth,
    render_ppm,
    search_quadratic,
    structure_probe,
    system,
    systems,
    tile_points,
)


def encode(name, z, cap=None):
    """Digit string of ``z`` in the named realized system, as text."""
    b = binding(name)
    return b.system.format(b.encode(z, cap))


def decode(name, digits):
    """Value of a digit string given as text, formatted in the ring."""
    b = binding(name)
    return b.format_element(b.eval(b.system.parse(digits)))


__all__ = [n for n in dir() if not n.startswith("_")]
