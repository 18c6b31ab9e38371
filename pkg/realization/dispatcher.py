"""Builds the map of a catalog entry from its configured recipe."""
from __future__ import annotations

import re
from typing import Callable, Dict, Optional, Tuple, Union

import structlog

from config.loader import reference_tables
from domain.catalog import CatalogEntry, entry_for_figure, lookup
from domain.classification import Classification, PolyhedronClass
from realization import operators
from realization.operators import MIN_POLYGON, FamilyParameterError
from realization.polyhedral_map import PolyhedralMap

logger = structlog.get_logger()

FAMILY_CLASSES = (PolyhedronClass.PRISM_FAMILY, PolyhedronClass.ANTIPRISM_FAMILY)

_RECIPE = re.compile(r"^\s*(?P<op>[a-z_]+)\s*\(\s*(?P<arg>[a-z_ ]+?)\s*\)\s*$")

MAP_OPERATORS: Dict[str, Callable[[PolyhedralMap], PolyhedralMap]] = {
    "dual": operators.dual,
    "ambo": operators.ambo,
    "truncate": operators.truncate,
    "expand": operators.expand,
    "bevel": operators.bevel,
    "snub": operators.snub,
}

GENERATORS: Dict[str, Callable[[int], PolyhedralMap]] = {
    "prism": operators.prism,
    "antiprism": operators.antiprism,
}


class RecipeError(ValueError):
    """Raised for a missing or malformed realization recipe."""


def _evaluate_recipe(recipe: str, m: Optional[int]) -> PolyhedralMap:
    match = _RECIPE.match(recipe)
    if match is None:
        raise RecipeError(f"Malformed recipe {recipe!r}")
    op, arg = match.group("op"), match.group("arg")

    if op == "seed":
        return operators.platonic_seed(arg)
    if op in MAP_OPERATORS:
        return MAP_OPERATORS[op](operators.platonic_seed(arg))
    if op in GENERATORS:
        if arg != "m":
            raise RecipeError(f"Generator recipe {recipe!r} must take the family parameter m")
        if m is None:
            raise FamilyParameterError(f"Recipe {recipe!r} needs a family parameter")
        return GENERATORS[op](m)
    raise RecipeError(f"Unknown operator {op!r} in recipe {recipe!r}")


def _family_member(c: Classification, m: Optional[int]) -> Tuple[CatalogEntry, int]:
    family = entry_for_figure(c.figure)
    if family is None or not family.is_family:
        raise FamilyParameterError(f"No family contains {c.figure}")
    member = family.family.member_parameter(c.figure)
    if m is not None and m != member:
        raise FamilyParameterError(f"{c.name} is member {member} of {family.name}, got m = {m}")
    return family, member


def realize(
    entry: Union[CatalogEntry, Classification, str],
    m: Optional[int] = None,
) -> PolyhedralMap:
    """
    Realizes a named solid, or member m of a family, as a map.

    Family members start at m = 3 (the triangular prism and the
    octahedron as the triangular antiprism). A classification holding a
    single family member, such as the triangular prism, resolves to its
    family with m read off the figure.

    Raises:
        UnknownEntryError: the name is not in the catalog
        FamilyParameterError: a family without m, or m < 3
        RecipeError: no usable recipe is configured
    """
    if isinstance(entry, Classification) and entry.figure is not None and entry.cls in FAMILY_CLASSES:
        entry, m = _family_member(entry, m)

    name = entry if isinstance(entry, str) else entry.name
    resolved = lookup(name)
    if resolved.is_family:
        if m is None or m < MIN_POLYGON:
            raise FamilyParameterError(f"{resolved.name} needs a parameter m >= {MIN_POLYGON}, got {m}")
    elif m is not None:
        raise FamilyParameterError(f"{resolved.name} takes no family parameter")

    recipe = reference_tables.realization_recipes.get(resolved.name)
    if recipe is None:
        raise RecipeError(f"No realization recipe for {resolved.name!r}")

    result = _evaluate_recipe(recipe, m)
    label = resolved.name if m is None else f"{resolved.name}({m})"
    logger.debug("Entry realized", entry=resolved.name, recipe=recipe, m=m, V=result.V)
    return result.renamed(label)
