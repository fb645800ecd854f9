"""Conjugacy classes of involutions on the closed orientable genus-g surface.

The catalog: the identity; the axis rotations spit(g,r) for 0 <= r <= g/2;
the free rotation rot when g is odd; the reflections refl(g,r) for
0 <= r <= g/2; and the antipodal-type maps anti(g,r) for 0 <= r <= g.
That is 4 + 2g classes in all, of which 2 + ceil(g/2) preserve orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .torus_mcg import InvolutionClassLabel

__all__ = [
    "ClassCount",
    "FixedPointData",
    "InvolutionKind",
    "SurfaceInvolutionClass",
    "classes_for_genus",
    "count_classes",
    "fixed_point_data",
    "induced_torus_action",
    "usable_for_census",
]


class InvolutionKind(Enum):
    ID = "id"
    SPIT = "spit"
    ROT = "rot"
    REFL = "refl"
    ANTI = "anti"


_PRESERVING = (InvolutionKind.ID, InvolutionKind.SPIT, InvolutionKind.ROT)


@dataclass(frozen=True)
class SurfaceInvolutionClass:
    kind: InvolutionKind
    g: int
    r: int = 0

    def __post_init__(self):
        if self.g < 0 or self.r < 0:
            raise ValueError("genus and r must be non-negative")
        k = self.kind
        if k in (InvolutionKind.ID, InvolutionKind.ROT) and self.r != 0:
            raise ValueError(f"{k.value} takes no r parameter")
        if k is InvolutionKind.ROT and self.g % 2 == 0:
            raise ValueError("rot exists only for odd genus")
        if k in (InvolutionKind.SPIT, InvolutionKind.REFL) and self.r > self.g // 2:
            raise ValueError(f"{k.value} needs r <= g/2")
        if k is InvolutionKind.ANTI and self.r > self.g:
            raise ValueError("anti needs r <= g")

    @property
    def orientation_preserving(self) -> bool:
        return self.kind in _PRESERVING

    def __str__(self) -> str:
        if self.kind in (InvolutionKind.ID, InvolutionKind.ROT):
            return self.kind.value
        return f"{self.kind.value}({self.g},{self.r})"


@dataclass(frozen=True)
class FixedPointData:
    """Fixed-point set: isolated points, circles, or the whole surface (id)."""

    isolated_points: int = 0
    circles: int = 0
    entire_surface: bool = False

    @property
    def free(self) -> bool:
        return not (self.isolated_points or self.circles or self.entire_surface)


def classes_for_genus(g: int, selection: str = "all") -> list[SurfaceInvolutionClass]:
    """Complete class list for genus g, optionally filtered by orientation.

    ``selection`` is one of "all", "preserving", "reversing".
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    preserving = [SurfaceInvolutionClass(InvolutionKind.ID, g)]
    preserving += [SurfaceInvolutionClass(InvolutionKind.SPIT, g, r) for r in range(g // 2 + 1)]
    if g % 2 == 1:
        preserving.append(SurfaceInvolutionClass(InvolutionKind.ROT, g))
    reversing = [SurfaceInvolutionClass(InvolutionKind.REFL, g, r) for r in range(g // 2 + 1)]
    reversing += [SurfaceInvolutionClass(InvolutionKind.ANTI, g, r) for r in range(g + 1)]
    if selection == "preserving":
        return preserving
    if selection == "reversing":
        return reversing
    if selection == "all":
        return preserving + reversing
    raise ValueError(f"unknown selection {selection!r}")


class ClassCount(NamedTuple):
    preserving: int
    reversing: int
    total: int


def count_classes(g: int) -> ClassCount:
    """Counts from the explicit list, cross-checked against the closed forms
    2 + ceil(g/2), 2 + g + floor(g/2), and 4 + 2g."""
    p = len(classes_for_genus(g, "preserving"))
    r = len(classes_for_genus(g, "reversing"))
    if p != 2 + (g + 1) // 2 or r != 2 + g + g // 2 or p + r != 4 + 2 * g:
        raise RuntimeError(f"class list and closed-form counts disagree at genus {g}")
    return ClassCount(p, r, p + r)


def fixed_point_data(c: SurfaceInvolutionClass) -> FixedPointData:
    """Fixed-point data per class.

    spit(g,r) is recorded with 4(g-2r) isolated points; at r = g/2 this
    evaluates to zero, which disagrees with the class being retained by
    ``usable_for_census`` - the value is kept behind this single function
    so a correction is one line.
    """
    k = c.kind
    if k is InvolutionKind.ID:
        return FixedPointData(entire_surface=True)
    if k is InvolutionKind.SPIT:
        return FixedPointData(isolated_points=4 * (c.g - 2 * c.r))
    if k is InvolutionKind.ROT:
        return FixedPointData()
    if k is InvolutionKind.REFL:
        return FixedPointData(circles=c.g - 2 * c.r + 1)
    return FixedPointData(circles=c.r)


def induced_torus_action(c: SurfaceInvolutionClass) -> InvolutionClassLabel:
    """Homology action of a genus-1 orientation-reversing class.

    refl(1,0) and anti(1,0) act as diag(1,-1) (ReflType); anti(1,1) acts as
    the swap matrix (AntiType).
    """
    if c.g != 1:
        raise ValueError("induced torus action is defined for genus 1 only")
    if c.orientation_preserving:
        raise ValueError("induced torus action is defined for reversing classes only")
    if c.kind is InvolutionKind.REFL:
        return InvolutionClassLabel.REFL_TYPE
    return InvolutionClassLabel.ANTI_TYPE if c.r == 1 else InvolutionClassLabel.REFL_TYPE


def usable_for_census(c: SurfaceInvolutionClass) -> bool:
    """False exactly for the fixed-point-free classes rot and anti(g,0).

    A surface involution without fixed points cannot arise as the full
    symmetry of a non-product manifold; it may still appear as the
    orientation-preserving factor of one.
    """
    if c.kind is InvolutionKind.ROT:
        return False
    if c.kind is InvolutionKind.ANTI and c.r == 0:
        return False
    return True
