"""Named Seifert pieces and manifolds used by the test battery and scripts."""

from __future__ import annotations

from .manifold import HyperbolicPiece, Irreducible, ManifoldDescriptor, S2xS1, SeifertPiece, SolidTorus, Spherical
from .seifert import Status
from .sfs import SeifertData

TREFOIL = SeifertData(0, True, 1, ((2, 1), (3, 1)))
TWISTED_I_BUNDLE_DISK = SeifertData(0, True, 1, ((2, 1), (2, 1)))  # Klein-bottle twisted I-bundle over the disk
TWISTED_I_BUNDLE_MOBIUS = SeifertData(1, False, 1, ())  # same manifold, fibred over the Mobius band
T2_X_I = SeifertData(0, True, 2, ())
PANTS_X_S1 = SeifertData(0, True, 3, ())
GENUS2_ONE_BOUNDARY = SeifertData(2, True, 1, ())
GENUS2_CLOSED = SeifertData(2, True, 0, ())

# (name, data, expected status) for pieces with boundary; every one has an exact backend
BOUNDARY_FIXTURES = [
    ("trefoil exterior", TREFOIL, Status.YES),
    ("twisted I-bundle over disk", TWISTED_I_BUNDLE_DISK, Status.YES),
    ("twisted I-bundle over Mobius band", TWISTED_I_BUNDLE_MOBIUS, Status.YES),
    ("disk (4,1)(3,1)", SeifertData(0, True, 1, ((4, 1), (3, 1))), Status.YES),
    ("Mobius band (3,1)", SeifertData(1, False, 1, ((3, 1),)), Status.YES),
    ("annulus (2,1)", SeifertData(0, True, 2, ((2, 1),)), Status.YES),
    ("T2 x I", T2_X_I, Status.NO),
    ("pants x S1", PANTS_X_S1, Status.NO),
    ("annulus (3,1)", SeifertData(0, True, 2, ((3, 1),)), Status.NO),
    ("disk (3,1)(3,1)(3,2)", SeifertData(0, True, 1, ((3, 1), (3, 1), (3, 2))), Status.NO),
    ("genus-2 one boundary", GENUS2_ONE_BOUNDARY, Status.NO),
]

CLOSED_FIXTURES = [
    ("genus-2 circle bundle", GENUS2_CLOSED, Status.NO),
    ("Klein-bottle base circle bundle", SeifertData(2, False, 0, ()), Status.YES),
    ("RP2 (2,1)(2,1)", SeifertData(1, False, 0, ((2, 1), (2, 1))), Status.YES),
    ("sphere (3,1)(3,1)(5,2)", SeifertData(0, True, 0, ((3, 1), (3, 1), (5, 2))), Status.NO),
    # even fiber, but no construction verifies without a solved word problem
    ("sphere (2,1)(3,1)(7,1)", SeifertData(0, True, 0, ((2, 1), (3, 1), (7, 1))), Status.UNKNOWN),
]


def _irr(*pieces) -> Irreducible:
    return Irreducible(tuple(SeifertPiece(p) if isinstance(p, SeifertData) else p for p in pieces))


def prime_fixtures() -> list[tuple[str, object]]:
    """Prime pieces, one manifold factor each."""
    out = [(name, _irr(d)) for name, d, _ in BOUNDARY_FIXTURES + CLOSED_FIXTURES]
    out += [
        ("figure-eight exterior", _irr(HyperbolicPiece(1))),
        ("graph manifold, trefoil + hyperbolic", _irr(TREFOIL, HyperbolicPiece(2))),
        ("graph manifold, two boundary-No pieces", _irr(T2_X_I, PANTS_X_S1)),
        ("S2xS1", S2xS1()),
        ("solid torus", SolidTorus()),
        ("S3", Spherical(1, True)),
        ("L(5,1)", Spherical(5, True)),
        ("L(8,3)", Spherical(8, True)),
        ("quaternionic space", Spherical(8, False)),
        ("Poincare sphere", Spherical(120, False)),
    ]
    return out


def manifold_fixtures() -> list[tuple[str, ManifoldDescriptor]]:
    out = [(name, ManifoldDescriptor((p,))) for name, p in prime_fixtures()]
    out.append(("L(5,1) # genus-2 circle bundle",
                ManifoldDescriptor((Spherical(5, True), _irr(GENUS2_CLOSED)))))
    return out
