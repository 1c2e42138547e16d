"""
Built-in delta-vectors with known roots.

Gorenstein Fano polytopes of dimension 2 and 3 have delta-vectors
(1, b, 1) with b in 1..7 and (1, b, b, 1) with b in 1..35 except 33 and 34.
Their roots have closed forms. Two published degree 8 and 10 vectors whose
roots leave the half strip are also kept here.
"""
import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ssnn_roots.exceptions import UnsupportedDimension
from ssnn_roots.poly_core import DeltaVector, ehrhart_obstructions, validate_delta
from ssnn_roots.roots import quadratic_roots_exact
from ssnn_roots.serializers import CatalogEntrySerializer
from ssnn_roots.utils import plugin_setting, utc_now

LOG = logging.getLogger(__name__)

GORENSTEIN_B_VALUES = {
    2: tuple(range(1, 8)),
    3: tuple(b for b in range(1, 36) if b not in (33, 34)),
}

# Largest |Im| of a non-real SSNN root for d = 2, 3, reached at b = 0.
MAX_IMAGINARY_PART = {
    2: math.sqrt(3) / 2,
    3: math.sqrt(23) / 2,
}


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    delta: DeltaVector
    provenance: str
    closed_form_roots: Optional[tuple] = None
    published_roots: tuple = ()
    notes: tuple = ()
    ehrhart_obstructions: tuple = field(default=())

    @property
    def degree(self):
        return self.delta.degree


def closed_form_roots_dim2(b):
    """
    Roots of (b+2) n^2 + (b+2) n + 2, i.e. -1/2 +- 1/2 sqrt((b-6)/(b+2)).
    """
    b = Fraction(b)
    return quadratic_roots_exact(b + 2, b + 2, 2)


def closed_form_roots_dim3(b):
    """
    -1/2 together with the roots of (b+1) n^2 + (b+1) n + 6.
    """
    b = Fraction(b)
    return (Fraction(-1, 2), quadratic_roots_exact(b + 1, b + 1, 6))


def _entry(label, entries, provenance, closed_form_roots=None, published_roots=(), notes=()):
    delta = validate_delta(entries)
    return CatalogEntry(
        label=label,
        delta=delta,
        provenance=provenance,
        closed_form_roots=closed_form_roots,
        published_roots=published_roots,
        notes=notes,
        ehrhart_obstructions=tuple(ehrhart_obstructions(delta)),
    )


def gorenstein_deltas(d):
    """
    The Gorenstein Fano delta-vectors of dimension d (2 or 3).
    """
    if d == 2:
        return [
            _entry("gorenstein-2-b{}".format(b), (1, b, 1), "dimension 2 classification",
                   closed_form_roots=(closed_form_roots_dim2(b),))
            for b in GORENSTEIN_B_VALUES[2]
        ]
    if d == 3:
        return [
            _entry("gorenstein-3-b{}".format(b), (1, b, b, 1), "dimension 3 classification",
                   closed_form_roots=closed_form_roots_dim3(b))
            for b in GORENSTEIN_B_VALUES[3]
        ]
    raise UnsupportedDimension("no Gorenstein catalog for dimension {}".format(d))


def counterexample_deltas():
    """
    The degree 8 SSNN vector with roots outside -4 <= Re <= 3, and the degree 10
    candidate with a root of real part above 4.
    """
    published_8 = (
        complex(-0.5, 0.44480014), complex(-0.5, -0.44480014),
        complex(-0.5, 1.78738687), complex(-0.5, -1.78738687),
        complex(3.00099518, 5.29723208), complex(3.00099518, -5.29723208),
        complex(-4.00099518, 5.29723208), complex(-4.00099518, -5.29723208),
    )
    return [
        _entry("counterexample-8", (1, 0, 0, 0, 14, 0, 0, 0, 1), "degree 8 SSNN counterexample",
               published_roots=published_8,
               notes=("cannot be the Ehrhart polynomial of a Gorenstein Fano polytope since delta_1 < delta_8",)),
        _entry("candidate-10", (1, 1, 1, 1, 1, 23, 1, 1, 1, 1, 1), "degree 10 half-strip candidate",
               published_roots=(complex(4.02470021, 8.22732653),),
               notes=("only one published root",)),
    ]


def binomial_boundary_entries(d):
    """
    delta_0 = 0 vectors whose roots reach the ends -1 and 0 of the real root set.
    """
    if d == 2:
        return [_entry("boundary-2", (0, 1, 0), "C(n+1,2)",
                       closed_form_roots=(Fraction(-1), Fraction(0)))]
    if d == 3:
        return [_entry("boundary-3", (0, 1, 1, 0), "C(n+2,3)+C(n+1,3)",
                       closed_form_roots=(Fraction(-1), Fraction(-1, 2), Fraction(0)))]
    raise UnsupportedDimension("no boundary entries for dimension {}".format(d))


def ssnn_root_set_contains(d, z, tol=1e-9):
    """
    Whether z lies in the set of all SSNN roots of degree d (2 or 3):
    [-1, 0] together with the segment Re = -1/2, 0 < |Im| <= MAX_IMAGINARY_PART[d].
    """
    if d not in MAX_IMAGINARY_PART:
        raise UnsupportedDimension("no SSNN root set description for dimension {}".format(d))
    z = complex(z)
    if abs(z.imag) <= tol:
        return -1 - tol <= z.real <= tol
    return abs(z.real + 0.5) <= tol and abs(z.imag) <= MAX_IMAGINARY_PART[d] + tol


def all_entries():
    entries = []
    for d in (2, 3):
        entries.extend(gorenstein_deltas(d))
        entries.extend(binomial_boundary_entries(d))
    entries.extend(counterexample_deltas())
    return entries


def export_catalog(path):
    """
    Write every catalog entry to a versioned JSON file.
    """
    entries = all_entries()
    document = {
        'format_version': plugin_setting('CATALOG_FORMAT_VERSION', 1),
        'generated': utc_now().isoformat(),
        'entries': CatalogEntrySerializer(entries, many=True).data,
    }
    with open(path, 'w') as catalog_file:
        json.dump(document, catalog_file, indent=2)
    LOG.info("Exported %s catalog entries to %s", len(entries), path)
    return len(entries)
