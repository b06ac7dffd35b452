"""
Formatters for output documents - label mapping, rounding, turn strings, JSON persistence
"""
import json
import os
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from models.circle import CirclePointSet, DegeneracyClass, NumericMode, key_length
from models.triangulation import DualPath, Triangulation, dual_path, ears_of, length_keys


def round_sensibly(value: Optional[float], decimal_places: int = 12) -> Optional[float]:
    """Round lengths so float noise does not leak into golden files"""
    if value is None:
        return None
    return round(value, decimal_places)


def label_pairs(pairs: Sequence[Sequence[int]], P: CirclePointSet) -> List[List[int]]:
    """Index pairs as sorted label pairs, list sorted"""
    return sorted(sorted([P.labels[a], P.labels[b]]) for a, b in pairs)


def label_quadruples(quadruples: Sequence[Sequence[int]], P: CirclePointSet) -> List[List[int]]:
    return sorted(sorted(P.labels[v] for v in q) for q in quadruples)


def format_turn(value: Fraction) -> str:
    """Exact turn as "num/den" (denominator kept even when it is 1)"""
    return f"{value.numerator}/{value.denominator}"


def sorted_diagonal_lengths(T: Triangulation, P: CirclePointSet) -> List[float]:
    """Euclidean diagonal lengths in input units, ascending"""
    return [round_sensibly(key_length(k, P.radius)) for k in length_keys(T.diagonals, P)]


def triangulation_fields(T: Triangulation, P: CirclePointSet) -> Dict[str, Any]:
    """
    Output fields describing one triangulation

    Args:
        T: triangulation over point indices of P
        P: the point set, whose labels are used in the output

    Returns:
        diagonals, ears, dual_path and sorted_diagonal_lengths, all in labels
    """
    fields: Dict[str, Any] = {
        "diagonals": label_pairs(T.diagonals, P),
        "ears": label_pairs(ears_of(T), P),
        "sorted_diagonal_lengths": sorted_diagonal_lengths(T, P),
    }
    path = dual_path(T)
    if isinstance(path, DualPath):
        fields["dual_path"] = [[P.labels[v] for v in triangle] for triangle in path.triangles]
    return fields


def degeneracy_fields(found: DegeneracyClass, P: CirclePointSet) -> Dict[str, Any]:
    fields: Dict[str, Any] = {"degeneracy": found.kind.value}
    if found.witnesses:
        fields["witnesses"] = label_quadruples(found.witnesses, P)
    return fields


def input_document(P: CirclePointSet) -> Dict[str, Any]:
    """Generator output: exact sets as turn strings, float sets as degrees"""
    if P.mode == NumericMode.EXACT:
        return {"angles_turns": [format_turn(t) for t in P.thetas]}
    if P.points is not None:
        return {"points": [list(p) for p in P.points]}
    return {"angles_deg": [t * 360 / P.full for t in P.thetas], "mode": "float"}


def save_json(path: str, data: Dict[str, Any]) -> str:
    """Write a document next to stdout output and return the path"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, default=str)
        f.write("\n")
    return path
