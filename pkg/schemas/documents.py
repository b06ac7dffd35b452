"""
Pydantic schemas for the JSON boundary of the command-line tool
"""
import logging
import re
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from models.circle import (
    TAU,
    CirclePointSet,
    NumericMode,
    fit_circle,
    from_degrees,
    from_radians,
    from_turns,
    parse_turn,
)
from utils.settings import get_settings

logger = logging.getLogger(__name__)

TURN_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


class InputDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    points: Optional[List[Tuple[float, float]]] = None
    angles_deg: Optional[List[float]] = None
    angles_turns: Optional[List[str]] = None   # "num/den"
    mode: Optional[Literal["exact", "float"]] = None
    labels: Optional[List[int]] = None

    @field_validator("angles_turns")
    @classmethod
    def validate_turns(cls, v):
        if v is None:
            return v
        for t in v:
            if not TURN_PATTERN.match(t.strip()):
                raise ValueError(f"Turn fraction {t!r} must look like 'num/den'")
            if "/" in t and int(t.split("/", 1)[1]) <= 0:
                raise ValueError(f"Turn fraction {t!r} needs a positive denominator")
        return [t.strip() for t in v]

    @model_validator(mode="after")
    def exactly_one_source(self) -> "InputDocument":
        sources = [s for s in (self.points, self.angles_deg, self.angles_turns) if s is not None]
        if len(sources) != 1:
            raise ValueError("Exactly one of points, angles_deg, angles_turns is required")
        n = len(sources[0])
        if n < 4:
            raise ValueError(f"At least 4 points are required, got {n}")
        if self.labels is not None:
            if len(self.labels) != n:
                raise ValueError(f"Expected {n} labels, got {len(self.labels)}")
            if len(set(self.labels)) != n:
                raise ValueError("Labels must be distinct")
        return self

    @property
    def n(self) -> int:
        for source in (self.points, self.angles_deg, self.angles_turns):
            if source is not None:
                return len(source)
        return 0


class ErrorDocument(BaseModel):
    error: str
    message: str


class OutputDocument(BaseModel):
    command: str
    n: int
    mode: NumericMode
    degeneracy: Optional[str] = None
    witnesses: Optional[List[List[int]]] = None
    solver: Optional[str] = None
    diagonals: Optional[List[List[int]]] = None
    ears: Optional[List[List[int]]] = None
    dual_path: Optional[List[List[int]]] = None
    sorted_diagonal_lengths: Optional[List[float]] = None
    count: Optional[int] = Field(None, ge=0)
    truncated: Optional[bool] = None
    winners: Optional[List[List[List[int]]]] = None
    svg: Optional[str] = None   # path of the written drawing

    def dump(self) -> dict:
        return self.model_dump(mode="json", exclude_none=True)


def parse_document(text: Union[str, bytes]) -> InputDocument:
    """Raises pydantic.ValidationError for malformed JSON as well as schema violations."""
    return InputDocument.model_validate_json(text)


def load_point_set(doc: InputDocument, exact: Optional[bool] = None) -> CirclePointSet:
    """Build the point set of a document; `exact=True` forces Exact mode where possible."""
    settings = get_settings()
    mode = "exact" if exact else doc.mode

    if doc.points is not None:
        if mode == "exact":
            logger.warning("Cartesian input has irrational angles; using float mode")
        P = fit_circle(doc.points, settings.concyclic_rel_tol)
        update = {"rel_tol": settings.float_rel_tol}
        if doc.labels is not None:
            update["labels"] = tuple(doc.labels[i] for i in P.labels)
        return P.model_copy(update=update)

    if doc.angles_deg is not None:
        numeric = NumericMode.FLOAT if mode == "float" else NumericMode.EXACT
        return from_degrees(doc.angles_deg, numeric, doc.labels, rel_tol=settings.float_rel_tol)

    if mode == "float":
        radians = [float(parse_turn(t)) * TAU for t in doc.angles_turns]
        return from_radians(radians, doc.labels, rel_tol=settings.float_rel_tol)
    return from_turns(doc.angles_turns, doc.labels)
