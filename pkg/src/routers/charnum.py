from fastapi import APIRouter

from .. import schemas
from ..dependencies import EvaluatorDependency
from ..kontsevich.charnum import (
    CharNumQuery,
    boundary_point_oracle,
    characteristic_number,
    conic_tangency_count,
    cuspidal_count,
)

router = APIRouter(
    prefix="/charnum",
    tags=["characteristic numbers"],
    responses={422: {"description": "Invalid query"}},
)


@router.post("", response_model=schemas.CharNumResponse)
def characteristic(request: schemas.CharNumRequest, evaluator: EvaluatorDependency):
    """
    Degree-d rational curves in P^r meeting alpha[c] general codimension-c
    linear spaces and tangent to beta general hyperplanes.
    """
    query = CharNumQuery.of(request.r, request.d, request.alpha, request.beta)
    value = characteristic_number(query, evaluator, all_markings=request.all_markings,
                                  check_integer=request.check_integer)
    return schemas.CharNumResponse(query=query.describe(), **schemas.RationalValue.of(value).model_dump())


@router.get("/cuspidal/{d}", response_model=schemas.RationalValue)
def cuspidal(d: int, evaluator: EvaluatorDependency, verify: bool = True):
    """One-cusp rational plane curves of degree d through 3d - 2 points."""
    return schemas.RationalValue.of(cuspidal_count(d, evaluator if verify else None))


@router.get("/boundary-point/{d}/{i}", response_model=schemas.RationalValue)
def boundary_point(d: int, i: int):
    return schemas.RationalValue.of(boundary_point_oracle(d, i))


@router.post("/conics", response_model=schemas.RationalValue)
def conics(request: schemas.ConicRequest, evaluator: EvaluatorDependency):
    value = conic_tangency_count(request.points, request.lines, request.conics, evaluator,
                                 check_integer=request.check_integer)
    return schemas.RationalValue.of(value)
