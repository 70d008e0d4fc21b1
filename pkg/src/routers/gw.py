from fastapi import APIRouter

from .. import schemas
from ..dependencies import EvaluatorDependency
from ..kontsevich.gw import GWKey, gw_invariant, nd

router = APIRouter(
    prefix="/gw",
    tags=["gromov-witten"],
    responses={422: {"description": "Not computable"}},
)


@router.get("/nd/{d}", response_model=schemas.RationalValue)
def plane_curve_count(d: int):
    """Rational plane curves of degree d through 3d - 1 general points."""
    return schemas.RationalValue.of(nd(d))


@router.post("/invariant", response_model=schemas.GWResponse)
def invariant(request: schemas.GWRequest, evaluator: EvaluatorDependency):
    key = GWKey.of(request.r, request.d, request.insertions)
    value = gw_invariant(key, evaluator.solver)
    return schemas.GWResponse(
        r=key.r, d=key.d, insertions=list(key.insertions), **schemas.RationalValue.of(value).model_dump()
    )
