from fastapi import APIRouter
from loguru import logger

from .. import schemas
from ..dependencies import EvaluatorDependency
from ..kontsevich.syntax import parse_space

router = APIRouter(
    prefix="/eval",
    tags=["evaluate"],
    responses={400: {"description": "Malformed monomial"}, 422: {"description": "Not computable"}},
)


@router.post("", response_model=schemas.EvalResponse)
def evaluate_monomial(request: schemas.EvalRequest, evaluator: EvaluatorDependency):
    """
    Top intersection product of a monomial on a space.
    Named classes (T, Z, C, W, S<i>) and a leading rational coefficient are accepted.
    """
    s = parse_space(request.space)
    logger.info(f"eval {request.monomial!r} on {s}")
    value = evaluator.evaluate_expression(s, request.monomial)
    return schemas.EvalResponse(space=str(s), monomial=request.monomial, **schemas.RationalValue.of(value).model_dump())
