from fastapi import APIRouter

from .. import schemas
from ..kontsevich.exceptions import ScopeError
from ..kontsevich.moduli import SpaceId, enumerate_boundary, picard_rank
from ..kontsevich.syntax import format_boundary

router = APIRouter(
    prefix="/spaces",
    tags=["spaces"],
    responses={422: {"description": "Invalid space"}},
)


@router.get("/{r}/{d}/{n}", response_model=schemas.SpaceResponse)
def describe_space(r: int, d: int, n: int):
    """
    Dimension, Picard rank and boundary divisors of M̄_{0,n}(r,d).
    The Picard rank is null for degree 0.
    """
    s = SpaceId.of(r, d, n)
    try:
        rank = picard_rank(s)
    except ScopeError:
        rank = None
    return schemas.SpaceResponse(
        space=str(s),
        dimension=s.dimension,
        picard_rank=rank,
        boundary=[
            schemas.BoundaryComponent(symbol=format_boundary(b), markings=list(b.side), degree=b.degree)
            for b in enumerate_boundary(s)
        ],
    )
