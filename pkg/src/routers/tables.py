from fastapi import APIRouter

from .. import schemas
from ..dependencies import EvaluatorDependency, SettingsDependency
from ..kontsevich.exactnum import format_rational
from ..kontsevich.tables import reproduce_table

router = APIRouter(
    prefix="/tables",
    tags=["tables"],
    responses={404: {"description": "Not found"}},
)


@router.get("/{table_id}", response_model=schemas.TableResponse)
def table(table_id: schemas.TableName, evaluator: EvaluatorDependency, settings: SettingsDependency,
          check_integer: bool = False):
    """
    Every row of a reproducible table, in catalogue order.
    Rows are computed with MBAR_JOBS worker threads.
    """
    rows = reproduce_table(table_id.value, evaluator, jobs=settings.MBAR_JOBS, check_integer=check_integer)
    return schemas.TableResponse(
        table_id=table_id,
        rows=[
            schemas.TableRowResponse(
                section=row.section, space=str(row.space), expression=row.expression,
                value=format_rational(row.value),
            )
            for row in rows
        ],
    )
