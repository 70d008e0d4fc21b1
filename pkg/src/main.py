# src/main.py
from fastapi import FastAPI, Request, status
from fastapi.middleware.cors import CORSMiddleware
from starlette.responses import JSONResponse
from loguru import logger

from src import schemas
from src.dependencies import EvaluatorDependency
from src.kontsevich.config import mbar_settings
from src.kontsevich.exceptions import MbarBaseException, MbarCacheError, MbarDomainError, MbarUsageError
from src.kontsevich.logging_setup import configure_logging
from src.routers import charnum_router, evaluate_router, gw_router, spaces_router, tables_router

API_VERSION = "1.0.0"

configure_logging(mbar_settings.MBAR_LOG_LEVEL, mbar_settings.MBAR_LOG_FILE)

app = FastAPI(
    title=mbar_settings.MBAR_API_TITLE,
    description="Exact intersection numbers on moduli spaces of stable maps to P^r",
    version=API_VERSION,
    docs_url="/api/v1/docs",
    redoc_url="/api/v1/redoc",
    openapi_url="/api/v1/openapi.json"
)

# Configure CORS
origins = [
    "http://localhost",
    "http://localhost:3000",
    "http://localhost:8000",
]

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Engine errors keep their code; the status follows the error family
STATUS_BY_FAMILY = (
    (MbarUsageError, status.HTTP_400_BAD_REQUEST),
    (MbarDomainError, status.HTTP_422_UNPROCESSABLE_ENTITY),
    (MbarCacheError, status.HTTP_500_INTERNAL_SERVER_ERROR),
)


@app.exception_handler(MbarBaseException)
async def engine_exception_handler(request: Request, exc: MbarBaseException):
    status_code = status.HTTP_500_INTERNAL_SERVER_ERROR
    for family, family_status in STATUS_BY_FAMILY:
        if isinstance(exc, family):
            status_code = family_status
            break
    logger.warning(f"{request.method} {request.url.path} failed: {exc.message}")
    return JSONResponse(status_code=status_code, content={"detail": exc.message, "code": exc.code})


@app.get("/", response_model=schemas.HealthResponse, tags=["health"])
def health(evaluator: EvaluatorDependency):
    """Service health and the size of the shared memo store."""
    return schemas.HealthResponse(
        service=mbar_settings.MBAR_API_TITLE,
        version=API_VERSION,
        cached_entries=len(evaluator.store),
    )


# Include routers
app.include_router(spaces_router)
app.include_router(evaluate_router)
app.include_router(gw_router)
app.include_router(charnum_router)
app.include_router(tables_router)


if __name__ == "__main__":
    import uvicorn
    uvicorn.run("src.main:app", host="0.0.0.0", port=8000, reload=False)
