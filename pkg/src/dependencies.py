# src/dependencies.py

from fastapi import Depends
from typing import Annotated, Optional
from loguru import logger

from src.cli import build_evaluator
from src.kontsevich.config import MbarSettings, mbar_settings
from src.kontsevich.evaluate import IntersectionEvaluator
from src.kontsevich.memo import cache_load

_evaluator: Optional[IntersectionEvaluator] = None


def get_settings() -> MbarSettings:
    """Get the process settings"""
    return mbar_settings


def get_evaluator() -> IntersectionEvaluator:
    """Get the process-wide evaluator, loading MBAR_CACHE on first use"""
    global _evaluator
    if _evaluator is None:
        evaluator = build_evaluator()
        if mbar_settings.MBAR_CACHE:
            cache_load(evaluator.store, mbar_settings.MBAR_CACHE)
        logger.info(f"Evaluator ready with {len(evaluator.store)} cached entries")
        _evaluator = evaluator
    return _evaluator


def reset_evaluator() -> None:
    """Drop the singleton; the next request builds a fresh one"""
    global _evaluator
    _evaluator = None


# Type annotations for common dependencies
SettingsDependency = Annotated[MbarSettings, Depends(get_settings)]
EvaluatorDependency = Annotated[IntersectionEvaluator, Depends(get_evaluator)]
