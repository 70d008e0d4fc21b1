# Import all routers
from .spaces import router as spaces_router
from .evaluate import router as evaluate_router
from .gw import router as gw_router
from .charnum import router as charnum_router
from .tables import router as tables_router

# Export routers
spaces = spaces_router
evaluate = evaluate_router
gw = gw_router
charnum = charnum_router
tables = tables_router
