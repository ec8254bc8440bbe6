"""Fire-risk raster analytics: NDWI/NDVI indices, per-AOI time series,
threshold classification and validation against ground truth."""

from ._firerisk import *  # noqa: F401,F403
from ._firerisk import __version__  # noqa: F401
