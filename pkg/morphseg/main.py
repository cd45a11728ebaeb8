from fastapi import FastAPI
from morphseg.api.v1.routes import segmentation
from morphseg.api.v1.routes import scoring
from morphseg.api.v1.routes import stats

app = FastAPI(title="morphseg")

app.include_router(segmentation.router, prefix="/api/v1/segmentation", tags=["segmentation"])
app.include_router(scoring.router, prefix="/api/v1/scoring", tags=["scoring"])
app.include_router(stats.router, prefix="/api/v1/stats", tags=["stats"])
