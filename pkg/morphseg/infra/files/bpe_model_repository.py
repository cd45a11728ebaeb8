import logging
from morphseg.domain.bpe.dtos.bpe_dto import BpeModel
from morphseg.domain.bpe.mappers.bpe_model_mapper import map_lines_to_model, map_model_to_lines
from morphseg.infra.files.corpus_repository import CorpusRepository

logger = logging.getLogger(__name__)


class BpeModelRepository:
    def __init__(self, corpus_repository: CorpusRepository = None):
        self.files = corpus_repository or CorpusRepository()

    def save(self, model: BpeModel, path: str) -> None:
        lines = map_model_to_lines(model)
        self.files.write_lines(path, lines)
        logger.info("wrote %d merges to %s", len(model), path)

    def load(self, path: str) -> BpeModel:
        """Load a model file; format errors carry the offending line number"""
        model = map_lines_to_model(self.files.iter_lines(path))
        logger.info("loaded %d merges from %s", len(model), path)
        return model
