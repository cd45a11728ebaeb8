from contextlib import contextmanager
from typing import IO, Iterable, Iterator
import click

STREAM = "-"


class CorpusRepository:
    """Line-oriented UTF-8 corpus access; "-" stands for the standard streams"""

    def __init__(self, encoding: str = "utf-8"):
        self.encoding = encoding

    def iter_lines(self, path: str) -> Iterator[str]:
        """Lines without their terminator, read lazily"""
        with click.open_file(path, "r", encoding=self.encoding) as handle:
            for line in handle:
                yield line.rstrip("\n").rstrip("\r")

    def read_lines(self, path: str) -> list:
        return list(self.iter_lines(path))

    @contextmanager
    def writer(self, path: str) -> Iterator[IO[str]]:
        with click.open_file(path, "w", encoding=self.encoding, atomic=path != STREAM) as handle:
            yield handle
            handle.flush()

    def write_lines(self, path: str, lines: Iterable[str]) -> int:
        count = 0
        with self.writer(path) as handle:
            for line in lines:
                handle.write(line + "\n")
                count += 1
        return count
