from morphseg.cli.commands import cli

__all__ = ["cli"]
