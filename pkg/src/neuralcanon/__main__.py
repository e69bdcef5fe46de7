"""Entry point for running neuralcanon as a module."""

from .cli.commands import cli

if __name__ == '__main__':
    cli()
