"""Aufruf als ``python -m biopepad``."""

from .cli.main import run

if __name__ == "__main__":
    run()
