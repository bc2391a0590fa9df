import sys

from tqdm import tqdm

# stdout carries JSON only, so every human-readable line goes to stderr.
_QUIET = False


def set_quiet(quiet: bool) -> None:
    global _QUIET
    _QUIET = bool(quiet)


def say(*parts) -> None:
    if _QUIET:
        return
    print(*parts, file=sys.stderr)


def progress(iterable, desc=None, total=None):
    # tqdm bar on stderr, silent when quiet
    return tqdm(iterable, desc=desc, total=total, file=sys.stderr, disable=_QUIET)
